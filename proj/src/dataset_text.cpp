// Transcribed data; relaxed expression notation (see expr.hpp).
#include "fppcert/dataset_text.hpp"

namespace fpp::text {

const std::array<const char*, 36> kBaseCubics = {
    // eq1
        "U1 U2 U3 + (1 - w) (U3^2 U4 + U1^2 U5 + U2^2 U6) + (10 - 2 w) U4 U5 U6 ",
    // eq2
        "(-3 + w) U0^3 + (7 + w)(-2U1 U2 U3 + U7 U8 U9-8U4 U5 U6) + 8 U0( U1 U4 + U2 U5 + U3 U6) + (6 + 2 w) "
        "U0( U1 U7 + U2 U8 + U3 U9) ",
    // eq3
        "(11 - w) U0^3 + 128 U4 U5 U6- (18 + 10 w) U7 U8 U9 + 64( U2 U4^2 + U3 U5^2 + U1 U6^2) + (-14 - 6 w) "
        "U0 (U1 U7+U2 U8+U3 U9) + 8(1 + w) (U1^2 U8+ U2^2 U9+U3^2 U7-2 U1 U2 U3 ) ",
    // eq4
        "- (1 + w) U0 U3 (4 U6 + U9) +8 (U1 U2 U3 +U1 U6 U9+U5 U7 U9)+16(U5 U6 U7 - U1^2 U5 - U3 U5^2) ",
    // eq5
        "@g3 4",
    // eq6
        "@g3^2 4",
    // eq7
        "(12 + 4 w) U1 U2 U3 + (4 + 4 w)(U3 U5 U8- U0 U2 U5 + 4 U4 U5 U6) + (3 - w) U0 U1 U7 + 8 (U2 U4 U7 + "
        "U6 U7 U8 - U1^2 U8 -2U4 U6 U8 )+ (2 + 2 w)( U3 U8^2- U0 U2 U8) ",
    // eq8
        "@g3 7",
    // eq9
        "@g3^2 7",
    // eq10, with the U5 U7 U9 coefficient corrected from 4 to 2 inside the bracket
        "(2 + 6 w ) U1 U2 U3 + 4(-5 + w) U5(U1^2 +2U4 U6) -8 U0 (U2 U5+U3U6) + 8(-1 + w) U3 U5^2 + 2 (3 - w ) "
        "U0 U1 U7 -8 U1^2 U8 + (-1 - w) U8(U0 U2 + 4 U4 U9)+ 8(1 + w) U3 U5 U8 - 32 U4 U6 U8 + 2(1 - w) (2U6 "
        "U7 U8+ 2U5 U7 U9 + 4 U5 U6 U7+ U7 U8 U9 )+ 2(3 + w ) U3 U8^2 - 16 U4 U5 U9 +4 U1 U9^2 ",
    // eq11
        "@g3 10",
    // eq12
        "@g3^2 10",
    // eq13
        "-8 w U1^2 U3+ (-7+5 w) U0 U2 U3+4(-7+w) U0 U6^2+4U0^2 U7+(8-8 w) U1 U4 U7 +4(-5-w) U2 U5 U7+(8+8 w) "
        "U3 U6 U7+ (-1-5 w) U1 U7^2-8 U2 U7 U8+ (6+6 w) U3 U7 U9 ",
    // eq14
        "8U1^2 U3+2 (3-w) U0 U1 U5+16 U3 U4 U6-16 U5^2 U6+2(1+w) U2 U5 U7-8U3 U6 U7 +2 (-1-w) U3^2 U8+2 "
        "(-1+w) U0 U6 U9+(-5-w) U3 U7 U9 ",
    // eq15
        "2 (-3-w) U1^2 U3+2(3-w) U0 U2 U3+4(-1+w) U0 U1 U5+4(-1-w) U3^2 U5 +8 U1 U2 U6+4(1+w) U0 U6^2-4U0^2 "
        "U7+(1+w) U1 U7^2+2 (-1+w) U0 U1 U8+4U3 U7 U9 ",
    // eq16
        "(-3+w) U2^3+(-3+w) U1^2 U3+4 U0 U2 U3+(-2-2 w) U0^2 U4+8 U1 U4^2+8 U0 U1 U5 +(-5-w) U1 U2 U6+(4+4 w) "
        "U3 U4 U6+2 U0 U1 U8+(3-w) U2 U7 U8+(2+2 w) U3 U4 U9 ",
    // eq17
        "4(-1-w) U2^3+ (5+w) U0 U2 U3+4(3-w) U3^2 U5+16(1- w) U2 U4 U5 +4(-1-w) U2 U5 U7-8 U1 U2 U9+4(1+w) U3 "
        "U4 U9-32 U5^2 U9-16 U5 U8 U9 ",
    // eq18
        "8U1^2 U3+ (-5-w) U0 U2 U3+4 (1+w) U3^2 U5+4 (1+w) U1 U2 U6 +16(-1+ w) U5^2 U6+8U2 U5 U7-16 U3 U6 "
        "U7+8(-1+w) U5 U6 U8-8U3 U7 U9 ",
    // eq19
        "(-5-w) U0^2 U4-8U2 U5 U7+(-1-w) U1 U7^2+4 U0 U1 U8-4 U2 U7 U8+(-5+w)U1 U2 U9 +2(1-w) U3 U4 U9+2(1-w) "
        "U0 U6 U9+4 U3 U7 U9+2U8^2 U9+2U0 U9^2 ",
    // eq20
        "4(1+w) U1^2 U3+2 (1-w) U0 U2 U3-8 U0^2 U4+4(-3-w) U1 U4^2-8 w U0 U1 U5 +8(1- w) U2 U4 U5+ (5-w) U0 "
        "U1 U8+2 (-5+w) U3^2 U8+16 U5 U8 U9+8 U8^2 U9 ",
    // eq21
        "(1-w) U1^2 U3-4 U0 U1 U5-8 U3 U4 U6-8 U0 U6^2+4 U1 U4 U7+(2-2 w) U2 U5 U7 +2 U1 U7^2-2 U0 U1 "
        "U8+(1+w) U3^2 U8+(1-w) U2 U7 U8+(-1+w) U3 U7 U9 ",
    // eq22
        "-8 U1^2 U3+16 U2 U4 U5-8 U1 U2 U6+4(1+w) U0 U6^2+ (1+w) U0 U1 U8 +8 U2 U4 U8-8 U5 U6 U8+4U1 U2 U9-8 "
        "U3 U4 U9+2(1+w) U0 U6 U9 ",
    // eq23
        "(-3+w) ( U2^3+ U1^2 U3)+4(-1-w) U1 U4^2+(-1+3 w) U1 U2 U6 +2 (-1-w) U1 U4 U7 + (1+w) U3^2 U8+8 U2 U4 "
        "U8+4(-1+w) U5 U6 U8+4U2 U7 U8+4U1 U2 U9 ",
    // eq24
        "2U0 U2 U3+ (-1-w) U0^2 U4+2(1-w) U0 U1 U5+2(1-w) U1 U2 U6+2U0 U1 U8 -4 U3^2 U8-4 U2 U4 U8+2(1-w) U5 "
        "U6 U8+4 U5 U8 U9+2U8^2 U9 ",
    // eq25
        "(-1+3 w) U0^2 U1+(44-4 w) U2^2 U3+64 U3 U4 U5+(36-12 w) U1 U3 U6+(16+16 w) U4^2 U6 +(-4-4 w) U0 U2 "
        "U7-32 U3 U4 U8+(4+4 w) U0 U6 U8-16 U3 U7 U8+(8-8 w) U1 U3 U9+16 U4 U7 U9 ",
    // eq26
        "(-1+3 w) U0^2 U1+(-4-4 w) U2^2 U3+(40-8 w) U1 U2 U5+(4-12 w) U1 U3 U6+96 U4^2 U6 +(-24-8 w) U2 "
        "U6^2+16 U1^2 U7+(-2+2 w) U0 U2 U7+64 U4 U6 U7+(20-4 w) U1 U2 U8-8 U0 U6 U8 +16 U4 U7 U9 ",
    // eq27
        "(5+w) U0^2 U1+(-4-4 w) U2^2 U3+(16-16 w) U3 U4 U5+(-20-4 w) U1 U3 U6+32 U4^2 U6 +32 U0 U5 U6+8 U0 U6 "
        "U8-16 U1 U3 U9+16 U0 U5 U9+8 U0 U8 U9 ",
    // eq28
        "8 U2^2 U3+(-3+w) U0 U3^2+(-4-4 w) U1 U2 U5+(4+4 w) U3 U4 U5+32 U5^3+(4+4 w) U3 U5 U7 +16 U5^2 "
        "U8+(3-w) U1 U3 U9+8 U2 U6 U9 ",
    // eq29
        "(-3+w) U2^2 U3+(5+w) U0 U2 U4+8 U1 U2 U5-8 U2 U6^2+2 U0 U2 U7+(-1-w) U1 U2 U8+8 U5^2 U8 +(3-w) U1 U3 "
        "U9+(4+4 w) U4^2 U9-8 U2 U6 U9+(2+2 w) U4 U7 U9-2 U0 U8 U9+(-3+w) U2 U9^2 ",
    // eq30
        "8 U2^2 U3+(4-4 w) U1^2 U4+(-12-4 w) U1 U2 U5+(-4-12 w) U4^2 U6+(12+4 w) U2 U6^2 +(2-2 w) U1^2 U7-8 "
        "U1 U2 U8-16 U3 U4 U8+(1+3 w) U0 U6 U8+(-3-w) U3 U7 U8+4 U1 U3 U9 +(6+2 w) U2 U6 U9 ",
    // eq31
        "(-4+4 w) U1^2 U4-4 U1 U2 U5+(-4+4 w) U3 U4 U5+16 U5^3+(-8+8 w) U4^2 U6+(2+2 w) U0 U5 U6 -4 U1^2 "
        "U7+(2+2 w) U6 U7^2+8 U3 U4 U8-4 U0 U6 U8-4 U5 U8^2+(1+w) U7^2 U9 ",
    // eq32
        "(-5-w) U0^2 U1+(-6+2 w) U0 U3^2+(-24+8 w) U3 U4 U5+(20+4 w) U1 U3 U6-32 U4^2 U6 -32 U0 U5 U6+32 U2 "
        "U6^2+(2+2 w) U0 U2 U7+(4+4 w) U1 U2 U8-8 U0 U6 U8+(10+2 w) U1 U3 U9 +16 U2 U6 U9 ",
    // eq33
        "(7-5 w) U0^2 U1+(-56-24 w) U1^2 U4+32 w U1 U2 U5+(28+4 w) U1 U3 U6+(28+28 w) U0 U5 U6 +(-84-4 w) "
        "U1^2 U7+(7+7 w) U0 U2 U7-56 U3 U5 U7+56 U6 U7^2+24 w U1 U2 U8+56 U0 U6 U8 +(14-18 w) U1 U3 U9+28 "
        "U7^2 U9 ",
    // eq34
        "(-5-w) U0^2 U1+48 U1 U2 U5+(-16-16 w) U3 U4 U5+32 U4^2 U6+(2+10 w) U1^2 U7 +(-48+16 w) U4 U6 U7 "
        "+(28-4 w) U1 U2 U8+(-12-12 w) U3 U4 U8+(-16-8 w) U0 U6 U8 +(-22+2 w) U1 U3 U9 +(-8-8 w) U2 U6 "
        "U9+(-8+8 w) U4 U7 U9 ",
    // eq35
        "(10+2 w) U2^2 U3+(-11+w) U0 U2 U4-16 U1 U2 U5+(20+4 w) U3 U4 U5-16 U2 U6^2 +(-1-w) U0 U2 U7 +(-2-2 "
        "w) U1 U2 U8-16 U5^2 U8+(-4-4 w) U4^2 U9+(3-w) U2 U9^2 ",
    // eq36
        "(2+2 w) U0 U3^2+(-6+2 w) U0 U2 U4+(4-4 w) U1 U3 U6+32 U4^2 U6+(-12-4 w) U2 U6^2+2 U0 U2 U7 +16 U4 U6 "
        "U7+(7-w) U1 U2 U8-8 U5^2 U8+4 U1 U3 U9+(4-4 w) U0 U5 U9+4 U4 U7 U9-2 w U0 U8 U9 ",
};

const char* const kRhoY2 =
        "((3 + w))/(8) Y0^(-1) ((-21 i + 31 s7) Y2^2 + (-35 i + 9 s7) Y3^2)^(-1) (7 (9 i + 5 s7) Y0^4 Y3 + 2 "
        "Y0^2 (4 (21 i + s7) Y2^2 - (7 i + 11 s7) Y3) + Y3 (-49 i - 13 s7 - (49 i + 13 s7) Y2^2 + 8 (-7 i + 5 "
        "s7) Y3 + (49 i + 13 s7) Y3^2) - Y0 ((-21 i + 31 s7) Y2^3 + Y2 Y3 (112 i + 48 s7 + 21 i Y3 - 31 s7 "
        "Y3)) ) ";

const char* const kRhoY3 =
        "( (-3 i + s7))/(8) Y0^(-1) ((-21 i + 31 s7) Y2^2 + (-35 i + 9 s7) Y3^2)^(-1) ((-21 - 31 w) Y2^3 + Y0 "
        "Y2^2 (-168 + 8 w + 49 Y3 - 13 w Y3) + Y0 Y3^2 (56 + 40 w - 49 Y3 + 13 w Y3) + Y2 (-21 - 31 w + 7 (13 "
        "+ 7 w) Y0^4 + 8 (21 - w) Y3 + (21 + 31 w) Y3^2 + Y0^2 (-70 - 18 w + (-56 - 40 w) Y3)) ) ";

const char* const kRhoInvY2 =
        "(-20 - 4 w - 4 i (-9 i + s7) Y0^5 Y2 + (34 - 30 w )Y3 + (134 + 14 w )Y3^2 - (15 - 43 w) Y3^3 - 48 "
        "Y3^4 - (1+ 3 w ) Y3^5 + 4 i Y0^6 (5 i - s7 + 2 s7 Y3) + Y2^4 (-20 - 4 w + (-1 - 3 w) Y3) + 2 Y0^3 Y2 "
        "(36 + 4 w + (3 + 5 w) Y2^2 + (-5 + 15 w) Y3 + (-16 +2w) Y3^2) + Y2^2 (-40 - 8 w + 33 (1 - w) Y3 + "
        "(68 + 4 w) Y3^2 + (2 + 6 w) Y3^3) + 2 Y0^2 (10 + 2 w + 8 Y2^4 + (-26 + 10 w) Y3 + (-29 - 9 w) Y3^2 + "
        "(8 - 4 w) Y3^3 - Y2^2 Y3 (17 + w + 8 Y3)) + Y0^4 (20 + 4 w + 2 (9 + w) Y3 + 4 (3 - w) Y3^2 + (7 + 5 "
        "w) Y3^3 + Y2^2 (-48 + 16 w - (7+ 5 w) Y3)) + Y0 Y2 (-36 - 4 w + (5 - w) Y2^4 + 10 (1 - 3 w) Y3 + 52 "
        "Y3^2 + (5 - w) Y3^4 + 2 i Y2^2 (13 i - 7 s7 + (5 i + s7) Y3^2)) )/ (2 Y0 (-3 i - s7 + (3 i + s7) "
        "Y0^2 - 2 i Y2^2 + (- 5 i + s7 )Y3 + (i + s7 )Y3^2 - Y2 (-5 i + s7 + (-i + s7) Y3)) (-3 i - s7 + (3 i "
        "+ s7) Y0^2 - 2 i Y2^2 - (5 i - s7 )Y3 + (i + s7) Y3^2 + Y2 (-5 i + s7 + (-i + s7) Y3)) ) ";

const char* const kRhoInvY3 =
        "(8 w Y0^6 Y2 + Y0^5 (-40 - 8 w + (26 + 2 w) Y3) + 2 Y0^3 (40 + 8 w + 2 (-17 + 11 w + (1 - 2 w) Y2^2) "
        "Y3 + (-39 - 11 w) Y3^2 + (11 - 3 w) Y3^3) + 2 Y0^2 Y2 (-4 w+ (33 - 3 w) Y3 + (25 + 9 w) Y3^2 + 4 i "
        "(i + s7) Y3^3 + 4 Y2^2 (-4 - w + (1- w) Y3)) + Y2 (8 w + (5 - w) Y2^4 + 2 i (27 i + s7) Y3 + (-23 - "
        "17 w) Y3^2 + (8 - 8 w) Y3^3 + (5 - w) Y3^4 + Y2^2 (5 + 7 w + 8 i (i + s7) Y3 + 2 i (5 i + s7) Y3^2)) "
        "+ Y0^4 ((7 - 3 w) Y2^3 + i Y2 (-8 s7 + 4 (3 i + s7) Y3 + (7 i + 3 s7) Y3^2)) + Y0 (-40 - 8 w + (42 - "
        "46 w) Y3 + 2 (83 + 7 w) Y3^2 + (-14 + 46 w) Y3^3 - 48 Y3^4 + (-1 - 3 w) Y3^5 + Y2^4 (-4 - 4 w + (-1 "
        "- 3 w) Y3) + 2 Y2^2 (-44 + 4 w + (-6 - 16 w) Y3 + (26 + 2 w) Y3^2 + (1 + 3 w) Y3^3)) )/ (2 Y0 (-3 i "
        "- s7+ (3 i + s7) Y0^2 - 2 i Y2^2 - (5 i - s7 )Y3 + (i + s7) Y3^2 - Y2 (-5 i + s7 + (-i + s7) Y3)) "
        "(-3 i - s7 + (3 i + s7) Y0^2 - 2 i Y2^2 - (5 i - s7 )Y3 + (i + s7 )Y3^2 + Y2 (-5 i + s7 + (-i + s7) "
        "Y3)) ) ";

const char* const kZ7 =
        "((-315i + 47s7)^2 (-1 + Y0^2)^5 (2795 i + 287 s7 - 5590 i Y0 - 574 s7 Y0 + 11573 i Y0^2 + 2689 s7 "
        "Y0^2 - 17556 i Y0^3 - 4804 s7 Y0^3 + 14357 i Y0^4 + 5601 s7 Y0^4 - 11158 i Y0^5 - 6398 s7 Y0^5 + "
        "5579 i Y0^6 + 3199 s7 Y0^6 + 5590 i Y2^2 + 574 s7 Y2^2 - 5590 i Y0 Y2^2 - 574 s7 Y0 Y2^2 + 5994 i "
        "Y0^2 Y2^2 - 510 s7 Y0^2 Y2^2 + 5590 i Y0^3 Y2^2 + 574 s7 Y0^3 Y2^2 + 2795 i Y2^4 + 287 s7 Y2^4 + "
        "1616 i Y3 - 4336 s7 Y3 + 5568 i Y0 Y3 + 5824 s7 Y0 Y3 + 3232 i Y0^2 Y3 - 8672 s7 Y0^2 Y3 - 448 i "
        "Y0^3 Y3 + 11584 s7 Y0^3 Y3 - 9968 i Y0^4 Y3 - 4400 s7 Y0^4 Y3 + 11584 i Y0^2 Y2 Y3 + 64 s7 Y0^2 Y2 "
        "Y3 - 17600 i Y0^3 Y2 Y3 + 5696 s7 Y0^3 Y2 Y3 + 1616 i Y2^2 Y3 - 4336 s7 Y2^2 Y3 + 7184 i Y0 Y2^2 Y3 "
        "+ 1488 s7 Y0 Y2^2 Y3 - 17174 i Y3^2 - 638 s7 Y3^2 + 11606 i Y0 Y3^2 - 5186 s7 Y0 Y3^2 - 5994 i Y0^2 "
        "Y3^2 + 510 s7 Y0^2 Y3^2 + 5994 i Y0^3 Y3^2 - 510 s7 Y0^3 Y3^2 - 5590 i Y2^2 Y3^2 - 574 s7 Y2^2 Y3^2 "
        "- 1616 i Y3^3 + 4336 s7 Y3^3 - 7184 i Y0 Y3^3 - 1488 s7 Y0 Y3^3 + 2795 i Y3^4 + 287 s7 Y3^4) (2795 i "
        "+ 287 s7 + 5590 i Y0 + 574 s7 Y0 + 11573 i Y0^2 + 2689 s7 Y0^2 + 17556 i Y0^3 + 4804 s7 Y0^3 + 14357 "
        "i Y0^4 + 5601 s7 Y0^4 + 11158 i Y0^5 + 6398 s7 Y0^5 + 5579 i Y0^6 + 3199 s7 Y0^6 + 5590 i Y2^2 + 574 "
        "s7 Y2^2 + 5590 i Y0 Y2^2 + 574 s7 Y0 Y2^2 + 5994 i Y0^2 Y2^2 - 510 s7 Y0^2 Y2^2 - 5590 i Y0^3 Y2^2 - "
        "574 s7 Y0^3 Y2^2 + 2795 i Y2^4 + 287 s7 Y2^4 + 1616 i Y3 - 4336 s7 Y3 - 5568 i Y0 Y3 - 5824 s7 Y0 Y3 "
        "+ 3232 i Y0^2 Y3 - 8672 s7 Y0^2 Y3 + 448 i Y0^3 Y3 - 11584 s7 Y0^3 Y3 - 9968 i Y0^4 Y3 - 4400 s7 "
        "Y0^4 Y3 - 11584 i Y0^2 Y2 Y3 - 64 s7 Y0^2 Y2 Y3 - 17600 i Y0^3 Y2 Y3 + 5696 s7 Y0^3 Y2 Y3 + 1616 i "
        "Y2^2 Y3 - 4336 s7 Y2^2 Y3 - 7184 i Y0 Y2^2 Y3 - 1488 s7 Y0 Y2^2 Y3 - 17174 i Y3^2 - 638 s7 Y3^2 - "
        "11606 i Y0 Y3^2 + 5186 s7 Y0 Y3^2 - 5994 i Y0^2 Y3^2 + 510 s7 Y0^2 Y3^2 - 5994 i Y0^3 Y3^2 + 510 s7 "
        "Y0^3 Y3^2 - 5590 i Y2^2 Y3^2 - 574 s7 Y2^2 Y3^2 - 1616 i Y3^3 + 4336 s7 Y3^3 + 7184 i Y0 Y3^3 + 1488 "
        "s7 Y0 Y3^3 + 2795 i Y3^4 + 287 s7 Y3^4) )/ (4096 Y0^4 (-4 i + 4 i Y0 + 4 i Y0^2 - 4 i Y0^3 + 2 i Y2 "
        "- 2 s7 Y2 - 2 i Y0 Y2 + 2 s7 Y0 Y2 + i Y2^2 + s7 Y2^2 - 2 i Y3 + 2 s7 Y3 + 2 i Y0 Y3 - 2 s7 Y0 Y3 - "
        "2 i Y2 Y3 - 2 s7 Y2 Y3 + i Y3^2 + s7 Y3^2)^2 (-4 i - 4 i Y0 + 4 i Y0^2 + 4 i Y0^3 - 2 i Y2 + 2 s7 Y2 "
        "- 2 i Y0 Y2 + 2 s7 Y0 Y2 + i Y2^2 + s7 Y2^2 - 2 i Y3 + 2 s7 Y3 - 2 i Y0 Y3 + 2 s7 Y0 Y3 + 2 i Y2 Y3 "
        "+ 2 s7 Y2 Y3 + i Y3^2 + s7 Y3^2)^2 (-21 i Y2^2 + 31 s7 Y2^2 - 35 i Y3^2 + 9 s7 Y3^2)^2 ) ";

const char* const kZTransport =
        "z^2 (-1 + Y0^2)^(-3) (1 - Y0 - Y0^2 + Y0^3 - (1/2) ( 1+ w) (Y2 - Y3) + (1/2) (1 + w) Y0 (Y2 - Y3) + "
        "(1/4) (-1 +w) (Y2 - Y3)^2) (-1 - Y0 + Y0^2 + Y0^3 - (1/2) (1+ w) (Y2 + Y3) - (1/2) (1 +w) Y0 (Y2 + "
        "Y3) + (1/4)(1 - w) (Y2 + Y3)^2) ";

const char* const kEmbedA =
        "(4 i (-1 + Y0) (1 + Y0) (-266 i Y0 + 34 s7 Y0 + 532 i Y0^3 - 68 s7 Y0^3 - 266 i Y0^5 + 34 s7 Y0^5 - "
        "70 i Y2 + 46 s7 Y2 - 126 i Y0^2 Y2 - 58 s7 Y0^2 Y2 + 196 i Y0^4 Y2 + 12 s7 Y0^4 Y2 - 469 i Y0 Y2^2 + "
        "97 s7 Y0 Y2^2 - 63 i Y0^3 Y2^2 - 29 s7 Y0^3 Y2^2 - 70 i Y2^3 + 46 s7 Y2^3 + 238 i Y0 Y3 + 266 s7 Y0 "
        "Y3 - 238 i Y0^3 Y3 - 266 s7 Y0^3 Y3 + 259 i Y2 Y3 + 41 s7 Y2 Y3 - 259 i Y0^2 Y2 Y3 - 41 s7 Y0^2 Y2 "
        "Y3 + 56 i Y0 Y2^2 Y3 + 104 s7 Y0 Y2^2 Y3 + 728 i Y0 Y3^2 - 56 s7 Y0 Y3^2 - 196 i Y0^3 Y3^2 - 12 s7 "
        "Y0^3 Y3^2 + 70 i Y2 Y3^2 - 46 s7 Y2 Y3^2 - 56 i Y0 Y3^3 - 104 s7 Y0 Y3^3) )/ ((-35 i + 23 s7) Y0 (4 "
        "- 4 Y0 - 4 Y0^2 + 4 Y0^3 - 2 Y2 - 2 w Y2 + (2 + 2 w) Y0 (Y2 - Y3) + 2 Y3 + 2 w Y3 + i (i + s7) (Y2- "
        "Y3)^2) (-4 i - 4 i Y0 + 4 i Y0^2 + 4 i Y0^3 - 2 i Y0 Y2 + 2 s7 Y0 Y2 - 2 i Y0 Y3 + 2 s7 Y0 Y3 + 2 "
        "(-i + s7) (Y2 + Y3) + (i + s7) (Y2 + Y3)^2) z ) ";

const char* const kEmbedB =
        "(16 i (-1 + Y0) (1 + Y0) (-133 i + 17 s7 + 266 i Y0^2 - 34 s7 Y0^2 - 133 i Y0^4 + 17 s7 Y0^4 - 133 i "
        "Y0 Y2 + 17 s7 Y0 Y2 + 133 i Y0^3 Y2 - 17 s7 Y0^3 Y2 - 217 i Y2^2 + 37 s7 Y2^2 - 49 i Y0^2 Y2^2 - 3 "
        "s7 Y0^2 Y2^2 + 119 i Y3 + 133 s7 Y3 - 119 i Y0^2 Y3 - 133 s7 Y0^2 Y3 + 217 i Y3^2 - 37 s7 Y3^2 + 49 "
        "i Y0^2 Y3^2 + 3 s7 Y0^2 Y3^2) )/ ((-35 i + 23 s7) (4 - 4 Y0 - 4 Y0^2 + 4 Y0^3 - 2 Y2 - 2 w Y2 + (2 + "
        "2 w) Y0 (Y2 - Y3) + 2 Y3 + 2 w Y3 + i (i + s7) (Y2 - Y3)^2) (-4 i - 4 i Y0 + 4 i Y0^2 + 4 i Y0^3 - 2 "
        "i Y0 Y2 + 2 s7 Y0 Y2 - 2 i Y0 Y3 + 2 s7 Y0 Y3 + 2 (-i + s7) (Y2 + Y3) + (i + s7) (Y2+ Y3)^2) z ) ";


const char* const kEq10AsPrinted =
    "(2 + 6 w ) U1 U2 U3 + 4(-5 + w) U5(U1^2 +2U4 U6) -8 U0 (U2 U5+U3U6) + 8(-1 + w) U3 U5^2 + 2 (3 - w ) "
    "U0 U1 U7 -8 U1^2 U8 + (-1 - w) U8(U0 U2 + 4 U4 U9)+ 8(1 + w) U3 U5 U8 - 32 U4 U6 U8 + 2(1 - w) (2U6 "
    "U7 U8+ 4U5 U7 U9 + 4 U5 U6 U7+ U7 U8 U9 )+ 2(3 + w ) U3 U8^2 - 16 U4 U5 U9 +4 U1 U9^2 ";

const std::array<const char*, 6> kCurveQuadrics = {
    "U1^2 - U6 U7 + (1/8)(-5 - w) U7 U9",
    "U4 U6 - (1/8)(1 + w) U3 U8",
    "U2 U4 + (1/8)(1 + w) U8 U9",
    "U1 U4 + U3 U6 + (1/8)(5 + w) U3 U9",
    "U1 U2 + U5 U8",
    "U4^2 + (1/8)(1 + w) U2 U9 + (1/8)(5 + w) U4 U7",
};

const char* const kSextic =
    "28 y0^6 - (42 - 2 w) y0^4 y1^2 - 4 w y0^2 y1^4 + 56 y0^2 y1^2 y2^2 - (14 + 22 w) y0^4 y1 y3 "
    "- (7 - 13 w) y0^2 y1^2 y3^2 - (77 + 17 w) y1^4 y3^2 + (21 - 31 w) (y0^3 y1 y2 y3 - y0 y1^3 y2 y3) "
    "- (28 - 20 w) y1^3 y3 (y1^2 + y2^2 - y3^2) + (14 + 2 w) y1^2 (y1^4 + 2 y1^2 y2^2 + (y2^2 - y3^2)^2) "
    "+ (42 + 2 w) (y0^2 y1^3 y3 + y0 y1^2 y2 (-y0^2 + y1^2 + y2^2 - y3^2))";

const char* const kConic = "y1^2 + y2^2 + (1/4)(-1 + 3 w) y1 y3 - y3^2";

const std::array<const char*, 2> kCones = {
    "y0^3 - y0^2 y1 - y0 y1^2 + y1^3 + (1/2)(1 + w)(y0 - y1) y1 (y2 - y3) + (1/4)(-1 + w) y1 (y2 - y3)^2",
    "y0^3 + y0^2 y1 - y0 y1^2 - y1^3 - (1/2)(1 + w)(y0 + y1) y1 (y2 + y3) - (1/4)(-1 + w) y1 (y2 + y3)^2",
};

const char* const kCurveF2Conic = "y1^2 + y2^2 + (1/4)(-1 + 3 w) y1 y3 - y3^2";
const char* const kCurveA1pConic =
    "(1/2)(11 - w) y1^2 + (1/4)(11 - w) y1 y2 + y2^2 + (1/2)(-1 + 3 w) y1 y3 - y3^2";

const std::array<const char*, 4> kCurveS1p = {
    "(1/8)(11 - w) t + (1/8)(-3 + w) t^3",
    "t^3",
    "(1/8)(11 - w) + (1/8)(-1 + 3 w) t - (1/8)(5 + w) t^2 + (1/8)(3 - w) t^3",
    "-(1/16)(9 + 5 w) + (1/16)(11 - w) t + (1/16)(21 + w) t^2 - (1/16)(7 - 5 w) t^3",
};
const std::array<const char*, 4> kCurveS1pp = {
    "(1/8)(11 - w) t + (1/8)(-3 + w) t^3",
    "t^3",
    "(1/16)(-9 - 5 w + (11 - w) t)(-1 + t^2)",
    "(1/8)(11 - w + (-1 + 3 w) t)(-1 + t^2)",
};
const std::array<const char*, 4> kPointS1 = {"0", "0", "-1", "1"};
const std::array<const char*, 4> kPointA1 = {"1", "1", "0", "0"};
const std::array<const char*, 4> kPointC1 = {"1", "1", "-(1/4)(3 + w)", "(1/4)(3 + w)"};
const std::array<const char*, 4> kPointB1p = {"-1", "-1", "(1/2)(1 - w)", "(1/2)(1 - w)"};

}  // namespace fpp::text
