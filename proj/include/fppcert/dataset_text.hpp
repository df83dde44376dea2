#pragma once
// Literal data in the relaxed expression notation of expr.hpp. Entries of the
// form "@g3 k" / "@g3^2 k" denote the image of base cubic k under g3 / g3^2.
#include <array>

namespace fpp::text {

extern const std::array<const char*, 36> kBaseCubics;
// eq10 exactly as printed, before the coefficient correction.
extern const char* const kEq10AsPrinted;
extern const std::array<const char*, 6> kCurveQuadrics;

extern const char* const kSextic;
extern const char* const kConic;
extern const std::array<const char*, 2> kCones;
extern const char* const kCurveF2Conic;
extern const char* const kCurveA1pConic;
extern const std::array<const char*, 4> kCurveS1p;
extern const std::array<const char*, 4> kCurveS1pp;
extern const std::array<const char*, 4> kPointS1;
extern const std::array<const char*, 4> kPointA1;
extern const std::array<const char*, 4> kPointC1;
extern const std::array<const char*, 4> kPointB1p;

// Rational functions of (Y0, Y2, Y3) and z, using symbols i, s7 and w.
extern const char* const kRhoY2;
extern const char* const kRhoY3;
extern const char* const kRhoInvY2;
extern const char* const kRhoInvY3;
extern const char* const kZ7;
extern const char* const kZTransport;
extern const char* const kEmbedA;
extern const char* const kEmbedB;

}  // namespace fpp::text
