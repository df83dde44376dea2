#include "fppcert/dataset.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <sstream>

#include "fppcert/dataset_text.hpp"
#include "fppcert/expr.hpp"

namespace fpp {

const VarsPtr& u_vars() {
    static const VarsPtr v = indexed_vars("U", 10);
    return v;
}

const VarsPtr& y_vars() {
    static const VarsPtr v = indexed_vars("y", 4);
    return v;
}

std::array<int, 10> GroupActionSpec::permutation(int power) const {
    std::array<int, 10> base = g3_perm;
    if (inverse_convention)
        for (int i = 0; i < 10; ++i) base[g3_perm[i]] = i;
    std::array<int, 10> acc;
    for (int i = 0; i < 10; ++i) acc[i] = i;
    for (int k = 0; k < power; ++k)
        for (int i = 0; i < 10; ++i) acc[i] = base[acc[i]];
    return acc;
}

const GroupActionSpec& default_action() {
    static const GroupActionSpec a;
    return a;
}

int g7_weight(const Monomial& m, const GroupActionSpec& A) {
    int s = 0;
    for (int i = 0; i < 10; ++i) s += m.e[i] * A.g7_weights[i];
    return s % 7;
}

int g7_weight_of(const QPoly& f, const GroupActionSpec& A) {
    if (f.is_zero()) return 0;
    int w = g7_weight(f.lm(), A);
    for (auto& t : f.terms())
        if (g7_weight(t.m, A) != w) return -1;
    return w;
}

const std::vector<QPoly>& base_equations() {
    static const std::vector<QPoly> eqs = [] {
        std::vector<QPoly> out;
        for (int k = 0; k < 36; ++k) {
            std::string s = text::kBaseCubics[k];
            if (s.rfind("@g3", 0) == 0) {
                // "@g3 n" or "@g3^2 n": orbit image of an earlier printed cubic.
                int power = s.rfind("@g3^2", 0) == 0 ? 2 : 1;
                int src = std::stoi(s.substr(s.find(' ') + 1));
                out.push_back(apply_g3(out.at(src - 1), power));
            } else {
                out.push_back(parse_qpoly(s, u_vars()));
            }
        }
        return out;
    }();
    return eqs;
}

std::vector<QPoly> expand_equations(const std::vector<QPoly>& base, const GroupActionSpec& A) {
    std::vector<QPoly> out = base;
    for (int power = 1; power <= 2; ++power)
        for (int k = 12; k < 36; ++k) out.push_back(apply_g3(base[k], power, A));
    return out;
}

const std::vector<QPoly>& fpp_equations() {
    static const std::vector<QPoly> eqs = expand_equations(base_equations());
    return eqs;
}

std::vector<QPoly> fpp_equations_as_printed() {
    std::vector<QPoly> base = base_equations();
    base[9] = parse_qpoly(text::kEq10AsPrinted, u_vars());
    base[10] = apply_g3(base[9], 1);
    base[11] = apply_g3(base[9], 2);
    return expand_equations(base);
}

const std::vector<QPoly>& curve_c_quadrics() {
    static const std::vector<QPoly> q = [] {
        std::vector<QPoly> out;
        for (auto* s : text::kCurveQuadrics) out.push_back(parse_qpoly(s, u_vars()));
        return out;
    }();
    return q;
}

std::vector<QPoly> curve_c_generators() {
    std::vector<QPoly> out{QPoly::variable(QDomain{}, u_vars(), 0)};
    for (int power = 0; power <= 2; ++power)
        for (auto& q : curve_c_quadrics()) out.push_back(apply_g3(q, power));
    return out;
}

std::array<MinorSelection, 3> minor_selections() {
    return {{
        {{8, 19, 29, 43, 55, 61, 79}, {0, 1, 2, 3, 5, 6, 7}, 0},
        {{7, 19, 31, 37, 55, 67, 77}, {0, 1, 2, 3, 4, 5, 9}, 1},
        {{9, 13, 31, 43, 53, 67, 79}, {0, 1, 2, 3, 4, 8, 9}, 2},
    }};
}

std::array<std::array<int, 10>, 3> fixed_points() {
    std::array<std::array<int, 10>, 3> pts{};
    pts[0][9] = 1;
    pts[1][8] = 1;
    pts[2][7] = 1;
    return pts;
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::string hex;
    char buf[3];
    for (unsigned i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        hex += buf;
    }
    return hex;
}

Serialized canonical_serialize(const std::vector<QPoly>& polys) {
    Serialized s;
    for (auto& f : polys) s.text += f.to_string() + "\n";
    s.sha256 = sha256_hex(s.text);
    return s;
}

std::vector<QPoly> parse_canonical(const std::string& text, const VarsPtr& vars) {
    std::vector<QPoly> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(parse_qpoly(line, vars));
    }
    return out;
}

std::vector<QPoly> conjugate_all(const std::vector<QPoly>& polys) {
    std::vector<QPoly> out;
    for (auto& f : polys) out.push_back(conjugate_poly(f));
    return out;
}

}  // namespace fpp
