#pragma once
// The sextic double-cover model in P^3, its curves, the order-3 birational
// automorphism and the seventh-root function z.
//
// Polynomial statements are checked exactly over Q(w). Statements about
// rational maps are checked at random points of the surface over GF(p): the
// maps are printed with i and sqrt7 separately, so evaluation happens in
// GF(p)[i] with sqrt7 = -i*r, and images of rational points must come back
// rational.
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fppcert/expr.hpp"
#include "fppcert/polynomial.hpp"
#include "fppcert/report.hpp"

namespace fpp {

struct SexticData {
    VarsPtr vars;  // y0..y3
    QPoly f;
    QPoly h0;  // conic through (0:+-1:1)
    std::array<QPoly, 2> cones;
    QPoly f_cones;
    QPoly a1p_conic;  // in y1, y2, y3 after y0 -> y1
    VarsPtr t_vars;
    std::array<QPoly, 4> s1p, s1pp;  // parametric curves in t
    std::array<std::array<QuadExtScalar, 4>, 4> points;  // S1, A1, C1, B1'
};
// `conjugate` applies w -> -w to every object.
const SexticData& sextic_data(bool conjugate = false);

// sigma(y0, y1, y2, y3) = (y0, -y1, y2, -y3).
QPoly apply_sigma(const QPoly& f);

struct IntegralEquation {
    QPoly a, b;  // u^2 + a u + b = 0 on the surface
    QPoly lhs;   // the equation with denominators cleared; equals f
};
// Monic quadratics for y0^3/y1 and h0*y1/y0. Throws ExtractionFailed.
IntegralEquation integral_equation_y4(const SexticData& d);
IntegralEquation integral_equation_y5(const SexticData& d);

CheckRecord check_sextic_identities(bool conjugate = false);
CheckRecord check_singular_locus(bool conjugate = false);
CheckRecord check_curve_incidence(bool conjugate = false);
CheckRecord check_integral_equations(bool conjugate = false);

// Rational maps of the affine chart (Y0, Y2, Y3) = (y0, y2, y3) / y1.
class SurfaceMaps {
public:
    using Point = std::array<Fp2, 3>;

    explicit SurfaceMaps(const PrimeField& F, bool conjugate = false);
    const Fp2Ring& ring() const { return R_; }
    const PrimeField& field() const { return F_; }

    // F(Y0, Y2, Y3) = f(Y0, 1, Y2, Y3).
    Fp2 chart(const Point& Y) const;
    // The univariate chart polynomial in Y0 for fixed rational Y2, Y3.
    std::vector<u32> chart_in_y0(u32 Y2, u32 Y3) const;
    // The maps below throw DenominatorVanished where undefined.
    Point rho(const Point& Y) const;
    Point rho_inverse(const Point& Y) const;
    Fp2 z7(const Point& Y) const;
    // z'' over rho^{-1}(Y), given z at Y: (z'')^7 = z7(rho^{-1}(Y)).
    Fp2 z_image(const Point& Y, Fp2 z) const;
    // The two embedding functions, evaluated with z at Y.
    Fp2 embed_a(const Point& Y, Fp2 z) const;
    Fp2 embed_b(const Point& Y, Fp2 z) const;
    static Point sigma(const Fp2Ring& R, const Point& Y) { return {R.neg(Y[0]), R.neg(Y[1]), Y[2]}; }

private:
    Fp2 eval(const ExprPtr& e, const Point& Y, Fp2 z) const;

    PrimeField F_;
    Fp2Ring R_;
    FpPoly f_mod_p_;
    ExprPtr rho2_, rho3_, inv2_, inv3_, z7_, zimg_, ea_, eb_;
};

// Exponent e with 7 e = 1 mod (p - 1). Throws SeventhRootUndefined.
u64 seventh_root_exponent(u32 p);

struct SurfacePoint {
    u32 Y0, Y2, Y3;
    u32 z;  // z7(Y)^e
};

struct SampleStats {
    long draws = 0;       // (Y2, Y3) pairs tried
    long rootless = 0;    // chart polynomial without a root in GF(p)
    long excluded = 0;    // a downstream denominator vanished
    long points = 0;
};

struct SamplingParams {
    PrimeField field;
    std::uint64_t seed = 42;
    int samples = 100;
    int threads = 1;
    bool conjugate = false;
    long max_draws_per_point = 50;  // InsufficientPoints beyond samples * this
};

// Points are split into a fixed number of chunks, each with its own seed, so
// the result does not depend on the thread count.
std::vector<SurfacePoint> sample_surface_points(const SamplingParams& P, SampleStats* stats = nullptr);

// JSON lines {"Y0":..,"Y2":..,"Y3":..,"z":..}.
std::string surface_transcript(const std::vector<SurfacePoint>& pts);

CheckRecord check_automorphism_order3(const SamplingParams& P);
CheckRecord check_z_transport(const SamplingParams& P);

// Exploratory: U = (s0, s1 R, s2 R', s3 R'', s4 A, s5 A', s6 A'', s7 B, s8 B', s9 B'')
// where R = (Y2^2 - Y3^2) z / (Y0^2 - 1), A and B are the two embedding
// functions and primes denote transport along the z lift. Counts the
// nonvanishing cubics over the sampled points.
struct EmbeddingProbe {
    long points = 0;
    long skipped = 0;
    long nonvanishing = 0;
};
EmbeddingProbe probe_embedding(const SamplingParams& P, const std::array<u32, 10>& scalings);
CheckRecord check_embedding_samples(const SamplingParams& P, const std::array<u32, 10>& scalings);

}  // namespace fpp
