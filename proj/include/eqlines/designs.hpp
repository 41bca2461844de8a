#pragma once

// Spherical two-distance sets and designs derived from SRGs: eigenspace
// projections, the shifted lift to one dimension higher, and the tight
// 4-/5-design parameter families.

#include "eqlines/bounds.hpp"
#include "eqlines/frames.hpp"
#include "eqlines/srg.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eqlines {

enum class Eigenspace { R, S };

inline std::string_view to_string(Eigenspace e) { return e == Eigenspace::R ? "r" : "s"; }

inline Eigenspace parse_eigenspace(std::string_view s)
{
    if (s == "r" || s == "R")
        return Eigenspace::R;
    if (s == "s" || s == "S")
        return Eigenspace::S;
    throw DomainError("eigenspace must be r or s, got '" + std::string(s) + "'");
}

struct TwoDistanceSpec {
    std::int64_t dimension = 0;
    std::int64_t size = 0;
    QuadraticSurd inner_a; // larger inner product
    QuadraticSurd inner_b;
    int design_strength = 0; // 0 when unknown
    bool tight_frame = false;

    bool equiangular() const { return inner_a == -inner_b; }
};

inline TwoDistanceSpec make_two_distance(std::int64_t dimension, std::int64_t size, QuadraticSurd a, QuadraticSurd b,
                                         int design_strength, bool tight_frame)
{
    if (a < b)
        std::swap(a, b);
    if (b < QuadraticSurd(-1) || !(a < QuadraticSurd(1)) || a == b)
        throw DomainError("two-distance inner products must satisfy -1 <= b < a < 1");
    return {dimension, size, std::move(a), std::move(b), design_strength, tight_frame};
}

/// Inner products of the normalized projection onto the eigenspace of theta,
/// read off the unit-diagonal rescaling of A - theta' I - ((k - theta')/v) J.
struct ProjectionInnerProducts {
    QuadraticSurd adjacent;
    QuadraticSurd non_adjacent;
};

inline ProjectionInnerProducts projection_inner_products(const SrgParams& p, const QuadraticSurd& other)
{
    const QuadraticSurd v(p.v), k(p.k), one(1);
    return {(v - k + other) / (other * (one - v) - k), (k - other) / (other * (v - one) + k)};
}

/// Projection of the vertex set onto a nontrivial eigenspace, rescaled to the sphere.
inline TwoDistanceSpec project_srg(const SrgParams& p, Eigenspace which)
{
    SrgSpectrum sp = spectrum(p);
    if (!sp.f_int() || !sp.g_int())
        throw DomainError(p.str() + ": eigenvalue multiplicities are not integral");
    const QuadraticSurd& other = which == Eigenspace::R ? sp.s : sp.r;
    std::int64_t dim = which == Eigenspace::R ? *sp.f_int() : *sp.g_int();
    ProjectionInnerProducts ip = projection_inner_products(p, other);
    return make_two_distance(dim, p.v, ip.adjacent, ip.non_adjacent, 2, true);
}

struct ShiftedLift {
    TwoDistanceSpec lifted;
    QuadraticSurd scale_sq;  // s^2
    QuadraticSurd height_sq; // h^2
};

/// Appends a constant coordinate h to s*x so that s^2 a + h^2 = -(s^2 b + h^2)
/// and s^2 + h^2 = 1. The result is equiangular with angle (a-b)/(2-(a+b));
/// it is a tight frame exactly when s^2/d = h^2.
inline ShiftedLift shifted_lift(const TwoDistanceSpec& t)
{
    if (t.design_strength < 2)
        throw DomainError("shifted_lift needs a spherical 2-design");
    const QuadraticSurd two(2);
    QuadraticSurd sum = t.inner_a + t.inner_b;
    if (!(sum < two))
        throw DomainError("shifted_lift needs a + b < 2");
    QuadraticSurd denom = two - sum;
    QuadraticSurd h2 = -sum / denom;
    if (h2.sign() < 0)
        throw DomainError("shifted_lift: negative height^2 " + h2.str() + " (a + b > 0)");
    QuadraticSurd s2 = two / denom;
    QuadraticSurd angle = (t.inner_a - t.inner_b) / denom;
    bool tight = s2 / QuadraticSurd(t.dimension) == h2;
    ShiftedLift out{make_two_distance(t.dimension + 1, t.size, angle, -angle, h2.sign() == 0 ? t.design_strength : 0,
                                      tight),
                    s2, h2};
    return out;
}

struct Tight5Params {
    std::int64_t n = 0;
    std::int64_t size = 0; // number of lines, half the design size
    Rational angle;
};

/// Tight 5-design in R^n, n = (2m+1)^2 - 2, seen as ETF(n, n(n+1)/2, 1/(2m+1)).
inline Tight5Params tight5_params(std::int64_t m)
{
    if (m < 1)
        throw DomainError("tight5_params: m must be >= 1");
    std::int64_t q = 2 * m + 1;
    std::int64_t n = q * q - 2;
    return {n, n * (n + 1) / 2, make_rational(1, q)};
}

/// Zeros of C2(x) = 1 + (n+2)(n x^2 - 1)/2, i.e. +-1/sqrt(n+2).
inline std::array<QuadraticSurd, 2> c2_zeros(std::int64_t n)
{
    if (n < 1)
        throw DomainError("c2_zeros: n must be >= 1");
    QuadraticSurd z = sqrt_of_rational(make_rational(1, n + 2));
    return {z, -z};
}

struct Tight4Params {
    std::int64_t n = 0;
    std::int64_t size = 0;
    Rational inner_a;
    Rational inner_b;
};

/// Tight 4-design in R^n, n = (2m+1)^2 - 3, inner products (-1 +- sqrt(n+3))/(n+2).
inline Tight4Params tight4_params(std::int64_t m)
{
    if (m < 1)
        throw DomainError("tight4_params: m must be >= 1");
    std::int64_t q = 2 * m + 1;
    std::int64_t n = q * q - 3;
    auto size = static_cast<std::int64_t>(dgs_design_bound(n, 4));
    return {n, size, make_rational(q - 1, n + 2), make_rational(-1 - q, n + 2)};
}

/// Values of m for which tight 5-designs are known not to exist
/// (Bannai-Munemasa-Venkov; Nebe-Venkov). Only the published prefix.
inline constexpr std::array<std::int64_t, 11> kTight5Excluded = {3, 4, 6, 10, 12, 22, 30, 34, 38, 42, 46};

inline bool tight5_known_excluded(std::int64_t m)
{
    return std::find(kTight5Excluded.begin(), kTight5Excluded.end(), m) != kTight5Excluded.end();
}

struct Tight5Family {
    Tight5Params params;
    WaldronPair waldron;
    std::vector<SrgParams> members; // complement-closed, sorted
};

/// Every SRG tied to ETF(n, n(n+1)/2): both Waldron orientations on n(n+1)/2 - 1
/// vertices plus all their ascents on n(n+1)/2 vertices.
inline Tight5Family tight5_srg_family(std::int64_t m)
{
    Tight5Params tp = tight5_params(m);
    auto res = waldron_srg_of_etf(EtfSpec(tp.n, tp.size));
    if (!std::holds_alternative<WaldronPair>(res))
        throw DomainError("tight5_srg_family: Waldron degree is not integral");
    Tight5Family fam{tp, std::get<WaldronPair>(res), {}};
    fam.members = {fam.waldron.primary, fam.waldron.complementary};
    for (const SrgParams& base : {fam.waldron.primary, fam.waldron.complementary})
        for (const SrgParams& src : fjg_ascend(base))
            fam.members.push_back(src);
    std::sort(fam.members.begin(), fam.members.end());
    fam.members.erase(std::unique(fam.members.begin(), fam.members.end()), fam.members.end());
    return fam;
}

} // namespace eqlines
