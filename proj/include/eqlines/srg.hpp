#pragma once

// Strongly regular graph parameter algebra: spectrum, necessary conditions,
// complementation, the Waldron ETF correspondence and the regular two-graph
// descent srg(v,k,l,mu) -> srg(v-1, ...) together with its inverse.

#include "eqlines/exact.hpp"
#include "eqlines/frames.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace eqlines {

struct SrgParams {
    std::int64_t v = 0;
    std::int64_t k = 0;
    std::int64_t lambda = 0;
    std::int64_t mu = 0;

    friend auto operator<=>(const SrgParams&, const SrgParams&) = default;

    std::string str() const
    {
        return "srg(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda) + "," +
               std::to_string(mu) + ")";
    }
};

/// Basic ranges: 0 <= k <= v-1, 0 <= lambda <= k-1, 0 <= mu <= k (lambda = mu = 0 when k = 0).
inline bool in_range(const SrgParams& p)
{
    if (p.v < 1 || p.k < 0 || p.k > p.v - 1 || p.lambda < 0 || p.mu < 0)
        return false;
    if (p.k == 0)
        return p.lambda == 0 && p.mu == 0;
    return p.lambda <= p.k - 1 && p.mu <= p.k;
}

inline bool counting_identity(const SrgParams& p) { return p.k * (p.k - p.lambda - 1) == (p.v - p.k - 1) * p.mu; }

/// Regular two-graph condition v = 4k - 2 lambda - 2 mu.
inline bool regular_two_graph_condition(const SrgParams& p) { return p.v == 4 * p.k - 2 * p.lambda - 2 * p.mu; }

struct SrgSpectrum {
    QuadraticSurd r; // positive nontrivial eigenvalue
    QuadraticSurd s; // negative nontrivial eigenvalue
    QuadraticSurd f; // multiplicity of r
    QuadraticSurd g; // multiplicity of s
    std::int64_t discriminant = 0;

    bool conference() const { return f == g && !r.is_rational(); }

    std::optional<std::int64_t> f_int() const { return f.as_int64(); }
    std::optional<std::int64_t> g_int() const { return g.as_int64(); }
};

inline SrgSpectrum spectrum(const SrgParams& p)
{
    if (!in_range(p))
        throw DomainError(p.str() + ": parameters out of range");
    if (p.mu >= p.k)
        throw DomainError(p.str() + ": complete multipartite (mu >= k), no nontrivial spectrum");
    SrgSpectrum out;
    std::int64_t diff = p.lambda - p.mu;
    out.discriminant = diff * diff + 4 * (p.k - p.mu);
    QuadraticSurd root = sqrt_of_rational(Rational(out.discriminant));
    QuadraticSurd half(make_rational(1, 2));
    out.r = (QuadraticSurd(diff) + root) * half;
    out.s = (QuadraticSurd(diff) - root) * half;
    QuadraticSurd skew = QuadraticSurd(2 * p.k + (p.v - 1) * diff) / root;
    out.f = (QuadraticSurd(p.v - 1) - skew) * half;
    out.g = (QuadraticSurd(p.v - 1) + skew) * half;
    if (out.f.sign() <= 0 || out.g.sign() <= 0)
        throw DomainError(p.str() + ": non-positive eigenvalue multiplicity");
    return out;
}

struct Feasibility {
    bool ok = true;
    std::vector<std::string> failures;
};

/// Necessary-condition battery, run in order: range, counting identity,
/// multiplicity integrality, Krein conditions, absolute bound. A failed range,
/// counting or integrality check stops the battery because later conditions
/// presuppose it.
inline Feasibility feasible(const SrgParams& p)
{
    Feasibility out;
    auto fail = [&](std::string name) {
        out.ok = false;
        out.failures.push_back(std::move(name));
    };
    if (!in_range(p)) {
        fail("range");
        return out;
    }
    if (!counting_identity(p)) {
        fail("counting identity");
        return out;
    }
    // Complete multipartite and edgeless graphs have no two nontrivial eigenvalues.
    if (p.mu == p.k)
        return out;

    SrgSpectrum sp;
    try {
        sp = spectrum(p);
    } catch (const DomainError&) {
        fail("multiplicity integrality");
        return out;
    }
    bool conference_case = 2 * p.k + (p.v - 1) * (p.lambda - p.mu) == 0;
    if (conference_case) {
        if (p.v % 2 == 0) {
            fail("multiplicity integrality");
            return out;
        }
    } else if (!sp.f_int() || !sp.g_int()) {
        fail("multiplicity integrality");
        return out;
    }

    const QuadraticSurd k(p.k);
    const QuadraticSurd one(1);
    const QuadraticSurd two(2);
    const QuadraticSurd& r = sp.r;
    const QuadraticSurd& s = sp.s;
    if ((r + one) * (k + r + two * r * s) > (k + r) * (s + one) * (s + one))
        fail("Krein condition 1");
    if ((s + one) * (k + s + two * r * s) > (k + s) * (r + one) * (r + one))
        fail("Krein condition 2");

    QuadraticSurd v(p.v);
    if (v * two > sp.f * (sp.f + QuadraticSurd(3)))
        fail("absolute bound (f)");
    if (v * two > sp.g * (sp.g + QuadraticSurd(3)))
        fail("absolute bound (g)");
    return out;
}

inline SrgParams complement(const SrgParams& p)
{
    SrgParams c{p.v, p.v - p.k - 1, p.v - 2 - 2 * p.k + p.mu, p.v - 2 * p.k + p.lambda};
    if (!in_range(p) || !in_range(c))
        throw DomainError("complement of " + p.str() + " is out of range");
    return c;
}

struct WaldronPair {
    SrgParams primary;
    SrgParams complementary;
};

/// Reason the Waldron degree fails to give a graph.
struct NonIntegral {
    QuadraticSurd degree; // k as computed from (n, M)
};

using WaldronResult = std::variant<WaldronPair, NonIntegral>;

/// Degree k = M/2 - 1 + (1 - M/(2n)) sqrt(n(M-1)/(M-n)) of the Waldron graph.
inline QuadraticSurd waldron_degree(std::int64_t n, std::int64_t m)
{
    if (n < 1 || m <= n + 1)
        throw DomainError("Waldron correspondence needs M > n + 1");
    QuadraticSurd root = sqrt_of_rational(make_rational(n * (m - 1), m - n));
    return QuadraticSurd(make_rational(m, 2) - 1) + QuadraticSurd(1 - make_rational(m, 2 * n)) * root;
}

/// ETF(n, M) with M > n + 1 exists iff srg(M-1, k, (3k-M)/2, k/2) exists.
/// Both orientations are returned, since the graph is only defined up to complement.
inline WaldronResult waldron_srg_of_etf(const EtfSpec& e)
{
    const std::int64_t n = e.dimension();
    const std::int64_t m = e.count();
    QuadraticSurd degree = waldron_degree(n, m);
    auto k = degree.as_int64();
    if (!k || *k < 0 || (3 * *k - m) % 2 != 0 || *k % 2 != 0 || 3 * *k - m < 0)
        return NonIntegral{degree};
    SrgParams primary{m - 1, *k, (3 * *k - m) / 2, *k / 2};
    if (!in_range(primary))
        return NonIntegral{degree};
    try {
        return WaldronPair{primary, complement(primary)};
    } catch (const DomainError&) {
        return NonIntegral{degree};
    }
}

/// Descent srg(v,k,l,mu) -> srg(v-1, k d/(d-1), (3k-v)/2 + 3k/(2(d-1)), (k/2) d/(d-1)), d = v - 2k,
/// valid when v = 4k - 2l - 2mu.
inline SrgParams fjg_descent(const SrgParams& p)
{
    if (!regular_two_graph_condition(p))
        throw DomainError(p.str() + ": descent needs v = 4k - 2 lambda - 2 mu");
    const std::int64_t d = p.v - 2 * p.k;
    if (d - 1 == 0)
        throw DomainError(p.str() + ": descent undefined for v - 2k - 1 = 0");
    Rational ratio = make_rational(d, d - 1);
    Rational k2 = p.k * ratio;
    Rational l2 = make_rational(3 * p.k - p.v, 2) + make_rational(3 * p.k, 2 * (d - 1));
    Rational mu2 = make_rational(p.k, 2) * ratio;
    auto k = to_int64(k2), l = to_int64(l2), mu = to_int64(mu2);
    if (!k || !l || !mu)
        throw DomainError(p.str() + ": descent gives non-integral parameters");
    SrgParams out{p.v - 1, *k, *l, *mu};
    if (!in_range(out))
        throw DomainError(p.str() + ": descent gives out-of-range " + out.str());
    return out;
}

/// All sources on target.v + 1 vertices whose descent is `target`.
///
/// With d = v - 2k the degree equation k' = k d/(d-1) becomes
/// d^2 - (v - 2k') d - 2k' = 0; for each integral root the remaining parameters
/// follow from the two-graph condition and the counting identity.
inline std::vector<SrgParams> fjg_ascend(const SrgParams& target)
{
    std::vector<SrgParams> out;
    if (!in_range(target))
        return out;
    const std::int64_t v = target.v + 1;
    const std::int64_t kt = target.k;
    const std::int64_t b = v - 2 * kt;
    const BigInt disc = BigInt(b) * b + 8 * BigInt(kt);
    IntegerSqrt root = integer_sqrt(disc);
    if (!root.exact)
        return out;
    const auto sq = static_cast<std::int64_t>(root.root);
    std::vector<std::int64_t> roots;
    for (std::int64_t num : {b + sq, b - sq})
        if (num % 2 == 0)
            roots.push_back(num / 2);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

    for (std::int64_t d : roots) {
        if ((v - d) % 2 != 0 || d - 1 == 0)
            continue;
        const std::int64_t k = (v - d) / 2;
        Rational mu = ratio(BigInt(k) * (d - 2), BigInt(2 * (d - 1)));
        Rational lambda = Rational(2 * k) - make_rational(v, 2) - mu;
        auto mu_i = to_int64(mu), lambda_i = to_int64(lambda);
        if (!mu_i || !lambda_i)
            continue;
        SrgParams source{v, k, *lambda_i, *mu_i};
        if (!in_range(source) || !counting_identity(source))
            continue;
        try {
            if (fjg_descent(source) == target)
                out.push_back(source);
        } catch (const DomainError&) {
        }
    }
    std::sort(out.begin(), out.end(), [](const SrgParams& a, const SrgParams& b) { return a.k < b.k; });
    return out;
}

} // namespace eqlines
