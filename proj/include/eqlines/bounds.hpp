#pragma once

// Closed-form bounds and angle constraints for equiangular line systems and
// spherical designs.

#include "eqlines/exact.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace eqlines {

enum class AngleRule { Neumann, LRS, Unconstrained };

inline std::string_view to_string(AngleRule rule)
{
    switch (rule) {
    case AngleRule::Neumann:
        return "Neumann";
    case AngleRule::LRS:
        return "LRS";
    case AngleRule::Unconstrained:
        return "Unconstrained";
    }
    return "?";
}

/// Cardinality hypothesis for the two-distance angle theorem.
enum class LrsThreshold {
    Strict2n3,   ///< M > 2n + 3
    Neumaier2n1, ///< M > 2n + 1
};

inline std::string_view to_string(LrsThreshold t) { return t == LrsThreshold::Strict2n3 ? "Strict2n3" : "Neumaier2n1"; }

inline LrsThreshold parse_lrs_threshold(std::string_view s)
{
    if (s == "Strict2n3")
        return LrsThreshold::Strict2n3;
    if (s == "Neumaier2n1")
        return LrsThreshold::Neumaier2n1;
    throw DomainError("unknown LRS threshold '" + std::string(s) + "'");
}

/// Admissible common angles for M lines in R^n.
///
/// For the Neumann rule the family {1/(2k-1) : k >= 2} is infinite; `candidates`
/// then holds only the prefix up to the requested cutoff and `admits` is the
/// exact membership predicate.
struct AngleCandidateSet {
    std::int64_t dimension = 0;
    std::int64_t count = 0;
    std::vector<Rational> candidates;
    AngleRule rule = AngleRule::Unconstrained;

    bool admits(const QuadraticSurd& angle) const
    {
        switch (rule) {
        case AngleRule::Unconstrained:
            return true;
        case AngleRule::LRS:
            for (const Rational& c : candidates)
                if (angle == QuadraticSurd(c))
                    return true;
            return false;
        case AngleRule::Neumann: {
            if (!angle.is_rational())
                return false;
            Rational c = angle.as_rational();
            if (numerator(c) != 1)
                return false;
            const BigInt& q = denominator(c);
            return q >= 3 && q % 2 == 1;
        }
        }
        return false;
    }
};

/// Common angle is 1/(2k-1) once M > 2n.
inline AngleCandidateSet neumann_angles(std::int64_t n, std::int64_t m, std::int64_t cutoff = 4)
{
    AngleCandidateSet out{n, m, {}, AngleRule::Unconstrained};
    if (m <= 2 * n)
        return out;
    out.rule = AngleRule::Neumann;
    for (std::int64_t k = 2; k < 2 + cutoff; ++k)
        out.candidates.push_back(make_rational(1, 2 * k - 1));
    return out;
}

/// Angles allowed by the Larman-Rogers-Seidel two-distance theorem specialised
/// to a = -b: 1/(2k-1) with 2 <= k <= (1 + sqrt(2n))/2, i.e. (2k-1)^2 <= 2n.
inline AngleCandidateSet lrs_angles(std::int64_t n, std::int64_t m, LrsThreshold threshold = LrsThreshold::Strict2n3)
{
    if (n < 2)
        throw DomainError("lrs_angles: dimension must be >= 2");
    AngleCandidateSet out{n, m, {}, AngleRule::Unconstrained};
    std::int64_t floor_count = threshold == LrsThreshold::Strict2n3 ? 2 * n + 3 : 2 * n + 1;
    if (m <= floor_count)
        return out;
    out.rule = AngleRule::LRS;
    for (std::int64_t k = 2; (2 * k - 1) * (2 * k - 1) <= 2 * n; ++k)
        out.candidates.push_back(make_rational(1, 2 * k - 1));
    return out;
}

/// Lemmens-Seidel: at angle 1/3 and n >= 15 there are at most 2n - 2 lines.
inline std::optional<std::int64_t> lemmens_seidel_third(std::int64_t n)
{
    if (n < 15)
        return std::nullopt;
    return 2 * n - 2;
}

/// Relative bound n(1-c^2)/(1-nc^2); empty when nc^2 >= 1.
inline std::optional<Rational> relative_bound(std::int64_t n, const QuadraticSurd& c)
{
    if (c.sign() <= 0 || c >= QuadraticSurd(1))
        throw DomainError("relative_bound: angle must lie in (0, 1)");
    Rational c2 = (c * c).as_rational();
    Rational denom = 1 - n * c2;
    if (denom.sign() <= 0)
        return std::nullopt;
    return n * (1 - c2) / denom;
}

struct GerzonBound {
    std::int64_t bound = 0;
    QuadraticSurd attaining_angle;
};

inline GerzonBound gerzon_bound(std::int64_t n)
{
    if (n < 2)
        throw DomainError("gerzon_bound: dimension must be >= 2");
    return {n * (n + 1) / 2, sqrt_of_rational(make_rational(1, n + 2))};
}

/// Delsarte-Goethals-Seidel lower bound on the size of a spherical t-design in R^n.
inline BigInt dgs_design_bound(std::int64_t n, std::int64_t t)
{
    if (n < 1 || t < 1)
        throw DomainError("dgs_design_bound: need n >= 1 and t >= 1");
    std::int64_t e = t / 2;
    if (t % 2 == 0)
        return binomial(n + e - 1, n - 1) + binomial(n + e - 2, n - 1);
    return 2 * binomial(n + e - 1, n - 1);
}

} // namespace eqlines
