#pragma once

// Tight-frame algebra for unit-norm equiangular systems: Welch angle, frame
// potential, complementary ETFs.

#include "eqlines/exact.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace eqlines {

/// sqrt((M - n) / (n (M - 1))), the only possible angle of an ETF(n, M).
inline QuadraticSurd welch_angle(std::int64_t n, std::int64_t m)
{
    if (n < 1 || m <= n)
        throw DomainError("welch_angle: need M > n >= 1");
    return sqrt_of_rational(make_rational(m - n, n * (m - 1)));
}

/// Putative equiangular tight frame ETF(n, M, c). The angle is always derived.
class EtfSpec {
public:
    EtfSpec(std::int64_t dimension, std::int64_t count) : n_(dimension), m_(count), angle_(welch_angle(dimension, count)) {}

    /// Rejects a supplied angle that disagrees with the Welch angle.
    EtfSpec(std::int64_t dimension, std::int64_t count, const QuadraticSurd& angle) : EtfSpec(dimension, count)
    {
        if (angle != angle_)
            throw DomainError("ETF(" + std::to_string(n_) + "," + std::to_string(m_) + ") has angle " + angle_.str() +
                              ", not " + angle.str());
    }

    std::int64_t dimension() const { return n_; }
    std::int64_t count() const { return m_; }
    const QuadraticSurd& angle() const { return angle_; }

    std::string str() const
    {
        return "ETF(" + std::to_string(n_) + "," + std::to_string(m_) + "," + angle_.str() + ")";
    }

    friend bool operator==(const EtfSpec& a, const EtfSpec& b) { return a.n_ == b.n_ && a.m_ == b.m_; }

private:
    std::int64_t n_;
    std::int64_t m_;
    QuadraticSurd angle_;
};

struct LineSystemQuery {
    std::int64_t dimension = 0;
    std::int64_t count = 0;
    std::optional<QuadraticSurd> angle;
};

struct FramePotential {
    Rational fp;
    Rational minimum; // M^2 / n
    bool tight = false;
    bool violated = false;
};

/// FP = M + M(M-1)c^2 for M unit vectors with common angle c, compared with
/// the Benedetto-Fickus minimum M^2/n.
inline FramePotential frame_potential_equiangular(std::int64_t n, std::int64_t m, const QuadraticSurd& c)
{
    if (n < 1 || m <= n)
        throw DomainError("frame_potential_equiangular: need M > n >= 1");
    if (c.sign() < 0 || c >= QuadraticSurd(1))
        throw DomainError("frame_potential_equiangular: angle must lie in [0, 1)");
    Rational c2 = (c * c).as_rational();
    FramePotential out;
    out.fp = m + Rational(m) * (m - 1) * c2;
    out.minimum = ratio(BigInt(m) * m, BigInt(n));
    out.tight = out.fp == out.minimum;
    out.violated = out.fp < out.minimum;
    return out;
}

inline EtfSpec complementary_etf(const EtfSpec& e)
{
    if (e.count() - e.dimension() < 1)
        throw DomainError("complementary_etf: M - n must be >= 1");
    return EtfSpec(e.count() - e.dimension(), e.count());
}

struct Refuted {
    FramePotential potential;
};
struct Indeterminate {
    std::string reason;
};
using EtfDeduction = std::variant<EtfSpec, Refuted, Indeterminate>;

/// Frame-potential step: an equiangular system whose potential sits exactly at
/// the minimum is an ETF; below the minimum it cannot exist; above it nothing follows.
inline EtfDeduction etf_from_lines(const LineSystemQuery& q)
{
    if (q.count <= q.dimension)
        throw DomainError("etf_from_lines: need M > n");
    if (!q.angle)
        return Indeterminate{"no common angle supplied"};
    FramePotential fp = frame_potential_equiangular(q.dimension, q.count, *q.angle);
    if (fp.tight)
        return EtfSpec(q.dimension, q.count, *q.angle);
    if (fp.violated)
        return Refuted{fp};
    return Indeterminate{"frame potential " + to_string(fp.fp) + " exceeds the minimum " + to_string(fp.minimum)};
}

} // namespace eqlines
