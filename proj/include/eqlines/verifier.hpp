#pragma once

// Floating-point verification of explicit constructions: adjacency ingestion,
// SRG parameter inference, Gram matrices by eigenspace projection or Seidel
// construction, and rank / equiangularity / tight-frame / 2-design verdicts.
//
// Results of this module are numerical and are never mixed into exact
// certificates.

#include "eqlines/designs.hpp"
#include "eqlines/srg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <istream>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace eqlines {

class AdjacencyError : public DomainError {
public:
    enum class Kind { Parse, Asymmetry, NonzeroDiagonal, NonBinaryEntry };

    AdjacencyError(Kind kind, std::string what, std::int64_t row = -1, std::int64_t col = -1)
        : DomainError(std::move(what)), kind_(kind), row_(row), col_(col)
    {
    }

    Kind kind() const { return kind_; }
    std::int64_t row() const { return row_; }
    std::int64_t col() const { return col_; }

private:
    Kind kind_;
    std::int64_t row_;
    std::int64_t col_;
};

/// Symmetric 0/1 matrix with zero diagonal.
class AdjacencyMatrix {
public:
    AdjacencyMatrix() = default;

    /// Validates symmetry, diagonal and entries; `entries` is row-major v*v.
    AdjacencyMatrix(std::int64_t order, std::vector<std::uint8_t> entries) : order_(order), entries_(std::move(entries))
    {
        using K = AdjacencyError::Kind;
        if (order_ < 1 || static_cast<std::int64_t>(entries_.size()) != order_ * order_)
            throw AdjacencyError(K::Parse, "adjacency matrix must be v*v with v >= 1");
        for (std::int64_t i = 0; i < order_; ++i) {
            for (std::int64_t j = 0; j < order_; ++j) {
                std::uint8_t x = at(i, j);
                if (x > 1)
                    throw AdjacencyError(K::NonBinaryEntry, where(i, j) + ": entry is not 0/1", i, j);
            }
            if (at(i, i) != 0)
                throw AdjacencyError(K::NonzeroDiagonal, where(i, i) + ": nonzero diagonal", i, i);
        }
        for (std::int64_t i = 0; i < order_; ++i)
            for (std::int64_t j = i + 1; j < order_; ++j)
                if (at(i, j) != at(j, i))
                    throw AdjacencyError(K::Asymmetry, where(i, j) + ": differs from " + where(j, i), i, j);
    }

    std::int64_t order() const { return order_; }
    bool adjacent(std::int64_t i, std::int64_t j) const { return at(i, j) != 0; }

    Eigen::MatrixXd to_dense() const
    {
        Eigen::MatrixXd a(order_, order_);
        for (std::int64_t i = 0; i < order_; ++i)
            for (std::int64_t j = 0; j < order_; ++j)
                a(i, j) = at(i, j);
        return a;
    }

    friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

private:
    std::uint8_t at(std::int64_t i, std::int64_t j) const { return entries_[static_cast<std::size_t>(i * order_ + j)]; }
    static std::string where(std::int64_t i, std::int64_t j)
    {
        return "row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1);
    }

    std::int64_t order_ = 0;
    std::vector<std::uint8_t> entries_;
};

/// Line 1: v; then v lines of v whitespace-separated 0/1 tokens. Lines starting
/// with `#` (and text after `#`) are ignored, as are blank lines.
inline AdjacencyMatrix ingest_adjacency(std::istream& in)
{
    using K = AdjacencyError::Kind;
    std::vector<std::vector<std::string>> rows;
    std::string line;
    std::int64_t order = -1;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;)
            tokens.push_back(t);
        if (tokens.empty())
            continue;
        if (order < 0) {
            if (tokens.size() != 1)
                throw AdjacencyError(K::Parse, "first line must hold the single integer v");
            try {
                std::size_t used = 0;
                order = std::stoll(tokens[0], &used);
                if (used != tokens[0].size() || order < 1)
                    throw std::invalid_argument("bad order");
            } catch (const std::exception&) {
                throw AdjacencyError(K::Parse, "invalid vertex count '" + tokens[0] + "'");
            }
            continue;
        }
        rows.push_back(std::move(tokens));
    }
    if (order < 0)
        throw AdjacencyError(K::Parse, "empty adjacency file");
    if (static_cast<std::int64_t>(rows.size()) != order)
        throw AdjacencyError(K::Parse, "expected " + std::to_string(order) + " rows, found " + std::to_string(rows.size()));
    std::vector<std::uint8_t> entries;
    entries.reserve(static_cast<std::size_t>(order * order));
    for (std::int64_t i = 0; i < order; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (static_cast<std::int64_t>(row.size()) != order)
            throw AdjacencyError(K::Parse,
                                 "row " + std::to_string(i + 1) + ": expected " + std::to_string(order) + " entries", i);
        for (std::int64_t j = 0; j < order; ++j) {
            const std::string& tok = row[static_cast<std::size_t>(j)];
            if (tok == "0" || tok == "1") {
                entries.push_back(static_cast<std::uint8_t>(tok[0] - '0'));
                continue;
            }
            bool numeric = !tok.empty() && std::all_of(tok.begin() + (tok[0] == '-' ? 1 : 0), tok.end(),
                                                       [](unsigned char c) { return std::isdigit(c); });
            throw AdjacencyError(numeric ? K::NonBinaryEntry : K::Parse,
                                 "row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1) + ": entry '" +
                                     tok + "' is not 0/1",
                                 i, j);
        }
    }
    return AdjacencyMatrix(order, std::move(entries));
}

inline AdjacencyMatrix ingest_adjacency(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return ingest_adjacency(in);
}

inline std::string format_adjacency(const AdjacencyMatrix& a)
{
    std::string out = std::to_string(a.order()) + "\n";
    for (std::int64_t i = 0; i < a.order(); ++i) {
        for (std::int64_t j = 0; j < a.order(); ++j) {
            if (j)
                out += ' ';
            out += a.adjacent(i, j) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

namespace detail {

template <typename Pred>
AdjacencyMatrix graph_from(std::int64_t v, Pred&& adjacent)
{
    std::vector<std::uint8_t> e(static_cast<std::size_t>(v * v), 0);
    for (std::int64_t i = 0; i < v; ++i)
        for (std::int64_t j = 0; j < v; ++j)
            if (i != j && adjacent(i, j))
                e[static_cast<std::size_t>(i * v + j)] = 1;
    return AdjacencyMatrix(v, std::move(e));
}

// GF(p^e) with elements encoded as base-p digit strings of polynomial coefficients.
class FiniteField {
public:
    explicit FiniteField(std::int64_t q)
    {
        if (q < 2)
            throw DomainError("field order must be >= 2");
        for (std::int64_t d = 2; d * d <= q; ++d)
            if (q % d == 0) {
                p_ = d;
                break;
            }
        if (p_ == 0)
            p_ = q;
        std::int64_t rest = q;
        while (rest % p_ == 0) {
            rest /= p_;
            ++degree_;
        }
        if (rest != 1)
            throw DomainError(std::to_string(q) + " is not a prime power");
        q_ = q;
        modulus_ = find_irreducible();
    }

    std::int64_t order() const { return q_; }

    std::int64_t sub(std::int64_t a, std::int64_t b) const
    {
        auto x = digits(a), y = digits(b);
        for (int i = 0; i < degree_; ++i)
            x[i] = ((x[i] - y[i]) % p_ + p_) % p_;
        return encode(x);
    }

    std::int64_t mul(std::int64_t a, std::int64_t b) const
    {
        auto x = digits(a), y = digits(b);
        std::vector<std::int64_t> prod(static_cast<std::size_t>(2 * degree_), 0);
        for (int i = 0; i < degree_; ++i)
            for (int j = 0; j < degree_; ++j)
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
        reduce(prod, modulus_);
        prod.resize(static_cast<std::size_t>(degree_));
        return encode(prod);
    }

private:
    std::vector<std::int64_t> digits(std::int64_t a) const
    {
        std::vector<std::int64_t> d(static_cast<std::size_t>(degree_), 0);
        for (int i = 0; i < degree_; ++i, a /= p_)
            d[i] = a % p_;
        return d;
    }
    std::int64_t encode(const std::vector<std::int64_t>& d) const
    {
        std::int64_t a = 0;
        for (int i = degree_ - 1; i >= 0; --i)
            a = a * p_ + d[i];
        return a;
    }

    // Reduces `poly` modulo the monic `mod` in place.
    void reduce(std::vector<std::int64_t>& poly, const std::vector<std::int64_t>& mod) const
    {
        const int m = static_cast<int>(mod.size()) - 1;
        for (int i = static_cast<int>(poly.size()) - 1; i >= m; --i) {
            std::int64_t c = poly[i];
            if (c == 0)
                continue;
            for (int j = 0; j <= m; ++j)
                poly[i - m + j] = ((poly[i - m + j] - c * mod[j]) % p_ + p_) % p_;
        }
    }

    // Monic polynomial (coefficients low to high) of the given degree, indexed by n.
    std::vector<std::int64_t> monic(int deg, std::int64_t n) const
    {
        std::vector<std::int64_t> f(static_cast<std::size_t>(deg + 1), 0);
        for (int i = 0; i < deg; ++i, n /= p_)
            f[i] = n % p_;
        f[deg] = 1;
        return f;
    }

    std::vector<std::int64_t> find_irreducible() const
    {
        if (degree_ == 1)
            return {0, 1};
        auto count = [&](int deg) {
            std::int64_t c = 1;
            for (int i = 0; i < deg; ++i)
                c *= p_;
            return c;
        };
        for (std::int64_t n = 0; n < count(degree_); ++n) {
            auto f = monic(degree_, n);
            bool reducible = false;
            for (int deg = 1; deg <= degree_ / 2 && !reducible; ++deg)
                for (std::int64_t m = 0; m < count(deg) && !reducible; ++m) {
                    auto r = f;
                    reduce(r, monic(deg, m));
                    reducible = std::all_of(r.begin(), r.begin() + deg, [](std::int64_t c) { return c == 0; });
                }
            if (!reducible)
                return f;
        }
        throw DomainError("no irreducible polynomial found");
    }

    std::int64_t p_ = 0;
    int degree_ = 0;
    std::int64_t q_ = 0;
    std::vector<std::int64_t> modulus_;
};

} // namespace detail

/// srg(5,2,0,1).
inline AdjacencyMatrix cycle5()
{
    return detail::graph_from(5, [](std::int64_t i, std::int64_t j) { return (i - j + 5) % 5 == 1 || (j - i + 5) % 5 == 1; });
}

inline AdjacencyMatrix cycle(std::int64_t n)
{
    if (n < 3)
        throw DomainError("cycle needs at least 3 vertices");
    return detail::graph_from(n, [n](std::int64_t i, std::int64_t j) { return (i - j + n) % n == 1 || (j - i + n) % n == 1; });
}

/// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint. srg(10,3,0,1).
inline AdjacencyMatrix petersen()
{
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            pairs.emplace_back(a, b);
    return detail::graph_from(10, [&](std::int64_t i, std::int64_t j) {
        auto [a, b] = pairs[static_cast<std::size_t>(i)];
        auto [c, d] = pairs[static_cast<std::size_t>(j)];
        return a != c && a != d && b != c && b != d;
    });
}

/// Paley graph on GF(q), q a prime power with q = 1 mod 4. srg(q,(q-1)/2,(q-5)/4,(q-1)/4).
inline AdjacencyMatrix paley(std::int64_t q)
{
    if (q < 5 || q % 4 != 1)
        throw DomainError("Paley graph needs a prime power q = 1 mod 4, got " + std::to_string(q));
    detail::FiniteField field(q);
    std::vector<bool> square(static_cast<std::size_t>(q), false);
    for (std::int64_t x = 1; x < q; ++x)
        square[static_cast<std::size_t>(field.mul(x, x))] = true;
    return detail::graph_from(q, [&](std::int64_t i, std::int64_t j) { return square[static_cast<std::size_t>(field.sub(i, j))]; });
}

/// Line graph of K_m. srg(m(m-1)/2, 2(m-2), m-2, 4).
inline AdjacencyMatrix triangular(std::int64_t m)
{
    if (m < 4)
        throw DomainError("triangular graph needs m >= 4");
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::int64_t a = 0; a < m; ++a)
        for (std::int64_t b = a + 1; b < m; ++b)
            pairs.emplace_back(a, b);
    return detail::graph_from(static_cast<std::int64_t>(pairs.size()), [&](std::int64_t i, std::int64_t j) {
        auto [a, b] = pairs[static_cast<std::size_t>(i)];
        auto [c, d] = pairs[static_cast<std::size_t>(j)];
        return a == c || a == d || b == c || b == d;
    });
}

/// Rook's graph K_m x K_m. srg(m^2, 2(m-1), m-2, 2).
inline AdjacencyMatrix lattice(std::int64_t m)
{
    if (m < 2)
        throw DomainError("lattice graph needs m >= 2");
    return detail::graph_from(m * m, [m](std::int64_t i, std::int64_t j) { return i / m == j / m || i % m == j % m; });
}

inline AdjacencyMatrix complement(const AdjacencyMatrix& a)
{
    return detail::graph_from(a.order(), [&](std::int64_t i, std::int64_t j) { return !a.adjacent(i, j); });
}

/// Disjoint union with one isolated vertex (appended last).
inline AdjacencyMatrix adjoin_isolated_vertex(const AdjacencyMatrix& a)
{
    const std::int64_t v = a.order();
    return detail::graph_from(v + 1, [&](std::int64_t i, std::int64_t j) { return i < v && j < v && a.adjacent(i, j); });
}

/// Names: cycle5, petersen, paley:Q, triangular:M, lattice:M, complement:NAME.
inline AdjacencyMatrix builtin_graph(std::string_view name)
{
    auto colon = name.find(':');
    std::string_view head = name.substr(0, colon);
    std::string_view arg = colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);
    auto int_arg = [&]() {
        try {
            std::size_t used = 0;
            std::int64_t x = std::stoll(std::string(arg), &used);
            if (used != arg.size())
                throw std::invalid_argument("junk");
            return x;
        } catch (const std::exception&) {
            throw DomainError("builtin graph '" + std::string(name) + "' needs an integer parameter");
        }
    };
    if (head == "cycle5")
        return cycle5();
    if (head == "petersen")
        return petersen();
    if (head == "paley")
        return paley(int_arg());
    if (head == "triangular")
        return triangular(int_arg());
    if (head == "lattice")
        return lattice(int_arg());
    if (head == "complement")
        return complement(builtin_graph(arg));
    throw DomainError("unknown builtin graph '" + std::string(name) + "'");
}

struct NotStronglyRegular {
    std::string reason;
    std::int64_t i = -1; // witness vertices (0-based), -1 when not applicable
    std::int64_t j = -1;
};

using SrgInference = std::variant<SrgParams, NotStronglyRegular>;

/// Reads (v,k,lambda,mu) off A^2. lambda (mu) is reported as 0 when there are
/// no adjacent (non-adjacent) pairs.
inline SrgInference infer_srg(const AdjacencyMatrix& a)
{
    const std::int64_t v = a.order();
    std::vector<std::int64_t> degree(static_cast<std::size_t>(v), 0);
    for (std::int64_t i = 0; i < v; ++i)
        for (std::int64_t j = 0; j < v; ++j)
            degree[static_cast<std::size_t>(i)] += a.adjacent(i, j);
    for (std::int64_t i = 1; i < v; ++i)
        if (degree[static_cast<std::size_t>(i)] != degree[0])
            return NotStronglyRegular{"not regular", 0, i};
    std::optional<std::int64_t> lambda, mu;
    for (std::int64_t i = 0; i < v; ++i)
        for (std::int64_t j = i + 1; j < v; ++j) {
            std::int64_t common = 0;
            for (std::int64_t x = 0; x < v; ++x)
                common += a.adjacent(i, x) && a.adjacent(j, x);
            auto& slot = a.adjacent(i, j) ? lambda : mu;
            if (!slot)
                slot = common;
            else if (*slot != common)
                return NotStronglyRegular{a.adjacent(i, j) ? "adjacent pairs differ in common neighbours"
                                                           : "non-adjacent pairs differ in common neighbours",
                                          i, j};
        }
    return SrgParams{v, degree[0], lambda.value_or(0), mu.value_or(0)};
}

struct ValueClass {
    double value = 0;
    std::int64_t count = 0;
};

struct GramVerdicts {
    bool psd = false;
    bool two_distance = false;
    bool equiangular = false;
    bool tight_frame = false;
    bool two_design = false;
};

struct GramReport {
    std::int64_t size = 0;
    std::int64_t ambient = 0;
    std::int64_t numeric_rank = 0;
    double min_eigenvalue = 0;
    std::vector<ValueClass> distinct_offdiag;
    double frame_potential = 0;
    double centroid_norm = 0;
    GramVerdicts verdicts;
    std::string construction;
};

/// Tolerance policy shared by every report.
struct Tolerances {
    static constexpr double rank_relative = 1e-8;     // eigenvalue > this * largest counts toward rank
    static constexpr double psd_relative = 1e-8;      // min eigenvalue >= -this * largest
    static constexpr double cluster_gap = 1e-6;       // off-diagonal values closer than this share a class
    static constexpr double frame_relative = 1e-6;    // |FP - M^2/rank| <= this * M^2/rank
    static constexpr double centroid_absolute = 1e-8; // centroid_norm below this counts as zero
};

namespace detail {

inline std::vector<ValueClass> cluster(std::vector<double> values)
{
    std::sort(values.begin(), values.end());
    std::vector<ValueClass> out;
    double sum = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i == 0 || values[i] - values[i - 1] > Tolerances::cluster_gap) {
            if (!out.empty())
                out.back().value = sum / static_cast<double>(out.back().count);
            out.push_back({values[i], 0});
            sum = 0;
        }
        ++out.back().count;
        sum += values[i];
    }
    if (!out.empty())
        out.back().value = sum / static_cast<double>(out.back().count);
    return out;
}

} // namespace detail

/// Spectral and combinatorial summary of a unit-diagonal Gram matrix.
/// `ambient` < 0 means "use the numeric rank".
inline GramReport analyze_gram(const Eigen::MatrixXd& g, std::int64_t ambient = -1)
{
    const auto m = static_cast<std::int64_t>(g.rows());
    if (m < 1 || g.cols() != g.rows())
        throw DomainError("Gram matrix must be square and non-empty");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success)
        throw DomainError("eigen-solve failed");
    const Eigen::VectorXd& lam = eig.eigenvalues();
    double largest = std::max(lam.maxCoeff(), 0.0);

    GramReport r;
    r.size = m;
    r.min_eigenvalue = lam.minCoeff();
    r.numeric_rank = (lam.array() > Tolerances::rank_relative * largest).count();
    r.ambient = ambient < 0 ? r.numeric_rank : ambient;

    std::vector<double> off, mags;
    off.reserve(static_cast<std::size_t>(m * (m - 1) / 2));
    for (std::int64_t i = 0; i < m; ++i)
        for (std::int64_t j = i + 1; j < m; ++j) {
            off.push_back(g(i, j));
            mags.push_back(std::abs(g(i, j)));
        }
    r.distinct_offdiag = detail::cluster(off);
    r.frame_potential = g.squaredNorm();
    r.centroid_norm = g.sum() / static_cast<double>(m * m);

    GramVerdicts& v = r.verdicts;
    v.psd = r.min_eigenvalue >= -Tolerances::psd_relative * largest;
    v.two_distance = r.distinct_offdiag.size() <= 2;
    v.equiangular = detail::cluster(mags).size() <= 1;
    if (v.psd && r.numeric_rank > 0) {
        double target = static_cast<double>(m) * static_cast<double>(m) / static_cast<double>(r.numeric_rank);
        v.tight_frame = std::abs(r.frame_potential - target) <= Tolerances::frame_relative * target;
    }
    v.two_design = v.tight_frame && std::abs(r.centroid_norm) <= Tolerances::centroid_absolute;
    return r;
}

/// Gram matrix of the normalized projection of the vertices onto the chosen
/// nontrivial eigenspace, built from numerically computed eigenvectors.
inline Eigen::MatrixXd projection_gram(const AdjacencyMatrix& a, Eigenspace which)
{
    SrgInference inferred = infer_srg(a);
    if (auto* bad = std::get_if<NotStronglyRegular>(&inferred))
        throw DomainError("graph is not strongly regular: " + bad->reason);
    SrgSpectrum sp = spectrum(std::get<SrgParams>(inferred));
    if (!sp.f_int() || !sp.g_int())
        throw DomainError("eigenvalue multiplicities are not integral");
    const double theta = (which == Eigenspace::R ? sp.r : sp.s).to_double();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a.to_dense());
    if (eig.info() != Eigen::Success)
        throw DomainError("eigen-solve failed");
    const Eigen::VectorXd& lam = eig.eigenvalues();
    std::vector<Eigen::Index> chosen;
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        if (std::abs(lam(i) - theta) <= Tolerances::cluster_gap * std::max(1.0, std::abs(theta)))
            chosen.push_back(i);
    Eigen::MatrixXd basis(a.order(), static_cast<Eigen::Index>(chosen.size()));
    for (std::size_t c = 0; c < chosen.size(); ++c)
        basis.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors().col(chosen[c]);
    Eigen::MatrixXd p = basis * basis.transpose();
    Eigen::VectorXd scale = p.diagonal().array().rsqrt();
    return scale.asDiagonal() * p * scale.asDiagonal();
}

inline GramReport gram_by_projection(const AdjacencyMatrix& a, Eigenspace which)
{
    SrgSpectrum sp = spectrum(std::get<SrgParams>(infer_srg(a)));
    Eigen::MatrixXd g = projection_gram(a, which);
    GramReport r = analyze_gram(g, which == Eigenspace::R ? *sp.f_int() : *sp.g_int());
    r.construction = std::string("projection onto eigenspace ") + std::string(to_string(which));
    return r;
}

enum class SeidelVertices {
    Auto,            ///< adjoin an isolated vertex iff the graph has Waldron form srg(M-1, k, (3k-M)/2, k/2)
    AsGiven,         ///< one line per vertex
    AdjoinIsolated,  ///< one extra line for an adjoined isolated vertex
};

/// Seidel-matrix Gram I + c(J - I - 2A) over the chosen vertex set.
inline Eigen::MatrixXd seidel_gram(const AdjacencyMatrix& a, double c)
{
    const Eigen::Index v = a.order();
    Eigen::MatrixXd s = Eigen::MatrixXd::Ones(v, v) - Eigen::MatrixXd::Identity(v, v) - 2.0 * a.to_dense();
    return Eigen::MatrixXd::Identity(v, v) + c * s;
}

inline bool has_waldron_form(const SrgParams& p)
{
    const std::int64_t m = p.v + 1;
    return p.k % 2 == 0 && p.mu == p.k / 2 && 2 * p.lambda == 3 * p.k - m;
}

inline GramReport gram_by_seidel(const AdjacencyMatrix& a, double c, SeidelVertices mode = SeidelVertices::Auto)
{
    if (!(c > 0 && c < 1))
        throw DomainError("Seidel angle must lie in (0, 1)");
    bool adjoin = mode == SeidelVertices::AdjoinIsolated;
    if (mode == SeidelVertices::Auto) {
        SrgInference inferred = infer_srg(a);
        if (auto* p = std::get_if<SrgParams>(&inferred))
            adjoin = has_waldron_form(*p) && !regular_two_graph_condition(*p);
    }
    GramReport r = analyze_gram(seidel_gram(adjoin ? adjoin_isolated_vertex(a) : a, c));
    r.construction = adjoin ? "seidel with adjoined isolated vertex" : "seidel";
    return r;
}

/// Spherical 2-design test: tight frame with centroid at the origin.
inline bool check_two_design(const GramReport& g)
{
    if (!g.verdicts.psd)
        throw DomainError("check_two_design: Gram matrix is not positive semidefinite");
    return g.verdicts.tight_frame && std::abs(g.centroid_norm) <= Tolerances::centroid_absolute;
}

} // namespace eqlines
