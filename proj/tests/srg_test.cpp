#include "eqlines/srg.hpp"
#include "eqlines/srg_database.hpp"
#include "eqlines/verifier.hpp"

#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <fstream>
#include <sstream>

using namespace eqlines;

namespace {

// Eigenvalues r > s are the roots of x^2 - (lambda - mu) x - (k - mu); the
// multiplicities solve f + g = v - 1 and k + f r + g s = 0.
struct Oracle {
    QuadraticSurd r, s, f, g;
};

Oracle solve_by_trace(const SrgParams& p)
{
    Rational b = p.lambda - p.mu;
    QuadraticSurd disc = sqrt_of_rational(b * b + 4 * Rational(p.k - p.mu));
    QuadraticSurd r = (QuadraticSurd(b) + disc) / QuadraticSurd(2);
    QuadraticSurd s = (QuadraticSurd(b) - disc) / QuadraticSurd(2);
    QuadraticSurd f = (QuadraticSurd(-p.k) - QuadraticSurd(p.v - 1) * s) / (r - s);
    return {r, s, f, QuadraticSurd(p.v - 1) - f};
}

void expect_spectrum(const SrgParams& p, std::int64_t r, std::int64_t s, std::int64_t f, std::int64_t g)
{
    SrgSpectrum sp = spectrum(p);
    EXPECT_EQ(sp.r, QuadraticSurd(r)) << p.str();
    EXPECT_EQ(sp.s, QuadraticSurd(s)) << p.str();
    EXPECT_EQ(sp.f_int(), f) << p.str();
    EXPECT_EQ(sp.g_int(), g) << p.str();
    Oracle o = solve_by_trace(p);
    EXPECT_EQ(o.r, sp.r);
    EXPECT_EQ(o.s, sp.s);
    EXPECT_EQ(o.f, sp.f);
    EXPECT_EQ(o.g, sp.g);
}

std::vector<double> sorted_eigenvalues(const AdjacencyMatrix& a)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.to_dense());
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(Spectrum, KnownParameterSets)
{
    expect_spectrum({76, 35, 18, 14}, 7, -3, 19, 56);
    expect_spectrum({75, 32, 10, 16}, 2, -8, 56, 18);
    expect_spectrum({10, 3, 0, 1}, 1, -2, 5, 4);
    expect_spectrum({76, 30, 8, 14}, 2, -8, 57, 18);
}

TEST(Spectrum, PetersenAgreesWithNumericalEigenvalues)
{
    auto ev = sorted_eigenvalues(petersen());
    SrgSpectrum sp = spectrum({10, 3, 0, 1});
    int at_s = 0, at_r = 0;
    for (double x : ev) {
        at_s += std::abs(x - sp.s.to_double()) < 1e-9;
        at_r += std::abs(x - sp.r.to_double()) < 1e-9;
    }
    EXPECT_EQ(at_s, *sp.g_int());
    EXPECT_EQ(at_r, *sp.f_int());
    EXPECT_NEAR(ev.back(), 3.0, 1e-9);
}

TEST(Spectrum, ConferenceGraph)
{
    SrgSpectrum sp = spectrum({5, 2, 0, 1});
    EXPECT_TRUE(sp.conference());
    EXPECT_EQ(sp.f_int(), 2);
    EXPECT_EQ(sp.r, parse_surd("-1/2 + 1/2*sqrt(5)"));
    EXPECT_TRUE(feasible({5, 2, 0, 1}).ok);
    EXPECT_TRUE(feasible({13, 6, 2, 3}).ok);
}

TEST(Spectrum, RejectsDegenerateInput)
{
    EXPECT_THROW(spectrum({5, 7, 0, 1}), DomainError);
    EXPECT_THROW(spectrum({6, 3, 0, 3}), DomainError); // complete bipartite: mu = k
}

TEST(Feasibility, Examples)
{
    EXPECT_TRUE(feasible({75, 32, 10, 16}).ok);
    EXPECT_TRUE(feasible({76, 35, 18, 14}).ok);

    Feasibility misprint = feasible({3159, 1408, 1064, 702});
    EXPECT_FALSE(misprint.ok);
    EXPECT_EQ(misprint.failures, std::vector<std::string>{"counting identity"});
    EXPECT_NE(1408 * 343, 1750 * 702);

    Feasibility range = feasible({5, 7, 0, 1});
    EXPECT_EQ(range.failures, std::vector<std::string>{"range"});
}

TEST(Feasibility, KreinAndAbsoluteBound)
{
    // f = 78 on 3160 vertices: 78 * 81 / 2 = 3159 < 3160.
    Feasibility f = feasible({3160, 1755, 1050, 880});
    EXPECT_FALSE(f.ok);
    EXPECT_NE(std::find(f.failures.begin(), f.failures.end(), "absolute bound (f)"), f.failures.end());
    // Known graphs pass every condition.
    for (SrgParams p : {SrgParams{27, 10, 1, 5}, SrgParams{275, 112, 30, 56}, SrgParams{16, 5, 0, 2},
                        SrgParams{56, 10, 0, 2}, SrgParams{77, 16, 0, 4}, SrgParams{100, 22, 0, 6}})
        EXPECT_TRUE(feasible(p).ok) << p.str();
}

TEST(Complement, Examples)
{
    EXPECT_EQ(complement({76, 35, 18, 14}), (SrgParams{76, 40, 18, 24}));
    EXPECT_EQ(complement({76, 30, 8, 14}), (SrgParams{76, 45, 28, 24}));
    EXPECT_EQ(complement({75, 32, 10, 16}), (SrgParams{75, 42, 25, 21}));
    EXPECT_EQ(complement(complement({75, 32, 10, 16})), (SrgParams{75, 32, 10, 16}));
}

TEST(Waldron, Examples)
{
    auto pair = [](std::int64_t n, std::int64_t m) { return std::get<WaldronPair>(waldron_srg_of_etf(EtfSpec(n, m))); };
    EXPECT_EQ(pair(19, 76).primary, (SrgParams{75, 32, 10, 16}));
    EXPECT_EQ(pair(20, 96).primary, (SrgParams{95, 40, 12, 20}));
    EXPECT_EQ(pair(42, 288).primary, (SrgParams{287, 126, 45, 63}));
    EXPECT_EQ(pair(47, 1128).primary, (SrgParams{1127, 486, 165, 243}));
    EXPECT_EQ(pair(47, 1128).complementary, (SrgParams{1127, 640, 396, 320}));
    EXPECT_EQ(pair(79, 3160).primary, (SrgParams{3159, 1408, 532, 704}));
    EXPECT_EQ(pair(23, 276).primary, (SrgParams{275, 112, 30, 56}));
    EXPECT_EQ(pair(57, 76).primary, (SrgParams{75, 42, 25, 21}));
    EXPECT_EQ(waldron_degree(19, 76), QuadraticSurd(32));
}

TEST(Waldron, NonIntegralDegree)
{
    auto r = waldron_srg_of_etf(EtfSpec(4, 7));
    ASSERT_TRUE(std::holds_alternative<NonIntegral>(r));
    EXPECT_THROW(waldron_degree(5, 6), DomainError);
}

TEST(FjgDescent, Examples)
{
    EXPECT_EQ(fjg_descent({76, 30, 8, 14}), (SrgParams{75, 32, 10, 16}));
    EXPECT_EQ(fjg_descent({76, 35, 18, 14}), (SrgParams{75, 42, 25, 21}));
    EXPECT_EQ(fjg_descent({10, 3, 0, 1}), (SrgParams{9, 4, 1, 2}));
    EXPECT_THROW(fjg_descent({75, 32, 10, 16}), DomainError);
}

TEST(FjgDescent, PetersenToPaleyNumerically)
{
    // Deleting a vertex of the Petersen graph and switching its neighbourhood
    // gives a graph with the spectrum of Paley(9).
    AdjacencyMatrix p = petersen();
    const std::int64_t v = p.order();
    std::vector<std::uint8_t> entries;
    for (std::int64_t i = 1; i < v; ++i)
        for (std::int64_t j = 1; j < v; ++j) {
            bool adj = p.adjacent(i, j);
            if (i != j && p.adjacent(0, i) != p.adjacent(0, j))
                adj = !adj;
            entries.push_back(adj);
        }
    AdjacencyMatrix switched(v - 1, entries);
    // Complement orientation may differ; accept either.
    auto inferred = infer_srg(switched);
    ASSERT_TRUE(std::holds_alternative<SrgParams>(inferred));
    SrgParams q = std::get<SrgParams>(inferred);
    SrgParams expected = fjg_descent({10, 3, 0, 1});
    EXPECT_TRUE(q == expected || q == complement(expected)) << q.str();
    auto ev = sorted_eigenvalues(paley(9));
    auto ev2 = sorted_eigenvalues(q == expected ? switched : complement(switched));
    for (std::size_t i = 0; i < ev.size(); ++i)
        EXPECT_NEAR(ev[i], ev2[i], 1e-9);
}

TEST(FjgAscend, Examples)
{
    auto up = fjg_ascend({1127, 640, 396, 320});
    EXPECT_NE(std::find(up.begin(), up.end(), SrgParams{1128, 644, 400, 324}), up.end());
    EXPECT_NE(std::find(up.begin(), up.end(), SrgParams{1128, 560, 316, 240}), up.end());

    auto up75 = fjg_ascend({75, 32, 10, 16});
    EXPECT_EQ(up75, (std::vector<SrgParams>{{76, 30, 8, 14}, {76, 40, 18, 24}}));
    for (const SrgParams& s : up75)
        EXPECT_EQ(fjg_descent(s), (SrgParams{75, 32, 10, 16}));

    auto up539 = fjg_ascend({539, 234, 81, 117});
    for (const SrgParams& s : up539) {
        EXPECT_EQ(s.v, 540);
        EXPECT_EQ(fjg_descent(s), (SrgParams{539, 234, 81, 117}));
    }
    // Table sets on 540 vertices arise from one orientation or the other.
    auto up539c = fjg_ascend(complement({539, 234, 81, 117}));
    for (SrgParams want : {SrgParams{540, 266, 148, 114}, SrgParams{540, 308, 190, 156}}) {
        bool found = std::find(up539.begin(), up539.end(), want) != up539.end() ||
                     std::find(up539c.begin(), up539c.end(), want) != up539c.end() ||
                     std::find(up539.begin(), up539.end(), complement(want)) != up539.end() ||
                     std::find(up539c.begin(), up539c.end(), complement(want)) != up539c.end();
        EXPECT_TRUE(found) << want.str();
    }
}

TEST(SrgDatabase, SeedLookups)
{
    const SrgDatabase& db = SrgDatabase::seed();
    EXPECT_EQ(db.size(), 10u);
    SrgRecord a = db.lookup({75, 32, 10, 16});
    EXPECT_EQ(a.status, SrgStatus::NotExists);
    EXPECT_EQ(a.source, "aza15");
    EXPECT_EQ(db.lookup({95, 40, 12, 20}).source, "aza16");
    EXPECT_EQ(db.lookup({540, 308, 190, 156}).status, SrgStatus::NotExists);

    SrgRecord c = db.lookup({75, 42, 25, 21});
    EXPECT_EQ(c.status, SrgStatus::NotExists);
    EXPECT_TRUE(c.via_complement);

    EXPECT_EQ(db.lookup({76, 35, 18, 14}).status, SrgStatus::Open); // derivable, never stored
    EXPECT_EQ(db.lookup({10, 3, 0, 1}).status, SrgStatus::Exists);
}

TEST(SrgDatabase, BundledFileMatchesSeed)
{
    SrgDatabase file = SrgDatabase::load(EQLINES_SEED_DB);
    EXPECT_EQ(file.size(), SrgDatabase::seed().size());
    for (SrgParams p : {SrgParams{75, 32, 10, 16}, SrgParams{1128, 644, 400, 324}, SrgParams{27, 10, 1, 5}})
        EXPECT_EQ(file.lookup(p).status, SrgDatabase::seed().lookup(p).status);
}

TEST(SrgDatabase, RejectsMalformedInput)
{
    EXPECT_THROW(SrgDatabase::parse(std::string_view("75 32 10 16 N\n")), DatabaseError);
    EXPECT_THROW(SrgDatabase::parse(std::string_view("75 32 10 X N src\n")), DatabaseError);
    EXPECT_THROW(SrgDatabase::parse(std::string_view("75 32 10 16 Q src\n")), DomainError);
    EXPECT_THROW(SrgDatabase::parse(std::string_view("5 9 0 1 E src\n")), DatabaseError);
    EXPECT_THROW(SrgDatabase::load("/nonexistent/srg.db"), DatabaseError);
    EXPECT_EQ(SrgDatabase::parse(std::string_view("# only a comment\n\n")).size(), 0u);
}
