#pragma once

// Deduction engine: chains bounds, frame-potential tightness, the Waldron
// correspondence, SRG feasibility, the imported database and the
// projection / descent constructions into verdicts with replayable
// certificates.

#include "eqlines/bounds.hpp"
#include "eqlines/certificate.hpp"
#include "eqlines/designs.hpp"
#include "eqlines/frames.hpp"
#include "eqlines/srg.hpp"
#include "eqlines/srg_database.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace eqlines {

struct LinesOptions {
    std::optional<QuadraticSurd> angle;
    LrsThreshold threshold = LrsThreshold::Strict2n3;
    bool monotone = false;
};

inline Json evaluate(Rule rule, const Json& inputs, const SrgDatabase& db);
inline Verdict lines_verdict(std::int64_t n, std::int64_t m, const LinesOptions& opts, const SrgDatabase& db);

namespace detail {

inline Json angle_json(const std::optional<QuadraticSurd>& a) { return a ? to_json(*a) : Json(nullptr); }

inline std::optional<QuadraticSurd> angle_from_json(const Json& j)
{
    if (j.is_null())
        return std::nullopt;
    return surd_from_json(j);
}

class CertificateBuilder {
public:
    explicit CertificateBuilder(const SrgDatabase& db) : db_(db) {}

    DeductionStep& add(Rule rule, Json inputs, int depth, Outcome outcome)
    {
        DeductionStep s;
        s.rule = rule;
        s.outputs = evaluate(rule, inputs, db_);
        s.inputs = std::move(inputs);
        s.citation = std::string(citation(rule));
        if (rule == Rule::SrgDatabase && !s.outputs.at("source").get<std::string>().empty())
            s.citation += " [" + s.outputs.at("source").get<std::string>() + "]";
        s.depth = depth;
        s.outcome = outcome;
        steps.push_back(std::move(s));
        return steps.back();
    }

    void append(const CertificateBuilder& other)
    {
        steps.insert(steps.end(), other.steps.begin(), other.steps.end());
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    }

    const SrgDatabase& db() const { return db_; }

    std::vector<DeductionStep> steps;
    std::vector<std::string> notes;

private:
    const SrgDatabase& db_;
};

inline Conclusion combine(const std::vector<Conclusion>& branches)
{
    if (branches.empty())
        return Conclusion::Open;
    if (std::all_of(branches.begin(), branches.end(), [](Conclusion c) { return c == Conclusion::NonexistenceCertified; }))
        return Conclusion::NonexistenceCertified;
    if (std::any_of(branches.begin(), branches.end(), [](Conclusion c) { return c == Conclusion::ExistenceKnown; }))
        return Conclusion::ExistenceKnown;
    return Conclusion::Open;
}

/// Waldron graph of ETF(n, M), then feasibility and database on it.
inline Conclusion etf_chain(std::int64_t n, std::int64_t m, int depth, CertificateBuilder& cert)
{
    Json in{{"dimension", n}, {"count", m}};
    if (m <= n + 1) {
        cert.notes.push_back("ETF(" + std::to_string(n) + "," + std::to_string(m) +
                             "): Waldron correspondence needs M > n + 1");
        return Conclusion::Open;
    }
    WaldronResult w = waldron_srg_of_etf(EtfSpec(n, m));
    if (std::holds_alternative<NonIntegral>(w)) {
        cert.add(Rule::WaldronIntegrality, in, depth, Outcome::Refutes);
        return Conclusion::NonexistenceCertified;
    }
    const SrgParams primary = std::get<WaldronPair>(w).primary;
    cert.add(Rule::WaldronCorrespondence, in, depth, Outcome::Derives);
    if (!feasible(primary).ok) {
        cert.add(Rule::SrgFeasibility, Json{{"srg", to_json(primary)}}, depth + 1, Outcome::Refutes);
        return Conclusion::NonexistenceCertified;
    }
    SrgRecord rec = cert.db().lookup(primary);
    Outcome o = rec.status == SrgStatus::NotExists ? Outcome::Refutes
                : rec.status == SrgStatus::Exists  ? Outcome::Confirms
                                                   : Outcome::Open;
    cert.add(Rule::SrgDatabase, Json{{"srg", to_json(primary)}}, depth + 1, o);
    if (rec.status == SrgStatus::NotExists)
        return Conclusion::NonexistenceCertified;
    if (rec.status == SrgStatus::Exists)
        return Conclusion::ExistenceKnown;
    return Conclusion::Open;
}

/// One candidate angle of a line system.
inline Conclusion angle_branch(std::int64_t n, std::int64_t m, const QuadraticSurd& angle, int depth,
                               CertificateBuilder& cert)
{
    if (angle == QuadraticSurd(make_rational(1, 3))) {
        if (auto bound = lemmens_seidel_third(n); bound && m > *bound) {
            cert.add(Rule::LemmensSeidelThird, Json{{"dimension", n}, {"count", m}}, depth, Outcome::Refutes);
            return Conclusion::NonexistenceCertified;
        }
    }
    if (angle.sign() > 0 && angle < QuadraticSurd(1)) {
        if (auto bound = relative_bound(n, angle); bound && Rational(m) > *bound) {
            cert.add(Rule::RelativeBound, Json{{"dimension", n}, {"count", m}, {"angle", to_json(angle)}}, depth,
                     Outcome::Refutes);
            return Conclusion::NonexistenceCertified;
        }
    }
    if (m <= n) {
        cert.notes.push_back("angle " + angle.str() + ": M <= n, frame potential gives no information");
        return Conclusion::Open;
    }
    FramePotential fp = frame_potential_equiangular(n, m, angle);
    Json in{{"dimension", n}, {"count", m}, {"angle", to_json(angle)}};
    if (fp.violated) {
        cert.add(Rule::WelchTightness, in, depth, Outcome::Refutes);
        return Conclusion::NonexistenceCertified;
    }
    if (!fp.tight) {
        cert.add(Rule::WelchTightness, in, depth, Outcome::Open);
        cert.notes.push_back("angle " + angle.str() + ": frame potential " + to_string(fp.fp) +
                             " is above the minimum " + to_string(fp.minimum) + "; no rule applies");
        return Conclusion::Open;
    }
    cert.add(Rule::WelchTightness, in, depth, Outcome::Derives);
    return etf_chain(n, m, depth + 1, cert);
}

inline Conclusion lines_chain(std::int64_t n, std::int64_t m, const LinesOptions& opts, int depth,
                              CertificateBuilder& cert)
{
    if (m > gerzon_bound(n).bound) {
        cert.add(Rule::GerzonBound, Json{{"dimension", n}, {"count", m}}, depth, Outcome::Refutes);
        return Conclusion::NonexistenceCertified;
    }
    AngleCandidateSet lrs = lrs_angles(n, m, opts.threshold);
    std::vector<QuadraticSurd> branches;
    int branch_depth = depth;
    if (lrs.rule == AngleRule::Unconstrained) {
        if (!opts.angle) {
            cert.notes.push_back(std::to_string(m) + " lines in R^" + std::to_string(n) +
                                 ": below the two-distance cardinality threshold, angle unconstrained");
            return Conclusion::Open;
        }
        branches.push_back(*opts.angle);
    } else {
        for (const Rational& c : lrs.candidates)
            if (!opts.angle || *opts.angle == QuadraticSurd(c))
                branches.emplace_back(c);
        Json in{{"dimension", n}, {"count", m}, {"threshold", to_string(opts.threshold)}};
        if (branches.empty()) {
            cert.add(Rule::LrsAngles, in, depth, Outcome::Refutes);
            return Conclusion::NonexistenceCertified;
        }
        cert.add(Rule::LrsAngles, in, depth, Outcome::Derives);
        branch_depth = depth + 1;
    }
    std::vector<Conclusion> results;
    for (const QuadraticSurd& a : branches)
        results.push_back(angle_branch(n, m, a, branch_depth, cert));
    return combine(results);
}

inline void shift_depth(std::vector<DeductionStep>& steps, int by)
{
    for (DeductionStep& s : steps)
        s.depth += by;
}

constexpr int kMaxSrgHops = 2;

inline Conclusion srg_chain(const SrgParams& p, int hops, std::set<SrgParams> visited, int depth,
                            CertificateBuilder& cert)
{
    Feasibility feas = feasible(p);
    cert.add(Rule::SrgFeasibility, Json{{"srg", to_json(p)}}, depth, feas.ok ? Outcome::Derives : Outcome::Refutes);
    if (!feas.ok)
        return Conclusion::NonexistenceCertified;

    SrgRecord rec = cert.db().lookup(p);
    if (rec.status == SrgStatus::NotExists) {
        cert.add(Rule::SrgDatabase, Json{{"srg", to_json(p)}}, depth + 1, Outcome::Refutes);
        return Conclusion::NonexistenceCertified;
    }
    if (rec.status == SrgStatus::Exists) {
        cert.add(Rule::SrgDatabase, Json{{"srg", to_json(p)}}, depth + 1, Outcome::Confirms);
        return Conclusion::ExistenceKnown;
    }
    cert.add(Rule::SrgDatabase, Json{{"srg", to_json(p)}}, depth + 1, Outcome::Open);
    if (hops >= kMaxSrgHops) {
        cert.notes.push_back(p.str() + ": derived-object search depth exhausted");
        return Conclusion::Open;
    }
    visited.insert(p);
    try {
        visited.insert(complement(p));
    } catch (const DomainError&) {
    }

    const int route_depth = depth + 2;
    const Json srg_in{{"srg", to_json(p)}};
    auto try_route = [&](auto&& build) {
        CertificateBuilder attempt(cert.db());
        if (build(attempt) == Conclusion::NonexistenceCertified) {
            cert.append(attempt);
            return true;
        }
        return false;
    };

    std::vector<TwoDistanceSpec> projections;
    std::vector<Eigenspace> spaces;
    for (Eigenspace e : {Eigenspace::R, Eigenspace::S}) {
        try {
            projections.push_back(project_srg(p, e));
            spaces.push_back(e);
        } catch (const DomainError&) {
        }
    }
    auto projection_in = [&](Eigenspace e) {
        return Json{{"srg", to_json(p)}, {"eigenspace", std::string(to_string(e))}};
    };
    auto lines_of = [&](const TwoDistanceSpec& t) { return t.dimension; };

    // 1. A projection that is already equiangular is a line system in its own dimension.
    for (std::size_t i = 0; i < projections.size(); ++i) {
        const TwoDistanceSpec& t = projections[i];
        if (!t.equiangular())
            continue;
        if (try_route([&](CertificateBuilder& c) {
                c.add(Rule::Projection, projection_in(spaces[i]), route_depth, Outcome::Derives);
                return lines_chain(lines_of(t), t.size, {}, route_depth + 1, c);
            }))
            return Conclusion::NonexistenceCertified;
    }

    // 2. Regular two-graph descent to v - 1 vertices.
    if (regular_two_graph_condition(p)) {
        try {
            SrgParams q = fjg_descent(p);
            if (!visited.count(q) && try_route([&](CertificateBuilder& c) {
                    c.add(Rule::FjgDescent, srg_in, route_depth, Outcome::Derives);
                    return srg_chain(q, hops + 1, visited, route_depth + 1, c);
                }))
                return Conclusion::NonexistenceCertified;
        } catch (const DomainError& e) {
            cert.notes.push_back(p.str() + ": descent not applicable (" + e.what() + ")");
        }
    }

    // 3. Shifted lift of a non-equiangular projection.
    std::vector<std::optional<ShiftedLift>> lifts(projections.size());
    for (std::size_t i = 0; i < projections.size(); ++i) {
        const TwoDistanceSpec& t = projections[i];
        if (t.equiangular())
            continue;
        try {
            lifts[i] = shifted_lift(t);
        } catch (const DomainError&) {
            continue;
        }
        const ShiftedLift& lift = *lifts[i];
        Json lift_in{{"dimension", t.dimension}, {"size", t.size}, {"inner_a", to_json(t.inner_a)},
                     {"inner_b", to_json(t.inner_b)}};
        if (try_route([&](CertificateBuilder& c) {
                c.add(Rule::Projection, projection_in(spaces[i]), route_depth, Outcome::Derives);
                c.add(Rule::ShiftedLift, lift_in, route_depth + 1, Outcome::Derives);
                return lines_chain(lift.lifted.dimension, lift.lifted.size, {}, route_depth + 2, c);
            }))
            return Conclusion::NonexistenceCertified;
    }

    // 4. Complementary ETF of any tight equiangular system found above.
    for (std::size_t i = 0; i < projections.size(); ++i) {
        const TwoDistanceSpec& t = projections[i];
        bool direct = t.equiangular();
        if (!direct && !(lifts[i] && lifts[i]->lifted.tight_frame))
            continue;
        const TwoDistanceSpec& etf = direct ? t : lifts[i]->lifted;
        if (etf.size <= etf.dimension + 1)
            continue;
        if (frame_potential_equiangular(etf.dimension, etf.size, etf.inner_a).tight == false)
            continue;
        if (try_route([&](CertificateBuilder& c) {
                c.add(Rule::Projection, projection_in(spaces[i]), route_depth, Outcome::Derives);
                int d = route_depth + 1;
                if (!direct) {
                    c.add(Rule::ShiftedLift,
                          Json{{"dimension", t.dimension}, {"size", t.size}, {"inner_a", to_json(t.inner_a)},
                               {"inner_b", to_json(t.inner_b)}},
                          d++, Outcome::Derives);
                }
                c.add(Rule::ComplementaryEtf, Json{{"dimension", etf.dimension}, {"count", etf.size}}, d,
                      Outcome::Derives);
                return lines_chain(etf.size - etf.dimension, etf.size, {}, d + 1, c);
            }))
            return Conclusion::NonexistenceCertified;
    }

    cert.notes.push_back(p.str() + ": no derived object is known not to exist");
    return Conclusion::Open;
}

} // namespace detail

/// Verdict on M equiangular lines in R^n.
inline Verdict lines_verdict(std::int64_t n, std::int64_t m, const LinesOptions& opts, const SrgDatabase& db)
{
    if (n < 2 || m < 1)
        throw DomainError("lines query needs n >= 2 and M >= 1");
    if (opts.angle && (opts.angle->sign() <= 0 || !(*opts.angle < QuadraticSurd(1))))
        throw DomainError("angle must lie in (0, 1)");
    if (opts.angle && !(*opts.angle * *opts.angle).is_rational())
        throw DomainError("the square of the angle must be rational");
    Verdict v;
    v.query = Json{{"kind", "lines"},
                   {"dimension", n},
                   {"count", m},
                   {"angle", detail::angle_json(opts.angle)},
                   {"threshold", to_string(opts.threshold)},
                   {"monotone", opts.monotone}};
    detail::CertificateBuilder cert(db);
    v.conclusion = detail::lines_chain(n, m, opts, 0, cert);

    if (opts.monotone && v.conclusion != Conclusion::NonexistenceCertified) {
        LinesOptions base_opts = opts;
        base_opts.monotone = false;
        // Without a fixed angle every count up to the LRS threshold is open.
        const std::int64_t lrs_floor = opts.threshold == LrsThreshold::Strict2n3 ? 2 * n + 4 : 2 * n + 2;
        const std::int64_t first = opts.angle ? 2 : std::min(lrs_floor, gerzon_bound(n).bound + 1);
        for (std::int64_t base = first; base < m; ++base) {
            detail::CertificateBuilder attempt(db);
            if (detail::lines_chain(n, base, base_opts, 1, attempt) != Conclusion::NonexistenceCertified)
                continue;
            detail::CertificateBuilder sub(db);
            sub.add(Rule::Monotonicity,
                    Json{{"dimension", n},
                         {"base_count", base},
                         {"count", m},
                         {"angle", detail::angle_json(opts.angle)},
                         {"threshold", to_string(opts.threshold)}},
                    0, Outcome::Derives);
            sub.steps.insert(sub.steps.end(), attempt.steps.begin(), attempt.steps.end());
            sub.notes = cert.notes;
            sub.notes.push_back("subsumed by the certificate for " + std::to_string(base) + " lines in R^" +
                                std::to_string(n));
            cert.steps = std::move(sub.steps);
            cert.notes = std::move(sub.notes);
            v.conclusion = Conclusion::NonexistenceCertified;
            break;
        }
    }
    v.steps = std::move(cert.steps);
    v.notes = std::move(cert.notes);
    return v;
}

inline Verdict lines_verdict(std::int64_t n, std::int64_t m, const SrgDatabase& db = SrgDatabase::seed())
{
    return lines_verdict(n, m, LinesOptions{}, db);
}

/// Verdict on srg(v,k,lambda,mu): feasibility, database, then derived objects
/// (equiangular projection, two-graph descent, shifted lift, complementary ETF),
/// searched at most two hops deep.
inline Verdict srg_verdict(const SrgParams& p, const SrgDatabase& db = SrgDatabase::seed())
{
    Verdict v;
    v.query = Json{{"kind", "srg"}, {"srg", to_json(p)}};
    detail::CertificateBuilder cert(db);
    v.conclusion = detail::srg_chain(p, 0, {}, 0, cert);
    v.steps = std::move(cert.steps);
    v.notes = std::move(cert.notes);
    if (p == SrgParams{76, 30, 8, 14} && v.conclusion == Conclusion::NonexistenceCertified)
        v.notes.push_back("independent nonexistence proof: Bondarenko-Prymak-Radchenko [bon14]");
    return v;
}

/// Welch angle, complementary ETF and Waldron graph of ETF(n, M).
inline Verdict etf_verdict(std::int64_t n, std::int64_t m, const SrgDatabase& db = SrgDatabase::seed())
{
    if (n < 1 || m <= n)
        throw DomainError("etf query needs M > n >= 1");
    Verdict v;
    v.query = Json{{"kind", "etf"}, {"dimension", n}, {"count", m}};
    detail::CertificateBuilder cert(db);
    Json in{{"dimension", n}, {"count", m}};
    cert.add(Rule::WelchAngle, in, 0, Outcome::Derives);
    cert.add(Rule::ComplementaryEtf, in, 1, Outcome::Derives);
    v.conclusion = detail::etf_chain(n, m, 2, cert);
    v.steps = std::move(cert.steps);
    v.notes = std::move(cert.notes);
    return v;
}

/// Table of the three SDP-extremal ETF candidates with Welch angle 1/7.
inline Json table1_report(const SrgDatabase& db = SrgDatabase::seed())
{
    static constexpr std::array<std::pair<std::int64_t, std::int64_t>, 3> rows = {{{42, 288}, {45, 540}, {46, 736}}};
    Json out{{"report", "table1"}, {"rows", Json::array()}};
    for (auto [n, m] : rows) {
        detail::CertificateBuilder cert(db);
        Json in{{"dimension", n}, {"count", m}};
        cert.add(Rule::WelchAngle, in, 0, Outcome::Derives);
        cert.add(Rule::WaldronCorrespondence, in, 1, Outcome::Derives);
        auto pair = std::get<WaldronPair>(waldron_srg_of_etf(EtfSpec(n, m)));
        cert.add(Rule::FjgAscend, Json{{"srg", to_json(pair.complementary)}}, 2, Outcome::Derives);

        std::vector<SrgParams> sets{pair.primary};
        for (const SrgParams& s : fjg_ascend(pair.complementary))
            sets.push_back(s);

        Json srgs = Json::array();
        bool any_nonexistent = false;
        for (const SrgParams& s : sets) {
            Verdict sv = srg_verdict(s, db);
            std::string flag = sv.conclusion == Conclusion::NonexistenceCertified ? "N"
                               : sv.conclusion == Conclusion::ExistenceKnown  ? "E"
                                                                              : "o";
            any_nonexistent |= flag == "N";
            srgs.push_back(Json{{"srg", to_json(s)}, {"status", flag}, {"conclusion", to_string(sv.conclusion)}});
        }
        Verdict lv = lines_verdict(n, m, db);
        Json notes = Json::array();
        if (any_nonexistent)
            notes.push_back("nonexistence of an srg on " + std::to_string(m) +
                            " vertices is insufficient to refute ETF(" + std::to_string(n) + "," + std::to_string(m) +
                            "," + welch_angle(n, m).str() + "): descent maps such graphs to srg(" +
                            std::to_string(m - 1) + ",...), not conversely");
        Json steps = Json::array();
        for (const DeductionStep& s : cert.steps)
            steps.push_back(to_json(s));
        out["rows"].push_back(Json{{"dimension", n},
                                   {"count", m},
                                   {"angle", to_json(welch_angle(n, m))},
                                   {"srgs", srgs},
                                   {"etf_conclusion", to_string(lv.conclusion)},
                                   {"notes", notes},
                                   {"steps", steps}});
    }
    return out;
}

/// SRG parameter sets printed in the literature for the m = 3, 4 tight 5-design
/// families; checked against the derived family.
inline std::vector<SrgParams> literature_tight5_family(std::int64_t m)
{
    if (m == 3)
        return {{1127, 640, 396, 320}, {1128, 644, 400, 324}, {1128, 560, 316, 240}};
    if (m == 4)
        return {{3159, 1408, 1064, 702}, {3160, 1575, 870, 700}, {3160, 1755, 1050, 880}};
    return {};
}

inline Json tight5_report(std::int64_t m, const SrgDatabase& db = SrgDatabase::seed())
{
    Tight5Family fam = tight5_srg_family(m);
    const Tight5Params& tp = fam.params;
    detail::CertificateBuilder cert(db);
    cert.add(Rule::Tight5Family, Json{{"m", m}}, 0, Outcome::Derives);
    cert.add(Rule::Tight4Params, Json{{"m", m}}, 1, Outcome::Derives);

    const bool excluded = tight5_known_excluded(m);
    Json members = Json::array();
    for (const SrgParams& s : fam.members) {
        Verdict sv = srg_verdict(s, db);
        SrgRecord rec = db.lookup(s);
        Json entry{{"srg", to_json(s)},
                   {"database", to_string(rec.status)},
                   {"source", rec.source},
                   {"conclusion", to_string(sv.conclusion)}};
        if (excluded)
            entry["implied"] = "NotExists";
        members.push_back(entry);
    }

    Json corrections = Json::array();
    Json notes = Json::array();
    for (const SrgParams& printed : literature_tight5_family(m)) {
        if (std::find(fam.members.begin(), fam.members.end(), printed) != fam.members.end())
            continue;
        auto match = std::find_if(fam.members.begin(), fam.members.end(),
                                  [&](const SrgParams& s) { return s.v == printed.v && s.k == printed.k; });
        std::string note = "misprint: " + printed.str();
        if (!counting_identity(printed)) {
            note += " fails the counting identity k(k-lambda-1) = (v-k-1)mu: " + std::to_string(printed.k) + "*" +
                    std::to_string(printed.k - printed.lambda - 1) + " = " +
                    std::to_string(printed.k * (printed.k - printed.lambda - 1)) + " but " +
                    std::to_string(printed.v - printed.k - 1) + "*" + std::to_string(printed.mu) + " = " +
                    std::to_string((printed.v - printed.k - 1) * printed.mu);
        }
        Json fix{{"printed", to_json(printed)}, {"corrected", nullptr}, {"note", note}};
        if (match != fam.members.end()) {
            fix["corrected"] = to_json(*match);
            note += "; derived parameters are " + match->str();
            fix["note"] = note;
        }
        corrections.push_back(fix);
        notes.push_back(note);
    }
    if (excluded)
        notes.push_back("no tight 5-design exists for m = " + std::to_string(m) +
                        " [ban04, neb12], so ETF(" + std::to_string(tp.n) + "," + std::to_string(tp.size) + "," +
                        to_string(tp.angle) + ") and every SRG in its family do not exist");

    Tight4Params t4 = tight4_params(m);
    auto zeros = c2_zeros(tp.n);
    Json steps = Json::array();
    for (const DeductionStep& s : cert.steps)
        steps.push_back(to_json(s));
    return Json{{"report", "tight5"},
                {"m", m},
                {"dimension", tp.n},
                {"lines", tp.size},
                {"design_size", tp.n * (tp.n + 1)},
                {"angle", to_string(tp.angle)},
                {"c2_zeros", Json::array({to_json(zeros[0]), to_json(zeros[1])})},
                {"tight4", Json{{"dimension", t4.n},
                                {"size", t4.size},
                                {"inner_a", to_string(t4.inner_a)},
                                {"inner_b", to_string(t4.inner_b)}}},
                {"waldron", Json{{"primary", to_json(fam.waldron.primary)},
                                 {"complementary", to_json(fam.waldron.complementary)}}},
                {"literature_excluded", excluded},
                {"members", members},
                {"corrections", corrections},
                {"notes", notes},
                {"steps", steps}};
}

inline Json project_report(const SrgParams& p, Eigenspace which)
{
    TwoDistanceSpec t = project_srg(p, which);
    SrgSpectrum sp = spectrum(p);
    Json out{{"report", "project"},
             {"srg", to_json(p)},
             {"eigenspace", std::string(to_string(which))},
             {"eigenvalue", to_json(which == Eigenspace::R ? sp.r : sp.s)}};
    out["projection"] = to_json(t);
    return out;
}

inline Json lift_report(const TwoDistanceSpec& t)
{
    ShiftedLift l = shifted_lift(t);
    return Json{{"report", "lift"},
                {"input", to_json(t)},
                {"dimension", l.lifted.dimension},
                {"size", l.lifted.size},
                {"angle", to_json(l.lifted.inner_a)},
                {"scale_sq", to_json(l.scale_sq)},
                {"height_sq", to_json(l.height_sq)},
                {"tight_frame", l.lifted.tight_frame}};
}

// ---- replay ----------------------------------------------------------------

/// Re-invokes the operation named by `rule` on recorded inputs.
inline Json evaluate(Rule rule, const Json& in, const SrgDatabase& db)
{
    auto dim = [&] { return in.at("dimension").get<std::int64_t>(); };
    auto count = [&] { return in.at("count").get<std::int64_t>(); };
    auto srg = [&] { return srg_from_json(in.at("srg")); };
    auto candidates_json = [](const AngleCandidateSet& s) {
        Json c = Json::array();
        for (const Rational& r : s.candidates)
            c.push_back(to_json(r));
        return Json{{"rule", to_string(s.rule)}, {"candidates", c}};
    };

    switch (rule) {
    case Rule::NeumannAngles:
        return candidates_json(neumann_angles(dim(), count(), in.value("cutoff", std::int64_t{4})));
    case Rule::LrsAngles:
        return candidates_json(lrs_angles(dim(), count(), parse_lrs_threshold(in.at("threshold").get<std::string>())));
    case Rule::LemmensSeidelThird: {
        auto b = lemmens_seidel_third(dim());
        return Json{{"bound", b ? Json(*b) : Json(nullptr)}, {"refutes", b && count() > *b}};
    }
    case Rule::RelativeBound: {
        auto b = relative_bound(dim(), surd_from_json(in.at("angle")));
        return Json{{"bound", b ? to_json(*b) : Json(nullptr)}, {"refutes", b && Rational(count()) > *b}};
    }
    case Rule::GerzonBound: {
        GerzonBound g = gerzon_bound(dim());
        return Json{{"bound", g.bound}, {"attaining_angle", to_json(g.attaining_angle)}, {"refutes", count() > g.bound}};
    }
    case Rule::WelchAngle: {
        QuadraticSurd a = welch_angle(dim(), count());
        return Json{{"angle", to_json(a)}, {"rational", a.is_rational()}};
    }
    case Rule::WelchTightness: {
        FramePotential fp = frame_potential_equiangular(dim(), count(), surd_from_json(in.at("angle")));
        return Json{{"frame_potential", to_json(fp.fp)},
                    {"minimum", to_json(fp.minimum)},
                    {"tight", fp.tight},
                    {"violated", fp.violated}};
    }
    case Rule::WaldronCorrespondence:
    case Rule::WaldronIntegrality: {
        WaldronResult w = waldron_srg_of_etf(EtfSpec(dim(), count()));
        if (auto* bad = std::get_if<NonIntegral>(&w))
            return Json{{"degree", to_json(bad->degree)}, {"integral", false}};
        const auto& pair = std::get<WaldronPair>(w);
        return Json{{"degree", pair.primary.k},
                    {"integral", true},
                    {"primary", to_json(pair.primary)},
                    {"complementary", to_json(pair.complementary)}};
    }
    case Rule::SrgDatabase: {
        SrgRecord r = db.lookup(srg());
        return Json{{"status", to_string(r.status)}, {"source", r.source}, {"via_complement", r.via_complement}};
    }
    case Rule::SrgFeasibility: {
        Feasibility f = feasible(srg());
        return Json{{"ok", f.ok}, {"failures", f.failures}};
    }
    case Rule::Complement:
        return Json{{"srg", to_json(complement(srg()))}};
    case Rule::FjgDescent:
        return Json{{"srg", to_json(fjg_descent(srg()))}};
    case Rule::FjgAscend: {
        Json sources = Json::array();
        for (const SrgParams& s : fjg_ascend(srg()))
            sources.push_back(to_json(s));
        return Json{{"sources", sources}};
    }
    case Rule::Projection:
        return to_json(project_srg(srg(), parse_eigenspace(in.at("eigenspace").get<std::string>())));
    case Rule::ShiftedLift: {
        TwoDistanceSpec t = make_two_distance(in.at("dimension").get<std::int64_t>(), in.at("size").get<std::int64_t>(),
                                              surd_from_json(in.at("inner_a")), surd_from_json(in.at("inner_b")), 2,
                                              true);
        ShiftedLift l = shifted_lift(t);
        return Json{{"dimension", l.lifted.dimension},
                    {"angle", to_json(l.lifted.inner_a)},
                    {"scale_sq", to_json(l.scale_sq)},
                    {"height_sq", to_json(l.height_sq)},
                    {"tight_frame", l.lifted.tight_frame}};
    }
    case Rule::ComplementaryEtf: {
        EtfSpec c = complementary_etf(EtfSpec(dim(), count()));
        return Json{{"dimension", c.dimension()}, {"count", c.count()}, {"angle", to_json(c.angle())}};
    }
    case Rule::Tight5Family: {
        Tight5Family f = tight5_srg_family(in.at("m").get<std::int64_t>());
        Json members = Json::array();
        for (const SrgParams& s : f.members)
            members.push_back(to_json(s));
        return Json{{"dimension", f.params.n},
                    {"lines", f.params.size},
                    {"angle", to_json(f.params.angle)},
                    {"members", members}};
    }
    case Rule::Tight4Params: {
        Tight4Params t = tight4_params(in.at("m").get<std::int64_t>());
        return Json{{"dimension", t.n}, {"size", t.size}, {"inner_a", to_json(t.inner_a)}, {"inner_b", to_json(t.inner_b)}};
    }
    case Rule::Monotonicity: {
        LinesOptions o;
        o.angle = detail::angle_from_json(in.at("angle"));
        o.threshold = parse_lrs_threshold(in.at("threshold").get<std::string>());
        const std::int64_t base = in.at("base_count").get<std::int64_t>();
        Verdict b = lines_verdict(dim(), base, o, db);
        return Json{{"base_conclusion", to_string(b.conclusion)}, {"subsumes", count() > base}};
    }
    }
    throw DomainError("unhandled rule");
}

/// Replays every step and checks the tree shape against the conclusion.
/// Returns a list of problems; empty means the certificate is sound.
inline std::vector<std::string> audit(const Verdict& v, const SrgDatabase& db = SrgDatabase::seed())
{
    std::vector<std::string> problems;
    for (std::size_t i = 0; i < v.steps.size(); ++i) {
        const DeductionStep& s = v.steps[i];
        std::string where = "step " + std::to_string(i) + " (" + std::string(to_string(s.rule)) + ")";
        try {
            Json again = evaluate(s.rule, s.inputs, db);
            if (again != s.outputs)
                problems.push_back(where + ": replay gives " + again.dump() + ", recorded " + s.outputs.dump());
        } catch (const std::exception& e) {
            problems.push_back(where + ": replay failed: " + e.what());
        }
        if (s.citation.rfind(std::string(citation(s.rule)), 0) != 0)
            problems.push_back(where + ": citation does not match rule");
        if (s.rule == Rule::SrgDatabase && s.outputs.value("status", "") != "Open" &&
            s.outputs.value("source", "").empty())
            problems.push_back(where + ": database fact without source");
        if (i == 0 ? s.depth != 0 : s.depth > v.steps[i - 1].depth + 1)
            problems.push_back(where + ": malformed depth");
    }
    std::vector<std::size_t> leaf = leaves(v.steps);
    auto leaf_is = [&](Outcome o) {
        return [&, o](std::size_t i) { return v.steps[i].outcome == o; };
    };
    if (v.conclusion == Conclusion::NonexistenceCertified) {
        if (leaf.empty())
            problems.push_back("nonexistence claimed with an empty certificate");
        else if (!std::all_of(leaf.begin(), leaf.end(), leaf_is(Outcome::Refutes)))
            problems.push_back("nonexistence claimed but a leaf does not refute");
    }
    if (v.conclusion == Conclusion::ExistenceKnown && !std::any_of(leaf.begin(), leaf.end(), leaf_is(Outcome::Confirms)))
        problems.push_back("existence claimed but no leaf confirms");
    return problems;
}

} // namespace eqlines
