#pragma once

// Deduction steps, verdicts and their JSON form.
//
// A certificate is a tree stored in pre-order: every step carries its depth,
// and a step is a leaf when the following step is not deeper.

#include "eqlines/designs.hpp"
#include "eqlines/frames.hpp"
#include "eqlines/srg.hpp"
#include "eqlines/srg_database.hpp"

#include "json.hpp"

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eqlines {

using Json = nlohmann::ordered_json;

enum class Rule {
    NeumannAngles,
    LrsAngles,
    LemmensSeidelThird,
    RelativeBound,
    GerzonBound,
    WelchAngle,
    WelchTightness,
    WaldronCorrespondence,
    WaldronIntegrality,
    SrgDatabase,
    SrgFeasibility,
    Complement,
    FjgDescent,
    FjgAscend,
    Projection,
    ShiftedLift,
    ComplementaryEtf,
    Tight5Family,
    Tight4Params,
    Monotonicity,
};

struct RuleInfo {
    Rule rule;
    std::string_view name;
    std::string_view citation;
};

inline constexpr std::array<RuleInfo, 20> kRules = {{
    {Rule::NeumannAngles, "NeumannAngles", "Neumann: M > 2n forces angle 1/(2k-1) [lem73]"},
    {Rule::LrsAngles, "LrsAngles", "Larman-Rogers-Seidel two-distance theorem [lar77]; Neumaier refinement [neu81]"},
    {Rule::LemmensSeidelThird, "LemmensSeidelThird", "Lemmens-Seidel: angle 1/3, n >= 15 gives at most 2n-2 lines [lem73]"},
    {Rule::RelativeBound, "RelativeBound", "relative bound M <= n(1-c^2)/(1-nc^2) [lem73]"},
    {Rule::GerzonBound, "GerzonBound", "Gerzon bound M <= n(n+1)/2 [lem73]"},
    {Rule::WelchAngle, "WelchAngle", "Welch bound: an ETF(n,M) has angle sqrt((M-n)/(n(M-1))) [wel74]"},
    {Rule::WelchTightness, "WelchTightness", "Benedetto-Fickus: FP >= M^2/n with equality iff tight [ben03]"},
    {Rule::WaldronCorrespondence, "WaldronCorrespondence", "Waldron: ETF(n,M) exists iff srg(M-1,k,(3k-M)/2,k/2) exists [wal09]"},
    {Rule::WaldronIntegrality, "WaldronIntegrality", "Waldron: non-integral degree rules out ETF(n,M) for M > n+1 [wal09]"},
    {Rule::SrgDatabase, "SrgDatabase", "imported SRG existence fact"},
    {Rule::SrgFeasibility, "SrgFeasibility", "SRG necessary conditions: counting, integrality, Krein, absolute bound"},
    {Rule::Complement, "Complement", "complementary SRG parameters"},
    {Rule::FjgDescent, "FjgDescent", "regular two-graph descent, v = 4k-2lambda-2mu [fjg15]"},
    {Rule::FjgAscend, "FjgAscend", "inverse of the regular two-graph descent [fjg15]"},
    {Rule::Projection, "Projection", "eigenspace projection of an SRG is a two-distance 2-design [car01]"},
    {Rule::ShiftedLift, "ShiftedLift", "shifted 2-design is a two-distance tight frame [bgoy15]"},
    {Rule::ComplementaryEtf, "ComplementaryEtf", "ETF(n,M) exists iff ETF(M-n,M) exists [cas13]"},
    {Rule::Tight5Family, "Tight5Family", "tight 5-designs in R^n, n=(2m+1)^2-2, are ETF(n,n(n+1)/2) [del77b]"},
    {Rule::Tight4Params, "Tight4Params", "tight 4-designs in R^n, n=(2m+1)^2-3 [del77b]"},
    {Rule::Monotonicity, "Monotonicity", "a system of M' > M lines contains one of M lines"},
}};

inline std::string_view to_string(Rule r) { return kRules[static_cast<std::size_t>(r)].name; }
inline std::string_view citation(Rule r) { return kRules[static_cast<std::size_t>(r)].citation; }

inline Rule parse_rule(std::string_view s)
{
    for (const RuleInfo& info : kRules)
        if (info.name == s)
            return info.rule;
    throw DomainError("unknown rule '" + std::string(s) + "'");
}

/// How the engine used a step.
enum class Outcome { Derives, Refutes, Confirms, Open };

inline std::string_view to_string(Outcome o)
{
    switch (o) {
    case Outcome::Derives:
        return "derives";
    case Outcome::Refutes:
        return "refutes";
    case Outcome::Confirms:
        return "confirms";
    case Outcome::Open:
        return "open";
    }
    return "?";
}

inline Outcome parse_outcome(std::string_view s)
{
    for (Outcome o : {Outcome::Derives, Outcome::Refutes, Outcome::Confirms, Outcome::Open})
        if (to_string(o) == s)
            return o;
    throw DomainError("unknown outcome '" + std::string(s) + "'");
}

struct DeductionStep {
    Rule rule = Rule::SrgDatabase;
    Json inputs;
    Json outputs;
    std::string citation;
    int depth = 0;
    Outcome outcome = Outcome::Derives;
};

enum class Conclusion { NonexistenceCertified, ExistenceKnown, Open };

inline std::string_view to_string(Conclusion c)
{
    switch (c) {
    case Conclusion::NonexistenceCertified:
        return "NonexistenceCertified";
    case Conclusion::ExistenceKnown:
        return "ExistenceKnown";
    case Conclusion::Open:
        return "Open";
    }
    return "?";
}

inline Conclusion parse_conclusion(std::string_view s)
{
    for (Conclusion c : {Conclusion::NonexistenceCertified, Conclusion::ExistenceKnown, Conclusion::Open})
        if (to_string(c) == s)
            return c;
    throw DomainError("unknown conclusion '" + std::string(s) + "'");
}

struct Verdict {
    Json query;
    Conclusion conclusion = Conclusion::Open;
    std::vector<DeductionStep> steps;
    std::vector<std::string> notes;
};

// ---- value serialization -------------------------------------------------

inline Json to_json(const SrgParams& p) { return Json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}}; }

inline SrgParams srg_from_json(const Json& j)
{
    return {j.at("v").get<std::int64_t>(), j.at("k").get<std::int64_t>(), j.at("lambda").get<std::int64_t>(),
            j.at("mu").get<std::int64_t>()};
}

inline Json to_json(const QuadraticSurd& x) { return x.str(); }
inline QuadraticSurd surd_from_json(const Json& j) { return parse_surd(j.get<std::string>()); }
inline Json to_json(const Rational& x) { return to_string(x); }

inline Json to_json(const TwoDistanceSpec& t)
{
    return Json{{"dimension", t.dimension},   {"size", t.size},
                {"inner_a", to_json(t.inner_a)}, {"inner_b", to_json(t.inner_b)},
                {"equiangular", t.equiangular()}, {"design_strength", t.design_strength},
                {"tight_frame", t.tight_frame}};
}

inline Json to_json(const DeductionStep& s)
{
    return Json{{"rule", to_string(s.rule)}, {"inputs", s.inputs},     {"outputs", s.outputs},
                {"citation", s.citation},    {"depth", s.depth},       {"outcome", to_string(s.outcome)}};
}

inline DeductionStep step_from_json(const Json& j)
{
    DeductionStep s;
    s.rule = parse_rule(j.at("rule").get<std::string>());
    s.inputs = j.at("inputs");
    s.outputs = j.at("outputs");
    s.citation = j.at("citation").get<std::string>();
    s.depth = j.value("depth", 0);
    s.outcome = parse_outcome(j.value("outcome", std::string("derives")));
    return s;
}

inline Json to_json(const Verdict& v)
{
    Json steps = Json::array();
    for (const DeductionStep& s : v.steps)
        steps.push_back(to_json(s));
    return Json{{"query", v.query}, {"conclusion", to_string(v.conclusion)}, {"steps", steps}, {"notes", v.notes}};
}

inline Verdict verdict_from_json(const Json& j)
{
    Verdict v;
    v.query = j.at("query");
    v.conclusion = parse_conclusion(j.at("conclusion").get<std::string>());
    for (const Json& s : j.at("steps"))
        v.steps.push_back(step_from_json(s));
    v.notes = j.at("notes").get<std::vector<std::string>>();
    return v;
}

/// Indices of leaf steps in a pre-order certificate.
inline std::vector<std::size_t> leaves(const std::vector<DeductionStep>& steps)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < steps.size(); ++i)
        if (i + 1 == steps.size() || steps[i + 1].depth <= steps[i].depth)
            out.push_back(i);
    return out;
}

} // namespace eqlines
