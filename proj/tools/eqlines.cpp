// eqlines: command-line front end for the deduction engine.
//
// Exit codes: 0 verdict produced, 1 input error, 2 internal invariant violation.

#include "eqlines/eqlines.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace eqlines;

struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Json& j, bool json)
{
    if (json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << render_text(j);
}

void emit_verdict(const Verdict& v, const SrgDatabase& db, bool json)
{
    auto problems = audit(v, db);
    emit(to_json(v), json);
    if (!problems.empty()) {
        std::string all;
        for (const std::string& p : problems)
            all += "\n  " + p;
        throw InvariantViolation("certificate failed replay:" + all);
    }
}

AdjacencyMatrix read_adjacency(const std::string& path)
{
    if (path.rfind("builtin:", 0) == 0)
        return builtin_graph(path.substr(8));
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open adjacency file '" + path + "'");
    return ingest_adjacency(in);
}

Json verify_projection(const AdjacencyMatrix& a, Eigenspace which)
{
    SrgInference inferred = infer_srg(a);
    if (auto* bad = std::get_if<NotStronglyRegular>(&inferred))
        throw DomainError("graph is not strongly regular: " + bad->reason);
    const SrgParams p = std::get<SrgParams>(inferred);
    GramReport r = gram_by_projection(a, which);
    TwoDistanceSpec exact = project_srg(p, which);

    // Closed-form inner products against the numerical Gram matrix.
    Eigen::MatrixXd g = projection_gram(a, which);
    SrgSpectrum sp = spectrum(p);
    ProjectionInnerProducts ip = projection_inner_products(p, which == Eigenspace::R ? sp.s : sp.r);
    const double ea = ip.adjacent.to_double(), eb = ip.non_adjacent.to_double();
    double worst = 0;
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = i + 1; j < g.cols(); ++j)
            worst = std::max(worst, std::abs(g(i, j) - (a.adjacent(i, j) ? ea : eb)));
    constexpr double kAgreement = 1e-9;
    Json out{{"report", "verify"},
             {"srg", to_json(p)},
             {"eigenspace", std::string(to_string(which))},
             {"gram", to_json(r)},
             {"exact", to_json(exact)},
             {"max_deviation", worst},
             {"rank_matches_multiplicity", r.numeric_rank == exact.dimension}};
    if (worst > kAgreement || r.numeric_rank != exact.dimension) {
        emit(out, true);
        throw InvariantViolation("numerical projection disagrees with the closed form");
    }
    return out;
}

Json verify_seidel(const AdjacencyMatrix& a, const QuadraticSurd& c)
{
    GramReport r = gram_by_seidel(a, c.to_double());
    Json out{{"report", "verify"}, {"seidel_angle", to_json(c)}, {"gram", to_json(r)}};
    if (r.verdicts.psd)
        out["two_design"] = check_two_design(r);
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Equiangular lines, ETFs and strongly regular graphs with exact certificates"};
    app.require_subcommand(1);
    std::string db_path;
    app.add_option("--db", db_path, "SRG database file (defaults to the bundled seed)");

    bool json = false;
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "emit JSON"); };

    std::int64_t dim = 0, count = 0;
    std::string angle_text;
    bool monotone = false;
    std::string threshold_text = "Strict2n3";
    auto* lines = app.add_subcommand("lines", "verdict on M equiangular lines in R^n");
    lines->add_option("--dim", dim)->required();
    lines->add_option("--count", count)->required();
    lines->add_option("--angle", angle_text, "restrict to one common angle");
    lines->add_flag("--monotone", monotone, "allow subsumption by a smaller certified count");
    lines->add_option("--lrs-threshold", threshold_text, "Strict2n3 (M > 2n+3) or Neumaier2n1 (M > 2n+1)");
    add_json(lines);

    std::vector<std::int64_t> srg_args;
    auto* srg_cmd = app.add_subcommand("srg", "verdict on srg(v,k,lambda,mu)");
    srg_cmd->add_option("params", srg_args, "V K L MU")->required()->expected(4);
    add_json(srg_cmd);

    auto* etf = app.add_subcommand("etf", "Welch angle, Waldron pair and complementary ETF");
    etf->add_option("--dim", dim)->required();
    etf->add_option("--count", count)->required();
    add_json(etf);

    std::string eigenspace_text;
    auto* project = app.add_subcommand("project", "eigenspace projection of an SRG");
    project->add_option("params", srg_args, "V K L MU")->required()->expected(4);
    project->add_option("--eigenspace", eigenspace_text, "r or s (both when omitted)");
    add_json(project);

    std::int64_t size = 0;
    std::string a_text, b_text;
    auto* lift = app.add_subcommand("lift", "shifted lift of a two-distance 2-design");
    lift->add_option("--dim", dim)->required();
    lift->add_option("--size", size)->required();
    lift->add_option("--a", a_text)->required();
    lift->add_option("--b", b_text)->required();
    add_json(lift);

    auto* table1 = app.add_subcommand("table1", "SRG sets tied to ETFs with angle 1/7");
    add_json(table1);

    std::int64_t m = 0;
    auto* tight5 = app.add_subcommand("tight5", "SRG family of a tight 5-design");
    tight5->add_option("--m", m)->required();
    add_json(tight5);

    std::string adjacency, projection_text, seidel_text;
    auto* verify = app.add_subcommand("verify", "numerical cross-check of a graph");
    verify->add_option("--adjacency", adjacency, "adjacency file, or builtin:NAME")->required();
    auto* proj_opt = verify->add_option("--projection", projection_text, "r or s");
    auto* seidel_opt = verify->add_option("--seidel-angle", seidel_text, "P/Q or sqrt form");
    proj_opt->excludes(seidel_opt);
    add_json(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const SrgDatabase loaded = db_path.empty() ? SrgDatabase() : SrgDatabase::load(db_path);
        const SrgDatabase& db = db_path.empty() ? SrgDatabase::seed() : loaded;
        auto srg_params = [&] { return SrgParams{srg_args[0], srg_args[1], srg_args[2], srg_args[3]}; };

        if (*lines) {
            LinesOptions opts;
            if (!angle_text.empty())
                opts.angle = parse_surd(angle_text);
            opts.monotone = monotone;
            opts.threshold = parse_lrs_threshold(threshold_text);
            emit_verdict(lines_verdict(dim, count, opts, db), db, json);
        } else if (*srg_cmd) {
            emit_verdict(srg_verdict(srg_params(), db), db, json);
        } else if (*etf) {
            emit_verdict(etf_verdict(dim, count, db), db, json);
        } else if (*project) {
            if (eigenspace_text.empty()) {
                Json both = Json::array();
                for (Eigenspace e : {Eigenspace::R, Eigenspace::S})
                    both.push_back(project_report(srg_params(), e));
                emit(both, json);
            } else {
                emit(project_report(srg_params(), parse_eigenspace(eigenspace_text)), json);
            }
        } else if (*lift) {
            emit(lift_report(make_two_distance(dim, size, parse_surd(a_text), parse_surd(b_text), 2, true)), json);
        } else if (*table1) {
            emit(table1_report(db), json);
        } else if (*tight5) {
            emit(tight5_report(m, db), json);
        } else if (*verify) {
            AdjacencyMatrix a = read_adjacency(adjacency);
            if (!projection_text.empty())
                emit(verify_projection(a, parse_eigenspace(projection_text)), json);
            else if (!seidel_text.empty())
                emit(verify_seidel(a, parse_surd(seidel_text)), json);
            else
                throw DomainError("verify needs --projection or --seidel-angle");
        }
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
