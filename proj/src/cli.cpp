#include "mixjoin/cli.hpp"

#include "mixjoin/error.hpp"
#include "mixjoin/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace mixjoin {

namespace {

using json_io::json;

struct Options {
    std::string expr;
    int vars = 2;
    int axis = 0;
    std::string bundle;
    std::string out_path;
    bool json_output = false;
    std::uint64_t seed = 0;
    int budget = 64;
    double radius = 0.5;
    double target = 1e-3;
    double tolerance = 1e-9;
    int samples = 4;
    int weight_bound = 12;
    std::string words;
    std::string rep;
};

struct Outcome {
    json report;
    std::string text;
    int code = ExitSuccess;
};

DegeneracyBudget degeneracy_budget(const Options& o) {
    DegeneracyBudget b;
    b.multistarts = o.budget;
    b.tolerance = o.tolerance;
    b.seed = o.seed;
    return b;
}

TamenessConfig tameness_config(const Options& o) {
    TamenessConfig c;
    c.budget = degeneracy_budget(o);
    c.samples_per_radius = o.samples;
    c.weight_bound = o.weight_bound;
    return c;
}

OracleConfig oracle_config(const Options& o) {
    OracleConfig c;
    c.radius = o.radius;
    c.target = o.target;
    return c;
}

json config_json(const Options& o) {
    TamenessConfig t = tameness_config(o);
    OracleConfig oc = oracle_config(o);
    json radii = json::array();
    for (const auto& r : t.radii) radii.push_back(rational_to_string(r));
    return {{"seed", o.seed},
            {"multistarts", o.budget},
            {"max_iterations", t.budget.max_iterations},
            {"tolerance", o.tolerance},
            {"tameness_radii", radii},
            {"samples_per_radius", o.samples},
            {"weight_bound", o.weight_bound},
            {"oracle_target", oc.target},
            {"oracle_radius", oc.radius},
            {"oracle_max_cells", oc.max_cells},
            {"oracle_max_depth", oc.max_depth}};
}

std::string config_text(const Options& o) {
    std::ostringstream os;
    os << "config: seed=" << o.seed << " multistarts=" << o.budget << " tolerance=" << o.tolerance
       << " tameness radii={1/2,1/4,1/8} samples=" << o.samples << " weight-bound=" << o.weight_bound
       << " oracle target=" << o.target << " radius=" << o.radius << "\n";
    return os.str();
}

std::string point_text(const LatticePoint& p) {
    std::string s = "(";
    for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
    return s + ")";
}

std::string witness_text(const std::optional<Witness>& w) {
    if (!w) return "";
    std::ostringstream os;
    os << " witness (";
    if (w->exact) {
        for (std::size_t k = 0; k < w->exact_point.size(); ++k) os << (k ? ", " : "") << w->exact_point[k].to_string();
    } else {
        os.precision(12);
        for (std::size_t k = 0; k < w->point.size(); ++k)
            os << (k ? ", " : "") << w->point[k].real() << (w->point[k].imag() < 0 ? "" : "+") << w->point[k].imag()
               << "i";
    }
    os << ") residual " << w->residual;
    return os.str();
}

Outcome cmd_analyze(const Options& o) {
    if (o.vars < 1) throw InputError("--vars must be at least 1");
    MixedPolynomial g = parse(o.expr, o.vars);
    if (g.is_zero()) throw InputError("the zero polynomial has no Newton boundary");
    Outcome r;
    std::ostringstream os;
    auto poly = compact_faces(g);
    auto sets = index_sets(g);
    auto strata = canonical_strata(g);
    auto verdicts = check_strong_nondegeneracy(g, degeneracy_budget(o));
    auto tame = check_local_tameness(g, tameness_config(o));

    json sets_json{{"nonvanishing", json::array()}, {"vanishing", json::array()}};
    for (const auto& s : sets.nonvanishing) sets_json["nonvanishing"].push_back(std::vector<int>(s.begin(), s.end()));
    for (const auto& s : sets.vanishing) sets_json["vanishing"].push_back(std::vector<int>(s.begin(), s.end()));
    json strata_json = json::array();
    for (const auto& s : strata)
        strata_json.push_back({{"I", std::vector<int>(s.subset.begin(), s.subset.end())},
                               {"kind", stratum_kind_name(s.kind)},
                               {"defining", s.defining.to_string()},
                               {"label", s.label}});
    json verdicts_json = json::array();
    for (const auto& v : verdicts) verdicts_json.push_back(json_io::verdict_to_json(v));
    json tame_json = json::array();
    for (const auto& t : tame) tame_json.push_back(json_io::tameness_to_json(t));
    bool strongly = std::all_of(verdicts.begin(), verdicts.end(),
                                [](const Verdict& v) { return v.status == VerdictStatus::Verified; });
    std::string tame_status = "VERIFIED";
    for (const auto& t : tame) {
        if (t.status == VerdictStatus::Refuted) tame_status = "REFUTED";
        else if (t.status == VerdictStatus::Unknown && tame_status != "REFUTED") tame_status = "UNKNOWN";
    }
    r.report = {{"command", "analyze"},
                {"config", config_json(o)},
                {"expr", g.to_string()},
                {"vars", o.vars},
                {"polygon", json_io::polygon_to_json(poly)},
                {"convenient", is_convenient(g)},
                {"index_sets", sets_json},
                {"strata", strata_json},
                {"verdicts", verdicts_json},
                {"strongly_nondegenerate", strongly ? "VERIFIED" : "UNRESOLVED"},
                {"tameness", tame_json},
                {"locally_tame", tame_status}};

    os << "g = " << g.to_string() << " (n = " << o.vars << ")\n";
    os << "support:";
    for (const auto& p : poly.support) os << " " << point_text(p);
    int vertices = 0, edges = 0;
    for (const auto& f : poly.faces) (f.dim == 0 ? vertices : edges)++;
    os << "\ncompact faces: " << vertices << " vertices, " << edges << " edges\n";
    os << "convenient: " << (is_convenient(g) ? "true" : "false") << "\n";
    os << "I_nv:";
    for (const auto& s : sets.nonvanishing) os << " " << index_set_to_string(s);
    os << "\nI_v:";
    if (sets.vanishing.empty()) os << " none";
    for (const auto& s : sets.vanishing) os << " " << index_set_to_string(s);
    os << "\nstrata:\n";
    for (const auto& s : strata) os << "  " << s.label << "\n";
    os << "strong non-degeneracy:\n";
    for (const auto& v : verdicts) {
        os << "  " << (v.face.dim == 0 ? "vertex" : "edge") << " ";
        for (const auto& p : v.face.lattice_points) os << point_text(p);
        os << " g_face = " << v.face_function.to_string() << ": " << status_name(v.status) << " [" << v.rule << "]"
           << witness_text(v.witness) << "\n    " << v.evidence << "\n";
    }
    os << "local tameness: " << (tame.empty() ? "VERIFIED (vacuous, I_v empty)" : tame_status) << "\n";
    for (const auto& t : tame)
        os << "  I = " << index_set_to_string(t.subset) << ": " << status_name(t.status) << " [" << t.rule << "]"
           << witness_text(t.witness) << "\n    " << t.evidence << "\n";
    os << config_text(o);
    r.text = os.str();
    return r;
}

std::string count_text(const std::string& label, const FiberCount& c) {
    std::ostringstream os;
    os << label << ": " << (c.count ? std::to_string(*c.count) : std::string("UNDEFINED")) << " ["
       << count_method_name(c.method) << "]";
    if (c.formula) os << " formula " << *c.formula;
    if (c.oracle) {
        if (c.oracle->exact()) os << " oracle " << c.oracle->lower;
        else os << " oracle [" << c.oracle->lower << ", " << c.oracle->upper << "]";
    }
    os << "\n    " << c.note << "\n";
    return os.str();
}

Outcome cmd_count(const Options& o) {
    if (o.axis != 0 && o.axis != 1 && o.axis != 2) throw InputError("--axis must be 1 or 2");
    MixedPolynomial g = parse(o.expr, o.axis == 0 ? 1 : 2);
    auto c = o.axis == 0 ? count_axis_restriction(g, oracle_config(o)) : count_fiber_points(g, o.axis, oracle_config(o));
    Outcome r;
    r.report = {{"command", "count"},
                {"config", config_json(o)},
                {"expr", g.to_string()},
                {"axis", o.axis == 0 ? json(nullptr) : json(o.axis)},
                {"result", json_io::fiber_count_to_json(c)}};
    std::ostringstream os;
    os << "g = " << g.to_string() << "\n";
    if (c.factorization) {
        const auto& f = *c.factorization;
        os << "lowest part: c = " << f.c.to_string() << ", a = " << f.a << ", b = " << f.b << ", d_low = " << f.d_low
           << ", d_high = " << f.d_high << ", factors:";
        if (f.factors.empty()) os << " none";
        for (const auto& lf : f.factors)
            os << " (delta = " << (lf.exact_delta ? lf.exact_delta->to_string() : std::to_string(lf.delta.real()) + "+" +
                                                                                      std::to_string(lf.delta.imag()) + "i")
               << ", mu = " << lf.multiplicity << ")";
        os << "\n";
    }
    os << count_text(o.axis == 0 ? std::string("count") : "n" + std::to_string(o.axis), c) << config_text(o);
    r.text = os.str();
    if (c.method == CountMethod::MismatchReport) r.code = ExitFlagged;
    return r;
}

Outcome cmd_join(const Options& o) {
    auto bundle = json_io::bundle_from_json(json_io::read_json_file(o.bundle));
    auto rep = join_zeta(bundle.input, oracle_config(o));
    auto checks = cross_check(bundle.input, rep, bundle.chi_minus_axes(rep.n1, rep.n2), oracle_config(o));
    Outcome r;
    bool failed = std::any_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.status == CheckStatus::Fail; });
    r.report = {{"command", "join"},
                {"config", config_json(o)},
                {"g", bundle.input.g.to_string()},
                {"link", json_io::link_to_json(bundle.input.link)},
                {"report", json_io::join_report_to_json(rep)},
                {"zeta", json_io::zeta_to_json(rep.zeta)},
                {"checks", json_io::checks_to_json(checks)},
                {"flagged", failed}};
    std::ostringstream os;
    os << "g = " << bundle.input.g.to_string() << "\n";
    if (rep.counts_supplied) {
        os << "n1 = " << rep.n1 << ", n2 = " << rep.n2 << " (supplied)\n";
    } else {
        os << count_text("n1", *rep.count1) << count_text("n2", *rep.count2);
    }
    os << "zeta_f1 = " << rep.zeta_f1.to_string() << ", zeta_f2 = " << rep.zeta_f2.to_string() << "\n";
    os << "prefactor zeta_f1(lambda^" << rep.n2 << ") = " << rep.prefactor1.to_string() << "\n";
    os << "prefactor zeta_f2(lambda^" << rep.n1 << ") = " << rep.prefactor2.to_string() << "\n";
    os << "Alexander polynomial: " << rep.alexander.to_string() << "\n";
    for (const auto& f : rep.factors)
        os << "q = " << f.q << " (size " << f.size << "): det = " << f.det.to_string() << ", exponent " << f.exponent
           << "\n";
    os << "zeta_f = " << rep.zeta.to_string() << "  (up to +-lambda^u)\n";
    os << "factored: " << rep.zeta.to_factored_string() << "\n";
    os << "chi(F_f) = " << euler_from_zeta(rep.zeta) << "\n";
    os << "checks:\n";
    for (const auto& c : checks) os << "  " << c.name << ": " << check_status_name(c.status) << " - " << c.detail << "\n";
    os << config_text(o);
    r.text = os.str();
    if (failed) r.code = ExitFlagged;
    return r;
}

Outcome cmd_fox(const Options& o) {
    auto words = json_io::words_from_json(json_io::read_json_file(o.words));
    auto rin = json_io::representation_from_json(json_io::read_json_file(o.rep));
    for (int i = 1; i <= words.mu; ++i)
        if (!rin.rho.has("b" + std::to_string(i)))
            throw InputError("representation lacks an image for b" + std::to_string(i));
    QMatrix hder = h_der_matrix(words.words, rin.rho, rin.h);
    QMatrix delta = delta_matrix(rin.rho, words.mu);
    QMatrix rho_h = rin.rho.evaluate(rin.h);
    auto dims = cohomology_dims(rin.rho, words.mu);
    bool ladder = ladder_commutes(hder, delta, rho_h);
    auto failing = failing_relators(rin.rho, rin.relators);
    ZetaFunction z = zeta_gD_component(rho_h, hder);
    Outcome r;
    r.report = {{"command", "fox"},
                {"config", config_json(o)},
                {"words", json_io::words_to_json(words)},
                {"h_der", json_io::matrix_to_json(hder)},
                {"delta", json_io::matrix_to_json(delta)},
                {"rho_h", json_io::matrix_to_json(rho_h)},
                {"dims", {{"h0", dims.h0}, {"a", dims.a}, {"der", dims.der}, {"h1", dims.h1}, {"exact", dims.exact()}}},
                {"ladder_commutes", ladder},
                {"failing_relators", failing},
                {"zeta_gD", json_io::zeta_to_json(z)},
                {"zeta_gD_text", z.to_string()},
                {"determinant_factor", json_io::zeta_to_json(z.pow(-1))},
                {"determinant_factor_text", z.pow(-1).to_string()}};
    std::ostringstream os;
    os << "words:";
    for (const auto& w : words.words) os << " " << w.to_string();
    os << "\nh_Der (" << hder.rows() << "x" << hder.cols() << "):\n";
    for (std::size_t i = 0; i < hder.rows(); ++i) {
        os << "  [";
        for (std::size_t k = 0; k < hder.cols(); ++k) os << (k ? " " : "") << hder(i, k).to_string();
        os << "]\n";
    }
    os << "dim H^0 = " << dims.h0 << ", dim A = " << dims.a << ", dim Der = " << dims.der << ", dim H^1 = " << dims.h1
       << (dims.exact() ? " (exact)" : " (NOT exact)") << "\n";
    os << "ladder commutes: " << (ladder ? "yes" : "no") << "\n";
    if (!rin.relators.empty()) os << "failing relators: " << failing.size() << "\n";
    os << "Delta_h / Delta_Der = " << z.to_string() << "\n";
    os << "determinant factor Delta_Der / Delta_h = " << z.pow(-1).to_string() << "\n";
    os << config_text(o);
    r.text = os.str();
    if (!ladder || !dims.exact() || !failing.empty()) r.code = ExitFlagged;
    return r;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    f << content;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"mixjoin: Newton boundaries, degeneracy certificates and join zeta functions of mixed polynomials"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", o.out_path, "write the JSON report to this file");
        sub->add_flag("--json", o.json_output, "print JSON instead of text");
        sub->add_option("--seed", o.seed, "random seed for sampling");
        sub->add_option("--budget", o.budget, "multistarts per face")->check(CLI::Range(1, 100000));
        sub->add_option("--radius", o.radius, "counting oracle disk radius")->check(CLI::PositiveNumber);
        sub->add_option("--target", o.target, "counting oracle fiber value")->check(CLI::PositiveNumber);
    };

    auto* analyze = app.add_subcommand("analyze", "Newton boundary, strata and degeneracy verdicts");
    analyze->add_option("--expr", o.expr, "mixed polynomial")->required();
    analyze->add_option("--vars", o.vars, "number of variables");
    analyze->add_option("--samples", o.samples, "tameness samples per radius")->check(CLI::Range(1, 1000));
    analyze->add_option("--weight-bound", o.weight_bound, "tameness weight entry bound")->check(CLI::Range(1, 64));
    add_common(analyze);

    auto* join = app.add_subcommand("join", "zeta function of g(f1, f2) from a bundle");
    join->add_option("--bundle", o.bundle, "bundle JSON file")->required();
    add_common(join);

    auto* count = app.add_subcommand("count", "fiber points on a coordinate axis");
    count->add_option("--expr", o.expr, "mixed polynomial in z1, z2, or the restriction g' in z1 when --axis is omitted")
        ->required();
    count->add_option("--axis", o.axis, "axis j: fix z_j = 0")->check(CLI::Range(1, 2));
    add_common(count);

    auto* fox = app.add_subcommand("fox", "Fox calculus action on derivations");
    fox->add_option("--words", o.words, "words JSON file")->required();
    fox->add_option("--rep", o.rep, "representation JSON file")->required();
    add_common(fox);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ExitSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return ExitInputError;
    }

    try {
        Outcome r;
        if (analyze->parsed()) r = cmd_analyze(o);
        else if (join->parsed()) r = cmd_join(o);
        else if (count->parsed()) r = cmd_count(o);
        else r = cmd_fox(o);
        std::string dumped = r.report.dump(2) + "\n";
        if (!o.out_path.empty()) write_file(o.out_path, dumped);
        out << (o.json_output ? dumped : r.text);
        if (r.code == ExitFlagged) err << "flagged: cross-checks reported an inconsistency\n";
        return r.code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return ExitInputError;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return ExitInputError;
    } catch (const DomainError& e) {
        err << "input error: " << e.what() << "\n";
        return ExitInputError;
    } catch (const nlohmann::json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return ExitInputError;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return ExitInternalError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return ExitInternalError;
    }
}

} // namespace mixjoin
