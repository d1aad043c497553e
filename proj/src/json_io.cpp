#include "mixjoin/json_io.hpp"

#include "mixjoin/error.hpp"

#include <fstream>
#include <sstream>

namespace mixjoin::json_io {

namespace {

json complex_to_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

const json& require(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string(what) + " needs a \"" + key + "\" field");
    return j.at(key);
}

std::int64_t require_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

json points_to_json(const std::vector<LatticePoint>& pts) {
    json a = json::array();
    for (const auto& p : pts) a.push_back(p);
    return a;
}

json index_set_json(const IndexSet& s) { return json(std::vector<int>(s.begin(), s.end())); }

} // namespace

json coeff_to_json(const GaussianRational& c) {
    if (c.is_integer() && c.re().get_num().fits_slong_p()) return c.re().get_num().get_si();
    return c.to_string();
}

GaussianRational coeff_from_json(const json& j) {
    if (j.is_number_integer()) return GaussianRational(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        auto p = parse(j.get<std::string>(), 1);
        if (p.is_zero()) return GaussianRational(0);
        if (p.term_count() != 1)
            throw InputError("coefficient \"" + j.get<std::string>() + "\" is not a constant");
        const auto& [k, c] = *p.terms().begin();
        if (k.nu[0] != 0 || k.mu[0] != 0) throw InputError("coefficient \"" + j.get<std::string>() + "\" is not a constant");
        return c;
    }
    throw InputError("coefficients must be integers or literal strings such as \"1/2\"");
}

json matrix_to_json(const QMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(coeff_to_json(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

QMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw InputError("a matrix must be an array of rows");
    std::vector<std::vector<GaussianRational>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw InputError("a matrix row must be an array");
        std::vector<GaussianRational> row;
        for (const auto& e : r) row.push_back(coeff_from_json(e));
        rows.push_back(row);
    }
    return QMatrix::from_rows(rows);
}

json face_to_json(const Face& f) {
    return {{"dim", f.dim}, {"points", points_to_json(f.lattice_points)}, {"weight", f.supporting_weight.entries()}};
}

json polygon_to_json(const NewtonPolygon& p) {
    json faces = json::array();
    for (const auto& f : p.faces) faces.push_back(face_to_json(f));
    return {{"support", points_to_json(p.support)}, {"faces", faces}};
}

json witness_to_json(const std::optional<Witness>& w) {
    if (!w) return nullptr;
    json pt = json::array();
    for (auto z : w->point) pt.push_back(complex_to_json(z));
    json out{{"point", pt}, {"residual", w->residual}, {"exact", w->exact}};
    if (w->exact) {
        json ex = json::array();
        for (const auto& z : w->exact_point) ex.push_back(z.to_string());
        out["exact_point"] = ex;
    }
    return out;
}

json verdict_to_json(const Verdict& v) {
    return {{"face", face_to_json(v.face)},
            {"face_function", v.face_function.to_string()},
            {"status", status_name(v.status)},
            {"rule", v.rule},
            {"witness", witness_to_json(v.witness)},
            {"evidence", v.evidence}};
}

json tameness_to_json(const TamenessVerdict& t) {
    json inst = json::array();
    for (const auto& i : t.instances) {
        json a = json::array();
        for (const auto& z : i.a) a.push_back(z.to_string());
        inst.push_back({{"weight", i.weight.entries()},
                        {"radius", rational_to_string(i.radius)},
                        {"a", a},
                        {"restricted", i.restricted.to_string()},
                        {"status", status_name(i.status)}});
    }
    return {{"I", index_set_json(t.subset)}, {"status", status_name(t.status)}, {"rule", t.rule},
            {"witness", witness_to_json(t.witness)}, {"evidence", t.evidence}, {"instances", inst}};
}

json monodromy_to_json(const GradedMonodromy& m) {
    json blocks = json::array();
    for (const auto& [q, h] : m.blocks()) blocks.push_back({{"q", q}, {"matrix", matrix_to_json(h)}});
    return {{"blocks", blocks}};
}

GradedMonodromy monodromy_from_json(const json& j) {
    const json& blocks = require(j, "blocks", "graded monodromy");
    if (!blocks.is_array()) throw InputError("\"blocks\" must be an array");
    std::map<int, QMatrix> out;
    for (const auto& b : blocks) {
        int q = static_cast<int>(require_int(require(b, "q", "monodromy block"), "block degree q"));
        if (out.contains(q)) throw InputError("duplicate monodromy degree " + std::to_string(q));
        out.emplace(q, matrix_from_json(require(b, "matrix", "monodromy block")));
    }
    return GradedMonodromy(std::move(out));
}

json univariate_to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(json::array({e.empty() ? 0 : e[0], coeff_to_json(c)}));
    return {{"terms", terms}};
}

LaurentPoly univariate_from_json(const json& j) {
    const json& terms = require(j, "terms", "polynomial");
    LaurentPoly p = LaurentPoly::zero(1);
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 2) throw InputError("univariate terms are [exponent, coefficient] pairs");
        p.add_term({require_int(t[0], "exponent")}, coeff_from_json(t[1]));
    }
    return p;
}

json zeta_to_json(const ZetaFunction& z) {
    return {{"num", univariate_to_json(z.num())}, {"den", univariate_to_json(z.den())}};
}

ZetaFunction zeta_from_json(const json& j) {
    return ZetaFunction(univariate_from_json(require(j, "num", "zeta function")),
                        univariate_from_json(require(j, "den", "zeta function")));
}

json laurent_to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"c", coeff_to_json(c)}, {"e", e}});
    return {{"vars", p.vars()}, {"terms", terms}};
}

LaurentPoly laurent_from_json(const json& j) {
    int vars = static_cast<int>(require_int(require(j, "vars", "Laurent polynomial"), "vars"));
    if (vars < 1) throw InputError("Laurent polynomial needs vars >= 1");
    LaurentPoly p = LaurentPoly::zero(vars);
    for (const auto& t : require(j, "terms", "Laurent polynomial")) {
        const json& e = require(t, "e", "Laurent term");
        if (!e.is_array() || static_cast<int>(e.size()) != vars)
            throw InputError("Laurent term exponent length must equal vars");
        LaurentPoly::Exps ex;
        for (const auto& x : e) ex.push_back(require_int(x, "exponent"));
        p.add_term(ex, coeff_from_json(require(t, "c", "Laurent term")));
    }
    return p;
}

json link_to_json(const MultilinkData& l) {
    json comps = json::array();
    for (const auto& c : l.components) {
        json o{{"label", c.label}, {"m", c.m}};
        if (c.reversed) o["reversed"] = true;
        comps.push_back(o);
    }
    return {{"components", comps}, {"alexander", laurent_to_json(l.alexander)}};
}

MultilinkData link_from_json(const json& j) {
    if (!j.is_object()) throw InputError("a link must be a JSON object");
    if (j.contains("builtin")) {
        if (!j.at("builtin").is_string()) throw InputError("\"builtin\" must be a family name");
        std::vector<std::int64_t> params;
        if (j.contains("params"))
            for (const auto& p : j.at("params")) params.push_back(require_int(p, "link parameter"));
        return builtin_alexander(j.at("builtin").get<std::string>(), params);
    }
    MultilinkData l;
    for (const auto& c : require(j, "components", "link")) {
        LinkComponent comp;
        const json& label = require(c, "label", "link component");
        if (!label.is_string()) throw InputError("component labels must be strings");
        comp.label = label.get<std::string>();
        comp.m = static_cast<int>(require_int(require(c, "m", "link component"), "multiplicity m"));
        if (c.contains("reversed")) comp.reversed = c.at("reversed").get<bool>();
        l.components.push_back(comp);
    }
    l.alexander = laurent_from_json(require(j, "alexander", "link"));
    l.validate();
    return l;
}

WordsInput words_from_json(const json& j) {
    WordsInput w;
    w.mu = static_cast<int>(require_int(require(j, "mu", "words"), "mu"));
    if (w.mu < 1) throw InputError("mu must be at least 1");
    for (const auto& word : require(j, "words", "words")) {
        std::vector<Letter> letters;
        for (const auto& l : word) {
            if (!l.is_array() || l.size() != 2) throw InputError("letters are [generator, exponent] pairs");
            int gen = static_cast<int>(require_int(l[0], "generator"));
            std::int64_t e = require_int(l[1], "exponent");
            if (gen < 1 || gen > w.mu) throw InputError("generator index out of range 1..mu");
            if (e == 0 || std::abs(e) > 64) throw InputError("letter exponents must be nonzero and at most 64 in size");
            for (std::int64_t k = 0; k < std::abs(e); ++k) letters.push_back({gen, e > 0 ? 1 : -1});
        }
        w.words.emplace_back(letters);
    }
    if (static_cast<int>(w.words.size()) != w.mu) throw InputError("expected one word w_i per generator b_i");
    return w;
}

json words_to_json(const WordsInput& w) {
    json words = json::array();
    for (const auto& word : w.words) {
        json letters = json::array();
        for (const auto& l : word.letters()) letters.push_back(json::array({l.gen, l.sign}));
        words.push_back(letters);
    }
    return {{"mu", w.mu}, {"words", words}};
}

namespace {

NamedWord named_word_from_json(const json& j) {
    NamedWord w;
    if (!j.is_array()) throw InputError("a named word is an array of [name, exponent] pairs");
    for (const auto& l : j) {
        if (!l.is_array() || l.size() != 2 || !l[0].is_string())
            throw InputError("a named word is an array of [name, exponent] pairs");
        w.emplace_back(l[0].get<std::string>(), static_cast<int>(require_int(l[1], "exponent")));
    }
    return w;
}

} // namespace

RepresentationInput representation_from_json(const json& j) {
    RepresentationInput r;
    auto dim = require_int(require(j, "dim", "representation"), "dim");
    if (dim < 1) throw InputError("representation dim must be positive");
    std::map<std::string, QMatrix> images;
    const json& im = require(j, "images", "representation");
    if (!im.is_object()) throw InputError("\"images\" must map generator names to matrices");
    for (const auto& [name, m] : im.items()) images.emplace(name, matrix_from_json(m));
    r.rho = Representation(static_cast<std::size_t>(dim), std::move(images));
    if (j.contains("h_word")) r.h = named_word_from_json(j.at("h_word"));
    if (j.contains("relators"))
        for (const auto& rel : j.at("relators")) r.relators.push_back(named_word_from_json(rel));
    return r;
}

std::optional<long> Bundle::chi_minus_axes(int n1, int n2) const {
    if (chi_g_minus_axes) return chi_g_minus_axes;
    if (chi_g) return *chi_g - n1 - n2;
    return std::nullopt;
}

Bundle bundle_from_json(const json& j) {
    if (!j.is_object()) throw InputError("a bundle must be a JSON object");
    Bundle b;
    const json& g = require(j, "g", "bundle");
    if (!g.is_string()) throw InputError("bundle field \"g\" must be an expression string");
    b.g_text = g.get<std::string>();
    b.input.g = parse(b.g_text, 2);
    b.input.mono1 = monodromy_from_json(require(j, "mono1", "bundle"));
    b.input.mono2 = monodromy_from_json(require(j, "mono2", "bundle"));
    b.input.link = link_from_json(require(j, "link", "bundle"));
    if (j.contains("counts")) {
        const json& c = j.at("counts");
        if (!c.is_array() || c.size() != 2) throw InputError("\"counts\" must be [n1, n2]");
        b.input.counts = std::make_pair(static_cast<int>(require_int(c[0], "n1")), static_cast<int>(require_int(c[1], "n2")));
    }
    if (j.contains("chi_g")) b.chi_g = require_int(j.at("chi_g"), "chi_g");
    if (j.contains("chi_g_minus_axes")) b.chi_g_minus_axes = require_int(j.at("chi_g_minus_axes"), "chi_g_minus_axes");
    return b;
}

json fiber_count_to_json(const FiberCount& c) {
    json out{{"count", c.count ? json(*c.count) : json(nullptr)},
             {"method", count_method_name(c.method)},
             {"formula", c.formula ? json(*c.formula) : json(nullptr)},
             {"hypotheses_hold", c.hypotheses_hold},
             {"note", c.note}};
    if (c.factorization) {
        const auto& f = *c.factorization;
        json factors = json::array();
        for (const auto& lf : f.factors) {
            json o{{"delta", complex_to_json(lf.delta)}, {"mu", lf.multiplicity}};
            o["exact_delta"] = lf.exact_delta ? json(lf.exact_delta->to_string()) : json(nullptr);
            factors.push_back(o);
        }
        out["factorization"] = {{"c", f.c.to_string()}, {"a", f.a},           {"b", f.b},
                                {"factors", factors},  {"d_low", f.d_low}, {"d_high", f.d_high}};
    }
    if (c.oracle) {
        const auto& o = *c.oracle;
        json sols = json::array();
        for (auto z : o.solutions) sols.push_back(complex_to_json(z));
        out["oracle"] = {{"lower", o.lower},
                         {"upper", o.upper},
                         {"solutions", sols},
                         {"cells", o.cells},
                         {"undecided_cells", o.undecided_cells},
                         {"min_residual", o.min_residual}};
    }
    return out;
}

json join_report_to_json(const JoinReport& r) {
    json factors = json::array();
    for (const auto& f : r.factors)
        factors.push_back({{"q", f.q},
                           {"size", f.size},
                           {"det", univariate_to_json(f.det)},
                           {"det_text", f.det.to_string()},
                           {"exponent", f.exponent}});
    json out{{"n1", r.n1},
             {"n2", r.n2},
             {"counts_supplied", r.counts_supplied},
             {"zeta_f1", zeta_to_json(r.zeta_f1)},
             {"zeta_f2", zeta_to_json(r.zeta_f2)},
             {"prefactor1", zeta_to_json(r.prefactor1)},
             {"prefactor1_text", r.prefactor1.to_string()},
             {"prefactor2", zeta_to_json(r.prefactor2)},
             {"prefactor2_text", r.prefactor2.to_string()},
             {"alexander", laurent_to_json(r.alexander)},
             {"factors", factors},
             {"axis_rule", {{"consistent", r.axis.consistent}, {"message", r.axis.message}}},
             {"zeta", zeta_to_json(r.zeta)},
             {"zeta_text", r.zeta.to_string()},
             {"zeta_factored", r.zeta.to_factored_string()},
             {"euler", euler_from_zeta(r.zeta)}};
    if (r.count1) out["count1"] = fiber_count_to_json(*r.count1);
    if (r.count2) out["count2"] = fiber_count_to_json(*r.count2);
    return out;
}

json checks_to_json(const std::vector<CheckEntry>& checks) {
    json a = json::array();
    for (const auto& c : checks)
        a.push_back({{"name", c.name}, {"status", check_status_name(c.status)}, {"detail", c.detail}});
    return a;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

} // namespace mixjoin::json_io
