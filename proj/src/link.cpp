#include "mixjoin/link.hpp"

#include "mixjoin/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mixjoin {

std::vector<int> MultilinkData::multiplicities() const {
    std::vector<int> m;
    for (const auto& c : components) m.push_back(c.m);
    return m;
}

void MultilinkData::validate() const {
    if (components.empty()) throw InputError("a multilink needs at least one component");
    std::set<std::string> labels;
    for (const auto& c : components)
        if (!labels.insert(c.label).second) throw InputError("duplicate component label '" + c.label + "'");
    if (alexander.vars() != static_cast<int>(r()) && !(alexander.vars() == 0))
        throw InputError("Alexander polynomial has " + std::to_string(alexander.vars()) + " variables but the link has " +
                         std::to_string(r()) + " components");
}

namespace {

MultilinkData make_link(std::vector<LinkComponent> comps, LaurentPoly delta) {
    MultilinkData l{std::move(comps), std::move(delta)};
    l.alexander = l.alexander.promoted(static_cast<int>(l.r()));
    l.validate();
    return l;
}

void require_params(const std::vector<std::int64_t>& params, std::size_t lo, std::size_t hi, const char* family) {
    if (params.size() < lo || params.size() > hi)
        throw InputError(std::string("wrong number of parameters for ") + family);
}

} // namespace

MultilinkData builtin_alexander(const std::string& family, const std::vector<std::int64_t>& params) {
    if (family == "brieskorn-with-axes") {
        require_params(params, 2, 2, "brieskorn-with-axes");
        std::int64_t p1 = params[0], p2 = params[1];
        if (p1 < 2 || p2 < 2) throw InputError("brieskorn-with-axes needs p1, p2 >= 2");
        LaurentPoly d = LaurentPoly::monomial({p2, p1, p1 * p2}) - LaurentPoly(1);
        return make_link({{"axis-z1", 0}, {"axis-z2", 0}, {"curve", 1}}, d);
    }
    if (family == "oka-family") {
        require_params(params, 4, 5, "oka-family");
        std::int64_t p1 = params[0], p2 = params[1], k = params[2], l = params[3];
        bool signed_conj = params.size() == 5 && params[4] != 0;
        if (p1 < 1 || p2 < 1 || k < 0 || l < 0 || k + l < 1)
            throw InputError("oka-family needs p1, p2 >= 1, k, l >= 0 and k + l >= 1");
        if (k + l > 64) throw InputError("oka-family is limited to k + l <= 64");
        std::int64_t r = k + l + 2;
        LaurentPoly::Exps e(r, p1 * p2);
        e[0] = p2;
        e[1] = p1;
        LaurentPoly base = LaurentPoly::monomial(e) - LaurentPoly(1);
        std::vector<LinkComponent> comps{{"axis-z1", 1}, {"axis-z2", 1}};
        for (std::int64_t j = 1; j <= k; ++j) comps.push_back({"branch-" + std::to_string(j), 1});
        for (std::int64_t j = 1; j <= l; ++j) comps.push_back({"conj-branch-" + std::to_string(j), signed_conj ? -1 : 1});
        return make_link(std::move(comps), base.pow(static_cast<std::uint64_t>(k + l)));
    }
    if (family == "hopf-r") {
        require_params(params, 1, 1, "hopf-r");
        std::int64_t r = params[0];
        if (r < 3) throw InputError("hopf-r needs r >= 3");
        if (r > 64) throw InputError("hopf-r is limited to r <= 64");
        LaurentPoly base = LaurentPoly::monomial(LaurentPoly::Exps(r, 1)) - LaurentPoly(1);
        std::vector<LinkComponent> comps{{"axis-z1", 0}, {"axis-z2", 0}};
        for (std::int64_t j = 3; j <= r; ++j) comps.push_back({"fiber-" + std::to_string(j - 2), 1});
        return make_link(std::move(comps), base.pow(static_cast<std::uint64_t>(r - 2)));
    }
    throw InputError("unknown link family '" + family + "'");
}

NonnegativeForm to_nonnegative(const LaurentPoly& p) {
    if (p.is_zero() || p.vars() == 0) return {p, LaurentPoly::Exps(p.vars(), 0)};
    auto lo = p.min_exponents();
    LaurentPoly::Exps neg(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) neg[i] = -lo[i];
    return {p.shifted(neg), lo};
}

MultilinkData reverse_orientation(const MultilinkData& link, int j) {
    if (j < 1 || j > static_cast<int>(link.r())) throw InputError("component index out of range");
    MultilinkData out = link;
    auto& c = out.components[j - 1];
    c.m = -c.m;
    c.reversed = !c.reversed;
    if (!out.alexander.is_zero() && out.alexander.vars() > 0)
        out.alexander = to_nonnegative(out.alexander.substitute_power(j - 1, -1)).poly;
    return out;
}

namespace {

/// Detects lambda^k * C with C constant; returns false otherwise.
bool split_scalar_monomial(const PolyMatrix& a, LaurentPoly::Exps& power, QMatrix& c) {
    bool have = false;
    c = QMatrix(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto& e = a(i, j);
            if (e.is_zero()) continue;
            if (!e.is_monomial()) return false;
            const auto& [ex, co] = *e.terms().begin();
            if (!have) {
                power = ex;
                have = true;
            } else if (ex != power) {
                return false;
            }
            c(i, j) = co;
        }
    return have;
}

PolyMatrix inverse_of(const PolyMatrix& a) {
    LaurentPoly::Exps power;
    QMatrix c;
    if (!split_scalar_monomial(a, power, c))
        throw DomainError("negative exponent on an argument that is not a monomial times a constant matrix");
    QMatrix ci;
    try {
        ci = inverse(c);
    } catch (const DomainError&) {
        throw DomainError("negative exponent on a non-invertible argument");
    }
    for (auto& v : power) v = -v;
    return ci.map<LaurentPoly>([&power](const GaussianRational& x) { return LaurentPoly::monomial(power, x); });
}

} // namespace

PolyMatrix substitute_matrices(const LaurentPoly& delta, const std::vector<PolyMatrix>& args) {
    if (delta.vars() != 0 && static_cast<std::size_t>(delta.vars()) != args.size())
        throw InputError("substitution needs one argument per variable");
    std::size_t n = args.empty() ? 0 : args[0].rows();
    for (const auto& a : args)
        if (!a.is_square() || a.rows() != n) throw InputError("substitution arguments must be square of equal size");
    for (std::size_t s = 0; s < args.size(); ++s)
        for (std::size_t t = s + 1; t < args.size(); ++t)
            if (!(args[s] * args[t] == args[t] * args[s]))
                throw DomainError("substitution arguments " + std::to_string(s + 1) + " and " + std::to_string(t + 1) +
                                  " do not commute");

    std::vector<std::map<std::int64_t, PolyMatrix>> cache(args.size());
    std::vector<PolyMatrix> inverses(args.size());
    std::vector<bool> have_inverse(args.size(), false);
    auto power = [&](std::size_t s, std::int64_t e) -> const PolyMatrix& {
        auto it = cache[s].find(e);
        if (it != cache[s].end()) return it->second;
        PolyMatrix base = args[s];
        if (e < 0) {
            if (!have_inverse[s]) {
                inverses[s] = inverse_of(args[s]);
                have_inverse[s] = true;
            }
            base = inverses[s];
        }
        return cache[s].emplace(e, base.pow(static_cast<std::uint64_t>(e < 0 ? -e : e))).first->second;
    };

    PolyMatrix out(n, n);
    for (const auto& [ex, c] : delta.terms()) {
        PolyMatrix term = PolyMatrix::identity(n);
        for (std::size_t s = 0; s < ex.size(); ++s)
            if (ex[s] != 0) term = term * power(s, ex[s]);
        out += term.scaled(LaurentPoly(c));
    }
    return out;
}

AxisRuleCheck check_axis_rule(const MultilinkData& link, const MixedPolynomial& g) {
    AxisRuleCheck out;
    if (g.num_vars() != 2) throw InputError("the axis rule needs a 2-variable g");
    if (link.r() < 2) {
        out.consistent = false;
        out.message = "link has fewer than two components, so the axes K1, K2 are missing";
        return out;
    }
    for (int j = 1; j <= 2; ++j) {
        // g restricted to {z_j = 0} lives on the other coordinate axis
        bool nonvanishing = !restrict(g, {3 - j}).is_zero();
        int m = link.components[j - 1].m;
        if ((m == 0) != nonvanishing) {
            out.consistent = false;
            if (!out.message.empty()) out.message += "; ";
            out.message += "axis z" + std::to_string(j) + ": g|_{z" + std::to_string(j) + "=0} is " +
                           (nonvanishing ? "not identically zero" : "identically zero") + " but m" +
                           std::to_string(j) + " = " + std::to_string(m);
        }
    }
    return out;
}

} // namespace mixjoin
