#include "mixjoin/degeneracy.hpp"

#include "mixjoin/error.hpp"
#include "mixjoin/upoly.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

namespace mixjoin {

std::string status_name(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::Verified: return "VERIFIED";
    case VerdictStatus::Refuted: return "REFUTED";
    case VerdictStatus::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

namespace {

using cd = std::complex<double>;

struct Partials {
    std::vector<MixedPolynomial> dz, dzb;

    explicit Partials(const MixedPolynomial& p) {
        for (int j = 1; j <= p.num_vars(); ++j) {
            dz.push_back(wirtinger(p, j, WirtingerKind::Holomorphic));
            dzb.push_back(wirtinger(p, j, WirtingerKind::Antiholomorphic));
        }
    }
};

struct SingularValues {
    double smin = 0, smax = 0;
};

/// Rows of the real Jacobian: d/dx_j = dz + dzb, d/dy_j = i (dz - dzb).
SingularValues singular_values(const Partials& d, std::span<const cd> point) {
    std::vector<double> r1, r2;
    for (std::size_t j = 0; j < d.dz.size(); ++j) {
        cd a = evaluate(d.dz[j], point), b = evaluate(d.dzb[j], point);
        cd x = a + b, y = cd(0, 1) * (a - b);
        r1.push_back(x.real());
        r2.push_back(x.imag());
        r1.push_back(y.real());
        r2.push_back(y.imag());
    }
    double g11 = 0, g22 = 0, g12 = 0, det = 0;
    for (std::size_t k = 0; k < r1.size(); ++k) {
        g11 += r1[k] * r1[k];
        g22 += r2[k] * r2[k];
        g12 += r1[k] * r2[k];
    }
    // Cauchy-Binet keeps the Gram determinant non-negative and accurate
    for (std::size_t k = 0; k < r1.size(); ++k)
        for (std::size_t l = k + 1; l < r1.size(); ++l) {
            double m = r1[k] * r2[l] - r1[l] * r2[k];
            det += m * m;
        }
    double half = 0.5 * (g11 - g22);
    double lmax = 0.5 * (g11 + g22) + std::sqrt(half * half + g12 * g12);
    double lmin = lmax > 0 ? det / lmax : 0.0;
    return {std::sqrt(std::max(lmin, 0.0)), std::sqrt(std::max(lmax, 0.0))};
}

void require_torus(std::span<const cd> point, int n) {
    if (static_cast<int>(point.size()) != n) throw InputError("point dimension mismatch");
    for (auto z : point)
        if (z == cd(0, 0)) throw DomainError("criticality residual needs a torus point (zero coordinate)");
}

std::vector<cd> to_doubles(std::span<const GaussianRational> p) {
    std::vector<cd> v;
    for (const auto& z : p) v.push_back(z.to_complex());
    return v;
}

Witness make_witness(const MixedPolynomial& f, std::vector<cd> point) {
    Witness w;
    w.residual = criticality_residual(f, point);
    w.point = std::move(point);
    return w;
}

Witness exact_witness(const MixedPolynomial& f, std::vector<GaussianRational> point) {
    if (!is_critical_exact(f, point)) throw InternalError("symbolic witness failed the exact rank check");
    Witness w = make_witness(f, to_doubles(point));
    w.exact = true;
    w.exact_point = std::move(point);
    return w;
}

std::string fmt_double(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

bool is_weighted_homogeneous(const MixedPolynomial& f, const WeightVector& w) {
    std::optional<std::int64_t> deg;
    for (const auto& [k, c] : f.terms()) {
        auto lp = k.lattice_point();
        std::int64_t v = w.apply(LatticePoint(lp.begin(), lp.end()));
        if (deg && *deg != v) return false;
        deg = v;
    }
    return true;
}

// Rule (b): c z^nu conj(z)^mu is critical somewhere on the torus iff nu = mu, and then everywhere.
Verdict monomial_rule(const MixedPolynomial& f) {
    Verdict v;
    v.rule = "monomial";
    const auto& key = f.terms().begin()->first;
    if (key.nu == key.mu) {
        v.status = VerdictStatus::Refuted;
        v.witness = exact_witness(f, std::vector<GaussianRational>(f.num_vars(), GaussianRational(1)));
        v.evidence = "single monomial with nu = mu: |d/dz_j| = |d/dzbar_j| with a common phase at every torus point";
    } else {
        v.status = VerdictStatus::Verified;
        v.evidence = "single monomial with nu != mu: some |d/dz_j| != |d/dzbar_j| on the whole torus";
    }
    return v;
}

// Rule (c): f = zbar^d P(t), t = z/zbar. Critical iff |t P'(t)| = |d P(t) - t P'(t)| somewhere on |t| = 1.
Verdict circle_rule(const MixedPolynomial& f) {
    Verdict v;
    v.rule = "one-variable-circle";
    std::size_t d = 0;
    std::vector<GaussianRational> pc;
    for (const auto& [k, c] : f.terms()) {
        d = k.nu[0] + k.mu[0];
        if (pc.size() < k.nu[0] + 1U) pc.resize(k.nu[0] + 1);
        pc[k.nu[0]] = c;
    }
    UPoly P(pc);
    UPoly A = UPoly::monomial(1) * P.derivative();
    UPoly B = P.scaled(GaussianRational(static_cast<long>(d))) - A;
    auto star = [d](const UPoly& x) {
        std::vector<GaussianRational> c(d + 1);
        for (std::size_t k = 0; k <= d; ++k) c[k] = x.coeff(d - k).conj();
        return UPoly(std::move(c));
    };
    UPoly Q = A * star(A) - B * star(B); // t^d (|A|^2 - |B|^2) on the circle
    if (Q.is_zero()) {
        v.status = VerdictStatus::Refuted;
        v.witness = exact_witness(f, {GaussianRational(1)});
        v.evidence = "|tP'| = |dP - tP'| identically on |t| = 1: every torus point is critical";
        return v;
    }
    if (Q.evaluate(GaussianRational(-1)).is_zero()) {
        v.status = VerdictStatus::Refuted;
        v.witness = exact_witness(f, {GaussianRational::i()});
        v.evidence = "|tP'| = |dP - tP'| at t = -1 (z = i)";
        return v;
    }
    // Cayley map t = (1 + ix)/(1 - ix): S(x) = (1 + x^2)^d (|A|^2 - |B|^2) is real
    UPoly plus({GaussianRational(1), GaussianRational::i()});
    UPoly minus({GaussianRational(1), -GaussianRational::i()});
    UPoly S;
    for (std::size_t k = 0; k <= 2 * d; ++k) {
        GaussianRational q = Q.coeff(k);
        if (q.is_zero()) continue;
        S = S + (plus.pow(static_cast<unsigned>(k)) * minus.pow(static_cast<unsigned>(2 * d - k))).scaled(q);
    }
    if (!S.is_real()) throw InternalError("circle polynomial is not real");
    std::size_t roots = count_real_roots(S);
    if (roots == 0) {
        v.status = VerdictStatus::Verified;
        v.evidence = "Sturm sequence: |tP'|^2 - |dP - tP'|^2 has no zero on |t| = 1 (degree " +
                     std::to_string(S.degree()) + " circle polynomial, t = -1 checked separately)";
        return v;
    }
    UPoly sq = divmod(S, gcd(S, S.derivative())).first;
    auto nr = numeric_roots(sq);
    auto best = std::min_element(nr.begin(), nr.end(),
                                 [](cd a, cd b) { return std::abs(a.imag()) < std::abs(b.imag()); });
    double x = best->real();
    cd t = cd(1, x) / cd(1, -x);
    v.status = VerdictStatus::Refuted;
    v.witness = make_witness(f, {std::polar(1.0, std::arg(t) / 2)});
    v.evidence = "Sturm sequence: " + std::to_string(roots) +
                 " zero(s) of |tP'|^2 - |dP - tP'|^2 on |t| = 1; witness from a numeric root";
    return v;
}

UPoly slice_at_one(const MixedPolynomial& g) {
    // holomorphic g(1, s) as a polynomial in s
    std::vector<GaussianRational> c;
    for (const auto& [k, a] : g.terms()) {
        if (c.size() < k.nu[1] + 1U) c.resize(k.nu[1] + 1);
        c[k.nu[1]] += a;
    }
    return UPoly(std::move(c));
}

// Rule (a): weighted homogeneous holomorphic f in two variables. The C* action
// moves every torus point to z_1 = 1, so common torus zeros of the partials are
// the nonzero roots of gcd(f_1(1, s), f_2(1, s)).
Verdict holomorphic_rule(const MixedPolynomial& f) {
    Verdict v;
    v.rule = "holomorphic-resultant";
    UPoly g1 = slice_at_one(wirtinger(f, 1, WirtingerKind::Holomorphic));
    UPoly g2 = slice_at_one(wirtinger(f, 2, WirtingerKind::Holomorphic));
    UPoly g = gcd(g1, g2);
    if (g.is_zero()) {
        v.status = VerdictStatus::Refuted;
        v.witness = exact_witness(f, {GaussianRational(1), GaussianRational(1)});
        v.evidence = "both partial derivatives vanish identically";
        return v;
    }
    UPoly core = g.shift_down(g.zero_multiplicity());
    if (core.degree() < 1) {
        v.status = VerdictStatus::Verified;
        v.evidence = "gcd of the partials on the slice z1 = 1 has no nonzero root (" + std::to_string(g.degree()) +
                     " root(s) at 0 only)";
        return v;
    }
    v.status = VerdictStatus::Refuted;
    v.evidence = "partials share " + std::to_string(core.degree()) + " nonzero root(s) on the slice z1 = 1";
    if (core.degree() == 1) {
        GaussianRational root = -core.coeff(0) / core.coeff(1);
        v.witness = exact_witness(f, {GaussianRational(1), root});
    } else {
        v.witness = make_witness(f, {cd(1, 0), numeric_roots(core).front()});
    }
    return v;
}

struct SearchSpace {
    const Partials* partials;
    int n;
    bool normalize;

    std::size_t dim() const { return normalize ? 2 * n - 1 : 2 * n; }

    std::vector<cd> point(const gsl_vector* x) const {
        std::vector<cd> z(n);
        std::size_t k = 0;
        for (int j = 0; j < n; ++j) {
            double logmod = 0;
            if (!(normalize && j == 0)) logmod = 3.0 * std::tanh(gsl_vector_get(x, k++));
            double arg = gsl_vector_get(x, k++);
            z[j] = std::polar(std::exp(logmod), arg);
        }
        return z;
    }

    double objective(const gsl_vector* x) const {
        auto z = point(x);
        auto sv = singular_values(*partials, z);
        return sv.smax > 0 ? sv.smin / sv.smax : 0.0;
    }
};

double gsl_objective(const gsl_vector* x, void* params) {
    return static_cast<const SearchSpace*>(params)->objective(x);
}

struct SearchResult {
    std::vector<double> x;
    double value = 0;
};

SearchResult nelder_mead(const SearchSpace& space, const std::vector<double>& start, double step, int max_iterations,
                         double size_tol) {
    std::size_t dim = space.dim();
    gsl_multimin_function fn{&gsl_objective, dim, const_cast<SearchSpace*>(&space)};
    gsl_vector* x = gsl_vector_alloc(dim);
    gsl_vector* ss = gsl_vector_alloc(dim);
    for (std::size_t k = 0; k < dim; ++k) gsl_vector_set(x, k, start[k]);
    gsl_vector_set_all(ss, step);
    gsl_multimin_fminimizer* m = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim);
    gsl_multimin_fminimizer_set(m, &fn, x, ss);
    for (int it = 0; it < max_iterations; ++it) {
        if (gsl_multimin_fminimizer_iterate(m) != GSL_SUCCESS) break;
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(m), size_tol) == GSL_SUCCESS) break;
        if (m->fval == 0.0) break;
    }
    SearchResult r;
    for (std::size_t k = 0; k < dim; ++k) r.x.push_back(gsl_vector_get(m->x, k));
    r.value = m->fval;
    gsl_multimin_fminimizer_free(m);
    gsl_vector_free(ss);
    gsl_vector_free(x);
    return r;
}

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      static_cast<std::uint32_t>(index)};
    return std::mt19937_64(seq);
}

std::optional<std::vector<GaussianRational>> snap_exact(const MixedPolynomial& f, const std::vector<cd>& z) {
    for (long den : {1L, 2L, 3L, 4L, 5L, 6L, 8L, 10L, 12L, 16L, 100L, 1000L, 10000L, 1000000L}) {
        std::vector<GaussianRational> q;
        bool torus = true;
        for (auto c : z) {
            GaussianRational g(rationalize(c.real(), den), rationalize(c.imag(), den));
            if (g.is_zero()) torus = false;
            q.push_back(g);
        }
        if (torus && is_critical_exact(f, q)) return q;
    }
    return std::nullopt;
}

Verdict sampling_search(const MixedPolynomial& f, bool normalize, const DegeneracyBudget& budget,
                        std::uint64_t stream) {
    Verdict v;
    v.rule = "sampling";
    Partials partials(f);
    SearchSpace space{&partials, f.num_vars(), normalize};
    gsl_set_error_handler_off();
    SearchResult best;
    best.value = std::numeric_limits<double>::infinity();
    for (int s = 0; s < budget.multistarts; ++s) {
        auto rng = make_rng(budget.seed, stream, static_cast<std::uint64_t>(s));
        std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
        std::normal_distribution<double> logmod(0, 0.7);
        std::vector<double> start;
        for (int j = 0; j < f.num_vars(); ++j) {
            if (!(normalize && j == 0)) start.push_back(logmod(rng));
            start.push_back(angle(rng));
        }
        auto r = nelder_mead(space, start, 0.5, budget.max_iterations, 1e-10);
        if (r.value < best.value) best = r;
    }
    std::string spent = std::to_string(budget.multistarts) + " Nelder-Mead multistarts";
    if (best.value > 1e-6) {
        v.status = VerdictStatus::Unknown;
        v.evidence = "no symbolic rule applies; " + spent + ", smallest normalized residual " + fmt_double(best.value) +
                     ", no critical point found";
        return v;
    }
    auto polished = nelder_mead(space, best.x, 1e-4, 4 * budget.max_iterations, 1e-15);
    if (polished.value < best.value) best = polished;
    gsl_vector_view view = gsl_vector_view_array(best.x.data(), best.x.size());
    auto point = space.point(&view.vector);
    Witness w = make_witness(f, point);
    if (auto exact = snap_exact(f, point)) {
        v.status = VerdictStatus::Refuted;
        v.witness = exact_witness(f, *exact);
        v.evidence = spent + "; candidate snapped to a Gaussian-rational point with exact rank deficiency";
        return v;
    }
    v.status = VerdictStatus::Unknown;
    if (best.value <= budget.tolerance) {
        v.witness = w;
        v.evidence = "no symbolic rule applies; " + spent + "; suspected critical point (normalized residual " +
                     fmt_double(best.value) + ") not confirmed exactly";
    } else {
        v.evidence = "no symbolic rule applies; " + spent + ", smallest normalized residual " +
                     fmt_double(best.value) + " above tolerance";
    }
    return v;
}

std::string surjectivity_spot_check(const MixedPolynomial& f, const DegeneracyBudget& budget, std::uint64_t stream) {
    auto rng = make_rng(budget.seed, stream, 0xfeedULL);
    std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
    std::normal_distribution<double> logmod(0, 1.0);
    constexpr int samples = 512;
    std::vector<bool> hit(8, false);
    for (int s = 0; s < samples; ++s) {
        std::vector<cd> z;
        for (int j = 0; j < f.num_vars(); ++j) z.push_back(std::polar(std::exp(logmod(rng)), angle(rng)));
        cd w = evaluate(f, z);
        if (std::abs(w) == 0) continue;
        double a = std::arg(w) + std::numbers::pi;
        hit[std::min(7, static_cast<int>(a / (std::numbers::pi / 4)))] = true;
    }
    int covered = static_cast<int>(std::count(hit.begin(), hit.end(), true));
    return "surjectivity spot-check: image arguments cover " + std::to_string(covered) + "/8 sectors over " +
           std::to_string(samples) + " samples (evidence only, not certified)";
}

} // namespace

double criticality_residual(const MixedPolynomial& p, std::span<const std::complex<double>> point) {
    require_torus(point, p.num_vars());
    return singular_values(Partials(p), point).smin;
}

bool is_critical_exact(const MixedPolynomial& p, std::span<const GaussianRational> point) {
    if (static_cast<int>(point.size()) != p.num_vars()) throw InputError("point dimension mismatch");
    for (const auto& z : point)
        if (z.is_zero()) throw DomainError("exact criticality check needs a torus point (zero coordinate)");
    std::vector<mpq_class> r1, r2;
    for (int j = 1; j <= p.num_vars(); ++j) {
        GaussianRational a = evaluate(wirtinger(p, j, WirtingerKind::Holomorphic), point);
        GaussianRational b = evaluate(wirtinger(p, j, WirtingerKind::Antiholomorphic), point);
        GaussianRational x = a + b, y = GaussianRational::i() * (a - b);
        r1.push_back(x.re());
        r2.push_back(x.im());
        r1.push_back(y.re());
        r2.push_back(y.im());
    }
    for (std::size_t k = 0; k < r1.size(); ++k)
        for (std::size_t l = k + 1; l < r1.size(); ++l)
            if (r1[k] * r2[l] != r1[l] * r2[k]) return false;
    return true;
}

Verdict check_face_function(const MixedPolynomial& f, const std::optional<WeightVector>& weight,
                            const DegeneracyBudget& budget, std::uint64_t stream) {
    if (f.is_zero()) throw DomainError("degeneracy check of the zero polynomial");
    bool homogeneous_1var = false;
    if (f.num_vars() == 1) homogeneous_1var = is_weighted_homogeneous(f, WeightVector({1}));
    bool positive_weight = weight && weight->strictly_positive() && is_weighted_homogeneous(f, *weight);
    Verdict v;
    if (homogeneous_1var) v = circle_rule(f);
    else if (f.term_count() == 1) v = monomial_rule(f);
    else if (f.is_holomorphic() && f.num_vars() == 2 && positive_weight) v = holomorphic_rule(f);
    else v = sampling_search(f, positive_weight, budget, stream);
    v.face_function = f;
    if (v.status == VerdictStatus::Refuted && !(v.witness && v.witness->residual <= budget.tolerance) &&
        !(v.witness && v.witness->exact))
        throw InternalError("refuting witness residual above tolerance");
    return v;
}

std::vector<Verdict> check_strong_nondegeneracy(const MixedPolynomial& p, const DegeneracyBudget& budget) {
    if (p.is_zero()) throw DomainError("degeneracy check of the zero polynomial");
    auto poly = compact_faces(p);
    std::vector<Verdict> out;
    for (std::size_t k = 0; k < poly.faces.size(); ++k) {
        const Face& face = poly.faces[k];
        auto f = face_function(p, face);
        Verdict v = check_face_function(f, face.supporting_weight, budget, k);
        v.face = face;
        if (face.dim >= 1) v.evidence += "; " + surjectivity_spot_check(f, budget, k);
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

GaussianRational pythagorean_point(std::mt19937_64& rng, const mpq_class& modulus) {
    std::uniform_int_distribution<int> den(1, 8), quarter(0, 3);
    int m = den(rng);
    std::uniform_int_distribution<int> num(0, m);
    mpq_class u(num(rng), m);
    u.canonicalize();
    mpq_class s = 1 + u * u;
    GaussianRational z(mpq_class((1 - u * u) / s), mpq_class(2 * u / s));
    z *= GaussianRational::i().pow(static_cast<std::uint64_t>(quarter(rng)));
    return z * GaussianRational(modulus);
}

std::string radii_text(const std::vector<mpq_class>& radii) {
    std::string s;
    for (const auto& r : radii) s += (s.empty() ? "" : ", ") + rational_to_string(r);
    return "{" + s + "}";
}

} // namespace

std::vector<TamenessVerdict> check_local_tameness(const MixedPolynomial& p, const TamenessConfig& config) {
    if (p.is_zero()) throw DomainError("tameness check of the zero polynomial");
    for (const auto& r : config.radii)
        if (sgn(r) <= 0) throw InputError("tameness radii must be positive");
    if (config.weight_bound < 1 || config.samples_per_radius < 1) throw InputError("tameness budget must be positive");
    int n = p.num_vars();
    std::vector<TamenessVerdict> out;
    std::uint64_t stream = 1000;
    for (const auto& subset : index_sets(p).vanishing) {
        TamenessVerdict tv;
        tv.subset = subset;
        // weights with I(P) = subset, entries bounded; classes keyed by Delta(P)
        std::vector<std::pair<WeightVector, Face>> classes;
        std::set<std::vector<LatticePoint>> seen;
        std::vector<int> free;
        for (int j = 1; j <= n; ++j)
            if (!subset.contains(j)) free.push_back(j);
        std::vector<std::int64_t> entries(n, 0);
        for (int j : free) entries[j - 1] = 1;
        for (;;) {
            WeightVector w(entries);
            auto wd = weight_data(p, w);
            if (seen.insert(wd.delta.lattice_points).second) classes.emplace_back(w, wd.delta);
            std::size_t k = 0;
            while (k < free.size() && entries[free[k] - 1] == config.weight_bound) entries[free[k++] - 1] = 1;
            if (k == free.size()) break;
            ++entries[free[k] - 1];
        }
        std::size_t verified = 0, total = 0;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            auto gp = face_function(p, classes[c].second);
            for (const auto& radius : config.radii) {
                for (int s = 0; s < config.samples_per_radius; ++s) {
                    auto rng = make_rng(config.budget.seed, stream, c * 1000 + static_cast<std::uint64_t>(s));
                    TamenessInstance inst;
                    inst.weight = classes[c].first;
                    inst.delta = classes[c].second;
                    inst.radius = radius;
                    mpq_class modulus = radius / static_cast<long>(subset.size());
                    for (std::size_t i = 0; i < subset.size(); ++i) inst.a.push_back(pythagorean_point(rng, modulus));
                    inst.restricted = substitute(gp, subset, inst.a);
                    ++total;
                    if (inst.restricted.is_zero()) {
                        inst.status = VerdictStatus::Unknown;
                        inst.note = "restriction vanished at this sample";
                    } else {
                        DegeneracyBudget b = config.budget;
                        b.seed = config.budget.seed ^ (stream * 0x9e3779b97f4a7c15ULL + c * 131 + s);
                        inst.verdicts = check_strong_nondegeneracy(inst.restricted, b);
                        bool all_ok = true;
                        inst.status = VerdictStatus::Verified;
                        for (const auto& v : inst.verdicts) {
                            if (v.status == VerdictStatus::Refuted) inst.status = VerdictStatus::Refuted;
                            if (v.status != VerdictStatus::Verified) all_ok = false;
                        }
                        if (!all_ok && inst.status != VerdictStatus::Refuted) inst.status = VerdictStatus::Unknown;
                    }
                    if (inst.status == VerdictStatus::Verified) ++verified;
                    if (inst.status == VerdictStatus::Refuted && tv.status != VerdictStatus::Refuted) {
                        tv.status = VerdictStatus::Refuted;
                        for (const auto& v : inst.verdicts)
                            if (v.status == VerdictStatus::Refuted) {
                                tv.witness = v.witness;
                                tv.rule = v.rule;
                                break;
                            }
                        tv.evidence = "restriction of g_P (P = " + [&] {
                            std::string s;
                            for (auto e : inst.weight.entries()) s += (s.empty() ? "" : ",") + std::to_string(e);
                            return s;
                        }() + ") at z_I = a_I is " + inst.restricted.to_string() + ", which has a torus critical point";
                    }
                    tv.instances.push_back(std::move(inst));
                }
            }
        }
        ++stream;
        std::string budget_text = std::to_string(classes.size()) + " weight class(es) with entries <= " +
                                  std::to_string(config.weight_bound) + ", radii " + radii_text(config.radii) +
                                  " (default choice, no radius is prescribed), " +
                                  std::to_string(config.samples_per_radius) + " sample(s) per radius";
        if (tv.status == VerdictStatus::Refuted) {
            tv.evidence += "; " + budget_text;
        } else if (verified == total) {
            tv.status = VerdictStatus::Verified;
            tv.rule = "all-instances-symbolic";
            tv.evidence = "every sampled restriction verified symbolically; " + budget_text;
        } else {
            tv.status = VerdictStatus::Unknown;
            tv.rule = "sampling";
            tv.evidence = std::to_string(verified) + "/" + std::to_string(total) +
                          " sampled restrictions verified, none refuted; " + budget_text;
        }
        out.push_back(std::move(tv));
    }
    return out;
}

} // namespace mixjoin
