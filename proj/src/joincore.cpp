#include "mixjoin/joincore.hpp"

#include "mixjoin/degeneracy.hpp"
#include "mixjoin/error.hpp"
#include "mixjoin/upoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace mixjoin {

namespace {

using cd = std::complex<double>;

// Closed intervals with one-ulp outward widening after every operation.
struct Iv {
    double lo = 0, hi = 0;
};

double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

Iv operator+(Iv a, Iv b) { return {down(a.lo + b.lo), up(a.hi + b.hi)}; }
Iv operator-(Iv a, Iv b) { return {down(a.lo - b.hi), up(a.hi - b.lo)}; }
Iv operator-(Iv a) { return {-a.hi, -a.lo}; }
Iv operator*(Iv a, Iv b) {
    double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {down(*std::min_element(p, p + 4)), up(*std::max_element(p, p + 4))};
}
Iv thin(double x) { return {x, x}; }
Iv widen(double x) { return {down(x), up(x)}; }
bool contains_zero(Iv a) { return a.lo <= 0 && a.hi >= 0; }

struct CIv {
    Iv re, im;
};

CIv operator+(CIv a, CIv b) { return {a.re + b.re, a.im + b.im}; }
CIv operator-(CIv a, CIv b) { return {a.re - b.re, a.im - b.im}; }
CIv operator*(CIv a, CIv b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

struct Box {
    Iv x, y;
    double mx() const { return 0.5 * (x.lo + x.hi); }
    double my() const { return 0.5 * (y.lo + y.hi); }
};

CIv eval_interval(const MixedPolynomial& p, Iv x, Iv y) {
    CIv z{x, y}, zb{x, -y};
    std::size_t maxe = 0;
    for (const auto& [k, c] : p.terms()) maxe = std::max<std::size_t>({maxe, k.nu[0], k.mu[0]});
    std::vector<CIv> pz{{thin(1), thin(0)}}, pzb{{thin(1), thin(0)}};
    for (std::size_t e = 1; e <= maxe; ++e) {
        pz.push_back(pz.back() * z);
        pzb.push_back(pzb.back() * zb);
    }
    CIv acc{thin(0), thin(0)};
    for (const auto& [k, c] : p.terms()) {
        CIv coeff{widen(c.re().get_d()), widen(c.im().get_d())};
        acc = acc + coeff * pz[k.nu[0]] * pzb[k.mu[0]];
    }
    return acc;
}

struct OracleSystem {
    MixedPolynomial p, dz, dzb;
    double target;

    // F = (Re p - target, Im p); columns d/dx = dz + dzb, d/dy = i (dz - dzb)
    CIv F(Iv x, Iv y) const {
        CIv v = eval_interval(p, x, y);
        v.re = v.re - widen(target);
        return v;
    }
    void jacobian(Iv x, Iv y, CIv& gx, CIv& gy) const {
        CIv a = eval_interval(dz, x, y), b = eval_interval(dzb, x, y);
        gx = a + b;
        CIv d = a - b;
        gy = {-d.im, d.re};
    }
    cd value(cd z) const {
        std::vector<cd> pt{z};
        return evaluate(p, pt) - target;
    }
    void jacobian(cd z, cd& gx, cd& gy) const {
        std::vector<cd> pt{z};
        cd a = evaluate(dz, pt), b = evaluate(dzb, pt);
        gx = a + b;
        gy = cd(0, 1) * (a - b);
    }
};

enum class CellOutcome { Excluded, Certified, Split };

// Krawczyk operator K = m - Y F(m) + (I - Y J(X)) (X - m), Y = J(m)^-1.
CellOutcome krawczyk(const OracleSystem& sys, const Box& b) {
    double mx = b.mx(), my = b.my();
    cd gxm, gym;
    sys.jacobian(cd(mx, my), gxm, gym);
    double j11 = gxm.real(), j12 = gym.real(), j21 = gxm.imag(), j22 = gym.imag();
    double det = j11 * j22 - j12 * j21;
    if (!(std::abs(det) > 1e-300)) return CellOutcome::Split;
    double y11 = j22 / det, y12 = -j12 / det, y21 = -j21 / det, y22 = j11 / det;
    CIv fm = sys.F(thin(mx), thin(my));
    CIv gx, gy;
    sys.jacobian(b.x, b.y, gx, gy);
    Iv J11 = gx.re, J12 = gy.re, J21 = gx.im, J22 = gy.im;
    Iv M11 = thin(1) - (thin(y11) * J11 + thin(y12) * J21);
    Iv M12 = -(thin(y11) * J12 + thin(y12) * J22);
    Iv M21 = -(thin(y21) * J11 + thin(y22) * J21);
    Iv M22 = thin(1) - (thin(y21) * J12 + thin(y22) * J22);
    Iv dx = b.x - thin(mx), dy = b.y - thin(my);
    Iv kx = thin(mx) - (thin(y11) * fm.re + thin(y12) * fm.im) + (M11 * dx + M12 * dy);
    Iv ky = thin(my) - (thin(y21) * fm.re + thin(y22) * fm.im) + (M21 * dx + M22 * dy);
    if (kx.hi < b.x.lo || kx.lo > b.x.hi || ky.hi < b.y.lo || ky.lo > b.y.hi) return CellOutcome::Excluded;
    if (kx.lo > b.x.lo && kx.hi < b.x.hi && ky.lo > b.y.lo && ky.hi < b.y.hi) return CellOutcome::Certified;
    return CellOutcome::Split;
}

cd newton_polish(const OracleSystem& sys, cd z) {
    for (int it = 0; it < 60; ++it) {
        cd f = sys.value(z), gx, gy;
        sys.jacobian(z, gx, gy);
        double det = gx.real() * gy.imag() - gy.real() * gx.imag();
        if (det == 0) break;
        double sx = (gy.imag() * f.real() - gy.real() * f.imag()) / det;
        double sy = (-gx.imag() * f.real() + gx.real() * f.imag()) / det;
        z -= cd(sx, sy);
        if (std::abs(sx) + std::abs(sy) < 1e-17) break;
    }
    return z;
}

bool touches(const Box& a, const Box& b) {
    return a.x.lo <= b.x.hi && b.x.lo <= a.x.hi && a.y.lo <= b.y.hi && b.y.lo <= a.y.hi;
}

std::size_t cluster_count(const std::vector<Box>& cells) {
    if (cells.size() > 4000) return cells.size();
    std::vector<std::size_t> parent(cells.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j)
            if (touches(cells[i], cells[j])) parent[find(i)] = find(j);
    std::size_t roots = 0;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (find(i) == i) ++roots;
    return roots;
}

bool magnitude_above_one(const LowestFactor& f) {
    if (f.exact_delta) return f.exact_delta->norm() > 1;
    return std::abs(f.delta) > 1 + 1e-9;
}

} // namespace

LowestFactorization lowest_part_factorization(const MixedPolynomial& gp) {
    if (gp.num_vars() != 1) throw InputError("lowest part factorization needs a one-variable polynomial");
    if (gp.is_zero()) throw DomainError("lowest part factorization of the zero polynomial");
    LowestFactorization out;
    out.d_low = std::numeric_limits<int>::max();
    for (const auto& [k, c] : gp.terms()) {
        int d = static_cast<int>(k.nu[0] + k.mu[0]);
        out.d_low = std::min(out.d_low, d);
        out.d_high = std::max(out.d_high, d);
    }
    std::vector<GaussianRational> pc;
    for (const auto& [k, c] : gp.terms()) {
        if (static_cast<int>(k.nu[0] + k.mu[0]) != out.d_low) continue;
        if (pc.size() < k.nu[0] + 1U) pc.resize(k.nu[0] + 1);
        pc[k.nu[0]] = c;
    }
    UPoly P(pc);
    out.c = P.leading();
    out.a = static_cast<int>(P.zero_multiplicity());
    UPoly core = P.shift_down(out.a);
    int total = 0;
    for (const auto& [s, m] : squarefree_decomposition(core)) {
        if (s.degree() == 1) {
            GaussianRational root = -s.coeff(0) / s.coeff(1);
            out.factors.push_back({(-root).to_complex(), -root, m});
        } else {
            for (cd r : numeric_roots(s)) {
                LowestFactor f{-r, std::nullopt, m};
                GaussianRational q(rationalize(r.real(), 1'000'000), rationalize(r.imag(), 1'000'000));
                if (s.evaluate(q).is_zero()) f.exact_delta = -q;
                out.factors.push_back(f);
            }
        }
        total += m * s.degree();
    }
    out.b = out.d_low - out.a - total;
    std::sort(out.factors.begin(), out.factors.end(), [](const LowestFactor& x, const LowestFactor& y) {
        if (x.delta.real() != y.delta.real()) return x.delta.real() < y.delta.real();
        return x.delta.imag() < y.delta.imag();
    });
    return out;
}

OracleCount numeric_count_oracle(const MixedPolynomial& gp, const OracleConfig& config) {
    if (gp.num_vars() != 1) throw InputError("the counting oracle needs a one-variable polynomial");
    if (gp.is_zero()) throw DomainError("the counting oracle needs a nonzero polynomial");
    if (!(config.target > 0) || !(config.radius > 0)) throw InputError("oracle target and radius must be positive");
    OracleSystem sys{gp, wirtinger(gp, 1, WirtingerKind::Holomorphic), wirtinger(gp, 1, WirtingerKind::Antiholomorphic),
                     config.target};
    const double R = config.radius;
    // slightly asymmetric start square keeps roots on the axes off the cell boundaries
    std::vector<std::pair<Box, int>> queue{{Box{{-R * 1.0137, R * 1.0091}, {-R * 1.0213, R * 1.0049}}, 0}};
    std::vector<Box> undecided;
    std::vector<cd> found;
    OracleCount out;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [b, depth] = queue[head];
        if (out.cells >= config.max_cells) {
            undecided.push_back(b);
            continue;
        }
        ++out.cells;
        double cx = std::clamp(0.0, b.x.lo, b.x.hi), cy = std::clamp(0.0, b.y.lo, b.y.hi);
        if (std::hypot(cx, cy) >= R) continue;
        CIv f = sys.F(b.x, b.y);
        if (!contains_zero(f.re) || !contains_zero(f.im)) continue;
        auto outcome = krawczyk(sys, b);
        if (outcome == CellOutcome::Excluded) continue;
        if (outcome == CellOutcome::Certified) {
            cd z = newton_polish(sys, cd(b.mx(), b.my()));
            if (std::abs(z) < R) found.push_back(z);
            continue;
        }
        if (depth >= config.max_depth) {
            undecided.push_back(b);
            continue;
        }
        double mx = b.mx(), my = b.my();
        queue.push_back({Box{{b.x.lo, mx}, {b.y.lo, my}}, depth + 1});
        queue.push_back({Box{{mx, b.x.hi}, {b.y.lo, my}}, depth + 1});
        queue.push_back({Box{{b.x.lo, mx}, {my, b.y.hi}}, depth + 1});
        queue.push_back({Box{{mx, b.x.hi}, {my, b.y.hi}}, depth + 1});
    }
    for (cd z : found) {
        bool dup = false;
        for (cd w : out.solutions)
            if (std::abs(z - w) < 1e-8) dup = true;
        if (!dup) out.solutions.push_back(z);
    }
    std::sort(out.solutions.begin(), out.solutions.end(), [](cd a, cd b) { return std::arg(a) < std::arg(b); });
    out.undecided_cells = undecided.size();
    out.lower = static_cast<int>(out.solutions.size());
    out.upper = out.lower + static_cast<int>(cluster_count(undecided));
    out.min_residual = std::numeric_limits<double>::infinity();
    for (cd z : out.solutions) {
        std::vector<cd> pt{z};
        if (z != cd(0, 0)) out.min_residual = std::min(out.min_residual, criticality_residual(gp, pt));
    }
    if (out.solutions.empty()) out.min_residual = 0;
    return out;
}

std::string count_method_name(CountMethod m) {
    switch (m) {
    case CountMethod::Formula: return "formula";
    case CountMethod::Oracle: return "oracle";
    case CountMethod::MismatchReport: return "mismatch-report";
    case CountMethod::Undefined: return "undefined";
    }
    return "undefined";
}

FiberCount count_fiber_points(const MixedPolynomial& g, int axis, const OracleConfig& config) {
    if (g.num_vars() != 2) throw InputError("fiber counting needs a 2-variable g");
    if (axis != 1 && axis != 2) throw InputError("axis must be 1 or 2");
    FiberCount out;
    std::vector<GaussianRational> zero{GaussianRational(0)};
    MixedPolynomial gp = substitute(g, {axis}, zero);
    if (gp.is_zero()) {
        out.method = CountMethod::Undefined;
        out.note = "g vanishes identically on z" + std::to_string(axis) + " = 0 (vanishing coordinate subspace)";
        return out;
    }
    return count_axis_restriction(gp, config);
}

FiberCount count_axis_restriction(const MixedPolynomial& gp, const OracleConfig& config) {
    if (gp.num_vars() != 1) throw InputError("an axis restriction has one variable");
    FiberCount out;
    out.factorization = lowest_part_factorization(gp);
    const auto& fac = *out.factorization;
    int formula = fac.a - fac.b;
    bool big = true;
    for (const auto& f : fac.factors) {
        formula += f.multiplicity;
        if (!magnitude_above_one(f)) big = false;
    }
    out.formula = formula;
    out.hypotheses_hold = (fac.factors.empty() || big) && formula >= 0;
    out.oracle = numeric_count_oracle(gp, config);
    const auto& o = *out.oracle;
    std::string formula_text = "formula a - b + sum mu = " + std::to_string(formula);
    std::string oracle_text = o.exact() ? "oracle count " + std::to_string(o.lower)
                                        : "oracle bounds [" + std::to_string(o.lower) + ", " + std::to_string(o.upper) + "]";
    if (!out.hypotheses_hold) {
        out.method = CountMethod::Oracle;
        out.note = formula < 0 ? "formula value negative; " : "hypothesis |delta_k| > 1 fails; ";
        if (o.exact()) out.count = o.lower;
        out.note += formula_text + ", " + oracle_text;
    } else if (o.exact()) {
        if (o.lower == formula) {
            out.method = CountMethod::Formula;
            out.count = formula;
            out.note = formula_text + " agrees with the " + oracle_text;
        } else {
            out.method = CountMethod::MismatchReport;
            out.count = o.lower;
            out.note = formula_text + " disagrees with the " + oracle_text + "; returning the oracle count";
        }
    } else if (formula >= o.lower && formula <= o.upper) {
        out.method = CountMethod::Formula;
        out.count = formula;
        out.note = formula_text + " within " + oracle_text;
    } else {
        out.method = CountMethod::MismatchReport;
        out.note = formula_text + " outside " + oracle_text + "; count undecided";
    }
    if (!o.solutions.empty() && o.min_residual <= 1e-9)
        out.note += "; regularity spot-check failed (critical fiber point)";
    return out;
}

JoinReport join_zeta(const JoinInput& input, const OracleConfig& config) {
    if (input.g.num_vars() != 2) throw InputError("join needs a 2-variable g");
    input.link.validate();
    if (input.link.r() < 2) throw InputError("the link needs the two axis components K1, K2");
    JoinReport rep;
    rep.axis = check_axis_rule(input.link, input.g);
    if (input.counts) {
        rep.counts_supplied = true;
        rep.n1 = input.counts->first;
        rep.n2 = input.counts->second;
        if (rep.n1 < 0 || rep.n2 < 0) throw InputError("fiber counts must be non-negative");
    } else {
        rep.count1 = count_fiber_points(input.g, 1, config);
        rep.count2 = count_fiber_points(input.g, 2, config);
        for (const auto* c : {&*rep.count1, &*rep.count2})
            if (c->method != CountMethod::Undefined && !c->count)
                throw DomainError("fiber count undecided (" + c->note + "); supply counts explicitly");
        rep.n1 = rep.count1->count.value_or(0);
        rep.n2 = rep.count2->count.value_or(0);
    }
    rep.zeta_f1 = zeta_from_monodromy(input.mono1);
    rep.zeta_f2 = zeta_from_monodromy(input.mono2);
    rep.prefactor1 = rep.n2 == 0 ? ZetaFunction::one() : rep.zeta_f1.substitute_power(rep.n2);
    rep.prefactor2 = rep.n1 == 0 ? ZetaFunction::one() : rep.zeta_f2.substitute_power(rep.n1);
    int r = static_cast<int>(input.link.r());
    LaurentPoly alex = input.link.alexander.vars() == r ? input.link.alexander : input.link.alexander.promoted(r);
    if (alex.is_zero()) throw DomainError("the Alexander polynomial is zero");
    rep.alexander = to_nonnegative(alex).poly;
    ZetaFunction product = ZetaFunction::one();
    for (int q : total_degrees(input.mono1, input.mono2)) {
        GradedE e = graded_E(input.mono1, input.mono2, q);
        std::size_t n = e.e1.rows();
        std::vector<PolyMatrix> args;
        for (int j = 0; j < r; ++j) {
            const auto& comp = input.link.components[j];
            if (j < 2) {
                const QMatrix& base = j == 0 ? e.e1 : e.e2;
                args.push_back(to_poly_matrix(comp.reversed ? inverse(base) : base, comp.m));
            } else {
                args.push_back(to_poly_matrix(QMatrix::identity(n), comp.m));
            }
        }
        LaurentPoly det = det_poly(substitute_matrices(rep.alexander, args));
        if (det.is_zero()) throw DomainError("determinant factor vanishes in degree q = " + std::to_string(q));
        int exponent = q % 2 == 0 ? 1 : -1;
        product = product * ZetaFunction::power_of(det, exponent);
        rep.factors.push_back({q, n, det, exponent});
    }
    rep.zeta = rep.prefactor1 * rep.prefactor2 * product;
    return rep;
}

long euler_join(long chi_g_minus_axes, long chi1, long chi2, long n1, long n2) {
    return chi_g_minus_axes * chi1 * chi2 + n1 * chi2 + n2 * chi1;
}

std::string check_status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
    }
    return "FAIL";
}

std::vector<CheckEntry> cross_check(const JoinInput& input, const JoinReport& report,
                                    std::optional<long> chi_g_minus_axes, const OracleConfig& config) {
    std::vector<CheckEntry> out;
    out.push_back({"axis-rule", report.axis.consistent ? CheckStatus::Pass : CheckStatus::Fail,
                   report.axis.consistent ? "axis multiplicities match the vanishing of g on the axes"
                                          : report.axis.message});
    if (chi_g_minus_axes) {
        long chi1 = input.mono1.euler_characteristic(), chi2 = input.mono2.euler_characteristic();
        long expected = euler_join(*chi_g_minus_axes, chi1, chi2, report.n1, report.n2);
        long got = euler_from_zeta(report.zeta);
        out.push_back({"euler", got == expected ? CheckStatus::Pass : CheckStatus::Fail,
                       "chi from zeta = " + std::to_string(got) + ", chi from fibers = " + std::to_string(expected)});
    } else {
        out.push_back({"euler", CheckStatus::Skip, "no chi(F_g minus axes) supplied"});
    }
    CheckEntry rev{"orientation-reversal", CheckStatus::Pass, ""};
    for (int j = 1; j <= static_cast<int>(input.link.r()); ++j) {
        JoinInput flipped = input;
        flipped.link = reverse_orientation(input.link, j);
        flipped.counts = std::make_pair(report.n1, report.n2);
        std::string label = input.link.components[j - 1].label;
        try {
            auto z = join_zeta(flipped, config).zeta;
            if (!(z == report.zeta)) {
                rev.status = CheckStatus::Fail;
                rev.detail += (rev.detail.empty() ? "" : "; ") + label + ": " + z.to_string();
            }
        } catch (const std::exception& ex) {
            rev.status = CheckStatus::Fail;
            rev.detail += (rev.detail.empty() ? "" : "; ") + label + ": " + ex.what();
        }
    }
    if (rev.status == CheckStatus::Pass)
        rev.detail = "zeta unchanged after reversing each of the " + std::to_string(input.link.r()) + " components";
    out.push_back(rev);
    if (report.counts_supplied) {
        out.push_back({"fiber-counts", CheckStatus::Skip, "counts supplied by the input"});
    } else {
        CheckEntry c{"fiber-counts", CheckStatus::Pass, ""};
        for (const auto* fc : {&*report.count1, &*report.count2}) {
            if (fc->method == CountMethod::MismatchReport) c.status = CheckStatus::Fail;
            c.detail += (c.detail.empty() ? "" : "; ") + count_method_name(fc->method) + ": " + fc->note;
        }
        out.push_back(c);
    }
    return out;
}

} // namespace mixjoin
