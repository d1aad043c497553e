#include "mixjoin/cli.hpp"
#include "mixjoin/degeneracy.hpp"
#include "mixjoin/fox.hpp"
#include "mixjoin/joincore.hpp"
#include "mixjoin/link.hpp"
#include "mixjoin/mixed_poly.hpp"
#include "mixjoin/zeta.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace mixjoin;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

LaurentPoly lam(std::int64_t k, long c = 1) { return LaurentPoly::monomial({k}, GaussianRational(c)); }

QMatrix qm(std::vector<std::vector<long>> rows) {
    std::vector<std::vector<GaussianRational>> r;
    for (auto& row : rows) {
        r.emplace_back();
        for (long v : row) r.back().emplace_back(v);
    }
    return QMatrix::from_rows(r);
}

QMatrix cyclic_permutation(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m((i + 1) % n, i) = GaussianRational(1);
    return m;
}

QMatrix random_int_matrix(std::mt19937_64& rng, std::size_t n, int range = 2) {
    std::uniform_int_distribution<int> d(-range, range);
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = GaussianRational(d(rng));
    return m;
}

QMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        auto m = random_int_matrix(rng, n);
        if (!determinant(m).is_zero()) return m;
    }
}

// Product of elementary integer row operations and sign flips: determinant +-1.
QMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
    QMatrix m = QMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> c(-2, 2), coin(0, 3);
    for (int step = 0; step < 6; ++step) {
        std::size_t i = idx(rng), j = idx(rng);
        QMatrix e = QMatrix::identity(n);
        if (i != j) e(i, j) = GaussianRational(c(rng));
        else if (coin(rng) == 0) e(i, i) = GaussianRational(-1);
        m = e * m;
    }
    return m;
}

GradedMonodromy random_graded(std::mt19937_64& rng, std::size_t max_total) {
    std::uniform_int_distribution<std::size_t> total_d(1, max_total);
    std::uniform_int_distribution<int> deg(0, 2);
    std::size_t total = total_d(rng);
    std::map<int, std::size_t> sizes;
    for (std::size_t k = 0; k < total; ++k) ++sizes[deg(rng)];
    std::map<int, QMatrix> blocks;
    for (auto [q, n] : sizes) blocks[q] = random_unimodular(rng, n);
    return GradedMonodromy(blocks);
}

// Cofactor expansion along the first row.
LaurentPoly cofactor_det(const PolyMatrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return LaurentPoly(1);
    if (n == 1) return m(0, 0);
    LaurentPoly sum;
    for (std::size_t j = 0; j < n; ++j) {
        PolyMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        LaurentPoly t = m(0, j) * cofactor_det(minor);
        if (j % 2 == 0) sum += t;
        else sum -= t;
    }
    return sum;
}

PolyMatrix random_laurent_matrix(std::mt19937_64& rng, std::size_t n, int vars) {
    std::uniform_int_distribution<int> coef(-3, 3), ex(-2, 2), count(0, 3);
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LaurentPoly e = LaurentPoly::zero(vars);
            int k = count(rng);
            for (int t = 0; t < k; ++t) {
                LaurentPoly::Exps x(vars);
                for (auto& v : x) v = ex(rng);
                e.add_term(x, GaussianRational(coef(rng)));
            }
            m(i, j) = e;
        }
    return m;
}

// Coefficients a_0..a_n of det(x I - M) by the Faddeev-LeVerrier recursion.
std::vector<GaussianRational> charpoly(const QMatrix& m) {
    std::size_t n = m.rows();
    std::vector<GaussianRational> a(n + 1);
    a[n] = GaussianRational(1);
    QMatrix mk = QMatrix(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        QMatrix prev = mk;
        for (std::size_t i = 0; i < n; ++i) prev(i, i) += a[n - k + 1];
        mk = m * prev;
        GaussianRational tr;
        for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
        a[n - k] = -(tr / GaussianRational(static_cast<long>(k)));
    }
    return a;
}

// det(lambda^e M - I) = (-1)^n sum_k a_k lambda^(e (n - k)).
LaurentPoly det_scaled_minus_identity(const QMatrix& m, std::int64_t e) {
    auto a = charpoly(m);
    std::size_t n = m.rows();
    LaurentPoly p = LaurentPoly::zero(1);
    for (std::size_t k = 0; k <= n; ++k)
        if (!a[k].is_zero()) p.add_term({e * static_cast<std::int64_t>(n - k)}, n % 2 ? -a[k] : a[k]);
    return p;
}

// Integer polynomial prod (1 - lambda w) over roots of unity w, rounded from complex arithmetic.
std::optional<LaurentPoly> product_over_eigenvalues(const std::vector<std::complex<double>>& ws) {
    std::vector<std::complex<double>> c{1.0};
    for (auto w : ws) {
        std::vector<std::complex<double>> next(c.size() + 1, 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k] += c[k];
            next[k + 1] -= w * c[k];
        }
        c = next;
    }
    LaurentPoly p = LaurentPoly::zero(1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        double r = std::round(c[k].real());
        if (std::abs(c[k].real() - r) > 1e-9 || std::abs(c[k].imag()) > 1e-9) return std::nullopt;
        if (r != 0) p.add_term({static_cast<std::int64_t>(k)}, GaussianRational(static_cast<long>(r)));
    }
    return p;
}

FreeWord random_word(std::mt19937_64& rng, int mu, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), gen(1, mu), sign(0, 1);
    std::vector<Letter> l;
    int n = len(rng);
    for (int k = 0; k < n; ++k) l.push_back({gen(rng), sign(rng) ? 1 : -1});
    return FreeWord(l);
}

struct Result {
    bool pass = false;
    std::string detail;
};

JoinInput cusp_input() {
    JoinInput in;
    in.g = parse("z1^2+z2^3", 2);
    in.mono1 = GradedMonodromy({{0, qm({{1}})}});
    in.mono2 = GradedMonodromy({{0, qm({{0, 1}, {1, 0}})}});
    in.link = builtin_alexander("brieskorn-with-axes", {2, 3});
    return in;
}

Result ac1() {
    auto t0 = Clock::now();
    auto path = (std::filesystem::temp_directory_path() / "mixjoin_acceptance_cusp.json").string();
    std::ofstream(path) << R"({"g": "z1^2+z2^3",
        "mono1": {"blocks": [{"q": 0, "matrix": [[1]]}]},
        "mono2": {"blocks": [{"q": 0, "matrix": [[0, 1], [1, 0]]}]},
        "link": {"builtin": "brieskorn-with-axes", "params": [2, 3]}})";
    const char* argv[] = {"mixjoin", "join", "--bundle", path.c_str()};
    std::ostringstream out, err;
    int code = run_cli(4, argv, out, err);
    bool cli_ok = code == 0 && out.str().find("zeta_f = lambda^4 + lambda^2 + 1") != std::string::npos;

    auto rep = join_zeta(cusp_input());
    ZetaFunction expect(lam(4) + lam(2) + lam(0), lam(0));
    ZetaFunction prefactor(lam(0), (lam(2) - lam(0)) * (lam(6) - lam(0)));
    bool zeta_ok = zeta_eq_up_to_unit(rep.zeta, expect);
    bool counts_ok = rep.n1 == 3 && rep.n2 == 2;
    bool pre_ok = zeta_eq_up_to_unit(rep.prefactor1 * rep.prefactor2, prefactor);
    bool det_ok = rep.factors.size() == 1 && rep.factors[0].q == 0 && rep.factors[0].det == (lam(6) - lam(0)).pow(2);
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << "zeta = " << rep.zeta.to_string() << ", n1 = " << rep.n1 << ", n2 = " << rep.n2
      << ", prefactor = " << (rep.prefactor1 * rep.prefactor2).to_string()
      << ", det = " << (rep.factors.empty() ? std::string("-") : rep.factors[0].det.to_string()) << ", cli exit "
      << code << ", " << secs << " s";
    return {cli_ok && zeta_ok && counts_ok && pre_ok && det_ok && secs < 1.0, d.str()};
}

Result ac2() {
    auto rep = join_zeta(cusp_input());
    long chi_zeta = euler_from_zeta(rep.zeta);
    // Milnor number of z1^a + z2^b is (a-1)(b-1); chi(F_g) = 1 - mu.
    long mu = (2 - 1) * (3 - 1);
    long chi_g = 1 - mu;
    auto c1 = count_fiber_points(parse("z1^2+z2^3", 2), 1);
    auto c2 = count_fiber_points(parse("z1^2+z2^3", 2), 2);
    if (!c1.count || !c2.count) return {false, "axis counts undecided"};
    long chi_minus_axes = chi_g - *c1.count - *c2.count;
    long chi1 = euler_from_zeta(rep.zeta_f1);
    long chi2 = euler_from_zeta(rep.zeta_f2);
    long chi_join = euler_join(chi_minus_axes, chi1, chi2, 3, 2);
    long chi_literal = euler_join(-6, 1, 2, 3, 2);
    std::ostringstream d;
    d << "euler_from_zeta = " << chi_zeta << ", chi(F_g minus axes) = " << chi_minus_axes << ", chi1 = " << chi1
      << ", chi2 = " << chi2 << ", euler_join = " << chi_join << ", euler_join(-6,1,2,3,2) = " << chi_literal;
    return {chi_zeta == -4 && chi_minus_axes == -6 && chi1 == 1 && chi2 == 2 && chi_join == -4 && chi_literal == -4,
            d.str()};
}

// prod over blocks of det(lambda^e H1i^p2 (x) H2j^p1 - I)^((-1)^(i+j) (k+l)).
ZetaFunction oka_closed_form(const GradedMonodromy& m1, const GradedMonodromy& m2, long p1, long p2, long k, long l) {
    std::int64_t e = p1 + p2 + p1 * p2 * (k - l);
    ZetaFunction z;
    for (const auto& [i, h1] : m1.blocks())
        for (const auto& [j, h2] : m2.blocks()) {
            QMatrix m = kron(h1.pow(p2), h2.pow(p1));
            int sign = (i + j) % 2 ? -1 : 1;
            z = z * ZetaFunction::power_of(det_scaled_minus_identity(m, e), sign * static_cast<int>(k + l));
        }
    return z;
}

Result ac3() {
    std::ostringstream d;
    bool ok = true;
    struct Case {
        GradedMonodromy m1, m2;
        const char* name;
    };
    std::vector<Case> cases{{GradedMonodromy({{0, qm({{1}})}}), GradedMonodromy({{0, qm({{1}})}}), "identity"},
                            {GradedMonodromy({{0, cyclic_permutation(2)}}), GradedMonodromy({{0, cyclic_permutation(3)}}),
                             "permutations"}};
    for (const auto& c : cases) {
        JoinInput in;
        in.g = parse("z1*z2*(z1^2+z2^3)", 2);
        in.mono1 = c.m1;
        in.mono2 = c.m2;
        in.link = builtin_alexander("oka-family", {2, 3, 1, 0});
        auto rep = join_zeta(in);
        auto rhs = oka_closed_form(c.m1, c.m2, 2, 3, 1, 0);
        bool same = zeta_eq_up_to_unit(rep.zeta, rhs);
        ok = ok && same;
        d << c.name << ": join " << rep.zeta.to_string() << " vs closed form " << rhs.to_string() << "; ";
    }
    return {ok, d.str()};
}

Result ac4() {
    std::ostringstream d;
    bool ok = true;
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
        JoinInput in;
        in.g = parse("z1+z2", 2);
        in.mono1 = GradedMonodromy({{0, cyclic_permutation(a)}});
        in.mono2 = GradedMonodromy({{0, cyclic_permutation(b)}});
        in.link = builtin_alexander("hopf-r", {3});
        auto rep = join_zeta(in);
        std::vector<std::complex<double>> ws;
        for (int i = 1; i < a; ++i)
            for (int j = 1; j < b; ++j)
                ws.push_back(std::polar(1.0, 2 * std::numbers::pi * (double(i) / a + double(j) / b)));
        auto num = product_over_eigenvalues(ws);
        if (!num) return {false, "eigenvalue product is not integral"};
        ZetaFunction oracle(*num, lam(0) - lam(1));
        bool same = zeta_eq_up_to_unit(rep.zeta, oracle);
        ok = ok && same;
        d << "(" << a << "," << b << "): join " << rep.zeta.to_string() << " vs oracle " << oracle.to_string() << "; ";
    }
    return {ok, d.str()};
}

Result ac5() {
    auto run = [] {
        auto refuted = check_local_tameness(parse("z1*z2*bar(z2)", 2));
        auto verified = check_local_tameness(parse("z1*z2^2*bar(z2)", 2));
        return std::make_pair(refuted, verified);
    };
    auto [refuted, verified] = run();
    auto [refuted2, verified2] = run();
    bool any_refuted = false, torus_witness = false;
    for (const auto& t : refuted)
        if (t.status == VerdictStatus::Refuted) {
            any_refuted = true;
            if (t.witness) {
                torus_witness = !t.witness->point.empty();
                for (auto z : t.witness->point) torus_witness = torus_witness && std::abs(z) > 0;
                torus_witness = torus_witness && (t.witness->exact || t.witness->residual < 1e-9);
            }
        }
    bool all_verified = !verified.empty();
    bool circle_rule = false;
    for (const auto& t : verified) {
        all_verified = all_verified && t.status == VerdictStatus::Verified;
        for (const auto& inst : t.instances)
            for (const auto& v : inst.verdicts)
                if (v.rule == "one-variable-circle") circle_rule = true;
    }
    auto sig = [](const std::vector<TamenessVerdict>& v) {
        std::string s;
        for (const auto& t : v) s += std::string(status_name(t.status)) + t.rule + t.evidence + ";";
        return s;
    };
    bool deterministic = sig(refuted) == sig(refuted2) && sig(verified) == sig(verified2);
    std::ostringstream d;
    d << std::boolalpha << "z1*z2*bar(z2) refuted " << any_refuted << " (torus witness " << torus_witness
      << "), z1*z2^2*bar(z2) verified " << all_verified << " (one-variable rule used " << circle_rule
      << "), deterministic " << deterministic;
    return {any_refuted && torus_witness && all_verified && circle_rule && deterministic, d.str()};
}

Result ac6() {
    std::mt19937_64 rng(2024);
    struct Setup {
        const char* g;
        const char* family;
        std::vector<std::int64_t> params;
        std::pair<int, int> counts;
    };
    std::vector<Setup> setups{{"z1^2+z2^3", "brieskorn-with-axes", {2, 3}, {3, 2}},
                              {"z1+z2", "hopf-r", {3}, {1, 1}}};
    int checked = 0;
    for (const auto& s : setups) {
        auto link = builtin_alexander(s.family, s.params);
        for (int trial = 0; trial < 20; ++trial) {
            JoinInput in;
            in.g = parse(s.g, 2);
            in.mono1 = random_graded(rng, 4);
            in.mono2 = random_graded(rng, 4);
            in.link = link;
            in.counts = s.counts;
            auto base = join_zeta(in).zeta;
            for (int j = 1; j <= static_cast<int>(link.r()); ++j) {
                JoinInput rev = in;
                rev.link = reverse_orientation(link, j);
                auto z = join_zeta(rev).zeta;
                ++checked;
                if (!zeta_eq_up_to_unit(z, base)) {
                    std::ostringstream d;
                    d << s.family << " trial " << trial << " component " << j << ": " << base.to_string() << " vs "
                      << z.to_string();
                    return {false, d.str()};
                }
            }
        }
    }
    return {true, std::to_string(checked) + " reversals over 40 random monodromy pairs left zeta unchanged"};
}

Result ac7() {
    std::mt19937_64 rng(77);
    int identities = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int mu = 1 + trial % 3;
        auto w = random_word(rng, mu, 12);
        GroupRingElement rhs;
        for (int j = 1; j <= mu; ++j)
            rhs += fox_derivative(w, j) * (GroupRingElement::of(FreeWord::generator(j)) - GroupRingElement::of(FreeWord()));
        if (!(rhs == GroupRingElement::of(w) - GroupRingElement::of(FreeWord())))
            return {false, "fundamental identity fails for " + w.to_string()};
        ++identities;
    }
    std::uniform_int_distribution<int> sc(1, 3);
    int reps = 0;
    for (int trial = 0; trial < 20; ++trial) {
        int mu = 1 + trial % 3;
        std::size_t dim = 1 + (trial / 3) % 3;
        std::map<std::string, QMatrix> images;
        for (int i = 1; i <= mu; ++i) images["b" + std::to_string(i)] = random_invertible(rng, dim);
        auto u = random_word(rng, mu, 3);
        Representation pre(dim, images);
        images["h"] = pre.evaluate(u).scaled(GaussianRational(sc(rng) * (trial % 2 ? 1 : -1)));
        Representation rho(dim, images);
        std::vector<FreeWord> words;
        for (int i = 1; i <= mu; ++i) words.push_back(u.inverse() * FreeWord::generator(i) * u);
        auto hd = h_der_matrix(words, rho);
        auto dl = delta_matrix(rho, mu);
        if (!ladder_commutes(hd, dl, rho.image("h")))
            return {false, "ladder fails on representation " + std::to_string(trial)};
        if (!cohomology_dims(rho, mu).exact())
            return {false, "dimension count fails on representation " + std::to_string(trial)};
        ++reps;
    }
    return {true, std::to_string(identities) + " words, " + std::to_string(reps) + " representations"};
}

Result ac8() {
    std::mt19937_64 rng(88);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + trial % 5;
        auto m = random_laurent_matrix(rng, n, 1 + trial % 3);
        if (!(det_poly(m) == cofactor_det(m))) return {false, "det_poly differs from cofactor on matrix " + std::to_string(trial)};
    }
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_graded(rng, 4);
        auto b = random_graded(rng, 4);
        if (!(zeta_from_monodromy(a.direct_sum(b)) == zeta_from_monodromy(a) * zeta_from_monodromy(b)))
            return {false, "direct sum multiplicativity fails on pair " + std::to_string(trial)};
    }
    for (int trial = 0; trial < 20; ++trial) {
        auto h = random_int_matrix(rng, 1 + trial % 3);
        for (int n = 1; n <= 4; ++n) {
            auto t = cyclic_block(h, n, CyclicConvention::OneTwist);
            if (!(char_factor(t) == char_factor(h).substitute_power(0, n)))
                return {false, "one-twist identity fails for n = " + std::to_string(n)};
        }
    }
    return {true, "50 determinants, 20 direct sums, 80 one-twist blocks"};
}

Result ac9() {
    std::ostringstream d;
    bool ok = true;
    double worst = 0;
    auto timed = [&](const std::string& expr) {
        auto t0 = Clock::now();
        auto c = count_axis_restriction(parse(expr, 1));
        worst = std::max(worst, seconds_since(t0));
        return c;
    };
    for (int deg = 1; deg <= 6; ++deg) {
        auto c = timed("z1^" + std::to_string(deg));
        bool good = c.method == CountMethod::Formula && c.formula == deg && c.oracle && c.oracle->exact() &&
                    c.oracle->lower == deg;
        ok = ok && good;
        if (!good) d << "z^" << deg << " failed; ";
    }
    auto c = timed("z1^2*bar(z1)");
    bool c_ok = c.count == 1 && c.oracle && c.oracle->exact() && c.oracle->lower == 1;
    ok = ok && c_ok;
    auto s = timed("z1^2+2*z1*bar(z1)");
    bool s_ok = s.method == CountMethod::MismatchReport && s.formula == 2 && s.oracle && s.oracle->lower == 4 &&
                s.note.find('2') != std::string::npos && s.note.find('4') != std::string::npos;
    ok = ok && s_ok;
    d << "z^d (d=1..6) agree; z^2 zbar -> " << (c.count ? std::to_string(*c.count) : "?") << "; stress case "
      << count_method_name(s.method) << " (formula " << (s.formula ? *s.formula : -1) << ", oracle "
      << (s.oracle ? s.oracle->lower : -1) << "); slowest case " << worst << " s";
    return {ok && worst < 5.0, d.str()};
}

} // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Result()>>> criteria{
        {"AC1 cusp join end to end", ac1},       {"AC2 Euler characteristic", ac2},
        {"AC3 oka family closed form", ac3},     {"AC4 classical join oracle", ac4},
        {"AC5 tameness discrimination", ac5},    {"AC6 orientation reversal invariance", ac6},
        {"AC7 Fox calculus suite", ac7},         {"AC8 algebra oracles", ac8},
        {"AC9 fiber counting", ac9}};
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Result r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        if (!r.pass) ++failures;
        std::cout << (r.pass ? "PASS " : "FAIL ") << name << ": " << r.detail << "\n";
    }
    return failures == 0 ? 0 : 1;
}
