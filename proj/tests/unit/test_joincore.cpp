#include "doctest.h"

#include "mixjoin/error.hpp"
#include "mixjoin/joincore.hpp"
#include "support.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace mixjoin;
using cd = std::complex<double>;

namespace {

MixedPolynomial P1(const char* s) { return parse(s, 1); }
MixedPolynomial P2(const char* s) { return parse(s, 2); }

QMatrix perm(int n) { return cyclic_block(QMatrix::identity(1), n); }

GradedMonodromy degree0(const QMatrix& m) { return GradedMonodromy({{0, m}}); }

LaurentPoly lam(std::int64_t k) { return LaurentPoly::monomial({k}); }

// Count of solutions of a homogeneous 1-variable gp = target: z = r e^{i theta},
// gp = r^d h(theta); solutions are the zeros of Im h with Re h > 0, r = (target / h)^{1/d}.
int polar_count(const MixedPolynomial& gp, double target, double radius) {
    int d = 0;
    for (const auto& [k, c] : gp.terms()) d = static_cast<int>(k.nu[0] + k.mu[0]);
    auto h = [&](double t) {
        std::vector<cd> pt{std::polar(1.0, t)};
        return evaluate(gp, pt);
    };
    const int grid = 20000;
    int count = 0;
    for (int g = 0; g < grid; ++g) {
        const double off = 0.123456789;
        double a = off + 2 * std::numbers::pi * g / grid, b = off + 2 * std::numbers::pi * (g + 1) / grid;
        double ia = h(a).imag(), ib = h(b).imag();
        if ((ia < 0) != (ib < 0)) {
            for (int it = 0; it < 60; ++it) {
                double m = 0.5 * (a + b);
                if ((h(m).imag() < 0) == (ia < 0)) a = m;
                else b = m;
            }
            double re = h(a).real();
            if (re > 0 && std::pow(target / re, 1.0 / d) < radius) ++count;
        }
    }
    return count;
}

} // namespace

TEST_CASE("lowest part factorization examples") {
    auto f = lowest_part_factorization(P1("z1^3"));
    CHECK(f.a == 3);
    CHECK(f.b == 0);
    CHECK(f.factors.empty());
    CHECK(f.c == GaussianRational(1));

    auto g = lowest_part_factorization(P1("z1^2*bar(z1)"));
    CHECK(g.a == 2);
    CHECK(g.b == 1);
    CHECK(g.factors.empty());

    auto s = lowest_part_factorization(P1("z1^2+2*z1*bar(z1)+z1^5"));
    CHECK(s.a == 1);
    CHECK(s.b == 0);
    CHECK(s.d_low == 2);
    CHECK(s.d_high == 5);
    REQUIRE(s.factors.size() == 1);
    REQUIRE(s.factors[0].exact_delta.has_value());
    CHECK(*s.factors[0].exact_delta == GaussianRational(2));
    CHECK(s.factors[0].multiplicity == 1);

    CHECK_THROWS_AS(lowest_part_factorization(MixedPolynomial(1)), DomainError);
    CHECK_THROWS_AS(lowest_part_factorization(P2("z1")), InputError);
}

TEST_CASE("lowest part factorization reconstructs constructed products") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        GaussianRational c = testsupport::random_nonzero_gr(rng);
        int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3);
        MixedPolynomial prod = MixedPolynomial::monomial(c, {{static_cast<Exponent>(a)}, {static_cast<Exponent>(b)}});
        std::vector<std::pair<GaussianRational, int>> built;
        int k = static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) {
            GaussianRational delta = testsupport::random_nonzero_gr(rng) + GaussianRational(static_cast<long>(10 * i));
            int mu = 1 + static_cast<int>(rng() % 2);
            built.emplace_back(delta, mu);
            prod = prod * (MixedPolynomial::variable(1, 1) + MixedPolynomial::conj_variable(1, 1).scaled(delta))
                              .pow(static_cast<std::uint32_t>(mu));
        }
        int dlow = a + b;
        for (auto& [d, m] : built) dlow += m;
        prod = prod + MixedPolynomial::monomial(GaussianRational(7), {{static_cast<Exponent>(dlow + 1)}, {0}});
        auto f = lowest_part_factorization(prod);
        CHECK(f.a == a);
        CHECK(f.b == b);
        CHECK(f.c == c);
        CHECK(f.d_low == dlow);
        int total = 0;
        for (const auto& lf : f.factors) {
            total += lf.multiplicity;
            REQUIRE(lf.exact_delta.has_value());
            bool match = false;
            for (auto& [d, m] : built)
                if (d == *lf.exact_delta && m == lf.multiplicity) match = true;
            CHECK(match);
        }
        int expected = 0;
        for (auto& [d, m] : built) expected += m;
        CHECK(total == expected);
    }
    // irrational roots: z^2 + 3 z zbar + zbar^2 gives t^2 + 3t + 1
    auto f = lowest_part_factorization(P1("z1^2+3*z1*bar(z1)+bar(z1)^2"));
    REQUIRE(f.factors.size() == 2);
    CHECK_FALSE(f.factors[0].exact_delta.has_value());
    CHECK(std::abs(f.factors[0].delta * f.factors[1].delta - 1.0) < 1e-12);
    CHECK(std::abs(f.factors[0].delta + f.factors[1].delta - 3.0) < 1e-12);
}

TEST_CASE("counting oracle examples") {
    for (int d = 1; d <= 6; ++d) {
        MixedPolynomial p = MixedPolynomial::variable(1, 1).pow(static_cast<std::uint32_t>(d));
        auto o = numeric_count_oracle(p);
        CHECK(o.exact());
        CHECK(o.lower == d);
    }
    auto o1 = numeric_count_oracle(P1("z1^2*bar(z1)"));
    CHECK(o1.exact());
    CHECK(o1.lower == 1);
    REQUIRE(o1.solutions.size() == 1);
    CHECK(std::abs(o1.solutions[0] - 0.1) < 1e-12);
    auto o2 = numeric_count_oracle(P1("z1^2+2*z1*bar(z1)"));
    CHECK(o2.exact());
    CHECK(o2.lower == 4);
    CHECK(o2.min_residual > 1e-9);
    OracleConfig tiny;
    tiny.radius = 0.05;
    CHECK(numeric_count_oracle(P1("z1^3"), tiny).lower == 0);
}

TEST_CASE("counting oracle against the polar count on homogeneous inputs") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 25; ++trial) {
        int d = 1 + static_cast<int>(rng() % 4);
        MixedPolynomial p(1);
        for (int t = 0; t < 2; ++t) {
            Exponent nu = static_cast<Exponent>(rng() % (d + 1));
            p.add_term({{nu}, {static_cast<Exponent>(d - nu)}}, testsupport::random_nonzero_gr(rng, 3));
        }
        if (p.is_zero()) continue;
        auto o = numeric_count_oracle(p);
        CHECK(o.exact());
        CHECK_MESSAGE(o.lower == polar_count(p, 1e-3, 0.5), p.to_string());
    }
}

TEST_CASE("count fiber points") {
    auto g = P2("z1^2+z2^3");
    auto n1 = count_fiber_points(g, 1);
    CHECK(n1.count == 3);
    CHECK(n1.method == CountMethod::Formula);
    auto n2 = count_fiber_points(g, 2);
    CHECK(n2.count == 2);
    auto u = count_fiber_points(P2("z1*z2^2*bar(z2)"), 1);
    CHECK_FALSE(u.count.has_value());
    CHECK(u.method == CountMethod::Undefined);
    auto stress = count_fiber_points(P2("z1^3+z2^2+2*z2*bar(z2)"), 1);
    CHECK(stress.formula == 2);
    CHECK(stress.count == 4);
    CHECK(stress.method == CountMethod::MismatchReport);
    auto small = count_fiber_points(P2("z1^2+z2^2+z2*bar(z2)"), 1);
    CHECK_FALSE(small.hypotheses_hold);
    CHECK(small.method == CountMethod::Oracle);
    for (int d = 1; d <= 6; ++d) {
        MixedPolynomial gd = MixedPolynomial::variable(2, 1).pow(2) +
                             MixedPolynomial::variable(2, 2).pow(static_cast<std::uint32_t>(d));
        auto c = count_fiber_points(gd, 1);
        CHECK(c.count == d);
        CHECK(c.method == CountMethod::Formula);
    }
    CHECK_THROWS_AS(count_fiber_points(g, 3), InputError);
}

TEST_CASE("join: cusp with axes") {
    JoinInput in{P2("z1^2+z2^3"), degree0(QMatrix::identity(1)), degree0(perm(2)),
                 builtin_alexander("brieskorn-with-axes", {2, 3}), std::nullopt};
    auto rep = join_zeta(in);
    CHECK(rep.n1 == 3);
    CHECK(rep.n2 == 2);
    CHECK(rep.prefactor1 == ZetaFunction(LaurentPoly(1), lam(2) - LaurentPoly(1)));
    CHECK(rep.prefactor2 == ZetaFunction(LaurentPoly(1), lam(6) - LaurentPoly(1)));
    REQUIRE(rep.factors.size() == 1);
    CHECK(ZetaFunction(rep.factors[0].det, LaurentPoly(1)) ==
          ZetaFunction((lam(6) - LaurentPoly(1)).pow(2), LaurentPoly(1)));
    CHECK(rep.zeta == ZetaFunction(lam(4) + lam(2) + LaurentPoly(1), LaurentPoly(1)));
    CHECK(euler_from_zeta(rep.zeta) == -4);
    auto checks = cross_check(in, rep, -6);
    for (const auto& c : checks) CHECK_MESSAGE(c.status == CheckStatus::Pass, c.name << ": " << c.detail);

    JoinInput bad = in;
    bad.link.components[2].m = 2;
    auto rb = join_zeta(bad);
    auto cb = cross_check(bad, rb, -6);
    CHECK(cb[1].name == "euler");
    CHECK(cb[1].status == CheckStatus::Fail);

    JoinInput axis_bad = in;
    axis_bad.link.components[0].m = 1;
    auto ca = cross_check(axis_bad, join_zeta(axis_bad), std::nullopt);
    CHECK(ca[0].status == CheckStatus::Fail);
    CHECK(ca[1].status == CheckStatus::Skip);
}

TEST_CASE("join: classical Thom-Sebastiani against the eigenvalue product") {
    for (int a = 2; a <= 4; ++a) {
        for (int b = 2; b <= 4; ++b) {
            JoinInput in{P2("z1+z2"), degree0(perm(a)), degree0(perm(b)), builtin_alexander("hopf-r", {3}),
                         std::nullopt};
            auto rep = join_zeta(in);
            CHECK(rep.n1 == 1);
            CHECK(rep.n2 == 1);
            // prod_{i,j >= 1} (1 - lambda e^{2 pi i (i/a + j/b)}) with coefficients rounded to integers
            std::vector<cd> poly{1.0};
            for (int i = 1; i < a; ++i)
                for (int j = 1; j < b; ++j) {
                    cd w = std::polar(1.0, 2 * std::numbers::pi * (double(i) / a + double(j) / b));
                    std::vector<cd> next(poly.size() + 1, 0.0);
                    for (std::size_t k = 0; k < poly.size(); ++k) {
                        next[k] += poly[k];
                        next[k + 1] -= w * poly[k];
                    }
                    poly = next;
                }
            LaurentPoly num = LaurentPoly::zero(1);
            for (std::size_t k = 0; k < poly.size(); ++k) {
                CHECK(std::abs(poly[k].imag()) < 1e-9);
                num += LaurentPoly::monomial({static_cast<std::int64_t>(k)},
                                             GaussianRational(std::lround(poly[k].real())));
            }
            ZetaFunction expected(num, LaurentPoly(1) - lam(1));
            CHECK_MESSAGE(rep.zeta == expected, a << "," << b << ": " << rep.zeta.to_string());
            long chi_g = 1 - 2; // contractible fiber of z1 + z2 minus the two axis points
            auto checks = cross_check(in, rep, chi_g);
            for (const auto& c : checks) CHECK_MESSAGE(c.status == CheckStatus::Pass, c.name << ": " << c.detail);
        }
    }
}

TEST_CASE("join: identity monodromies reduce to scalar evaluation") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        std::int64_t p1 = 2 + static_cast<std::int64_t>(rng() % 3), p2 = 2 + static_cast<std::int64_t>(rng() % 3);
        auto link = builtin_alexander("brieskorn-with-axes", {p1, p2});
        link.components[2].m = 1 + static_cast<int>(rng() % 3);
        int n1 = 1 + static_cast<int>(rng() % 3), n2 = 1 + static_cast<int>(rng() % 3);
        JoinInput in{P2("z1^2+z2^3"), degree0(QMatrix::identity(1)), degree0(QMatrix::identity(1)), link,
                     std::make_pair(n1, n2)};
        auto rep = join_zeta(in);
        LaurentPoly scalar = link.alexander.specialize({0, 0, link.components[2].m});
        ZetaFunction expected = ZetaFunction(LaurentPoly(1), LaurentPoly(1) - lam(n2)) *
                                ZetaFunction(LaurentPoly(1), LaurentPoly(1) - lam(n1)) *
                                ZetaFunction(scalar, LaurentPoly(1));
        CHECK(rep.zeta == expected);
    }
}

TEST_CASE("join: zero count drops the prefactor") {
    JoinInput in{P2("z1^2+z2^3"), degree0(perm(3)), degree0(perm(2)),
                 builtin_alexander("brieskorn-with-axes", {2, 3}), std::make_pair(3, 0)};
    auto rep = join_zeta(in);
    CHECK(rep.prefactor1.is_one());
    CHECK_FALSE(rep.prefactor2.is_one());
    JoinInput neg = in;
    neg.counts = std::make_pair(-1, 0);
    CHECK_THROWS_AS(join_zeta(neg), InputError);
}

TEST_CASE("euler join") {
    CHECK(euler_join(-6, 1, 2, 3, 2) == -4);
    CHECK(euler_join(0, 5, 7, 0, 0) == 0);
    CHECK(euler_join(-3, 1, 1, 2, 5) == -3 + 2 + 5);
}
