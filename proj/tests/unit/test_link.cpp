#include "mixjoin/error.hpp"
#include "mixjoin/link.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace mixjoin;

namespace {

LaurentPoly mono(LaurentPoly::Exps e, long c = 1) { return LaurentPoly::monomial(std::move(e), GaussianRational(c)); }

PolyMatrix constant(const QMatrix& m) { return to_poly_matrix(m); }

QMatrix qm(std::vector<std::vector<long>> rows) {
    std::vector<std::vector<GaussianRational>> r;
    for (auto& row : rows) {
        r.emplace_back();
        for (long v : row) r.back().emplace_back(v);
    }
    return QMatrix::from_rows(r);
}

// a is equal to b up to a unit +-lambda^u in every variable
bool eq_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
    auto na = to_nonnegative(a).poly, nb = to_nonnegative(b).poly;
    return na == nb || na == -nb;
}

} // namespace

TEST_CASE("builtin families") {
    auto b = builtin_alexander("brieskorn-with-axes", {2, 3});
    CHECK(b.r() == 3);
    CHECK(b.alexander == mono({3, 2, 6}) - mono({0, 0, 0}));
    CHECK(b.multiplicities() == std::vector<int>{0, 0, 1});

    auto h = builtin_alexander("hopf-r", {3});
    CHECK(h.alexander == mono({1, 1, 1}) - mono({0, 0, 0}));
    auto h4 = builtin_alexander("hopf-r", {4});
    CHECK(h4.alexander == (mono({1, 1, 1, 1}) - mono({0, 0, 0, 0})).pow(2));

    auto o = builtin_alexander("oka-family", {2, 3, 1, 1});
    CHECK(o.r() == 4);
    CHECK(o.multiplicities() == std::vector<int>{1, 1, 1, 1});
    CHECK(o.alexander == (mono({3, 2, 6, 6}) - mono({0, 0, 0, 0})).pow(2));
    auto os = builtin_alexander("oka-family", {2, 3, 1, 1, 1});
    CHECK(os.multiplicities() == std::vector<int>{1, 1, 1, -1});

    CHECK_THROWS_AS(builtin_alexander("trefoil", {}), InputError);
    CHECK_THROWS_AS(builtin_alexander("hopf-r", {2}), InputError);
    CHECK_THROWS_AS(builtin_alexander("oka-family", {2, 3, 0, 0}), InputError);
    CHECK_THROWS_AS(builtin_alexander("brieskorn-with-axes", {2}), InputError);
}

TEST_CASE("reverse orientation") {
    auto h = builtin_alexander("hopf-r", {3});
    auto r3 = reverse_orientation(h, 3);
    CHECK(r3.components[2].m == -1);
    CHECK(r3.components[2].reversed);
    CHECK(r3.alexander == mono({1, 1, 0}) - mono({0, 0, 1}));

    auto b = builtin_alexander("brieskorn-with-axes", {2, 3});
    auto rb = reverse_orientation(b, 3);
    CHECK(eq_up_to_unit(rb.alexander, mono({3, 2, 0}) - mono({0, 0, 6})));
    CHECK(rb.components[2].m == -1);

    for (int j = 1; j <= 3; ++j) {
        auto twice = reverse_orientation(reverse_orientation(b, j), j);
        CHECK(eq_up_to_unit(twice.alexander, b.alexander));
        CHECK(twice.multiplicities() == b.multiplicities());
        CHECK_FALSE(twice.components[j - 1].reversed);
    }
    CHECK_THROWS_AS(reverse_orientation(b, 0), InputError);
    CHECK_THROWS_AS(reverse_orientation(b, 4), InputError);
}

TEST_CASE("substitute matrices: cusp with axes shape") {
    auto b = builtin_alexander("brieskorn-with-axes", {2, 3});
    std::vector<PolyMatrix> args{constant(QMatrix::identity(2)), constant(qm({{0, 1}, {1, 0}})),
                                 to_poly_matrix(QMatrix::identity(2), 1)};
    auto m = substitute_matrices(b.alexander.promoted(3), args);
    LaurentPoly l6 = LaurentPoly::monomial({6}) - LaurentPoly(1);
    CHECK(m(0, 0) == l6);
    CHECK(m(1, 1) == l6);
    CHECK(m(0, 1).is_zero());
    CHECK(det_poly(m) == l6.pow(2));
}

TEST_CASE("substitute matrices: small cases") {
    QMatrix a = qm({{2, 1}, {0, 3}});
    auto m = substitute_matrices(mono({1}) - mono({0}), {constant(a)});
    CHECK(m == constant(a - QMatrix::identity(2)));
    CHECK(substitute_matrices(mono({1}) - mono({0}), {PolyMatrix(0, 0)}).rows() == 0);

    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        QMatrix base(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) base(i, j) = GaussianRational(d(rng));
        // commuting pair: polynomials in one matrix
        QMatrix x = base * base + QMatrix::identity(3);
        QMatrix y = base.scaled(GaussianRational(2)) - QMatrix::identity(3);
        auto m2 = substitute_matrices(mono({1, 1}) - mono({0, 0}), {constant(x), constant(y)});
        CHECK(m2 == constant(x * y - QMatrix::identity(3)));
    }

    QMatrix p = qm({{0, 1}, {1, 0}});
    QMatrix q = qm({{1, 1}, {0, 1}});
    CHECK_THROWS_AS(substitute_matrices(mono({1, 1}), {constant(p), constant(q)}), DomainError);
    CHECK_THROWS_AS(substitute_matrices(mono({1, 1}), {constant(p), constant(QMatrix::identity(3))}), InputError);
}

TEST_CASE("substitute matrices: negative exponents") {
    QMatrix a = qm({{2, 1}, {1, 1}});
    auto m = substitute_matrices(mono({-1}), {to_poly_matrix(a, 2)});
    CHECK(m == inverse(a).map<LaurentPoly>([](const GaussianRational& c) { return LaurentPoly::monomial({-2}, c); }));
    CHECK_THROWS_AS(substitute_matrices(mono({-1}), {constant(qm({{1, 1}, {1, 1}}))}), DomainError);
}

TEST_CASE("scalar identities reduce to scalar evaluation") {
    auto b = builtin_alexander("oka-family", {2, 3, 1, 1});
    std::vector<PolyMatrix> args;
    std::vector<std::int64_t> w{1, 2, 3, 1};
    for (auto k : w) args.push_back(to_poly_matrix(QMatrix::identity(2), k));
    auto m = substitute_matrices(b.alexander, args);
    auto scalar = b.alexander.specialize(w);
    CHECK(m(0, 0) == scalar);
    CHECK(m(1, 1) == scalar);
    CHECK(m(0, 1).is_zero());
}

TEST_CASE("axis rule") {
    auto b = builtin_alexander("brieskorn-with-axes", {2, 3});
    CHECK(check_axis_rule(b, parse("z1^2+z2^3", 2)).consistent);
    auto bad = b;
    bad.components[0].m = 1;
    auto r = check_axis_rule(bad, parse("z1^2+z2^3", 2));
    CHECK_FALSE(r.consistent);
    CHECK(r.message.find("axis z1") != std::string::npos);

    auto o = builtin_alexander("oka-family", {2, 3, 1, 0});
    CHECK(check_axis_rule(o, parse("z1*z2*(z1^2+z2^3)", 2)).consistent);
    CHECK_FALSE(check_axis_rule(o, parse("z1^2+z2^3", 2)).consistent);
    CHECK(check_axis_rule(builtin_alexander("hopf-r", {3}), parse("z1+z2", 2)).consistent);
}

TEST_CASE("validate rejects malformed links") {
    MultilinkData l{{{"a", 0}, {"a", 1}}, mono({1, 1})};
    CHECK_THROWS_AS(l.validate(), InputError);
    MultilinkData l2{{{"a", 0}, {"b", 1}}, mono({1, 1, 1})};
    CHECK_THROWS_AS(l2.validate(), InputError);
}
