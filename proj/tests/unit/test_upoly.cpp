#include "doctest.h"

#include "mixjoin/upoly.hpp"
#include "support.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <random>

using namespace mixjoin;

namespace {

UPoly from_ints(std::vector<long> v) {
    std::vector<GaussianRational> c;
    for (long x : v) c.emplace_back(x);
    return UPoly(std::move(c));
}

UPoly linear(const GaussianRational& root) { return UPoly({-root, GaussianRational(1)}); }

} // namespace

TEST_CASE("upoly arithmetic and division identity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<GaussianRational> a, b;
        int da = static_cast<int>(rng() % 6), db = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k <= da; ++k) a.push_back(testsupport::random_gr(rng));
        for (int k = 0; k < db; ++k) b.push_back(testsupport::random_gr(rng));
        b.push_back(testsupport::random_nonzero_gr(rng));
        UPoly A(a), B(b);
        auto [q, r] = divmod(A, B);
        CHECK(q * B + r == A);
        CHECK(r.degree() < B.degree());
        GaussianRational t = testsupport::random_gr(rng);
        CHECK((A * B).evaluate(t) == A.evaluate(t) * B.evaluate(t));
        CHECK((A + B).evaluate(t) == A.evaluate(t) + B.evaluate(t));
    }
}

TEST_CASE("upoly gcd and squarefree decomposition against constructed factors") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        GaussianRational r1 = testsupport::random_gr(rng), r2 = r1 + GaussianRational(1),
                         r3 = r1 + GaussianRational::i();
        int m1 = 1 + static_cast<int>(rng() % 3), m2 = 1 + static_cast<int>(rng() % 3);
        UPoly p = linear(r1).pow(m1) * linear(r2).pow(m2) * linear(r3);
        p = p.scaled(GaussianRational(mpq_class(3, 7), mpq_class(1)));
        auto sf = squarefree_decomposition(p);
        std::map<std::string, int> mult;
        UPoly prod = UPoly::constant(GaussianRational(1));
        for (auto& [s, m] : sf) {
            prod = prod * s.pow(static_cast<unsigned>(m));
            for (const auto& root : {r1, r2, r3})
                if (s.evaluate(root).is_zero()) mult[root.to_string()] += m;
        }
        CHECK(prod == p.monic());
        CHECK(mult[r1.to_string()] == m1);
        CHECK(mult[r2.to_string()] == m2);
        CHECK(mult[r3.to_string()] == 1);
        UPoly g = gcd(linear(r1).pow(2) * linear(r2), linear(r1) * linear(r3));
        CHECK(g == linear(r1));
    }
}

TEST_CASE("sturm counts match integer-root constructions") {
    // (t-1)^2 (t+2) (t^2+1)
    UPoly p = from_ints({-1, 1}).pow(2) * from_ints({2, 1}) * from_ints({1, 0, 1});
    CHECK(count_real_roots(p) == 2);
    CHECK(count_real_roots(p, mpq_class(0), mpq_class(5)) == 1);
    CHECK(count_real_roots(p, mpq_class(-3), mpq_class(1)) == 1);
    CHECK(count_real_roots(p, mpq_class(-3), mpq_class(2)) == 2);
    CHECK(count_real_roots(from_ints({1, 0, 1})) == 0);
    CHECK_THROWS(count_real_roots(UPoly()));
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        std::set<long> roots;
        UPoly q = UPoly::constant(GaussianRational(1));
        int k = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < k; ++i) {
            long r = static_cast<long>(rng() % 11) - 5;
            roots.insert(r);
            q = q * from_ints({-r, 1});
        }
        q = q * from_ints({3, 0, 1});
        CHECK(count_real_roots(q) == roots.size());
    }
}

TEST_CASE("numeric roots recover constructed roots") {
    UPoly p = linear(GaussianRational(2)) * linear(GaussianRational::i()).pow(2) * UPoly::monomial(2);
    auto roots = numeric_roots(p);
    REQUIRE(roots.size() == 5);
    int zeros = 0, twos = 0, is = 0;
    for (auto r : roots) {
        if (std::abs(r) < 1e-12) ++zeros;
        else if (std::abs(r - 2.0) < 1e-9) ++twos;
        else if (std::abs(r - std::complex<double>(0, 1)) < 1e-6) ++is;
    }
    CHECK(zeros == 2);
    CHECK(twos == 1);
    CHECK(is == 2);
}

TEST_CASE("rationalize") {
    CHECK(rationalize(0.5, 10) == mpq_class(1, 2));
    CHECK(rationalize(-0.3333333333, 100) == mpq_class(-1, 3));
    CHECK(rationalize(3.14159265, 10) == mpq_class(22, 7));
}
