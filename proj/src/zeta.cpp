#include "mixjoin/zeta.hpp"

#include "mixjoin/error.hpp"

#include <algorithm>
#include <numeric>

namespace mixjoin {

namespace {

// Dense integer polynomial, index = exponent.
using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

mpz_class content(const IntPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) g = gcd(g, c);
    return g;
}

IntPoly primitive_part(IntPoly p) {
    trim(p);
    if (p.empty()) return p;
    mpz_class g = content(p);
    if (p.back() < 0) g = -g;
    for (auto& c : p) c /= g;
    return p;
}

IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    trim(a);
    const mpz_class& lb = b.back();
    int db = deg(b);
    while (!a.empty() && deg(a) >= db) {
        mpz_class la = a.back();
        int shift = deg(a) - db;
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        trim(a);
    }
    return a;
}

/// Primitive gcd via the primitive pseudo-remainder sequence.
IntPoly int_gcd(IntPoly a, IntPoly b) {
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = primitive_part(std::move(r));
    }
    return primitive_part(std::move(a));
}

/// a / b over Z, throwing if the division is not exact.
IntPoly int_exact_divide(IntPoly a, const IntPoly& b) {
    trim(a);
    if (a.empty()) return {};
    int db = deg(b);
    if (deg(a) < db) throw InternalError("integer polynomial division is not exact");
    IntPoly q(deg(a) - db + 1);
    while (!a.empty() && deg(a) >= db) {
        int shift = deg(a) - db;
        if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t()))
            throw InternalError("integer polynomial division is not exact");
        mpz_class c = a.back() / b.back();
        q[shift] = c;
        for (int i = 0; i <= db; ++i) a[i + shift] -= c * b[i];
        trim(a);
    }
    if (!a.empty()) throw InternalError("integer polynomial division is not exact");
    return q;
}

bool int_divides(const IntPoly& a, const IntPoly& b, IntPoly& quotient) {
    try {
        quotient = int_exact_divide(a, b);
        return true;
    } catch (const InternalError&) {
        return false;
    }
}

/// Univariate Laurent polynomial -> dense integer polynomial times lambda^shift.
/// Coefficients must already be integers.
IntPoly to_dense(const LaurentPoly& p, std::int64_t& shift) {
    if (p.is_zero()) {
        shift = 0;
        return {};
    }
    shift = p.vars() == 0 ? 0 : p.min_exponents()[0];
    std::int64_t top = p.vars() == 0 ? 0 : p.max_exponents()[0];
    IntPoly out(static_cast<std::size_t>(top - shift + 1));
    for (const auto& [e, c] : p.terms()) {
        std::int64_t k = e.empty() ? 0 : e[0];
        out[static_cast<std::size_t>(k - shift)] = c.re().get_num();
    }
    return out;
}

LaurentPoly from_dense(const IntPoly& p) {
    LaurentPoly r = LaurentPoly::zero(1);
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) r.add_term({static_cast<std::int64_t>(i)}, GaussianRational(mpq_class(p[i])));
    return r;
}

void require_univariate(const LaurentPoly& p) {
    if (p.vars() > 1) throw DomainError("zeta functions are univariate");
    if (!p.has_real_coefficients()) throw DomainError("zeta function coefficients must be rational");
}

std::vector<IntPoly> cyclotomics(int upto) {
    // phi[k] for 1 <= k <= upto
    std::vector<IntPoly> phi(upto + 1);
    for (int k = 1; k <= upto; ++k) {
        IntPoly p(k + 1);
        p[0] = -1;
        p[k] = 1;
        for (int d = 1; d < k; ++d)
            if (k % d == 0) p = int_exact_divide(p, phi[d]);
        phi[k] = p;
    }
    return phi;
}

} // namespace

ZetaFunction zeta_normalize(const LaurentPoly& num, const LaurentPoly& den) { return ZetaFunction(num, den); }

ZetaFunction::ZetaFunction(const LaurentPoly& num, const LaurentPoly& den) {
    LaurentPoly n = num.promoted(num.vars() == 0 ? 1 : num.vars());
    LaurentPoly d = den.promoted(den.vars() == 0 ? 1 : den.vars());
    require_univariate(n);
    require_univariate(d);
    if (d.is_zero()) throw DomainError("zeta function with zero denominator");
    if (n.is_zero()) {
        num_ = LaurentPoly::zero(1);
        den_ = LaurentPoly::monomial({0});
        return;
    }
    mpz_class l = 1;
    for (const auto* p : {&n, &d})
        for (const auto& [e, c] : p->terms()) l = lcm(l, c.re().get_den());
    LaurentPoly scale{GaussianRational(mpq_class(l))};
    std::int64_t sn = 0, sd = 0;
    IntPoly a = to_dense(n * scale, sn);
    IntPoly b = to_dense(d * scale, sd);
    IntPoly g = int_gcd(a, b);
    if (deg(g) > 0) {
        a = int_exact_divide(a, g);
        b = int_exact_divide(b, g);
    }
    mpz_class c = gcd(content(a), content(b));
    for (auto& v : a) v /= c;
    for (auto& v : b) v /= c;
    if (a[0] < 0)
        for (auto& v : a) v = -v;
    if (b[0] < 0)
        for (auto& v : b) v = -v;
    num_ = from_dense(a);
    den_ = from_dense(b);
}

ZetaFunction ZetaFunction::power_of(const LaurentPoly& p, int exponent) {
    LaurentPoly one = LaurentPoly::monomial({0});
    if (exponent >= 0) return ZetaFunction(p.pow(static_cast<std::uint64_t>(exponent)), one);
    return ZetaFunction(one, p.pow(static_cast<std::uint64_t>(-exponent)));
}

ZetaFunction ZetaFunction::operator*(const ZetaFunction& o) const {
    return ZetaFunction(num_ * o.num_, den_ * o.den_);
}

ZetaFunction ZetaFunction::operator/(const ZetaFunction& o) const {
    if (o.num_.is_zero()) throw DomainError("division by the zero zeta function");
    return ZetaFunction(num_ * o.den_, den_ * o.num_);
}

ZetaFunction ZetaFunction::pow(int e) const {
    if (e >= 0) return ZetaFunction(num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)));
    if (num_.is_zero()) throw DomainError("negative power of the zero zeta function");
    return ZetaFunction(den_.pow(static_cast<std::uint64_t>(-e)), num_.pow(static_cast<std::uint64_t>(-e)));
}

ZetaFunction ZetaFunction::substitute_power(std::int64_t k) const {
    return ZetaFunction(num_.substitute_power(0, k), den_.substitute_power(0, k));
}

bool ZetaFunction::is_one() const { return num_.is_constant() && den_.is_constant() && num_ == den_; }

int ZetaFunction::degree() const {
    if (num_.is_zero()) throw DomainError("degree of the zero zeta function");
    return static_cast<int>(num_.max_exponents()[0] - den_.max_exponents()[0]);
}

std::string ZetaFunction::to_string() const {
    if (den_.is_constant() && den_.constant_term().is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string ZetaFunction::to_factored_string() const {
    if (num_.is_zero()) return "0";
    std::int64_t s = 0;
    IntPoly n = to_dense(num_, s);
    IntPoly d = to_dense(den_, s);
    int top = std::max(deg(n), deg(d));
    if (top > 48) return to_string();
    // phi(k) <= top forces k < 6 * top + 6 in this range
    int kmax = 6 * top + 6;
    auto phi = cyclotomics(kmax);
    std::vector<long> mult(kmax + 1, 0);
    for (int k = kmax; k >= 1; --k) {
        IntPoly q;
        while (deg(n) >= deg(phi[k]) && int_divides(n, phi[k], q)) {
            n = q;
            ++mult[k];
        }
        while (deg(d) >= deg(phi[k]) && int_divides(d, phi[k], q)) {
            d = q;
            --mult[k];
        }
    }
    if (!(n.size() == 1 && d.size() == 1 && abs(n[0]) == abs(d[0]))) return to_string();
    // phi_k multiplicity m_k = sum_{k | a} e_a, solve from the top down
    std::vector<long> e(kmax + 1, 0);
    for (int k = kmax; k >= 1; --k) {
        long acc = mult[k];
        for (int a = 2 * k; a <= kmax; a += k) acc -= e[a];
        e[k] = acc;
    }
    std::string out;
    for (int a = kmax; a >= 1; --a) {
        if (e[a] == 0) continue;
        if (!out.empty()) out += " * ";
        out += "(1 - lambda";
        if (a != 1) out += "^" + std::to_string(a);
        out += ")";
        if (e[a] != 1) out += "^" + std::to_string(e[a]);
    }
    return out.empty() ? "1" : out;
}

bool zeta_eq_up_to_unit(const ZetaFunction& a, const ZetaFunction& b) { return a == b; }

// ---------------------------------------------------------------------------

GradedMonodromy::GradedMonodromy(std::map<int, QMatrix> blocks) : blocks_(std::move(blocks)) {
    for (const auto& [k, h] : blocks_) {
        if (k < 0) throw InputError("homology degree must be non-negative");
        if (!h.is_square()) throw InputError("monodromy block must be square");
        if (!is_integer_matrix(h)) throw InputError("monodromy block must have integer entries");
        if (h.rows() > 0 && determinant(h).is_zero()) throw DomainError("monodromy block is singular");
    }
}

QMatrix GradedMonodromy::block(int degree) const {
    auto it = blocks_.find(degree);
    return it == blocks_.end() ? QMatrix() : it->second;
}

std::size_t GradedMonodromy::dim(int degree) const {
    auto it = blocks_.find(degree);
    return it == blocks_.end() ? 0 : it->second.rows();
}

std::size_t GradedMonodromy::total_dim() const {
    std::size_t s = 0;
    for (const auto& [k, h] : blocks_) s += h.rows();
    return s;
}

long GradedMonodromy::euler_characteristic() const {
    long chi = 0;
    for (const auto& [k, h] : blocks_) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(h.rows());
    return chi;
}

GradedMonodromy GradedMonodromy::direct_sum(const GradedMonodromy& o) const {
    std::map<int, QMatrix> out = blocks_;
    for (const auto& [k, h] : o.blocks_) {
        auto it = out.find(k);
        if (it == out.end()) out.emplace(k, h);
        else it->second = block_diagonal<GaussianRational>({it->second, h});
    }
    return GradedMonodromy(std::move(out));
}

// ---------------------------------------------------------------------------

LaurentPoly det_poly(const PolyMatrix& m) {
    if (!m.is_square()) throw InputError("determinant of a non-square matrix");
    std::size_t n = m.rows();
    int vars = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) vars = std::max(vars, m(i, j).vars());
    LaurentPoly one = LaurentPoly(GaussianRational(1)).promoted(vars);
    if (n == 0) return one;

    PolyMatrix a(n, n);
    LaurentPoly::Exps total(vars, 0);
    for (std::size_t i = 0; i < n; ++i) {
        LaurentPoly::Exps lo;
        bool any = false;
        for (std::size_t j = 0; j < n; ++j) {
            const LaurentPoly e = m(i, j).promoted(vars);
            if (e.is_zero()) continue;
            auto mn = e.min_exponents();
            if (!any) lo = mn;
            else
                for (int t = 0; t < vars; ++t) lo[t] = std::min(lo[t], mn[t]);
            any = true;
        }
        if (!any) return LaurentPoly::zero(vars);
        LaurentPoly::Exps neg(vars);
        for (int t = 0; t < vars; ++t) {
            neg[t] = -lo[t];
            total[t] += lo[t];
        }
        for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j).promoted(vars).shifted(neg);
    }

    bool negate = false;
    LaurentPoly prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t piv = n;
            for (std::size_t r = k + 1; r < n; ++r) {
                if (!a(r, k).is_zero() && (piv == n || a(r, k).terms().size() < a(piv, k).terms().size()))
                    piv = r;
            }
            if (piv == n) return LaurentPoly::zero(vars);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = exact_divide(t, prev);
            }
            a(i, k) = LaurentPoly::zero(vars);
        }
        prev = a(k, k);
    }
    LaurentPoly det = a(n - 1, n - 1).shifted(total);
    return negate ? -det : det;
}

PolyMatrix to_poly_matrix(const QMatrix& m) {
    return m.map<LaurentPoly>([](const GaussianRational& c) { return LaurentPoly(c).promoted(1); });
}

PolyMatrix to_poly_matrix(const QMatrix& m, std::int64_t lambda_power) {
    return m.map<LaurentPoly>([lambda_power](const GaussianRational& c) {
        return LaurentPoly::monomial({lambda_power}, c);
    });
}

LaurentPoly char_factor(const QMatrix& h) {
    if (!h.is_square()) throw InputError("monodromy block must be square");
    PolyMatrix a = to_poly_matrix(QMatrix::identity(h.rows())) - to_poly_matrix(h, 1);
    return det_poly(a).promoted(1);
}

ZetaFunction zeta_from_monodromy(const GradedMonodromy& m) {
    ZetaFunction z;
    for (const auto& [k, h] : m.blocks()) {
        if (h.rows() == 0) continue;
        z = z * ZetaFunction::power_of(char_factor(h), k % 2 == 0 ? -1 : 1);
    }
    return z;
}

long euler_from_zeta(const ZetaFunction& z) { return -static_cast<long>(z.degree()); }

GradedE graded_E(const GradedMonodromy& m1, const GradedMonodromy& m2, int q) {
    std::vector<QMatrix> b1, b2;
    GradedE out;
    for (const auto& [i, h1] : m1.blocks()) {
        int j = q - i;
        auto it = m2.blocks().find(j);
        if (it == m2.blocks().end()) continue;
        const QMatrix& h2 = it->second;
        if (h1.rows() == 0 || h2.rows() == 0) continue;
        b1.push_back(kron(h1, QMatrix::identity(h2.rows())));
        b2.push_back(kron(QMatrix::identity(h1.rows()), h2));
        out.pairs.emplace_back(i, j);
    }
    out.e1 = block_diagonal(b1);
    out.e2 = block_diagonal(b2);
    return out;
}

std::vector<int> total_degrees(const GradedMonodromy& m1, const GradedMonodromy& m2) {
    std::vector<int> qs;
    for (const auto& [i, h1] : m1.blocks())
        for (const auto& [j, h2] : m2.blocks())
            if (h1.rows() > 0 && h2.rows() > 0) qs.push_back(i + j);
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    return qs;
}

QMatrix cyclic_block(const QMatrix& h, int copies, CyclicConvention convention) {
    if (copies < 1) throw InputError("cyclic block needs at least one copy");
    if (!h.is_square()) throw InputError("cyclic block needs a square matrix");
    std::size_t d = h.rows();
    std::size_t n = static_cast<std::size_t>(copies);
    QMatrix out(n * d, n * d);
    QMatrix sub = convention == CyclicConvention::AllTwist ? h : QMatrix::identity(d);
    out.set_block(0, (n - 1) * d, h);
    for (std::size_t k = 1; k < n; ++k) out.set_block(k * d, (k - 1) * d, sub);
    return out;
}

} // namespace mixjoin
