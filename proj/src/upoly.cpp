#include "mixjoin/upoly.hpp"

#include "mixjoin/error.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace mixjoin {

UPoly::UPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(std::size_t k, const GaussianRational& c) {
    std::vector<GaussianRational> v(k + 1);
    v[k] = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool UPoly::is_real() const {
    for (const auto& c : c_)
        if (!c.is_real()) return false;
    return true;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<GaussianRational> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
    return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
}

UPoly UPoly::scaled(const GaussianRational& s) const {
    UPoly r = *this;
    for (auto& c : r.c_) c *= s;
    r.trim();
    return r;
}

UPoly UPoly::pow(unsigned k) const {
    UPoly r = constant(GaussianRational(1));
    UPoly b = *this;
    while (k) {
        if (k & 1U) r = r * b;
        k >>= 1U;
        if (k) b = b * b;
    }
    return r;
}

GaussianRational UPoly::evaluate(const GaussianRational& t) const {
    GaussianRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::complex<double> UPoly::evaluate(std::complex<double> t) const {
    std::complex<double> acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->to_complex();
    return acc;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<GaussianRational> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * GaussianRational(static_cast<long>(k));
    return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    return scaled(GaussianRational(1) / leading());
}

UPoly UPoly::conj() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = c.conj();
    return r;
}

std::size_t UPoly::zero_multiplicity() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    return k;
}

UPoly UPoly::shift_down(std::size_t k) const {
    if (k > zero_multiplicity() && !is_zero()) throw InternalError("shift_down past the zero multiplicity");
    if (k >= c_.size()) return {};
    return UPoly(std::vector<GaussianRational>(c_.begin() + static_cast<long>(k), c_.end()));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<GaussianRational> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<GaussianRational> q(a.degree() - db + 1);
    GaussianRational inv = GaussianRational(1) / b.leading();
    for (int k = a.degree(); k >= db; --k) {
        if (rem[k].is_zero()) continue;
        GaussianRational f = rem[k] * inv;
        q[k - db] = f;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& a) {
    std::vector<std::pair<UPoly, int>> out;
    if (a.degree() < 1) return out;
    UPoly f = a.monic();
    UPoly df = f.derivative();
    UPoly g = gcd(f, df);
    UPoly b = divmod(f, g).first;
    UPoly c = divmod(df, g).first;
    UPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() >= 1) {
        UPoly s = gcd(b, d);
        if (s.degree() >= 1) out.emplace_back(s, i);
        b = divmod(b, s).first;
        c = divmod(d, s).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace {

std::vector<mpq_class> real_coeffs(const UPoly& a) {
    if (!a.is_real()) throw DomainError("Sturm sequences need real coefficients");
    std::vector<mpq_class> v;
    for (const auto& c : a.coeffs()) v.push_back(c.re());
    return v;
}

std::vector<UPoly> sturm_chain(const UPoly& a) {
    UPoly sq = divmod(a, gcd(a, a.derivative())).first;
    std::vector<UPoly> chain{sq, sq.derivative()};
    while (!chain.back().is_zero()) {
        UPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_changes(const std::vector<int>& signs) {
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int sign_at(const UPoly& p, const mpq_class& x) { return sgn(p.evaluate(GaussianRational(x)).re()); }

int sign_at_infinity(const UPoly& p, bool positive) {
    int s = sgn(p.leading().re());
    if (!positive && p.degree() % 2 == 1) s = -s;
    return s;
}

} // namespace

std::size_t count_real_roots(const UPoly& a) {
    if (a.is_zero()) throw DomainError("the zero polynomial has infinitely many roots");
    real_coeffs(a);
    if (a.degree() == 0) return 0;
    auto chain = sturm_chain(a);
    std::vector<int> lo, hi;
    for (const auto& p : chain) {
        lo.push_back(sign_at_infinity(p, false));
        hi.push_back(sign_at_infinity(p, true));
    }
    return static_cast<std::size_t>(sign_changes(lo) - sign_changes(hi));
}

std::size_t count_real_roots(const UPoly& a, const mpq_class& lo, const mpq_class& hi) {
    if (a.is_zero()) throw DomainError("the zero polynomial has infinitely many roots");
    real_coeffs(a);
    if (a.degree() == 0) return 0;
    auto chain = sturm_chain(a);
    std::vector<int> sl, sh;
    for (const auto& p : chain) {
        sl.push_back(sign_at(p, lo));
        sh.push_back(sign_at(p, hi));
    }
    // V(lo) - V(hi) counts roots in (lo, hi]
    int n = sign_changes(sl) - sign_changes(sh);
    if (chain[0].evaluate(GaussianRational(hi)).is_zero()) --n;
    return static_cast<std::size_t>(std::max(n, 0));
}

std::vector<std::complex<double>> numeric_roots(const UPoly& a) {
    int d = a.degree();
    if (d < 1) return {};
    std::size_t z = a.zero_multiplicity();
    std::vector<std::complex<double>> out(z, 0.0);
    UPoly p = a.shift_down(z);
    d = p.degree();
    if (d < 1) return out;
    using CMat = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic>;
    CMat comp = CMat::Zero(d, d);
    std::complex<double> lead = p.leading().to_complex();
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -p.coeffs()[i].to_complex() / lead;
    Eigen::ComplexEigenSolver<CMat> solver(comp, false);
    if (solver.info() != Eigen::Success) throw InternalError("companion eigenvalue solver failed");
    UPoly dp = p.derivative();
    for (int i = 0; i < d; ++i) {
        std::complex<long double> x(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
        for (int it = 0; it < 8; ++it) {
            std::complex<long double> f = 0, g = 0;
            for (auto c = p.coeffs().rbegin(); c != p.coeffs().rend(); ++c)
                f = f * x + std::complex<long double>(c->re().get_d(), c->im().get_d());
            for (auto c = dp.coeffs().rbegin(); c != dp.coeffs().rend(); ++c)
                g = g * x + std::complex<long double>(c->re().get_d(), c->im().get_d());
            if (std::abs(g) == 0) break;
            auto step = f / g;
            x -= step;
            if (std::abs(step) <= 1e-18L * (1 + std::abs(x))) break;
        }
        out.emplace_back(static_cast<double>(x.real()), static_cast<double>(x.imag()));
    }
    return out;
}

mpq_class rationalize(double x, long max_den) {
    if (!std::isfinite(x)) throw DomainError("cannot rationalize a non-finite value");
    // continued fraction convergents
    mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double r = x;
    mpq_class best(static_cast<long>(std::llround(x)));
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(r);
        mpz_class ai(a);
        mpz_class h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        best = mpq_class(h1, k1);
        best.canonicalize();
        double frac = r - a;
        if (std::abs(frac) < 1e-15) break;
        r = 1.0 / frac;
    }
    return best;
}

} // namespace mixjoin
