#pragma once

#include "mixjoin/gaussian.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace mixjoin {

/// Dense univariate polynomial over Q(i); coeffs()[k] multiplies t^k.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<GaussianRational> coeffs);
    static UPoly constant(const GaussianRational& c) { return UPoly({c}); }
    /// c * t^k
    static UPoly monomial(std::size_t k, const GaussianRational& c = GaussianRational(1));

    const std::vector<GaussianRational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    GaussianRational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : GaussianRational(); }
    GaussianRational leading() const { return c_.empty() ? GaussianRational() : c_.back(); }
    bool is_real() const;

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly&, const UPoly&) = default;
    UPoly scaled(const GaussianRational& s) const;
    UPoly pow(unsigned k) const;

    GaussianRational evaluate(const GaussianRational& t) const;
    std::complex<double> evaluate(std::complex<double> t) const;
    UPoly derivative() const;
    UPoly monic() const;
    /// Conjugates every coefficient.
    UPoly conj() const;
    /// Multiplicity of the root t = 0.
    std::size_t zero_multiplicity() const;
    /// Divides by t^k (k <= zero_multiplicity()).
    UPoly shift_down(std::size_t k) const;

private:
    std::vector<GaussianRational> c_;
    void trim();
};

/// (quotient, remainder); throws DomainError on a zero divisor.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);
/// Squarefree decomposition (Yun): a = lc * prod_i s_i^{m_i}, s_i monic, squarefree, pairwise coprime.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& a);

/// Number of distinct real roots of a polynomial with rational coefficients
/// (Sturm sequence). Throws DomainError for non-real or zero input.
std::size_t count_real_roots(const UPoly& a);
/// Distinct real roots in the open interval (lo, hi), hi > lo.
std::size_t count_real_roots(const UPoly& a, const mpq_class& lo, const mpq_class& hi);

/// Numeric roots (with multiplicity) from the eigenvalues of the companion
/// matrix, polished by Newton steps in long double.
std::vector<std::complex<double>> numeric_roots(const UPoly& a);

/// Best rational approximation with denominator <= max_den (continued fractions).
mpq_class rationalize(double x, long max_den);

} // namespace mixjoin
