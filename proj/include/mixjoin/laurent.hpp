#pragma once

#include "mixjoin/gaussian.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mixjoin {

/// Exact Laurent polynomial in r variables over Q(i).
///
/// A polynomial with `vars() == 0` is a constant and is promoted to any
/// variable count when combined with another polynomial; this lets
/// default-constructed zeros and scalar literals mix freely with
/// multivariate values (e.g. as matrix entries).
class LaurentPoly {
public:
    using Exps = std::vector<std::int64_t>;
    using TermMap = std::map<Exps, GaussianRational>;

    LaurentPoly() = default;
    LaurentPoly(const GaussianRational& c);
    LaurentPoly(long c) : LaurentPoly(GaussianRational(c)) {}
    LaurentPoly(int c) : LaurentPoly(GaussianRational(c)) {}

    static LaurentPoly zero(int vars);
    static LaurentPoly monomial(Exps exps, const GaussianRational& c = GaussianRational(1));
    /// Single variable lambda_slot (0-based) in `vars` variables.
    static LaurentPoly variable(int vars, int slot, std::int64_t power = 1);

    int vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// True if every coefficient is a rational integer.
    bool has_integer_coefficients() const;
    bool has_real_coefficients() const;
    GaussianRational constant_term() const;
    GaussianRational coefficient(const Exps& e) const;

    /// Componentwise minimum / maximum exponents. Throws on the zero polynomial.
    Exps min_exponents() const;
    Exps max_exponents() const;

    void add_term(Exps e, const GaussianRational& c);
    LaurentPoly promoted(int vars) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly pow(std::uint64_t k) const;
    /// Multiplies by the monomial lambda^shift.
    LaurentPoly shifted(const Exps& shift) const;
    /// lambda_slot -> lambda_slot^k. k = 0 is rejected.
    LaurentPoly substitute_power(int slot, std::int64_t k) const;
    /// Univariate specialization lambda_t -> lambda^{weights[t]}.
    LaurentPoly specialize(const std::vector<std::int64_t>& weights) const;

    /// Descending-exponent text; one variable prints as "lambda", several as l1..lr.
    std::string to_string() const;
    std::string to_string(const std::vector<std::string>& names) const;

private:
    int vars_ = 0;
    TermMap terms_;

    static int common_vars(const LaurentPoly& a, const LaurentPoly& b);
};

/// Exact quotient a / b. Throws DomainError when b does not divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

} // namespace mixjoin
