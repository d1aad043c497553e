#pragma once

#include "mixjoin/laurent.hpp"
#include "mixjoin/matrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mixjoin {

/// Rational function num(lambda)/den(lambda) with integer coefficients,
/// considered up to the units +-lambda^u.
///
/// Normal form: num and den coprime, no common integer content, both with
/// minimal exponent 0 and positive constant term. Two zeta functions agree up
/// to a unit iff their normal forms are equal.
class ZetaFunction {
public:
    ZetaFunction() : num_(LaurentPoly::monomial({0})), den_(LaurentPoly::monomial({0})) {}
    /// Normalizes on construction. Rational coefficients are cleared; non-real
    /// coefficients and a zero denominator throw DomainError.
    ZetaFunction(const LaurentPoly& num, const LaurentPoly& den);

    static ZetaFunction one() { return {}; }
    /// p^exponent for a univariate polynomial p; negative exponents invert.
    static ZetaFunction power_of(const LaurentPoly& p, int exponent);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    ZetaFunction operator*(const ZetaFunction& o) const;
    ZetaFunction operator/(const ZetaFunction& o) const;
    ZetaFunction pow(int e) const;
    /// lambda -> lambda^k, k != 0.
    ZetaFunction substitute_power(std::int64_t k) const;

    bool is_one() const;
    int degree() const; // deg num - deg den of the normal form

    /// "lambda^4 + lambda^2 + 1" or "(num)/(den)".
    std::string to_string() const;
    /// Product of (1 - lambda^a)^e when num and den are products of cyclotomic
    /// polynomials, otherwise the same as to_string(). Display only.
    std::string to_factored_string() const;

    friend bool operator==(const ZetaFunction& a, const ZetaFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

/// Explicit normalization; ZetaFunction values are always kept normalized, so
/// this re-runs the canonicalization on the raw pair.
ZetaFunction zeta_normalize(const LaurentPoly& num, const LaurentPoly& den);
bool zeta_eq_up_to_unit(const ZetaFunction& a, const ZetaFunction& b);

/// Integer monodromy matrices per homology degree.
class GradedMonodromy {
public:
    GradedMonodromy() = default;
    /// Validates: square, integer entries, invertible over Q, distinct degrees >= 0.
    explicit GradedMonodromy(std::map<int, QMatrix> blocks);

    const std::map<int, QMatrix>& blocks() const { return blocks_; }
    /// Zero-dimensional matrix for missing degrees.
    QMatrix block(int degree) const;
    std::size_t dim(int degree) const;
    std::size_t total_dim() const;
    /// sum_k (-1)^k dim H_k
    long euler_characteristic() const;

    /// Direct sum degree by degree.
    GradedMonodromy direct_sum(const GradedMonodromy& o) const;

private:
    std::map<int, QMatrix> blocks_;
};

using PolyMatrix = Matrix<LaurentPoly>;

/// Exact determinant by fraction-free (Bareiss) elimination after clearing each
/// row's monomial denominators. The 0x0 determinant is 1.
LaurentPoly det_poly(const PolyMatrix& m);

/// Embeds a constant matrix as polynomial entries, optionally times lambda^power (univariate).
PolyMatrix to_poly_matrix(const QMatrix& m);
PolyMatrix to_poly_matrix(const QMatrix& m, std::int64_t lambda_power);

/// det(I - lambda * H) as a univariate polynomial.
LaurentPoly char_factor(const QMatrix& h);

/// prod_k det(I - lambda H_k)^((-1)^(k+1)).
ZetaFunction zeta_from_monodromy(const GradedMonodromy& m);

/// chi = -(deg num - deg den).
long euler_from_zeta(const ZetaFunction& z);

inline QMatrix tensor(const QMatrix& a, const QMatrix& b) { return kron(a, b); }

struct GradedE {
    QMatrix e1; // (+) H_{1,i} (x) I
    QMatrix e2; // (+) I (x) H_{2,j}
    std::vector<std::pair<int, int>> pairs; // (i, j) blocks in order
};

/// Block-diagonal E_{q,1}, E_{q,2} over pairs i + j = q in increasing i.
GradedE graded_E(const GradedMonodromy& m1, const GradedMonodromy& m2, int q);

/// Degrees q = i + j that have at least one nonempty block pair.
std::vector<int> total_degrees(const GradedMonodromy& m1, const GradedMonodromy& m2);

enum class CyclicConvention { OneTwist, AllTwist };

/// n x n block circulant: identities on the subdiagonal and H in the top-right
/// corner (one-twist), or H in every one of those slots (all-twist).
QMatrix cyclic_block(const QMatrix& h, int copies, CyclicConvention convention = CyclicConvention::OneTwist);

} // namespace mixjoin
