#pragma once

#include "mixjoin/laurent.hpp"
#include "mixjoin/mixed_poly.hpp"
#include "mixjoin/zeta.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mixjoin {

struct LinkComponent {
    std::string label;
    int m = 0;             // multiplicity
    bool reversed = false; // orientation flipped relative to the source link
};

/// Multilink L = K_1 u ... u K_r with multiplicities and Alexander polynomial.
/// K_1 = {z_1 = 0} and K_2 = {z_2 = 0} are the axes.
struct MultilinkData {
    std::vector<LinkComponent> components;
    LaurentPoly alexander; // r variables

    std::size_t r() const { return components.size(); }
    std::vector<int> multiplicities() const;
    /// Throws InputError unless r >= 1, labels are distinct and the
    /// polynomial has r variables.
    void validate() const;
};

/// Built-in families:
///   "brieskorn-with-axes" {p1, p2}
///   "oka-family"          {p1, p2, k, l} or {p1, p2, k, l, signed}
///   "hopf-r"              {r}
/// With signed = 1 the last l (conjugated) components of the oka family carry
/// m = -1; by default all multiplicities are +1.
MultilinkData builtin_alexander(const std::string& family, const std::vector<std::int64_t>& params);

/// A Laurent polynomial shifted to nonnegative exponents with minimal exponent 0
/// in every variable; poly = shift_unit * normalized.
struct NonnegativeForm {
    LaurentPoly poly;
    LaurentPoly::Exps shift;
};
NonnegativeForm to_nonnegative(const LaurentPoly& p);

/// -K_j: m_j -> -m_j, lambda_j -> lambda_j^-1, then shifted to nonnegative
/// exponents. j is 1-based.
MultilinkData reverse_orientation(const MultilinkData& link, int j);

/// sum_t c_t prod_s args[s]^{e_ts}; the constant term becomes c*I. All args
/// square of one size and pairwise commuting. Negative exponents require an
/// argument of the form lambda^k * C with C an invertible constant matrix.
PolyMatrix substitute_matrices(const LaurentPoly& delta, const std::vector<PolyMatrix>& args);

struct AxisRuleCheck {
    bool consistent = true;
    std::string message;
};

/// m_j = 0 iff g restricted to {z_j = 0} is not identically zero, j = 1, 2.
AxisRuleCheck check_axis_rule(const MultilinkData& link, const MixedPolynomial& g);

} // namespace mixjoin
