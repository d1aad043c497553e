#pragma once

#include "mixjoin/link.hpp"
#include "mixjoin/mixed_poly.hpp"
#include "mixjoin/zeta.hpp"

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mixjoin {

struct LowestFactor {
    std::complex<double> delta;
    std::optional<GaussianRational> exact_delta; // set when delta is Gaussian-rational (verified exactly)
    int multiplicity = 1;
};

/// g'_{d_low} = c z^a zbar^b prod_k (z + delta_k zbar)^{mu_k}.
struct LowestFactorization {
    GaussianRational c;
    int a = 0;
    int b = 0;
    std::vector<LowestFactor> factors;
    int d_low = 0;
    int d_high = 0;
};

/// Factorization of the lowest-degree part of a one-variable mixed polynomial.
/// Throws DomainError for zero input and InputError for n != 1.
LowestFactorization lowest_part_factorization(const MixedPolynomial& gp);

struct OracleConfig {
    double target = 1e-3;
    double radius = 0.5;
    std::size_t max_cells = 2'000'000;
    int max_depth = 16;
};

struct OracleCount {
    int lower = 0;
    int upper = 0;
    std::vector<std::complex<double>> solutions; // certified, deduplicated, increasing argument
    std::size_t cells = 0;
    std::size_t undecided_cells = 0;
    double min_residual = 0; // smallest criticality residual at the solutions

    bool exact() const { return lower == upper; }
};

/// Distinct solutions of gp(z, zbar) = target in the open disk |z| < radius.
/// Cells are excluded by interval arithmetic and roots certified by the
/// Krawczyk test; undecided cells widen [lower, upper].
OracleCount numeric_count_oracle(const MixedPolynomial& gp, const OracleConfig& config = {});

enum class CountMethod { Formula, Oracle, MismatchReport, Undefined };

std::string count_method_name(CountMethod m);

struct FiberCount {
    std::optional<int> count; // empty when the axis vanishes or the oracle is undecided
    CountMethod method = CountMethod::Undefined;
    std::optional<int> formula;
    bool hypotheses_hold = false;
    std::optional<LowestFactorization> factorization;
    std::optional<OracleCount> oracle;
    std::string note;
};

/// n_j for axis j: fiber points of g = target on {z_j = 0}.
FiberCount count_fiber_points(const MixedPolynomial& g, int axis, const OracleConfig& config = {});

/// Formula and oracle count for a one-variable axis restriction g'.
FiberCount count_axis_restriction(const MixedPolynomial& gp, const OracleConfig& config = {});

struct JoinInput {
    MixedPolynomial g{2};
    GradedMonodromy mono1;
    GradedMonodromy mono2;
    MultilinkData link;
    std::optional<std::pair<int, int>> counts;
};

struct JoinFactor {
    int q = 0;
    std::size_t size = 0;
    LaurentPoly det;
    int exponent = 1; // (-1)^q
};

struct JoinReport {
    int n1 = 0;
    int n2 = 0;
    bool counts_supplied = false;
    std::optional<FiberCount> count1;
    std::optional<FiberCount> count2;
    ZetaFunction zeta_f1;
    ZetaFunction zeta_f2;
    ZetaFunction prefactor1; // zeta_{f1}(lambda^{n2}) or 1
    ZetaFunction prefactor2; // zeta_{f2}(lambda^{n1}) or 1
    LaurentPoly alexander;   // nonnegative form actually substituted
    std::vector<JoinFactor> factors;
    AxisRuleCheck axis;
    ZetaFunction zeta;
};

/// Composed zeta function, up to +-lambda^u.
JoinReport join_zeta(const JoinInput& input, const OracleConfig& config = {});

/// chi(F_f) from the axis-removed Milnor fiber of g and the two fibers.
long euler_join(long chi_g_minus_axes, long chi1, long chi2, long n1, long n2);

enum class CheckStatus { Pass, Fail, Skip };

std::string check_status_name(CheckStatus s);

struct CheckEntry {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

/// Axis rule, Euler characteristic (when chi data is given), orientation
/// reversal invariance per component, and agreement of the fiber counts.
std::vector<CheckEntry> cross_check(const JoinInput& input, const JoinReport& report,
                                    std::optional<long> chi_g_minus_axes, const OracleConfig& config = {});

} // namespace mixjoin
