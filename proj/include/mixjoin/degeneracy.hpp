#pragma once

#include "mixjoin/mixed_poly.hpp"
#include "mixjoin/newton.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mixjoin {

enum class VerdictStatus { Verified, Refuted, Unknown };

/// "VERIFIED", "REFUTED", "UNKNOWN".
std::string status_name(VerdictStatus s);

struct Witness {
    std::vector<std::complex<double>> point;
    double residual = 0.0;
    /// True when exact_point holds a Gaussian-rational point whose rank deficiency was proven exactly.
    bool exact = false;
    std::vector<GaussianRational> exact_point;
};

struct Verdict {
    Face face;
    MixedPolynomial face_function{1};
    VerdictStatus status = VerdictStatus::Unknown;
    /// "monomial", "one-variable-circle", "holomorphic-resultant", "sampling".
    std::string rule;
    std::optional<Witness> witness;
    std::string evidence;
};

struct DegeneracyBudget {
    int multistarts = 64;
    int max_iterations = 400;
    double tolerance = 1e-9;
    std::uint64_t seed = 0;
};

/// Smallest singular value of the real 2 x 2n Jacobian of (Re p, Im p).
/// Throws DomainError when a coordinate is zero.
double criticality_residual(const MixedPolynomial& p, std::span<const std::complex<double>> point);

/// Exact rank test of the real Jacobian at a Gaussian-rational torus point.
bool is_critical_exact(const MixedPolynomial& p, std::span<const GaussianRational> point);

/// Critical-point test of one weighted homogeneous face function on the torus.
/// `weight` enables the R_+ normalization |z_1| = 1 during sampling.
Verdict check_face_function(const MixedPolynomial& f, const std::optional<WeightVector>& weight,
                            const DegeneracyBudget& budget, std::uint64_t stream = 0);

/// One verdict per compact face, in compact_faces order.
std::vector<Verdict> check_strong_nondegeneracy(const MixedPolynomial& p, const DegeneracyBudget& budget = {});

struct TamenessConfig {
    std::vector<mpq_class> radii{mpq_class(1, 2), mpq_class(1, 4), mpq_class(1, 8)};
    int samples_per_radius = 4;
    int weight_bound = 12;
    DegeneracyBudget budget;
};

struct TamenessInstance {
    WeightVector weight{std::vector<std::int64_t>{1}};
    Face delta;
    mpq_class radius;
    std::vector<GaussianRational> a; // values of z_I in increasing index order
    MixedPolynomial restricted{1};
    VerdictStatus status = VerdictStatus::Unknown;
    std::vector<Verdict> verdicts;
    std::string note;
};

struct TamenessVerdict {
    IndexSet subset;
    VerdictStatus status = VerdictStatus::Unknown;
    std::string rule;
    std::optional<Witness> witness; // point in the free variables of the refuting instance
    std::string evidence;
    std::vector<TamenessInstance> instances;
};

/// One verdict per I in I_v, in index_sets order. Empty when p is convenient.
std::vector<TamenessVerdict> check_local_tameness(const MixedPolynomial& p, const TamenessConfig& config = {});

} // namespace mixjoin
