#pragma once

#include "mixjoin/mixed_poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mixjoin {

using LatticePoint = std::vector<std::int64_t>;

/// Weight vector P with non-negative entries, not all zero. Defines l_P(x) = <P, x>.
class WeightVector {
public:
    explicit WeightVector(std::vector<std::int64_t> entries);

    const std::vector<std::int64_t>& entries() const { return p_; }
    std::size_t size() const { return p_.size(); }
    std::int64_t operator[](std::size_t i) const { return p_[i]; }
    /// I(P) = { i : p_i = 0 }, 1-based.
    IndexSet zero_set() const;
    bool strictly_positive() const;
    std::int64_t apply(const LatticePoint& x) const;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<std::int64_t> p_;
};

struct Face {
    int dim = 0;
    std::vector<LatticePoint> lattice_points; // support points on the face, increasing first coordinate
    WeightVector supporting_weight{std::vector<std::int64_t>{1}};
};

struct NewtonPolygon {
    int n = 0;
    std::vector<LatticePoint> support; // canonical term order of the polynomial, duplicates merged
    std::vector<Face> faces;           // compact faces
};

/// { nu + mu } over the stored terms. Throws DomainError for the zero polynomial.
std::vector<LatticePoint> support(const MixedPolynomial& p);

/// Compact faces of Gamma_+. For n = 2 the vertices and bounded edges of the
/// lower-left hull, ordered by increasing first coordinate (vertex, edge,
/// vertex, ...). For n = 1 the single vertex. For n >= 3 the faces are found
/// by enumerating strictly positive weights with entries up to `weight_bound`
/// (desk-scale only).
NewtonPolygon compact_faces(const MixedPolynomial& p, int weight_bound = 8);

struct WeightData {
    std::int64_t d = 0; // d(P)
    Face delta;         // Delta(P) restricted to the support
};

WeightData weight_data(const MixedPolynomial& p, const WeightVector& weight);

/// Sum of the terms whose nu + mu lies in `face.lattice_points`.
MixedPolynomial face_function(const MixedPolynomial& p, const Face& face);

/// g_P = face_function(p, weight_data(p, P).delta).
MixedPolynomial weight_face_function(const MixedPolynomial& p, const WeightVector& weight);

enum class StratumKind {
    ZeroSetInTorus,       // g^{-1}(0) intersected with C*^I, I in I_nv
    TorusMinusZeroSet,    // C*^I minus g^{-1}(0), I in I_nv
    VanishingTorus,       // C*^I, I in I_v
};

struct StratumDescriptor {
    IndexSet subset;
    StratumKind kind;
    /// g^I, the polynomial whose zero set defines membership within C*^I.
    MixedPolynomial defining;
    std::string label;
};

/// Symbolic canonical stratification: two strata per I in I_nv, one per I in I_v.
std::vector<StratumDescriptor> canonical_strata(const MixedPolynomial& p);

std::string stratum_kind_name(StratumKind k);

} // namespace mixjoin
