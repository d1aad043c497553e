#include "mixjoin/newton.hpp"

#include "mixjoin/error.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace mixjoin {

WeightVector::WeightVector(std::vector<std::int64_t> entries) : p_(std::move(entries)) {
    if (p_.empty()) throw InputError("weight vector must be nonempty");
    bool nonzero = false;
    for (auto v : p_) {
        if (v < 0) throw InputError("weight entries must be non-negative");
        if (v != 0) nonzero = true;
    }
    if (!nonzero) throw InputError("weight vector must be nonzero");
}

IndexSet WeightVector::zero_set() const {
    IndexSet s;
    for (std::size_t i = 0; i < p_.size(); ++i)
        if (p_[i] == 0) s.insert(static_cast<int>(i) + 1);
    return s;
}

bool WeightVector::strictly_positive() const {
    return std::all_of(p_.begin(), p_.end(), [](std::int64_t v) { return v > 0; });
}

std::int64_t WeightVector::apply(const LatticePoint& x) const {
    if (x.size() != p_.size()) throw InputError("weight/point dimension mismatch");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < p_.size(); ++i) s += p_[i] * x[i];
    return s;
}

std::vector<LatticePoint> support(const MixedPolynomial& p) {
    if (p.is_zero()) throw DomainError("support of the zero polynomial is empty");
    std::vector<LatticePoint> out;
    std::set<LatticePoint> seen;
    for (const auto& [k, c] : p.terms()) {
        auto lp = k.lattice_point();
        LatticePoint x(lp.begin(), lp.end());
        if (seen.insert(x).second) out.push_back(std::move(x));
    }
    return out;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Affine dimension of a point set (rank of differences), exact over the integers.
int affine_dim(const std::vector<LatticePoint>& pts) {
    if (pts.size() <= 1) return 0;
    std::vector<std::vector<mpq_class>> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<mpq_class> r;
        for (std::size_t k = 0; k < pts[0].size(); ++k) r.emplace_back(pts[i][k] - pts[0][k]);
        rows.push_back(std::move(r));
    }
    int rank = 0;
    std::size_t cols = pts[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || sgn(rows[r][c]) == 0) continue;
            mpq_class f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::vector<LatticePoint> argmin(const std::vector<LatticePoint>& pts, const WeightVector& w,
                                 std::int64_t& d) {
    d = std::numeric_limits<std::int64_t>::max();
    for (const auto& x : pts) d = std::min(d, w.apply(x));
    std::vector<LatticePoint> out;
    for (const auto& x : pts)
        if (w.apply(x) == d) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

/// Lexicographically smallest strictly positive (p1, p2) isolating v.
WeightVector isolating_weight_2d(const LatticePoint& v, const std::vector<LatticePoint>& pts) {
    for (std::int64_t p1 = 1; p1 < (1 << 20); ++p1) {
        std::int64_t lo = 1;                                      // p2 >= lo
        std::int64_t hi = std::numeric_limits<std::int64_t>::max(); // p2 <= hi
        bool feasible = true;
        for (const auto& w : pts) {
            if (w == v) continue;
            std::int64_t dx = w[0] - v[0];
            std::int64_t dy = w[1] - v[1];
            // need p1*dx + p2*dy > 0
            if (dy > 0) {
                lo = std::max(lo, floor_div(-p1 * dx, dy) + 1);
            } else if (dy < 0) {
                // p2 < p1*dx / (-dy)
                std::int64_t num = p1 * dx;
                std::int64_t den = -dy;
                std::int64_t bound = (num % den == 0) ? num / den - 1 : floor_div(num, den);
                hi = std::min(hi, bound);
            } else if (p1 * dx <= 0) {
                feasible = false;
            }
        }
        if (feasible && lo <= hi) return WeightVector({p1, lo});
    }
    throw InternalError("no isolating weight found for a hull vertex");
}

NewtonPolygon faces_2d(std::vector<LatticePoint> pts) {
    NewtonPolygon poly;
    poly.n = 2;
    poly.support = pts;

    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    // lower-left Pareto frontier: increasing x, strictly decreasing y
    std::vector<LatticePoint> frontier;
    for (const auto& x : pts) {
        if (frontier.empty() || x[1] < frontier.back()[1]) frontier.push_back(x);
    }
    std::vector<LatticePoint> hull;
    for (const auto& x : frontier) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), x) <= 0) hull.pop_back();
        hull.push_back(x);
    }

    for (std::size_t i = 0; i < hull.size(); ++i) {
        Face vertex;
        vertex.dim = 0;
        vertex.lattice_points = {hull[i]};
        vertex.supporting_weight = isolating_weight_2d(hull[i], pts);
        poly.faces.push_back(std::move(vertex));
        if (i + 1 == hull.size()) break;
        const auto& a = hull[i];
        const auto& b = hull[i + 1];
        std::int64_t w1 = a[1] - b[1];
        std::int64_t w2 = b[0] - a[0];
        std::int64_t g = std::gcd(w1, w2);
        Face edge;
        edge.dim = 1;
        edge.supporting_weight = WeightVector({w1 / g, w2 / g});
        std::int64_t d = edge.supporting_weight.apply(a);
        for (const auto& x : pts)
            if (edge.supporting_weight.apply(x) == d) edge.lattice_points.push_back(x);
        poly.faces.push_back(std::move(edge));
    }
    return poly;
}

std::vector<std::vector<std::int64_t>> positive_weights(int n, int bound) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur(n, 1);
    for (;;) {
        out.push_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[i] == bound) {
            cur[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

} // namespace

NewtonPolygon compact_faces(const MixedPolynomial& p, int weight_bound) {
    auto pts = support(p);
    int n = p.num_vars();
    if (n == 2) return faces_2d(std::move(pts));

    NewtonPolygon poly;
    poly.n = n;
    poly.support = pts;
    if (n == 1) {
        auto best = *std::min_element(pts.begin(), pts.end());
        poly.faces.push_back(Face{0, {best}, WeightVector({1})});
        return poly;
    }
    std::map<std::vector<LatticePoint>, Face> found;
    for (auto& w : positive_weights(n, weight_bound)) {
        WeightVector wv(w);
        std::int64_t d;
        auto set = argmin(pts, wv, d);
        if (!found.contains(set)) found.emplace(set, Face{affine_dim(set), set, wv});
    }
    for (auto& [set, face] : found) poly.faces.push_back(face);
    std::stable_sort(poly.faces.begin(), poly.faces.end(),
                     [](const Face& a, const Face& b) { return a.dim < b.dim; });
    return poly;
}

WeightData weight_data(const MixedPolynomial& p, const WeightVector& weight) {
    if (static_cast<int>(weight.size()) != p.num_vars()) throw InputError("weight dimension mismatch");
    auto pts = support(p);
    WeightData out;
    auto set = argmin(pts, weight, out.d);
    out.delta = Face{affine_dim(set), std::move(set), weight};
    return out;
}

MixedPolynomial face_function(const MixedPolynomial& p, const Face& face) {
    std::set<LatticePoint> members(face.lattice_points.begin(), face.lattice_points.end());
    MixedPolynomial r(p.num_vars());
    for (const auto& [k, c] : p.terms()) {
        auto lp = k.lattice_point();
        if (members.contains(LatticePoint(lp.begin(), lp.end()))) r.add_term(k, c);
    }
    return r;
}

MixedPolynomial weight_face_function(const MixedPolynomial& p, const WeightVector& weight) {
    return face_function(p, weight_data(p, weight).delta);
}

std::string stratum_kind_name(StratumKind k) {
    switch (k) {
    case StratumKind::ZeroSetInTorus: return "zero-set";
    case StratumKind::TorusMinusZeroSet: return "complement";
    case StratumKind::VanishingTorus: return "vanishing-torus";
    }
    return "unknown";
}

std::vector<StratumDescriptor> canonical_strata(const MixedPolynomial& p) {
    if (p.is_zero()) throw DomainError("canonical strata of the zero polynomial are undefined");
    auto sets = index_sets(p);
    std::vector<StratumDescriptor> out;
    for (const auto& s : sets.nonvanishing) {
        auto gi = restrict(p, s);
        std::string torus = "C*^" + index_set_to_string(s);
        out.push_back({s, StratumKind::ZeroSetInTorus, gi, "g^-1(0) & " + torus});
        out.push_back({s, StratumKind::TorusMinusZeroSet, gi, torus + " \\ g^-1(0)"});
    }
    for (const auto& s : sets.vanishing) {
        out.push_back({s, StratumKind::VanishingTorus, MixedPolynomial(p.num_vars()),
                       "C*^" + index_set_to_string(s)});
    }
    return out;
}

} // namespace mixjoin
