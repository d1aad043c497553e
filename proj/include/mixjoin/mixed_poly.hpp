#pragma once

#include "mixjoin/gaussian.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mixjoin {

using Exponent = std::uint32_t;

/// Exponent pair (nu, mu) of z^nu * conj(z)^mu.
struct MonomialKey {
    std::vector<Exponent> nu;
    std::vector<Exponent> mu;

    std::size_t size() const { return nu.size(); }
    /// nu + mu, the lattice point that enters the Newton polygon.
    std::vector<Exponent> lattice_point() const;
    bool is_holomorphic() const;

    friend bool operator==(const MonomialKey&, const MonomialKey&) = default;
};

/// Canonical term order: descending lexicographic on (nu_1, mu_1, nu_2, mu_2, ...).
struct MonomialOrder {
    bool operator()(const MonomialKey& a, const MonomialKey& b) const;
};

struct MixedMonomial {
    GaussianRational coeff;
    MonomialKey key;
};

enum class WirtingerKind { Holomorphic, Antiholomorphic };

using IndexSet = std::set<int>; // 1-based variable indices

/// Finite sum of c_{nu,mu} z^nu conj(z)^mu in n variables with Gaussian-rational
/// coefficients. Terms with zero coefficient are never stored.
class MixedPolynomial {
public:
    using TermMap = std::map<MonomialKey, GaussianRational, MonomialOrder>;

    explicit MixedPolynomial(int n);
    static MixedPolynomial constant(int n, const GaussianRational& c);
    /// z_j (1-based).
    static MixedPolynomial variable(int n, int j);
    /// conj(z_j) (1-based).
    static MixedPolynomial conj_variable(int n, int j);
    static MixedPolynomial monomial(const GaussianRational& c, MonomialKey key);

    int num_vars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_holomorphic() const;
    std::size_t term_count() const { return terms_.size(); }

    /// Adds c * monomial, merging with an existing term.
    void add_term(const MonomialKey& key, const GaussianRational& c);

    MixedPolynomial operator-() const;
    MixedPolynomial& operator+=(const MixedPolynomial& o);
    MixedPolynomial& operator-=(const MixedPolynomial& o);
    friend MixedPolynomial operator+(MixedPolynomial a, const MixedPolynomial& b) { return a += b; }
    friend MixedPolynomial operator-(MixedPolynomial a, const MixedPolynomial& b) { return a -= b; }
    friend MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b);
    MixedPolynomial scaled(const GaussianRational& c) const;
    MixedPolynomial pow(std::uint32_t k) const;
    friend bool operator==(const MixedPolynomial& a, const MixedPolynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    /// Swaps nu and mu and conjugates coefficients.
    MixedPolynomial conj() const;

    std::string to_string() const;

private:
    int n_;
    TermMap terms_;
};

/// Parses the expression grammar; throws ParseError / InputError.
MixedPolynomial parse(std::string_view text, int n);

/// Inverse of parse: parse(format(p), p.num_vars()) == p.
inline std::string format(const MixedPolynomial& p) { return p.to_string(); }

GaussianRational evaluate(const MixedPolynomial& p, std::span<const GaussianRational> point);
std::complex<double> evaluate(const MixedPolynomial& p, std::span<const std::complex<double>> point);

/// Formal d/dz_j or d/dconj(z_j), j is 1-based.
MixedPolynomial wirtinger(const MixedPolynomial& p, int j, WirtingerKind kind);

/// Terms supported on C^I, i.e. nu_i = mu_i = 0 for all i outside I.
MixedPolynomial restrict(const MixedPolynomial& p, const IndexSet& subset);

struct IndexSets {
    std::vector<IndexSet> nonvanishing; // I_nv
    std::vector<IndexSet> vanishing;    // I_v
};

/// Partition of all nonempty subsets of {1..n}, each list in increasing
/// (size, lexicographic) order.
IndexSets index_sets(const MixedPolynomial& p);

bool is_convenient(const MixedPolynomial& p);

/// Substitutes z_i = values[i] for i in `fixed` and returns a polynomial in the
/// remaining variables, renumbered in increasing order.
MixedPolynomial substitute(const MixedPolynomial& p, const IndexSet& fixed,
                           std::span<const GaussianRational> values);

/// All nonempty subsets of {1..n} in (size, lexicographic) order.
std::vector<IndexSet> nonempty_subsets(int n);

std::string index_set_to_string(const IndexSet& s);

} // namespace mixjoin
