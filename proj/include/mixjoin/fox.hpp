#pragma once

#include "mixjoin/matrix.hpp"
#include "mixjoin/zeta.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mixjoin {

/// Letter b_gen^sign of a free group, gen is 1-based.
struct Letter {
    int gen = 1;
    int sign = 1;
    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word in b_1, ..., b_mu. The empty word is the identity.
class FreeWord {
public:
    FreeWord() = default;
    /// Reduces the given letters; throws InputError on gen < 1 or sign not +-1.
    explicit FreeWord(const std::vector<Letter>& letters);
    static FreeWord generator(int gen, int sign = 1) { return FreeWord({Letter{gen, sign}}); }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }
    int max_generator() const;

    FreeWord inverse() const;
    friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
    friend bool operator==(const FreeWord&, const FreeWord&) = default;
    friend auto operator<=>(const FreeWord& a, const FreeWord& b) { return a.letters_ <=> b.letters_; }

    /// "b1*b2^-1*b1", "1" for the identity.
    std::string to_string() const;

private:
    std::vector<Letter> letters_;
};

/// Element of Z[F], integer coefficients, no zero terms.
class GroupRingElement {
public:
    using TermMap = std::map<FreeWord, std::int64_t>;

    GroupRingElement() = default;
    static GroupRingElement of(const FreeWord& w, std::int64_t c = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const FreeWord& w, std::int64_t c);

    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

    std::string to_string() const;

private:
    TermMap terms_;
};

/// Left Fox derivative d w / d b_j: d(uv) = du + u dv, d(b_j^-1) = -b_j^-1.
GroupRingElement fox_derivative(const FreeWord& w, int j);

/// Word in the named generators of G, e.g. {{"h", 1}} or {{"b1", 1}, {"h", -1}}.
using NamedWord = std::vector<std::pair<std::string, int>>;

/// Representation rho of G into GL(A^q), given by images of named generators.
/// The generators of H are named "b1", ..., "b<mu>".
class Representation {
public:
    Representation() = default;
    /// Validates square images of size dim, invertible over Q(i).
    Representation(std::size_t dim, std::map<std::string, QMatrix> images);

    std::size_t dim() const { return dim_; }
    const std::map<std::string, QMatrix>& images() const { return images_; }
    bool has(const std::string& name) const { return images_.contains(name); }

    const QMatrix& image(const std::string& name) const;
    QMatrix evaluate(const NamedWord& w) const;
    /// rho on a word of H, b_k -> images["b<k>"].
    QMatrix evaluate(const FreeWord& w) const;
    /// Linear extension of rho to Z[H].
    QMatrix evaluate(const GroupRingElement& x) const;

private:
    std::size_t dim_ = 0;
    std::map<std::string, QMatrix> images_;
    std::map<std::string, QMatrix> inverses_;
};

/// Block (i, j) = rho(h) * rho(d w_i / d b_j); size mu*dim.
QMatrix h_der_matrix(const std::vector<FreeWord>& words, const Representation& rho, const NamedWord& h = {{"h", 1}});

/// delta : A -> Der(H, A) = A^mu, block i = rho(b_i) - I; size (mu*dim) x dim.
QMatrix delta_matrix(const Representation& rho, int mu);

struct CohomologyDims {
    std::size_t h0 = 0; // dim ker delta
    std::size_t a = 0;  // dim A^q
    std::size_t der = 0; // mu * dim A^q
    std::size_t h1 = 0; // dim coker delta
    /// h0 - a + der - h1 == 0
    bool exact() const { return static_cast<long>(h0) - static_cast<long>(a) + static_cast<long>(der) - static_cast<long>(h1) == 0; }
};
CohomologyDims cohomology_dims(const Representation& rho, int mu);

/// hder * delta == delta * rho_h.
bool ladder_commutes(const QMatrix& hder, const QMatrix& delta, const QMatrix& rho_h);

/// det(I - lambda rho_h) / det(I - lambda hder). The sign (-1)^q is applied by the caller.
ZetaFunction zeta_gD_component(const QMatrix& rho_h, const QMatrix& hder);

/// Indices of relators whose image under rho is not the identity.
std::vector<std::size_t> failing_relators(const Representation& rho, const std::vector<NamedWord>& relators);

} // namespace mixjoin
