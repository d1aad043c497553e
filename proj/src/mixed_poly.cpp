#include "mixjoin/mixed_poly.hpp"

#include "mixjoin/error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace mixjoin {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
    Exponent r;
    if (__builtin_add_overflow(a, b, &r)) throw DomainError("exponent overflow");
    return r;
}

Exponent checked_mul(Exponent a, Exponent b) {
    Exponent r;
    if (__builtin_mul_overflow(a, b, &r)) throw DomainError("exponent overflow");
    return r;
}

MonomialKey unit_key(int n) {
    return MonomialKey{std::vector<Exponent>(n, 0), std::vector<Exponent>(n, 0)};
}

} // namespace

std::vector<Exponent> MonomialKey::lattice_point() const {
    std::vector<Exponent> out(nu.size());
    for (std::size_t i = 0; i < nu.size(); ++i) out[i] = checked_add(nu[i], mu[i]);
    return out;
}

bool MonomialKey::is_holomorphic() const {
    return std::all_of(mu.begin(), mu.end(), [](Exponent e) { return e == 0; });
}

bool MonomialOrder::operator()(const MonomialKey& a, const MonomialKey& b) const {
    for (std::size_t i = 0; i < a.nu.size(); ++i) {
        if (a.nu[i] != b.nu[i]) return a.nu[i] > b.nu[i];
        if (a.mu[i] != b.mu[i]) return a.mu[i] > b.mu[i];
    }
    return false;
}

MixedPolynomial::MixedPolynomial(int n) : n_(n) {
    if (n < 1) throw InputError("mixed polynomial needs at least one variable");
}

MixedPolynomial MixedPolynomial::constant(int n, const GaussianRational& c) {
    MixedPolynomial p(n);
    p.add_term(unit_key(n), c);
    return p;
}

MixedPolynomial MixedPolynomial::variable(int n, int j) {
    if (j < 1 || j > n) throw InputError("variable index out of range");
    MonomialKey key = unit_key(n);
    key.nu[j - 1] = 1;
    return monomial(GaussianRational(1), std::move(key));
}

MixedPolynomial MixedPolynomial::conj_variable(int n, int j) {
    if (j < 1 || j > n) throw InputError("variable index out of range");
    MonomialKey key = unit_key(n);
    key.mu[j - 1] = 1;
    return monomial(GaussianRational(1), std::move(key));
}

MixedPolynomial MixedPolynomial::monomial(const GaussianRational& c, MonomialKey key) {
    if (key.nu.size() != key.mu.size()) throw InputError("nu and mu lengths differ");
    MixedPolynomial p(static_cast<int>(key.nu.size()));
    p.add_term(key, c);
    return p;
}

bool MixedPolynomial::is_holomorphic() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.is_holomorphic(); });
}

void MixedPolynomial::add_term(const MonomialKey& key, const GaussianRational& c) {
    if (static_cast<int>(key.nu.size()) != n_ || static_cast<int>(key.mu.size()) != n_)
        throw InputError("monomial has wrong number of variables");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MixedPolynomial MixedPolynomial::operator-() const {
    MixedPolynomial r(n_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

MixedPolynomial& MixedPolynomial::operator+=(const MixedPolynomial& o) {
    if (o.n_ != n_) throw InputError("variable count mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

MixedPolynomial& MixedPolynomial::operator-=(const MixedPolynomial& o) {
    if (o.n_ != n_) throw InputError("variable count mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b) {
    if (a.n_ != b.n_) throw InputError("variable count mismatch");
    MixedPolynomial r(a.n_);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            MonomialKey k = ka;
            for (int i = 0; i < a.n_; ++i) {
                k.nu[i] = checked_add(k.nu[i], kb.nu[i]);
                k.mu[i] = checked_add(k.mu[i], kb.mu[i]);
            }
            r.add_term(k, ca * cb);
        }
    }
    return r;
}

MixedPolynomial MixedPolynomial::scaled(const GaussianRational& c) const {
    MixedPolynomial r(n_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

MixedPolynomial MixedPolynomial::pow(std::uint32_t k) const {
    MixedPolynomial result = constant(n_, GaussianRational(1));
    MixedPolynomial base = *this;
    // single-term fast path keeps exponent overflow detection exact
    if (terms_.size() == 1) {
        const auto& [key, c] = *terms_.begin();
        MonomialKey e = key;
        for (int i = 0; i < n_; ++i) {
            e.nu[i] = checked_mul(e.nu[i], k);
            e.mu[i] = checked_mul(e.mu[i], k);
        }
        return monomial(c.pow(k), std::move(e));
    }
    while (k != 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k != 0) base = base * base;
    }
    return result;
}

MixedPolynomial MixedPolynomial::conj() const {
    MixedPolynomial r(n_);
    for (const auto& [k, c] : terms_) r.add_term(MonomialKey{k.mu, k.nu}, c.conj());
    return r;
}

std::string MixedPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string mono;
        auto append = [&mono](const std::string& base, Exponent e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += base;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        for (int i = 0; i < n_; ++i) {
            append("z" + std::to_string(i + 1), k.nu[i]);
            append("bar(z" + std::to_string(i + 1) + ")", k.mu[i]);
        }
        std::string term;
        if (mono.empty()) {
            term = c.to_string();
        } else if (c.is_one()) {
            term = mono;
        } else if (c == GaussianRational(-1)) {
            term = "-" + mono;
        } else {
            term = c.to_string() + "*" + mono;
        }
        if (first) {
            out = term;
            first = false;
        } else if (term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    Parser(std::string_view text, int n) : s_(text), n_(n) {}

    MixedPolynomial run() {
        MixedPolynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    int n_;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool at_digit() {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    mpz_class natural() {
        if (!at_digit()) fail("expected a number");
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    Exponent small_natural(const char* what) {
        std::size_t at = pos_;
        mpz_class v = natural();
        if (v > std::numeric_limits<Exponent>::max()) {
            pos_ = at;
            fail(std::string(what) + " too large");
        }
        return static_cast<Exponent>(v.get_ui());
    }

    int var_index() {
        std::size_t at = pos_;
        mpz_class v = natural();
        if (v < 1 || v > n_) {
            pos_ = at;
            fail("variable index out of range [1, " + std::to_string(n_) + "]");
        }
        return static_cast<int>(v.get_si());
    }

    MixedPolynomial expr() {
        MixedPolynomial acc(n_);
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        MixedPolynomial t = term();
        acc = negate ? -t : t;
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else break;
        }
        return acc;
    }

    MixedPolynomial term() {
        MixedPolynomial acc = factor();
        for (;;) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (peek('/')) {
                fail("division in input");
            } else {
                break;
            }
        }
        return acc;
    }

    MixedPolynomial factor() {
        if (accept('-')) return -factor();
        bool modulus = false;
        MixedPolynomial base = atom(modulus);
        if (accept('^')) {
            Exponent e = small_natural("exponent");
            if (modulus) {
                if (e % 2 != 0) fail("|z|^k requires an even exponent");
                return base.pow(e / 2);
            }
            return base.pow(e);
        }
        if (modulus) fail("|z| must be raised to an even power");
        return base;
    }

    // Returns z*conj(z) with `modulus` set for the |zj| form.
    MixedPolynomial atom(bool& modulus) {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return literal();
        if (c == 'i') {
            ++pos_;
            return MixedPolynomial::constant(n_, GaussianRational::i());
        }
        if (c == 'z') {
            ++pos_;
            return MixedPolynomial::variable(n_, var_index());
        }
        if (s_.substr(pos_, 4) == "bar(") {
            pos_ += 4;
            expect('z');
            int j = var_index();
            expect(')');
            return MixedPolynomial::conj_variable(n_, j);
        }
        if (c == '|') {
            ++pos_;
            expect('z');
            int j = var_index();
            expect('|');
            modulus = true;
            return MixedPolynomial::variable(n_, j) * MixedPolynomial::conj_variable(n_, j);
        }
        if (c == '(') {
            ++pos_;
            MixedPolynomial inner = expr();
            expect(')');
            return inner;
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    // rational := nat ('/' nat)? ; optional trailing 'i'
    MixedPolynomial literal() {
        mpz_class num = natural();
        mpq_class value(num);
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            if (!(pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))))
                fail("division in input");
            mpz_class den = natural();
            if (den == 0) fail("zero denominator");
            value = mpq_class(num, den);
            value.canonicalize();
        }
        if (pos_ < s_.size() && s_[pos_] == 'i') {
            ++pos_;
            return MixedPolynomial::constant(n_, GaussianRational(mpq_class(0), value));
        }
        return MixedPolynomial::constant(n_, GaussianRational(value));
    }
};

} // namespace

MixedPolynomial parse(std::string_view text, int n) {
    if (n < 1) throw InputError("variable count must be at least 1");
    return Parser(text, n).run();
}

// ---------------------------------------------------------------------------

GaussianRational evaluate(const MixedPolynomial& p, std::span<const GaussianRational> point) {
    if (static_cast<int>(point.size()) != p.num_vars()) throw InputError("point dimension mismatch");
    GaussianRational sum;
    for (const auto& [k, c] : p.terms()) {
        GaussianRational t = c;
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (k.nu[i]) t *= point[i].pow(k.nu[i]);
            if (k.mu[i]) t *= point[i].conj().pow(k.mu[i]);
        }
        sum += t;
    }
    return sum;
}

std::complex<double> evaluate(const MixedPolynomial& p, std::span<const std::complex<double>> point) {
    if (static_cast<int>(point.size()) != p.num_vars()) throw InputError("point dimension mismatch");
    std::complex<double> sum{0.0, 0.0};
    for (const auto& [k, c] : p.terms()) {
        std::complex<double> t = c.to_complex();
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (Exponent e = 0; e < k.nu[i]; ++e) t *= point[i];
            for (Exponent e = 0; e < k.mu[i]; ++e) t *= std::conj(point[i]);
        }
        sum += t;
    }
    return sum;
}

MixedPolynomial wirtinger(const MixedPolynomial& p, int j, WirtingerKind kind) {
    if (j < 1 || j > p.num_vars()) throw InputError("variable index out of range");
    MixedPolynomial r(p.num_vars());
    for (const auto& [k, c] : p.terms()) {
        MonomialKey nk = k;
        Exponent& e = kind == WirtingerKind::Holomorphic ? nk.nu[j - 1] : nk.mu[j - 1];
        if (e == 0) continue;
        GaussianRational factor(static_cast<long>(e));
        --e;
        r.add_term(nk, c * factor);
    }
    return r;
}

MixedPolynomial restrict(const MixedPolynomial& p, const IndexSet& subset) {
    MixedPolynomial r(p.num_vars());
    for (const auto& [k, c] : p.terms()) {
        bool keep = true;
        for (int i = 1; i <= p.num_vars() && keep; ++i) {
            if (!subset.contains(i) && (k.nu[i - 1] != 0 || k.mu[i - 1] != 0)) keep = false;
        }
        if (keep) r.add_term(k, c);
    }
    return r;
}

std::vector<IndexSet> nonempty_subsets(int n) {
    std::vector<IndexSet> out;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        IndexSet s;
        for (int i = 0; i < n; ++i)
            if (mask & (1U << i)) s.insert(i + 1);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

IndexSets index_sets(const MixedPolynomial& p) {
    if (p.num_vars() > 20) throw DomainError("index_sets enumerates 2^n subsets; n too large");
    IndexSets out;
    for (auto& s : nonempty_subsets(p.num_vars())) {
        if (restrict(p, s).is_zero()) out.vanishing.push_back(s);
        else out.nonvanishing.push_back(s);
    }
    return out;
}

bool is_convenient(const MixedPolynomial& p) {
    for (int j = 1; j <= p.num_vars(); ++j)
        if (restrict(p, IndexSet{j}).is_zero()) return false;
    return true;
}

MixedPolynomial substitute(const MixedPolynomial& p, const IndexSet& fixed,
                           std::span<const GaussianRational> values) {
    if (values.size() != fixed.size()) throw InputError("substitution value count mismatch");
    int remaining = p.num_vars() - static_cast<int>(fixed.size());
    if (remaining < 1) throw InputError("substitution must leave at least one free variable");
    std::vector<int> slot(p.num_vars(), -1); // new index for free variables
    std::vector<int> value_index(p.num_vars(), -1);
    int next = 0;
    int vi = 0;
    for (int i = 1; i <= p.num_vars(); ++i) {
        if (fixed.contains(i)) value_index[i - 1] = vi++;
        else slot[i - 1] = next++;
    }
    MixedPolynomial r(remaining);
    for (const auto& [k, c] : p.terms()) {
        GaussianRational coeff = c;
        MonomialKey nk = unit_key(remaining);
        for (int i = 0; i < p.num_vars(); ++i) {
            if (slot[i] >= 0) {
                nk.nu[slot[i]] = k.nu[i];
                nk.mu[slot[i]] = k.mu[i];
            } else {
                const GaussianRational& a = values[value_index[i]];
                if (k.nu[i]) coeff *= a.pow(k.nu[i]);
                if (k.mu[i]) coeff *= a.conj().pow(k.mu[i]);
            }
        }
        r.add_term(nk, coeff);
    }
    return r;
}

std::string index_set_to_string(const IndexSet& s) {
    std::string out = "{";
    bool first = true;
    for (int i : s) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

} // namespace mixjoin
