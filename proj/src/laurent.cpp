#include "mixjoin/laurent.hpp"

#include "mixjoin/error.hpp"

#include <algorithm>
#include <limits>

namespace mixjoin {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw DomainError("Laurent exponent overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw DomainError("Laurent exponent overflow");
    return r;
}

} // namespace

LaurentPoly::LaurentPoly(const GaussianRational& c) {
    if (!c.is_zero()) terms_.emplace(Exps{}, c);
}

LaurentPoly LaurentPoly::zero(int vars) {
    LaurentPoly p;
    p.vars_ = vars;
    return p;
}

LaurentPoly LaurentPoly::monomial(Exps exps, const GaussianRational& c) {
    LaurentPoly p;
    p.vars_ = static_cast<int>(exps.size());
    if (!c.is_zero()) p.terms_.emplace(std::move(exps), c);
    return p;
}

LaurentPoly LaurentPoly::variable(int vars, int slot, std::int64_t power) {
    if (slot < 0 || slot >= vars) throw InputError("Laurent variable slot out of range");
    Exps e(vars, 0);
    e[slot] = power;
    return monomial(std::move(e));
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::int64_t v) { return v == 0; });
}

bool LaurentPoly::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_integer(); });
}

bool LaurentPoly::has_real_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

GaussianRational LaurentPoly::coefficient(const Exps& e) const {
    Exps key = e;
    if (key.empty()) key.assign(vars_, 0);
    auto it = terms_.find(key);
    return it == terms_.end() ? GaussianRational() : it->second;
}

GaussianRational LaurentPoly::constant_term() const { return coefficient(Exps(vars_, 0)); }

LaurentPoly::Exps LaurentPoly::min_exponents() const {
    if (terms_.empty()) throw DomainError("exponent range of the zero polynomial");
    Exps m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < vars_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

LaurentPoly::Exps LaurentPoly::max_exponents() const {
    if (terms_.empty()) throw DomainError("exponent range of the zero polynomial");
    Exps m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < vars_; ++i) m[i] = std::max(m[i], e[i]);
    return m;
}

void LaurentPoly::add_term(Exps e, const GaussianRational& c) {
    if (static_cast<int>(e.size()) != vars_) {
        if (vars_ == 0 && terms_.empty()) vars_ = static_cast<int>(e.size());
        else if (vars_ == 0) *this = promoted(static_cast<int>(e.size()));
        else throw InputError("Laurent term has wrong variable count");
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::promoted(int vars) const {
    if (vars == vars_) return *this;
    if (vars_ != 0) throw InputError("cannot change the variable count of a non-constant Laurent polynomial");
    LaurentPoly p = zero(vars);
    for (const auto& [e, c] : terms_) p.terms_.emplace(Exps(vars, 0), c);
    return p;
}

int LaurentPoly::common_vars(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars_ == b.vars_) return a.vars_;
    if (a.vars_ == 0) return b.vars_;
    if (b.vars_ == 0) return a.vars_;
    throw InputError("Laurent polynomials have different variable counts");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    int v = common_vars(*this, o);
    if (vars_ != v) *this = promoted(v);
    LaurentPoly rhs = o.promoted(v);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    int v = LaurentPoly::common_vars(a, b);
    LaurentPoly x = a.promoted(v);
    LaurentPoly y = b.promoted(v);
    LaurentPoly r = LaurentPoly::zero(v);
    for (const auto& [ea, ca] : x.terms_) {
        for (const auto& [eb, cb] : y.terms_) {
            LaurentPoly::Exps e(v);
            for (int i = 0; i < v; ++i) e[i] = checked_add(ea[i], eb[i]);
            r.add_term(std::move(e), ca * cb);
        }
    }
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    if (a.vars_ != 0 && b.vars_ != 0) return false;
    int v = std::max(a.vars_, b.vars_);
    return a.promoted(v).terms_ == b.promoted(v).terms_;
}

LaurentPoly LaurentPoly::pow(std::uint64_t k) const {
    LaurentPoly result = LaurentPoly(GaussianRational(1)).promoted(vars_);
    LaurentPoly base = *this;
    while (k != 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k != 0) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(const Exps& shift) const {
    int v = vars_ == 0 ? static_cast<int>(shift.size()) : vars_;
    if (static_cast<int>(shift.size()) != v) throw InputError("shift has wrong variable count");
    LaurentPoly src = promoted(v);
    LaurentPoly r = zero(v);
    for (const auto& [e, c] : src.terms_) {
        Exps ne = e;
        for (int i = 0; i < v; ++i) ne[i] = checked_add(ne[i], shift[i]);
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

LaurentPoly LaurentPoly::substitute_power(int slot, std::int64_t k) const {
    if (k == 0) throw InputError("substitution lambda -> lambda^0 is not allowed");
    if (slot < 0 || slot >= vars_) throw InputError("Laurent variable slot out of range");
    LaurentPoly r = zero(vars_);
    for (const auto& [e, c] : terms_) {
        Exps ne = e;
        ne[slot] = checked_mul(ne[slot], k);
        r.add_term(std::move(ne), c);
    }
    return r;
}

LaurentPoly LaurentPoly::specialize(const std::vector<std::int64_t>& weights) const {
    if (static_cast<int>(weights.size()) != vars_ && vars_ != 0)
        throw InputError("specialization weight count mismatch");
    LaurentPoly r = zero(1);
    for (const auto& [e, c] : terms_) {
        std::int64_t d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d = checked_add(d, checked_mul(e[i], weights[i]));
        r.add_term(Exps{d}, c);
    }
    return r;
}

std::string LaurentPoly::to_string() const {
    std::vector<std::string> names;
    if (vars_ == 1) {
        names.push_back("lambda");
    } else {
        for (int i = 0; i < vars_; ++i) names.push_back("l" + std::to_string(i + 1));
    }
    return to_string(names);
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names.at(i);
            if (e[i] != 1) mono += "^" + (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
        }
        std::string term;
        if (mono.empty()) term = c.to_string();
        else if (c.is_one()) term = mono;
        else if (c == GaussianRational(-1)) term = "-" + mono;
        else term = c.to_string() + "*" + mono;
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

namespace {

/// Leading term in lexicographic order (largest exponent vector).
std::pair<LaurentPoly::Exps, GaussianRational> leading(const LaurentPoly& p) {
    const auto& last = *p.terms().rbegin();
    return {last.first, last.second};
}

} // namespace

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DomainError("division by the zero Laurent polynomial");
    if (a.is_zero()) return LaurentPoly::zero(std::max(a.vars(), b.vars()));
    int v = std::max(a.vars(), b.vars());
    LaurentPoly num = a.promoted(v);
    LaurentPoly den = b.promoted(v);
    if (den.is_monomial()) {
        auto [e, c] = leading(den);
        LaurentPoly::Exps neg(v);
        for (int i = 0; i < v; ++i) neg[i] = -e[i];
        LaurentPoly r = num.shifted(neg);
        LaurentPoly out = LaurentPoly::zero(v);
        for (const auto& [te, tc] : r.terms()) out.add_term(te, tc / c);
        return out;
    }
    // Shift both to honest polynomials with no monomial factor; the quotient
    // is then a polynomial and lex division terminates.
    auto amin = num.min_exponents();
    auto bmin = den.min_exponents();
    LaurentPoly::Exps na(v), nb(v), back(v);
    for (int i = 0; i < v; ++i) {
        na[i] = -amin[i];
        nb[i] = -bmin[i];
        back[i] = amin[i] - bmin[i];
    }
    LaurentPoly rem = num.shifted(na);
    LaurentPoly divisor = den.shifted(nb);
    auto [lead_e, lead_c] = leading(divisor);
    LaurentPoly quotient = LaurentPoly::zero(v);
    while (!rem.is_zero()) {
        auto [re, rc] = leading(rem);
        LaurentPoly::Exps qe(v);
        for (int i = 0; i < v; ++i) {
            qe[i] = re[i] - lead_e[i];
            if (qe[i] < 0) throw DomainError("Laurent polynomial division is not exact");
        }
        LaurentPoly t = LaurentPoly::monomial(qe, rc / lead_c);
        quotient += t;
        rem -= t * divisor;
    }
    return quotient.shifted(back);
}

} // namespace mixjoin
