#include "mixjoin/fox.hpp"

#include "mixjoin/error.hpp"

#include <algorithm>

namespace mixjoin {

FreeWord::FreeWord(const std::vector<Letter>& letters) {
    for (const auto& l : letters) {
        if (l.gen < 1) throw InputError("free generator index must be >= 1");
        if (l.sign != 1 && l.sign != -1) throw InputError("letter exponent must be +1 or -1");
        if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().sign == -l.sign) letters_.pop_back();
        else letters_.push_back(l);
    }
}

int FreeWord::max_generator() const {
    int m = 0;
    for (const auto& l : letters_) m = std::max(m, l.gen);
    return m;
}

FreeWord FreeWord::inverse() const {
    FreeWord w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->gen, -it->sign});
    return w;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    std::vector<Letter> all = a.letters_;
    all.insert(all.end(), b.letters_.begin(), b.letters_.end());
    return FreeWord(all);
}

std::string FreeWord::to_string() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        if (k) out += "*";
        out += "b" + std::to_string(letters_[k].gen);
        if (letters_[k].sign < 0) out += "^-1";
    }
    return out;
}

GroupRingElement GroupRingElement::of(const FreeWord& w, std::int64_t c) {
    GroupRingElement x;
    x.add(w, c);
    return x;
}

void GroupRingElement::add(const FreeWord& w, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        if (__builtin_add_overflow(it->second, c, &it->second)) throw DomainError("group ring coefficient overflow");
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            std::int64_t c;
            if (__builtin_mul_overflow(ca, cb, &c)) throw DomainError("group ring coefficient overflow");
            r.add(wa * wb, c);
        }
    return r;
}

std::string GroupRingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::int64_t mag = c < 0 ? -c : c;
        std::string term = mag == 1 ? w.to_string() : std::to_string(mag) + "*" + w.to_string();
        if (first) out = (c < 0 ? "-" : "") + term;
        else out += (c < 0 ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

GroupRingElement fox_derivative(const FreeWord& w, int j) {
    if (j < 1) throw InputError("Fox derivative index must be >= 1");
    GroupRingElement out;
    FreeWord prefix;
    for (const auto& l : w.letters()) {
        if (l.gen == j) {
            // d(u b) = du + u, d(u b^-1) = du - u b^-1
            if (l.sign > 0) out.add(prefix, 1);
            else out.add(prefix * FreeWord::generator(j, -1), -1);
        }
        prefix = prefix * FreeWord::generator(l.gen, l.sign);
    }
    return out;
}

Representation::Representation(std::size_t dim, std::map<std::string, QMatrix> images)
    : dim_(dim), images_(std::move(images)) {
    for (const auto& [name, m] : images_) {
        if (m.rows() != dim_ || m.cols() != dim_)
            throw InputError("image of '" + name + "' is not " + std::to_string(dim_) + "x" + std::to_string(dim_));
        try {
            inverses_.emplace(name, inverse(m));
        } catch (const DomainError&) {
            throw InputError("image of '" + name + "' is not invertible");
        }
    }
}

const QMatrix& Representation::image(const std::string& name) const {
    auto it = images_.find(name);
    if (it == images_.end()) throw InputError("representation has no image for '" + name + "'");
    return it->second;
}

QMatrix Representation::evaluate(const NamedWord& w) const {
    QMatrix r = QMatrix::identity(dim_);
    for (const auto& [name, sign] : w) {
        if (sign != 1 && sign != -1) throw InputError("letter exponent must be +1 or -1");
        image(name);
        r = r * (sign > 0 ? images_.at(name) : inverses_.at(name));
    }
    return r;
}

QMatrix Representation::evaluate(const FreeWord& w) const {
    NamedWord named;
    for (const auto& l : w.letters()) named.emplace_back("b" + std::to_string(l.gen), l.sign);
    return evaluate(named);
}

QMatrix Representation::evaluate(const GroupRingElement& x) const {
    QMatrix r(dim_, dim_);
    for (const auto& [w, c] : x.terms()) r += evaluate(w).scaled(GaussianRational(static_cast<long>(c)));
    return r;
}

QMatrix h_der_matrix(const std::vector<FreeWord>& words, const Representation& rho, const NamedWord& h) {
    std::size_t mu = words.size();
    std::size_t d = rho.dim();
    for (const auto& w : words)
        if (w.max_generator() > static_cast<int>(mu))
            throw InputError("word " + w.to_string() + " uses a generator beyond mu = " + std::to_string(mu));
    QMatrix rh = rho.evaluate(h);
    QMatrix out(mu * d, mu * d);
    for (std::size_t i = 0; i < mu; ++i)
        for (std::size_t j = 0; j < mu; ++j) {
            auto dw = fox_derivative(words[i], static_cast<int>(j + 1));
            if (dw.is_zero()) continue;
            out.set_block(i * d, j * d, rh * rho.evaluate(dw));
        }
    return out;
}

QMatrix delta_matrix(const Representation& rho, int mu) {
    if (mu < 0) throw InputError("mu must be non-negative");
    std::size_t d = rho.dim();
    QMatrix out(static_cast<std::size_t>(mu) * d, d);
    for (int i = 0; i < mu; ++i)
        out.set_block(static_cast<std::size_t>(i) * d, 0, rho.image("b" + std::to_string(i + 1)) - QMatrix::identity(d));
    return out;
}

CohomologyDims cohomology_dims(const Representation& rho, int mu) {
    QMatrix delta = delta_matrix(rho, mu);
    std::size_t rk = rank(delta);
    CohomologyDims c;
    c.a = rho.dim();
    c.der = static_cast<std::size_t>(mu) * rho.dim();
    c.h0 = c.a - rk;
    c.h1 = c.der - rk;
    return c;
}

bool ladder_commutes(const QMatrix& hder, const QMatrix& delta, const QMatrix& rho_h) {
    return hder * delta == delta * rho_h;
}

ZetaFunction zeta_gD_component(const QMatrix& rho_h, const QMatrix& hder) {
    if (!rho_h.is_square() || !hder.is_square()) throw InputError("zeta component needs square matrices");
    return ZetaFunction(char_factor(rho_h), char_factor(hder));
}

std::vector<std::size_t> failing_relators(const Representation& rho, const std::vector<NamedWord>& relators) {
    std::vector<std::size_t> bad;
    QMatrix id = QMatrix::identity(rho.dim());
    for (std::size_t k = 0; k < relators.size(); ++k)
        if (!(rho.evaluate(relators[k]) == id)) bad.push_back(k);
    return bad;
}

} // namespace mixjoin
