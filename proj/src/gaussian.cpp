#include "mixjoin/gaussian.hpp"

#include "mixjoin/error.hpp"

namespace mixjoin {

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DomainError("division by zero Gaussian rational");
    mpq_class n = o.norm();
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational GaussianRational::pow(std::uint64_t k) const {
    GaussianRational result(1);
    GaussianRational base = *this;
    while (k != 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k != 0) base *= base;
    }
    return result;
}

std::string rational_to_string(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0) return rational_to_string(re_);
    auto imag_part = [](const mpq_class& v) {
        if (v == 1) return std::string("i");
        if (v == -1) return std::string("-i");
        return rational_to_string(v) + "i";
    };
    if (sgn(re_) == 0) return imag_part(im_);
    std::string s = "(" + rational_to_string(re_);
    if (sgn(im_) > 0) s += "+";
    s += imag_part(im_) + ")";
    return s;
}

} // namespace mixjoin
