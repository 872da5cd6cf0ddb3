#include "pgca/scalar.hpp"

#include "pgca/error.hpp"

#include <ostream>

namespace pgca {

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const
{
    if (is_zero())
        throw Error(ErrorCode::DivisionByZero, "division by zero in Q(i)");
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational &GaussianRational::operator+=(const GaussianRational &o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational &GaussianRational::operator-=(const GaussianRational &o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &o)
{
    if (o.is_real()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational &GaussianRational::operator/=(const GaussianRational &o)
{
    if (o.is_real()) {
        if (sgn(o.re_) == 0)
            throw Error(ErrorCode::DivisionByZero, "division by zero in Q(i)");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string GaussianRational::to_string() const
{
    if (is_real())
        return re_.get_str();
    std::string out = "(" + re_.get_str();
    if (sgn(im_) < 0)
        out += "-" + Rational(-im_).get_str();
    else
        out += "+" + im_.get_str();
    out += "i)";
    return out;
}

std::ostream &operator<<(std::ostream &os, const GaussianRational &z) { return os << z.to_string(); }

GaussianRational scalar_arith(const GaussianRational &a, const GaussianRational &b, ScalarOp op)
{
    switch (op) {
    case ScalarOp::Add:
        return a + b;
    case ScalarOp::Sub:
        return a - b;
    case ScalarOp::Mul:
        return a * b;
    case ScalarOp::Div:
        return a / b;
    }
    return {};
}

} // namespace pgca
