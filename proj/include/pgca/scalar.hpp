#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace pgca {

using Rational = mpq_class;

/// Exact complex number a + b i with a, b rational: the field Q(i).
///
/// Both parts are kept in canonical form (coprime numerator and denominator,
/// positive denominator), so equality is plain field-wise comparison.
class GaussianRational {
  public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {} // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im = 0);

    static GaussianRational imaginary_unit() { return {0, 1}; }

    const Rational &re() const noexcept { return re_; }
    const Rational &im() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2, always rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    /// Throws Error(DivisionByZero) on zero.
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational &operator+=(const GaussianRational &o);
    GaussianRational &operator-=(const GaussianRational &o);
    GaussianRational &operator*=(const GaussianRational &o);
    GaussianRational &operator/=(const GaussianRational &o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational &b) { return a /= b; }

    friend bool operator==(const GaussianRational &a, const GaussianRational &b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Canonical text: "3/4", "-2", or "(a+bi)" / "(a-bi)" when the imaginary part is nonzero.
    std::string to_string() const;

  private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream &operator<<(std::ostream &os, const GaussianRational &z);

enum class ScalarOp { Add, Sub, Mul, Div };

/// Dispatching form of the four field operations.
GaussianRational scalar_arith(const GaussianRational &a, const GaussianRational &b, ScalarOp op);

} // namespace pgca
