#include "pgca/error.hpp"
#include "pgca/fuzz.hpp"
#include "pgca/scalar.hpp"

#include <gtest/gtest.h>

using namespace pgca;

namespace {

const GaussianRational i = GaussianRational::imaginary_unit();

GaussianRational q(long num, long den, long inum = 0, long iden = 1)
{
    return {Rational(num, den), Rational(inum, iden)};
}

} // namespace

TEST(Scalar, Examples)
{
    EXPECT_EQ((GaussianRational(1) + i) * (GaussianRational(1) - i), GaussianRational(2));
    EXPECT_EQ(i * i, GaussianRational(-1));
    EXPECT_EQ(q(3, 4, -1, 2) + q(1, 4, 1, 2), GaussianRational(1));
    EXPECT_EQ(scalar_arith(q(1, 1, 1, 1), q(1, 1, -1, 1), ScalarOp::Mul), GaussianRational(2));
    EXPECT_EQ(scalar_arith(GaussianRational(1), i, ScalarOp::Div), -i);
}

TEST(Scalar, DivisionByZero)
{
    try {
        scalar_arith(GaussianRational(1), GaussianRational(0), ScalarOp::Div);
        FAIL() << "expected DivisionByZero";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
    }
    EXPECT_THROW(GaussianRational().inverse(), Error);
}

TEST(Scalar, CanonicalForm)
{
    GaussianRational z(Rational(6, 4), Rational(-10, -4));
    EXPECT_EQ(z.re().get_num(), 3);
    EXPECT_EQ(z.re().get_den(), 2);
    EXPECT_EQ(z.im().get_num(), 5);
    EXPECT_EQ(z.im().get_den(), 2);
    EXPECT_EQ(z, q(3, 2, 5, 2));
    EXPECT_EQ(q(0, 1, 1, 1).to_string(), "(0+1i)");
    EXPECT_EQ(q(-3, 4).to_string(), "-3/4");
    EXPECT_EQ(q(1, 2, -2, 3).to_string(), "(1/2-2/3i)");
}

TEST(Scalar, FieldAxioms)
{
    Sampler s(11);
    for (int k = 0; k < 500; ++k) {
        GaussianRational a = s.scalar(true), b = s.scalar(true), c = s.scalar(true);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), GaussianRational(1));
            EXPECT_EQ((b / a) * a, b);
        }
        EXPECT_EQ(a - a, GaussianRational());
        EXPECT_EQ(a * a.conj(), GaussianRational(a.norm()));
    }
}
