#include "bchz/assoc.hpp"
#include "bchz/weil.hpp"

#include "support/errors.hpp"
#include "support/print.hpp"

#include <gtest/gtest.h>

using namespace bchz;
using test::code_of;

namespace {

using Poly = AssocPoly<Rational>;

AlphabetPtr xy() { return Alphabet::standard(2); }
Poly gen(unsigned trunc, unsigned g) { return Poly::generator(xy(), trunc, Rational(1), g); }

} // namespace

TEST(Word, Text)
{
	auto a = xy();
	EXPECT_EQ(Word::from({0, 0, 1}).str(*a), "X·X·Y");
	EXPECT_EQ((Word::letter(1) * Word::letter(0)).str(*a), "Y·X");
	EXPECT_EQ(Word::from({0, 1, 1}).reversed(), Word::from({1, 1, 0}));
}

TEST(Word, Order)
{
	EXPECT_LT(Word::lex_compare(Word::from({0}), Word::from({0, 1})), 0);
	EXPECT_GT(Word::lex_compare(Word::from({1}), Word::from({0, 1})), 0);
	EXPECT_LT(Word::from({1}), Word::from({0, 0}));
}

TEST(Assoc, MultiplicationTruncates)
{
	auto X = gen(2, 0), Y = gen(2, 1);
	EXPECT_EQ((X * Y).str(), "X·Y");
	EXPECT_TRUE((X * Y * X).is_zero());
	EXPECT_EQ(poly_mul(X + Y, X - Y).str(), "X·X - X·Y + Y·X - Y·Y");
}

TEST(Assoc, ExpOfGenerator)
{
	auto e = poly_exp(gen(3, 0));
	EXPECT_EQ(e.str(), "1 + X + 1/2*X·X + 1/6*X·X·X");
}

TEST(Assoc, LogOfExp)
{
	auto p = gen(4, 0) + (gen(4, 0) * gen(4, 1)).scaled(Rational(3));
	EXPECT_EQ(poly_log(poly_exp(p)), p);
	auto q = p.one() + gen(4, 1);
	EXPECT_EQ(poly_exp(poly_log(q)), q);
}

TEST(Assoc, ExpXExpYThroughTwo)
{
	auto z = poly_log(poly_exp(gen(2, 0)) * poly_exp(gen(2, 1)));
	EXPECT_EQ(z.str(), "X + Y + 1/2*X·Y - 1/2*Y·X");
}

TEST(Assoc, Inverse)
{
	auto p = Poly::constant(xy(), 4, Rational(2)) + gen(4, 0) - gen(4, 1) * gen(4, 0);
	auto inv = poly_inv(p);
	EXPECT_EQ(p * inv, p.one());
	EXPECT_EQ(inv * p, p.one());
	EXPECT_EQ(code_of([&] { poly_inv(gen(4, 0)); }), ErrorCode::NotInvertible);
}

TEST(Assoc, DomainErrors)
{
	auto one = Poly::one(xy(), 3, Rational(1));
	EXPECT_EQ(code_of([&] { poly_exp(one); }), ErrorCode::NotNilpotent);
	EXPECT_EQ(code_of([&] { poly_log(gen(3, 0)); }), ErrorCode::NotUnipotent);
	EXPECT_EQ(code_of([&] { (void)(gen(3, 0) * gen(4, 0)); }), ErrorCode::AlgebraMismatch);
	auto other = Poly::generator(Alphabet::standard(3), 3, Rational(1), 0);
	EXPECT_EQ(code_of([&] { (void)(gen(3, 0) + other); }), ErrorCode::AlgebraMismatch);
}

TEST(Assoc, WeilCoefficients)
{
	auto X = scalar_extend(gen(3, 0), 2);
	auto d1 = WeilElement::generator(2, 1);
	auto t = X.one() + d1 * X;
	EXPECT_EQ(poly_exp(d1 * X), t);
	EXPECT_EQ(t * t, X.one() + (d1 * Rational(2)) * X);
	EXPECT_EQ(poly_inv(t), X.one() - d1 * X);
	EXPECT_EQ(t.str(), "1 + (d1)*X");
}

TEST(Assoc, WeilUnitInverse)
{
	auto d1 = WeilElement::generator(1, 1);
	auto X = scalar_extend(gen(3, 0), 1);
	auto p = AssocPoly<WeilElement>::constant(xy(), 3, WeilElement::one(1) + d1) + X;
	EXPECT_EQ(p * poly_inv(p), p.one());
	auto q = AssocPoly<WeilElement>::constant(xy(), 3, d1) + X;
	EXPECT_EQ(code_of([&] { poly_inv(q); }), ErrorCode::NotInvertible);
}

TEST(Assoc, Homogeneous)
{
	auto p = poly_exp(gen(4, 0) + gen(4, 1));
	EXPECT_EQ(p.homogeneous(1), gen(4, 0) + gen(4, 1));
	EXPECT_EQ(p.homogeneous(0), p.one());
}
