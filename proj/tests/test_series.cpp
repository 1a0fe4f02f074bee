#include "bchz/series.hpp"

#include "support/errors.hpp"
#include "support/oracles.hpp"
#include "support/print.hpp"

#include <gtest/gtest.h>

using namespace bchz;
using test::code_of;

namespace {

AlphabetPtr const &xy() { return detail::xy_alphabet(); }

LieElement lie(std::string_view text, unsigned max_degree = 4)
{
	return parse_lie(text, xy(), max_degree);
}

LieElement at(LieElement const &a, unsigned d) { return a.with_max_degree(d); }

} // namespace

TEST(BchClassical, LowDegrees)
{
	auto s = bch_classical(4);
	EXPECT_EQ(s.degree(1).str(), "X + Y");
	EXPECT_EQ(s.degree(2).str(), "1/2*[X,Y]");
	EXPECT_EQ(s.degree(3).str(), "1/12*[X,[X,Y]] + 1/12*[[X,Y],Y]");
	EXPECT_EQ(s.degree(4).str(), "1/24*[X,[[X,Y],Y]]");
}

TEST(BchClassical, MatchesLiterature)
{
	auto s = bch_classical(4);
	EXPECT_EQ(at(s.total(), 4), test::literature_bch4(xy()));
}

TEST(BchClassical, Reconstructs)
{
	for (unsigned n = 1; n <= 6; ++n)
		EXPECT_TRUE(bch_reconstructs(bch_classical(n))) << n;
}

TEST(BchClassical, Range)
{
	EXPECT_EQ(code_of([] { bch_classical(0); }), ErrorCode::DegreeOutOfRange);
	EXPECT_EQ(code_of([] { bch_classical(11); }), ErrorCode::DegreeOutOfRange);
}

TEST(ZassenhausClassical, Factors)
{
	auto z = zassenhaus_classical(4);
	EXPECT_EQ(z.C(2).str(), "-1/2*[X,Y]");
	EXPECT_EQ(z.C(3).str(), "1/6*[X,[X,Y]] - 1/3*[[X,Y],Y]");
	EXPECT_EQ(z.C(4).str(),
	          "-1/24*[X,[X,[X,Y]]] + 1/8*[X,[[X,Y],Y]] - 1/8*[[[X,Y],Y],Y]");
	for (unsigned n = 2; n <= 4; ++n)
		EXPECT_EQ(at(z.C(n), 4), test::literature_zassenhaus(xy(), n)) << n;
}

TEST(ZassenhausClassical, Reconstructs)
{
	for (unsigned n = 2; n <= 6; ++n)
		EXPECT_TRUE(zassenhaus_reconstructs(zassenhaus_classical(n))) << n;
	EXPECT_EQ(code_of([] { zassenhaus_classical(1); }), ErrorCode::DegreeOutOfRange);
}

TEST(BchTabulated, AgreesThroughThree)
{
	auto c = bch_classical(4);
	for (auto v : {BchVariant::sec7, BchVariant::sec8})
		for (unsigned n = 1; n <= 3; ++n)
			EXPECT_TRUE(series_compare(bch_paper(3, v), c, n).is_zero()) << n;
	for (unsigned n = 1; n <= 3; ++n)
		EXPECT_TRUE(series_compare(bch_paper(3, BchVariant::sec7, 'b'), c, n).is_zero());
}

TEST(BchTabulated, QuarticDivergence)
{
	auto d7 = series_compare(bch_paper(4, BchVariant::sec7), bch_classical(4), 4);
	auto d8 = series_compare(bch_paper(4, BchVariant::sec8), bch_classical(4), 4);
	auto expect = lie("-1/48[X+Y,[X+Y,[X,Y]]]");
	EXPECT_EQ(d7, expect);
	EXPECT_EQ(d8, expect);
	EXPECT_EQ(d7.str(), "-1/48*[X,[X,[X,Y]]] + 1/24*[X,[[X,Y],Y]] - 1/48*[[[X,Y],Y],Y]");
}

TEST(BchTabulated, QuarticTerm)
{
	auto q = bch_paper(4, BchVariant::sec7).degree(4);
	EXPECT_EQ(q, lie("-1/48[X,[X,[X,Y]]] - 1/12[X,[Y,[X,Y]]] - 1/48[Y,[Y,[X,Y]]]"));
	EXPECT_EQ(q, bch_paper(4, BchVariant::sec8).degree(4));
	EXPECT_EQ(q, bch_paper(4, BchVariant::sec7, 'b').degree(4));
}

TEST(BchTabulated, Range)
{
	EXPECT_EQ(code_of([] { bch_paper(5, BchVariant::sec7); }), ErrorCode::NotTabulated);
	EXPECT_EQ(code_of([] { bch_paper(0, BchVariant::sec8); }), ErrorCode::NotTabulated);
}

TEST(ZassenhausTabulated, Forms)
{
	auto c = zassenhaus_classical(4);
	for (unsigned n = 2; n <= 4; ++n)
		EXPECT_TRUE(series_compare(zassenhaus_paper(4, 'a'), c, n).is_zero()) << n;
	EXPECT_TRUE(series_compare(zassenhaus_paper(4, 'b'), c, 2).is_zero());
	EXPECT_EQ(series_compare(zassenhaus_paper(3, 'b'), c, 3), lie("-1/12[X+2Y,[X,Y]]", 3));
	EXPECT_TRUE(series_compare(zassenhaus_paper(4, 'b'), c, 4).is_zero());
	EXPECT_EQ(code_of([] { zassenhaus_paper(5, 'a'); }), ErrorCode::NotTabulated);
}

TEST(Weights, TGrading)
{
	EXPECT_EQ(tables::e(3).t_coefficient(), Rational(1, 6));
	EXPECT_EQ(tables::p(3, Rational(1, 12)).t_coefficient(), Rational(1, 12));
	EXPECT_EQ(tables::e(2).evaluate(3), weil_power_sum(3, 2));
	auto s = weil_generator_sum(3, 3);
	EXPECT_EQ(tables::p(2, Rational(1, 2)).evaluate(3), s * s * Rational(1, 2));
}

TEST(Compare, KindMismatch)
{
	AnySeries a = bch_classical(2);
	AnySeries b = zassenhaus_classical(2);
	EXPECT_EQ(code_of([&] { series_compare(a, b, 2); }), ErrorCode::KindMismatch);
	EXPECT_TRUE(series_compare(a, a, 2).is_zero());
}

TEST(LogDerivative, Coefficients)
{
	auto left = log_derivative_coefficients(Side::left, 5);
	auto right = log_derivative_coefficients(Side::right, 5);
	std::vector<Rational> l {1, Rational(-1, 2), Rational(1, 6), Rational(-1, 24),
	                         Rational(1, 120), Rational(-1, 720)};
	std::vector<Rational> r {1, Rational(1, 2), Rational(1, 6), Rational(1, 24),
	                         Rational(1, 120), Rational(1, 720)};
	EXPECT_EQ(left, l);
	EXPECT_EQ(right, r);
}

TEST(LogDerivative, LeftMatchesDerivativeOfExp)
{
	// exp(-X) d/ds exp(X + sV) at s = 0 equals delta_left(X)(V), read off as
	// the part of exp(-X) exp(X + eps V) linear in the infinitesimal eps.
	unsigned n = 5;
	auto X = lie("X + [X,Y]", n);
	auto V = lie("Y", n);
	auto eps = WeilElement::generator(1, 1);
	auto x = scalar_extend(lie_embed(X), 1);
	auto v = scalar_extend(lie_embed(V), 1);
	auto lhs = poly_exp(-x) * poly_exp(x + eps * v);
	auto rhs = lhs.one() + eps * scalar_extend(lie_embed(log_derivative(Side::left, X, V, n)), 1);
	EXPECT_EQ(lhs, rhs);
	auto lhs_r = poly_exp(x + eps * v) * poly_exp(-x);
	auto rhs_r = lhs.one() + eps * scalar_extend(lie_embed(log_derivative(Side::right, X, V, n)), 1);
	EXPECT_EQ(lhs_r, rhs_r);
}

TEST(AdExp, MatchesConjugation)
{
	unsigned n = 4;
	auto X = lie("X", n), Y = lie("Y", n);
	auto ex = poly_exp(lie_embed(X));
	EXPECT_EQ(ex * lie_embed(Y) * poly_inv(ex), lie_embed(ad_exp(X, Y, n - 1)));
}

TEST(Multi, OrderTwo)
{
	auto s = bch_multi_order2(3);
	EXPECT_EQ(s.degree(2).str(), "1/2*[X1,X2] + 1/2*[X1,X3] + 1/2*[X2,X3]");
	EXPECT_TRUE(multi_reconstructs(s));
	EXPECT_EQ(code_of([] { bch_multi_order2(1); }), ErrorCode::IndexOutOfRange);
}
