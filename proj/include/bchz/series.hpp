#ifndef BCHZ_SERIES_HPP
#define BCHZ_SERIES_HPP

#include "bchz/assoc.hpp"
#include "bchz/error.hpp"
#include "bchz/freelie.hpp"
#include "bchz/lie_expr.hpp"
#include "bchz/tables.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bchz {

inline constexpr unsigned oracle_degree_cap = max_degree_cap;

enum class SeriesSource { classical, paper_sec6, paper_sec7, paper_sec8 };

inline std::string_view to_string(SeriesSource s)
{
	switch (s)
	{
	case SeriesSource::classical: return "classical";
	case SeriesSource::paper_sec6: return "paper-sec6";
	case SeriesSource::paper_sec7: return "paper-sec7";
	case SeriesSource::paper_sec8: return "paper-sec8";
	}
	return "?";
}

/// BCH exponent split by degree: components[n-1] is homogeneous of degree n.
struct GradedLieSeries
{
	SeriesSource source;
	char form = 0; // 'a'/'b' for tables that display two forms
	std::vector<LieElement> components;

	unsigned max_degree() const { return unsigned(components.size()); }

	LieElement const &degree(unsigned n) const
	{
		if (n < 1 || n > components.size())
			fail(ErrorCode::DegreeOutOfRange,
			     "degree " + std::to_string(n) + " not in series");
		return components[n - 1];
	}

	LieElement total() const
	{
		LieElement r = components.front().zero();
		for (auto const &c : components)
			r += c;
		return r;
	}
};

/// Zassenhaus exponents: factors[n-2] is C[n], homogeneous of degree n.
struct ZassenhausFactors
{
	SeriesSource source;
	char form = 0;
	std::vector<LieElement> factors;

	unsigned max_degree() const { return unsigned(factors.size()) + 1; }

	LieElement const &C(unsigned n) const
	{
		if (n < 2 || n > max_degree())
			fail(ErrorCode::DegreeOutOfRange,
			     "factor C[" + std::to_string(n) + "] not present");
		return factors[n - 2];
	}
};

namespace detail {

inline AlphabetPtr const &xy_alphabet()
{
	static AlphabetPtr const a = Alphabet::standard(2);
	return a;
}

inline AssocPoly<Rational> gen_poly(AlphabetPtr const &a, unsigned trunc,
                                    unsigned g)
{
	return AssocPoly<Rational>::generator(a, trunc, Rational(1), g);
}

inline void check_oracle_degree(unsigned n, unsigned lo)
{
	if (n < lo || n > oracle_degree_cap)
		fail(ErrorCode::DegreeOutOfRange,
		     "degree " + std::to_string(n) + " outside " + std::to_string(lo) +
		         ".." + std::to_string(oracle_degree_cap));
}

inline GradedLieSeries split_by_degree(LieElement const &z, unsigned n,
                                       SeriesSource src, char form = 0)
{
	GradedLieSeries s {src, form, {}};
	for (unsigned d = 1; d <= n; ++d)
		s.components.push_back(z.homogeneous(d));
	return s;
}

} // namespace detail

// ---------------------------------------------------------------------------
// classical oracles

/// log(exp X . exp Y) through degree N, projected to the Lyndon basis.
inline GradedLieSeries bch_classical(unsigned n)
{
	detail::check_oracle_degree(n, 1);
	auto const &a = detail::xy_alphabet();
	auto x = detail::gen_poly(a, n, 0);
	auto y = detail::gen_poly(a, n, 1);
	LieElement z = dynkin_project(poly_log(poly_exp(x) * poly_exp(y)));
	return detail::split_by_degree(z, n, SeriesSource::classical);
}

/// exp(X+Y) = exp X . exp Y . exp C2 ... exp CN, each C[n] peeled off as the
/// lowest-degree part of log(exp(-C[n-1])...exp(-C2) exp(-Y) exp(-X) exp(X+Y)).
inline ZassenhausFactors zassenhaus_classical(unsigned n)
{
	detail::check_oracle_degree(n, 2);
	auto const &a = detail::xy_alphabet();
	auto x = detail::gen_poly(a, n, 0);
	auto y = detail::gen_poly(a, n, 1);
	AssocPoly<Rational> rest = poly_exp(-y) * poly_exp(-x) * poly_exp(x + y);
	ZassenhausFactors out {SeriesSource::classical, 0, {}};
	for (unsigned d = 2; d <= n; ++d)
	{
		LieElement c = dynkin_project(poly_log(rest).homogeneous(d));
		rest = poly_exp(-lie_embed(c)) * rest;
		out.factors.push_back(std::move(c));
	}
	return out;
}

/// poly_exp(lie_embed(Z)) == exp X . exp Y at truncation N.
inline bool bch_reconstructs(GradedLieSeries const &s)
{
	unsigned n = s.max_degree();
	auto const &a = s.components.front().alphabet();
	auto x = detail::gen_poly(a, n, 0);
	auto y = detail::gen_poly(a, n, 1);
	return poly_exp(lie_embed(s.total().with_max_degree(n))) ==
	       poly_exp(x) * poly_exp(y);
}

/// exp X . exp Y . prod exp C[n] == exp(X+Y) at truncation N.
inline bool zassenhaus_reconstructs(ZassenhausFactors const &z)
{
	unsigned n = z.max_degree();
	auto const &a = z.factors.front().alphabet();
	auto x = detail::gen_poly(a, n, 0);
	auto y = detail::gen_poly(a, n, 1);
	AssocPoly<Rational> prod = poly_exp(x) * poly_exp(y);
	for (auto const &c : z.factors)
		prod = prod * poly_exp(lie_embed(c.with_max_degree(n)));
	return prod == poly_exp(x + y);
}

// ---------------------------------------------------------------------------
// tabulated series

enum class BchVariant { sec7, sec8 };

namespace detail {

/// Reads one raw term into the t-graded Lie series (coefficient of t^m).
inline LieElement raw_term_to_lie(RawTerm const &t, AlphabetPtr const &a,
                                  unsigned max_degree)
{
	LieElement l = parse_lie(t.expr, a, max_degree);
	if (!l.is_homogeneous(t.weight.m))
		fail(ErrorCode::NotTabulated, "table term '" + std::string(t.expr) +
		                                  "' is not homogeneous of its weight");
	return l.scaled(t.weight.t_coefficient());
}

} // namespace detail

inline GradedLieSeries bch_from_table(BchTable const &t)
{
	auto const &a = detail::xy_alphabet();
	LieElement z(a, t.order);
	for (auto const &term : t.exponent)
		z += detail::raw_term_to_lie(term, a, t.order);
	return detail::split_by_degree(
	    z, t.order,
	    t.section == "sec8" ? SeriesSource::paper_sec8 : SeriesSource::paper_sec7,
	    t.form);
}

inline ZassenhausFactors zassenhaus_from_table(ZassenhausTable const &t)
{
	auto const &a = detail::xy_alphabet();
	ZassenhausFactors z {SeriesSource::paper_sec6, t.form, {}};
	for (unsigned n = 2; n <= t.order; ++n)
		z.factors.push_back(LieElement(a, t.order));
	for (std::size_t f = 2; f < t.factors.size(); ++f)
		for (auto const &term : t.factors[f])
		{
			if (term.weight.m < 2 || term.weight.m > t.order)
				fail(ErrorCode::NotTabulated, "factor weight out of range");
			z.factors[term.weight.m - 2] +=
			    detail::raw_term_to_lie(term, a, t.order);
		}
	return z;
}

/// The tabulated BCH exponent through `order` (1..4). The sec7 tables carry
/// two forms for orders 2..4; `form` picks one ('a' = elementary weights).
inline GradedLieSeries bch_paper(unsigned order, BchVariant variant, char form = 'a')
{
	if (order < 1 || order > 4)
		fail(ErrorCode::NotTabulated,
		     "order " + std::to_string(order) + " is not tabulated (1..4)");
	if (form != 'a' && form != 'b')
		fail(ErrorCode::NotTabulated, "form must be a or b");
	std::string id = variant == BchVariant::sec7 ? "thm-7." : "thm-8.";
	id += std::to_string(order);
	if (variant == BchVariant::sec7 && order > 1)
		id += form;
	else if (form == 'b')
		fail(ErrorCode::NotTabulated, "only one form is displayed for " + id);
	return bch_from_table(*tables::find_bch(id));
}

/// The tabulated Zassenhaus factors C[2..order], order 2..4, form a or b.
inline ZassenhausFactors zassenhaus_paper(unsigned order, char form = 'a')
{
	if (order < 2 || order > 4)
		fail(ErrorCode::NotTabulated,
		     "order " + std::to_string(order) + " is not tabulated (2..4)");
	if (form != 'a' && form != 'b')
		fail(ErrorCode::NotTabulated, "form must be a or b");
	std::string id = "thm-6." + std::to_string(order) + form;
	return zassenhaus_from_table(*tables::find_zassenhaus(id));
}

// ---------------------------------------------------------------------------
// operator series

enum class Side { left, right };

/// (-1)^p/(p+1)! (left) or 1/(p+1)! (right) for p = 0..n.
inline std::vector<Rational> log_derivative_coefficients(Side side, unsigned n)
{
	std::vector<Rational> c;
	for (unsigned p = 0; p <= n; ++p)
	{
		Rational v = Rational(1) / factorial(p + 1);
		c.push_back(side == Side::left && p % 2 ? -v : v);
	}
	return c;
}

inline LieElement log_derivative(Side side, LieElement const &x,
                                 LieElement const &v, unsigned n)
{
	auto c = log_derivative_coefficients(side, n);
	return apply_ad_series(c, x, v);
}

/// e^{ad X}(V) = sum_{p=0}^{n} (ad X)^p (V) / p!.
inline LieElement ad_exp(LieElement const &x, LieElement const &v, unsigned n)
{
	std::vector<Rational> c;
	for (unsigned p = 0; p <= n; ++p)
		c.push_back(Rational(1) / factorial(p));
	return apply_ad_series(c, x, v);
}

/// exp X1 ... exp Xk through degree 2: sum X_i + 1/2 sum_{i<j} [X_i,X_j].
inline GradedLieSeries bch_multi_order2(unsigned k)
{
	if (k < 2 || k > Word::max_letters)
		fail(ErrorCode::IndexOutOfRange, "generator count outside 2..16");
	std::vector<std::string> names;
	for (unsigned i = 1; i <= k; ++i)
		names.push_back("X" + std::to_string(i));
	auto a = Alphabet::make(names);
	LieElement lin(a, 2), quad(a, 2);
	for (unsigned i = 0; i < k; ++i)
	{
		auto xi = LieElement::generator(a, 2, i);
		lin += xi;
		for (unsigned j = i + 1; j < k; ++j)
			quad += lie_bracket(xi, LieElement::generator(a, 2, j));
	}
	return {SeriesSource::classical, 0, {lin, quad.scaled(Rational(1, 2))}};
}

/// poly_exp(lie_embed(Z)) == prod_i exp X_i at truncation Z.max_degree().
inline bool multi_reconstructs(GradedLieSeries const &s)
{
	unsigned n = s.max_degree();
	auto const &a = s.components.front().alphabet();
	AssocPoly<Rational> prod = AssocPoly<Rational>::one(a, n, Rational(1));
	for (unsigned g = 0; g < a->size(); ++g)
		prod = prod * poly_exp(detail::gen_poly(a, n, g));
	return poly_exp(lie_embed(s.total().with_max_degree(n))) == prod;
}

// ---------------------------------------------------------------------------
// comparison

namespace detail {

inline LieElement aligned_difference(LieElement const &a, LieElement const &b,
                                     unsigned n)
{
	if (!same_alphabet(a.alphabet(), b.alphabet()))
		fail(ErrorCode::AlphabetMismatch, "series over different generators");
	return a.with_max_degree(n) - b.with_max_degree(n);
}

} // namespace detail

/// Degree-n component of a minus that of b; zero means agreement.
inline LieElement series_compare(GradedLieSeries const &a,
                                 GradedLieSeries const &b, unsigned n)
{
	return detail::aligned_difference(a.degree(n), b.degree(n), n);
}

/// C[n] of a minus C[n] of b.
inline LieElement series_compare(ZassenhausFactors const &a,
                                 ZassenhausFactors const &b, unsigned n)
{
	return detail::aligned_difference(a.C(n), b.C(n), n);
}

using AnySeries = std::variant<GradedLieSeries, ZassenhausFactors>;

inline LieElement series_compare(AnySeries const &a, AnySeries const &b,
                                 unsigned n)
{
	if (a.index() != b.index())
		fail(ErrorCode::KindMismatch, "cannot compare BCH with Zassenhaus");
	if (auto const *g = std::get_if<GradedLieSeries>(&a))
		return series_compare(*g, std::get<GradedLieSeries>(b), n);
	return series_compare(std::get<ZassenhausFactors>(a),
	                      std::get<ZassenhausFactors>(b), n);
}

} // namespace bchz

#endif
