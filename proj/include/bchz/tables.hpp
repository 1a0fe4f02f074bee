#ifndef BCHZ_TABLES_HPP
#define BCHZ_TABLES_HPP

#include "bchz/rational.hpp"
#include "bchz/weil.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bchz {

/// How an infinitesimal prefactor is written in a table entry.
///   elementary: c * sum_{i1<...<im} d_i1...d_im   (e.g. "d1d2+d1d3+d2d3")
///   power:      c * (d1+...+dn)^m                  (e.g. "(d1+d2+d3)^3/12")
/// Reading (d1+...+dn)^m/m! as t^m/m!, an elementary term contributes c/m!
/// to the coefficient of t^m and a power term contributes c.
enum class WeightKind { elementary, power };

struct Weight
{
	WeightKind kind;
	unsigned m;
	Rational c;

	Rational t_coefficient() const
	{
		return kind == WeightKind::power ? c : c / factorial(m);
	}

	/// The prefactor as an element of Q[d1..dn]/(di^2). Elementary weights are
	/// enumerated subset by subset; power weights are multiplied out.
	WeilElement evaluate(unsigned n) const
	{
		if (kind == WeightKind::elementary)
		{
			WeilElement r(n);
			for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
				if (unsigned(std::popcount(mask)) == m)
					r += WeilElement::monomial(n, WeilElement::Mask(mask), c);
			return r;
		}
		WeilElement s = weil_generator_sum(n, n);
		WeilElement r = WeilElement::one(n);
		for (unsigned i = 0; i < m; ++i)
			r = r * s;
		return r * c;
	}

	std::string str() const
	{
		std::string base = (kind == WeightKind::power ? "p" : "e") + std::to_string(m);
		return c == Rational(1) ? base : c.str() + "*" + base;
	}
};

/// One additive piece of a displayed exponent: weight times a bracket
/// expression written as in the source (linear-combination arguments kept).
struct RawTerm
{
	Weight weight;
	std::string_view expr;
};

/// A factor exp(sum of terms).
using RawFactor = std::vector<RawTerm>;

/// exp(s X) . exp(s Y) = exp(exponent), s = d1+...+d_order.
struct BchTable
{
	std::string_view id;
	std::string_view section; // "sec7" or "sec8"
	unsigned order;
	char form;
	RawFactor exponent;
};

/// exp(s (X+Y)) = product of factors, s = d1+...+d_order.
struct ZassenhausTable
{
	std::string_view id;
	unsigned order;
	char form;
	std::vector<RawFactor> factors;
};

namespace tables {

inline Weight e(unsigned m, Rational c = Rational(1))
{
	return {WeightKind::elementary, m, std::move(c)};
}
inline Weight p(unsigned m, Rational c = Rational(1))
{
	return {WeightKind::power, m, std::move(c)};
}

inline constexpr std::string_view quartic_sec6 =
    "-[X,[X,[X,Y]]] - 3[X,[Y,[X,Y]]] - 3[Y,[Y,[X,Y]]]";
inline constexpr std::string_view quartic_sec7 =
    "1/2[X,[X,[X,Y]]] + 1/2[Y,[Y,[X,Y]]] + 2[X,[Y,[X,Y]]]";
inline constexpr std::string_view quartic_sec8 =
    "[X,[Y,[X,Y]]] + [Y,[X,[X,Y]]] + [X+Y,[X+Y,[X,Y]]]";

inline std::vector<ZassenhausTable> const &zassenhaus()
{
	static std::vector<ZassenhausTable> const t = {
	    {"thm-6.1", 1, 'a', {{{e(1), "X"}}, {{e(1), "Y"}}}},
	    {"thm-6.2a", 2, 'a',
	     {{{e(1), "X"}}, {{e(1), "Y"}}, {{e(2, -1), "[X,Y]"}}}},
	    {"thm-6.2b", 2, 'b',
	     {{{p(1), "X"}}, {{p(1), "Y"}}, {{p(2, Rational(-1, 2)), "[X,Y]"}}}},
	    {"thm-6.3a", 3, 'a',
	     {{{e(1), "X"}},
	      {{e(1), "Y"}},
	      {{e(2, -1), "[X,Y]"}},
	      {{e(3), "[X+2Y,[X,Y]]"}}}},
	    {"thm-6.3b", 3, 'b',
	     {{{p(1), "X"}},
	      {{p(1), "Y"}},
	      {{p(2, Rational(-1, 2)), "[X,Y]"}},
	      {{p(3, Rational(1, 12)), "[X+2Y,[X,Y]]"}}}},
	    {"thm-6.4a", 4, 'a',
	     {{{e(1), "X"}},
	      {{e(1), "Y"}},
	      {{e(2, -1), "[X,Y]"}},
	      {{e(3), "[X+2Y,[X,Y]]"}},
	      {{e(4), quartic_sec6}}}},
	    {"thm-6.4b", 4, 'b',
	     {{{p(1), "X"}},
	      {{p(1), "Y"}},
	      {{p(2, Rational(-1, 2)), "[X,Y]"}},
	      {{p(3, Rational(1, 12)), "[X+2Y,[X,Y]]"}},
	      {{p(4, Rational(1, 24)), quartic_sec6}}}},
	};
	return t;
}

inline std::vector<BchTable> const &bch()
{
	static std::vector<BchTable> const t = {
	    {"thm-7.1", "sec7", 1, 'a', {{e(1), "X+Y"}}},
	    {"thm-7.2a", "sec7", 2, 'a', {{e(1), "X+Y"}, {e(2), "[X,Y]"}}},
	    {"thm-7.2b", "sec7", 2, 'b',
	     {{p(1), "X+Y"}, {p(2, Rational(1, 2)), "[X,Y]"}}},
	    {"thm-7.3a", "sec7", 3, 'a',
	     {{e(1), "X+Y"},
	      {e(2), "[X,Y]"},
	      {e(3, Rational(1, 2)), "[X-Y,[X,Y]]"}}},
	    {"thm-7.3b", "sec7", 3, 'b',
	     {{p(1), "X"},
	      {p(1), "Y"},
	      {p(2, Rational(1, 2)), "[X,Y]"},
	      {p(3, Rational(1, 12)), "[X-Y,[X,Y]]"}}},
	    {"thm-7.4a", "sec7", 4, 'a',
	     {{e(1), "X"},
	      {e(1), "Y"},
	      {e(2), "[X,Y]"},
	      {e(3, Rational(1, 2)), "[X-Y,[X,Y]]"},
	      {e(4, -1), quartic_sec7}}},
	    {"thm-7.4b", "sec7", 4, 'b',
	     {{p(1), "X"},
	      {p(1), "Y"},
	      {p(2, Rational(1, 2)), "[X,Y]"},
	      {p(3, Rational(1, 12)), "[X-Y,[X,Y]]"},
	      {p(4, Rational(-1, 24)), quartic_sec7}}},
	    {"thm-8.1", "sec8", 1, 'a', {{e(1), "X+Y"}}},
	    {"thm-8.2", "sec8", 2, 'a',
	     {{p(1), "X+Y"}, {p(2, Rational(1, 2)), "[X,Y]"}}},
	    {"thm-8.3", "sec8", 3, 'a',
	     {{p(1), "X+Y"},
	      {p(2, Rational(1, 2)), "[X,Y]"},
	      {p(3, Rational(1, 12)), "[X-Y,[X,Y]]"}}},
	    {"thm-8.4", "sec8", 4, 'a',
	     {{p(1), "X+Y"},
	      {p(2, Rational(1, 2)), "[X,Y]"},
	      {p(3, Rational(1, 12)), "[X-Y,[X,Y]]"},
	      {p(4, Rational(-1, 48)), quartic_sec8}}},
	};
	return t;
}

inline BchTable const *find_bch(std::string_view id)
{
	for (auto const &t : bch())
		if (t.id == id)
			return &t;
	return nullptr;
}

inline ZassenhausTable const *find_zassenhaus(std::string_view id)
{
	for (auto const &t : zassenhaus())
		if (t.id == id)
			return &t;
	return nullptr;
}

} // namespace tables

} // namespace bchz

#endif
