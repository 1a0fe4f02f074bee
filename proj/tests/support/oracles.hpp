#ifndef BCHZ_TEST_ORACLES_HPP
#define BCHZ_TEST_ORACLES_HPP

#include "bchz/assoc.hpp"
#include "bchz/freelie.hpp"
#include "bchz/lie_expr.hpp"
#include "bchz/word.hpp"

#include <cstdint>
#include <vector>

namespace bchz::test {

inline int mobius(unsigned n)
{
	int mu = 1;
	for (unsigned p = 2; p * p <= n; ++p)
		if (n % p == 0)
		{
			n /= p;
			if (n % p == 0)
				return 0;
			mu = -mu;
		}
	return n > 1 ? -mu : mu;
}

/// Witt's formula: (1/n) sum_{d|n} mu(d) k^(n/d).
inline std::uint64_t witt_dimension(unsigned k, unsigned n)
{
	std::int64_t s = 0;
	for (unsigned d = 1; d <= n; ++d)
		if (n % d == 0)
		{
			std::int64_t p = 1;
			for (unsigned i = 0; i < n / d; ++i)
				p *= k;
			s += mobius(d) * p;
		}
	return std::uint64_t(s / n);
}

/// Every word of length n, in lexicographic order.
inline std::vector<Word> all_words(unsigned k, unsigned n)
{
	std::vector<Word> out;
	std::vector<unsigned> letters(n, 0);
	for (;;)
	{
		out.push_back(Word::from(letters));
		int i = int(n) - 1;
		while (i >= 0 && letters[i] == k - 1)
			letters[i--] = 0;
		if (i < 0)
			return out;
		++letters[i];
	}
}

/// Lyndon words by definition: strictly smaller than every proper rotation.
inline std::vector<Word> brute_lyndon(unsigned k, unsigned n)
{
	std::vector<Word> out;
	for (Word const &w : all_words(k, n))
	{
		bool ok = true;
		for (unsigned r = 1; r < n && ok; ++r)
		{
			Word rot = w.sub(r, n - r) * w.sub(0, r);
			ok = Word::lex_compare(w, rot) < 0;
		}
		if (ok)
			out.push_back(w);
	}
	return out;
}

/// ab - ba computed in the associative algebra.
inline AssocPoly<Rational> commutator(AssocPoly<Rational> const &a,
                                      AssocPoly<Rational> const &b)
{
	return a * b - b * a;
}

/// exp X . exp Y through degree 4 from the literature, right-nested.
inline LieElement literature_bch4(AlphabetPtr const &xy)
{
	return parse_lie("X + Y + 1/2[X,Y] + 1/12[X,[X,Y]] - 1/12[Y,[X,Y]]"
	                 " - 1/24[Y,[X,[X,Y]]]",
	                 xy, 4);
}

/// Zassenhaus exponents from the literature, for
/// exp(X+Y) = exp X exp Y exp C2 exp C3 exp C4 ...
inline LieElement literature_zassenhaus(AlphabetPtr const &xy, unsigned n)
{
	switch (n)
	{
	case 2: return parse_lie("-1/2[X,Y]", xy, 4);
	case 3: return parse_lie("1/3[Y,[X,Y]] + 1/6[X,[X,Y]]", xy, 4);
	default:
		return parse_lie("-1/8[[[X,Y],Y],Y] - 1/8[[[X,Y],X],Y] - 1/24[[[X,Y],X],X]",
		                 xy, 4);
	}
}

} // namespace bchz::test

#endif
