#ifndef BCHZ_FREELIE_HPP
#define BCHZ_FREELIE_HPP

#include "bchz/assoc.hpp"
#include "bchz/error.hpp"
#include "bchz/rational.hpp"
#include "bchz/word.hpp"

#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bchz {

inline constexpr unsigned default_max_degree = 6;
inline constexpr unsigned max_degree_cap = 10;

// ---------------------------------------------------------------------------
// Lyndon words

inline bool is_lyndon(Word const &w)
{
	if (w.empty())
		return false;
	// strictly smaller than every proper rotation
	for (unsigned i = 1; i < w.size(); ++i)
	{
		Word rot = w.sub(i, w.size() - i) * w.sub(0, i);
		if (Word::lex_compare(w, rot) >= 0)
			return false;
	}
	return true;
}

/// Standard factorization w = uv where v is the longest proper Lyndon suffix.
inline std::pair<Word, Word> standard_factorization(Word const &w)
{
	for (unsigned i = 1; i < w.size(); ++i)
	{
		Word v = w.sub(i, w.size() - i);
		if (is_lyndon(v))
			return {w.sub(0, i), v};
	}
	fail(ErrorCode::IndexOutOfRange, "letters have no standard factorization");
}

/// Lyndon words of exact length n over k letters, in lexicographic order
/// (Duval's algorithm).
inline std::vector<Word> lyndon_words(unsigned k, unsigned n)
{
	std::vector<Word> out;
	if (k == 0 || n == 0)
		return out;
	std::vector<int> w {-1};
	while (!w.empty())
	{
		++w.back();
		if (w.size() == n)
		{
			std::vector<unsigned> letters(w.begin(), w.end());
			out.push_back(Word::from(letters));
		}
		std::size_t m = w.size();
		while (w.size() < n)
			w.push_back(w[w.size() - m]);
		while (!w.empty() && w.back() == int(k) - 1)
			w.pop_back();
	}
	return out;
}

// ---------------------------------------------------------------------------
// Hall (Lyndon) monomials

/// A basis monomial of the free Lie algebra, identified by its Lyndon word.
/// The bracketing is the standard factorization, applied recursively.
struct HallMonomial
{
	Word word;

	unsigned degree() const { return word.size(); }
	bool is_generator() const { return word.size() == 1; }
	unsigned generator() const { return word[0]; }
	HallMonomial left() const { return {standard_factorization(word).first}; }
	HallMonomial right() const { return {standard_factorization(word).second}; }

	/// MONO := NAME | "[" MONO "," MONO "]"
	std::string str(Alphabet const &alpha) const
	{
		if (is_generator())
			return alpha.names.at(generator());
		auto [u, v] = standard_factorization(word);
		return "[" + HallMonomial {u}.str(alpha) + "," +
		       HallMonomial {v}.str(alpha) + "]";
	}

	friend bool operator==(HallMonomial const &, HallMonomial const &) = default;
	friend bool operator<(HallMonomial const &a, HallMonomial const &b)
	{
		return a.word < b.word;
	}
};

inline std::vector<HallMonomial> hall_basis(unsigned k, unsigned n)
{
	std::vector<HallMonomial> out;
	for (Word const &w : lyndon_words(k, n))
		out.push_back({w});
	return out;
}

namespace detail {

using LieTerms = std::map<Word, Rational>;

inline void axpy(LieTerms &acc, Rational const &c, LieTerms const &x)
{
	for (auto const &[w, v] : x)
	{
		auto [it, inserted] = acc.try_emplace(w, c * v);
		if (!inserted)
		{
			it->second += c * v;
			if (it->second.is_zero())
				acc.erase(it);
		}
	}
}

struct PairHash
{
	std::size_t operator()(std::pair<std::uint64_t, std::uint64_t> const &p) const
	{
		return std::hash<std::uint64_t> {}(p.first * 0x9E3779B97F4A7C15ull ^
		                                   p.second);
	}
};

inline std::uint64_t word_key(Word const &w)
{
	return (w.bits() << 4) | w.size();
}

/// [P_u, P_v] for Lyndon words u, v rewritten in the Lyndon basis.
/// Results are homogeneous of degree |u|+|v| and cached per thread.
inline LieTerms const &bracket_basis(Word const &u, Word const &v)
{
	static thread_local std::unordered_map<std::pair<std::uint64_t, std::uint64_t>,
	                                       LieTerms, PairHash>
	    cache;
	auto key = std::make_pair(word_key(u), word_key(v));
	if (auto it = cache.find(key); it != cache.end())
		return it->second;

	LieTerms r;
	int c = Word::lex_compare(u, v);
	if (c > 0)
		axpy(r, Rational(-1), bracket_basis(v, u));
	else if (c < 0)
	{
		bool standard = u.size() == 1 ||
		                Word::lex_compare(standard_factorization(u).second, v) >= 0;
		if (standard)
			r.emplace(u * v, Rational(1));
		else
		{
			// [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]
			auto [u1, u2] = standard_factorization(u);
			LieTerms const left = bracket_basis(u2, v);
			for (auto const &[w, a] : left)
				axpy(r, a, bracket_basis(u1, w));
			LieTerms const right = bracket_basis(u1, v);
			for (auto const &[w, a] : right)
				axpy(r, -a, bracket_basis(u2, w));
		}
	}
	return cache.emplace(key, std::move(r)).first->second;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Lie elements

/// Finite linear combination of Hall monomials, truncated at max_degree.
class LieElement
{
  public:
	using Terms = std::map<Word, Rational>;

	LieElement(AlphabetPtr alphabet, unsigned max_degree = default_max_degree)
	    : alpha_(std::move(alphabet)), max_degree_(max_degree)
	{
		if (!alpha_ || alpha_->size() == 0 || alpha_->size() > Word::max_letters)
			fail(ErrorCode::AlphabetMismatch, "alphabet must have 1..16 letters");
		if (max_degree_ < 1 || max_degree_ > max_degree_cap)
			fail(ErrorCode::DegreeOutOfRange,
			     "max_degree " + std::to_string(max_degree_) + " outside 1..10");
	}

	static LieElement generator(AlphabetPtr alphabet, unsigned max_degree,
	                            unsigned g)
	{
		LieElement r(std::move(alphabet), max_degree);
		if (g >= r.alpha_->size())
			fail(ErrorCode::IndexOutOfRange, "generator index");
		r.terms_.emplace(Word::letter(g), Rational(1));
		return r;
	}

	static LieElement monomial(AlphabetPtr alphabet, unsigned max_degree,
	                           HallMonomial const &h, Rational c = Rational(1))
	{
		if (!is_lyndon(h.word))
			fail(ErrorCode::IndexOutOfRange, "not a Lyndon word");
		LieElement r(std::move(alphabet), max_degree);
		r.add_term(h.word, c);
		return r;
	}

	LieElement zero() const { return LieElement(alpha_, max_degree_); }

	AlphabetPtr const &alphabet() const { return alpha_; }
	unsigned max_degree() const { return max_degree_; }
	Terms const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	Rational coeff(HallMonomial const &h) const
	{
		auto it = terms_.find(h.word);
		return it == terms_.end() ? Rational(0) : it->second;
	}

	/// Adds c times the basis element for Lyndon word w.
	void add_term(Word const &w, Rational const &c)
	{
		if (w.size() > max_degree_ || c.is_zero())
			return;
		auto [it, inserted] = terms_.try_emplace(w, c);
		if (!inserted)
		{
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}

	LieElement homogeneous(unsigned n) const
	{
		LieElement r = zero();
		for (auto const &[w, c] : terms_)
			if (w.size() == n)
				r.terms_.emplace(w, c);
		return r;
	}

	bool is_homogeneous(unsigned n) const
	{
		for (auto const &[w, c] : terms_)
			if (w.size() != n)
				return false;
		return true;
	}

	/// Same generators, same bound on degree.
	LieElement with_max_degree(unsigned d) const
	{
		LieElement r(alpha_, d);
		for (auto const &[w, c] : terms_)
			r.add_term(w, c);
		return r;
	}

	bool same_space(LieElement const &o) const
	{
		return max_degree_ == o.max_degree_ && same_alphabet(alpha_, o.alpha_);
	}

	void require_same(LieElement const &o) const
	{
		if (!same_space(o))
			fail(ErrorCode::AlphabetMismatch,
			     "Lie elements over different alphabets or truncations");
	}

	LieElement operator-() const { return scaled(Rational(-1)); }

	LieElement scaled(Rational const &q) const
	{
		LieElement r = zero();
		if (q.is_zero())
			return r;
		for (auto const &[w, c] : terms_)
			r.terms_.emplace(w, c * q);
		return r;
	}

	LieElement &operator+=(LieElement const &o)
	{
		require_same(o);
		for (auto const &[w, c] : o.terms_)
			add_term(w, c);
		return *this;
	}
	LieElement &operator-=(LieElement const &o)
	{
		require_same(o);
		for (auto const &[w, c] : o.terms_)
			add_term(w, -c);
		return *this;
	}
	friend LieElement operator+(LieElement a, LieElement const &b) { return a += b; }
	friend LieElement operator-(LieElement a, LieElement const &b) { return a -= b; }
	friend LieElement operator*(Rational const &q, LieElement const &a)
	{
		return a.scaled(q);
	}

	friend bool operator==(LieElement const &a, LieElement const &b)
	{
		return a.same_space(b) && a.terms_ == b.terms_;
	}

	/// "c*MONO" terms joined by " + " / " - " in basis order; "0" if empty.
	std::string str() const
	{
		if (terms_.empty())
			return "0";
		std::string s;
		bool first = true;
		for (auto const &[w, c] : terms_)
		{
			Rational a = c;
			if (first)
			{
				if (a.sign() < 0)
				{
					s += "-";
					a = -a;
				}
			}
			else
			{
				s += a.sign() < 0 ? " - " : " + ";
				if (a.sign() < 0)
					a = -a;
			}
			first = false;
			if (a != Rational(1))
				s += a.str() + "*";
			s += HallMonomial {w}.str(*alpha_);
		}
		return s;
	}

  private:
	AlphabetPtr alpha_;
	unsigned max_degree_;
	Terms terms_;
};

inline LieElement lie_bracket(LieElement const &a, LieElement const &b)
{
	a.require_same(b);
	LieElement r = a.zero();
	for (auto const &[u, cu] : a.terms())
		for (auto const &[v, cv] : b.terms())
		{
			if (u.size() + v.size() > a.max_degree())
				continue;
			Rational c = cu * cv;
			for (auto const &[w, x] : detail::bracket_basis(u, v))
				r.add_term(w, c * x);
		}
	return r;
}

/// sum_p coeffs[p] (ad X)^p (V); (ad X)^0 is the identity.
inline LieElement apply_ad_series(std::span<Rational const> coeffs,
                                  LieElement const &x, LieElement const &v)
{
	x.require_same(v);
	LieElement result = x.zero();
	LieElement power = v;
	for (std::size_t p = 0; p < coeffs.size(); ++p)
	{
		if (p > 0)
			power = lie_bracket(x, power);
		if (power.is_zero())
			break;
		result += power.scaled(coeffs[p]);
	}
	return result;
}

/// Image of a Lie element in any associative algebra A, given the images of
/// the generators; brackets become commutators. A needs +, -, * and
/// scaled(Rational).
template <class A>
A evaluate_lie(LieElement const &a, std::span<A const> generators, A const &zero)
{
	if (generators.size() != a.alphabet()->size())
		fail(ErrorCode::AlphabetMismatch, "generator image count");
	std::map<Word, A> memo;
	auto image = [&](auto &&self, Word const &w) -> A const & {
		if (auto it = memo.find(w); it != memo.end())
			return it->second;
		A val = zero;
		if (w.size() == 1)
			val = generators[w[0]];
		else
		{
			auto [u, v] = standard_factorization(w);
			A const pu = self(self, u);
			A const pv = self(self, v);
			val = pu * pv - pv * pu;
		}
		return memo.emplace(w, std::move(val)).first->second;
	};
	A result = zero;
	for (auto const &[w, c] : a.terms())
		result += image(image, w).scaled(c);
	return result;
}

/// Generator -> word, bracket -> commutator, in the algebra truncated at
/// a.max_degree().
inline AssocPoly<Rational> lie_embed(LieElement const &a)
{
	auto const &alpha = a.alphabet();
	std::vector<AssocPoly<Rational>> gens;
	for (unsigned g = 0; g < alpha->size(); ++g)
		gens.push_back(AssocPoly<Rational>::generator(alpha, a.max_degree(),
		                                              Rational(1), g));
	AssocPoly<Rational> zero(alpha, a.max_degree(), Rational(1));
	return evaluate_lie<AssocPoly<Rational>>(a, gens, zero);
}

/// Dynkin-Specht-Wever projection: g1...gn -> (1/n) [g1,[g2,[...,gn]]].
/// Fixes every homogeneous Lie element under lie_embed.
inline LieElement dynkin_project(AssocPoly<Rational> const &p)
{
	if (!p.constant_term().is_zero())
		fail(ErrorCode::NotAugmentation, "constant term must vanish");
	unsigned max_degree = p.trunc() < 1 ? 1 : p.trunc();
	if (max_degree > max_degree_cap)
		fail(ErrorCode::DegreeOutOfRange, "truncation above Lie degree cap");
	LieElement result(p.alphabet(), max_degree);
	std::map<Word, LieElement> memo;
	auto nested = [&](auto &&self, Word const &w) -> LieElement const & {
		if (auto it = memo.find(w); it != memo.end())
			return it->second;
		LieElement gen = LieElement::generator(p.alphabet(), max_degree, w[0]);
		LieElement val = w.size() == 1
		                     ? gen
		                     : lie_bracket(gen, self(self, w.sub(1, w.size() - 1)));
		return memo.emplace(w, std::move(val)).first->second;
	};
	for (auto const &[w, c] : p.terms())
		result += nested(nested, w).scaled(c / Rational(long(w.size())));
	return result;
}

} // namespace bchz

#endif
