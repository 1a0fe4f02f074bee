#ifndef BCHZ_WEIL_HPP
#define BCHZ_WEIL_HPP

#include "bchz/error.hpp"
#include "bchz/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bchz {

/// Element of Q[d1..dk]/(d1^2, ..., dk^2).
///
/// Terms are keyed by the subset of generators they contain (bit i-1 set for
/// d_i) and kept sorted by mask with no zero coefficients. The empty mask is
/// the scalar part.
class WeilElement
{
  public:
	using Mask = std::uint16_t;
	static constexpr unsigned max_generators = 16;

	struct Term
	{
		Mask mask;
		Rational coeff;
	};

	WeilElement() = default;
	explicit WeilElement(unsigned k) : k_(k) { check_k(k); }
	WeilElement(unsigned k, Rational scalar) : k_(k)
	{
		check_k(k);
		if (!scalar.is_zero())
			terms_.push_back({0, std::move(scalar)});
	}

	static WeilElement zero(unsigned k) { return WeilElement(k); }
	static WeilElement one(unsigned k) { return WeilElement(k, Rational(1)); }

	/// The generator d_i, 1-based.
	static WeilElement generator(unsigned k, unsigned i)
	{
		if (i < 1 || i > k)
			fail(ErrorCode::IndexOutOfRange,
			     "generator d" + std::to_string(i) + " with k=" +
			         std::to_string(k));
		WeilElement r(k);
		r.terms_.push_back({Mask(1u << (i - 1)), Rational(1)});
		return r;
	}

	/// Monomial c * prod_{i in mask} d_i.
	static WeilElement monomial(unsigned k, Mask mask, Rational c)
	{
		WeilElement r(k);
		if (k < max_generators && (mask >> k) != 0)
			fail(ErrorCode::IndexOutOfRange, "mask exceeds generator count");
		if (!c.is_zero())
			r.terms_.push_back({mask, std::move(c)});
		return r;
	}

	unsigned generators() const { return k_; }
	std::vector<Term> const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	Rational scalar_part() const
	{
		if (!terms_.empty() && terms_.front().mask == 0)
			return terms_.front().coeff;
		return Rational(0);
	}

	Rational coeff(Mask mask) const
	{
		auto it = std::lower_bound(
		    terms_.begin(), terms_.end(), mask,
		    [](Term const &t, Mask m) { return t.mask < m; });
		if (it != terms_.end() && it->mask == mask)
			return it->coeff;
		return Rational(0);
	}

	WeilElement operator-() const
	{
		WeilElement r = *this;
		for (auto &t : r.terms_)
			t.coeff = -t.coeff;
		return r;
	}

	WeilElement &operator+=(WeilElement const &o)
	{
		require_same(o);
		merge(o, 1);
		return *this;
	}
	WeilElement &operator-=(WeilElement const &o)
	{
		require_same(o);
		merge(o, -1);
		return *this;
	}
	WeilElement &operator*=(Rational const &c)
	{
		if (c.is_zero())
			terms_.clear();
		else
			for (auto &t : terms_)
				t.coeff *= c;
		return *this;
	}

	friend WeilElement operator+(WeilElement a, WeilElement const &b)
	{
		return a += b;
	}
	friend WeilElement operator-(WeilElement a, WeilElement const &b)
	{
		return a -= b;
	}
	friend WeilElement operator*(WeilElement a, Rational const &c)
	{
		return a *= c;
	}
	friend WeilElement operator*(Rational const &c, WeilElement a)
	{
		return a *= c;
	}

	friend WeilElement operator*(WeilElement const &a, WeilElement const &b)
	{
		a.require_same(b);
		std::vector<Term> out;
		out.reserve(a.terms_.size() * b.terms_.size());
		for (auto const &x : a.terms_)
			for (auto const &y : b.terms_)
				if ((x.mask & y.mask) == 0)
					out.push_back({Mask(x.mask | y.mask), x.coeff * y.coeff});
		WeilElement r(a.k_);
		r.terms_ = normalize(std::move(out));
		return r;
	}
	WeilElement &operator*=(WeilElement const &o) { return *this = *this * o; }

	friend bool operator==(WeilElement const &a, WeilElement const &b)
	{
		if (a.k_ != b.k_ || a.terms_.size() != b.terms_.size())
			return false;
		for (std::size_t i = 0; i < a.terms_.size(); ++i)
			if (a.terms_[i].mask != b.terms_[i].mask ||
			    a.terms_[i].coeff != b.terms_[i].coeff)
				return false;
		return true;
	}

	/// Inverse of a unit (nonzero scalar part): c^-1 * sum_i (-c^-1 n)^i
	/// where n is the nilpotent part; n^(k+1) = 0.
	std::optional<WeilElement> inverse() const
	{
		auto cinv = scalar_part().inverse();
		if (!cinv)
			return std::nullopt;
		WeilElement u = *this * *cinv - one(k_);
		WeilElement neg_u = -u;
		WeilElement acc = one(k_);
		WeilElement power = one(k_);
		for (unsigned i = 0; i < k_; ++i)
		{
			power = power * neg_u;
			if (power.is_zero())
				break;
			acc += power;
		}
		return acc * *cinv;
	}

	/// Sum of `coeff*d1d2...` terms sorted by mask; "0" when empty.
	std::string str() const
	{
		if (terms_.empty())
			return "0";
		std::string s;
		bool first = true;
		for (auto const &t : terms_)
		{
			Rational c = t.coeff;
			if (!first)
			{
				s += c.sign() < 0 ? " - " : " + ";
				if (c.sign() < 0)
					c = -c;
			}
			first = false;
			if (t.mask == 0)
			{
				s += c.str();
				continue;
			}
			if (c == Rational(-1))
				s += "-";
			else if (c != Rational(1))
				s += c.str() + "*";
			for (unsigned i = 0; i < 16; ++i)
				if (t.mask & (1u << i))
					s += "d" + std::to_string(i + 1);
		}
		return s;
	}

  private:
	static void check_k(unsigned k)
	{
		if (k < 1 || k > max_generators)
			fail(ErrorCode::GeneratorCountMismatch,
			     "generator count " + std::to_string(k) + " outside 1..16");
	}

	void require_same(WeilElement const &o) const
	{
		if (k_ != o.k_)
			fail(ErrorCode::GeneratorCountMismatch,
			     "k=" + std::to_string(k_) + " vs k=" + std::to_string(o.k_));
	}

	static std::vector<Term> normalize(std::vector<Term> v)
	{
		std::sort(v.begin(), v.end(),
		          [](Term const &a, Term const &b) { return a.mask < b.mask; });
		std::vector<Term> out;
		out.reserve(v.size());
		for (auto &t : v)
		{
			if (!out.empty() && out.back().mask == t.mask)
				out.back().coeff += t.coeff;
			else
			{
				if (!out.empty() && out.back().coeff.is_zero())
					out.pop_back();
				out.push_back(std::move(t));
			}
		}
		if (!out.empty() && out.back().coeff.is_zero())
			out.pop_back();
		return out;
	}

	void merge(WeilElement const &o, int sign)
	{
		std::vector<Term> out;
		out.reserve(terms_.size() + o.terms_.size());
		auto i = terms_.begin();
		auto j = o.terms_.begin();
		while (i != terms_.end() || j != o.terms_.end())
		{
			if (j == o.terms_.end() || (i != terms_.end() && i->mask < j->mask))
				out.push_back(std::move(*i++));
			else if (i == terms_.end() || j->mask < i->mask)
			{
				out.push_back({j->mask, sign > 0 ? j->coeff : -j->coeff});
				++j;
			}
			else
			{
				Rational c = sign > 0 ? i->coeff + j->coeff : i->coeff - j->coeff;
				if (!c.is_zero())
					out.push_back({i->mask, std::move(c)});
				++i;
				++j;
			}
		}
		terms_ = std::move(out);
	}

	unsigned k_ = 1;
	std::vector<Term> terms_;
};

inline std::string to_string(WeilElement const &w) { return w.str(); }

inline WeilElement weil_mul(WeilElement const &a, WeilElement const &b)
{
	return a * b;
}

/// d1 + ... + dn in the ring with k generators.
inline WeilElement weil_generator_sum(unsigned k, unsigned n)
{
	WeilElement s(k);
	for (unsigned i = 1; i <= n; ++i)
		s += WeilElement::generator(k, i);
	return s;
}

/// (d1+...+dn)^m / m!, i.e. the m-th elementary symmetric polynomial in
/// d1..dn, produced directly by enumerating m-subsets. Zero when m > n.
inline WeilElement weil_power_sum(unsigned n, unsigned m)
{
	if (n < 1 || n > WeilElement::max_generators)
		fail(ErrorCode::GeneratorCountMismatch,
		     "generator count " + std::to_string(n) + " outside 1..16");
	WeilElement r(n);
	if (m == 0)
		return WeilElement::one(n);
	if (m > n)
		return r;
	for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
		if (unsigned(std::popcount(mask)) == m)
			r += WeilElement::monomial(n, WeilElement::Mask(mask), Rational(1));
	return r;
}

// scalar-ring interface
inline bool is_zero(WeilElement const &w) { return w.is_zero(); }
inline WeilElement zero_like(WeilElement const &w)
{
	return WeilElement::zero(w.generators());
}
inline WeilElement one_like(WeilElement const &w)
{
	return WeilElement::one(w.generators());
}
inline bool compatible(WeilElement const &a, WeilElement const &b)
{
	return a.generators() == b.generators();
}
inline std::optional<WeilElement> unit_inverse(WeilElement const &w)
{
	return w.inverse();
}

} // namespace bchz

#endif
