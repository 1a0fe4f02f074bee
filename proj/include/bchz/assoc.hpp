#ifndef BCHZ_ASSOC_HPP
#define BCHZ_ASSOC_HPP

#include "bchz/error.hpp"
#include "bchz/rational.hpp"
#include "bchz/weil.hpp"
#include "bchz/word.hpp"

#include <map>
#include <string>
#include <utility>

namespace bchz {

/// Noncommutative polynomial over the scalar ring S, truncated at word length
/// `trunc`. S is Rational or WeilElement; `unit` fixes the ring instance (the
/// generator count for Weil scalars).
///
/// Terms are ordered by (length, lexicographic). Words longer than trunc are
/// never stored and products that would produce them are dropped. Mixing
/// algebras with a different alphabet, truncation or scalar ring is an
/// AlgebraMismatch error.
template <class S> class AssocPoly
{
  public:
	using Scalar = S;
	using Terms = std::map<Word, S>;

	AssocPoly(AlphabetPtr alphabet, unsigned trunc, S unit)
	    : alpha_(std::move(alphabet)), trunc_(trunc), unit_(std::move(unit))
	{
		if (!alpha_ || alpha_->size() == 0 || alpha_->size() > Word::max_letters)
			fail(ErrorCode::AlgebraMismatch, "alphabet must have 1..16 letters");
		if (trunc_ > Word::max_length)
			fail(ErrorCode::DegreeOutOfRange, "truncation above 15");
	}

	static AssocPoly constant(AlphabetPtr alphabet, unsigned trunc, S c)
	{
		S unit = one_like(c);
		AssocPoly p(std::move(alphabet), trunc, unit);
		p.add_term(Word(), std::move(c));
		return p;
	}

	static AssocPoly one(AlphabetPtr alphabet, unsigned trunc, S unit)
	{
		S c = one_like(unit);
		return constant(std::move(alphabet), trunc, c);
	}

	/// The degree-one word for generator g (zero if trunc = 0).
	static AssocPoly generator(AlphabetPtr alphabet, unsigned trunc, S unit,
	                           unsigned g)
	{
		if (g >= alphabet->size())
			fail(ErrorCode::IndexOutOfRange, "generator index");
		AssocPoly p(std::move(alphabet), trunc, unit);
		p.add_term(Word::letter(g), one_like(p.unit_));
		return p;
	}

	AssocPoly zero() const { return AssocPoly(alpha_, trunc_, unit_); }
	AssocPoly one() const { return one(alpha_, trunc_, unit_); }

	AlphabetPtr const &alphabet() const { return alpha_; }
	unsigned trunc() const { return trunc_; }
	S const &unit() const { return unit_; }
	Terms const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	S coeff(Word const &w) const
	{
		auto it = terms_.find(w);
		return it == terms_.end() ? zero_like(unit_) : it->second;
	}

	S constant_term() const { return coeff(Word()); }

	/// Adds c*w; words beyond trunc are discarded.
	void add_term(Word const &w, S const &c)
	{
		if (w.size() > trunc_ || bchz::is_zero(c))
			return;
		auto [it, inserted] = terms_.try_emplace(w, c);
		if (!inserted)
		{
			it->second += c;
			if (bchz::is_zero(it->second))
				terms_.erase(it);
		}
	}

	/// Part made of words of exactly length n.
	AssocPoly homogeneous(unsigned n) const
	{
		AssocPoly r = zero();
		for (auto const &[w, c] : terms_)
			if (w.size() == n)
				r.terms_.emplace(w, c);
		return r;
	}

	bool same_algebra(AssocPoly const &o) const
	{
		return trunc_ == o.trunc_ && same_alphabet(alpha_, o.alpha_) &&
		       compatible(unit_, o.unit_);
	}

	void require_same(AssocPoly const &o) const
	{
		if (!same_algebra(o))
			fail(ErrorCode::AlgebraMismatch,
			     "polynomials live in different truncated algebras");
	}

	AssocPoly operator-() const
	{
		AssocPoly r = *this;
		for (auto &[w, c] : r.terms_)
			c = -c;
		return r;
	}

	AssocPoly &operator+=(AssocPoly const &o)
	{
		require_same(o);
		for (auto const &[w, c] : o.terms_)
			add_term(w, c);
		return *this;
	}
	AssocPoly &operator-=(AssocPoly const &o)
	{
		require_same(o);
		for (auto const &[w, c] : o.terms_)
			add_term(w, -c);
		return *this;
	}
	friend AssocPoly operator+(AssocPoly a, AssocPoly const &b) { return a += b; }
	friend AssocPoly operator-(AssocPoly a, AssocPoly const &b) { return a -= b; }

	/// Module action by a scalar of the same ring.
	friend AssocPoly operator*(S const &s, AssocPoly const &p)
	{
		if (!compatible(s, p.unit_))
			fail(ErrorCode::AlgebraMismatch, "scalar from a different ring");
		AssocPoly r = p.zero();
		for (auto const &[w, c] : p.terms_)
			r.add_term(w, s * c);
		return r;
	}

	AssocPoly scaled(Rational const &q) const
	{
		AssocPoly r = zero();
		if (q.is_zero())
			return r;
		for (auto const &[w, c] : terms_)
			r.terms_.emplace(w, c * q);
		return r;
	}

	friend AssocPoly operator*(AssocPoly const &a, AssocPoly const &b)
	{
		a.require_same(b);
		AssocPoly r = a.zero();
		for (auto const &[wa, ca] : a.terms_)
			for (auto const &[wb, cb] : b.terms_)
			{
				if (wa.size() + wb.size() > a.trunc_)
					break; // b's terms are ordered by length
				r.add_term(wa * wb, ca * cb);
			}
		return r;
	}
	AssocPoly &operator*=(AssocPoly const &o) { return *this = *this * o; }

	friend bool operator==(AssocPoly const &a, AssocPoly const &b)
	{
		return a.same_algebra(b) && a.terms_ == b.terms_;
	}

	/// Text form, e.g. "1 + X + 1/2*X·X"; "0" for zero. Scalars that are not
	/// plain rationals are parenthesized.
	std::string str() const
	{
		if (terms_.empty())
			return "0";
		std::string s;
		bool first = true;
		for (auto const &[w, c] : terms_)
		{
			std::string cs = to_string(c);
			bool simple = cs.find_first_of(" d") == std::string::npos;
			if (!first)
			{
				bool neg = simple && cs[0] == '-';
				s += neg ? " - " : " + ";
				if (neg)
					cs.erase(0, 1);
			}
			first = false;
			if (w.empty())
				s += simple ? cs : "(" + cs + ")";
			else
			{
				if (cs == "-1")
					s += "-";
				else if (cs != "1")
					s += (simple ? cs : "(" + cs + ")") + "*";
				s += w.str(*alpha_);
			}
		}
		return s;
	}

  private:
	AlphabetPtr alpha_;
	unsigned trunc_;
	S unit_;
	Terms terms_;
};

template <class S>
AssocPoly<S> poly_mul(AssocPoly<S> const &a, AssocPoly<S> const &b)
{
	return a * b;
}

namespace detail {

template <class S> void require_augmentation(AssocPoly<S> const &a, ErrorCode code)
{
	if (!is_zero(a.constant_term()))
		fail(code, "constant term must vanish");
}

} // namespace detail

/// sum_{i=0}^{trunc} a^i / i! for a in the augmentation ideal.
template <class S> AssocPoly<S> poly_exp(AssocPoly<S> const &a)
{
	detail::require_augmentation(a, ErrorCode::NotNilpotent);
	AssocPoly<S> result = a.one();
	AssocPoly<S> power = a.one();
	for (unsigned i = 1; i <= a.trunc(); ++i)
	{
		power = (power * a).scaled(Rational(1, long(i)));
		if (power.is_zero())
			break;
		result += power;
	}
	return result;
}

/// sum_{i=1}^{trunc} (-1)^{i+1} (a-1)^i / i for a with constant term 1.
template <class S> AssocPoly<S> poly_log(AssocPoly<S> const &a)
{
	if (a.constant_term() != one_like(a.unit()))
		fail(ErrorCode::NotUnipotent, "constant term must be 1");
	AssocPoly<S> u = a - a.one();
	AssocPoly<S> result = a.zero();
	AssocPoly<S> power = a.one();
	for (unsigned i = 1; i <= a.trunc(); ++i)
	{
		power = power * u;
		if (power.is_zero())
			break;
		result += power.scaled(Rational(i % 2 ? 1 : -1, long(i)));
	}
	return result;
}

/// Inverse when the constant term c is a unit of S:
/// a^-1 = sum_i (-c^-1 u)^i c^-1 with u = a - c.
template <class S> AssocPoly<S> poly_inv(AssocPoly<S> const &a)
{
	auto cinv = unit_inverse(a.constant_term());
	if (!cinv)
		fail(ErrorCode::NotInvertible, "constant term is not a unit");
	AssocPoly<S> u = a - AssocPoly<S>::constant(a.alphabet(), a.trunc(),
	                                            a.constant_term());
	AssocPoly<S> step = -(*cinv * u);
	AssocPoly<S> result = a.one();
	AssocPoly<S> power = a.one();
	for (unsigned i = 0; i < a.trunc(); ++i)
	{
		power = power * step;
		if (power.is_zero())
			break;
		result += power;
	}
	return *cinv * result;
}

/// Coefficient-wise base change Q -> Q[d1..dk]/(di^2).
inline AssocPoly<WeilElement> scalar_extend(AssocPoly<Rational> const &a,
                                            unsigned k)
{
	AssocPoly<WeilElement> r(a.alphabet(), a.trunc(), WeilElement::one(k));
	for (auto const &[w, c] : a.terms())
		r.add_term(w, WeilElement(k, c));
	return r;
}

} // namespace bchz

#endif
