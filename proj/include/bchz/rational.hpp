#ifndef BCHZ_RATIONAL_HPP
#define BCHZ_RATIONAL_HPP

#include "bchz/error.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace bchz {

/// Exact rational number in canonical form (reduced, positive denominator,
/// zero is 0/1). Backed by GMP; every operation re-canonicalizes.
class Rational
{
  public:
	Rational() = default;
	Rational(long v) : q_(v) {}
	Rational(int v) : q_(v) {}
	Rational(long num, long den)
	{
		if (den == 0)
			fail(ErrorCode::DivisionByZero, "zero denominator");
		q_ = mpq_class(mpz_class(num), mpz_class(den));
		q_.canonicalize();
	}
	explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

	/// Parses `-?[0-9]+(/[1-9][0-9]*)?`.
	static Rational parse(std::string_view text)
	{
		auto bad = [&] {
			fail(ErrorCode::ParseError,
			     "bad rational '" + std::string(text) + "'");
		};
		std::size_t i = 0;
		if (i < text.size() && text[i] == '-')
			++i;
		std::size_t digits = i;
		while (i < text.size() && text[i] >= '0' && text[i] <= '9')
			++i;
		if (i == digits)
			bad();
		if (i < text.size())
		{
			if (text[i] != '/' || i + 1 >= text.size() || text[i + 1] == '0')
				bad();
			for (std::size_t j = i + 1; j < text.size(); ++j)
				if (text[j] < '0' || text[j] > '9')
					bad();
		}
		mpq_class q;
		if (q.set_str(std::string(text), 10) != 0)
			bad();
		return Rational(q);
	}

	mpz_class numerator() const { return q_.get_num(); }
	mpz_class denominator() const { return q_.get_den(); }
	bool is_zero() const { return sgn(q_) == 0; }
	int sign() const { return sgn(q_); }

	Rational operator-() const { return Rational(mpq_class(-q_)); }
	Rational &operator+=(Rational const &o) { q_ += o.q_; return *this; }
	Rational &operator-=(Rational const &o) { q_ -= o.q_; return *this; }
	Rational &operator*=(Rational const &o) { q_ *= o.q_; return *this; }
	Rational &operator/=(Rational const &o)
	{
		if (o.is_zero())
			fail(ErrorCode::DivisionByZero, "rational division by zero");
		q_ /= o.q_;
		return *this;
	}

	friend Rational operator+(Rational a, Rational const &b) { return a += b; }
	friend Rational operator-(Rational a, Rational const &b) { return a -= b; }
	friend Rational operator*(Rational a, Rational const &b) { return a *= b; }
	friend Rational operator/(Rational a, Rational const &b) { return a /= b; }

	friend bool operator==(Rational const &a, Rational const &b)
	{
		return a.q_ == b.q_;
	}
	friend std::strong_ordering operator<=>(Rational const &a,
	                                        Rational const &b)
	{
		int c = cmp(a.q_, b.q_);
		return c < 0 ? std::strong_ordering::less
		       : c > 0 ? std::strong_ordering::greater
		               : std::strong_ordering::equal;
	}

	std::optional<Rational> inverse() const
	{
		if (is_zero())
			return std::nullopt;
		return Rational(mpq_class(1 / q_));
	}

	/// ASCII "p/q"; integers omit "/q".
	std::string str() const { return q_.get_str(10); }

	mpq_class const &raw() const { return q_; }

  private:
	mpq_class q_ {0};
};

inline std::ostream &operator<<(std::ostream &os, Rational const &r)
{
	return os << r.str();
}

inline std::string to_string(Rational const &r) { return r.str(); }

inline Rational factorial(unsigned n)
{
	mpz_class f;
	mpz_fac_ui(f.get_mpz_t(), n);
	return Rational(mpq_class(f));
}

enum class RatOp { add, sub, mul, div, neg };

/// Single entry point for the five scalar operations; `neg` ignores b.
inline Rational rat_arith(RatOp op, Rational const &a, Rational const &b)
{
	switch (op)
	{
	case RatOp::add: return a + b;
	case RatOp::sub: return a - b;
	case RatOp::mul: return a * b;
	case RatOp::div: return a / b;
	case RatOp::neg: return -a;
	}
	return a;
}

// scalar-ring interface shared with WeilElement (used by AssocPoly/Matrix)
inline bool is_zero(Rational const &r) { return r.is_zero(); }
inline Rational zero_like(Rational const &) { return Rational(0); }
inline Rational one_like(Rational const &) { return Rational(1); }
inline bool compatible(Rational const &, Rational const &) { return true; }
inline std::optional<Rational> unit_inverse(Rational const &r)
{
	return r.inverse();
}

} // namespace bchz

#endif
