#ifndef BCHZ_MATRIX_HPP
#define BCHZ_MATRIX_HPP

#include "bchz/error.hpp"
#include "bchz/rational.hpp"
#include "bchz/weil.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace bchz {

/// Dense square matrix over Rational or WeilElement.
template <class S> class Matrix
{
  public:
	Matrix(unsigned dim, S unit)
	    : dim_(dim), unit_(std::move(unit)),
	      entries_(std::size_t(dim) * dim, zero_like(unit_))
	{
		if (dim_ == 0)
			fail(ErrorCode::InsufficientModel, "matrix dimension must be positive");
	}

	static Matrix identity(unsigned dim, S unit)
	{
		Matrix m(dim, unit);
		for (unsigned i = 0; i < dim; ++i)
			m(i, i) = one_like(m.unit_);
		return m;
	}

	Matrix zero() const { return Matrix(dim_, unit_); }
	Matrix one() const { return identity(dim_, unit_); }

	unsigned dim() const { return dim_; }
	S const &unit() const { return unit_; }

	S &operator()(unsigned r, unsigned c) { return entries_[r * dim_ + c]; }
	S const &operator()(unsigned r, unsigned c) const
	{
		return entries_[r * dim_ + c];
	}

	bool is_zero() const
	{
		for (auto const &e : entries_)
			if (!bchz::is_zero(e))
				return false;
		return true;
	}

	bool is_strictly_upper() const
	{
		for (unsigned r = 0; r < dim_; ++r)
			for (unsigned c = 0; c <= r; ++c)
				if (!bchz::is_zero((*this)(r, c)))
					return false;
		return true;
	}

	bool is_unitriangular() const
	{
		for (unsigned r = 0; r < dim_; ++r)
			for (unsigned c = 0; c <= r; ++c)
				if ((*this)(r, c) != (r == c ? one_like(unit_) : zero_like(unit_)))
					return false;
		return true;
	}

	void require_same(Matrix const &o) const
	{
		if (dim_ != o.dim_ || !compatible(unit_, o.unit_))
			fail(ErrorCode::AlgebraMismatch, "matrix dimension or ring mismatch");
	}

	Matrix operator-() const { return scaled(Rational(-1)); }

	Matrix scaled(Rational const &q) const
	{
		Matrix r = *this;
		for (auto &e : r.entries_)
			e = e * q;
		return r;
	}

	Matrix &operator+=(Matrix const &o)
	{
		require_same(o);
		for (std::size_t i = 0; i < entries_.size(); ++i)
			entries_[i] += o.entries_[i];
		return *this;
	}
	Matrix &operator-=(Matrix const &o)
	{
		require_same(o);
		for (std::size_t i = 0; i < entries_.size(); ++i)
			entries_[i] -= o.entries_[i];
		return *this;
	}
	friend Matrix operator+(Matrix a, Matrix const &b) { return a += b; }
	friend Matrix operator-(Matrix a, Matrix const &b) { return a -= b; }

	friend Matrix operator*(S const &s, Matrix const &m)
	{
		Matrix r = m;
		for (auto &e : r.entries_)
			e = s * e;
		return r;
	}

	friend Matrix operator*(Matrix const &a, Matrix const &b)
	{
		a.require_same(b);
		Matrix r = a.zero();
		unsigned n = a.dim_;
		for (unsigned i = 0; i < n; ++i)
			for (unsigned k = 0; k < n; ++k)
			{
				S const &x = a(i, k);
				if (bchz::is_zero(x))
					continue;
				for (unsigned j = 0; j < n; ++j)
					if (!bchz::is_zero(b(k, j)))
						r(i, j) += x * b(k, j);
			}
		return r;
	}

	friend bool operator==(Matrix const &a, Matrix const &b)
	{
		return a.dim_ == b.dim_ && a.entries_ == b.entries_;
	}

	std::string str() const
	{
		std::string s;
		for (unsigned r = 0; r < dim_; ++r)
		{
			s += "[";
			for (unsigned c = 0; c < dim_; ++c)
				s += (c ? ", " : "") + to_string((*this)(r, c));
			s += "]\n";
		}
		return s;
	}

  private:
	unsigned dim_;
	S unit_;
	std::vector<S> entries_;
};

/// sum_i A^i / i! for nilpotent A (A^dim = 0).
template <class S> Matrix<S> mat_exp(Matrix<S> const &a)
{
	Matrix<S> result = a.one();
	Matrix<S> power = a.one();
	for (unsigned i = 1; i <= a.dim(); ++i)
	{
		power = (power * a).scaled(Rational(1, long(i)));
		if (power.is_zero())
			return result;
		result += power;
	}
	fail(ErrorCode::NotNilpotent, "matrix exponent is not nilpotent");
}

/// Inverse of 1 + N with N nilpotent: sum_i (-N)^i.
template <class S> Matrix<S> mat_inv(Matrix<S> const &a)
{
	Matrix<S> step = a.one() - a;
	Matrix<S> result = a.one();
	Matrix<S> power = a.one();
	for (unsigned i = 1; i <= a.dim(); ++i)
	{
		power = power * step;
		if (power.is_zero())
			return result;
		result += power;
	}
	fail(ErrorCode::NotInvertible, "matrix is not unipotent");
}

inline Matrix<WeilElement> scalar_extend(Matrix<Rational> const &m, unsigned k)
{
	Matrix<WeilElement> r(m.dim(), WeilElement::one(k));
	for (unsigned i = 0; i < m.dim(); ++i)
		for (unsigned j = 0; j < m.dim(); ++j)
			r(i, j) = WeilElement(k, m(i, j));
	return r;
}

/// Strictly upper-triangular rational matrix: an element of the Lie algebra
/// of the unitriangular group, nilpotent of index at most dim.
class NilMatrix
{
  public:
	explicit NilMatrix(Matrix<Rational> m) : m_(std::move(m))
	{
		if (!m_.is_strictly_upper())
			fail(ErrorCode::InsufficientModel, "matrix is not strictly upper triangular");
	}

	Matrix<Rational> const &matrix() const { return m_; }
	unsigned dim() const { return m_.dim(); }

	friend bool operator==(NilMatrix const &, NilMatrix const &) = default;

  private:
	Matrix<Rational> m_;
};

/// `count` seeded strictly upper-triangular matrices with entries in -3..3.
/// Drawn from mt19937_64 by plain modulus reduction.
inline std::vector<NilMatrix> gen_nilmatrices(unsigned dim, std::uint64_t seed,
                                              unsigned count)
{
	if (dim < 2)
		fail(ErrorCode::InsufficientModel, "dimension must be at least 2");
	std::mt19937_64 rng(seed);
	std::vector<NilMatrix> out;
	for (unsigned k = 0; k < count; ++k)
	{
		Matrix<Rational> m(dim, Rational(1));
		for (unsigned r = 0; r < dim; ++r)
			for (unsigned c = r + 1; c < dim; ++c)
				m(r, c) = Rational(long(rng() % 7) - 3);
		out.emplace_back(std::move(m));
	}
	return out;
}

inline std::pair<NilMatrix, NilMatrix> gen_nilmatrix(unsigned dim,
                                                     std::uint64_t seed)
{
	auto v = gen_nilmatrices(dim, seed, 2);
	return {v[0], v[1]};
}

} // namespace bchz

#endif
