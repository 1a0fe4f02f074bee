#ifndef BCHZ_WORD_HPP
#define BCHZ_WORD_HPP

#include "bchz/error.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace bchz {

/// Generator names of a free algebra. Indices are dense 0..size-1.
struct Alphabet
{
	std::vector<std::string> names;

	std::size_t size() const { return names.size(); }

	/// "X","Y" for two generators, "X1".."Xk" otherwise.
	static std::shared_ptr<Alphabet const> standard(unsigned k)
	{
		auto a = std::make_shared<Alphabet>();
		if (k == 1)
			a->names = {"X"};
		else if (k == 2)
			a->names = {"X", "Y"};
		else
			for (unsigned i = 1; i <= k; ++i)
				a->names.push_back("X" + std::to_string(i));
		return a;
	}

	static std::shared_ptr<Alphabet const> make(std::vector<std::string> names)
	{
		auto a = std::make_shared<Alphabet>();
		a->names = std::move(names);
		return a;
	}

	int index_of(std::string const &name) const
	{
		for (std::size_t i = 0; i < names.size(); ++i)
			if (names[i] == name)
				return int(i);
		return -1;
	}

	friend bool operator==(Alphabet const &, Alphabet const &) = default;
};

using AlphabetPtr = std::shared_ptr<Alphabet const>;

inline bool same_alphabet(AlphabetPtr const &a, AlphabetPtr const &b)
{
	return a == b || (a && b && *a == *b);
}

/// A word over at most 16 letters of length at most 15, packed four bits per
/// letter with the first letter most significant. Ordering is (length, then
/// lexicographic), which for equal lengths is the packed integer order.
class Word
{
  public:
	static constexpr unsigned max_length = 15;
	static constexpr unsigned max_letters = 16;

	Word() = default;

	static Word letter(unsigned g)
	{
		if (g >= max_letters)
			fail(ErrorCode::IndexOutOfRange, "letter index too large");
		Word w;
		w.bits_ = g;
		w.len_ = 1;
		return w;
	}

	static Word from(std::vector<unsigned> const &letters)
	{
		Word w;
		for (unsigned g : letters)
			w = w * letter(g);
		return w;
	}

	unsigned size() const { return len_; }
	bool empty() const { return len_ == 0; }

	unsigned operator[](unsigned i) const
	{
		return unsigned(bits_ >> (4 * (len_ - 1 - i))) & 0xF;
	}

	/// Concatenation.
	friend Word operator*(Word a, Word b)
	{
		if (a.len_ + b.len_ > max_length)
			fail(ErrorCode::IndexOutOfRange, "word too long");
		Word w;
		w.bits_ = (a.bits_ << (4 * b.len_)) | b.bits_;
		w.len_ = std::uint8_t(a.len_ + b.len_);
		return w;
	}

	/// Letters [pos, pos+n).
	Word sub(unsigned pos, unsigned n) const
	{
		Word w;
		w.len_ = std::uint8_t(n);
		unsigned shift = 4 * (len_ - pos - n);
		std::uint64_t mask = n == 16 ? ~0ull : ((1ull << (4 * n)) - 1);
		w.bits_ = (bits_ >> shift) & mask;
		return w;
	}

	Word reversed() const
	{
		Word w;
		for (unsigned i = len_; i-- > 0;)
			w = w * letter((*this)[i]);
		return w;
	}

	/// Pure lexicographic comparison (prefix is smaller).
	static int lex_compare(Word const &a, Word const &b)
	{
		unsigned n = a.len_ < b.len_ ? a.len_ : b.len_;
		for (unsigned i = 0; i < n; ++i)
			if (a[i] != b[i])
				return a[i] < b[i] ? -1 : 1;
		return a.len_ == b.len_ ? 0 : (a.len_ < b.len_ ? -1 : 1);
	}

	friend bool operator==(Word const &, Word const &) = default;
	friend bool operator<(Word const &a, Word const &b)
	{
		return a.len_ != b.len_ ? a.len_ < b.len_ : a.bits_ < b.bits_;
	}

	/// Names joined with "·"; the empty word is "".
	std::string str(Alphabet const &alpha) const
	{
		std::string s;
		for (unsigned i = 0; i < len_; ++i)
		{
			if (i)
				s += "·";
			s += alpha.names.at((*this)[i]);
		}
		return s;
	}

	std::uint64_t bits() const { return bits_; }

  private:
	std::uint64_t bits_ = 0;
	std::uint8_t len_ = 0;
};

} // namespace bchz

#endif
