#ifndef BCHZ_LIE_EXPR_HPP
#define BCHZ_LIE_EXPR_HPP

#include "bchz/error.hpp"
#include "bchz/freelie.hpp"
#include "bchz/rational.hpp"

#include <cctype>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bchz {

/// A bracket expression kept exactly as written: generators, brackets whose
/// arguments may be linear combinations, and rational linear combinations.
/// It can be Hall-normalized (to_lie) or evaluated literally in any
/// associative algebra with brackets as commutators (evaluate_expr).
struct LieExpr
{
	enum class Kind { generator, bracket, sum };

	Kind kind = Kind::sum;
	unsigned gen = 0;
	std::shared_ptr<LieExpr const> left, right;
	std::vector<std::pair<Rational, LieExpr>> terms;

	static LieExpr generator(unsigned g)
	{
		LieExpr e;
		e.kind = Kind::generator;
		e.gen = g;
		return e;
	}

	static LieExpr bracket(LieExpr a, LieExpr b)
	{
		LieExpr e;
		e.kind = Kind::bracket;
		e.left = std::make_shared<LieExpr const>(std::move(a));
		e.right = std::make_shared<LieExpr const>(std::move(b));
		return e;
	}

	static LieExpr sum(std::vector<std::pair<Rational, LieExpr>> terms)
	{
		LieExpr e;
		e.kind = Kind::sum;
		e.terms = std::move(terms);
		return e;
	}
};

namespace detail {

///   expr := ["+"|"-"] term (("+"|"-") term)*
///   term := [RATIONAL ["*"]] atom
///   atom := NAME | "[" expr "," expr "]" | "(" expr ")"
class LieExprParser
{
  public:
	LieExprParser(std::string_view text, Alphabet const &alpha)
	    : text_(text), alpha_(alpha)
	{}

	LieExpr parse()
	{
		LieExpr r = expr();
		skip_ws();
		if (pos_ != text_.size())
			error("trailing input");
		return r;
	}

  private:
	[[noreturn]] void error(std::string const &msg) const
	{
		fail(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) +
		                                " in '" + std::string(text_) + "'");
	}

	void skip_ws()
	{
		while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_]))
			++pos_;
	}

	bool eat(char c)
	{
		skip_ws();
		if (pos_ < text_.size() && text_[pos_] == c)
		{
			++pos_;
			return true;
		}
		return false;
	}

	void expect(char c)
	{
		if (!eat(c))
			error(std::string("expected '") + c + "'");
	}

	LieExpr expr()
	{
		std::vector<std::pair<Rational, LieExpr>> terms;
		bool neg = eat('-');
		if (!neg)
			eat('+');
		terms.push_back(term());
		if (neg)
			terms.back().first = -terms.back().first;
		for (;;)
		{
			if (eat('+'))
				terms.push_back(term());
			else if (eat('-'))
			{
				terms.push_back(term());
				terms.back().first = -terms.back().first;
			}
			else
				break;
		}
		if (terms.size() == 1 && terms[0].first == Rational(1))
			return std::move(terms[0].second);
		return LieExpr::sum(std::move(terms));
	}

	std::pair<Rational, LieExpr> term()
	{
		skip_ws();
		Rational c(1);
		if (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]))
		{
			std::size_t start = pos_;
			while (pos_ < text_.size() &&
			       (std::isdigit((unsigned char)text_[pos_]) || text_[pos_] == '/'))
				++pos_;
			c = Rational::parse(text_.substr(start, pos_ - start));
			eat('*');
		}
		return {c, atom()};
	}

	LieExpr atom()
	{
		skip_ws();
		if (eat('['))
		{
			LieExpr a = expr();
			expect(',');
			LieExpr b = expr();
			expect(']');
			return LieExpr::bracket(std::move(a), std::move(b));
		}
		if (eat('('))
		{
			LieExpr a = expr();
			expect(')');
			return a;
		}
		std::size_t start = pos_;
		if (pos_ < text_.size() && std::isalpha((unsigned char)text_[pos_]))
		{
			++pos_;
			while (pos_ < text_.size() &&
			       (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_'))
				++pos_;
		}
		if (start == pos_)
			error("expected generator name or bracket");
		std::string name(text_.substr(start, pos_ - start));
		int g = alpha_.index_of(name);
		if (g < 0)
			error("unknown generator '" + name + "'");
		return LieExpr::generator(unsigned(g));
	}

	std::string_view text_;
	Alphabet const &alpha_;
	std::size_t pos_ = 0;
};

} // namespace detail

inline LieExpr parse_lie_expr(std::string_view text, Alphabet const &alpha)
{
	return detail::LieExprParser(text, alpha).parse();
}

/// Expands by bilinearity and rewrites in the Lyndon basis.
inline LieElement to_lie(LieExpr const &e, AlphabetPtr const &alpha,
                         unsigned max_degree)
{
	switch (e.kind)
	{
	case LieExpr::Kind::generator:
		return LieElement::generator(alpha, max_degree, e.gen);
	case LieExpr::Kind::bracket:
		return lie_bracket(to_lie(*e.left, alpha, max_degree),
		                   to_lie(*e.right, alpha, max_degree));
	case LieExpr::Kind::sum: break;
	}
	LieElement r(alpha, max_degree);
	for (auto const &[c, sub] : e.terms)
		r += to_lie(sub, alpha, max_degree).scaled(c);
	return r;
}

/// Literal evaluation: generators to their images, [a,b] -> ab - ba.
template <class A>
A evaluate_expr(LieExpr const &e, std::span<A const> generators, A const &zero)
{
	switch (e.kind)
	{
	case LieExpr::Kind::generator:
		if (e.gen >= generators.size())
			fail(ErrorCode::AlphabetMismatch, "generator image count");
		return generators[e.gen];
	case LieExpr::Kind::bracket:
	{
		A a = evaluate_expr(*e.left, generators, zero);
		A b = evaluate_expr(*e.right, generators, zero);
		return a * b - b * a;
	}
	case LieExpr::Kind::sum: break;
	}
	A r = zero;
	for (auto const &[c, sub] : e.terms)
		r += evaluate_expr(sub, generators, zero).scaled(c);
	return r;
}

/// Parses a bracket expression such as "[X+2Y,[X,Y]]" or
/// "1/2*[X,[X,Y]] - [Y,[X,Y]]" and Hall-normalizes it.
inline LieElement parse_lie(std::string_view text, AlphabetPtr const &alpha,
                            unsigned max_degree = default_max_degree)
{
	return to_lie(parse_lie_expr(text, *alpha), alpha, max_degree);
}

} // namespace bchz

#endif
