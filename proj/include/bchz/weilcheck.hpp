#ifndef BCHZ_WEILCHECK_HPP
#define BCHZ_WEILCHECK_HPP

#include "bchz/assoc.hpp"
#include "bchz/error.hpp"
#include "bchz/freelie.hpp"
#include "bchz/lie_expr.hpp"
#include "bchz/matrix.hpp"
#include "bchz/tables.hpp"
#include "bchz/series.hpp"
#include "bchz/weil.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bchz {

enum class Model { free, matrix };

inline std::string_view to_string(Model m)
{
	return m == Model::free ? "free" : "matrix";
}

enum class Verdict { pass, fail, error };

inline std::string_view to_string(Verdict v)
{
	switch (v)
	{
	case Verdict::pass: return "PASS";
	case Verdict::fail: return "FAIL";
	case Verdict::error: return "ERROR";
	}
	return "?";
}

struct CheckParams
{
	unsigned trunc = 6;     // free model: word-length truncation
	unsigned dim = 5;       // matrix model: matrix size
	std::uint64_t seed = 42; // matrix model: fixture seed
	unsigned gens = 3;      // generator count for cor-7.2.1
	unsigned lemma_n = 4;   // lemma-6.0: number of infinitesimals
	unsigned lemma_m = 2;   // lemma-6.0: exponent

	friend bool operator==(CheckParams const &, CheckParams const &) = default;
};

struct WitnessTerm
{
	std::string at; // word ("X·Y", "1" for the empty word) or "r,c"
	std::string coeff;
};

/// Nonzero entries of (side 0) - (side k) for the first side k that differs.
/// terms.front() is the lexicographically first nonzero coefficient.
struct Witness
{
	unsigned side = 1;
	std::vector<WitnessTerm> terms;
};

struct CheckReport
{
	std::string id;
	Model model = Model::free;
	CheckParams params;
	Verdict verdict = Verdict::error;
	std::optional<Witness> witness;
	std::string error;
	double elapsed_ms = 0;
};

struct CatalogEntry
{
	std::string_view id;
	std::string_view statement;
	unsigned degree; // truncation needed in the free model
};

inline std::vector<CatalogEntry> const &catalog()
{
	static std::vector<CatalogEntry> const c = {
	    {"prop-2.1", "X_{d1+d2} = X_{d1}.X_{d2}", 2},
	    {"prop-2.2", "(X+Y)_d = X_d.Y_d = Y_d.X_d", 1},
	    {"thm-2.3", "X_{d1}.Y_{d2}.X_{-d1}.Y_{-d2} = [X,Y]_{d1d2}", 2},
	    {"lemma-2.5", "[X,[Y,[X,Y]]] = [Y,[X,[X,Y]]]", 4},
	    {"prop-4.4", "exp X . Y . (exp X)^-1 = e^{ad X} Y", 2},
	    {"prop-4.5", "exp d1X = X_{d1}", 1},
	    {"prop-5.3", "exp X.exp Y = exp(X+Y) for [X,Y] = 0 (Y := X)", 1},
	    {"prop-5.4", "exp d1X.exp d2Y = exp d2Y.exp d1X.exp d1d2[X,Y]", 2},
	    {"lemma-6.0", "(d1+...+dn)^m/m! = sum_{i1<...<im} d_i1...d_im", 1},
	    {"thm-6.1", "exp d1(X+Y) = exp d1X.exp d1Y", 1},
	    {"thm-6.2a", "Zassenhaus order 2, elementary form", 2},
	    {"thm-6.2b", "Zassenhaus order 2, power form", 2},
	    {"thm-6.3a", "Zassenhaus order 3, elementary form", 3},
	    {"thm-6.3b", "Zassenhaus order 3, power form", 3},
	    {"thm-6.4a", "Zassenhaus order 4, elementary form", 4},
	    {"thm-6.4b", "Zassenhaus order 4, power form", 4},
	    {"thm-7.1", "exp d1X.exp d1Y = exp d1(X+Y)", 1},
	    {"thm-7.2a", "BCH order 2 (first approach), elementary form", 2},
	    {"thm-7.2b", "BCH order 2 (first approach), power form", 2},
	    {"cor-7.2.1", "exp sX1...exp sXn = exp(s sum X_i + d1d2 sum_{i<j}[X_i,X_j])", 2},
	    {"thm-7.3a", "BCH order 3 (first approach), elementary form", 3},
	    {"thm-7.3b", "BCH order 3 (first approach), power form", 3},
	    {"thm-7.4a", "BCH order 4 (first approach), elementary form", 4},
	    {"thm-7.4b", "BCH order 4 (first approach), power form", 4},
	    {"thm-8.1", "BCH order 1 (second approach)", 1},
	    {"thm-8.2", "BCH order 2 (second approach)", 2},
	    {"thm-8.3", "BCH order 3 (second approach)", 3},
	    {"thm-8.4", "BCH order 4 (second approach)", 4},
	    {"consistency-7v8", "degree-4 BCH terms of both approaches agree", 4},
	};
	return c;
}

inline CatalogEntry const &catalog_entry(std::string_view id)
{
	for (auto const &e : catalog())
		if (e.id == id)
			return e;
	fail(ErrorCode::UnknownIdentity, "unknown identity '" + std::string(id) + "'");
}

/// Glob match with '*' and '?'.
inline bool id_matches(std::string_view pattern, std::string_view id)
{
	if (pattern.empty())
		return id.empty();
	if (pattern[0] == '*')
	{
		for (std::size_t i = 0; i <= id.size(); ++i)
			if (id_matches(pattern.substr(1), id.substr(i)))
				return true;
		return false;
	}
	if (id.empty())
		return false;
	if (pattern[0] == '?' || pattern[0] == id[0])
		return id_matches(pattern.substr(1), id.substr(1));
	return false;
}

// ---------------------------------------------------------------------------
// identity templates

/// A Weil-weighted Lie term. Expressions are evaluated literally (brackets as
/// commutators); LieElements go through their Hall trees.
struct FactorTerm
{
	WeilElement weight;
	std::variant<LieExpr, LieElement> lie;
};

enum class FactorKind {
	exp,     // exp(sum w*L)
	tangent, // 1 + sum w*L, the tangent vector L_w
	linear,  // sum w*L
	scalar,  // w * 1
};

struct Factor
{
	FactorKind kind;
	std::vector<FactorTerm> terms;
	WeilElement scalar;
	bool inverted = false;
};

using Product = std::vector<Factor>;

struct IdentityTemplate
{
	std::string id;
	AlphabetPtr alphabet;
	unsigned weil_k;
	unsigned lie_degree; // max_degree of any LieElement terms
	std::vector<Product> sides;
};

namespace detail {

class TemplateBuilder
{
  public:
	TemplateBuilder(AlphabetPtr alpha, unsigned k, unsigned lie_degree)
	    : alpha_(std::move(alpha)), k_(k), lie_degree_(lie_degree)
	{}

	WeilElement d(unsigned i) const { return WeilElement::generator(k_, i); }
	WeilElement one() const { return WeilElement::one(k_); }
	WeilElement sum_d(unsigned n) const { return weil_generator_sum(k_, n); }

	LieExpr expr(std::string_view text) const
	{
		return parse_lie_expr(text, *alpha_);
	}

	FactorTerm term(WeilElement w, std::string_view text) const
	{
		return {std::move(w), expr(text)};
	}

	Factor make(FactorKind kind, std::vector<FactorTerm> terms,
	            bool inverted = false) const
	{
		return {kind, std::move(terms), one(), inverted};
	}
	Factor exp(std::vector<FactorTerm> terms) const
	{
		return make(FactorKind::exp, std::move(terms));
	}
	Factor tangent(WeilElement w, std::string_view text, bool inv = false) const
	{
		return make(FactorKind::tangent, {term(std::move(w), text)}, inv);
	}
	Factor linear(std::vector<FactorTerm> terms) const
	{
		return make(FactorKind::linear, std::move(terms));
	}
	Factor scalar(WeilElement w) const
	{
		return {FactorKind::scalar, {}, std::move(w), false};
	}

	FactorTerm raw(RawTerm const &t, unsigned n) const
	{
		return term(t.weight.evaluate(n), t.expr);
	}

	Factor raw_exp(RawFactor const &f, unsigned n) const
	{
		std::vector<FactorTerm> terms;
		for (auto const &t : f)
			terms.push_back(raw(t, n));
		return exp(std::move(terms));
	}

	IdentityTemplate finish(std::string_view id, std::vector<Product> sides) const
	{
		return {std::string(id), alpha_, k_, lie_degree_, std::move(sides)};
	}

	AlphabetPtr const &alphabet() const { return alpha_; }
	unsigned lie_degree() const { return lie_degree_; }

  private:
	AlphabetPtr alpha_;
	unsigned k_;
	unsigned lie_degree_;
};

inline IdentityTemplate zassenhaus_template(ZassenhausTable const &t,
                                            unsigned lie_degree)
{
	unsigned n = t.order;
	TemplateBuilder b(Alphabet::standard(2), n, lie_degree);
	Product lhs {b.exp({b.term(b.sum_d(n), "X+Y")})};
	Product rhs;
	for (auto const &f : t.factors)
		rhs.push_back(b.raw_exp(f, n));
	return b.finish(t.id, {lhs, rhs});
}

inline IdentityTemplate bch_template(BchTable const &t, unsigned lie_degree)
{
	unsigned n = t.order;
	TemplateBuilder b(Alphabet::standard(2), n, lie_degree);
	Product lhs {b.exp({b.term(b.sum_d(n), "X")}), b.exp({b.term(b.sum_d(n), "Y")})};
	Product rhs {b.raw_exp(t.exponent, n)};
	return b.finish(t.id, {lhs, rhs});
}

} // namespace detail

/// Both sides of one catalog statement, written as products of factors over
/// the Weil ring. lie_degree bounds the Hall-normalized terms (ad series,
/// tabulated Lie elements).
inline IdentityTemplate build_template(std::string_view id, CheckParams const &p,
                                       unsigned lie_degree)
{
	using detail::TemplateBuilder;
	catalog_entry(id);
	auto xy = Alphabet::standard(2);

	if (auto const *t = tables::find_zassenhaus(id))
		return detail::zassenhaus_template(*t, lie_degree);
	if (auto const *t = tables::find_bch(id))
		return detail::bch_template(*t, lie_degree);

	if (id == "prop-2.1")
	{
		TemplateBuilder b(xy, 2, lie_degree);
		return b.finish(id, {{b.exp({b.term(b.sum_d(2), "X")})},
		                     {b.tangent(b.d(1), "X"), b.tangent(b.d(2), "X")}});
	}
	if (id == "prop-2.2")
	{
		TemplateBuilder b(xy, 1, lie_degree);
		return b.finish(id, {{b.tangent(b.d(1), "X+Y")},
		                     {b.tangent(b.d(1), "X"), b.tangent(b.d(1), "Y")},
		                     {b.tangent(b.d(1), "Y"), b.tangent(b.d(1), "X")}});
	}
	if (id == "thm-2.3")
	{
		TemplateBuilder b(xy, 2, lie_degree);
		return b.finish(id, {{b.tangent(b.d(1), "X"), b.tangent(b.d(2), "Y"),
		                      b.tangent(b.d(1), "X", true),
		                      b.tangent(b.d(2), "Y", true)},
		                     {b.tangent(b.d(1) * b.d(2), "[X,Y]")}});
	}
	if (id == "lemma-2.5")
	{
		TemplateBuilder b(xy, 1, lie_degree);
		return b.finish(id, {{b.linear({b.term(b.one(), "[X,[Y,[X,Y]]]")})},
		                     {b.linear({b.term(b.one(), "[Y,[X,[X,Y]]]")})}});
	}
	if (id == "prop-4.4")
	{
		TemplateBuilder b(xy, 1, lie_degree);
		auto x = LieElement::generator(xy, lie_degree, 0);
		auto y = LieElement::generator(xy, lie_degree, 1);
		Factor conj = b.exp({b.term(b.one(), "X")});
		Factor conj_inv = conj;
		conj_inv.inverted = true;
		Factor rhs = b.linear({{b.one(), ad_exp(x, y, lie_degree - 1)}});
		return b.finish(id, {{conj, b.linear({b.term(b.one(), "Y")}), conj_inv},
		                     {rhs}});
	}
	if (id == "prop-4.5")
	{
		TemplateBuilder b(xy, 1, lie_degree);
		return b.finish(id, {{b.exp({b.term(b.d(1), "X")})},
		                     {b.tangent(b.d(1), "X")}});
	}
	if (id == "prop-5.3")
	{
		TemplateBuilder b(xy, 1, lie_degree);
		return b.finish(id, {{b.exp({b.term(b.one(), "X")}),
		                      b.exp({b.term(b.one(), "X")})},
		                     {b.exp({b.term(b.one(), "X+X")})}});
	}
	if (id == "prop-5.4")
	{
		TemplateBuilder b(xy, 2, lie_degree);
		return b.finish(id, {{b.exp({b.term(b.d(1), "X")}),
		                      b.exp({b.term(b.d(2), "Y")})},
		                     {b.exp({b.term(b.d(2), "Y")}),
		                      b.exp({b.term(b.d(1), "X")}),
		                      b.exp({b.term(b.d(1) * b.d(2), "[X,Y]")})}});
	}
	if (id == "lemma-6.0")
	{
		unsigned n = p.lemma_n, m = p.lemma_m;
		if (n < 1 || n > WeilElement::max_generators || m < 1)
			fail(ErrorCode::InsufficientModel, "lemma-6.0 needs 1 <= n <= 16, m >= 1");
		TemplateBuilder b(xy, n, lie_degree);
		Weight power {WeightKind::power, m, Rational(1) / factorial(m)};
		Weight elementary {WeightKind::elementary, m, Rational(1)};
		return b.finish(id, {{b.scalar(power.evaluate(n))},
		                     {b.scalar(elementary.evaluate(n))}});
	}
	if (id == "cor-7.2.1")
	{
		unsigned g = p.gens;
		if (g < 2 || g > Word::max_letters)
			fail(ErrorCode::InsufficientModel, "cor-7.2.1 needs 2..16 generators");
		std::vector<std::string> names;
		for (unsigned i = 1; i <= g; ++i)
			names.push_back("X" + std::to_string(i));
		TemplateBuilder b(Alphabet::make(names), 2, lie_degree);
		WeilElement s = b.sum_d(2);
		Product lhs;
		std::string linear, pairs;
		for (unsigned i = 0; i < g; ++i)
		{
			lhs.push_back(b.exp({b.term(s, names[i])}));
			linear += (i ? "+" : "") + names[i];
			for (unsigned j = i + 1; j < g; ++j)
				pairs += (pairs.empty() ? "" : "+") +
				         ("[" + names[i] + "," + names[j] + "]");
		}
		Product form_a {b.exp({b.term(s, linear), b.term(b.d(1) * b.d(2), pairs)})};
		Product form_b {b.exp({b.term(s, linear),
		                    b.term(s * s * Rational(1, 2), pairs)})};
		return b.finish(id, {lhs, form_a, form_b});
	}
	if (id == "consistency-7v8")
	{
		TemplateBuilder b(xy, 1, lie_degree);
		if (lie_degree < 4)
			fail(ErrorCode::InsufficientModel, "consistency-7v8 needs degree 4");
		auto sec7 = bch_paper(4, BchVariant::sec7, 'a').degree(4).with_max_degree(lie_degree);
		auto sec8 = bch_paper(4, BchVariant::sec8).degree(4).with_max_degree(lie_degree);
		return b.finish(id, {{b.linear({{b.one(), sec7}})},
		                     {b.linear({{b.one(), sec8}})}});
	}
	fail(ErrorCode::UnknownIdentity, "no template for '" + std::string(id) + "'");
}

// ---------------------------------------------------------------------------
// models

namespace detail {

/// Truncated free associative algebra over the Weil ring.
class FreeEvaluator
{
  public:
	using Elem = AssocPoly<WeilElement>;
	using Base = AssocPoly<Rational>;

	FreeEvaluator(AlphabetPtr alpha, unsigned trunc, unsigned k)
	    : alpha_(std::move(alpha)), trunc_(trunc), k_(k),
	      zero_base_(alpha_, trunc_, Rational(1))
	{
		for (unsigned g = 0; g < alpha_->size(); ++g)
			gens_.push_back(Base::generator(alpha_, trunc_, Rational(1), g));
	}

	Elem one() const { return Elem::one(alpha_, trunc_, WeilElement::one(k_)); }
	Elem scalar(WeilElement const &w) const
	{
		return Elem::constant(alpha_, trunc_, w);
	}
	Base image(LieExpr const &e) const
	{
		return evaluate_expr<Base>(e, gens_, zero_base_);
	}
	Base image(LieElement const &l) const
	{
		return evaluate_lie<Base>(l, gens_, zero_base_);
	}
	Elem extend(Base const &b) const { return scalar_extend(b, k_); }
	Elem exp(Elem const &a) const { return poly_exp(a); }
	Elem inv(Elem const &a) const { return poly_inv(a); }

	Witness witness(Elem const &diff, unsigned side) const
	{
		Witness w {side, {}};
		for (auto const &[word, c] : diff.terms())
			w.terms.push_back({word.empty() ? "1" : word.str(*alpha_), c.str()});
		return w;
	}

  private:
	AlphabetPtr alpha_;
	unsigned trunc_;
	unsigned k_;
	Base zero_base_;
	std::vector<Base> gens_;
};

/// Unitriangular matrices over the Weil ring.
class MatrixEvaluator
{
  public:
	using Elem = Matrix<WeilElement>;
	using Base = Matrix<Rational>;

	MatrixEvaluator(std::vector<NilMatrix> const &gens, unsigned k)
	    : dim_(gens.front().dim()), k_(k), zero_base_(dim_, Rational(1))
	{
		for (auto const &g : gens)
			gens_.push_back(g.matrix());
	}

	Elem one() const { return Elem::identity(dim_, WeilElement::one(k_)); }
	Elem scalar(WeilElement const &w) const { return w * one(); }
	Base image(LieExpr const &e) const
	{
		return evaluate_expr<Base>(e, gens_, zero_base_);
	}
	Base image(LieElement const &l) const
	{
		return evaluate_lie<Base>(l, gens_, zero_base_);
	}
	Elem extend(Base const &b) const { return scalar_extend(b, k_); }
	Elem exp(Elem const &a) const { return mat_exp(a); }
	Elem inv(Elem const &a) const { return mat_inv(a); }

	Witness witness(Elem const &diff, unsigned side) const
	{
		Witness w {side, {}};
		for (unsigned r = 0; r < dim_; ++r)
			for (unsigned c = 0; c < dim_; ++c)
				if (!diff(r, c).is_zero())
					w.terms.push_back(
					    {std::to_string(r) + "," + std::to_string(c), diff(r, c).str()});
		return w;
	}

  private:
	unsigned dim_;
	unsigned k_;
	Base zero_base_;
	std::vector<Base> gens_;
};

template <class Ev>
typename Ev::Elem evaluate_factor(Ev const &ev, Factor const &f)
{
	using Elem = typename Ev::Elem;
	if (f.kind == FactorKind::scalar)
		return ev.scalar(f.scalar);
	Elem sum = ev.scalar(zero_like(f.scalar));
	for (auto const &t : f.terms)
	{
		auto base = std::visit([&](auto const &l) { return ev.image(l); }, t.lie);
		sum += t.weight * ev.extend(base);
	}
	Elem r = f.kind == FactorKind::exp       ? ev.exp(sum)
	         : f.kind == FactorKind::tangent ? ev.one() + sum
	                                         : sum;
	return f.inverted ? ev.inv(r) : r;
}

template <class Ev>
std::vector<typename Ev::Elem> evaluate_sides(Ev const &ev, IdentityTemplate const &t)
{
	std::vector<typename Ev::Elem> out;
	for (auto const &side : t.sides)
	{
		auto acc = ev.one();
		for (auto const &f : side)
			acc = acc * evaluate_factor(ev, f);
		out.push_back(std::move(acc));
	}
	return out;
}

template <class Ev>
void judge(Ev const &ev, IdentityTemplate const &t, CheckReport &report)
{
	auto sides = evaluate_sides(ev, t);
	report.verdict = Verdict::pass;
	for (unsigned i = 1; i < sides.size(); ++i)
	{
		auto diff = sides[0] - sides[i];
		if (!diff.is_zero())
		{
			report.verdict = Verdict::fail;
			report.witness = ev.witness(diff, i);
			return;
		}
	}
}

inline unsigned matrix_lie_degree(CheckParams const &p)
{
	return std::min(max_degree_cap, std::max(p.trunc, p.dim - 1));
}

inline void check_free_params(CatalogEntry const &e, CheckParams const &p)
{
	if (p.trunc < e.degree || p.trunc > max_degree_cap)
		fail(ErrorCode::InsufficientModel,
		     std::string(e.id) + " needs truncation " + std::to_string(e.degree) +
		         "..10 in the free model, got " + std::to_string(p.trunc));
}

inline void check_matrix_params(CatalogEntry const &e, CheckParams const &p)
{
	if (p.dim < e.degree + 1 || p.dim < 2 || p.dim > max_degree_cap + 1)
		fail(ErrorCode::InsufficientModel,
		     std::string(e.id) + " needs matrix dimension " +
		         std::to_string(std::max(2u, e.degree + 1)) + "..11, got " +
		         std::to_string(p.dim));
}

} // namespace detail

/// The free-model difference side0 - side1 (for inspection and tests).
inline AssocPoly<WeilElement> free_difference(std::string_view id,
                                              CheckParams const &p,
                                              unsigned side = 1)
{
	detail::check_free_params(catalog_entry(id), p);
	auto t = build_template(id, p, p.trunc);
	detail::FreeEvaluator ev(t.alphabet, p.trunc, t.weil_k);
	auto sides = detail::evaluate_sides(ev, t);
	return sides.at(0) - sides.at(side);
}

/// Evaluates both sides of a catalog identity in the chosen model and
/// compares them exactly. Throws UnknownIdentity / InsufficientModel.
inline CheckReport check_identity(std::string_view id, Model model,
                                  CheckParams const &p)
{
	auto start = std::chrono::steady_clock::now();
	auto const &entry = catalog_entry(id);
	CheckReport report;
	report.id = std::string(id);
	report.model = model;
	report.params = p;
	if (model == Model::free)
	{
		detail::check_free_params(entry, p);
		auto t = build_template(id, p, p.trunc);
		detail::FreeEvaluator ev(t.alphabet, p.trunc, t.weil_k);
		detail::judge(ev, t, report);
	}
	else
	{
		detail::check_matrix_params(entry, p);
		auto t = build_template(id, p, detail::matrix_lie_degree(p));
		auto gens = gen_nilmatrices(p.dim, p.seed, unsigned(t.alphabet->size()));
		detail::MatrixEvaluator ev(gens, t.weil_k);
		detail::judge(ev, t, report);
	}
	report.elapsed_ms = std::chrono::duration<double, std::milli>(
	                        std::chrono::steady_clock::now() - start)
	                        .count();
	return report;
}

/// Every catalog id matching `filter`, in catalog order. Checks run
/// concurrently; a check that throws yields an ERROR report instead of
/// aborting the suite.
inline std::vector<CheckReport> run_suite(std::string_view filter, Model model,
                                          CheckParams const &p)
{
	std::vector<std::future<CheckReport>> jobs;
	for (auto const &e : catalog())
	{
		if (!id_matches(filter, e.id))
			continue;
		std::string id(e.id);
		jobs.push_back(std::async(std::launch::async, [id, model, p] {
			try
			{
				return check_identity(id, model, p);
			}
			catch (std::exception const &ex)
			{
				CheckReport r;
				r.id = id;
				r.model = model;
				r.params = p;
				r.verdict = Verdict::error;
				r.error = ex.what();
				return r;
			}
		}));
	}
	std::vector<CheckReport> out;
	for (auto &j : jobs)
		out.push_back(j.get());
	return out;
}

/// The same question answered through the series module: does the tabulated
/// exponent agree with the classical oracle in every degree it covers?
/// nullopt for ids that are not tabulated series.
inline std::optional<bool> series_verdict(std::string_view id, CheckParams const &p = {})
{
	if (auto const *t = tables::find_bch(id))
	{
		auto tabulated = bch_from_table(*t);
		auto classical = bch_classical(t->order);
		for (unsigned n = 1; n <= t->order; ++n)
			if (!series_compare(tabulated, classical, n).is_zero())
				return false;
		return true;
	}
	if (auto const *t = tables::find_zassenhaus(id))
	{
		if (t->order < 2)
			return true;
		auto tabulated = zassenhaus_from_table(*t);
		auto classical = zassenhaus_classical(t->order);
		for (unsigned n = 2; n <= t->order; ++n)
			if (!series_compare(tabulated, classical, n).is_zero())
				return false;
		return true;
	}
	if (id == "consistency-7v8")
		return series_compare(bch_paper(4, BchVariant::sec7, 'a'),
		                      bch_paper(4, BchVariant::sec8), 4)
		    .is_zero();
	if (id == "cor-7.2.1")
		return multi_reconstructs(bch_multi_order2(p.gens));
	return std::nullopt;
}

// ---------------------------------------------------------------------------
// tangent vectors

/// 1 + d_i x in the free algebra over Q[d1..dk]/(di^2), truncated at
/// x.max_degree().
inline AssocPoly<WeilElement> tangent_of(LieElement const &x, unsigned d_index,
                                         unsigned k)
{
	if (d_index < 1 || d_index > k)
		fail(ErrorCode::IndexOutOfRange, "infinitesimal index out of range");
	auto img = scalar_extend(lie_embed(x), k);
	return img.one() + WeilElement::generator(k, d_index) * img;
}

/// 1 + d_i x for a strictly upper-triangular matrix x.
inline Matrix<WeilElement> tangent_of(NilMatrix const &x, unsigned d_index,
                                      unsigned k)
{
	if (d_index < 1 || d_index > k)
		fail(ErrorCode::IndexOutOfRange, "infinitesimal index out of range");
	auto img = scalar_extend(x.matrix(), k);
	return img.one() + WeilElement::generator(k, d_index) * img;
}

} // namespace bchz

#endif
