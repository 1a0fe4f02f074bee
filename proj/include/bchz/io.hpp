#ifndef BCHZ_IO_HPP
#define BCHZ_IO_HPP

#include "bchz/assoc.hpp"
#include "bchz/freelie.hpp"
#include "bchz/series.hpp"
#include "bchz/weilcheck.hpp"

#include <json.hpp>

#include <string>

namespace bchz {

using json = nlohmann::ordered_json;

inline std::string word_label(Word const &w, Alphabet const &alpha)
{
	return w.empty() ? "1" : w.str(alpha);
}

/// [{monomial, coeff}] sorted by (degree, Lyndon word).
inline json to_json(LieElement const &a)
{
	json terms = json::array();
	for (auto const &[w, c] : a.terms())
		terms.push_back({{"monomial", HallMonomial {w}.str(*a.alphabet())},
		                 {"coeff", c.str()}});
	return terms;
}

template <class S> json to_json(AssocPoly<S> const &p)
{
	json terms = json::array();
	for (auto const &[w, c] : p.terms())
		terms.push_back({{"word", word_label(w, *p.alphabet())}, {"coeff", to_string(c)}});
	return {{"trunc", p.trunc()}, {"terms", terms}};
}

inline json to_json(GradedLieSeries const &s)
{
	json degrees = json::array();
	for (unsigned n = 1; n <= s.max_degree(); ++n)
		degrees.push_back({{"n", n}, {"terms", to_json(s.degree(n))}});
	json j = {{"kind", "bch"}, {"source", to_string(s.source)}};
	if (s.form)
		j["form"] = std::string(1, s.form);
	j["degrees"] = degrees;
	return j;
}

inline json to_json(ZassenhausFactors const &z)
{
	json degrees = json::array();
	for (unsigned n = 2; n <= z.max_degree(); ++n)
		degrees.push_back({{"n", n}, {"terms", to_json(z.C(n))}});
	json j = {{"kind", "zassenhaus"}, {"source", to_string(z.source)}};
	if (z.form)
		j["form"] = std::string(1, z.form);
	j["degrees"] = degrees;
	return j;
}

inline json to_json(CheckParams const &p, Model model)
{
	json j;
	if (model == Model::free)
		j["trunc"] = p.trunc;
	else
	{
		j["dim"] = p.dim;
		j["seed"] = p.seed;
	}
	j["gens"] = p.gens;
	j["n"] = p.lemma_n;
	j["m"] = p.lemma_m;
	return j;
}

inline json to_json(WitnessTerm const &t)
{
	return {{"at", t.at}, {"coeff", t.coeff}};
}

/// elapsed_ms is included only when `timing` is set.
inline json to_json(CheckReport const &r, bool timing = false)
{
	json j = {{"id", r.id},
	          {"model", to_string(r.model)},
	          {"params", to_json(r.params, r.model)},
	          {"verdict", to_string(r.verdict)}};
	if (r.verdict == Verdict::fail)
		j["note"] = "fails in " + std::string(to_string(r.model)) + " model";
	if (r.witness)
	{
		json terms = json::array();
		for (auto const &t : r.witness->terms)
			terms.push_back(to_json(t));
		j["witness"] = {{"side", r.witness->side},
		                {"first", to_json(r.witness->terms.front())},
		                {"terms", terms}};
	}
	if (r.verdict == Verdict::error)
		j["error"] = r.error;
	if (timing)
		j["elapsed_ms"] = r.elapsed_ms;
	return j;
}

} // namespace bchz

#endif
