#include "bchz/series.hpp"
#include "bchz/weilcheck.hpp"

#include "support/gen.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

using namespace bchz;
using test::Gen;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t)
{
	return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome
{
	bool ok;
	std::string detail;
};

int failures = 0;

void criterion(char const *tag, char const *title, std::function<Outcome()> const &f)
{
	Outcome o;
	try
	{
		o = f();
	}
	catch (std::exception const &e)
	{
		o = {false, std::string("exception: ") + e.what()};
	}
	if (!o.ok)
		++failures;
	std::printf("%s %s  %s: %s\n", tag, o.ok ? "PASS" : "FAIL", title, o.detail.c_str());
}

AlphabetPtr const &xy() { return detail::xy_alphabet(); }

std::set<std::string> const expected_pass = {
    "prop-2.1", "prop-2.2", "thm-2.3",  "lemma-2.5", "prop-4.4",  "prop-4.5",
    "prop-5.3", "prop-5.4", "lemma-6.0", "thm-6.1",  "thm-6.2a",  "thm-6.2b",
    "thm-7.1",  "thm-7.2a", "thm-7.2b", "cor-7.2.1", "thm-7.3a",  "thm-7.3b",
    "thm-8.1",  "thm-8.2",  "thm-8.3",  "consistency-7v8"};

Outcome ac1()
{
	auto t = Clock::now();
	for (unsigned n = 1; n <= 6; ++n)
		if (!bch_reconstructs(bch_classical(n)))
			return {false, "reconstruction fails at N=" + std::to_string(n)};
	double s = seconds_since(t);
	return {s < 5, "exp(Z_N) = exp X exp Y for N=1..6 in " + std::to_string(s) + " s"};
}

Outcome ac2()
{
	auto c = bch_classical(3);
	for (auto v : {BchVariant::sec7, BchVariant::sec8})
		for (unsigned n = 1; n <= 3; ++n)
			if (!series_compare(bch_paper(3, v), c, n).is_zero())
				return {false, "differs at degree " + std::to_string(n)};
	return {true, "both tabulated approaches equal the classical series in degrees 1..3"};
}

Outcome ac3()
{
	auto d1 = series_compare(bch_paper(4, BchVariant::sec7), bch_classical(4), 4);
	auto d2 = series_compare(bch_paper(4, BchVariant::sec7), bch_classical(6), 4);
	bool closed = d1 == parse_lie("-1/48[X+Y,[X+Y,[X,Y]]]", xy(), 4);
	return {!d1.is_zero() && d1.str() == d2.str() && closed,
	        "degree-4 difference " + d1.str() + " = -1/48*[X+Y,[X+Y,[X,Y]]]"};
}

Outcome ac4()
{
	auto r = check_identity("consistency-7v8", Model::free, CheckParams {});
	auto direct = bch_paper(4, BchVariant::sec7).degree(4) == bch_paper(4, BchVariant::sec8).degree(4);
	return {r.verdict == Verdict::pass && direct,
	        "degree-4 exponents of both approaches agree after Hall normalization"};
}

Outcome ac5()
{
	for (unsigned n = 2; n <= 6; ++n)
		if (!zassenhaus_reconstructs(zassenhaus_classical(n)))
			return {false, "reconstruction fails at N=" + std::to_string(n)};
	auto c2 = zassenhaus_classical(2).C(2);
	bool ok = c2 == parse_lie("-1/2[X,Y]", xy(), 2) &&
	          c2 == zassenhaus_paper(2, 'a').C(2).with_max_degree(2);
	return {ok, "exp X exp Y exp C2...exp CN = exp(X+Y) for N<=6; C2 = " + c2.str()};
}

Outcome ac6()
{
	CheckParams p;
	p.trunc = 3;
	auto a = check_identity("thm-6.3a", Model::free, p);
	auto b = check_identity("thm-6.3b", Model::free, p);
	bool pa = a.verdict == Verdict::pass, pb = b.verdict == Verdict::pass;
	auto const &failing = pa ? b : a;
	std::string detail = std::string(pa ? "thm-6.3a" : "thm-6.3b") + " passes; " +
	                     failing.id + " fails in free model";
	if (failing.witness)
		detail += ", first " + failing.witness->terms.front().at + ": " +
		          failing.witness->terms.front().coeff;
	return {pa != pb, detail};
}

Outcome ac7()
{
	auto t = Clock::now();
	CheckParams p;
	p.trunc = 6;
	p.dim = 5;
	auto free = run_suite("*", Model::free, p);
	auto mat = run_suite("*", Model::matrix, p);
	unsigned passed = 0;
	for (std::size_t i = 0; i < free.size(); ++i)
	{
		bool expect = expected_pass.count(free[i].id) == 1;
		if (expect && (free[i].verdict != Verdict::pass || mat[i].verdict != Verdict::pass))
			return {false, free[i].id + " does not pass"};
		if (free[i].verdict == Verdict::error || mat[i].verdict == Verdict::error)
			return {false, free[i].id + ": " + free[i].error + mat[i].error};
		passed += expect;
		if (auto sv = series_verdict(free[i].id);
		    sv && *sv != (free[i].verdict == Verdict::pass))
			return {false, "verdict incoherent for " + free[i].id};
	}
	double s = seconds_since(t);
	return {passed == expected_pass.size() && s < 60,
	        std::to_string(passed) + " expected identities pass in both models, "
	                                 "verdicts coherent with series comparison, " +
	            std::to_string(s) + " s"};
}

Outcome ac8()
{
	constexpr unsigned cases = 1000;
	Gen g(8);
	auto a2 = Alphabet::standard(2), a3 = Alphabet::standard(3);
	for (unsigned i = 0; i < cases; ++i)
	{
		auto A = g.coin() ? a2 : a3;
		auto a = g.lie(A, 6, 2), b = g.lie(A, 6, 2), c = g.lie(A, 6, 2);
		if (lie_bracket(a, b) != -lie_bracket(b, a))
			return {false, "antisymmetry"};
		auto j = lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) +
		         lie_bracket(c, lie_bracket(a, b));
		if (!j.is_zero())
			return {false, "Jacobi"};
	}
	for (unsigned i = 0; i < cases; ++i)
	{
		auto p = g.poly(g.coin() ? a2 : a3, 1 + g.below(5), 4, true);
		if (poly_log(poly_exp(p)) != p || poly_exp(poly_log(p.one() + p)) != p.one() + p)
			return {false, "exp/log round trip"};
	}
	for (unsigned i = 0; i < cases; ++i)
	{
		unsigned k = 2 + g.below(2);
		auto m = LieElement::monomial(k == 2 ? a2 : a3, 6, g.hall(k, 6));
		if (dynkin_project(lie_embed(m)) != m)
			return {false, "Dynkin projection"};
	}
	for (unsigned i = 0; i < cases; ++i)
	{
		unsigned n = 1 + g.below(6), m = 1 + g.below(n);
		if (tables::p(m, Rational(1) / factorial(m)).evaluate(n) != weil_power_sum(n, m))
			return {false, "power sum"};
	}
	std::vector<std::uint64_t> witt;
	for (unsigned n = 1; n <= 6; ++n)
		witt.push_back(hall_basis(2, n).size());
	if (witt != std::vector<std::uint64_t> {2, 1, 2, 3, 6, 9})
		return {false, "Witt dimensions"};
	return {true, "antisymmetry, Jacobi, exp/log, Dynkin, power sums: 1000 cases each; "
	              "Witt dimensions 2,1,2,3,6,9"};
}

Outcome ac9()
{
	auto left = log_derivative_coefficients(Side::left, 5);
	auto right = log_derivative_coefficients(Side::right, 5);
	for (unsigned p = 0; p <= 5; ++p)
	{
		Rational f = Rational(1) / factorial(p + 1);
		if (right[p] != f || left[p] != (p % 2 ? -f : f))
			return {false, "coefficient p=" + std::to_string(p)};
	}
	Gen g(9);
	auto A = Alphabet::standard(2);
	for (unsigned i = 0; i < 1000; ++i)
	{
		auto x = g.lie(A, 4, 2), v = g.lie(A, 4, 2);
		auto ex = poly_exp(lie_embed(x));
		if (ex * lie_embed(v) * poly_inv(ex) != lie_embed(ad_exp(x, v, 4)))
			return {false, "Ad(exp X) differs from e^{ad X}"};
	}
	return {true, "left/right coefficients match through p=5; Ad(exp X) = e^{ad X} at trunc 4"};
}

} // namespace

int main()
{
	auto t = Clock::now();
	criterion("AC1", "classical BCH self-consistency", ac1);
	criterion("AC2", "tabulated BCH agrees through order 3", ac2);
	criterion("AC3", "order-4 divergence detected", ac3);
	criterion("AC4", "consistency of the two BCH approaches", ac4);
	criterion("AC5", "Zassenhaus reconstruction", ac5);
	criterion("AC6", "form discrepancy detection", ac6);
	criterion("AC7", "identity suite", ac7);
	criterion("AC8", "property suites", ac8);
	criterion("AC9", "logarithmic-derivative operators", ac9);
	std::printf("%d of 9 criteria failed (%.2f s)\n", failures, seconds_since(t));
	return failures ? 1 : 0;
}
