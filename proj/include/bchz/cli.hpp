#ifndef BCHZ_CLI_HPP
#define BCHZ_CLI_HPP

#include "bchz/io.hpp"
#include "bchz/series.hpp"
#include "bchz/weilcheck.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace bchz {

enum class Format { text, json };

struct CliConfig
{
	std::string command;
	unsigned order = 0;
	std::string source = "classical";
	char form = 'a';
	std::string what = "bch";
	std::string a = "classical", b = "classical";
	char a_form = 'a', b_form = 'a';
	std::string id;
	bool all = false;
	Model model = Model::free;
	CheckParams params;
	bool trunc_given = false;
	bool timing = false;
	unsigned gens = 2;
	unsigned degree = 0;
	Side side = Side::left;
	Format format = Format::text;
	std::string output;
};

namespace detail {

struct CommandResult
{
	CommandResult(std::string t = {}, int c = 0, std::string d = {})
	    : text(std::move(t)), code(c), diag(std::move(d))
	{}

	std::string text;
	int code;
	std::string diag;
};

inline std::string series_text(GradedLieSeries const &s)
{
	std::string r;
	for (unsigned n = 1; n <= s.max_degree(); ++n)
		r += "deg" + std::to_string(n) + ": " + s.degree(n).str() + "\n";
	return r;
}

inline std::string series_text(ZassenhausFactors const &z)
{
	std::string r;
	for (unsigned n = 2; n <= z.max_degree(); ++n)
		r += "C" + std::to_string(n) + ": " + z.C(n).str() + "\n";
	return r;
}

inline AnySeries load_series(std::string const &what, std::string const &source,
                             unsigned order, char form)
{
	if (what == "bch")
	{
		if (source == "classical")
			return bch_classical(order);
		if (source == "paper7")
			return bch_paper(order, BchVariant::sec7, form);
		if (source == "paper8")
			return bch_paper(order, BchVariant::sec8, form);
		fail(ErrorCode::ParseError, "bch source must be classical, paper7 or paper8");
	}
	if (source == "classical")
		return zassenhaus_classical(order);
	if (source == "paper")
		return zassenhaus_paper(order, form);
	fail(ErrorCode::ParseError, "zassenhaus source must be classical or paper");
}

inline CommandResult run_series(CliConfig const &c)
{
	auto s = load_series(c.command, c.source, c.order, c.form);
	if (c.format == Format::json)
		return {std::visit([](auto const &v) { return to_json(v); }, s).dump(2) + "\n"};
	return {std::visit([](auto const &v) { return series_text(v); }, s)};
}

inline CommandResult run_compare(CliConfig const &c)
{
	auto a = load_series(c.what, c.a, c.order, c.a_form);
	auto b = load_series(c.what, c.b, c.order, c.b_form);
	unsigned lo = c.what == "bch" ? 1 : 2;
	std::vector<LieElement> diffs;
	for (unsigned n = lo; n <= c.order; ++n)
		diffs.push_back(series_compare(a, b, n));
	LieElement total = diffs.front().with_max_degree(c.order).zero();
	for (auto const &d : diffs)
		total += d.with_max_degree(c.order);
	int code = total.is_zero() ? 0 : 1;
	if (c.format == Format::json)
	{
		json degrees = json::array();
		for (unsigned n = lo; n <= c.order; ++n)
			degrees.push_back({{"n", n}, {"terms", to_json(diffs[n - lo])}});
		json j = {{"kind", c.what}, {"a", c.a}, {"b", c.b}, {"equal", code == 0},
		          {"degrees", degrees}};
		return {j.dump(2) + "\n", code};
	}
	return {total.str() + "\n", code};
}

inline std::string report_line(CheckReport const &r)
{
	std::ostringstream s;
	s << r.id;
	s << std::string(r.id.size() < 18 ? 18 - r.id.size() : 1, ' ');
	s << to_string(r.verdict);
	if (r.verdict == Verdict::fail)
	{
		auto const &t = r.witness->terms.front();
		s << "  fails in " << to_string(r.model) << " model; first " << t.at
		  << ": " << t.coeff;
	}
	else if (r.verdict == Verdict::error)
		s << "  " << r.error;
	return s.str();
}

inline CommandResult run_check(CliConfig const &c)
{
	std::string filter = c.all ? "*" : c.id;
	CheckParams p = c.params;
	unsigned needed = 0;
	for (auto const &e : catalog())
		if (id_matches(filter, e.id))
			needed = std::max(needed, e.degree);
	if (needed == 0)
		fail(ErrorCode::UnknownIdentity, "no identity matches '" + filter + "'");
	if (!c.trunc_given)
		p.trunc = needed;

	auto reports = run_suite(filter, c.model, p);
	unsigned pass = 0, failed = 0, errors = 0;
	for (auto const &r : reports)
		(r.verdict == Verdict::pass ? pass : r.verdict == Verdict::fail ? failed : errors)++;
	int code = errors ? 2 : failed ? 1 : 0;
	std::string diag;
	for (auto const &r : reports)
		if (r.verdict == Verdict::error)
			diag += "bchz: " + r.id + ": " + r.error + "\n";

	if (c.format == Format::json)
	{
		json arr = json::array();
		for (auto const &r : reports)
			arr.push_back(to_json(r, c.timing));
		return {arr.dump(2) + "\n", code, diag};
	}
	std::string text;
	for (auto const &r : reports)
	{
		text += report_line(r);
		if (c.timing)
		{
			std::ostringstream ms;
			ms.precision(3);
			ms << std::fixed << "  (" << r.elapsed_ms << " ms)";
			text += ms.str();
		}
		text += "\n";
	}
	text += std::to_string(reports.size()) + " checks: " + std::to_string(pass) +
	        " pass, " + std::to_string(failed) + " fail, " + std::to_string(errors) +
	        " error\n";
	return {text, code, diag};
}

inline CommandResult run_hall(CliConfig const &c)
{
	if (c.gens < 1 || c.gens > Word::max_letters || c.degree < 1 ||
	    c.degree > Word::max_length)
		fail(ErrorCode::DegreeOutOfRange, "hall needs 1..16 generators and degree 1..15");
	auto alpha = Alphabet::standard(c.gens);
	auto basis = hall_basis(c.gens, c.degree);
	if (c.format == Format::json)
	{
		json arr = json::array();
		for (auto const &m : basis)
			arr.push_back(m.str(*alpha));
		return {json {{"gens", c.gens}, {"degree", c.degree}, {"basis", arr}}.dump(2) + "\n"};
	}
	std::string text;
	for (auto const &m : basis)
		text += m.str(*alpha) + "\n";
	return {text};
}

inline CommandResult run_logderiv(CliConfig const &c)
{
	auto coeffs = log_derivative_coefficients(c.side, c.order);
	if (c.format == Format::json)
	{
		json arr = json::array();
		for (auto const &q : coeffs)
			arr.push_back(q.str());
		return {json {{"side", c.side == Side::left ? "left" : "right"}, {"coeffs", arr}}
		            .dump(2) +
		        "\n"};
	}
	std::string text;
	for (std::size_t i = 0; i < coeffs.size(); ++i)
		text += (i ? ", " : "") + coeffs[i].str();
	return {text + "\n"};
}

inline char parse_form(std::string const &s)
{
	return s.empty() ? 'a' : s[0];
}

} // namespace detail

/// Runs one command line (args excludes the program name). Output goes to
/// `out` (or the --output file), diagnostics and usage to `err`.
/// Exit codes: 0 success / all PASS, 1 some FAIL or nonzero difference,
/// 2 usage or input error.
inline int dispatch(std::vector<std::string> const &args, std::ostream &out,
                    std::ostream &err)
{
	CliConfig c;
	std::string format = "text", model = "free", side = "left";
	std::string form = "a", a_form = "a", b_form = "a";

	CLI::App app {"Baker-Campbell-Hausdorff and Zassenhaus series over exact rationals",
	              "bchz"};
	app.require_subcommand(1, 1);
	auto common = [&](CLI::App *sub) {
		sub->add_option("--format", format, "Output format")
		    ->check(CLI::IsMember({"text", "json"}));
		sub->add_option("--output", c.output, "Write output to this file");
	};

	auto *bch = app.add_subcommand("bch", "Print a BCH series by degree");
	bch->add_option("--order", c.order, "Highest degree")->required();
	bch->add_option("--source", c.source, "Series source")
	    ->check(CLI::IsMember({"classical", "paper7", "paper8"}));
	bch->add_option("--form", form, "Tabulated form")->check(CLI::IsMember({"a", "b"}));
	common(bch);

	auto *zas = app.add_subcommand("zassenhaus", "Print Zassenhaus exponents C2..CN");
	zas->add_option("--order", c.order, "Highest degree")->required();
	zas->add_option("--source", c.source, "Series source")
	    ->check(CLI::IsMember({"classical", "paper"}));
	zas->add_option("--form", form, "Tabulated form")->check(CLI::IsMember({"a", "b"}));
	common(zas);

	auto *cmp = app.add_subcommand("compare", "Difference of two series up to an order");
	cmp->add_option("--what", c.what, "Series kind")
	    ->check(CLI::IsMember({"bch", "zassenhaus"}));
	cmp->add_option("--order", c.order, "Highest degree")->required();
	cmp->add_option("--a", c.a, "First source")->required();
	cmp->add_option("--b", c.b, "Second source")->required();
	cmp->add_option("--a-form", a_form, "Form of the first source")
	    ->check(CLI::IsMember({"a", "b"}));
	cmp->add_option("--b-form", b_form, "Form of the second source")
	    ->check(CLI::IsMember({"a", "b"}));
	common(cmp);

	auto *chk = app.add_subcommand("check", "Verify catalog identities exactly");
	auto *id_opt = chk->add_option("--id", c.id, "Identity id or glob pattern");
	auto *all_opt = chk->add_flag("--all", c.all, "Run the whole catalog");
	id_opt->excludes(all_opt);
	chk->add_option("--model", model, "Evaluation model")
	    ->check(CLI::IsMember({"free", "matrix"}));
	chk->add_option("--dim", c.params.dim, "Matrix dimension");
	chk->add_option("--seed", c.params.seed, "Matrix fixture seed");
	auto *trunc_opt = chk->add_option("--trunc", c.params.trunc,
	                                  "Free-model truncation (default: minimum needed)");
	chk->add_option("--gens", c.params.gens, "Generator count for cor-7.2.1");
	chk->add_option("--n", c.params.lemma_n, "Infinitesimal count for lemma-6.0");
	chk->add_option("--m", c.params.lemma_m, "Exponent for lemma-6.0");
	chk->add_flag("--timing", c.timing, "Report elapsed time per check");
	common(chk);

	auto *hall = app.add_subcommand("hall", "Print the Hall (Lyndon) basis in one degree");
	hall->add_option("--gens", c.gens, "Generator count")->required();
	hall->add_option("--degree", c.degree, "Degree")->required();
	common(hall);

	auto *ld = app.add_subcommand("logderiv",
	                              "Coefficients of the logarithmic-derivative series");
	ld->add_option("--side", side, "left or right")
	    ->check(CLI::IsMember({"left", "right"}));
	ld->add_option("--order", c.order, "Highest power p")->required();
	common(ld);

	try
	{
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
		if (chk->parsed() && !c.all && c.id.empty())
			throw CLI::RequiredError("--id or --all");
	}
	catch (CLI::CallForHelp const &)
	{
		out << app.help();
		return 0;
	}
	catch (CLI::ParseError const &e)
	{
		err << "bchz: " << e.what() << "\n\n" << app.help();
		return 2;
	}

	c.command = app.get_subcommands().front()->get_name();
	c.format = format == "json" ? Format::json : Format::text;
	c.model = model == "matrix" ? Model::matrix : Model::free;
	c.side = side == "right" ? Side::right : Side::left;
	c.form = detail::parse_form(form);
	c.a_form = detail::parse_form(a_form);
	c.b_form = detail::parse_form(b_form);
	c.trunc_given = trunc_opt->count() > 0;

	detail::CommandResult r;
	try
	{
		if (c.command == "bch" || c.command == "zassenhaus")
			r = detail::run_series(c);
		else if (c.command == "compare")
			r = detail::run_compare(c);
		else if (c.command == "check")
			r = detail::run_check(c);
		else if (c.command == "hall")
			r = detail::run_hall(c);
		else
			r = detail::run_logderiv(c);
	}
	catch (Error const &e)
	{
		err << "bchz: " << e.what() << "\n";
		return 2;
	}

	err << r.diag;
	if (c.output.empty())
		out << r.text;
	else
	{
		std::ofstream f(c.output, std::ios::binary);
		if (!f)
		{
			err << "bchz: cannot write " << c.output << "\n";
			return 2;
		}
		f << r.text;
	}
	return r.code;
}

} // namespace bchz

#endif
