#pragma once

#include "bol/boltext.hpp"
#include "bol/report.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace bol::cli {

using report::ExitStatus;

namespace detail {

struct InputError : Error
{
	using Error::Error;
};

inline std::string read_input(std::string const &path, std::istream &in)
{
	if (path == "-")
		return std::string(std::istreambuf_iterator<char>(in), {});
	std::ifstream file(path, std::ios::binary);
	if (!file)
		throw InputError("cannot open '" + path + "'");
	return std::string(std::istreambuf_iterator<char>(file), {});
}

inline catalog::Parameters parse_params(std::vector<std::string> const &items)
{
	catalog::Parameters params;
	for (auto const &item : items)
	{
		auto eq = item.find('=');
		if (eq == std::string::npos || eq == 0)
			throw PreconditionError("parameter '" + item + "' is not of the form name=value");
		params[item.substr(0, eq)] = parse_scalar(item.substr(eq + 1));
	}
	return params;
}

inline std::string params_text(catalog::Parameters const &params)
{
	std::string s;
	for (auto const &[k, v] : params)
		s += (s.empty() ? "" : ",") + k + "=" + to_string(v);
	return s;
}

/// Algebra as exported: catalog id and parameters are recorded as metadata so
/// that reports can find the entry's claims again.
inline BolAlgebra exportable(catalog::Entry const &e)
{
	BolAlgebra V = e.algebra.with_metadata("catalog-id", e.id);
	if (!e.parameters.empty())
		V = V.with_metadata("catalog-params", params_text(e.parameters));
	return V;
}

inline int run_check(std::string const &path, std::istream &in, std::ostream &out)
{
	BolAlgebra V = boltext::parse(read_input(path, in));
	auto rep = check_axioms(V);
	out << "algebra: " << (V.label().empty() ? "(unnamed)" : V.label()) << " (dim " << V.dim()
	    << ")\n";
	out << report::render_axioms(rep);
	out << (rep.all_pass() ? "result: Bol identities hold\n" : "result: Bol identities FAIL\n");
	return rep.all_pass() ? ExitStatus::success : ExitStatus::axiom_failure;
}

inline int run_torsion(std::string const &path, bool lenient, std::istream &in,
                       std::ostream &out)
{
	auto data = boltext::parse_torsion(read_input(path, in));
	auto [V, rep] = from_torsion(data, lenient ? DerivativeCheck::lenient : DerivativeCheck::strict);
	out << report::render_axioms(rep);
	out << boltext::serialize(V);
	return rep.all_pass() ? ExitStatus::success : ExitStatus::axiom_failure;
}

inline int run_report(std::string const &path, report::Options const &opt, bool json,
                      std::istream &in, std::ostream &out)
{
	BolAlgebra V = boltext::parse(read_input(path, in));
	auto r = report::build(V, opt);
	if (json)
		out << report::to_json(r).dump(2) << "\n";
	else
		out << report::to_text(r);
	return r.exit_status();
}

inline int run_catalog_list(std::ostream &out)
{
	for (auto const &s : catalog::list())
		out << fmt::format("{:<16} dim {:<2} {:<6} {}\n", s.id, s.dim,
		                   s.parameters.empty() ? "" : "(" + s.parameters + ")", s.axiom_status);
	return ExitStatus::success;
}

inline catalog::Entry entry_for_show(std::string const &id, catalog::Parameters params,
                                     bool &representative)
{
	representative = false;
	if (params.empty() && id == "type-iv")
	{
		params = {{"x", Scalar(0)}, {"p", Scalar(0)}};
		representative = true;
	}
	else if (params.empty() && id == "zero-n")
	{
		params = {{"n", Scalar(3)}};
		representative = true;
	}
	return catalog::get(id, params);
}

inline int run_catalog_show(std::string const &id, catalog::Parameters const &params,
                            std::ostream &out)
{
	bool representative = false;
	auto e = entry_for_show(id, params, representative);
	out << "id: " << e.id << "\n";
	out << "dim: " << e.algebra.dim() << "\n";
	if (!e.parameters.empty())
		out << "parameters: " << params_text(e.parameters)
		    << (representative ? " (representative values)" : "") << "\n";
	if (!e.parameter_constraint.empty())
		out << "parameter constraint: " << e.parameter_constraint << "\n";
	out << "provenance: " << e.provenance << "\n";
	for (auto const &[k, v] : e.algebra.metadata())
		out << "meta " << k << ": " << v << "\n";
	out << report::render_axioms(check_axioms(e.algebra));
	if (e.claims)
	{
		auto const &c = *e.claims;
		out << "claimed values:\n";
		out << "  V·V = " << report::claimed_text(c.product_space) << "\n";
		out << "  RV  = " << report::claimed_text(c.radical) << "\n";
		out << "  SMV = " << report::claimed_text(c.complement) << "\n";
		out << "  homogeneous: " << c.homogeneous << "\n";
		out << "  splitting: " << c.levi << "\n";
		out << "  note: " << c.note << "\n";
	}
	out << "structure constants:\n" << boltext::serialize(e.algebra);
	return ExitStatus::success;
}

inline int run_catalog_export(std::string const &id, catalog::Parameters const &params,
                              std::ostream &out)
{
	out << boltext::serialize(exportable(catalog::get(id, params)));
	return ExitStatus::success;
}

} // namespace detail

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`; the return value is the process exit status.
inline int run(std::vector<std::string> args, std::istream &in, std::ostream &out,
               std::ostream &err)
{
	CLI::App app{"Structure theory of finite-dimensional Bol algebras over Q", "bolalg"};
	app.require_subcommand(1);

	std::string file;
	auto *check = app.add_subcommand("check", "Check the Bol identities B1-B4");
	check->add_option("file", file, "boltext file, or - for standard input")->required();

	bool lenient = false;
	auto *tors = app.add_subcommand("torsion", "Build the candidate algebra from torsion data");
	tors->add_option("file", file, "boltext file with T and DT records, or -")->required();
	tors->add_flag("--lenient", lenient, "accept a derivative not antisymmetric in j, k");

	report::Options opt;
	bool json = false;
	auto *rep = app.add_subcommand("report", "Structure report: products, series, radical, Levi");
	rep->add_option("file", file, "boltext file, or - for standard input")->required();
	rep->add_flag("--series", opt.series, "weak derived series of V");
	rep->add_flag("--radical", opt.radical, "weak radical with certificate");
	rep->add_flag("--levi", opt.levi, "Levi-type decomposition");
	rep->add_flag("--paper-compare", opt.compare,
	              "show claimed structure values next to the computed ones");
	rep->add_flag("--json", json, "machine-readable output");
	rep->add_flag("--force", opt.force, "run structure computations even if axioms fail");

	auto *cat = app.add_subcommand("catalog", "Built-in algebras");
	cat->require_subcommand(1);
	std::string id;
	std::vector<std::string> param_items;
	auto *cat_list = cat->add_subcommand("list", "List catalog entries");
	auto *cat_show = cat->add_subcommand("show", "Describe an entry");
	cat_show->add_option("id", id)->required();
	cat_show->add_option("--param", param_items, "family parameter, name=value");
	auto *cat_export = cat->add_subcommand("export", "Print an entry in boltext format");
	cat_export->add_option("id", id)->required();
	cat_export->add_option("--param", param_items, "family parameter, name=value");

	std::reverse(args.begin(), args.end());
	try
	{
		app.parse(args);
	}
	catch (CLI::ParseError const &e)
	{
		int code = app.exit(e, out, err);
		return code == 0 ? ExitStatus::success : ExitStatus::usage_error;
	}

	try
	{
		if (*check)
			return detail::run_check(file, in, out);
		if (*tors)
			return detail::run_torsion(file, lenient, in, out);
		if (*rep)
			return detail::run_report(file, opt, json, in, out);
		if (*cat_list)
			return detail::run_catalog_list(out);
		if (*cat_show)
			return detail::run_catalog_show(id, detail::parse_params(param_items), out);
		if (*cat_export)
			return detail::run_catalog_export(id, detail::parse_params(param_items), out);
	}
	catch (detail::InputError const &e)
	{
		err << "error: " << e.what() << "\n";
		return ExitStatus::parse_error;
	}
	catch (ParseError const &e)
	{
		err << "parse error: " << e.what() << "\n";
		return ExitStatus::parse_error;
	}
	catch (UnknownEntry const &e)
	{
		err << "error: " << e.what() << "\n";
		return ExitStatus::usage_error;
	}
	catch (StructuralAnomaly const &e)
	{
		err << "structural anomaly: " << e.what() << "\n";
		return ExitStatus::structural_anomaly;
	}
	catch (MalformedInput const &e)
	{
		// Shape problems surfacing from a parsed document, e.g. a rational
		// parameter that does not parse.
		err << "error: " << e.what() << "\n";
		return ExitStatus::precondition_violation;
	}
	catch (Error const &e)
	{
		err << "error: " << e.what() << "\n";
		return ExitStatus::precondition_violation;
	}
	return ExitStatus::usage_error;
}

inline int run(int argc, char **argv)
{
	std::vector<std::string> args(argv + 1, argv + argc);
	return run(std::move(args), std::cin, std::cout, std::cerr);
}

} // namespace bol::cli
