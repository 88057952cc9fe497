#pragma once

#include "bol/catalog.hpp"
#include "bol/levi.hpp"

#include "json.hpp"
#include <fmt/format.h>

#include <optional>
#include <string>
#include <vector>

namespace bol::report {

using Json = nlohmann::ordered_json;

/// Process exit statuses; each failure class has its own value.
enum ExitStatus : int
{
	success = 0,
	axiom_failure = 1,
	parse_error = 2,
	precondition_violation = 3,
	structural_anomaly = 4,
	usage_error = 5,
};

struct Options
{
	bool series = false;
	bool radical = false;
	bool levi = false;
	bool compare = false;
	bool force = false;
};

/// Everything a report shows. Sections that were not requested, or that were
/// skipped, stay empty.
struct Report
{
	BolAlgebra algebra;
	AxiomReport axioms;
	Subspace product_space;
	Subspace ternary_space;
	std::optional<SeriesReport> series;
	std::optional<RadicalCertificate> radical;
	std::optional<LeviResult> levi;
	std::optional<catalog::Claims> claims;
	std::optional<LeviChecks> claimed_split;
	std::string claimed_split_error;
	bool want_series = false, want_radical = false, want_levi = false, want_compare = false;
	std::vector<std::string> warnings;
	std::optional<std::string> anomaly;

	int exit_status() const
	{
		if (anomaly)
			return structural_anomaly;
		return axioms.all_pass() ? success : axiom_failure;
	}
};

/// Claims attached to an algebra exported from the catalog, located through
/// its "catalog-id" and "catalog-params" metadata.
inline std::optional<catalog::Claims> claims_for(BolAlgebra const &V)
{
	auto const &meta = V.metadata();
	auto id = meta.find("catalog-id");
	if (id == meta.end())
		return std::nullopt;
	catalog::Parameters params;
	if (auto p = meta.find("catalog-params"); p != meta.end() && !p->second.empty())
	{
		std::string s = p->second;
		std::size_t start = 0;
		for (;;)
		{
			auto comma = s.find(',', start);
			std::string item = s.substr(start, comma == std::string::npos ? comma : comma - start);
			auto eq = item.find('=');
			if (eq == std::string::npos)
				throw MalformedInput("malformed catalog-params entry '" + item + "'");
			params[item.substr(0, eq)] = parse_scalar(item.substr(eq + 1));
			if (comma == std::string::npos)
				break;
			start = comma + 1;
		}
	}
	try
	{
		return catalog::get(id->second, params).claims;
	}
	catch (Error const &)
	{
		return std::nullopt;
	}
}

inline Report build(BolAlgebra const &V, Options const &opt)
{
	Report r;
	r.algebra = V;
	bool const any = opt.series || opt.radical || opt.levi;
	r.want_series = opt.series || !any;
	r.want_radical = opt.radical || !any;
	r.want_levi = opt.levi || !any;
	r.want_compare = opt.compare;

	std::size_t const n = V.dim();
	Subspace const full = Subspace::full(n);
	r.axioms = check_axioms(V);
	r.product_space = subspace_product(V, full, full);
	r.ternary_space = trilinear_span(V, full, full, full);
	if (opt.compare)
		r.claims = claims_for(V);

	if (opt.compare && r.claims)
	{
		Subspace cr = Subspace::span(r.claims->radical, n);
		Subspace cs = Subspace::span(r.claims->complement, n);
		try
		{
			r.claimed_split = verify_levi(V, cs, cr);
		}
		catch (Error const &e)
		{
			r.claimed_split_error = e.what();
		}
	}

	if (!r.axioms.all_pass() && !opt.force)
	{
		r.warnings.push_back("algebra fails the Bol identities; structure computations "
		                     "skipped (use --force to run them anyway)");
		return r;
	}
	if (!r.axioms.all_pass())
		r.warnings.push_back("algebra fails the Bol identities; structure computed because "
		                     "of --force");

	if (r.want_series)
		r.series = weak_derived_series(V, full);
	try
	{
		if (r.want_radical || r.want_levi || r.want_compare)
			r.radical = weak_radical(V);
		if (r.want_levi || r.want_compare)
			r.levi = levi_complement(V);
	}
	catch (StructuralAnomaly const &e)
	{
		r.anomaly = e.what();
	}
	catch (InvalidAlgebra const &e)
	{
		r.warnings.push_back(std::string("Levi search refused: ") + e.what());
	}
	return r;
}

/// Claimed generators exactly as listed, e.g. "<e1+e2, e2>".
inline std::string claimed_text(std::vector<Vector> const &gens)
{
	if (gens.empty())
		return "0";
	std::string s = "<";
	for (std::size_t i = 0; i < gens.size(); ++i)
		s += (i ? ", " : "") + render_vector(gens[i]);
	return s + ">";
}

// ---------------------------------------------------------------------------
// JSON

inline Json vector_json(Vector const &v)
{
	Json a = Json::array();
	for (auto const &x : v)
		a.push_back(to_string(x));
	return a;
}

inline Json subspace_json(Subspace const &S)
{
	Json basis = Json::array();
	for (auto const &v : S.basis_vectors())
		basis.push_back(vector_json(v));
	return Json{{"dim", S.dim()}, {"basis", basis}, {"text", render_subspace(S)}};
}

inline Json series_json(SeriesReport const &s)
{
	Json chain = Json::array();
	for (auto const &X : s.chain)
		chain.push_back(subspace_json(X));
	return Json{{"start", subspace_json(s.start)},
	            {"chain", chain},
	            {"stabilization_index", s.stabilization_index},
	            {"weakly_solvable", s.weakly_solvable}};
}

inline Json checks_json(LeviChecks const &c)
{
	return Json{{"subalgebra", c.subalgebra},
	            {"trivial_intersection", c.trivial_intersection},
	            {"full_sum", c.full_sum},
	            {"preserves_operations", c.preserves_operations}};
}

inline Json to_json(Report const &r)
{
	Json j;
	j["dim"] = r.algebra.dim();

	Json ax;
	ax["all_pass"] = r.axioms.all_pass();
	for (auto const &v : r.axioms.verdicts)
	{
		Json e{{"pass", v.pass}};
		if (!v.pass)
		{
			Json w = Json::array();
			for (auto i : v.witness)
				w.push_back(i + 1);
			e["witness"] = w;
			e["residual"] = vector_json(v.residual);
		}
		ax[identity_name(v.identity)] = e;
	}
	j["axioms"] = ax;
	j["products"] = Json{{"VV", subspace_json(r.product_space)},
	                     {"VVV", subspace_json(r.ternary_space)}};

	j["series"] = r.series ? series_json(*r.series) : Json(nullptr);

	if (r.radical)
	{
		auto const &c = *r.radical;
		Json summands = Json::array();
		for (auto const &S : c.summands)
			summands.push_back(subspace_json(S));
		j["radical"] = Json{{"radical", subspace_json(c.radical)},
		                    {"summands", summands},
		                    {"series", series_json(c.series)},
		                    {"quotient_dim", c.quotient_dim},
		                    {"quotient_semisimple", c.quotient_semisimple},
		                    {"exhaustive", c.exhaustive},
		                    {"semisimple", c.radical.is_zero()},
		                    {"notes", c.notes}};
	}
	else if (r.anomaly)
		j["radical"] = Json{{"error", "structural-anomaly"}, {"message", *r.anomaly}};
	else
		j["radical"] = nullptr;

	if (r.levi)
	{
		auto const &l = *r.levi;
		Json grid = nullptr;
		if (!l.grid.values.empty())
		{
			Json vals = Json::array();
			for (auto const &v : l.grid.values)
				vals.push_back(to_string(v));
			grid = Json{{"values", vals},
			            {"max_candidates", l.grid.max_candidates},
			            {"evaluated", l.grid.evaluated},
			            {"truncated", l.grid.truncated}};
		}
		j["levi"] = Json{{"found", l.found},
		                 {"method", l.method},
		                 {"radical", subspace_json(l.radical)},
		                 {"complement", subspace_json(l.complement)},
		                 {"checks", checks_json(l.checks)},
		                 {"dimension_identity",
		                  {{"dim_v", r.algebra.dim()},
		                   {"dim_radical", l.radical.dim()},
		                   {"dim_complement", l.complement.dim()},
		                   {"holds", l.radical.dim() + l.complement.dim() == r.algebra.dim()}}},
		                 {"diagnosis", l.diagnosis},
		                 {"grid", grid}};
	}
	else
		j["levi"] = nullptr;

	if (r.want_compare && r.claims)
	{
		std::size_t const n = r.algebra.dim();
		auto const &c = *r.claims;
		auto row = [&](std::vector<Vector> const &claimed, std::optional<Subspace> computed) {
			Json gens = Json::array();
			for (auto const &v : claimed)
				gens.push_back(vector_json(v));
			Subspace cs = Subspace::span(claimed, n);
			Json out{{"claimed", gens}, {"claimed_text", claimed_text(claimed)}};
			out["computed"] = computed ? subspace_json(*computed) : Json(nullptr);
			out["match"] = computed ? Json(*computed == cs) : Json(nullptr);
			return out;
		};
		std::optional<Subspace> rv, smv;
		if (r.radical)
			rv = r.radical->radical;
		if (r.levi && r.levi->found)
			smv = r.levi->complement;
		Json pc{{"VV", row(c.product_space, r.product_space)},
		        {"RV", row(c.radical, rv)},
		        {"SMV", row(c.complement, smv)},
		        {"homogeneous", c.homogeneous},
		        {"levi", c.levi},
		        {"note", c.note}};
		if (r.claimed_split)
			pc["claimed_splitting"] = checks_json(*r.claimed_split);
		else
			pc["claimed_splitting"] = Json{{"error", r.claimed_split_error}};
		j["paper_claims"] = pc;
	}
	else
		j["paper_claims"] = nullptr;

	j["warnings"] = r.warnings;
	return j;
}

// ---------------------------------------------------------------------------
// Text

/// "V", "0" or the canonical basis.
inline std::string named_subspace(Subspace const &S)
{
	if (S.is_full() && !S.is_zero())
		return "V";
	return render_subspace(S);
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }
inline std::string ok(bool b) { return b ? "ok" : "FAILED"; }

inline std::string render_axioms(AxiomReport const &a)
{
	std::string out = "axioms:\n";
	for (auto const &v : a.verdicts)
	{
		if (v.pass)
			out += fmt::format("  {}  pass\n", identity_name(v.identity));
		else
			out += fmt::format("  {}  FAIL at {}  residual {}\n", identity_name(v.identity),
			                   v.witness_text(), render_vector(v.residual));
	}
	return out;
}

inline std::string render_series(SeriesReport const &s, std::string const &indent)
{
	std::string out = fmt::format("{}k  dim  subspace\n", indent);
	out += fmt::format("{}{:<2} {:<4} {}\n", indent, 0, s.start.dim(), render_subspace(s.start));
	for (std::size_t k = 0; k < s.chain.size(); ++k)
		out += fmt::format("{}{:<2} {:<4} {}\n", indent, k + 1, s.chain[k].dim(),
		                   render_subspace(s.chain[k]));
	out += fmt::format("{}weakly solvable: {} (stabilizes at k = {})\n", indent,
	                   yes_no(s.weakly_solvable), s.stabilization_index);
	return out;
}

inline std::string render_checks(LeviChecks const &c, std::string const &indent)
{
	return fmt::format("{}subalgebra: {}\n{}S ∩ R = 0: {}\n{}S + R = V: {}\n"
	                   "{}projection S → V/R is an isomorphism: {}\n",
	                   indent, ok(c.subalgebra), indent, ok(c.trivial_intersection), indent,
	                   ok(c.full_sum), indent, ok(c.preserves_operations));
}

inline std::string to_text(Report const &r)
{
	std::size_t const n = r.algebra.dim();
	std::string out;
	out += fmt::format("algebra: {} (dim {})\n",
	                   r.algebra.label().empty() ? "(unnamed)" : r.algebra.label(), n);
	out += render_axioms(r.axioms);
	out += "products:\n";
	out += fmt::format("  V·V     = {}  (dim {})\n", render_subspace(r.product_space),
	                   r.product_space.dim());
	out += fmt::format("  (V,V,V) = {}  (dim {})\n", render_subspace(r.ternary_space),
	                   r.ternary_space.dim());
	for (auto const &w : r.warnings)
		out += "warning: " + w + "\n";

	if (r.series)
	{
		out += "weak derived series of V:\n";
		out += render_series(*r.series, "  ");
	}
	if (r.anomaly)
		out += "STRUCTURAL ANOMALY: " + *r.anomaly + "\n";
	if (r.radical && r.want_radical)
	{
		auto const &c = *r.radical;
		out += "weak radical:\n";
		out += fmt::format("  RV = {}  (dim {})\n", render_subspace(c.radical), c.radical.dim());
		out += "  summands:";
		if (c.summands.empty())
			out += " none";
		for (auto const &S : c.summands)
			out += " " + render_subspace(S);
		out += "\n  series of RV:\n" + render_series(c.series, "    ");
		out += fmt::format("  quotient V/RV: dim {}, semisimple: {}\n", c.quotient_dim,
		                   yes_no(c.quotient_semisimple));
		out += fmt::format("  exhaustive: {}\n", yes_no(c.exhaustive));
		out += fmt::format("  semisimple (RV = 0): {}\n", yes_no(c.radical.is_zero()));
		out += "  notes: " + c.notes + "\n";
	}
	if (r.levi && r.want_levi)
	{
		auto const &l = *r.levi;
		out += "levi decomposition:\n";
		out += fmt::format("  radical    RV  = {}\n", render_subspace(l.radical));
		out += fmt::format("  complement SMV = {}\n", render_subspace(l.complement));
		out += fmt::format("  found: {} (method: {})\n", yes_no(l.found), l.method);
		out += render_checks(l.checks, "  ");
		if (l.found)
			out += fmt::format("  dim V = dim RV + dim SMV: {} = {} + {}\n", n, l.radical.dim(),
			                   l.complement.dim());
		if (!l.diagnosis.empty())
			out += "  diagnosis: " + l.diagnosis + "\n";
	}
	if (r.want_compare)
	{
		out += "comparison with claimed values:\n";
		if (!r.claims)
			out += "  no claimed values recorded for this algebra\n";
		else
		{
			auto const &c = *r.claims;
			out += fmt::format("  {:<6} {:<24} {:<24} {}\n", "", "computed", "claimed", "");
			auto row = [&](char const *name, std::optional<Subspace> computed,
			               std::vector<Vector> const &claimed) {
				std::string comp = computed ? named_subspace(*computed) : "(not computed)";
				std::string marker =
				    !computed ? "" : *computed == Subspace::span(claimed, n) ? "match" : "<< DIFFERS";
				out += fmt::format("  {:<6} {:<24} {:<24} {}\n", name, comp, claimed_text(claimed),
				                   marker);
			};
			row("V·V", r.product_space, c.product_space);
			row("RV", r.radical ? std::optional(r.radical->radical) : std::nullopt, c.radical);
			row("SMV",
			    r.levi && r.levi->found ? std::optional(r.levi->complement) : std::nullopt,
			    c.complement);
			out += "  claimed splitting: " + c.levi + "\n";
			if (r.claimed_split)
			{
				out += "  checking the claimed RV and SMV:\n";
				out += render_checks(*r.claimed_split, "    ");
			}
			else
				out += "  claimed RV and SMV could not be checked: " + r.claimed_split_error + "\n";
			out += "  homogeneous (claimed): " + c.homogeneous + "\n";
			out += "  note: " + c.note + "\n";
		}
	}
	return out;
}

} // namespace bol::report
