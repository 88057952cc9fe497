#pragma once

#include "bol/axioms.hpp"
#include "bol/subspace.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bol::catalog {

/// Structure values asserted by the source an entry was taken from, kept
/// verbatim so reports can put them next to recomputed values.
struct Claims
{
	/// Generators as written in the source (not canonicalized).
	std::vector<Vector> product_space; ///< V·V
	std::vector<Vector> radical;       ///< RV
	std::vector<Vector> complement;    ///< SMV
	std::string homogeneous;
	std::string levi;
	std::string note;
};

using Parameters = std::map<std::string, Scalar>;

struct Entry
{
	std::string id;
	BolAlgebra algebra;
	std::optional<Claims> claims;
	std::string provenance;
	Parameters parameters;
	std::string parameter_constraint;
};

struct Summary
{
	std::string id;
	std::string dim;
	std::string parameters;
	std::string axiom_status;
	std::string description;
};

namespace detail {

inline Vector vec(std::initializer_list<long> xs)
{
	Vector v;
	for (long x : xs)
		v.push_back(Scalar(x));
	return v;
}

inline Scalar require_param(Parameters const &params, std::string const &id,
                            std::string const &name)
{
	auto it = params.find(name);
	if (it == params.end())
		throw PreconditionError("catalog entry '" + id + "' requires parameter '" + name + "'");
	return it->second;
}

inline void reject_extra(Parameters const &params, std::string const &id,
                         std::vector<std::string> const &allowed)
{
	for (auto const &[k, v] : params)
		if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
			throw PreconditionError("catalog entry '" + id + "' has no parameter '" + k + "'");
}

inline std::string const zero_fill_note = "Structure constants not listed are zero.";

inline Tensor3 sl2_bracket()
{
	// basis e, f, h: [e,f] = h, [h,e] = 2e, [h,f] = -2f
	Tensor3 c(3);
	auto set = [&](std::size_t i, std::size_t j, std::size_t k, long v) {
		c(i, j, k) = v;
		c(i, k, j) = -v;
	};
	set(2, 0, 1, 1);
	set(0, 2, 0, 2);
	set(1, 2, 1, -2);
	return c;
}

inline BolAlgebra type_i()
{
	Tensor3 T(3);
	// e1·e3 = e1 + e2, e2·e3 = e2
	T(0, 0, 2) = 1;
	T(1, 0, 2) = 1;
	T(1, 1, 2) = 1;
	T(0, 2, 0) = -1;
	T(1, 2, 0) = -1;
	T(1, 2, 1) = -1;
	return BolAlgebra(std::move(T), Tensor4(3), "type-i",
	                  {{"zero-fill", "true"}, {"homogeneous", "true (unverified)"}});
}

inline BolAlgebra type_iv(Scalar const &x, Scalar const &p)
{
	Tensor3 T(3);
	// e1·e3 = x e1 + p e2 + e3
	T(0, 0, 2) = x;
	T(1, 0, 2) = p;
	T(2, 0, 2) = 1;
	T(0, 2, 0) = -x;
	T(1, 2, 0) = -p;
	T(2, 2, 0) = -1;
	Tensor4 A(3);
	A(0, 0, 1, 2) = 1; // (e1,e2,e3) = e1
	A(0, 0, 2, 2) = 1; // (e1,e3,e3) = e1
	return BolAlgebra(std::move(T), std::move(A), "type-iv",
	                  {{"zero-fill", "true"},
	                   {"homogeneous", "false (claimed)"},
	                   {"x", to_string(x)},
	                   {"p", to_string(p)}});
}

} // namespace detail

inline Tensor3 sl2_bracket() { return detail::sl2_bracket(); }

/// Heisenberg algebra: [e1, e2] = e3.
inline Tensor3 heisenberg_bracket()
{
	Tensor3 c(3);
	c(2, 0, 1) = 1;
	c(2, 1, 0) = -1;
	return c;
}

/// Two-dimensional nonabelian Lie algebra: [e1, e2] = e2.
inline Tensor3 affine_line_bracket()
{
	Tensor3 c(2);
	c(1, 0, 1) = 1;
	c(1, 1, 0) = -1;
	return c;
}

inline std::vector<std::string> ids()
{
	return {"aff2-bol", "heisenberg-bol", "sl2-bol", "sl2-plus-type-i",
	        "type-i",   "type-iv",        "zero-n"};
}

/// Fully instantiated catalog entry. Throws UnknownEntry for an unknown id and
/// PreconditionError for missing, unexpected or invalid parameters.
inline Entry get(std::string const &id, Parameters const &params = {})
{
	using detail::vec;
	Entry e;
	e.id = id;
	e.parameters = params;
	if (id == "type-i")
	{
		detail::reject_extra(params, id, {});
		e.algebra = detail::type_i();
		e.provenance = "Type I of the classification of three-dimensional Bol algebras, "
		               "with vanishing ternary operation; worked example of a Levi-type "
		               "splitting. " +
		               detail::zero_fill_note;
		e.claims = Claims{{vec({1, 1, 0}), vec({0, 1, 0})},
		                  {vec({1, 1, 0}), vec({0, 1, 0})},
		                  {vec({0, 0, 1})},
		                  "true (unverified)",
		                  "V = <e1+e2, e2> ⊕ <e3>",
		                  "radical claimed as V·V; the complement is the quotient V/<e1+e2, e2>"};
	}
	else if (id == "type-iv")
	{
		detail::reject_extra(params, id, {"x", "p"});
		Scalar x = detail::require_param(params, id, "x");
		Scalar p = detail::require_param(params, id, "p");
		e.algebra = detail::type_iv(x, p);
		e.parameter_constraint = "x, p >= 0 (recorded, not enforced)";
		e.provenance = "Type IV of the classification of three-dimensional Bol algebras "
		               "(x, p rational); counterexample to a Levi-type splitting. " +
		               detail::zero_fill_note +
		               " Under that convention the table fails B2; this is a property of "
		               "the zero-filled table.";
		e.claims = Claims{{vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})},
		                  {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})},
		                  {vec({0, 1, 0}), vec({0, 0, 1})},
		                  "false",
		                  "RV ∩ SMV ≠ 0: the Levi-type splitting fails",
		                  "This Bol algebra is not homogeneous. The claimed RV (all of V) and "
		                  "SMV (dimension 2) are dimensionally inconsistent, since V/RV = 0."};
	}
	else if (id == "sl2-bol")
	{
		detail::reject_extra(params, id, {});
		e.algebra = from_lie_algebra(detail::sl2_bracket(), id);
		e.provenance = "Bol algebra of sl2 (basis e, f, h with [e,f] = h, [h,e] = 2e, "
		               "[h,f] = -2f): a·b = [a,b], (a,b,c) = [[a,b],c].";
	}
	else if (id == "heisenberg-bol")
	{
		detail::reject_extra(params, id, {});
		e.algebra = from_lie_algebra(heisenberg_bracket(), id);
		e.provenance = "Bol algebra of the Heisenberg Lie algebra [e1,e2] = e3.";
	}
	else if (id == "aff2-bol")
	{
		detail::reject_extra(params, id, {});
		e.algebra = from_lie_algebra(affine_line_bracket(), id);
		e.provenance = "Bol algebra of the two-dimensional nonabelian Lie algebra [e1,e2] = e2.";
	}
	else if (id == "sl2-plus-type-i")
	{
		detail::reject_extra(params, id, {});
		e.algebra = direct_sum(from_lie_algebra(detail::sl2_bracket()), detail::type_i(), id)
		                .with_metadata("zero-fill", "true");
		e.provenance = "Direct sum of sl2-bol (e1..e3) and type-i (e4..e6).";
	}
	else if (id == "zero-n")
	{
		detail::reject_extra(params, id, {"n"});
		Scalar n = detail::require_param(params, id, "n");
		if (n.get_den() != 1 || n < 0 || n > 32)
			throw PreconditionError("zero-n: n must be an integer between 0 and 32");
		e.algebra = BolAlgebra::zero(n.get_num().get_ui(), "zero-" + to_string(n));
		e.provenance = "Zero algebra: both operations vanish identically.";
	}
	else
		throw UnknownEntry("unknown catalog entry '" + id + "'");
	return e;
}

/// Deterministic summaries in alphabetical id order. Families are summarized
/// at representative parameters (type-iv at x = p = 0, zero-n at n = 3).
inline std::vector<Summary> list()
{
	std::vector<Summary> out;
	for (auto const &id : ids())
	{
		Parameters rep;
		std::string params;
		if (id == "type-iv")
		{
			rep = {{"x", Scalar(0)}, {"p", Scalar(0)}};
			params = "x, p";
		}
		else if (id == "zero-n")
		{
			rep = {{"n", Scalar(3)}};
			params = "n";
		}
		Entry e = get(id, rep);
		auto report = check_axioms(e.algebra);
		std::string status = "passes B1-B4";
		if (!report.all_pass())
		{
			// "fails B2 under zero-fill at (1,2,3); also B3 at ..."
			std::string const fill =
			    e.algebra.metadata().count("zero-fill") ? " under zero-fill" : "";
			status.clear();
			for (auto const &v : report.verdicts)
			{
				if (v.pass)
					continue;
				std::string at = std::string(identity_name(v.identity)) + " at " + v.witness_text();
				if (status.empty())
					status = std::string("fails ") + identity_name(v.identity) + fill + " at " + v.witness_text();
				else
					status += (status.find("; also ") == std::string::npos ? "; also " : ", ") + at;
			}
		}
		out.push_back({id, id == "zero-n" ? "n" : std::to_string(e.algebra.dim()), params,
		               status, e.provenance});
	}
	return out;
}

} // namespace bol::catalog
