// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact.

#include "bol/bol.hpp"
#include "bol/cli.hpp"

#include "../support/oracle.hpp"
#include "../support/random_algebras.hpp"

#include <functional>
#include <iostream>
#include <sstream>

using namespace bol;

namespace {

struct Outcome
{
	bool ok = true;
	std::string detail;

	void require(bool cond, std::string const &what)
	{
		if (!cond && ok)
		{
			ok = false;
			detail = what;
		}
	}
};

Vector v(std::initializer_list<long> xs)
{
	Vector out;
	for (long x : xs)
		out.push_back(Scalar(x));
	return out;
}

BolAlgebra type_i() { return catalog::get("type-i").algebra; }
BolAlgebra sl2() { return catalog::get("sl2-bol").algebra; }
BolAlgebra type_iv(Scalar x, Scalar p) { return catalog::get("type-iv", {{"x", x}, {"p", p}}).algebra; }

std::vector<std::pair<std::string, BolAlgebra>> passing_fixtures()
{
	std::vector<std::pair<std::string, BolAlgebra>> out;
	for (auto const &id : catalog::ids())
	{
		catalog::Parameters p;
		if (id == "type-iv")
			continue;
		if (id == "zero-n")
			p = {{"n", Scalar(3)}};
		out.emplace_back(id, catalog::get(id, p).algebra);
	}
	return out;
}

std::vector<Subspace> subspaces_pm1(std::size_t n)
{
	std::vector<Vector> vecs;
	std::size_t total = 1;
	for (std::size_t i = 0; i < n; ++i)
		total *= 3;
	for (std::size_t code = 1; code < total; ++code)
	{
		Vector x(n);
		std::size_t c = code;
		for (std::size_t i = 0; i < n; ++i, c /= 3)
			x[i] = static_cast<long>(c % 3) - 1;
		vecs.push_back(x);
	}
	std::vector<Subspace> out{Subspace::zero(n)};
	auto add = [&](Subspace S) {
		if (std::find(out.begin(), out.end(), S) == out.end())
			out.push_back(std::move(S));
	};
	for (std::size_t a = 0; a < vecs.size(); ++a)
		for (std::size_t b = a; b < vecs.size(); ++b)
			for (std::size_t c = b; c < vecs.size(); ++c)
				add(Subspace::span({vecs[a], vecs[b], vecs[c]}, n));
	return out;
}

BolAlgebra random_passing(testgen::Rng &rng, std::size_t n)
{
	for (;;)
	{
		auto V = testgen::random_bol(rng, n);
		if (check_axioms(V).all_pass())
			return V;
	}
}

// 1 ------------------------------------------------------------------------
Outcome axiom_suite()
{
	Outcome o;
	o.require(check_axioms(type_i()).all_pass(), "type-i fails an identity");
	o.require(check_axioms(from_lie_algebra(catalog::sl2_bracket())).all_pass(), "sl2 fails");
	o.require(check_axioms(from_lie_algebra(catalog::heisenberg_bracket())).all_pass(),
	          "heisenberg fails");
	o.require(check_axioms(from_lie_algebra(catalog::affine_line_bracket())).all_pass(),
	          "aff2 fails");
	auto r = check_axioms(type_iv(0, 0))[Identity::B2];
	o.require(!r.pass, "type-iv passes B2");
	o.require(r.witness == std::vector<std::size_t>{0, 1, 2}, "type-iv B2 witness " + r.witness_text());
	o.require(r.residual == v({1, 0, 0}), "type-iv B2 residual " + render_vector(r.residual));
	return o;
}

// 2 ------------------------------------------------------------------------
Outcome multilinearity()
{
	Outcome o;
	testgen::Rng rng(1002);
	for (auto const &[id, V] : passing_fixtures())
	{
		std::size_t const n = V.dim();
		for (int t = 0; t < 100; ++t)
		{
			std::vector<Vector> x;
			for (int i = 0; i < 5; ++i)
				x.push_back(testgen::random_vector(rng, n, 5));
			for (auto id2 : {Identity::B1, Identity::B2, Identity::B3, Identity::B4})
			{
				std::vector<Vector> args(x.begin(), x.begin() + identity_arity(id2));
				o.require(is_zero(identity_residual(V, id2, args)),
				          id + ": " + identity_name(id2) + " nonzero at a random tuple");
			}
			o.require(oracle::zero(oracle::b1(V, x[0])) &&
			              oracle::zero(oracle::b2(V, x[0], x[1], x[2])) &&
			              oracle::zero(oracle::b3(V, x[0], x[1], x[2], x[3])) &&
			              oracle::zero(oracle::b4(V, x[0], x[1], x[2], x[3], x[4])),
			          id + ": reference evaluation nonzero");
		}
	}
	return o;
}

// 3 ------------------------------------------------------------------------
Outcome product_space()
{
	Outcome o;
	auto full = Subspace::full(3);
	auto P = subspace_product(type_i(), full, full);
	o.require(P == Subspace::span({v({1, 1, 0}), v({0, 1, 0})}, 3), "V·V = " + render_subspace(P));
	o.require(render_subspace(P) == "<e1, e2>", "canonical basis " + render_subspace(P));
	o.require(P.contains(v({1, 1, 0})) && P.contains(v({0, 1, 0})), "membership");
	o.require(!P.contains(v({0, 0, 1})), "e3 in V·V");
	return o;
}

// 4 ------------------------------------------------------------------------
Outcome derived_series()
{
	Outcome o;
	auto s = weak_derived_series(type_i(), Subspace::full(3));
	o.require(s.chain.size() >= 1 && s.chain[0].is_zero() && s.weakly_solvable &&
	              s.stabilization_index == 1,
	          "type-i series");
	auto t = weak_derived_series(sl2(), Subspace::full(3));
	o.require(t.chain.size() == 1 && t.chain[0].is_full() && !t.weakly_solvable &&
	              t.stabilization_index == 0,
	          "sl2 series");
	testgen::Rng rng(1004);
	for (int i = 0; i < 50; ++i)
	{
		std::size_t const n = 1 + testgen::pick(rng, 3);
		auto V = random_passing(rng, n);
		auto I = ideal_closure(V, Subspace::line(testgen::random_vector(rng, n)));
		auto r = weak_derived_series(V, I);
		o.require(r.chain.size() <= I.dim() + 1 && r.stabilization_index <= I.dim(),
		          "series too long on " + render_subspace(I));
	}
	return o;
}

// 5 ------------------------------------------------------------------------
Outcome radical()
{
	Outcome o;
	o.require(weak_radical(type_i()).radical.is_full(), "type-i radical");
	o.require(weak_radical(sl2()).radical.is_zero() && is_semisimple(sl2()), "sl2 radical");
	auto c = weak_radical(direct_sum(sl2(), type_i()));
	auto block = Subspace::span({v({0, 0, 0, 1, 0, 0}), v({0, 0, 0, 0, 1, 0}),
	                             v({0, 0, 0, 0, 0, 1})},
	                            6);
	o.require(c.radical == block, "direct sum radical " + render_subspace(c.radical));
	o.require(c.quotient_semisimple, "quotient not semisimple");
	return o;
}

// 6 ------------------------------------------------------------------------
Outcome lattice_completeness()
{
	Outcome o;
	testgen::Rng rng(1006);
	std::vector<std::pair<std::string, BolAlgebra>> algebras{{"type-i", type_i()},
	                                                         {"sl2-bol", sl2()}};
	for (int i = 0; i < 20; ++i)
		algebras.emplace_back("random #" + std::to_string(i), random_passing(rng, 3));
	auto const candidates = subspaces_pm1(3);
	for (auto const &[name, V] : algebras)
	{
		auto lat = enumerate_ideals(V);
		o.require(lat.complete, name + ": enumeration not complete");
		for (auto const &S : candidates)
			if (is_ideal(V, S))
				o.require(lat.contains(S), name + ": missing ideal " + render_subspace(S));
	}
	return o;
}

// 7 ------------------------------------------------------------------------
Outcome levi()
{
	Outcome o;
	auto c = verify_levi(type_i(), Subspace::line(v({0, 0, 1})),
	                     Subspace::span({v({1, 1, 0}), v({0, 1, 0})}, 3));
	o.require(c.all(), "claimed type-i splitting fails a check");
	auto r = levi_complement(direct_sum(sl2(), type_i()));
	auto block = Subspace::span({v({1, 0, 0, 0, 0, 0}), v({0, 1, 0, 0, 0, 0}),
	                             v({0, 0, 1, 0, 0, 0})},
	                            6);
	o.require(r.found && r.complement == block, "complement " + render_subspace(r.complement));
	o.require(r.radical.dim() == 3 && r.complement.dim() == 3 &&
	              r.radical.dim() + r.complement.dim() == 6,
	          "dimension identity");
	return o;
}

// 8 ------------------------------------------------------------------------
Outcome quotient_soundness()
{
	Outcome o;
	testgen::Rng rng(1008);
	for (auto const &[id, V] : passing_fixtures())
	{
		std::size_t const n = V.dim();
		auto lat = enumerate_ideals(V);
		auto ideals = lat.ideals;
		for (auto const &f : lat.families)
			for (int k = 0; k < 3; ++k)
			{
				// sample members of the family
				Vector x(n, Scalar(0));
				if (f.kind == IdealFamily::Kind::lines)
				{
					for (auto const &b : f.block.basis_vectors())
						x = x + testgen::small_rational(rng) * b;
					if (!is_zero(x))
						ideals.push_back(Subspace::line(x));
				}
				else
				{
					auto gens = f.core.basis_vectors();
					for (std::size_t g = 0; gens.size() + 1 < n && g < n; ++g)
						gens.push_back(testgen::random_vector(rng, n));
					auto H = Subspace::span(gens, n);
					if (H.dim() + 1 == n && H.contains(f.core))
						ideals.push_back(H);
				}
			}
		for (auto const &I : ideals)
		{
			o.require(is_ideal(V, I), id + ": lattice member " + render_subspace(I) + " not an ideal");
			if (!o.ok)
				return o;
			auto Q = quotient(V, I);
			o.require(check_axioms(Q.algebra).all_pass(), id + " / " + render_subspace(I) + " fails");
			std::size_t const m = Q.algebra.dim();
			auto shift = [&](Vector const &q) {
				Vector x = Q.lift(q);
				for (auto const &b : I.basis_vectors())
					x = x + testgen::small_rational(rng) * b;
				return x;
			};
			for (std::size_t a = 0; a < m; ++a)
				for (std::size_t b = 0; b < m; ++b)
					for (std::size_t c = 0; c < m; ++c)
					{
						auto ea = unit_vector(m, a), eb = unit_vector(m, b), ec = unit_vector(m, c);
						auto xa = shift(ea), xb = shift(eb), xc = shift(ec);
						o.require(Q.projection(bilinear_product(V, xa, xb)) ==
						              bilinear_product(Q.algebra, ea, eb),
						          id + ": binary constants depend on representatives");
						o.require(Q.projection(trilinear_product(V, xa, xb, xc)) ==
						              trilinear_product(Q.algebra, ea, eb, ec),
						          id + ": ternary constants depend on representatives");
					}
		}
	}
	return o;
}

// 9 ------------------------------------------------------------------------
Outcome geometry_bridge()
{
	Outcome o;
	for (auto const &id : catalog::ids())
	{
		std::vector<catalog::Parameters> params{{}};
		if (id == "type-iv")
			params = {{{"x", Scalar(0)}, {"p", Scalar(0)}}, {{"x", Scalar(1)}, {"p", Scalar(1)}},
			          {{"x", Scalar(3, 2)}, {"p", Scalar(-2)}}};
		if (id == "zero-n")
			params = {{{"n", Scalar(0)}}, {{"n", Scalar(3)}}};
		for (auto const &p : params)
		{
			auto V = catalog::get(id, p).algebra;
			auto d = torsion_of(V);
			auto mode = has_antisymmetric_derivative(d) ? DerivativeCheck::strict
			                                            : DerivativeCheck::lenient;
			o.require(from_torsion(d, mode).first.same_structure(V), id + ": round trip differs");
		}
	}
	auto [W, rep] = from_torsion({type_i().binary(), Tensor4(3)});
	auto x = trilinear_product(W, v({1, 0, 0}), v({0, 0, 1}), v({0, 0, 1}));
	o.require(x == v({1, 2, 0}), "(e1,e3,e3) = " + render_vector(x));
	return o;
}

// 10 -----------------------------------------------------------------------
struct Run
{
	int status;
	std::string out;
};

Run cli(std::vector<std::string> args, std::string const &input = {})
{
	std::istringstream in(input);
	std::ostringstream out, err;
	int status = cli::run(std::move(args), in, out, err);
	return {status, out.str()};
}

Outcome cli_contract()
{
	Outcome o;
	for (auto const &id : catalog::ids())
	{
		std::vector<std::string> args{"catalog", "export", id};
		if (id == "type-iv")
			args.insert(args.end(), {"--param", "x=1", "--param", "p=1"});
		if (id == "zero-n")
			args.insert(args.end(), {"--param", "n=3"});
		auto e = cli(args);
		o.require(e.status == 0, id + ": export failed");
		auto V = boltext::parse(e.out);
		o.require(boltext::serialize(V) == e.out, id + ": serialization not canonical");
		o.require(boltext::parse(boltext::serialize(V)) == V, id + ": round trip lossy");

		// library entry against the exported text, metadata aside
		catalog::Parameters p;
		if (id == "type-iv")
			p = {{"x", Scalar(1)}, {"p", Scalar(1)}};
		if (id == "zero-n")
			p = {{"n", Scalar(3)}};
		o.require(V.same_structure(catalog::get(id, p).algebra), id + ": export changes constants");

		auto c = cli({"check", "-"}, e.out);
		int want = id == "type-iv" ? cli::ExitStatus::axiom_failure : cli::ExitStatus::success;
		o.require(c.status == want, id + ": check exit " + std::to_string(c.status));
		if (id == "type-iv")
			o.require(c.out.find("B2  FAIL at (1,2,3)") != std::string::npos, "type-iv witness");
	}
	o.require(cli({"check", "-"}, "garbage\n").status == cli::ExitStatus::parse_error,
	          "garbage not a parse error");

	auto ti = cli({"catalog", "export", "type-i"}).out;
	auto r = cli({"report", "-", "--paper-compare"}, ti);
	auto has = [&](std::string const &s) { return r.out.find(s) != std::string::npos; };
	o.require(has("RV     V                        <e1+e2, e2>              << DIFFERS"),
	          "RV comparison row");
	o.require(has("SMV    0                        <e3>                     << DIFFERS"),
	          "SMV comparison row");

	for (auto const &id : {"type-i", "sl2-plus-type-i"})
	{
		auto text = cli({"catalog", "export", id}).out;
		auto a = cli({"report", "-", "--json", "--paper-compare"}, text);
		auto b = cli({"report", "-", "--json", "--paper-compare"}, text);
		o.require(a.status == 0 && a.out == b.out && !a.out.empty(),
		          std::string(id) + ": json differs between runs");
	}
	return o;
}

} // namespace

int main()
{
	std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
	    {"axiom suite", axiom_suite},
	    {"multilinearity oracle", multilinearity},
	    {"product space of type-i", product_space},
	    {"weak derived series", derived_series},
	    {"weak radical", radical},
	    {"ideal lattice completeness", lattice_completeness},
	    {"Levi decomposition", levi},
	    {"quotient soundness", quotient_soundness},
	    {"geometry bridge", geometry_bridge},
	    {"CLI contract", cli_contract},
	};
	int failures = 0;
	for (std::size_t i = 0; i < criteria.size(); ++i)
	{
		Outcome o;
		try
		{
			o = criteria[i].second();
		}
		catch (std::exception const &e)
		{
			o.ok = false;
			o.detail = std::string("exception: ") + e.what();
		}
		std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": "
		          << criteria[i].first;
		if (!o.ok)
		{
			std::cout << " (" << o.detail << ")";
			++failures;
		}
		std::cout << "\n";
	}
	std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass\n";
	return failures ? 1 : 0;
}
