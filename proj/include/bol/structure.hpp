#pragma once

#include "bol/eigen.hpp"
#include "bol/ideals.hpp"
#include "bol/polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace bol {

/// Largest dimension for which enumerate_ideals certifies completeness.
inline constexpr std::size_t max_complete_dim = 3;

/// Cap on the number of ideals collected by the heuristic enumeration.
inline constexpr std::size_t max_heuristic_ideals = 64;

/// An infinite family of ideals collapsed into one record.
struct IdealFamily
{
	enum class Kind
	{
		/// Every line inside `block` is an ideal.
		lines,
		/// Every hyperplane containing `core` is an ideal. `block` is the
		/// common eigenspace of the transposed operators, core = block⊥.
		hyperplanes,
	};

	Kind kind;
	Subspace block;
	Subspace core;

	bool contains(Subspace const &S) const
	{
		if (kind == Kind::lines)
			return S.dim() == 1 && block.contains(S);
		return S.dim() + 1 == S.ambient_dim() && S.contains(core);
	}

	std::string describe() const
	{
		if (kind == Kind::lines)
			return "every line in " + render_subspace(block) + " is an ideal";
		return "every hyperplane containing " + render_subspace(core) + " is an ideal";
	}
};

struct IdealLattice
{
	BolAlgebra algebra;
	/// Individually listed ideals, sorted; always contains {0} and V.
	std::vector<Subspace> ideals;
	std::vector<IdealFamily> families;
	/// True when the enumeration is certified exhaustive.
	bool complete = false;
	std::string notes;

	/// Whether S is listed or is a member of one of the families.
	bool contains(Subspace const &S) const
	{
		if (std::find(ideals.begin(), ideals.end(), S) != ideals.end())
			return true;
		for (auto const &f : families)
			if (f.contains(S))
				return true;
		return false;
	}
};

enum class EnumerationMode
{
	automatic, ///< complete when dim ≤ max_complete_dim, heuristic otherwise
	heuristic,
};

namespace detail {

inline void add_unique(std::vector<Subspace> &list, Subspace const &S)
{
	if (std::find(list.begin(), list.end(), S) == list.end())
		list.push_back(S);
}

/// Maximal subspaces on which every operator acts as a scalar (with a rational
/// eigenvalue). The lines inside them are exactly the common eigenlines.
inline std::vector<Subspace> common_eigen_blocks(std::vector<Matrix> const &ops, std::size_t n)
{
	std::vector<Subspace> blocks{Subspace::full(n)};
	for (auto const &M : ops)
	{
		auto eig = rational_eigenlines(M);
		std::vector<Subspace> next;
		for (auto const &B : blocks)
			for (auto const &line : eig.rational)
			{
				Subspace X = intersect(B, line.space);
				if (!X.is_zero())
					next.push_back(std::move(X));
			}
		blocks = std::move(next);
		if (blocks.empty())
			break;
	}
	std::sort(blocks.begin(), blocks.end());
	return blocks;
}

inline IdealLattice complete_lattice(BolAlgebra const &V)
{
	std::size_t const n = V.dim();
	IdealLattice lat{V, {Subspace::zero(n)}, {}, true, {}};
	add_unique(lat.ideals, Subspace::full(n));
	if (n >= 2)
	{
		auto ops = ideal_operators(V);
		for (auto const &B : common_eigen_blocks(ops, n))
		{
			add_unique(lat.ideals, B);
			if (B.dim() >= 2)
				lat.families.push_back({IdealFamily::Kind::lines, B, B});
		}
		if (n == 3)
		{
			std::vector<Matrix> transposed;
			for (auto const &M : ops)
				transposed.push_back(M.transpose());
			for (auto const &B : common_eigen_blocks(transposed, n))
			{
				Subspace core = B.perp();
				add_unique(lat.ideals, core);
				if (B.dim() >= 2)
					lat.families.push_back({IdealFamily::Kind::hyperplanes, B, core});
			}
		}
	}
	return lat;
}

inline IdealLattice heuristic_lattice(BolAlgebra const &V)
{
	std::size_t const n = V.dim();
	Subspace const full = Subspace::full(n);
	IdealLattice lat{V, {Subspace::zero(n)}, {}, false, {}};
	add_unique(lat.ideals, full);

	std::vector<Subspace> seeds;
	for (std::size_t i = 0; i < n; ++i)
		seeds.push_back(Subspace::line(unit_vector(n, i)));
	seeds.push_back(subspace_product(V, full, full));
	seeds.push_back(trilinear_span(V, full, full, full));
	seeds.push_back(weak_derived_series(V, full).terminal());
	if (n <= max_eigen_dim)
		for (auto const &B : common_eigen_blocks(ideal_operators(V), n))
			seeds.push_back(B);
	for (auto const &s : seeds)
		add_unique(lat.ideals, ideal_closure(V, s));

	// Close under sums and intersections.
	for (bool grew = true; grew && lat.ideals.size() < max_heuristic_ideals;)
	{
		grew = false;
		std::size_t const count = lat.ideals.size();
		for (std::size_t a = 0; a < count && lat.ideals.size() < max_heuristic_ideals; ++a)
			for (std::size_t b = a + 1; b < count && lat.ideals.size() < max_heuristic_ideals; ++b)
				for (auto const &X : {sum(lat.ideals[a], lat.ideals[b]),
				                      intersect(lat.ideals[a], lat.ideals[b])})
					if (std::find(lat.ideals.begin(), lat.ideals.end(), X) == lat.ideals.end())
					{
						lat.ideals.push_back(X);
						grew = true;
					}
	}
	lat.notes = "heuristic enumeration (dimension " + std::to_string(n) +
	            "): closures of basis lines, V·V, (V,V,V) and the terminal derived term, "
	            "closed under sum and intersection; not certified exhaustive";
	return lat;
}

} // namespace detail

/// Ideals of V.
///
/// For dim V ≤ 3 the result is certified complete. One-dimensional ideals are
/// the rational common eigenlines of ideal_operators(V); a common eigenspace
/// of dimension ≥ 2 becomes a `lines` family. In dimension 3 the
/// two-dimensional ideals come from the transposed operators, since W is
/// invariant under M exactly when W⊥ is invariant under Mᵀ.
///
/// Larger algebras get a heuristic lattice with complete = false.
inline IdealLattice enumerate_ideals(BolAlgebra const &V,
                                     EnumerationMode mode = EnumerationMode::automatic)
{
	bool const complete = mode == EnumerationMode::automatic && V.dim() <= max_complete_dim;
	IdealLattice lat = complete ? detail::complete_lattice(V) : detail::heuristic_lattice(V);
	std::sort(lat.ideals.begin(), lat.ideals.end());
	if (complete)
	{
		lat.notes = "complete enumeration (dimension " + std::to_string(V.dim()) + ")";
		for (auto const &f : lat.families)
			lat.notes += "; " + f.describe();
	}
	for (auto const &I : lat.ideals)
		if (!is_ideal(V, I))
			throw StructuralAnomaly("enumerate_ideals produced a non-ideal " + render_subspace(I));
	return lat;
}

// ---------------------------------------------------------------------------

struct RadicalCertificate
{
	Subspace radical;
	/// Weakly solvable ideals whose sum is the radical.
	std::vector<Subspace> summands;
	SeriesReport series;
	bool quotient_semisimple = false;
	std::size_t quotient_dim = 0;
	bool exhaustive = false;
	std::string notes;
};

namespace detail {

/// Span of the weakly solvable lines in a `lines` family. For v in the block,
/// (e_a, v, v) = f_a(v) v with f_a linear, so the solvable lines fill the
/// subspace cut out by the f_a.
inline Subspace solvable_lines(BolAlgebra const &V, Subspace const &block)
{
	std::size_t const n = V.dim();
	Vector const b0 = block.basis().row(0);
	std::size_t const p = block.pivots().front();
	std::vector<Vector> functionals;
	for (std::size_t a = 0; a < n; ++a)
	{
		Vector f(n);
		for (std::size_t c = 0; c < n; ++c)
			f[c] = trilinear_product(V, unit_vector(n, a), b0, unit_vector(n, c))[p];
		functionals.push_back(std::move(f));
	}
	return intersect(block, Subspace::span(functionals, n).perp());
}

/// Weakly solvable members of a `hyperplanes` family in dimension 3 whose
/// core is a line u. Members are span{u, c(t)} with c(t) = e_q0 + t e_q1
/// plus the member at t = ∞. A plane W is weakly solvable iff W^(2) = 0;
/// that condition is polynomial in t, so either it vanishes identically or
/// its solutions are among the rational roots of one nonzero coordinate.
inline std::vector<Subspace> solvable_planes(BolAlgebra const &V, Subspace const &core)
{
	std::size_t const n = V.dim();
	auto const q = core.free_coordinates();
	Vector const u = core.basis().row(0);
	auto member = [&](Vector const &c) { return Subspace::span({u, c}, n); };
	Vector const at_inf = unit_vector(n, q[1]);
	auto at = [&](Scalar const &t) {
		Vector c = unit_vector(n, q[0]);
		c[q[1]] = t;
		return c;
	};

	using PV = std::vector<Poly>;
	PV pu(n), pc(n), pe(n);
	for (std::size_t i = 0; i < n; ++i)
		pu[i] = Poly(u[i]);
	pc[q[0]] = Poly(1);
	pc[q[1]] = Poly::variable(0);
	std::vector<PV> basis_e;
	for (std::size_t a = 0; a < n; ++a)
	{
		PV e(n);
		e[a] = Poly(1);
		basis_e.push_back(std::move(e));
	}
	std::vector<PV> first;
	for (auto const &e : basis_e)
		for (auto const *x : {&pu, &pc})
			for (auto const *y : {&pu, &pc})
				first.push_back(trilinear_product(V, e, *x, *y));
	Poly witness;
	for (auto const &e : basis_e)
		for (auto const &x : first)
			for (auto const &y : first)
				for (auto const &coord : trilinear_product(V, e, x, y))
					if (witness.is_zero() && !coord.is_zero())
						witness = coord;

	std::vector<Subspace> out;
	if (witness.is_zero())
	{
		out.push_back(member(at(0)));
		out.push_back(member(at_inf));
		return out;
	}
	if (!witness.is_constant())
		for (auto const &root : rational_roots(witness.univariate(0)))
		{
			Subspace W = member(at(root.value));
			if (is_weakly_solvable(V, W))
				out.push_back(W);
		}
	Subspace W = member(at_inf);
	if (is_weakly_solvable(V, W))
		out.push_back(W);
	return out;
}

} // namespace detail

/// The weak radical: the sum of every weakly solvable ideal found by
/// enumerate_ideals, verified afterwards to be a weakly solvable ideal itself
/// (StructuralAnomaly otherwise). The quotient by it is searched for its own
/// radical to fill in quotient_semisimple.
inline RadicalCertificate weak_radical(BolAlgebra const &V,
                                       EnumerationMode mode = EnumerationMode::automatic)
{
	std::size_t const n = V.dim();
	IdealLattice const lat = enumerate_ideals(V, mode);
	RadicalCertificate cert;
	cert.exhaustive = lat.complete;

	for (auto const &I : lat.ideals)
		if (!I.is_zero() && is_weakly_solvable(V, I))
			detail::add_unique(cert.summands, I);
	for (auto const &f : lat.families)
	{
		if (f.kind == IdealFamily::Kind::lines)
		{
			Subspace K = detail::solvable_lines(V, f.block);
			if (!K.is_zero())
				detail::add_unique(cert.summands, K);
		}
		else if (f.core.is_zero())
		{
			// Every hyperplane is an ideal, so every line is one too (as an
			// intersection) and all operators are scalars.
			if (!is_weakly_solvable(V, Subspace::full(n)))
				throw StructuralAnomaly("all hyperplanes are ideals but V is not weakly solvable");
			detail::add_unique(cert.summands, Subspace::full(n));
		}
		else
		{
			for (auto const &W : detail::solvable_planes(V, f.core))
				detail::add_unique(cert.summands, W);
		}
	}

	Subspace R = Subspace::zero(n);
	for (auto const &S : cert.summands)
		R = sum(R, S);

	if (auto why = ideal_violation(V, R))
		throw StructuralAnomaly("sum of weakly solvable ideals " + render_subspace(R) +
		                        " is not an ideal (" + *why + ")");
	cert.series = weak_derived_series(V, R);
	if (!cert.series.weakly_solvable)
	{
		std::string w;
		for (auto const &S : cert.summands)
			w += " " + render_subspace(S);
		throw StructuralAnomaly("sum of weakly solvable ideals " + render_subspace(R) +
		                        " is not weakly solvable; summands:" + w +
		                        "; derived series stalls at " +
		                        render_subspace(cert.series.terminal()));
	}
	cert.radical = R;
	cert.notes = lat.notes;

	if (R.is_zero())
	{
		cert.quotient_semisimple = true;
		cert.quotient_dim = n;
	}
	else
	{
		Quotient Q = quotient(V, R);
		cert.quotient_dim = Q.algebra.dim();
		try
		{
			cert.quotient_semisimple = weak_radical(Q.algebra, mode).radical.is_zero();
		}
		catch (StructuralAnomaly const &e)
		{
			cert.quotient_semisimple = false;
			cert.notes += std::string("; radical search on the quotient failed: ") + e.what();
		}
	}
	return cert;
}

inline bool is_semisimple(BolAlgebra const &V)
{
	return weak_radical(V).radical.is_zero();
}

} // namespace bol
