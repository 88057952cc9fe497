#pragma once

#include "bol/axioms.hpp"
#include "bol/structure.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bol {

struct LeviChecks
{
	bool subalgebra = false;
	bool trivial_intersection = false; ///< S ∩ R = {0}
	bool full_sum = false;             ///< S + R = V
	/// The projection restricted to S is a bijection onto V/R and respects
	/// both operations.
	bool preserves_operations = false;

	bool all() const
	{
		return subalgebra && trivial_intersection && full_sum && preserves_operations;
	}
};

/// Candidate values for the bounded grid search: integers in
/// [-grid_bound, grid_bound], each multiplied by every entry of grid_scales.
inline constexpr long grid_bound = 2;
inline std::array<Scalar, 2> const grid_scales{Scalar(1), Scalar(1, 2)};
inline constexpr std::size_t grid_max_candidates = 50000;

struct GridRecord
{
	std::vector<Scalar> values;
	std::size_t max_candidates = grid_max_candidates;
	std::size_t evaluated = 0;
	bool truncated = false;
};

struct LeviResult
{
	Subspace radical;
	Subspace complement;
	bool found = false;
	LeviChecks checks;
	/// "coordinate-complement", "symbolic", "grid" or "none".
	std::string method = "none";
	std::string diagnosis;
	GridRecord grid;

	std::size_t dim_algebra() const { return radical.ambient_dim(); }
};

/// Checks that S is a subalgebra complementing the ideal R and that the
/// projection S → V/R is an isomorphism of both operations.
inline LeviChecks verify_levi(BolAlgebra const &V, Subspace const &S, Subspace const &R)
{
	require_ambient(V, S, "verify_levi");
	require_ideal(V, R, "verify_levi");
	std::size_t const n = V.dim();
	LeviChecks checks;
	checks.subalgebra = is_subalgebra(V, S);
	checks.trivial_intersection = intersect(S, R).is_zero();
	checks.full_sum = sum(S, R).is_full();

	Quotient const Q = quotient(V, R);
	auto const basis = S.basis_vectors();
	std::vector<Vector> images;
	for (auto const &s : basis)
		images.push_back(Q.projection(s));
	bool const bijective = Subspace::span(images, Q.algebra.dim()).dim() == S.dim() &&
	                       S.dim() == Q.algebra.dim();
	bool homomorphism = true;
	for (std::size_t i = 0; i < basis.size() && homomorphism; ++i)
		for (std::size_t j = 0; j < basis.size() && homomorphism; ++j)
		{
			homomorphism = Q.projection(bilinear_product(V, basis[i], basis[j])) ==
			               bilinear_product(Q.algebra, images[i], images[j]);
			for (std::size_t k = 0; k < basis.size() && homomorphism; ++k)
				homomorphism =
				    Q.projection(trilinear_product(V, basis[i], basis[j], basis[k])) ==
				    trilinear_product(Q.algebra, images[i], images[j], images[k]);
		}
	checks.preserves_operations = bijective && homomorphism;

	if (checks.subalgebra && checks.trivial_intersection && checks.full_sum &&
	    !checks.preserves_operations)
		throw std::logic_error("verify_levi: complement of dimension " +
		                       std::to_string(S.dim()) + " in dimension " + std::to_string(n) +
		                       " passed the splitting checks but the projection is not an "
		                       "isomorphism");
	return checks;
}

namespace detail {

/// Complement of R given as the graph of a map from the coordinate complement
/// C = span{e_q : q free in R} into R: s_c = e_{q_c} + Σ_r phi[c][r] ρ_r.
template <class Rg>
std::vector<std::vector<Rg>> graph_basis(Subspace const &R,
                                         std::vector<std::vector<Rg>> const &phi)
{
	std::size_t const n = R.ambient_dim();
	auto const free = R.free_coordinates();
	auto const rho = R.basis_vectors();
	std::vector<std::vector<Rg>> out;
	for (std::size_t c = 0; c < free.size(); ++c)
	{
		std::vector<Rg> s(n, Rg(0));
		s[free[c]] = Rg(1);
		for (std::size_t r = 0; r < rho.size(); ++r)
			for (std::size_t i = 0; i < n; ++i)
				if (sgn(rho[r][i]) != 0)
					s[i] += rho[r][i] * phi[c][r];
		out.push_back(std::move(s));
	}
	return out;
}

/// Subalgebra-closure equations for the graph complement with unknown map
/// entries phi[c][r] = x_{c·dim R + r}. Each closure condition says that a
/// product x lies in S, i.e. x − Σ_c x̄_c s_c = 0 where x̄ are x's
/// coordinates modulo R; that difference lies in R, so its pivot coordinates
/// are the equations.
inline std::vector<Poly> closure_equations(BolAlgebra const &V, Subspace const &R)
{
	auto const free = R.free_coordinates();
	auto const rho = R.basis_vectors();
	auto const &pivots = R.pivots();
	std::size_t const dc = free.size(), dr = rho.size();
	std::vector<std::vector<Poly>> phi(dc, std::vector<Poly>(dr));
	for (std::size_t c = 0; c < dc; ++c)
		for (std::size_t r = 0; r < dr; ++r)
			phi[c][r] = Poly::variable(c * dr + r);
	auto const S = graph_basis(R, phi);

	std::vector<Poly> eqs;
	auto require_in_S = [&](std::vector<Poly> x) {
		// reduce modulo R to read the free coordinates
		std::vector<Poly> red = x;
		for (std::size_t k = 0; k < dr; ++k)
		{
			Poly f = red[pivots[k]];
			if (f.is_zero())
				continue;
			for (std::size_t i = 0; i < red.size(); ++i)
				if (sgn(rho[k][i]) != 0)
					red[i] -= rho[k][i] * f;
		}
		for (std::size_t c = 0; c < dc; ++c)
			for (std::size_t i = 0; i < x.size(); ++i)
				x[i] -= red[free[c]] * S[c][i];
		for (auto p : pivots)
			if (!x[p].is_zero())
				eqs.push_back(x[p]);
	};
	for (std::size_t a = 0; a < dc; ++a)
		for (std::size_t b = a + 1; b < dc; ++b)
			require_in_S(bilinear_product(V, S[a], S[b]));
	for (std::size_t a = 0; a < dc; ++a)
		for (std::size_t b = 0; b < dc; ++b)
			for (std::size_t d = 0; d < dc; ++d)
				require_in_S(trilinear_product(V, S[a], S[b], S[d]));
	return eqs;
}

inline Subspace graph_subspace(Subspace const &R, std::vector<std::vector<Scalar>> const &phi)
{
	return Subspace::span(graph_basis(R, phi), R.ambient_dim());
}

} // namespace detail

/// Looks for a subalgebra complementing the weak radical, in this order:
///
///  1. the coordinate complement span{e_q : q not a pivot of R};
///  2. when that complement has dimension ≤ 2, an exact solve of the
///     subalgebra-closure equations for the graph of a map C → R (every
///     complement of R has this form, so an infeasible system proves that
///     none exists);
///  3. otherwise, or when elimination gets stuck, a bounded grid over the
///     map entries.
///
/// Refuses (InvalidAlgebra) on algebras that fail the Bol identities.
inline LeviResult levi_complement(BolAlgebra const &V)
{
	auto const axioms = check_axioms(V);
	if (!axioms.all_pass())
	{
		std::string failed;
		for (auto const &v : axioms.verdicts)
			if (!v.pass)
				failed += std::string(failed.empty() ? "" : ", ") + identity_name(v.identity) +
				          " at " + v.witness_text();
		throw InvalidAlgebra("algebra fails the Bol identities (" + failed +
		                     "); no Levi decomposition attempted");
	}

	RadicalCertificate const cert = weak_radical(V);
	Subspace const &R = cert.radical;
	std::size_t const n = V.dim();
	LeviResult result;
	result.radical = R;
	auto const free = R.free_coordinates();
	std::size_t const dc = free.size(), dr = R.dim();

	auto accept = [&](Subspace S, char const *method) {
		auto checks = verify_levi(V, S, R);
		if (!checks.all())
			return false;
		result.complement = std::move(S);
		result.checks = checks;
		result.found = true;
		result.method = method;
		return true;
	};

	std::vector<Vector> coord;
	for (auto q : free)
		coord.push_back(unit_vector(n, q));
	Subspace const C = Subspace::span(coord, n);
	if (accept(C, "coordinate-complement"))
		return result;
	result.complement = C;
	result.checks = verify_levi(V, C, R);

	bool try_grid = true;
	if (dc <= 2)
	{
		auto solution = solve_polynomial_system(detail::closure_equations(V, R), dc * dr);
		if (solution.status == SolveStatus::solved)
		{
			std::vector<std::vector<Scalar>> phi(dc, std::vector<Scalar>(dr));
			for (std::size_t c = 0; c < dc; ++c)
				for (std::size_t r = 0; r < dr; ++r)
					phi[c][r] = solution.values[c * dr + r];
			if (accept(detail::graph_subspace(R, phi), "symbolic"))
				return result;
			throw std::logic_error("levi_complement: exact solution failed verification");
		}
		if (solution.status == SolveStatus::infeasible)
		{
			result.diagnosis = "closure equations have no rational solution: no subalgebra "
			                   "complements the radical";
			try_grid = false;
		}
		else
			result.diagnosis = "exact elimination stalled; ";
	}
	if (!try_grid)
		return result;

	std::vector<Scalar> values;
	for (auto const &scale : grid_scales)
		for (long k = -grid_bound; k <= grid_bound; ++k)
			values.push_back(scale * k);
	std::sort(values.begin(), values.end());
	values.erase(std::unique(values.begin(), values.end()), values.end());
	result.grid.values = values;

	std::size_t const unknowns = dc * dr;
	std::vector<std::size_t> odometer(unknowns, 0);
	for (;;)
	{
		if (result.grid.evaluated == grid_max_candidates)
		{
			result.grid.truncated = true;
			break;
		}
		++result.grid.evaluated;
		std::vector<std::vector<Scalar>> phi(dc, std::vector<Scalar>(dr));
		for (std::size_t c = 0; c < dc; ++c)
			for (std::size_t r = 0; r < dr; ++r)
				phi[c][r] = values[odometer[c * dr + r]];
		Subspace S = detail::graph_subspace(R, phi);
		if (is_subalgebra(V, S) && accept(std::move(S), "grid"))
			return result;
		std::size_t pos = unknowns;
		while (pos > 0 && ++odometer[pos - 1] == values.size())
			odometer[--pos] = 0;
		if (pos == 0)
			break;
	}
	result.diagnosis += result.grid.truncated
	                        ? "grid search truncated after " +
	                              std::to_string(result.grid.evaluated) + " candidates"
	                        : "grid search exhausted " + std::to_string(result.grid.evaluated) +
	                              " candidates without a subalgebra complement";
	return result;
}

} // namespace bol
