#pragma once

#include "bol/algebra.hpp"
#include "bol/subspace.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bol {

inline void require_ambient(BolAlgebra const &V, Subspace const &S, char const *what)
{
	if (S.ambient_dim() != V.dim())
		throw MalformedInput(std::string(what) + ": subspace lives in dimension " +
		                     std::to_string(S.ambient_dim()) + ", algebra has dimension " +
		                     std::to_string(V.dim()));
}

/// Span of all products a·b with a, b running over the bases of A and B.
inline Subspace subspace_product(BolAlgebra const &V, Subspace const &A, Subspace const &B)
{
	require_ambient(V, A, "subspace_product");
	require_ambient(V, B, "subspace_product");
	std::vector<Vector> out;
	auto bb = B.basis_vectors();
	for (auto const &a : A.basis_vectors())
		for (auto const &b : bb)
			out.push_back(bilinear_product(V, a, b));
	return Subspace::span(out, V.dim());
}

/// Span of all (a, b, c) over basis triples of A, B and C.
inline Subspace trilinear_span(BolAlgebra const &V, Subspace const &A, Subspace const &B,
                               Subspace const &C)
{
	require_ambient(V, A, "trilinear_span");
	require_ambient(V, B, "trilinear_span");
	require_ambient(V, C, "trilinear_span");
	std::vector<Vector> out;
	auto bb = B.basis_vectors();
	auto cc = C.basis_vectors();
	for (auto const &a : A.basis_vectors())
		for (auto const &b : bb)
			for (auto const &c : cc)
				out.push_back(trilinear_product(V, a, b, c));
	return Subspace::span(out, V.dim());
}

inline bool is_subalgebra(BolAlgebra const &V, Subspace const &S)
{
	require_ambient(V, S, "is_subalgebra");
	return S.contains(subspace_product(V, S, S)) && S.contains(trilinear_span(V, S, S, S));
}

/// The first of the ideal inclusions V·I ⊆ I, (I,V,V) ⊆ I, (V,I,V) ⊆ I,
/// (V,V,I) ⊆ I that fails, or nothing if I is an ideal.
inline std::optional<std::string> ideal_violation(BolAlgebra const &V, Subspace const &I)
{
	require_ambient(V, I, "is_ideal");
	Subspace const full = Subspace::full(V.dim());
	if (!I.contains(subspace_product(V, full, I)))
		return "V·I ⊄ I";
	if (!I.contains(trilinear_span(V, I, full, full)))
		return "(I,V,V) ⊄ I";
	if (!I.contains(trilinear_span(V, full, I, full)))
		return "(V,I,V) ⊄ I";
	if (!I.contains(trilinear_span(V, full, full, I)))
		return "(V,V,I) ⊄ I";
	return std::nullopt;
}

/// I is an ideal when it absorbs both operations in every slot:
/// V·I ⊆ I and (I,V,V), (V,I,V), (V,V,I) ⊆ I.
inline bool is_ideal(BolAlgebra const &V, Subspace const &I)
{
	return !ideal_violation(V, I).has_value();
}

inline void require_ideal(BolAlgebra const &V, Subspace const &I, char const *what)
{
	if (auto why = ideal_violation(V, I))
		throw PreconditionError(std::string(what) + ": " + render_subspace(I) +
		                        " is not an ideal (" + *why + ")");
}

/// Smallest ideal containing S.
inline Subspace ideal_closure(BolAlgebra const &V, Subspace const &S)
{
	require_ambient(V, S, "ideal_closure");
	Subspace const full = Subspace::full(V.dim());
	Subspace X = S;
	for (;;)
	{
		Subspace next = sum(X, subspace_product(V, full, X));
		next = sum(next, trilinear_span(V, X, full, full));
		next = sum(next, trilinear_span(V, full, X, full));
		next = sum(next, trilinear_span(V, full, full, X));
		if (next == X)
			return X;
		X = std::move(next);
	}
}

/// Operators whose common invariant subspaces are exactly the ideals: left
/// multiplication by each basis vector and the three ternary slot maps with
/// basis vectors in the other two slots. Duplicates are dropped.
inline std::vector<Matrix> ideal_operators(BolAlgebra const &V)
{
	std::size_t const n = V.dim();
	std::vector<Matrix> ops;
	auto add = [&](LinearMap const &m) {
		if (std::find(ops.begin(), ops.end(), m.matrix()) == ops.end())
			ops.push_back(m.matrix());
	};
	for (std::size_t a = 0; a < n; ++a)
		add(left_multiplication(V, unit_vector(n, a)));
	for (std::size_t slot = 0; slot < 3; ++slot)
		for (std::size_t a = 0; a < n; ++a)
			for (std::size_t b = 0; b < n; ++b)
				add(ternary_slot_map(V, slot, unit_vector(n, a), unit_vector(n, b)));
	return ops;
}

struct Quotient
{
	BolAlgebra algebra;
	/// Canonical surjection V → V/I in the quotient's basis.
	LinearMap projection;
	/// The quotient's basis vector k is the class of e_{coordinates[k]}.
	std::vector<std::size_t> coordinates;

	/// Quotient coordinates back to the representative supported on
	/// `coordinates`.
	Vector lift(Vector const &q) const
	{
		require_length(q, coordinates.size(), "quotient lift");
		Vector v(projection.source_dim(), Scalar(0));
		for (std::size_t k = 0; k < coordinates.size(); ++k)
			v[coordinates[k]] = q[k];
		return v;
	}
};

/// V/I on the coordinates complementary to I's pivot columns, with both
/// operations induced through the canonical projection.
inline Quotient quotient(BolAlgebra const &V, Subspace const &I)
{
	require_ideal(V, I, "quotient");
	std::size_t const n = V.dim();
	auto const coords = I.free_coordinates();
	std::size_t const m = coords.size();

	Matrix proj(m, n);
	for (std::size_t c = 0; c < n; ++c)
	{
		Vector r = I.reduce(unit_vector(n, c));
		for (std::size_t k = 0; k < m; ++k)
			proj(k, c) = r[coords[k]];
	}

	Tensor3 bin(m);
	Tensor4 ter(m);
	for (std::size_t a = 0; a < m; ++a)
		for (std::size_t b = 0; b < m; ++b)
		{
			Vector ea = unit_vector(n, coords[a]), eb = unit_vector(n, coords[b]);
			Vector p = proj.apply(bilinear_product(V, ea, eb));
			for (std::size_t i = 0; i < m; ++i)
				bin(i, a, b) = p[i];
			for (std::size_t c = 0; c < m; ++c)
			{
				Vector q = proj.apply(trilinear_product(V, ea, eb, unit_vector(n, coords[c])));
				for (std::size_t i = 0; i < m; ++i)
					ter(i, a, b, c) = q[i];
			}
		}
	std::string label = V.label().empty() ? std::string() : V.label() + " / " + render_subspace(I);
	return {BolAlgebra(std::move(bin), std::move(ter), std::move(label)), LinearMap(std::move(proj)),
	        coords};
}

struct SeriesReport
{
	Subspace start;
	/// I^(1), I^(2), ... up to the first term equal to its predecessor (not
	/// repeated). Always holds at least I^(1).
	std::vector<Subspace> chain;
	/// Least k ≥ 0 with I^(k) = I^(k+1), where I^(0) = I.
	std::size_t stabilization_index = 0;
	bool weakly_solvable = false;

	Subspace const &terminal() const { return chain.back(); }
};

/// I^(1) = (V, I, I), I^(k) = (V, I^(k-1), I^(k-1)), computed on plain
/// subspaces until it stabilizes. I must be an ideal.
inline SeriesReport weak_derived_series(BolAlgebra const &V, Subspace const &I)
{
	require_ideal(V, I, "weak_derived_series");
	Subspace const full = Subspace::full(V.dim());
	SeriesReport report;
	report.start = I;
	Subspace prev = I;
	for (std::size_t k = 0;; ++k)
	{
		Subspace next = trilinear_span(V, full, prev, prev);
		if (next == prev)
		{
			if (report.chain.empty())
				report.chain.push_back(next);
			report.stabilization_index = k;
			break;
		}
		report.chain.push_back(next);
		prev = std::move(next);
	}
	report.weakly_solvable = report.terminal().is_zero();
	return report;
}

inline bool is_weakly_solvable(BolAlgebra const &V, Subspace const &I)
{
	return weak_derived_series(V, I).weakly_solvable;
}

} // namespace bol
