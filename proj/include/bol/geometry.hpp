#pragma once

#include "bol/axioms.hpp"

#include <cstddef>
#include <string>
#include <utility>

namespace bol {

/// Pointwise torsion data of an affinely connected space at the base point:
/// torsion(i, j, k) = T^i_jk and derivative(i, j, k, l) = ∇_l T^i_jk, both
/// antisymmetric in (j, k).
///
/// Flatness (vanishing curvature) is assumed by the construction and cannot
/// be checked from this data; it is the caller's responsibility.
struct TorsionData
{
	Tensor3 torsion;
	Tensor4 derivative;

	std::size_t dim() const noexcept { return torsion.dim(); }
	friend bool operator==(TorsionData const &, TorsionData const &) = default;
};

enum class DerivativeCheck
{
	/// Reject a derivative tensor that is not antisymmetric in (j, k).
	strict,
	/// Accept it; needed to round-trip algebras whose ternary operation is not
	/// antisymmetric in its first two slots.
	lenient,
};

/// T^s_jk T^i_sl, the quadratic part of the ternary constants.
inline Tensor4 torsion_square(Tensor3 const &T)
{
	std::size_t const n = T.dim();
	Tensor4 out(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				for (std::size_t l = 0; l < n; ++l)
				{
					Scalar acc = 0;
					for (std::size_t s = 0; s < n; ++s)
						if (sgn(T(s, j, k)) != 0)
							acc += T(s, j, k) * T(i, s, l);
					out(i, j, k, l) = acc;
				}
	return out;
}

/// Candidate algebra with ξ·η = T^i_jk ξ^j η^k and
/// (ξ,η,τ)^i = (∇_l T^i_jk + T^s_jk T^i_sl) ξ^j η^k τ^l, where the derivative
/// index l is contracted with the third argument. The candidate is returned
/// together with its axiom report; failing the identities is not an error.
inline std::pair<BolAlgebra, AxiomReport>
from_torsion(TorsionData const &data, DerivativeCheck check = DerivativeCheck::strict)
{
	std::size_t const n = data.torsion.dim();
	if (data.derivative.dim() != n)
		throw MalformedInput("torsion has dimension " + std::to_string(n) +
		                     " but its derivative has " + std::to_string(data.derivative.dim()));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = j; k < n; ++k)
			{
				if (data.torsion(i, j, k) != -data.torsion(i, k, j))
					throw MalformedInput("torsion is not antisymmetric in (" + std::to_string(j + 1) +
					                     "," + std::to_string(k + 1) + ")");
				if (check == DerivativeCheck::strict)
					for (std::size_t l = 0; l < n; ++l)
						if (data.derivative(i, j, k, l) != -data.derivative(i, k, j, l))
							throw MalformedInput("torsion derivative is not antisymmetric in (" +
							                     std::to_string(j + 1) + "," +
							                     std::to_string(k + 1) + ")");
			}

	Tensor4 ternary = torsion_square(data.torsion);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				for (std::size_t l = 0; l < n; ++l)
					ternary(i, j, k, l) += data.derivative(i, j, k, l);
	BolAlgebra V(data.torsion, std::move(ternary), "torsion candidate",
	             {{"source", "torsion"}});
	auto report = check_axioms(V);
	return {std::move(V), std::move(report)};
}

/// Inverse of from_torsion: T is the binary tensor and ∇T the ternary tensor
/// minus the quadratic torsion part.
inline TorsionData torsion_of(BolAlgebra const &V)
{
	Tensor4 derivative = V.ternary();
	Tensor4 const sq = torsion_square(V.binary());
	std::size_t const n = V.dim();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				for (std::size_t l = 0; l < n; ++l)
					derivative(i, j, k, l) -= sq(i, j, k, l);
	return {V.binary(), std::move(derivative)};
}

/// Whether torsion_of(V) satisfies the antisymmetry that strict from_torsion
/// requires, i.e. whether the ternary operation is antisymmetric in its first
/// two slots.
inline bool has_antisymmetric_derivative(TorsionData const &data)
{
	std::size_t const n = data.dim();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = j; k < n; ++k)
				for (std::size_t l = 0; l < n; ++l)
					if (data.derivative(i, j, k, l) != -data.derivative(i, k, j, l))
						return false;
	return true;
}

} // namespace bol
