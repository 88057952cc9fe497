#pragma once

#include "bol/polynomial.hpp"
#include "bol/subspace.hpp"

#include <cstddef>
#include <vector>

namespace bol {

/// Largest matrix size accepted by rational_eigenlines.
inline constexpr std::size_t max_eigen_dim = 4;

struct EigenLine
{
	Scalar value;
	Subspace space;
};

struct EigenReport
{
	std::vector<EigenLine> rational; ///< increasing eigenvalue
	std::size_t irrational_count = 0; ///< roots outside Q, with multiplicity
};

/// Characteristic polynomial det(tI - M), lowest degree first, by the
/// Faddeev-LeVerrier recurrence.
inline UniPoly characteristic_polynomial(Matrix const &m)
{
	if (!m.is_square())
		throw MalformedInput("characteristic polynomial of a non-square matrix");
	std::size_t const n = m.rows();
	UniPoly coeffs(n + 1, Scalar(0));
	coeffs[n] = 1;
	Matrix acc(n, n); // M_0 = 0
	Scalar c = 1;     // c_n
	for (std::size_t k = 1; k <= n; ++k)
	{
		// M_k = M * M_{k-1} + c_{n-k+1} I
		acc = m * acc;
		for (std::size_t i = 0; i < n; ++i)
			acc(i, i) += c;
		Matrix am = m * acc;
		Scalar trace = 0;
		for (std::size_t i = 0; i < n; ++i)
			trace += am(i, i);
		c = -trace / static_cast<long>(k);
		coeffs[n - k] = c;
	}
	return coeffs;
}

/// Rational eigenvalues of a square matrix (size at most max_eigen_dim) with
/// their full eigenspaces. Eigenvalues outside Q are only counted.
inline EigenReport rational_eigenlines(Matrix const &m)
{
	if (!m.is_square())
		throw MalformedInput("rational_eigenlines: matrix is not square");
	if (m.rows() > max_eigen_dim)
		throw UnsupportedSize("rational_eigenlines: size " + std::to_string(m.rows()) +
		                      " exceeds " + std::to_string(max_eigen_dim));
	std::size_t const n = m.rows();
	EigenReport report;
	if (n == 0)
		return report;
	std::size_t found = 0;
	for (auto const &root : rational_roots(characteristic_polynomial(m)))
	{
		Matrix shifted = m;
		for (std::size_t i = 0; i < n; ++i)
			shifted(i, i) -= root.value;
		report.rational.push_back({root.value, Subspace::span(kernel(shifted), n)});
		found += root.multiplicity;
	}
	report.irrational_count = n - found;
	return report;
}

} // namespace bol
