#pragma once

#include "bol/matrix.hpp"
#include "bol/polynomial.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bol {

/// Dense n×n×n tensor of structure constants, indexed (i, j, k) for the
/// coefficient of e_i in e_j·e_k. All indices are 0-based.
class Tensor3
{
public:
	Tensor3() = default;
	explicit Tensor3(std::size_t n) : n_(n), data_(n * n * n, Scalar(0)) {}

	std::size_t dim() const noexcept { return n_; }
	Scalar &operator()(std::size_t i, std::size_t j, std::size_t k)
	{
		return data_[(i * n_ + j) * n_ + k];
	}
	Scalar const &operator()(std::size_t i, std::size_t j, std::size_t k) const
	{
		return data_[(i * n_ + j) * n_ + k];
	}
	bool is_zero() const
	{
		for (auto const &x : data_)
			if (sgn(x) != 0)
				return false;
		return true;
	}
	friend bool operator==(Tensor3 const &, Tensor3 const &) = default;

private:
	std::size_t n_ = 0;
	std::vector<Scalar> data_;
};

/// Dense n^4 tensor, indexed (i, j, k, l) for the coefficient of e_i in
/// (e_j, e_k, e_l).
class Tensor4
{
public:
	Tensor4() = default;
	explicit Tensor4(std::size_t n) : n_(n), data_(n * n * n * n, Scalar(0)) {}

	std::size_t dim() const noexcept { return n_; }
	Scalar &operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l)
	{
		return data_[((i * n_ + j) * n_ + k) * n_ + l];
	}
	Scalar const &operator()(std::size_t i, std::size_t j, std::size_t k,
	                         std::size_t l) const
	{
		return data_[((i * n_ + j) * n_ + k) * n_ + l];
	}
	bool is_zero() const
	{
		for (auto const &x : data_)
			if (sgn(x) != 0)
				return false;
		return true;
	}
	friend bool operator==(Tensor4 const &, Tensor4 const &) = default;

private:
	std::size_t n_ = 0;
	std::vector<Scalar> data_;
};

/// Matrix of a linear map in the standard bases.
class LinearMap
{
public:
	LinearMap() = default;
	explicit LinearMap(Matrix m) : m_(std::move(m)) {}

	std::size_t source_dim() const noexcept { return m_.cols(); }
	std::size_t target_dim() const noexcept { return m_.rows(); }
	Matrix const &matrix() const noexcept { return m_; }
	Vector operator()(Vector const &v) const { return m_.apply(v); }
	bool is_zero() const
	{
		for (std::size_t r = 0; r < m_.rows(); ++r)
			if (!bol::is_zero(m_.row(r)))
				return false;
		return true;
	}
	friend bool operator==(LinearMap const &, LinearMap const &) = default;

private:
	Matrix m_;
};

using Metadata = std::map<std::string, std::string>;

/// A finite-dimensional algebra with an antisymmetric bilinear product and a
/// trilinear operation, given by structure constants
///
///     e_j · e_k       = Σ_i T(i, j, k) e_i
///     (e_j, e_k, e_l) = Σ_i A(i, j, k, l) e_i
///
/// Construction rejects a binary tensor that is not antisymmetric in (j, k);
/// over characteristic zero that is the same as ξ·ξ = 0. Whether the Bol
/// identities hold is a separate question, answered by check_axioms.
class BolAlgebra
{
public:
	BolAlgebra() = default;

	BolAlgebra(Tensor3 binary, Tensor4 ternary, std::string label = {},
	           Metadata metadata = {})
	    : binary_(std::move(binary)), ternary_(std::move(ternary)),
	      label_(std::move(label)), metadata_(std::move(metadata))
	{
		std::size_t const n = binary_.dim();
		if (ternary_.dim() != n)
			throw MalformedInput("binary tensor has dimension " + std::to_string(n) +
			                     " but ternary tensor has " +
			                     std::to_string(ternary_.dim()));
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				for (std::size_t k = j; k < n; ++k)
					if (binary_(i, j, k) != -binary_(i, k, j))
						throw MalformedInput(
						    "binary product is not antisymmetric at e" +
						    std::to_string(j + 1) + "·e" + std::to_string(k + 1) +
						    " (coefficient of e" + std::to_string(i + 1) + ")");
	}

	static BolAlgebra zero(std::size_t n, std::string label = {})
	{
		return BolAlgebra(Tensor3(n), Tensor4(n), std::move(label));
	}

	std::size_t dim() const noexcept { return binary_.dim(); }
	Tensor3 const &binary() const noexcept { return binary_; }
	Tensor4 const &ternary() const noexcept { return ternary_; }
	std::string const &label() const noexcept { return label_; }
	Metadata const &metadata() const noexcept { return metadata_; }

	Scalar const &T(std::size_t i, std::size_t j, std::size_t k) const
	{
		return binary_(i, j, k);
	}
	Scalar const &A(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const
	{
		return ternary_(i, j, k, l);
	}

	BolAlgebra with_label(std::string label) const
	{
		BolAlgebra copy = *this;
		copy.label_ = std::move(label);
		return copy;
	}

	BolAlgebra with_metadata(std::string const &key, std::string value) const
	{
		BolAlgebra copy = *this;
		copy.metadata_[key] = std::move(value);
		return copy;
	}

	/// Equal structure constants; label and metadata are ignored.
	bool same_structure(BolAlgebra const &o) const
	{
		return binary_ == o.binary_ && ternary_ == o.ternary_;
	}

	friend bool operator==(BolAlgebra const &, BolAlgebra const &) = default;

private:
	Tensor3 binary_;
	Tensor4 ternary_;
	std::string label_;
	Metadata metadata_;
};

// ---------------------------------------------------------------------------
// Evaluation. The coefficient ring R is Scalar in normal use; the complement
// search instantiates it with Poly.

template <class R>
std::vector<R> bilinear_product(BolAlgebra const &V, std::vector<R> const &x,
                                std::vector<R> const &y)
{
	std::size_t const n = V.dim();
	if (x.size() != n || y.size() != n)
		throw MalformedInput("bilinear_product: vector length does not match dimension " +
		                     std::to_string(n));
	std::vector<R> out(n, R(0));
	for (std::size_t j = 0; j < n; ++j)
	{
		if (is_zero(x[j]))
			continue;
		for (std::size_t k = 0; k < n; ++k)
		{
			if (is_zero(y[k]))
				continue;
			R const xy = x[j] * y[k];
			for (std::size_t i = 0; i < n; ++i)
				if (sgn(V.T(i, j, k)) != 0)
					out[i] += V.T(i, j, k) * xy;
		}
	}
	return out;
}

template <class R>
std::vector<R> trilinear_product(BolAlgebra const &V, std::vector<R> const &x,
                                 std::vector<R> const &y, std::vector<R> const &z)
{
	std::size_t const n = V.dim();
	if (x.size() != n || y.size() != n || z.size() != n)
		throw MalformedInput("trilinear_product: vector length does not match dimension " +
		                     std::to_string(n));
	std::vector<R> out(n, R(0));
	for (std::size_t j = 0; j < n; ++j)
	{
		if (is_zero(x[j]))
			continue;
		for (std::size_t k = 0; k < n; ++k)
		{
			if (is_zero(y[k]))
				continue;
			R const xy = x[j] * y[k];
			for (std::size_t l = 0; l < n; ++l)
			{
				if (is_zero(z[l]))
					continue;
				R const xyz = xy * z[l];
				for (std::size_t i = 0; i < n; ++i)
					if (sgn(V.A(i, j, k, l)) != 0)
						out[i] += V.A(i, j, k, l) * xyz;
			}
		}
	}
	return out;
}

/// Matrix of x ↦ a·x.
inline LinearMap left_multiplication(BolAlgebra const &V, Vector const &a)
{
	std::size_t const n = V.dim();
	require_length(a, n, "left_multiplication");
	Matrix m(n, n);
	for (std::size_t c = 0; c < n; ++c)
	{
		auto col = bilinear_product(V, a, unit_vector(n, c));
		for (std::size_t r = 0; r < n; ++r)
			m(r, c) = col[r];
	}
	return LinearMap(std::move(m));
}

/// Matrix of x ↦ (a, b, c) with x substituted into ternary slot `slot`
/// (0, 1 or 2); the two vectors given fill the other slots in order.
inline LinearMap ternary_slot_map(BolAlgebra const &V, std::size_t slot, Vector const &u,
                                  Vector const &w)
{
	std::size_t const n = V.dim();
	require_length(u, n, "ternary_slot_map");
	require_length(w, n, "ternary_slot_map");
	if (slot > 2)
		throw MalformedInput("ternary_slot_map: slot must be 0, 1 or 2");
	Matrix m(n, n);
	for (std::size_t c = 0; c < n; ++c)
	{
		Vector e = unit_vector(n, c);
		Vector col = slot == 0   ? trilinear_product(V, e, u, w)
		             : slot == 1 ? trilinear_product(V, u, e, w)
		                         : trilinear_product(V, u, w, e);
		for (std::size_t r = 0; r < n; ++r)
			m(r, c) = col[r];
	}
	return LinearMap(std::move(m));
}

/// The map c ↦ (a, b, c).
inline LinearMap inner_derivation(BolAlgebra const &V, Vector const &a, Vector const &b)
{
	return ternary_slot_map(V, 2, a, b);
}

// ---------------------------------------------------------------------------
// Constructions.

/// Bol algebra of a Lie algebra: a·b = [a,b] and (a,b,c) = [[a,b],c].
/// `bracket(i, j, k)` is the coefficient of e_i in [e_j, e_k]. Throws
/// MalformedInput if the bracket is not antisymmetric and InvalidFixture,
/// naming the first failing basis triple, if it violates the Jacobi
/// identity.
inline BolAlgebra from_lie_algebra(Tensor3 const &bracket, std::string label = {})
{
	std::size_t const n = bracket.dim();
	Tensor4 ternary(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				for (std::size_t l = 0; l < n; ++l)
				{
					Scalar acc = 0;
					for (std::size_t s = 0; s < n; ++s)
						acc += bracket(s, j, k) * bracket(i, s, l);
					ternary(i, j, k, l) = acc;
				}
	BolAlgebra V(bracket, std::move(ternary), std::move(label),
	             {{"source", "lie-algebra"}});

	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			for (std::size_t c = 0; c < n; ++c)
			{
				auto ea = unit_vector(n, a), eb = unit_vector(n, b), ec = unit_vector(n, c);
				auto jac = trilinear_product(V, ea, eb, ec) + trilinear_product(V, eb, ec, ea) +
				           trilinear_product(V, ec, ea, eb);
				if (!is_zero(jac))
					throw InvalidFixture("bracket fails the Jacobi identity at (" +
					                     std::to_string(a + 1) + "," + std::to_string(b + 1) +
					                     "," + std::to_string(c + 1) +
					                     "): " + render_vector(jac));
			}
	return V;
}

/// Block-diagonal sum: V1 on coordinates 0..n1-1, V2 on n1..n1+n2-1, all
/// mixed products zero.
inline BolAlgebra direct_sum(BolAlgebra const &V1, BolAlgebra const &V2, std::string label = {})
{
	std::size_t const n1 = V1.dim(), n2 = V2.dim(), n = n1 + n2;
	Tensor3 bin(n);
	Tensor4 ter(n);
	auto copy_block = [&](BolAlgebra const &src, std::size_t off) {
		std::size_t const m = src.dim();
		for (std::size_t i = 0; i < m; ++i)
			for (std::size_t j = 0; j < m; ++j)
				for (std::size_t k = 0; k < m; ++k)
				{
					bin(i + off, j + off, k + off) = src.T(i, j, k);
					for (std::size_t l = 0; l < m; ++l)
						ter(i + off, j + off, k + off, l + off) = src.A(i, j, k, l);
				}
	};
	copy_block(V1, 0);
	copy_block(V2, n1);
	if (label.empty() && !V1.label().empty() && !V2.label().empty())
		label = V1.label() + " + " + V2.label();
	return BolAlgebra(std::move(bin), std::move(ter), std::move(label));
}

} // namespace bol
