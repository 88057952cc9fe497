#pragma once

#include "bol/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace bol {

/// A linear subspace of Q^n stored by its reduced row-echelon basis.
///
/// The basis rows are nonzero, have strictly increasing unit pivots and the
/// pivot columns are otherwise zero. Because this form is unique, two
/// Subspace values denote the same set of vectors exactly when they compare
/// equal.
class Subspace
{
public:
	Subspace() = default;

	static Subspace span(std::vector<Vector> const &vectors, std::size_t ambient_dim)
	{
		Subspace s;
		s.ambient_ = ambient_dim;
		auto echelon = row_reduce(Matrix::from_rows(vectors, ambient_dim));
		s.basis_ = std::move(echelon.reduced);
		s.pivots_ = std::move(echelon.pivots);
		return s;
	}

	static Subspace zero(std::size_t ambient_dim) { return span({}, ambient_dim); }

	static Subspace full(std::size_t ambient_dim)
	{
		return span(Matrix::identity(ambient_dim).row_vectors(), ambient_dim);
	}

	static Subspace line(Vector const &v) { return span({v}, v.size()); }

	std::size_t ambient_dim() const noexcept { return ambient_; }
	std::size_t dim() const noexcept { return pivots_.size(); }
	bool is_zero() const noexcept { return pivots_.empty(); }
	bool is_full() const noexcept { return pivots_.size() == ambient_; }

	Matrix const &basis() const noexcept { return basis_; }
	std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }
	std::vector<std::size_t> const &pivots() const noexcept { return pivots_; }

	/// Coordinates that are not pivot columns; the coordinate vectors on them
	/// span a complement of this subspace.
	std::vector<std::size_t> free_coordinates() const
	{
		std::vector<std::size_t> out;
		for (std::size_t c = 0, k = 0; c < ambient_; ++c)
		{
			if (k < pivots_.size() && pivots_[k] == c)
				++k;
			else
				out.push_back(c);
		}
		return out;
	}

	/// v minus the unique element of this subspace that agrees with v on the
	/// pivot columns. Zero exactly when v lies in the subspace.
	Vector reduce(Vector const &v) const
	{
		require_length(v, ambient_, "subspace reduction");
		Vector r = v;
		for (std::size_t k = 0; k < pivots_.size(); ++k)
		{
			Scalar const f = r[pivots_[k]];
			if (sgn(f) == 0)
				continue;
			for (std::size_t c = 0; c < ambient_; ++c)
				r[c] -= f * basis_(k, c);
		}
		return r;
	}

	bool contains(Vector const &v) const { return bol::is_zero(reduce(v)); }

	bool contains(Subspace const &other) const
	{
		check_ambient(other, "subspace containment");
		for (std::size_t r = 0; r < other.basis_.rows(); ++r)
			if (!contains(other.basis_.row(r)))
				return false;
		return true;
	}

	/// Orthogonal complement for the standard bilinear form.
	Subspace perp() const { return span(kernel(basis_), ambient_); }

	void check_ambient(Subspace const &other, char const *what) const
	{
		if (other.ambient_ != ambient_)
			throw MalformedInput(std::string(what) + ": ambient dimensions " +
			                     std::to_string(ambient_) + " and " +
			                     std::to_string(other.ambient_) + " differ");
	}

	friend bool operator==(Subspace const &a, Subspace const &b)
	{
		return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
	}

	/// Orders by dimension, then by basis entries in decreasing lexicographic
	/// order (so <e1> sorts before <e2>). Only used to make lists
	/// deterministic.
	friend bool operator<(Subspace const &a, Subspace const &b)
	{
		if (a.dim() != b.dim())
			return a.dim() < b.dim();
		for (std::size_t r = 0; r < a.dim(); ++r)
			for (std::size_t c = 0; c < a.ambient_; ++c)
				if (a.basis_(r, c) != b.basis_(r, c))
					return a.basis_(r, c) > b.basis_(r, c);
		return false;
	}

private:
	std::size_t ambient_ = 0;
	Matrix basis_;
	std::vector<std::size_t> pivots_;
};

/// Canonical span of `vectors` in Q^ambient_dim.
inline Subspace canonicalize(std::vector<Vector> const &vectors, std::size_t ambient_dim)
{
	return Subspace::span(vectors, ambient_dim);
}

inline Subspace sum(Subspace const &a, Subspace const &b)
{
	a.check_ambient(b, "subspace sum");
	auto vectors = a.basis_vectors();
	for (auto &v : b.basis_vectors())
		vectors.push_back(std::move(v));
	return Subspace::span(vectors, a.ambient_dim());
}

/// A ∩ B computed as (A⊥ + B⊥)⊥.
inline Subspace intersect(Subspace const &a, Subspace const &b)
{
	a.check_ambient(b, "subspace intersection");
	return sum(a.perp(), b.perp()).perp();
}

inline bool contains(Subspace const &a, Vector const &v)
{
	require_length(v, a.ambient_dim(), "subspace membership");
	return a.contains(v);
}

/// "<e1+e2, e2>" style rendering of the canonical basis; "0" for the zero
/// subspace.
inline std::string render_subspace(Subspace const &s)
{
	if (s.is_zero())
		return "0";
	std::string out = "<";
	auto rows = s.basis_vectors();
	for (std::size_t i = 0; i < rows.size(); ++i)
	{
		if (i)
			out += ", ";
		out += render_vector(rows[i]);
	}
	return out + ">";
}

} // namespace bol
