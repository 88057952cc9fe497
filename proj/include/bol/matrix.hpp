#pragma once

#include "bol/scalar.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace bol {

/// Dense rectangular matrix of exact rationals, row-major. The shape is fixed
/// at construction.
class Matrix
{
public:
	Matrix() = default;

	Matrix(std::size_t rows, std::size_t cols)
	    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0))
	{}

	/// Builds a matrix whose rows are the given vectors; every vector must
	/// have length `cols`.
	static Matrix from_rows(std::vector<Vector> const &rows, std::size_t cols)
	{
		Matrix m(rows.size(), cols);
		for (std::size_t r = 0; r < rows.size(); ++r)
		{
			require_length(rows[r], cols, "matrix row");
			for (std::size_t c = 0; c < cols; ++c)
				m(r, c) = rows[r][c];
		}
		return m;
	}

	/// Builds a matrix whose columns are the given vectors.
	static Matrix from_columns(std::vector<Vector> const &cols, std::size_t rows)
	{
		Matrix m(rows, cols.size());
		for (std::size_t c = 0; c < cols.size(); ++c)
		{
			require_length(cols[c], rows, "matrix column");
			for (std::size_t r = 0; r < rows; ++r)
				m(r, c) = cols[c][r];
		}
		return m;
	}

	static Matrix identity(std::size_t n)
	{
		Matrix m(n, n);
		for (std::size_t i = 0; i < n; ++i)
			m(i, i) = 1;
		return m;
	}

	std::size_t rows() const noexcept { return rows_; }
	std::size_t cols() const noexcept { return cols_; }
	bool is_square() const noexcept { return rows_ == cols_; }

	Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	Scalar const &operator()(std::size_t r, std::size_t c) const
	{
		return data_[r * cols_ + c];
	}

	Vector row(std::size_t r) const
	{
		return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
	}

	Vector column(std::size_t c) const
	{
		Vector v(rows_);
		for (std::size_t r = 0; r < rows_; ++r)
			v[r] = (*this)(r, c);
		return v;
	}

	std::vector<Vector> row_vectors() const
	{
		std::vector<Vector> out;
		out.reserve(rows_);
		for (std::size_t r = 0; r < rows_; ++r)
			out.push_back(row(r));
		return out;
	}

	Matrix transpose() const
	{
		Matrix t(cols_, rows_);
		for (std::size_t r = 0; r < rows_; ++r)
			for (std::size_t c = 0; c < cols_; ++c)
				t(c, r) = (*this)(r, c);
		return t;
	}

	Vector apply(Vector const &v) const
	{
		require_length(v, cols_, "matrix-vector product");
		Vector out(rows_, Scalar(0));
		for (std::size_t r = 0; r < rows_; ++r)
			for (std::size_t c = 0; c < cols_; ++c)
				if (sgn(v[c]) != 0)
					out[r] += (*this)(r, c) * v[c];
		return out;
	}

	friend Matrix operator*(Matrix const &a, Matrix const &b)
	{
		if (a.cols_ != b.rows_)
			throw MalformedInput("matrix product: inner dimensions differ");
		Matrix m(a.rows_, b.cols_);
		for (std::size_t i = 0; i < a.rows_; ++i)
			for (std::size_t k = 0; k < a.cols_; ++k)
			{
				if (sgn(a(i, k)) == 0)
					continue;
				for (std::size_t j = 0; j < b.cols_; ++j)
					m(i, j) += a(i, k) * b(k, j);
			}
		return m;
	}

	friend Matrix operator-(Matrix const &a, Matrix const &b)
	{
		if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
			throw MalformedInput("matrix difference: shapes differ");
		Matrix m(a.rows_, a.cols_);
		for (std::size_t i = 0; i < a.data_.size(); ++i)
			m.data_[i] = a.data_[i] - b.data_[i];
		return m;
	}

	friend bool operator==(Matrix const &a, Matrix const &b)
	{
		return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
	}

private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<Scalar> data_;
};

/// Result of Gauss-Jordan elimination: the nonzero rows of the reduced
/// row-echelon form together with their pivot columns.
struct RowEchelon
{
	Matrix reduced;
	std::vector<std::size_t> pivots;
};

inline RowEchelon row_reduce(Matrix m)
{
	std::vector<std::size_t> pivots;
	std::size_t const rows = m.rows();
	std::size_t const cols = m.cols();
	std::size_t rank = 0;
	for (std::size_t c = 0; c < cols && rank < rows; ++c)
	{
		std::size_t p = rank;
		while (p < rows && sgn(m(p, c)) == 0)
			++p;
		if (p == rows)
			continue;
		if (p != rank)
			for (std::size_t k = 0; k < cols; ++k)
				std::swap(m(p, k), m(rank, k));
		Scalar const inv = 1 / m(rank, c);
		for (std::size_t k = c; k < cols; ++k)
			m(rank, k) *= inv;
		for (std::size_t r = 0; r < rows; ++r)
		{
			if (r == rank || sgn(m(r, c)) == 0)
				continue;
			Scalar const f = m(r, c);
			for (std::size_t k = c; k < cols; ++k)
				m(r, k) -= f * m(rank, k);
		}
		pivots.push_back(c);
		++rank;
	}
	Matrix reduced(rank, cols);
	for (std::size_t r = 0; r < rank; ++r)
		for (std::size_t c = 0; c < cols; ++c)
			reduced(r, c) = m(r, c);
	return {std::move(reduced), std::move(pivots)};
}

inline std::size_t rank(Matrix const &m) { return row_reduce(m).pivots.size(); }

/// Basis of {x : m x = 0}, one vector per free column, in increasing order of
/// the free column.
inline std::vector<Vector> kernel(Matrix const &m)
{
	auto [reduced, pivots] = row_reduce(m);
	std::size_t const n = m.cols();
	std::vector<bool> is_pivot(n, false);
	for (auto p : pivots)
		is_pivot[p] = true;
	std::vector<Vector> basis;
	for (std::size_t f = 0; f < n; ++f)
	{
		if (is_pivot[f])
			continue;
		Vector v(n, Scalar(0));
		v[f] = 1;
		for (std::size_t r = 0; r < pivots.size(); ++r)
			v[pivots[r]] = -reduced(r, f);
		basis.push_back(std::move(v));
	}
	return basis;
}

} // namespace bol
