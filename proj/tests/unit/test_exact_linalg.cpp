#include "bol/eigen.hpp"
#include "bol/polynomial.hpp"
#include "bol/subspace.hpp"

#include "../support/oracle.hpp"
#include "../support/random_algebras.hpp"

#include <gtest/gtest.h>

using namespace bol;

namespace {

Vector v(std::initializer_list<long> xs)
{
	Vector out;
	for (long x : xs)
		out.push_back(Scalar(x));
	return out;
}

} // namespace

TEST(Scalar, parse_canonicalizes)
{
	EXPECT_EQ(parse_scalar("6/4"), Scalar(3, 2));
	EXPECT_EQ(to_string(parse_scalar("-6/4")), "-3/2");
	EXPECT_EQ(parse_scalar("+7"), Scalar(7));
	EXPECT_EQ(to_string(parse_scalar("0/5")), "0");
}

TEST(Scalar, parse_rejects_garbage)
{
	EXPECT_THROW(parse_scalar("1/0"), MalformedInput);
	EXPECT_THROW(parse_scalar("1.5"), MalformedInput);
	EXPECT_THROW(parse_scalar(""), MalformedInput);
	EXPECT_THROW(parse_scalar("x"), MalformedInput);
	EXPECT_THROW(parse_scalar("1/-2"), MalformedInput);
}

TEST(Scalar, render_vector)
{
	EXPECT_EQ(render_vector(v({1, 1, 0})), "e1+e2");
	EXPECT_EQ(render_vector({Scalar(0), Scalar(0), Scalar(-1, 2)}), "-1/2e3");
	EXPECT_EQ(render_vector(v({0, 0})), "0");
	EXPECT_EQ(render_vector(v({2, -1})), "2e1-e2");
}

TEST(Matrix, row_reduce_and_rank)
{
	Matrix m = Matrix::from_rows({v({1, 2, 3}), v({2, 4, 6}), v({1, 0, 1})}, 3);
	auto e = row_reduce(m);
	ASSERT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
	EXPECT_EQ(e.reduced.row(0), v({1, 0, 1}));
	EXPECT_EQ(e.reduced.row(1), v({0, 1, 1}));
	EXPECT_EQ(rank(m), 2u);
}

TEST(Matrix, kernel_is_annihilated)
{
	Matrix m = Matrix::from_rows({v({1, 2, 3, 4}), v({0, 1, 1, 1})}, 4);
	auto K = kernel(m);
	ASSERT_EQ(K.size(), 2u);
	for (auto const &k : K)
		EXPECT_TRUE(is_zero(m.apply(k)));
}

TEST(Subspace, canonical_basis_is_rref)
{
	// <e1+e2, e2> = <e1, e2>
	auto S = Subspace::span({v({1, 1, 0}), v({0, 1, 0})}, 3);
	EXPECT_EQ(S.dim(), 2u);
	EXPECT_EQ(render_subspace(S), "<e1, e2>");
	EXPECT_TRUE(S.contains(v({1, 1, 0})));
	EXPECT_FALSE(S.contains(v({0, 0, 1})));
	EXPECT_EQ(S.free_coordinates(), (std::vector<std::size_t>{2}));
}

TEST(Subspace, ordering_puts_e1_first)
{
	auto a = Subspace::line(v({1, 0, 0}));
	auto b = Subspace::line(v({0, 1, 0}));
	auto c = Subspace::span({v({1, 0, 0}), v({0, 1, 0})}, 3);
	EXPECT_TRUE(a < b);
	EXPECT_TRUE(b < c);
	EXPECT_FALSE(c < a);
}

TEST(Subspace, perp_of_plane)
{
	auto S = Subspace::span({v({1, 1, 0}), v({0, 0, 1})}, 3);
	EXPECT_EQ(S.perp(), Subspace::line(v({1, -1, 0})));
}

// Oracle: intersection by solving a·x = b·y directly.
TEST(Subspace, intersection_property)
{
	testgen::Rng rng(11);
	for (int trial = 0; trial < 200; ++trial)
	{
		std::size_t const n = 1 + testgen::pick(rng, 4);
		std::vector<Vector> A, B;
		for (std::size_t i = testgen::pick(rng, n + 1); i > 0; --i)
			A.push_back(testgen::random_vector(rng, n, 2));
		for (std::size_t i = testgen::pick(rng, n + 1); i > 0; --i)
			B.push_back(testgen::random_vector(rng, n, 2));
		auto SA = Subspace::span(A, n), SB = Subspace::span(B, n);
		auto I = intersect(SA, SB);

		// [A | -B] (a, b) = 0 ⇒ Σ a_i A_i lies in both.
		std::vector<Vector> cols;
		for (auto const &x : A)
			cols.push_back(x);
		for (auto const &y : B)
			cols.push_back(Scalar(-1) * y);
		std::vector<Vector> meet;
		if (!cols.empty())
			for (auto const &k : kernel(Matrix::from_columns(cols, n)))
			{
				Vector x(n, Scalar(0));
				for (std::size_t i = 0; i < A.size(); ++i)
					x = x + k[i] * A[i];
				meet.push_back(x);
			}
		EXPECT_EQ(I.dim(), oracle::rank(meet));
		for (auto const &x : meet)
			EXPECT_TRUE(I.contains(x));

		// dim formula
		EXPECT_EQ(sum(SA, SB).dim() + I.dim(), SA.dim() + SB.dim());
	}
}

TEST(Subspace, span_is_basis_independent)
{
	testgen::Rng rng(12);
	for (int trial = 0; trial < 100; ++trial)
	{
		std::size_t const n = 1 + testgen::pick(rng, 4);
		std::vector<Vector> gens;
		for (std::size_t i = 0; i < n; ++i)
			gens.push_back(testgen::random_vector(rng, n));
		auto S = Subspace::span(gens, n);
		// random recombination
		std::vector<Vector> mixed;
		for (std::size_t i = 0; i < gens.size(); ++i)
		{
			Vector x(n, Scalar(0));
			for (auto const &g : gens)
				x = x + testgen::small_rational(rng) * g;
			mixed.push_back(x);
		}
		auto T = Subspace::span(mixed, n);
		EXPECT_EQ(T.dim() <= S.dim(), true);
		EXPECT_TRUE(S.contains(T));
		if (oracle::same_span(gens, mixed))
		{
			EXPECT_EQ(S, T);
		}
	}
}

TEST(Polynomial, rational_roots_with_multiplicity)
{
	// (t - 1/2)^2 (t + 3) t = t^4 + 2 t^3 - 11/4 t^2 + 3/4 t
	UniPoly p{Scalar(0), Scalar(3, 4), Scalar(-11, 4), Scalar(2), Scalar(1)};
	auto r = rational_roots(p);
	ASSERT_EQ(r.size(), 3u);
	EXPECT_EQ(r[0].value, Scalar(-3));
	EXPECT_EQ(r[0].multiplicity, 1u);
	EXPECT_EQ(r[1].value, Scalar(0));
	EXPECT_EQ(r[2].value, Scalar(1, 2));
	EXPECT_EQ(r[2].multiplicity, 2u);
}

TEST(Polynomial, irrational_roots_are_skipped)
{
	// t^2 - 2
	EXPECT_TRUE(rational_roots(UniPoly{Scalar(-2), Scalar(0), Scalar(1)}).empty());
	EXPECT_THROW(rational_roots(UniPoly{}), MalformedInput);
}

TEST(Polynomial, roots_of_random_products)
{
	testgen::Rng rng(13);
	for (int trial = 0; trial < 50; ++trial)
	{
		UniPoly p{Scalar(1)};
		std::vector<Scalar> roots;
		for (std::size_t d = 1 + testgen::pick(rng, 4); d > 0; --d)
		{
			Scalar r = testgen::small_rational(rng, 4);
			roots.push_back(r);
			UniPoly q(p.size() + 1, Scalar(0));
			for (std::size_t i = 0; i < p.size(); ++i)
			{
				q[i + 1] += p[i];
				q[i] -= r * p[i];
			}
			p = q;
		}
		for (auto &c : p)
			c *= Scalar(3, 7); // content should not matter
		auto found = rational_roots(p);
		std::size_t total = 0;
		for (auto const &f : found)
		{
			total += f.multiplicity;
			EXPECT_EQ(std::count(roots.begin(), roots.end(), f.value),
			          static_cast<long>(f.multiplicity));
		}
		EXPECT_EQ(total, roots.size());
	}
}

TEST(Polynomial, solver_eliminates_and_branches)
{
	Poly x = Poly::variable(0), y = Poly::variable(1);
	// y = 2x, x^2 = 4x  → first rational branch is x = 0
	auto r = solve_polynomial_system({y - Scalar(2) * x, x * x - Scalar(4) * x}, 2);
	ASSERT_EQ(r.status, SolveStatus::solved);
	EXPECT_EQ(r.values, (std::vector<Scalar>{0, 0}));

	// x^2 = 2 has no rational solution
	auto none = solve_polynomial_system({x * x - Poly(2)}, 1);
	EXPECT_EQ(none.status, SolveStatus::infeasible);

	// 1 = 0
	EXPECT_EQ(solve_polynomial_system({Poly(1)}, 1).status, SolveStatus::infeasible);
}

TEST(Polynomial, solver_solutions_satisfy_system)
{
	testgen::Rng rng(14);
	for (int trial = 0; trial < 50; ++trial)
	{
		// linear system with a known solution, plus a quadratic consequence
		std::size_t const n = 1 + testgen::pick(rng, 3);
		Vector sol = testgen::random_vector(rng, n);
		std::vector<Poly> eqs;
		for (std::size_t e = 0; e < n; ++e)
		{
			Poly p;
			Scalar rhs = 0;
			for (std::size_t i = 0; i < n; ++i)
			{
				Scalar c = testgen::small_rational(rng);
				p = p + c * Poly::variable(i);
				rhs += c * sol[i];
			}
			eqs.push_back(p - Poly(rhs));
		}
		eqs.push_back(Poly::variable(0) * Poly::variable(0) - Poly(sol[0] * sol[0]));
		auto r = solve_polynomial_system(eqs, n);
		ASSERT_EQ(r.status, SolveStatus::solved);
		ASSERT_EQ(r.values.size(), n);
		for (auto const &p : eqs)
		{
			Poly q = p;
			for (std::size_t i = 0; i < n; ++i)
				q = q.substitute(i, Poly(r.values[i]));
			EXPECT_TRUE(q.is_zero()) << q.str();
		}
	}
}

TEST(Eigen, characteristic_polynomial_of_companion)
{
	// companion of t^3 - 6t^2 + 11t - 6 = (t-1)(t-2)(t-3)
	Matrix m = Matrix::from_rows({v({0, 0, 6}), v({1, 0, -11}), v({0, 1, 6})}, 3);
	EXPECT_EQ(characteristic_polynomial(m), (UniPoly{-6, 11, -6, 1}));
	auto e = rational_eigenlines(m);
	ASSERT_EQ(e.rational.size(), 3u);
	EXPECT_EQ(e.rational[0].value, Scalar(1));
	EXPECT_EQ(e.rational[2].value, Scalar(3));
	for (auto const &l : e.rational)
	{
		auto x = l.space.basis_vectors().at(0);
		EXPECT_EQ(m.apply(x), l.value * x);
	}
	EXPECT_EQ(e.irrational_count, 0u);
}

TEST(Eigen, rotation_has_no_rational_lines)
{
	Matrix m = Matrix::from_rows({v({0, -1}), v({1, 0})}, 2);
	auto e = rational_eigenlines(m);
	EXPECT_TRUE(e.rational.empty());
	EXPECT_EQ(e.irrational_count, 2u);
}

TEST(Eigen, size_limits)
{
	EXPECT_THROW(rational_eigenlines(Matrix::identity(5)), UnsupportedSize);
	EXPECT_THROW(rational_eigenlines(Matrix(2, 3)), MalformedInput);
}
