#include "bol/bol.hpp"

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

BolAlgebra type_i() { return catalog::get("type-i").algebra; }

} // namespace

TEST(Levi, claimed_type_i_splitting_verifies)
{
	auto V = type_i();
	auto S = Subspace::line(v({0, 0, 1}));
	auto R = Subspace::span({v({1, 1, 0}), v({0, 1, 0})}, 3);
	auto c = verify_levi(V, S, R);
	EXPECT_TRUE(c.subalgebra);
	EXPECT_TRUE(c.trivial_intersection);
	EXPECT_TRUE(c.full_sum);
	EXPECT_TRUE(c.preserves_operations);
}

TEST(Levi, failed_checks_are_reported)
{
	auto V = type_i();
	auto R = Subspace::span({v({1, 0, 0}), v({0, 1, 0})}, 3);
	auto c = verify_levi(V, Subspace::line(v({0, 1, 0})), R);
	EXPECT_TRUE(c.subalgebra);
	EXPECT_FALSE(c.trivial_intersection);
	EXPECT_FALSE(c.full_sum);
	EXPECT_FALSE(c.all());
	EXPECT_THROW(verify_levi(V, Subspace::zero(3), Subspace::line(v({1, 0, 0}))),
	             PreconditionError);
}

TEST(Levi, type_i_has_trivial_complement)
{
	auto r = levi_complement(type_i());
	EXPECT_TRUE(r.found);
	EXPECT_TRUE(r.radical.is_full());
	EXPECT_TRUE(r.complement.is_zero());
}

TEST(Levi, direct_sum_splits)
{
	auto V = direct_sum(catalog::get("sl2-bol").algebra, type_i());
	auto r = levi_complement(V);
	ASSERT_TRUE(r.found);
	std::vector<Vector> sl2_block{v({1, 0, 0, 0, 0, 0}), v({0, 1, 0, 0, 0, 0}),
	                              v({0, 0, 1, 0, 0, 0})};
	EXPECT_EQ(r.complement, Subspace::span(sl2_block, 6));
	EXPECT_EQ(r.radical.dim() + r.complement.dim(), 6u);
	EXPECT_EQ(r.radical.dim(), 3u);
	EXPECT_TRUE(r.checks.all());
}

TEST(Levi, refuses_non_bol)
{
	auto V = catalog::get("type-iv", {{"x", Scalar(1)}, {"p", Scalar(1)}}).algebra;
	EXPECT_THROW(levi_complement(V), InvalidAlgebra);
}

TEST(Levi, skewed_basis_uses_exact_solve)
{
	auto base = testgen::lts_plane_plus_line();
	ASSERT_TRUE(check_axioms(base).all_pass());
	// e3' = e3 + e1 + e2 makes the coordinate complement miss
	Matrix P = Matrix::from_rows({v({1, 0, 1}), v({0, 1, 1}), v({0, 0, 1})}, 3);
	auto V = testgen::change_basis(base, P);
	auto r = levi_complement(V);
	ASSERT_TRUE(r.found) << r.diagnosis;
	EXPECT_EQ(r.radical.dim(), 1u);
	EXPECT_EQ(r.complement.dim(), 2u);
	EXPECT_EQ(r.method, "symbolic");
	EXPECT_TRUE(r.checks.all());
	EXPECT_TRUE(verify_levi(V, r.complement, r.radical).all());
}

TEST(Levi, results_always_verify)
{
	testgen::Rng rng(41);
	for (int trial = 0; trial < 30; ++trial)
	{
		std::size_t const n = 1 + testgen::pick(rng, 3);
		auto V = testgen::random_bol(rng, n);
		auto r = levi_complement(V);
		if (r.found)
		{
			EXPECT_TRUE(verify_levi(V, r.complement, r.radical).all());
			EXPECT_EQ(r.complement.dim() + r.radical.dim(), n);
			EXPECT_TRUE(oracle::is_ideal(V, r.radical.basis_vectors()));
		}
		else
			EXPECT_FALSE(r.diagnosis.empty());
	}
}
