#pragma once

#include "bol/algebra.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bol {

/// The four identity groups checked for a Bol algebra.
enum class Identity
{
	B1, ///< ξ·ξ = 0
	B2, ///< (ξ,η,ζ) + (η,ζ,ξ) + (ζ,ξ,η) = 0
	B3, ///< (ξ,η,ζ)χ − (ξ,η,χ)ζ + (ζ,χ,ξη) − (ξ,η,ζχ) + ξη·ζχ = 0
	B4, ///< (ξ,η,(ζ,χ,ω)) = ((ξ,η,ζ),χ,ω) + (ζ,(ξ,η,χ),ω) + (ζ,χ,(ξ,η,ω))
};

inline constexpr std::array<Identity, 4> all_identities{Identity::B1, Identity::B2,
                                                        Identity::B3, Identity::B4};

inline char const *identity_name(Identity id)
{
	switch (id)
	{
	case Identity::B1: return "B1";
	case Identity::B2: return "B2";
	case Identity::B3: return "B3";
	case Identity::B4: return "B4";
	}
	return "?";
}

inline std::size_t identity_arity(Identity id)
{
	switch (id)
	{
	case Identity::B1: return 2;
	case Identity::B2: return 3;
	case Identity::B3: return 4;
	case Identity::B4: return 5;
	}
	return 0;
}

struct IdentityVerdict
{
	Identity identity;
	bool pass = true;
	/// First failing basis tuple in lexicographic order, 0-based.
	std::vector<std::size_t> witness;
	Vector residual;

	/// Witness with 1-based indices, as printed in reports: "(1,2,3)".
	std::string witness_text() const
	{
		std::string s = "(";
		for (std::size_t i = 0; i < witness.size(); ++i)
			s += (i ? "," : "") + std::to_string(witness[i] + 1);
		return s + ")";
	}
};

struct AxiomReport
{
	std::array<IdentityVerdict, 4> verdicts{
	    IdentityVerdict{Identity::B1, true, {}, {}}, IdentityVerdict{Identity::B2, true, {}, {}},
	    IdentityVerdict{Identity::B3, true, {}, {}}, IdentityVerdict{Identity::B4, true, {}, {}}};

	IdentityVerdict const &operator[](Identity id) const
	{
		return verdicts[static_cast<std::size_t>(id)];
	}
	bool all_pass() const
	{
		for (auto const &v : verdicts)
			if (!v.pass)
				return false;
		return true;
	}
};

// ---------------------------------------------------------------------------
// Residuals on arbitrary vectors. Each is zero exactly when the identity
// holds at that tuple.

template <class R>
std::vector<R> commutativity_residual(BolAlgebra const &V, std::vector<R> const &x)
{
	return bilinear_product(V, x, x);
}

template <class R>
std::vector<R> cyclic_residual(BolAlgebra const &V, std::vector<R> const &x,
                               std::vector<R> const &y, std::vector<R> const &z)
{
	auto r = trilinear_product(V, x, y, z);
	auto b = trilinear_product(V, y, z, x);
	auto c = trilinear_product(V, z, x, y);
	for (std::size_t i = 0; i < r.size(); ++i)
		r[i] += b[i] + c[i];
	return r;
}

template <class R>
std::vector<R> mixed_residual(BolAlgebra const &V, std::vector<R> const &x,
                              std::vector<R> const &y, std::vector<R> const &z,
                              std::vector<R> const &w)
{
	auto xy = bilinear_product(V, x, y);
	auto zw = bilinear_product(V, z, w);
	auto t1 = bilinear_product(V, trilinear_product(V, x, y, z), w);
	auto t2 = bilinear_product(V, trilinear_product(V, x, y, w), z);
	auto t3 = trilinear_product(V, z, w, xy);
	auto t4 = trilinear_product(V, x, y, zw);
	auto t5 = bilinear_product(V, xy, zw);
	for (std::size_t i = 0; i < t1.size(); ++i)
		t1[i] += t3[i] + t5[i] - t2[i] - t4[i];
	return t1;
}

template <class R>
std::vector<R> derivation_residual(BolAlgebra const &V, std::vector<R> const &x,
                                   std::vector<R> const &y, std::vector<R> const &z,
                                   std::vector<R> const &w, std::vector<R> const &u)
{
	auto lhs = trilinear_product(V, x, y, trilinear_product(V, z, w, u));
	auto r1 = trilinear_product(V, trilinear_product(V, x, y, z), w, u);
	auto r2 = trilinear_product(V, z, trilinear_product(V, x, y, w), u);
	auto r3 = trilinear_product(V, z, w, trilinear_product(V, x, y, u));
	for (std::size_t i = 0; i < lhs.size(); ++i)
		lhs[i] -= r1[i] + r2[i] + r3[i];
	return lhs;
}

/// Residual of `id` at the given vectors (as many as the identity's arity).
inline Vector identity_residual(BolAlgebra const &V, Identity id,
                                std::vector<Vector> const &args)
{
	if (args.size() != identity_arity(id))
		throw MalformedInput(std::string("identity_residual: ") + identity_name(id) +
		                     " takes " + std::to_string(identity_arity(id)) + " vectors");
	switch (id)
	{
	case Identity::B1: return commutativity_residual(V, args[0]);
	case Identity::B2: return cyclic_residual(V, args[0], args[1], args[2]);
	case Identity::B3: return mixed_residual(V, args[0], args[1], args[2], args[3]);
	case Identity::B4:
		return derivation_residual(V, args[0], args[1], args[2], args[3], args[4]);
	}
	return {};
}

namespace detail {

/// Basis products precomputed as vectors, with the slot-linear helpers the
/// basis-tuple checks need.
class BasisTables
{
public:
	explicit BasisTables(BolAlgebra const &V) : n_(V.dim())
	{
		bin_.resize(n_ * n_);
		ter_.resize(n_ * n_ * n_);
		for (std::size_t j = 0; j < n_; ++j)
			for (std::size_t k = 0; k < n_; ++k)
			{
				Vector v(n_);
				for (std::size_t i = 0; i < n_; ++i)
					v[i] = V.T(i, j, k);
				bin_[j * n_ + k] = std::move(v);
				for (std::size_t l = 0; l < n_; ++l)
				{
					Vector w(n_);
					for (std::size_t i = 0; i < n_; ++i)
						w[i] = V.A(i, j, k, l);
					ter_[(j * n_ + k) * n_ + l] = std::move(w);
				}
			}
	}

	Vector const &bin(std::size_t j, std::size_t k) const { return bin_[j * n_ + k]; }
	Vector const &ter(std::size_t j, std::size_t k, std::size_t l) const
	{
		return ter_[(j * n_ + k) * n_ + l];
	}

	/// v·e_k
	Vector bin_left(Vector const &v, std::size_t k) const
	{
		Vector out(n_, Scalar(0));
		for (std::size_t s = 0; s < n_; ++s)
			if (sgn(v[s]) != 0)
				axpy(out, v[s], bin(s, k));
		return out;
	}
	/// (v, e_k, e_l), (e_j, v, e_l), (e_j, e_k, v)
	Vector ter_slot(std::size_t slot, Vector const &v, std::size_t a, std::size_t b) const
	{
		Vector out(n_, Scalar(0));
		for (std::size_t s = 0; s < n_; ++s)
		{
			if (sgn(v[s]) == 0)
				continue;
			Vector const &t = slot == 0 ? ter(s, a, b) : slot == 1 ? ter(a, s, b) : ter(a, b, s);
			axpy(out, v[s], t);
		}
		return out;
	}

	static void axpy(Vector &out, Scalar const &a, Vector const &x)
	{
		for (std::size_t i = 0; i < out.size(); ++i)
			if (sgn(x[i]) != 0)
				out[i] += a * x[i];
	}

private:
	std::size_t n_;
	std::vector<Vector> bin_;
	std::vector<Vector> ter_;
};

} // namespace detail

/// Checks the identities on every basis tuple; by multilinearity this decides
/// them for all vectors. Each failing identity records the lexicographically
/// first failing tuple and its residual. Cost is O(n^5) tuples; intended for
/// dimensions up to about 8.
inline AxiomReport check_axioms(BolAlgebra const &V)
{
	std::size_t const n = V.dim();
	detail::BasisTables tab(V);
	AxiomReport report;
	auto fail = [&](Identity id, std::vector<std::size_t> tuple, Vector residual) {
		auto &v = report.verdicts[static_cast<std::size_t>(id)];
		v.pass = false;
		v.witness = std::move(tuple);
		v.residual = std::move(residual);
	};

	// B1 as antisymmetry of the binary tensor.
	for (std::size_t j = 0; j < n && report[Identity::B1].pass; ++j)
		for (std::size_t k = j; k < n; ++k)
		{
			Vector r = j == k ? tab.bin(j, j) : tab.bin(j, k) + tab.bin(k, j);
			if (!is_zero(r))
			{
				fail(Identity::B1, {j, k}, std::move(r));
				break;
			}
		}

	for (std::size_t a = 0; a < n && report[Identity::B2].pass; ++a)
		for (std::size_t b = 0; b < n && report[Identity::B2].pass; ++b)
			for (std::size_t c = 0; c < n; ++c)
			{
				Vector r = tab.ter(a, b, c) + tab.ter(b, c, a) + tab.ter(c, a, b);
				if (!is_zero(r))
				{
					fail(Identity::B2, {a, b, c}, std::move(r));
					break;
				}
			}

	// (ξ,η,ζ)χ − (ξ,η,χ)ζ + (ζ,χ,ξη) − (ξ,η,ζχ) + ξη·ζχ
	bool b3 = true;
	for (std::size_t a = 0; a < n && b3; ++a)
		for (std::size_t b = 0; b < n && b3; ++b)
			for (std::size_t c = 0; c < n && b3; ++c)
				for (std::size_t d = 0; d < n; ++d)
				{
					Vector r = tab.bin_left(tab.ter(a, b, c), d);
					Vector t2 = tab.bin_left(tab.ter(a, b, d), c);
					Vector t3 = tab.ter_slot(2, tab.bin(a, b), c, d);
					Vector t4 = tab.ter_slot(2, tab.bin(c, d), a, b);
					Vector t5 = bilinear_product(V, tab.bin(a, b), tab.bin(c, d));
					for (std::size_t i = 0; i < n; ++i)
						r[i] += t3[i] + t5[i] - t2[i] - t4[i];
					if (!is_zero(r))
					{
						fail(Identity::B3, {a, b, c, d}, std::move(r));
						b3 = false;
						break;
					}
				}

	// (ξ,η,(ζ,χ,ω)) − ((ξ,η,ζ),χ,ω) − (ζ,(ξ,η,χ),ω) − (ζ,χ,(ξ,η,ω))
	bool b4 = true;
	for (std::size_t a = 0; a < n && b4; ++a)
		for (std::size_t b = 0; b < n && b4; ++b)
			for (std::size_t c = 0; c < n && b4; ++c)
				for (std::size_t d = 0; d < n && b4; ++d)
					for (std::size_t e = 0; e < n; ++e)
					{
						Vector r = tab.ter_slot(2, tab.ter(c, d, e), a, b);
						Vector r1 = tab.ter_slot(0, tab.ter(a, b, c), d, e);
						Vector r2 = tab.ter_slot(1, tab.ter(a, b, d), c, e);
						Vector r3 = tab.ter_slot(2, tab.ter(a, b, e), c, d);
						for (std::size_t i = 0; i < n; ++i)
							r[i] -= r1[i] + r2[i] + r3[i];
						if (!is_zero(r))
						{
							fail(Identity::B4, {a, b, c, d, e}, std::move(r));
							b4 = false;
							break;
						}
					}
	return report;
}

} // namespace bol
