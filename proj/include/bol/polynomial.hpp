#pragma once

#include "bol/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace bol {

// ---------------------------------------------------------------------------
// Univariate polynomials: coefficient vectors, lowest degree first.

using UniPoly = std::vector<Scalar>;

inline void trim(UniPoly &p)
{
	while (!p.empty() && sgn(p.back()) == 0)
		p.pop_back();
}

inline Scalar evaluate(UniPoly const &p, Scalar const &x)
{
	Scalar acc = 0;
	for (auto it = p.rbegin(); it != p.rend(); ++it)
		acc = acc * x + *it;
	return acc;
}

/// Divides p by (t - root), assuming root is a root. Returns the quotient.
inline UniPoly deflate(UniPoly const &p, Scalar const &root)
{
	if (p.size() < 2)
		return {};
	UniPoly q(p.size() - 1);
	Scalar carry = 0;
	for (std::size_t k = p.size(); k-- > 1;)
	{
		carry = p[k] + carry * root;
		q[k - 1] = carry;
	}
	return q;
}

namespace detail {

inline std::vector<mpz_class> positive_divisors(mpz_class n)
{
	n = abs(n);
	std::vector<mpz_class> small, large;
	for (mpz_class d = 1; d * d <= n; ++d)
	{
		if (n % d != 0)
			continue;
		small.push_back(d);
		mpz_class other = n / d;
		if (other != d)
			large.push_back(other);
	}
	small.insert(small.end(), large.rbegin(), large.rend());
	return small;
}

} // namespace detail

struct RationalRoot
{
	Scalar value;
	std::size_t multiplicity;
};

/// All rational roots of p with multiplicities, in increasing order, found by
/// the rational root theorem after clearing denominators. The zero
/// polynomial has every number as a root and is rejected.
inline std::vector<RationalRoot> rational_roots(UniPoly p)
{
	trim(p);
	if (p.empty())
		throw MalformedInput("rational_roots: zero polynomial");

	std::vector<RationalRoot> roots;
	std::size_t zero_mult = 0;
	while (sgn(p.front()) == 0)
	{
		p.erase(p.begin());
		++zero_mult;
	}
	if (zero_mult)
		roots.push_back({Scalar(0), zero_mult});
	if (p.size() == 1)
		return roots;

	mpz_class lcm_den = 1;
	for (auto const &c : p)
		mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
	mpz_class const a0 = Scalar(p.front() * lcm_den).get_num();
	mpz_class const an = Scalar(p.back() * lcm_den).get_num();

	std::vector<Scalar> candidates;
	for (auto const &num : detail::positive_divisors(a0))
		for (auto const &den : detail::positive_divisors(an))
		{
			Scalar q(num, den);
			q.canonicalize();
			candidates.push_back(q);
			candidates.push_back(-q);
		}
	std::sort(candidates.begin(), candidates.end());
	candidates.erase(std::unique(candidates.begin(), candidates.end()),
	                 candidates.end());

	for (auto const &c : candidates)
	{
		std::size_t mult = 0;
		while (p.size() > 1 && sgn(evaluate(p, c)) == 0)
		{
			p = deflate(p, c);
			++mult;
		}
		if (mult)
			roots.push_back({c, mult});
	}
	std::sort(roots.begin(), roots.end(),
	          [](auto const &a, auto const &b) { return a.value < b.value; });
	return roots;
}

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials over Q.

/// Exponent vector with trailing zeros removed, so equal monomials compare
/// equal regardless of how many variables are in play.
using Monomial = std::vector<unsigned>;

class Poly
{
public:
	Poly() = default;
	Poly(Scalar const &c)
	{
		if (sgn(c) != 0)
			terms_.emplace(Monomial{}, c);
	}
	Poly(long c) : Poly(Scalar(c)) {}

	static Poly variable(std::size_t index)
	{
		Monomial m(index + 1, 0);
		m[index] = 1;
		Poly p;
		p.terms_.emplace(std::move(m), Scalar(1));
		return p;
	}

	std::map<Monomial, Scalar> const &terms() const noexcept { return terms_; }

	bool is_zero() const noexcept { return terms_.empty(); }

	bool is_constant() const noexcept
	{
		return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
	}

	Scalar constant_term() const
	{
		auto it = terms_.find(Monomial{});
		return it == terms_.end() ? Scalar(0) : it->second;
	}

	unsigned total_degree() const
	{
		unsigned d = 0;
		for (auto const &[m, c] : terms_)
		{
			unsigned s = 0;
			for (auto e : m)
				s += e;
			d = std::max(d, s);
		}
		return d;
	}

	std::set<std::size_t> variables() const
	{
		std::set<std::size_t> vars;
		for (auto const &[m, c] : terms_)
			for (std::size_t i = 0; i < m.size(); ++i)
				if (m[i])
					vars.insert(i);
		return vars;
	}

	/// Coefficient of the degree-1 monomial in `var`.
	Scalar linear_coefficient(std::size_t var) const
	{
		Monomial m(var + 1, 0);
		m[var] = 1;
		auto it = terms_.find(m);
		return it == terms_.end() ? Scalar(0) : it->second;
	}

	/// Coefficients in `var`, lowest degree first. Requires `var` to be the only
	/// variable present.
	UniPoly univariate(std::size_t var) const
	{
		UniPoly out;
		for (auto const &[m, c] : terms_)
		{
			for (std::size_t i = 0; i < m.size(); ++i)
				if (i != var && m[i])
					throw MalformedInput("univariate: polynomial has other variables");
			unsigned e = var < m.size() ? m[var] : 0;
			if (out.size() <= e)
				out.resize(e + 1, Scalar(0));
			out[e] += c;
		}
		return out;
	}

	Poly substitute(std::size_t var, Poly const &value) const
	{
		Poly out;
		std::vector<Poly> powers{Poly(1)};
		for (auto const &[m, c] : terms_)
		{
			unsigned e = var < m.size() ? m[var] : 0;
			if (e == 0)
			{
				out.add_term(m, c);
				continue;
			}
			while (powers.size() <= e)
				powers.push_back(powers.back() * value);
			Monomial rest = m;
			rest[var] = 0;
			normalize(rest);
			Poly term;
			term.terms_.emplace(std::move(rest), c);
			out += term * powers[e];
		}
		return out;
	}

	Poly &operator+=(Poly const &o)
	{
		for (auto const &[m, c] : o.terms_)
			add_term(m, c);
		return *this;
	}

	Poly &operator-=(Poly const &o)
	{
		for (auto const &[m, c] : o.terms_)
			add_term(m, -c);
		return *this;
	}

	friend Poly operator+(Poly a, Poly const &b) { return a += b; }
	friend Poly operator-(Poly a, Poly const &b) { return a -= b; }
	friend Poly operator-(Poly const &a)
	{
		Poly r;
		for (auto const &[m, c] : a.terms_)
			r.terms_.emplace(m, -c);
		return r;
	}

	friend Poly operator*(Poly const &a, Poly const &b)
	{
		Poly r;
		for (auto const &[ma, ca] : a.terms_)
			for (auto const &[mb, cb] : b.terms_)
			{
				Monomial m(std::max(ma.size(), mb.size()), 0);
				for (std::size_t i = 0; i < ma.size(); ++i)
					m[i] += ma[i];
				for (std::size_t i = 0; i < mb.size(); ++i)
					m[i] += mb[i];
				r.add_term(m, ca * cb);
			}
		return r;
	}

	friend Poly operator*(Scalar const &s, Poly const &p)
	{
		Poly r;
		if (sgn(s) == 0)
			return r;
		for (auto const &[m, c] : p.terms_)
			r.terms_.emplace(m, s * c);
		return r;
	}

	friend bool operator==(Poly const &a, Poly const &b) { return a.terms_ == b.terms_; }

	std::string str() const
	{
		if (terms_.empty())
			return "0";
		std::string out;
		for (auto const &[m, c] : terms_)
		{
			if (!out.empty())
				out += " + ";
			out += to_string(c);
			for (std::size_t i = 0; i < m.size(); ++i)
				if (m[i])
					out += "*x" + std::to_string(i) +
					       (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
		}
		return out;
	}

private:
	static void normalize(Monomial &m)
	{
		while (!m.empty() && m.back() == 0)
			m.pop_back();
	}

	void add_term(Monomial m, Scalar const &c)
	{
		if (sgn(c) == 0)
			return;
		normalize(m);
		auto [it, inserted] = terms_.emplace(std::move(m), c);
		if (!inserted)
		{
			it->second += c;
			if (sgn(it->second) == 0)
				terms_.erase(it);
		}
	}

	std::map<Monomial, Scalar> terms_;
};

inline bool is_zero(Scalar const &s) { return sgn(s) == 0; }
inline bool is_zero(Poly const &p) { return p.is_zero(); }

// ---------------------------------------------------------------------------
// Exact solving of small polynomial systems by successive elimination.

enum class SolveStatus
{
	solved,
	infeasible, ///< proven to have no rational solution
	stuck,      ///< neither a linear nor a univariate equation was available
};

struct SolveResult
{
	SolveStatus status = SolveStatus::stuck;
	std::vector<Scalar> values; ///< one per variable when solved
};

namespace detail {

inline SolveResult solve_rec(std::vector<Poly> eqs, std::vector<std::optional<Poly>> assigned)
{
	auto substitute_all = [&](std::size_t var, Poly const &value) {
		for (auto &e : eqs)
			e = e.substitute(var, value);
		for (auto &a : assigned)
			if (a)
				*a = a->substitute(var, value);
		assigned[var] = value;
	};

	for (;;)
	{
		std::vector<Poly> live;
		for (auto &e : eqs)
		{
			if (e.is_zero())
				continue;
			if (e.is_constant())
				return {SolveStatus::infeasible, {}};
			live.push_back(std::move(e));
		}
		eqs = std::move(live);

		if (eqs.empty())
		{
			// Remaining free variables are unconstrained; pin them to zero.
			for (std::size_t v = 0; v < assigned.size(); ++v)
				if (!assigned[v])
					substitute_all(v, Poly(0));
			SolveResult r{SolveStatus::solved, {}};
			for (auto const &a : assigned)
				r.values.push_back(a->constant_term());
			return r;
		}

		auto linear = std::find_if(eqs.begin(), eqs.end(),
		                           [](Poly const &e) { return e.total_degree() == 1; });
		if (linear != eqs.end())
		{
			std::size_t var = *linear->variables().begin();
			Scalar coef = linear->linear_coefficient(var);
			Poly rest = *linear - coef * Poly::variable(var);
			substitute_all(var, Scalar(-1 / coef) * rest);
			continue;
		}

		auto uni = std::find_if(eqs.begin(), eqs.end(),
		                        [](Poly const &e) { return e.variables().size() == 1; });
		if (uni == eqs.end())
			return {SolveStatus::stuck, {}};

		std::size_t var = *uni->variables().begin();
		bool any_stuck = false;
		for (auto const &root : rational_roots(uni->univariate(var)))
		{
			auto branch_eqs = eqs;
			auto branch_assigned = assigned;
			for (auto &e : branch_eqs)
				e = e.substitute(var, root.value);
			for (auto &a : branch_assigned)
				if (a)
					*a = a->substitute(var, root.value);
			branch_assigned[var] = Poly(root.value);
			auto r = solve_rec(std::move(branch_eqs), std::move(branch_assigned));
			if (r.status == SolveStatus::solved)
				return r;
			any_stuck = any_stuck || r.status == SolveStatus::stuck;
		}
		return {any_stuck ? SolveStatus::stuck : SolveStatus::infeasible, {}};
	}
}

} // namespace detail

/// Finds one rational solution of eqs = 0 in `variable_count` unknowns, by
/// repeatedly eliminating a variable from a linear equation or branching on
/// the rational roots of a univariate one. Branches are explored in
/// increasing root order, so the answer is deterministic. Unconstrained
/// variables are set to zero.
inline SolveResult solve_polynomial_system(std::vector<Poly> eqs, std::size_t variable_count)
{
	return detail::solve_rec(std::move(eqs),
	                         std::vector<std::optional<Poly>>(variable_count));
}

} // namespace bol
