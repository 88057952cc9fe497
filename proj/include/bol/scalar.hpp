#pragma once

#include "bol/errors.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

namespace bol {

/// Exact rational number. GMP keeps it in lowest terms with a positive
/// denominator as long as every value goes through canonicalize(), which
/// make_scalar and parse_scalar do.
using Scalar = mpq_class;

/// Coordinate vector in the standard basis e_1..e_n.
using Vector = std::vector<Scalar>;

inline Scalar make_scalar(long num, long den = 1)
{
	if (den == 0)
		throw MalformedInput("zero denominator");
	Scalar q(num, den);
	q.canonicalize();
	return q;
}

/// Parses "p" or "p/q" with an optional sign. Throws MalformedInput on
/// anything else, including a zero denominator.
inline Scalar parse_scalar(std::string_view text)
{
	static std::regex const pattern(R"([+-]?[0-9]+(/[0-9]+)?)");
	std::string s(text);
	if (!std::regex_match(s, pattern))
		throw MalformedInput("malformed rational '" + s + "'");
	if (s.front() == '+')
		s.erase(0, 1);
	auto slash = s.find('/');
	if (slash != std::string::npos &&
	    s.find_first_not_of('0', slash + 1) == std::string::npos)
		throw MalformedInput("zero denominator in '" + std::string(text) + "'");
	Scalar q(s, 10);
	q.canonicalize();
	return q;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(Scalar const &q) { return q.get_str(); }

inline bool is_zero(Vector const &v)
{
	for (auto const &x : v)
		if (sgn(x) != 0)
			return false;
	return true;
}

inline Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i)
{
	Vector v(n, Scalar(0));
	v.at(i) = 1;
	return v;
}

inline void require_length(Vector const &v, std::size_t n, char const *what)
{
	if (v.size() != n)
		throw MalformedInput(std::string(what) + ": expected length " +
		                     std::to_string(n) + ", got " +
		                     std::to_string(v.size()));
}

inline Vector operator+(Vector const &a, Vector const &b)
{
	require_length(b, a.size(), "vector sum");
	Vector r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i] = a[i] + b[i];
	return r;
}

inline Vector operator-(Vector const &a, Vector const &b)
{
	require_length(b, a.size(), "vector difference");
	Vector r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i] = a[i] - b[i];
	return r;
}

inline Vector operator*(Scalar const &s, Vector const &v)
{
	Vector r(v.size());
	for (std::size_t i = 0; i < v.size(); ++i)
		r[i] = s * v[i];
	return r;
}

/// Renders v as a combination of basis vectors, e.g. "e1+e2", "2e1-1/2e3",
/// "0".
inline std::string render_vector(Vector const &v)
{
	std::string out;
	for (std::size_t i = 0; i < v.size(); ++i)
	{
		if (sgn(v[i]) == 0)
			continue;
		Scalar mag = abs(v[i]);
		if (sgn(v[i]) < 0)
			out += "-";
		else if (!out.empty())
			out += "+";
		if (mag != 1)
			out += to_string(mag);
		out += "e" + std::to_string(i + 1);
	}
	return out.empty() ? "0" : out;
}

} // namespace bol
