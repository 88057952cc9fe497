#pragma once

#include <stdexcept>
#include <string>

namespace bol {

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

/// Vector lengths, tensor shapes or matrix sizes do not match.
class MalformedInput : public Error
{
public:
	using Error::Error;
};

class UnsupportedSize : public Error
{
public:
	using Error::Error;
};

/// An operation was called outside its documented domain (e.g. quotient by a
/// subspace that is not an ideal).
class PreconditionError : public Error
{
public:
	using Error::Error;
};

/// The structure theory produced something it should not have, such as a sum
/// of weakly solvable ideals that is not weakly solvable.
class StructuralAnomaly : public Error
{
public:
	using Error::Error;
};

/// A fixture generator was handed data that violates its own contract
/// (e.g. a bracket table that fails the Jacobi identity).
class InvalidFixture : public Error
{
public:
	using Error::Error;
};

/// The algebra fails the Bol identities and the requested computation
/// presupposes them.
class InvalidAlgebra : public Error
{
public:
	using Error::Error;
};

class ParseError : public Error
{
public:
	ParseError(std::size_t line, std::string const &what)
	    : Error("line " + std::to_string(line) + ": " + what), line_(line)
	{}

	std::size_t line() const noexcept { return line_; }

private:
	std::size_t line_;
};

class UnknownEntry : public Error
{
public:
	using Error::Error;
};

} // namespace bol
