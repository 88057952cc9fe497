#pragma once

// boltext: a line-oriented text format for algebras given by structure
// constants.
//
//     boltext 1
//     dim 3
//     # e1·e3 = e1 + e2
//     bin 1 3 -> 1:1, 2:1
//     bin 2 3 -> 2:1
//     tri 1 2 3 -> 1:1
//     meta label type-i
//
// Indices are 1-based. Coefficients are "p" or "p/q". Unlisted constants are
// zero. A "bin j k" record implies the mirrored "bin k j"; if both are given
// they must be exact negatives.

#include "bol/algebra.hpp"
#include "bol/geometry.hpp"

#include <cctype>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bol::boltext {

inline constexpr std::size_t max_dim = 32;

namespace detail {

inline std::string_view trim(std::string_view s)
{
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
		s.remove_prefix(1);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
		s.remove_suffix(1);
	return s;
}

inline std::vector<std::string> split_ws(std::string_view s)
{
	std::vector<std::string> out;
	std::istringstream in{std::string(s)};
	for (std::string tok; in >> tok;)
		out.push_back(tok);
	return out;
}

inline std::size_t parse_index(std::string const &tok, std::size_t dim, std::size_t line)
{
	if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
		throw ParseError(line, "malformed index '" + tok + "'");
	unsigned long v = 0;
	try
	{
		v = std::stoul(tok);
	}
	catch (std::exception const &)
	{
		throw ParseError(line, "malformed index '" + tok + "'");
	}
	if (v < 1 || v > dim)
		throw ParseError(line, "index " + tok + " out of range 1.." + std::to_string(dim));
	return v - 1;
}

/// "i:q, i:q, ..." → coefficient per 0-based output index.
inline std::map<std::size_t, Scalar> parse_terms(std::string_view s, std::size_t dim,
                                                 std::size_t line)
{
	std::map<std::size_t, Scalar> out;
	std::string text(s);
	std::size_t start = 0;
	for (;;)
	{
		std::size_t comma = text.find(',', start);
		std::string_view item =
		    trim(std::string_view(text).substr(start, comma == std::string::npos
		                                                  ? std::string::npos
		                                                  : comma - start));
		auto colon = item.find(':');
		if (colon == std::string_view::npos)
			throw ParseError(line, "expected '<index>:<coefficient>', got '" + std::string(item) +
			                           "'");
		std::size_t idx = parse_index(std::string(trim(item.substr(0, colon))), dim, line);
		Scalar q;
		try
		{
			q = parse_scalar(trim(item.substr(colon + 1)));
		}
		catch (MalformedInput const &e)
		{
			throw ParseError(line, e.what());
		}
		if (!out.emplace(idx, q).second)
			throw ParseError(line, "output index " + std::to_string(idx + 1) + " repeated");
		if (comma == std::string::npos)
			break;
		start = comma + 1;
	}
	return out;
}

} // namespace detail

namespace detail {

struct Record
{
	std::string keyword;
	std::vector<std::string> index_tokens;
	std::vector<std::size_t> indices;
	std::map<std::size_t, Scalar> terms;
	std::size_t line;
};

/// Reads header and dim, then hands each "<kw> <indices> -> <terms>" record
/// to on_record and each meta line to on_meta. arity maps keyword to the
/// number of input indices; other keywords are errors.
template <class OnDim, class OnRecord, class OnMeta>
void scan(std::string_view text, std::map<std::string, std::size_t> const &arity, OnDim on_dim,
          OnRecord on_record, OnMeta on_meta)
{
	std::size_t line_no = 0;
	std::istringstream in{std::string(text)};
	std::string raw;
	int stage = 0; // 0: want header, 1: want dim, 2: records
	std::size_t n = 0;

	while (std::getline(in, raw))
	{
		++line_no;
		std::string_view line = raw;
		if (auto hash = line.find('#'); hash != std::string_view::npos)
			line = line.substr(0, hash);
		line = trim(line);
		if (line.empty())
			continue;

		if (stage == 0)
		{
			auto toks = split_ws(line);
			if (toks.size() != 2 || toks[0] != "boltext")
				throw ParseError(line_no, "expected header 'boltext 1'");
			if (toks[1] != "1")
				throw ParseError(line_no, "unsupported boltext version '" + toks[1] + "'");
			stage = 1;
			continue;
		}
		if (stage == 1)
		{
			auto toks = split_ws(line);
			if (toks.size() != 2 || toks[0] != "dim" || toks[1].empty() ||
			    toks[1].find_first_not_of("0123456789") != std::string::npos)
				throw ParseError(line_no, "expected 'dim <n>'");
			if (toks[1].size() > 6 || std::stoul(toks[1]) > max_dim)
				throw ParseError(line_no, "dimension " + toks[1] + " exceeds " +
				                              std::to_string(max_dim));
			n = std::stoul(toks[1]);
			on_dim(n);
			stage = 2;
			continue;
		}

		auto space = line.find_first_of(" \t");
		std::string keyword(line.substr(0, space));
		std::string_view rest = space == std::string_view::npos ? "" : trim(line.substr(space));

		if (keyword == "meta")
		{
			auto sp = rest.find_first_of(" \t");
			if (rest.empty() || sp == std::string_view::npos)
				throw ParseError(line_no, "expected 'meta <key> <value>'");
			on_meta(std::string(rest.substr(0, sp)), std::string(trim(rest.substr(sp))));
			continue;
		}
		auto want = arity.find(keyword);
		if (want == arity.end())
			throw ParseError(line_no, "unknown record '" + keyword + "'");

		auto arrow = rest.find("->");
		if (arrow == std::string_view::npos)
			throw ParseError(line_no, "expected '->' in " + keyword + " record");
		Record r;
		r.keyword = keyword;
		r.line = line_no;
		r.index_tokens = split_ws(rest.substr(0, arrow));
		if (r.index_tokens.size() != want->second)
			throw ParseError(line_no, keyword + " record needs " + std::to_string(want->second) +
			                              " input indices");
		for (auto const &t : r.index_tokens)
			r.indices.push_back(parse_index(t, n, line_no));
		r.terms = parse_terms(rest.substr(arrow + 2), n, line_no);
		on_record(r);
	}
	if (stage == 0)
		throw ParseError(line_no ? line_no : 1, "empty document: expected header 'boltext 1'");
	if (stage == 1)
		throw ParseError(line_no, "missing 'dim <n>' line");
}

/// Antisymmetric binary table filled from "j k" records: the mirror is
/// implied, and if also given must be the exact negative.
class AntisymmetricTable
{
public:
	explicit AntisymmetricTable(std::string name) : name_(std::move(name)) {}

	void reset(std::size_t n) { table_ = Tensor3(n); }
	Tensor3 &table() { return table_; }

	void add(Record const &r)
	{
		std::size_t const n = table_.dim();
		std::size_t j = r.indices[0], k = r.indices[1];
		auto const &tok = r.index_tokens;
		if (j == k)
		{
			for (auto const &[i, q] : r.terms)
				if (sgn(q) != 0)
					throw ParseError(r.line, "antisymmetry conflict: e" + std::to_string(j + 1) +
					                             "·e" + std::to_string(j + 1) + " must vanish");
			return;
		}
		if (seen_.count({j, k}))
			throw ParseError(r.line, "duplicate record " + name_ + " " + tok[0] + " " + tok[1]);
		seen_[{j, k}] = r.line;
		Vector given(n, Scalar(0));
		for (auto const &[i, q] : r.terms)
			given[i] = q;
		if (seen_.count({k, j}))
		{
			for (std::size_t i = 0; i < n; ++i)
				if (table_(i, j, k) != given[i])
					throw ParseError(r.line, "antisymmetry conflict with line " +
					                             std::to_string(seen_[{k, j}]) + ": " + name_ + " " +
					                             tok[1] + " " + tok[0] + " is not the exact negative");
			return;
		}
		for (std::size_t i = 0; i < n; ++i)
		{
			table_(i, j, k) = given[i];
			table_(i, k, j) = -given[i];
		}
	}

private:
	std::string name_;
	Tensor3 table_;
	std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen_;
};

/// Ternary-shaped table taken verbatim, one record per input triple.
class TripleTable
{
public:
	explicit TripleTable(std::string name) : name_(std::move(name)) {}

	void reset(std::size_t n) { table_ = Tensor4(n); }
	Tensor4 &table() { return table_; }

	void add(Record const &r)
	{
		if (seen_.count(r.indices))
			throw ParseError(r.line, "duplicate record " + name_ + " " + r.index_tokens[0] + " " +
			                             r.index_tokens[1] + " " + r.index_tokens[2]);
		seen_[r.indices] = r.line;
		for (auto const &[i, q] : r.terms)
			table_(i, r.indices[0], r.indices[1], r.indices[2]) = q;
	}

private:
	std::string name_;
	Tensor4 table_;
	std::map<std::vector<std::size_t>, std::size_t> seen_;
};

template <class Coeff>
std::string render_terms(std::size_t n, Coeff coeff)
{
	std::string s;
	for (std::size_t i = 0; i < n; ++i)
	{
		Scalar const &q = coeff(i);
		if (sgn(q) == 0)
			continue;
		s += (s.empty() ? "" : ", ") + std::to_string(i + 1) + ":" + to_string(q);
	}
	return s;
}

inline void write_pairs(std::ostream &out, std::string const &tag, Tensor3 const &t)
{
	std::size_t const n = t.dim();
	for (std::size_t j = 0; j < n; ++j)
		for (std::size_t k = j + 1; k < n; ++k)
		{
			auto s = render_terms(n, [&](std::size_t i) -> Scalar const & { return t(i, j, k); });
			if (!s.empty())
				out << tag << " " << j + 1 << " " << k + 1 << " -> " << s << "\n";
		}
}

inline void write_triples(std::ostream &out, std::string const &tag, Tensor4 const &t)
{
	std::size_t const n = t.dim();
	for (std::size_t j = 0; j < n; ++j)
		for (std::size_t k = 0; k < n; ++k)
			for (std::size_t l = 0; l < n; ++l)
			{
				auto s =
				    render_terms(n, [&](std::size_t i) -> Scalar const & { return t(i, j, k, l); });
				if (!s.empty())
					out << tag << " " << j + 1 << " " << k + 1 << " " << l + 1 << " -> " << s << "\n";
			}
}

} // namespace detail

/// Parses a boltext document. Errors carry the offending line number.
inline BolAlgebra parse(std::string_view text)
{
	detail::AntisymmetricTable bin("bin");
	detail::TripleTable tri("tri");
	std::string label;
	Metadata meta;
	detail::scan(
	    text, {{"bin", 2}, {"tri", 3}},
	    [&](std::size_t n) {
		    bin.reset(n);
		    tri.reset(n);
	    },
	    [&](detail::Record const &r) {
		    if (r.keyword == "bin")
			    bin.add(r);
		    else
			    tri.add(r);
	    },
	    [&](std::string key, std::string value) {
		    if (key == "label")
			    label = std::move(value);
		    else
			    meta[std::move(key)] = std::move(value);
	    });
	return BolAlgebra(std::move(bin.table()), std::move(tri.table()), std::move(label),
	                  std::move(meta));
}

/// Canonical serialization: records sorted by input indices, only the j < k
/// half of the binary table, nonzero coefficients in lowest terms.
inline std::string serialize(BolAlgebra const &V)
{
	std::ostringstream out;
	out << "boltext 1\n" << "dim " << V.dim() << "\n";
	if (!V.label().empty())
		out << "meta label " << V.label() << "\n";
	for (auto const &[k, v] : V.metadata())
		out << "meta " << k << " " << v << "\n";
	detail::write_pairs(out, "bin", V.binary());
	detail::write_triples(out, "tri", V.ternary());
	return out.str();
}

/// Torsion data in the same format: "T j k -> ..." records for the torsion
/// (mirror implied, as for bin) and "DT j k l -> ..." records for its
/// derivative, taken verbatim with l the differentiation index. meta lines
/// are accepted and ignored.
inline TorsionData parse_torsion(std::string_view text)
{
	detail::AntisymmetricTable T("T");
	detail::TripleTable DT("DT");
	detail::scan(
	    text, {{"T", 2}, {"DT", 3}},
	    [&](std::size_t n) {
		    T.reset(n);
		    DT.reset(n);
	    },
	    [&](detail::Record const &r) {
		    if (r.keyword == "T")
			    T.add(r);
		    else
			    DT.add(r);
	    },
	    [](std::string, std::string) {});
	return {std::move(T.table()), std::move(DT.table())};
}

inline std::string serialize_torsion(TorsionData const &data)
{
	std::ostringstream out;
	out << "boltext 1\n" << "dim " << data.dim() << "\n";
	detail::write_pairs(out, "T", data.torsion);
	detail::write_triples(out, "DT", data.derivative);
	return out.str();
}

} // namespace bol::boltext
