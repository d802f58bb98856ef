#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ybe/rational.hpp"
#include "ybe/solution.hpp"

namespace ybe {

/// Everything a solution file can carry. `coefficients` holds the
/// explicitly listed `coef` lines keyed by their source pair.
struct SolutionDocument {
  SolutionMap solution;
  std::map<Pair, Rational> coefficients;
};

/// Parses the `ybe-solution v1` text format. Unlisted pairs are fixed
/// points of r. Throws ParseError with line and column.
SolutionDocument parse_solution_document(std::string_view text);
SolutionMap parse_solution(std::string_view text);

/// Fixed points are omitted; `coef` lines are written only for
/// coefficients different from 1.
std::string serialize(const SolutionMap& s);
std::string serialize(const SolutionMap& s, const std::map<Pair, Rational>& coefficients);

/// JSON rendering with fields `n`, `names`, `map` (list of 1-based
/// 4-tuples) and optionally `coef` (list of [i, j, k, l, "p/q"]).
nlohmann::json to_json(const SolutionMap& s);
SolutionDocument parse_solution_json(const nlohmann::json& j);

/// Reads a file and dispatches on its first non-blank character: `{`
/// selects JSON, anything else the text format.
SolutionDocument load_solution_file(const std::string& path);
std::string read_file(const std::string& path);

/// Cross maps for a union of two solutions on X (size nx) and Y (size ny):
/// `xy` maps X x Y -> Y x X and `yx` maps Y x X -> X x Y. Entries are
/// local 0-based indices into X and Y respectively.
struct CrossMaps {
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<Pair> xy;  // index x * ny + y -> (y', x')
  std::vector<Pair> yx;  // index y * nx + x -> (x', y')
};

/// `ybe-cross v1` format: `xmap <x> <y> -> <y'> <x'>` and
/// `ymap <y> <x> -> <x'> <y'>`, 1-based indices into X and Y. Every pair
/// must be listed.
CrossMaps parse_cross_maps(std::string_view text, std::size_t nx, std::size_t ny);
std::string serialize(const CrossMaps& c);

/// Whitespace-separated generator names, e.g. "x3 x2 x1".
std::vector<Index> parse_word(const SolutionMap& s, std::string_view text);
std::string format_word(const SolutionMap& s, const std::vector<Index>& word);

/// A monomial in the free abelian monoid on u_1..u_n, e.g. "u2^2 u4";
/// returns exponents indexed by generator. "1" is the empty monomial.
std::vector<unsigned> parse_u_monomial(std::string_view text, std::size_t n);

}  // namespace ybe
