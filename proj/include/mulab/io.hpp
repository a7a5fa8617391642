#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "mulab/complex.hpp"
#include "mulab/constructors.hpp"
#include "mulab/pair.hpp"
#include "mulab/poset.hpp"

namespace mulab {

// Facet-list format: one facet per line as whitespace-separated vertex
// labels; `#` starts a comment; blank lines are skipped; the line `{}`
// denotes the empty facet. A file with no facet lines is the void complex.
// Pair files use `[DELTA]` and `[GAMMA]` section headers (no header means
// everything belongs to delta; a missing gamma section leaves gamma void).
SimplicialComplex read_complex(std::istream& in);
SimplicialComplex read_complex_file(const std::string& path);
RelativePair read_pair(std::istream& in);
RelativePair read_pair_file(const std::string& path);
void write_complex(std::ostream& out, const SimplicialComplex& x);
void write_pair(std::ostream& out, const RelativePair& p);
void write_complex_file(const std::string& path, const SimplicialComplex& x);
void write_pair_file(const std::string& path, const RelativePair& p);

// Poset JSON: {"faces": [{"id": .., "rank": k, "covers": [ids]}, ...],
// "gamma": [ids]}; ids may be strings or numbers; the rank-0 minimum stays
// implicit; "gamma" (optional) lists the faces of a lower ideal. An ideal
// given as an empty list is {∅}; a missing "gamma" key means the void ideal.
PosetPair read_poset_pair_json(std::istream& in);
PosetPair read_poset_pair_file(const std::string& path);
void write_poset_pair_json(std::ostream& out, const PosetPair& p);

nlohmann::json certificate_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace mulab
