#pragma once

#include <iosfwd>
#include <string>

#include "sg/weightedness.hpp"

namespace sg {

// Representation text format:
//
//   flavor: rough
//   quota: 3/1
//   weights: 1/1 1/1 1/1 1/1 1/1 1/1
//
// The one-line form "[3; 1 1 1 1 1 1] rough" is accepted too; the flavor word
// after the bracket defaults to weighted.
Representation parse_representation(std::istream& in);
Representation parse_representation(const std::string& text);
Representation read_representation_file(const std::string& path);
std::string format_representation(const Representation& rep);
// "[3; 1 1 1 1 1 1] rough", integers printed without "/1".
std::string format_representation_inline(const Representation& rep);

std::string to_string(Flavor f);
Flavor parse_flavor(const std::string& text);

// Witness text format: one "term:" line per summand, the vector followed by
// its multiplicity and the (winner, loser) pair it came from, then "u:".
//
//   players: 3
//   term: (1,-1,0)^2 {1} {2}
//   u: 0 0 0
FarkasWitness parse_witness(std::istream& in);
FarkasWitness parse_witness(const std::string& text);
std::string format_witness(const FarkasWitness& w);

}  // namespace sg
