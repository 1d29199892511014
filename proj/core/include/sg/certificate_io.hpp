#pragma once

#include <iosfwd>
#include <string>

#include "sg/trading.hpp"

namespace sg {

// Certificate text format:
//
//   potent: true
//   winners:
//   {1,2}^5
//   {3,4,5}^7
//   {1,2,3,4,5}
//   losers:
//   {2,3,5}^4
//   {}
//
// A missing exponent means multiplicity 1; '#' starts a comment. Printing
// then parsing reproduces the certificate exactly.
Certificate parse_certificate(std::istream& in);
Certificate parse_certificate(const std::string& text);
Certificate read_certificate_file(const std::string& path);
std::string format_certificate(const Certificate& c);

// "{1,2}^5 {3,4,5}^7 {1,2,3,4,5}" style one-liner for a multiset.
std::string format_multiset(const CoalitionMultiset& m);

}  // namespace sg
