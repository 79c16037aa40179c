#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "cartier/poly.hpp"

namespace cartier {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Curve file format: first content line "p <prime>", then one term
/// per line as "<coeff> <i> <j>" (coeff any integer, reduced mod p;
/// duplicate (i, j) lines are summed). '#' starts a comment, blank
/// lines are skipped.
std::pair<std::uint64_t, BivarPoly> parse_poly_stream(std::istream& in,
                                                      const std::string& name = "<stream>");
std::pair<std::uint64_t, BivarPoly> parse_poly_file(const std::string& path);

}  // namespace cartier
