#include "cartier/poly_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace cartier {

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(const std::string& name, std::size_t lineno, const std::string& what) {
  throw parse_error(name + ":" + std::to_string(lineno) + ": " + what);
}

}  // namespace

std::pair<std::uint64_t, BivarPoly> parse_poly_stream(std::istream& in, const std::string& name) {
  std::optional<std::uint64_t> p;
  std::optional<BivarPoly> poly;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (!p) {
      std::string tag;
      std::int64_t value = 0;
      if (!(ls >> tag >> value) || tag != "p" || !(ls >> std::ws).eof()) {
        fail(name, lineno, "expected 'p <prime>'");
      }
      if (value < 2) fail(name, lineno, "modulus must be a prime >= 2");
      p = static_cast<std::uint64_t>(value);
      poly.emplace(*p);  // validates primality, throws invalid_modulus
      continue;
    }
    std::int64_t coeff = 0, i = 0, j = 0;
    if (!(ls >> coeff >> i >> j) || !(ls >> std::ws).eof()) {
      fail(name, lineno, "expected '<coeff> <i> <j>'");
    }
    if (i < 0 || j < 0) fail(name, lineno, "exponents must be nonnegative");
    poly->add_term(i, j, coeff);
  }
  if (!p) throw parse_error(name + ": missing 'p <prime>' header line");
  return {*p, *poly};
}

std::pair<std::uint64_t, BivarPoly> parse_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path + ": cannot open file");
  return parse_poly_stream(in, path);
}

}  // namespace cartier
