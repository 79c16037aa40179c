#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cartier/fp.hpp"

namespace cartier {

struct modulus_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exponent contract violation (e.g. p-th root of a non p-th power).
struct exponent_error : std::logic_error {
  using std::logic_error::logic_error;
};

struct Monomial {
  std::int64_t i = 0;  // x-exponent
  std::int64_t j = 0;  // y-exponent
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse bivariate polynomial over F_p.
///
/// Terms live in a map ordered lexicographically by (i, j) and never
/// hold a zero coefficient, so iteration, equality and printing are
/// deterministic.
class BivarPoly {
public:
  explicit BivarPoly(std::uint64_t p) : p_(FpContext(p).modulus()) {}

  static BivarPoly one(std::uint64_t p);
  static BivarPoly monomial(std::uint64_t p, std::int64_t i, std::int64_t j,
                            std::int64_t coeff = 1);

  std::uint64_t modulus() const noexcept { return p_; }

  // Accumulates coeff (any integer) into the (i, j) slot mod p and
  // drops the term if the sum vanishes.
  void add_term(std::int64_t i, std::int64_t j, std::int64_t coeff);

  std::uint64_t coeff(std::int64_t i, std::int64_t j) const noexcept;
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t degree() const noexcept;  // max i+j over terms; -1 for the zero polynomial

  const std::map<Monomial, std::uint64_t>& terms() const noexcept { return terms_; }

  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

private:
  std::uint64_t p_;
  std::map<Monomial, std::uint64_t> terms_;
};

BivarPoly poly_add(const BivarPoly& f, const BivarPoly& g);
BivarPoly poly_mul(const BivarPoly& f, const BivarPoly& g);
BivarPoly poly_pow(const BivarPoly& f, std::uint64_t e);  // binary exponentiation; f^0 = 1

/// Coefficient-selection form of the mixed partial d^{2p-2}/dx^{p-1}dy^{p-1}:
/// keeps exactly the terms with both exponents congruent to p-1 mod p,
/// shifting each exponent down by p-1. The result has all exponents
/// divisible by p.
BivarPoly nabla(const BivarPoly& f);

/// Divides every exponent by p (prime-field p-th root leaves
/// coefficients alone). Throws exponent_error if some exponent is not a
/// multiple of p.
BivarPoly root_p(const BivarPoly& f);

BivarPoly derivative_x(const BivarPoly& f);
BivarPoly derivative_y(const BivarPoly& f);

std::string to_string(const BivarPoly& f);

}  // namespace cartier
