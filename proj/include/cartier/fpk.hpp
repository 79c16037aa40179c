#pragma once

#include <cstdint>
#include <vector>

#include "cartier/fp.hpp"

namespace cartier {

/// Minimal F_{p^k} arithmetic (k <= 4) for brute-force point scans.
///
/// Elements are coefficient vectors of length k, constant term first,
/// modulo a monic irreducible found by trial division at construction.
class FpkContext {
public:
  using Elem = std::vector<std::uint32_t>;

  FpkContext(std::uint64_t p, int k);

  std::uint64_t p() const noexcept { return fp_.modulus(); }
  int ext_degree() const noexcept { return k_; }
  std::uint64_t order() const noexcept { return order_; }

  Elem zero() const { return Elem(static_cast<std::size_t>(k_), 0); }
  Elem one() const;
  // Element with base-p digit expansion of index; enumerates the field
  // as index runs over [0, order()).
  Elem element(std::uint64_t index) const;

  bool is_zero(const Elem& a) const noexcept;
  Elem add(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, std::uint64_t e) const;

  // True when a lies in a proper subfield F_{p^j}, j | k, j < k.
  bool in_proper_subfield(const Elem& a) const;

  // Non-leading coefficients of the modulus polynomial (degree k).
  const std::vector<std::uint32_t>& modulus_poly() const noexcept { return modpoly_; }

private:
  FpContext fp_;
  int k_;
  std::uint64_t order_;
  std::vector<std::uint32_t> modpoly_;   // m_0..m_{k-1}; modulus is x^k + sum m_t x^t
  std::vector<std::uint32_t> reduction_; // x^k ≡ sum reduction_[t] x^t
};

}  // namespace cartier
