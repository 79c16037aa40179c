#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cartier/poly.hpp"

namespace cartier {

// Family hypothesis violated (p divides the forbidden quantity, parity, ...).
struct family_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct degree_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// Monomial outside the adjoint basis range.
struct basis_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class CurveFamily { fermat, hurwitz, general };

const char* family_name(CurveFamily f) noexcept;

/// Nonsingular plane model plus everything the Cartier engine consumes:
/// defining polynomial F, its y-derivative, total degree d, genus
/// (d-1)(d-2)/2 and the canonical-adjoint monomial basis
/// { x^a y^b : a+b <= d-3 } in ascending lex order on (a, b).
struct CurveModel {
  CurveFamily family;
  std::uint64_t p;
  std::optional<std::int64_t> n;  // family degree parameter; empty for general models
  BivarPoly F;
  BivarPoly Fy;
  std::int64_t degree = 0;
  std::int64_t genus = 0;
  std::vector<Monomial> basis;

  // Position of x^a y^b in the lex-ordered basis.
  std::size_t basis_index(std::int64_t a, std::int64_t b) const noexcept {
    const std::int64_t d = degree - 3;
    return static_cast<std::size_t>(a * (d + 1) - a * (a - 1) / 2 + b);
  }
};

std::vector<Monomial> adjoint_basis(std::int64_t degree);

/// Fermat model x^n + y^n + 1, requires p prime, p not dividing n, n >= 3.
CurveModel make_fermat(std::uint64_t p, std::int64_t n);
/// Hurwitz model x^n y + y^n + x (degree n+1), requires p prime,
/// p not dividing n^2 - n + 1, n >= 2.
CurveModel make_hurwitz(std::uint64_t p, std::int64_t n);
/// General nonsingular model of degree >= 4 with prime-field
/// coefficients. Smoothness is a caller obligation (see
/// scan_singular_points for a finite desk check).
CurveModel make_general(std::uint64_t p, const BivarPoly& F);

/// Closed double-sum expansion of (x^n + y^n + 1)^{p-1} x^i y^j: terms
/// C(p-1,h) C(h,k) x^{n(p-1-h)+i} y^{nk+j} over 0 <= k <= h <= p-1.
/// Fast path cross-checked against poly_pow in tests.
BivarPoly fermat_expansion(std::uint64_t p, std::int64_t n, std::int64_t i, std::int64_t j);
/// Closed double-sum expansion of (x^n y + y^n + x)^{p-1} x^i y^j:
/// terms C(p-1,h) C(h,k) x^{nk-h+p-1+i} y^{n(h-k)+k+j}.
BivarPoly hurwitz_expansion(std::uint64_t p, std::int64_t n, std::int64_t i, std::int64_t j);

}  // namespace cartier
