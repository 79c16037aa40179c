#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cartier/curves.hpp"
#include "cartier/matrix.hpp"

namespace cartier {

// A matrix entry landed outside the adjoint span: the model is not the
// smooth prime-field curve it claims to be.
struct consistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The Cartier operator in the adjoint basis. Column basis_index(i, j)
/// holds the coordinates of the image of (x^i y^j / F_y) dx; the entry
/// at row (a, b) is the coefficient of x^{ap+p-1} y^{bp+p-1} in
/// F^{p-1} x^i y^j.
struct CartierMatrix {
  CurveModel curve;
  MatFp M;
};

/// Fused construction: F^{p-1} is expanded once (family double sum when
/// tagged, poly_pow otherwise) and each column selects the terms with
/// exponents congruent to (p-1-i, p-1-j) mod p directly, skipping the
/// shifted polynomials. Columns fill in parallel.
CartierMatrix build_cartier_matrix(const CurveModel& curve);

/// Unfused serial reference: per column materialize F^{p-1} x^i y^j,
/// apply nabla, then root_p, and scatter the coefficients.
CartierMatrix build_cartier_matrix_serial(const CurveModel& curve);

struct PhaseTimings {
  std::int64_t build_us = 0;
  std::int64_t rank_us = 0;
  std::int64_t powers_us = 0;
};

struct InvariantReport {
  CurveFamily family;
  std::uint64_t p = 0;
  std::optional<std::int64_t> n;
  std::int64_t degree = 0;
  std::int64_t genus = 0;
  std::int64_t cartier_rank = 0;
  std::int64_t a_number = 0;
  std::int64_t p_rank = 0;
  std::int64_t nilpotency_index = 0;
  bool superspecial = false;
  bool ordinary = false;
  // provenance tag per computed field
  std::vector<std::pair<std::string, std::string>> methods;
};

/// Full invariant extraction: cartier_rank = rank(M), a_number =
/// g - rank, (p_rank, nilpotency_index) from the stabilized power
/// ranks, superspecial iff M = 0, ordinary iff p_rank = g.
InvariantReport compute_invariants(const CurveModel& curve, PhaseTimings* timings = nullptr);

struct AffinePoint {
  int ext_degree = 1;                // coordinates live in F_{p^ext_degree}
  std::vector<std::uint32_t> x, y;   // coefficients in the field generator, constant first
  std::string to_string() const;
};

/// Brute-force scan for affine points with F = F_x = F_y = 0 over
/// F_{p^k}, k <= max_ext_degree (capped at 4). An empty result is
/// necessary-but-not-sufficient evidence of smoothness. Points already
/// found in a smaller field are not repeated.
std::vector<AffinePoint> scan_singular_points(const CurveModel& curve, int max_ext_degree);

}  // namespace cartier
