#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cartier/curves.hpp"

namespace cartier {

// Closed-form hypothesis (n = sp, sp+1, sp-1, minimum degree) violated.
struct hypothesis_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class FamilyVariant { none, sp_plus_one, sp_minus_one, sp };

const char* variant_name(FamilyVariant v) noexcept;            // "none", "sp+1", "sp-1", "sp"
FamilyVariant variant_from_name(std::string_view name);        // throws hypothesis_error

struct FamilyQuery {
  CurveFamily family = CurveFamily::general;
  std::uint64_t p = 0;
  std::int64_t n = 0;
  FamilyVariant variant = FamilyVariant::none;
  std::int64_t s = 0;  // witnessing multiplier when variant != none
};

/// Detect whether n matches a closed-form shape for the family
/// (Fermat: sp+1 or sp-1; Hurwitz: sp or sp+1). At p = 2 an odd n is
/// both sp+1 and sp-1; sp+1 wins.
FamilyQuery classify_family(CurveFamily family, std::uint64_t p, std::int64_t n);

std::int64_t fermat_genus(std::int64_t n) noexcept;   // (n-1)(n-2)/2
std::int64_t hurwitz_genus(std::int64_t n) noexcept;  // n(n-1)/2, degree is n+1

/// Number of basis pairs (i, j), i+j <= n-3, for which some h, k with
/// 0 <= k <= h <= p-1 solves n(p-1-h)+i = p-1 and nk+j = p-1 mod p.
/// Equals the Cartier rank of the Fermat curve. Brute force, exact.
std::int64_t count_fermat_pairs(std::uint64_t p, std::int64_t n);
/// Same count for the Hurwitz curve: pairs with i+j <= n-2 such that
/// nk-h+i = 0 and n(h-k)+k+j = p-1 mod p admit a solution.
std::int64_t count_hurwitz_pairs(std::uint64_t p, std::int64_t n);

struct RankAndANumber {
  std::int64_t rank = 0;
  std::int64_t a_number = 0;
};

/// Closed forms for Fermat curves with n = sp+1 or n = sp-1.
/// rank + a_number always equals the genus (n-1)(n-2)/2.
RankAndANumber closed_form_fermat(std::uint64_t p, std::int64_t s, FamilyVariant variant);
/// Closed forms for Hurwitz curves with n = sp or n = sp+1.
RankAndANumber closed_form_hurwitz(std::uint64_t p, std::int64_t s, FamilyVariant variant);

struct EvenKernel {
  std::int64_t a_number = 0;
  std::vector<Monomial> kernel_basis;  // lex order
};

/// Characteristic-2 Fermat curves, n odd: a-number (n^2-1)/8 and the
/// kernel basis of even-even monomials x^i y^j, i+j <= n-3.
EvenKernel a_fermat_char2(std::int64_t n);

}  // namespace cartier
