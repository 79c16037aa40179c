#include "cartier/formulas.hpp"

#include <string>

namespace cartier {

const char* variant_name(FamilyVariant v) noexcept {
  switch (v) {
    case FamilyVariant::none: return "none";
    case FamilyVariant::sp_plus_one: return "sp+1";
    case FamilyVariant::sp_minus_one: return "sp-1";
    case FamilyVariant::sp: return "sp";
  }
  return "?";
}

FamilyVariant variant_from_name(std::string_view name) {
  if (name == "sp+1") return FamilyVariant::sp_plus_one;
  if (name == "sp-1") return FamilyVariant::sp_minus_one;
  if (name == "sp") return FamilyVariant::sp;
  if (name == "none") return FamilyVariant::none;
  throw hypothesis_error("unknown variant '" + std::string(name) + "'");
}

FamilyQuery classify_family(CurveFamily family, std::uint64_t p, std::int64_t n) {
  FpContext fp(p);
  const std::int64_t sp = static_cast<std::int64_t>(p);
  FamilyQuery q{family, p, n, FamilyVariant::none, 0};
  if (family == CurveFamily::fermat) {
    if (n > 1 && (n - 1) % sp == 0) {
      q.variant = FamilyVariant::sp_plus_one;
      q.s = (n - 1) / sp;
    } else if ((n + 1) % sp == 0) {
      q.variant = FamilyVariant::sp_minus_one;
      q.s = (n + 1) / sp;
    }
  } else if (family == CurveFamily::hurwitz) {
    if (n % sp == 0) {
      q.variant = FamilyVariant::sp;
      q.s = n / sp;
    } else if (n > 1 && (n - 1) % sp == 0) {
      q.variant = FamilyVariant::sp_plus_one;
      q.s = (n - 1) / sp;
    }
  }
  return q;
}

std::int64_t fermat_genus(std::int64_t n) noexcept { return (n - 1) * (n - 2) / 2; }
std::int64_t hurwitz_genus(std::int64_t n) noexcept { return n * (n - 1) / 2; }

std::int64_t count_fermat_pairs(std::uint64_t p, std::int64_t n) {
  FpContext fp(p);
  const std::int64_t sp = static_cast<std::int64_t>(p);
  if (n < 3) throw degree_error("count_fermat_pairs: n below 3");
  if (n % sp == 0) throw family_error("count_fermat_pairs: p divides n");
  std::int64_t count = 0;
  for (std::int64_t i = 0; i <= n - 3; ++i) {
    for (std::int64_t j = 0; i + j <= n - 3; ++j) {
      bool solvable = false;
      for (std::int64_t h = 0; h < sp && !solvable; ++h) {
        if ((n * (sp - 1 - h) + i) % sp != sp - 1) continue;
        for (std::int64_t k = 0; k <= h; ++k) {
          if ((n * k + j) % sp == sp - 1) {
            solvable = true;
            break;
          }
        }
      }
      if (solvable) ++count;
    }
  }
  return count;
}

std::int64_t count_hurwitz_pairs(std::uint64_t p, std::int64_t n) {
  FpContext fp(p);
  const std::int64_t sp = static_cast<std::int64_t>(p);
  if (n < 2) throw degree_error("count_hurwitz_pairs: n below 2");
  if ((n * n - n + 1) % sp == 0) {
    throw family_error("count_hurwitz_pairs: p divides n^2 - n + 1");
  }
  auto modp = [sp](std::int64_t v) { return ((v % sp) + sp) % sp; };
  std::int64_t count = 0;
  for (std::int64_t i = 0; i <= n - 2; ++i) {
    for (std::int64_t j = 0; i + j <= n - 2; ++j) {
      bool solvable = false;
      for (std::int64_t h = 0; h < sp && !solvable; ++h) {
        for (std::int64_t k = 0; k <= h; ++k) {
          if (modp(n * k - h + i) == 0 && modp(n * (h - k) + k + j) == sp - 1) {
            solvable = true;
            break;
          }
        }
      }
      if (solvable) ++count;
    }
  }
  return count;
}

RankAndANumber closed_form_fermat(std::uint64_t p, std::int64_t s, FamilyVariant variant) {
  FpContext fp(p);
  const std::int64_t sp = static_cast<std::int64_t>(p);
  if (s < 1) throw hypothesis_error("closed_form_fermat: s must be >= 1");
  if (variant == FamilyVariant::sp_plus_one) {
    const std::int64_t n = s * sp + 1;
    if (n < 3) throw hypothesis_error("closed_form_fermat: sp+1 below 3");
    return {s * (s - 1) * sp * (sp + 1) / 4, s * (s + 1) * sp * (sp - 1) / 4};
  }
  if (variant == FamilyVariant::sp_minus_one) {
    const std::int64_t n = s * sp - 1;
    if (n < 3) throw hypothesis_error("closed_form_fermat: sp-1 below 3");
    std::int64_t rank = 0;
    switch (s) {
      case 1: rank = (sp - 2) * (sp - 3) / 2; break;
      case 2: rank = (sp - 2) * (sp - 3) / 2 + sp * (sp - 2); break;
      case 3: rank = 3 * (sp - 1) * (sp - 1); break;
      default:
        rank = 3 * (sp - 1) * (sp - 1) +
               sp * ((sp + 1) * s * s + (sp - 11) * s - 12 * (sp - 2)) / 4;
        break;
    }
    return {rank, s * (s - 1) * sp * (sp - 1) / 4};
  }
  throw hypothesis_error("closed_form_fermat: variant must be sp+1 or sp-1");
}

RankAndANumber closed_form_hurwitz(std::uint64_t p, std::int64_t s, FamilyVariant variant) {
  FpContext fp(p);
  const std::int64_t sp = static_cast<std::int64_t>(p);
  if (s < 1) throw hypothesis_error("closed_form_hurwitz: s must be >= 1");
  if (variant == FamilyVariant::sp) {
    if (s * sp < 2) throw hypothesis_error("closed_form_hurwitz: sp below 2");
    return {s * (s - 1) * sp * (sp + 1) / 4, s * (s + 1) * sp * (sp - 1) / 4};
  }
  if (variant == FamilyVariant::sp_plus_one) {
    if (s * sp + 1 < 2) throw hypothesis_error("closed_form_hurwitz: sp+1 below 2");
    return {s * (s + 1) * sp * (sp + 1) / 4, s * (s - 1) * sp * (sp - 1) / 4};
  }
  throw hypothesis_error("closed_form_hurwitz: variant must be sp or sp+1");
}

EvenKernel a_fermat_char2(std::int64_t n) {
  if (n % 2 == 0) throw family_error("a_fermat_char2: n must be odd");
  if (n < 5) throw degree_error("a_fermat_char2: n must be >= 5");
  EvenKernel out;
  out.a_number = (n * n - 1) / 8;
  for (std::int64_t i = 0; i <= n - 3; i += 2) {
    for (std::int64_t j = 0; i + j <= n - 3; j += 2) {
      out.kernel_basis.push_back({i, j});
    }
  }
  return out;
}

}  // namespace cartier
