#include "cartier/curves.hpp"

#include <string>

namespace cartier {

const char* family_name(CurveFamily f) noexcept {
  switch (f) {
    case CurveFamily::fermat: return "fermat";
    case CurveFamily::hurwitz: return "hurwitz";
    case CurveFamily::general: return "general";
  }
  return "?";
}

std::vector<Monomial> adjoint_basis(std::int64_t degree) {
  std::vector<Monomial> basis;
  const std::int64_t d = degree - 3;
  for (std::int64_t i = 0; i <= d; ++i) {
    for (std::int64_t j = 0; j <= d - i; ++j) {
      basis.push_back({i, j});
    }
  }
  return basis;
}

namespace {

CurveModel finish_model(CurveFamily family, std::uint64_t p, std::optional<std::int64_t> n,
                        BivarPoly F, std::int64_t degree) {
  CurveModel cv{family, p, n, F, derivative_y(F), degree,
                (degree - 1) * (degree - 2) / 2, adjoint_basis(degree)};
  return cv;
}

}  // namespace

CurveModel make_fermat(std::uint64_t p, std::int64_t n) {
  FpContext fp(p);
  if (n < 3) {
    throw degree_error("fermat: n = " + std::to_string(n) + " gives a degree below 3");
  }
  if (n % static_cast<std::int64_t>(p) == 0) {
    throw family_error("fermat: p = " + std::to_string(p) + " divides n = " + std::to_string(n));
  }
  BivarPoly F(p);
  F.add_term(n, 0, 1);
  F.add_term(0, n, 1);
  F.add_term(0, 0, 1);
  return finish_model(CurveFamily::fermat, p, n, F, n);
}

CurveModel make_hurwitz(std::uint64_t p, std::int64_t n) {
  FpContext fp(p);
  if (n < 2) {
    throw degree_error("hurwitz: n = " + std::to_string(n) + " gives a degree below 3");
  }
  if ((n * n - n + 1) % static_cast<std::int64_t>(p) == 0) {
    throw family_error("hurwitz: p = " + std::to_string(p) + " divides n^2 - n + 1 = " +
                       std::to_string(n * n - n + 1));
  }
  BivarPoly F(p);
  F.add_term(n, 1, 1);
  F.add_term(0, n, 1);
  F.add_term(1, 0, 1);
  return finish_model(CurveFamily::hurwitz, p, n, F, n + 1);
}

CurveModel make_general(std::uint64_t p, const BivarPoly& F) {
  FpContext fp(p);
  if (F.modulus() != p) {
    throw modulus_mismatch("general: polynomial modulus differs from p");
  }
  const std::int64_t d = F.degree();
  if (d < 4) {
    throw degree_error("general: total degree " + std::to_string(d) + " is below 4");
  }
  return finish_model(CurveFamily::general, p, std::nullopt, F, d);
}

namespace {

void check_fermat_hypothesis(const FpContext& fp, std::int64_t n) {
  if (n < 3) throw degree_error("fermat expansion: n below 3");
  if (n % static_cast<std::int64_t>(fp.modulus()) == 0) {
    throw family_error("fermat expansion: p divides n");
  }
}

void check_hurwitz_hypothesis(const FpContext& fp, std::int64_t n) {
  if (n < 2) throw degree_error("hurwitz expansion: n below 2");
  if ((n * n - n + 1) % static_cast<std::int64_t>(fp.modulus()) == 0) {
    throw family_error("hurwitz expansion: p divides n^2 - n + 1");
  }
}

}  // namespace

BivarPoly fermat_expansion(std::uint64_t p, std::int64_t n, std::int64_t i, std::int64_t j) {
  FpContext fp(p);
  check_fermat_hypothesis(fp, n);
  if (i < 0 || j < 0 || i + j > n - 3) {
    throw basis_error("fermat expansion: (i, j) = (" + std::to_string(i) + ", " +
                      std::to_string(j) + ") outside the adjoint basis");
  }
  const std::int64_t pm1 = static_cast<std::int64_t>(p) - 1;
  BivarPoly out(p);
  for (std::int64_t h = 0; h <= pm1; ++h) {
    const std::uint64_t ch = lucas_binomial(pm1, h, fp);
    for (std::int64_t k = 0; k <= h; ++k) {
      const std::uint64_t c = fp.mul(ch, lucas_binomial(h, k, fp));
      out.add_term(n * (pm1 - h) + i, n * k + j, static_cast<std::int64_t>(c));
    }
  }
  return out;
}

BivarPoly hurwitz_expansion(std::uint64_t p, std::int64_t n, std::int64_t i, std::int64_t j) {
  FpContext fp(p);
  check_hurwitz_hypothesis(fp, n);
  if (i < 0 || j < 0 || i + j > n - 2) {
    throw basis_error("hurwitz expansion: (i, j) = (" + std::to_string(i) + ", " +
                      std::to_string(j) + ") outside the adjoint basis");
  }
  const std::int64_t pm1 = static_cast<std::int64_t>(p) - 1;
  BivarPoly out(p);
  for (std::int64_t h = 0; h <= pm1; ++h) {
    const std::uint64_t ch = lucas_binomial(pm1, h, fp);
    for (std::int64_t k = 0; k <= h; ++k) {
      const std::uint64_t c = fp.mul(ch, lucas_binomial(h, k, fp));
      out.add_term(n * k - h + pm1 + i, n * (h - k) + k + j, static_cast<std::int64_t>(c));
    }
  }
  return out;
}

}  // namespace cartier
