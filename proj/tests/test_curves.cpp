#include <doctest.h>

#include "cartier/curves.hpp"

using namespace cartier;

namespace {

BivarPoly shifted_power(const CurveModel& cv, std::int64_t i, std::int64_t j) {
  return poly_mul(poly_pow(cv.F, cv.p - 1), BivarPoly::monomial(cv.p, i, j));
}

}  // namespace

TEST_SUITE_BEGIN("curves");

TEST_CASE("fermat constructor") {
  const CurveModel cv = make_fermat(5, 6);
  CHECK(cv.genus == 10);
  CHECK(cv.basis.size() == 10);
  CHECK(cv.degree == 6);
  CHECK(cv.F.coeff(6, 0) == 1);
  CHECK(cv.F.coeff(0, 6) == 1);
  CHECK(cv.F.coeff(0, 0) == 1);
  CHECK(cv.Fy.coeff(0, 5) == 1);  // n y^{n-1} = 6 y^5 = y^5 mod 5
  CHECK(make_fermat(3, 13).genus == 66);
  CHECK_THROWS_AS(make_fermat(3, 6), family_error);
  CHECK_THROWS_AS(make_fermat(5, 2), degree_error);
  CHECK_THROWS_AS(make_fermat(4, 5), invalid_modulus);
}

TEST_CASE("hurwitz constructor") {
  const CurveModel cv = make_hurwitz(3, 3);
  CHECK(cv.genus == 3);
  CHECK(cv.degree == 4);
  CHECK(cv.F.coeff(3, 1) == 1);
  CHECK(cv.F.coeff(0, 3) == 1);
  CHECK(cv.F.coeff(1, 0) == 1);
  // F_y = x^n + n y^{n-1}
  CHECK(cv.Fy.coeff(3, 0) == 1);
  CHECK(cv.Fy.coeff(0, 2) == 3 % 3);
  CHECK(make_hurwitz(3, 12).genus == 66);
  CHECK_THROWS_AS(make_hurwitz(7, 3), family_error);  // 7 | 7
  CHECK_THROWS_AS(make_hurwitz(5, 1), degree_error);
}

TEST_CASE("general constructor") {
  BivarPoly f(3);
  f.add_term(4, 0, 1);
  f.add_term(0, 4, 1);
  f.add_term(0, 0, 1);
  const CurveModel cv = make_general(3, f);
  CHECK(cv.genus == 3);
  CHECK(cv.degree == 4);
  CHECK(!cv.n.has_value());

  BivarPoly small(3);
  small.add_term(3, 0, 1);
  small.add_term(0, 0, 1);
  CHECK_THROWS_AS(make_general(3, small), degree_error);
  CHECK_THROWS_AS(make_general(5, f), modulus_mismatch);
}

TEST_CASE("basis is lex ordered with the right size and index map") {
  for (std::int64_t d : {3, 4, 7, 12}) {
    const auto basis = adjoint_basis(d);
    CHECK(static_cast<std::int64_t>(basis.size()) == (d - 1) * (d - 2) / 2);
    for (std::size_t t = 1; t < basis.size(); ++t) CHECK(basis[t - 1] < basis[t]);
  }
  const CurveModel cv = make_fermat(5, 7);
  for (std::size_t t = 0; t < cv.basis.size(); ++t) {
    CHECK(cv.basis_index(cv.basis[t].i, cv.basis[t].j) == t);
  }
}

TEST_CASE("fermat expansion examples") {
  CHECK(fermat_expansion(2, 5, 0, 0) == make_fermat(2, 5).F);  // p-1 = 1

  const CurveModel cv = make_fermat(3, 7);
  const BivarPoly fast = fermat_expansion(3, 7, 0, 0);
  CHECK(fast == poly_pow(cv.F, 2));
  CHECK(fast.term_count() == 6);  // p(p+1)/2 distinct (h, k) pairs

  CHECK_THROWS_AS(fermat_expansion(3, 7, 3, 2), basis_error);  // i+j > n-3
  CHECK_THROWS_AS(fermat_expansion(3, 7, -1, 0), basis_error);
  CHECK_THROWS_AS(fermat_expansion(3, 6, 0, 0), family_error);
}

TEST_CASE("hurwitz expansion examples") {
  CHECK(hurwitz_expansion(2, 5, 0, 0) == make_hurwitz(2, 5).F);

  const CurveModel cv = make_hurwitz(3, 4);
  CHECK(hurwitz_expansion(3, 4, 1, 0) == shifted_power(cv, 1, 0));

  CHECK_THROWS_AS(hurwitz_expansion(3, 4, 2, 1), basis_error);  // i+j > n-2
  CHECK_THROWS_AS(hurwitz_expansion(7, 3, 0, 0), family_error);
}

TEST_CASE("expansion exponents are never negative") {
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    for (std::int64_t n = 2; n <= 8; ++n) {
      if ((n * n - n + 1) % static_cast<std::int64_t>(p) == 0) continue;
      for (std::int64_t i = 0; i <= n - 2; ++i) {
        for (std::int64_t j = 0; i + j <= n - 2; ++j) {
          const BivarPoly expansion = hurwitz_expansion(p, n, i, j);
          for (const auto& [m, c] : expansion.terms()) {
            CHECK(m.i >= 0);
            CHECK(m.j >= 0);
          }
        }
      }
    }
  }
}

TEST_CASE("family expansions equal the general path on a small grid") {
  for (std::uint64_t p : {2ull, 3ull}) {
    const std::int64_t sp = static_cast<std::int64_t>(p);
    for (std::int64_t n = 3; n <= 7; ++n) {
      if (n % sp == 0) continue;
      const CurveModel cv = make_fermat(p, n);
      for (const Monomial& m : cv.basis) {
        CAPTURE(p);
        CAPTURE(n);
        CHECK(fermat_expansion(p, n, m.i, m.j) == shifted_power(cv, m.i, m.j));
      }
    }
    for (std::int64_t n = 2; n <= 7; ++n) {
      if ((n * n - n + 1) % sp == 0) continue;
      const CurveModel cv = make_hurwitz(p, n);
      for (const Monomial& m : cv.basis) {
        CHECK(hurwitz_expansion(p, n, m.i, m.j) == shifted_power(cv, m.i, m.j));
      }
    }
  }
}

TEST_SUITE_END();
