#include "cartier/engine.hpp"

#include <atomic>
#include <chrono>
#include <sstream>

#include "cartier/fpk.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cartier {

namespace {

BivarPoly defining_power(const CurveModel& cv) {
  switch (cv.family) {
    case CurveFamily::fermat:
      return fermat_expansion(cv.p, *cv.n, 0, 0);
    case CurveFamily::hurwitz:
      return hurwitz_expansion(cv.p, *cv.n, 0, 0);
    case CurveFamily::general:
      return poly_pow(cv.F, cv.p - 1);
  }
  throw std::logic_error("unknown curve family");
}

struct FlatTerm {
  std::int64_t i, j;
  std::uint32_t c;
};

std::vector<FlatTerm> flatten(const BivarPoly& f) {
  std::vector<FlatTerm> out;
  out.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) {
    out.push_back({m.i, m.j, static_cast<std::uint32_t>(c)});
  }
  return out;
}

}  // namespace

CartierMatrix build_cartier_matrix(const CurveModel& curve) {
  const std::int64_t p = static_cast<std::int64_t>(curve.p);
  const std::int64_t dmax = curve.degree - 3;
  const std::size_t g = curve.basis.size();
  const std::vector<FlatTerm> terms = flatten(defining_power(curve));

  MatFp M(g, g, curve.p);
  std::atomic<bool> overflow{false};
  const std::int64_t cols = static_cast<std::int64_t>(g);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (cols >= 16)
#endif
  for (std::int64_t col = 0; col < cols; ++col) {
    const Monomial mono = curve.basis[static_cast<std::size_t>(col)];
    // want exponents of F^{p-1} x^i y^j congruent to (p-1, p-1) mod p
    const std::int64_t ri = ((p - 1 - mono.i) % p + p) % p;
    const std::int64_t rj = ((p - 1 - mono.j) % p + p) % p;
    for (const FlatTerm& t : terms) {
      if (t.i % p != ri || t.j % p != rj) continue;
      const std::int64_t a = (t.i + mono.i - (p - 1)) / p;
      const std::int64_t b = (t.j + mono.j - (p - 1)) / p;
      if (a + b > dmax) {
        overflow.store(true, std::memory_order_relaxed);
        continue;
      }
      M.set(curve.basis_index(a, b), static_cast<std::size_t>(col), t.c);
    }
  }
  if (overflow.load()) {
    throw consistency_error(
        "cartier image escapes the adjoint span; the model is singular or has "
        "coefficients outside the prime field");
  }
  return {curve, std::move(M)};
}

CartierMatrix build_cartier_matrix_serial(const CurveModel& curve) {
  const std::int64_t dmax = curve.degree - 3;
  const std::size_t g = curve.basis.size();
  const BivarPoly fpow = poly_pow(curve.F, curve.p - 1);

  MatFp M(g, g, curve.p);
  for (std::size_t col = 0; col < g; ++col) {
    const Monomial mono = curve.basis[col];
    const BivarPoly shifted = poly_mul(fpow, BivarPoly::monomial(curve.p, mono.i, mono.j));
    const BivarPoly image = root_p(nabla(shifted));
    for (const auto& [m, c] : image.terms()) {
      if (m.i + m.j > dmax) {
        throw consistency_error("cartier image escapes the adjoint span");
      }
      M.set(curve.basis_index(m.i, m.j), col, c);
    }
  }
  return {curve, std::move(M)};
}

namespace {

std::int64_t elapsed_us(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

}  // namespace

InvariantReport compute_invariants(const CurveModel& curve, PhaseTimings* timings) {
  auto t0 = std::chrono::steady_clock::now();
  const CartierMatrix cm = build_cartier_matrix(curve);
  const std::int64_t build_us = elapsed_us(t0);

  t0 = std::chrono::steady_clock::now();
  const std::size_t rank = mat_rank(cm.M);
  const std::int64_t rank_us = elapsed_us(t0);

  t0 = std::chrono::steady_clock::now();
  const auto [stable, index] = stable_rank_and_index(cm.M, static_cast<std::size_t>(curve.genus));
  const std::int64_t powers_us = elapsed_us(t0);

  if (timings != nullptr) {
    timings->build_us = build_us;
    timings->rank_us = rank_us;
    timings->powers_us = powers_us;
  }

  InvariantReport rep;
  rep.family = curve.family;
  rep.p = curve.p;
  rep.n = curve.n;
  rep.degree = curve.degree;
  rep.genus = curve.genus;
  rep.cartier_rank = static_cast<std::int64_t>(rank);
  rep.a_number = curve.genus - rep.cartier_rank;
  rep.p_rank = static_cast<std::int64_t>(stable);
  rep.nilpotency_index = static_cast<std::int64_t>(index);
  rep.superspecial = cm.M.is_zero();
  rep.ordinary = rep.p_rank == curve.genus;
  rep.methods = {{"cartier_rank", "matrix"},
                 {"a_number", "matrix"},
                 {"p_rank", "matrix"},
                 {"nilpotency_index", "matrix"}};
  return rep;
}

std::string AffinePoint::to_string() const {
  auto coord = [](const std::vector<std::uint32_t>& cs) {
    std::ostringstream os;
    bool wrote = false;
    for (std::size_t t = 0; t < cs.size(); ++t) {
      if (cs[t] == 0) continue;
      if (wrote) os << "+";
      if (t == 0) {
        os << cs[t];
      } else {
        if (cs[t] != 1) os << cs[t] << "*";
        os << "t";
        if (t > 1) os << "^" << t;
      }
      wrote = true;
    }
    if (!wrote) os << "0";
    return os.str();
  };
  std::ostringstream os;
  os << "(" << coord(x) << ", " << coord(y) << ")";
  if (ext_degree > 1) os << " over the degree-" << ext_degree << " extension";
  return os.str();
}

namespace {

// Evaluate a sparse bivariate polynomial given precomputed coordinate
// power tables.
FpkContext::Elem eval_poly(const FpkContext& ctx, const std::vector<FlatTerm>& terms,
                           const std::vector<FpkContext::Elem>& xpow,
                           const std::vector<FpkContext::Elem>& ypow) {
  FpkContext::Elem acc = ctx.zero();
  for (const FlatTerm& t : terms) {
    FpkContext::Elem v = ctx.mul(xpow[static_cast<std::size_t>(t.i)],
                                 ypow[static_cast<std::size_t>(t.j)]);
    // scale by the prime-field coefficient
    for (auto& c : v) {
      c = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) * t.c) % ctx.p());
    }
    acc = ctx.add(acc, v);
  }
  return acc;
}

std::vector<FpkContext::Elem> power_table(const FpkContext& ctx, const FpkContext::Elem& e,
                                          std::int64_t maxexp) {
  std::vector<FpkContext::Elem> tab;
  tab.reserve(static_cast<std::size_t>(maxexp) + 1);
  tab.push_back(ctx.one());
  for (std::int64_t t = 1; t <= maxexp; ++t) {
    tab.push_back(ctx.mul(tab.back(), e));
  }
  return tab;
}

}  // namespace

std::vector<AffinePoint> scan_singular_points(const CurveModel& curve, int max_ext_degree) {
  if (max_ext_degree < 1 || max_ext_degree > 4) {
    throw std::invalid_argument("scan_singular_points: extension degree must be in 1..4");
  }
  const std::vector<FlatTerm> f = flatten(curve.F);
  const std::vector<FlatTerm> fx = flatten(derivative_x(curve.F));
  const std::vector<FlatTerm> fy = flatten(curve.Fy);
  const std::int64_t maxexp = curve.degree;

  std::vector<AffinePoint> found;
  for (int k = 1; k <= max_ext_degree; ++k) {
    const FpkContext ctx(curve.p, k);
    const std::uint64_t q = ctx.order();
    std::vector<std::vector<FpkContext::Elem>> ypows(q);
    for (std::uint64_t yi = 0; yi < q; ++yi) {
      ypows[yi] = power_table(ctx, ctx.element(yi), maxexp);
    }
    for (std::uint64_t xi = 0; xi < q; ++xi) {
      const FpkContext::Elem xe = ctx.element(xi);
      const auto xpow = power_table(ctx, xe, maxexp);
      for (std::uint64_t yi = 0; yi < q; ++yi) {
        if (!ctx.is_zero(eval_poly(ctx, f, xpow, ypows[yi]))) continue;
        if (!ctx.is_zero(eval_poly(ctx, fx, xpow, ypows[yi]))) continue;
        if (!ctx.is_zero(eval_poly(ctx, fy, xpow, ypows[yi]))) continue;
        const FpkContext::Elem ye = ctx.element(yi);
        // skip points a smaller field already reported
        if (k > 1 && ctx.in_proper_subfield(xe) && ctx.in_proper_subfield(ye)) continue;
        found.push_back({k, xe, ye});
      }
    }
  }
  return found;
}

}  // namespace cartier
