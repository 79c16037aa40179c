#include "cartier/matrix.hpp"

#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cartier {

MatFp::MatFp(std::size_t rows, std::size_t cols, std::uint64_t p)
    : rows_(rows), cols_(cols), p_(FpContext(p).modulus()), a_(rows * cols, 0) {}

MatFp MatFp::identity(std::size_t n, std::uint64_t p) {
  MatFp m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1 % p);
  return m;
}

bool MatFp::is_zero() const noexcept {
  for (std::uint32_t v : a_) {
    if (v != 0) return false;
  }
  return true;
}

namespace {

void check_same_modulus(const MatFp& a, const MatFp& b) {
  if (a.modulus() != b.modulus()) {
    throw shape_error("matrix moduli differ: " + std::to_string(a.modulus()) + " vs " +
                      std::to_string(b.modulus()));
  }
}

void mul_row(const MatFp& a, const MatFp& b, MatFp& c, std::size_t i, std::uint64_t p) {
  const std::size_t n = a.cols(), w = b.cols();
  std::uint32_t* out = c.row(i);
  const std::uint32_t* arow = a.row(i);
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t f = arow[k];
    if (f == 0) continue;
    const std::uint32_t* brow = b.row(k);
    for (std::size_t j = 0; j < w; ++j) {
      out[j] = static_cast<std::uint32_t>((out[j] + f * brow[j]) % p);
    }
  }
}

}  // namespace

MatFp mat_mul(const MatFp& a, const MatFp& b) {
  check_same_modulus(a, b);
  if (a.cols() != b.rows()) {
    throw shape_error("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                      " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  MatFp c(a.rows(), b.cols(), a.modulus());
  const std::uint64_t p = a.modulus();
  const std::int64_t rows = static_cast<std::int64_t>(a.rows());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (rows >= 32)
#endif
  for (std::int64_t i = 0; i < rows; ++i) {
    mul_row(a, b, c, static_cast<std::size_t>(i), p);
  }
  return c;
}

MatFp mat_mul_serial(const MatFp& a, const MatFp& b) {
  check_same_modulus(a, b);
  if (a.cols() != b.rows()) {
    throw shape_error("mat_mul_serial: inner dimensions differ");
  }
  MatFp c(a.rows(), b.cols(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mul_row(a, b, c, i, a.modulus());
  }
  return c;
}

std::size_t mat_rank(const MatFp& m) {
  MatFp w = m;  // elimination scratch; caller's matrix stays intact
  const FpContext fp(m.modulus());
  const std::size_t rows = w.rows(), cols = w.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && w.at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = col; j < cols; ++j) {
        std::uint32_t t = w.at(r, j);
        w.set(r, j, w.at(pivot, j));
        w.set(pivot, j, t);
      }
    }
    // scale the pivot row so every elimination factor is read directly
    const std::uint64_t pinv = fp.inv(w.at(r, col));
    if (pinv != 1) {
      std::uint32_t* prow = w.row(r);
      for (std::size_t j = col; j < cols; ++j) {
        prow[j] = static_cast<std::uint32_t>(fp.mul(prow[j], pinv));
      }
    }
    const std::uint32_t* prow = w.row(r);
    const std::uint64_t p = fp.modulus();
    const std::int64_t below = static_cast<std::int64_t>(rows - r - 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (below >= 64)
#endif
    for (std::int64_t d = 0; d < below; ++d) {
      const std::size_t i = r + 1 + static_cast<std::size_t>(d);
      std::uint32_t* irow = w.row(i);
      const std::uint64_t f = irow[col];
      if (f == 0) continue;
      for (std::size_t j = col; j < cols; ++j) {
        const std::uint64_t t = (f * prow[j]) % p;
        irow[j] = static_cast<std::uint32_t>(irow[j] >= t ? irow[j] - t : irow[j] + p - t);
      }
    }
    ++r;
  }
  return r;
}

std::size_t mat_rank_colpivot(const MatFp& m) {
  MatFp w = m;
  const FpContext fp(m.modulus());
  const std::size_t rows = w.rows(), cols = w.cols();
  std::size_t r = 0;
  for (std::size_t row = 0; row < rows && r < cols; ++row) {
    std::size_t pivot = r;
    while (pivot < cols && w.at(row, pivot) == 0) ++pivot;
    if (pivot == cols) continue;
    if (pivot != r) {
      for (std::size_t i = row; i < rows; ++i) {
        std::uint32_t t = w.at(i, r);
        w.set(i, r, w.at(i, pivot));
        w.set(i, pivot, t);
      }
    }
    const std::uint64_t pinv = fp.inv(w.at(row, r));
    for (std::size_t j = r + 1; j < cols; ++j) {
      const std::uint64_t f = fp.mul(w.at(row, j), pinv);
      if (f == 0) continue;
      for (std::size_t i = row; i < rows; ++i) {
        w.set(i, j, fp.sub(w.at(i, j), fp.mul(f, w.at(i, r))));
      }
    }
    ++r;
  }
  return r;
}

std::pair<std::size_t, std::size_t> stable_rank_and_index(const MatFp& m, std::size_t bound) {
  if (m.rows() != m.cols()) {
    throw shape_error("stable_rank_and_index: matrix is not square");
  }
  if (bound < 1) {
    throw std::invalid_argument("stable_rank_and_index: bound must be >= 1");
  }
  std::size_t prev = m.rows();  // rank of M^0 = I
  MatFp power = m;
  for (std::size_t k = 1; k <= bound; ++k) {
    const std::size_t rk = mat_rank(power);
    if (rk == prev) return {rk, k - 1};  // ranks stay put from here on
    prev = rk;
    if (k == bound) break;
    power = mat_mul(power, m);
  }
  return {prev, bound};
}

}  // namespace cartier
