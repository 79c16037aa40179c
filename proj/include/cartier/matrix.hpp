#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cartier/fp.hpp"

namespace cartier {

struct shape_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over F_p with canonical uint32 entries.
class MatFp {
public:
  MatFp(std::size_t rows, std::size_t cols, std::uint64_t p);

  static MatFp identity(std::size_t n, std::uint64_t p);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint64_t modulus() const noexcept { return p_; }

  std::uint32_t at(std::size_t r, std::size_t c) const noexcept {
    return a_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint64_t v) noexcept {
    a_[r * cols_ + c] = static_cast<std::uint32_t>(v % p_);
  }

  const std::uint32_t* row(std::size_t r) const noexcept { return a_.data() + r * cols_; }
  std::uint32_t* row(std::size_t r) noexcept { return a_.data() + r * cols_; }

  bool is_zero() const noexcept;

  friend bool operator==(const MatFp&, const MatFp&) = default;

private:
  std::size_t rows_, cols_;
  std::uint64_t p_;
  std::vector<std::uint32_t> a_;
};

/// Exact product over F_p; OpenMP-parallel across output rows.
MatFp mat_mul(const MatFp& a, const MatFp& b);
/// Single-threaded reference kernel for mat_mul.
MatFp mat_mul_serial(const MatFp& a, const MatFp& b);

/// Rank by row-echelon elimination with exact modular inverses.
/// Row updates below the pivot run in parallel; the input is untouched.
std::size_t mat_rank(const MatFp& m);
/// Independent serial route: column-pivot elimination. Test cross-check.
std::size_t mat_rank_colpivot(const MatFp& m);

/// For square M returns (rank(M^bound), least k >= 0 with rank(M^k)
/// equal to that stable value), taking M^0 = I. Power ranks are
/// non-increasing and stabilize as soon as two consecutive ones agree,
/// so the loop exits early.
std::pair<std::size_t, std::size_t> stable_rank_and_index(const MatFp& m, std::size_t bound);

}  // namespace cartier
