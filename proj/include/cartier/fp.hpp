#pragma once

#include <cstdint>
#include <stdexcept>

namespace cartier {

// Thrown when a modulus is not an odd/even prime in the supported range.
struct invalid_modulus : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t m) noexcept;

/// Arithmetic context for the prime field F_p.
///
/// Elements are canonical residues in [0, p) carried as plain uint64;
/// the modulus lives in the context, not per element. The constructor
/// validates primality once; p must fit in 31 bits so that products fit
/// in uint64 and matrix entries in uint32.
class FpContext {
public:
  explicit FpContext(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }

  std::uint64_t reduce(std::int64_t x) const noexcept;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return (a * b) % p_;
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const noexcept;

  // Multiplicative inverse by extended Euclid; throws std::domain_error on 0.
  std::uint64_t inv(std::uint64_t a) const;

private:
  std::uint64_t p_;
};

/// C(n, k) mod p as the base-p digit product of small binomials;
/// 0 as soon as a digit of k exceeds the matching digit of n.
std::uint64_t lucas_binomial(std::uint64_t n, std::uint64_t k, const FpContext& fp);
std::uint64_t lucas_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t p);

}  // namespace cartier
