#include "cartier/fp.hpp"

#include <string>

namespace cartier {

bool is_prime(std::uint64_t m) noexcept {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  if (m % 3 == 0) return m == 3;
  for (std::uint64_t d = 5; d * d <= m; d += 6) {
    if (m % d == 0 || m % (d + 2) == 0) return false;
  }
  return true;
}

FpContext::FpContext(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) {
    throw invalid_modulus("modulus " + std::to_string(p) + " is not prime");
  }
  if (p >= (std::uint64_t{1} << 31)) {
    throw invalid_modulus("modulus " + std::to_string(p) + " exceeds 31 bits");
  }
}

std::uint64_t FpContext::reduce(std::int64_t x) const noexcept {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t FpContext::pow(std::uint64_t base, std::uint64_t exp) const noexcept {
  std::uint64_t b = base % p_;
  std::uint64_t r = 1 % p_;
  while (exp > 0) {
    if (exp & 1) r = mul(r, b);
    b = mul(b, b);
    exp >>= 1;
  }
  return r;
}

std::uint64_t FpContext::inv(std::uint64_t a) const {
  a %= p_;
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  // extended Euclid on (a, p); invariant a*x0 + p*(..) = r0
  std::int64_t r0 = static_cast<std::int64_t>(a), r1 = static_cast<std::int64_t>(p_);
  std::int64_t x0 = 1, x1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t x2 = x0 - q * x1;
    r0 = r1; r1 = r2;
    x0 = x1; x1 = x2;
  }
  return reduce(x0);
}

namespace {

// C(a, b) mod p for 0 <= b <= a < p, multiplicative form.
std::uint64_t digit_binomial(std::uint64_t a, std::uint64_t b, const FpContext& fp) {
  if (b > a - b) b = a - b;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t t = 1; t <= b; ++t) {
    num = fp.mul(num, (a - b + t) % fp.modulus());
    den = fp.mul(den, t % fp.modulus());
  }
  return fp.mul(num, fp.inv(den));
}

}  // namespace

std::uint64_t lucas_binomial(std::uint64_t n, std::uint64_t k, const FpContext& fp) {
  const std::uint64_t p = fp.modulus();
  std::uint64_t acc = 1;
  while (k > 0 || n > 0) {
    std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    acc = fp.mul(acc, digit_binomial(nd, kd, fp));
    n /= p;
    k /= p;
  }
  return acc;
}

std::uint64_t lucas_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  return lucas_binomial(n, k, FpContext(p));
}

}  // namespace cartier
