#include "cartier/fpk.hpp"

#include <stdexcept>

namespace cartier {

namespace {

using Poly = std::vector<std::uint32_t>;  // dense univariate, constant first

int poly_deg(const Poly& f) {
  for (int d = static_cast<int>(f.size()) - 1; d >= 0; --d) {
    if (f[static_cast<std::size_t>(d)] != 0) return d;
  }
  return -1;
}

// Remainder of f modulo monic divisor g (in place on a copy).
Poly poly_rem(Poly f, const Poly& g, const FpContext& fp) {
  const int dg = poly_deg(g);
  for (int d = poly_deg(f); d >= dg; d = poly_deg(f)) {
    const std::uint64_t c = f[static_cast<std::size_t>(d)];
    for (int t = 0; t <= dg; ++t) {
      auto& slot = f[static_cast<std::size_t>(d - dg + t)];
      slot = static_cast<std::uint32_t>(fp.sub(slot, fp.mul(c, g[static_cast<std::size_t>(t)])));
    }
  }
  return f;
}

// Monic polynomial of degree deg with coefficient digits taken from index.
Poly nth_monic(std::uint64_t index, int deg, std::uint64_t p) {
  Poly f(static_cast<std::size_t>(deg) + 1, 0);
  f[static_cast<std::size_t>(deg)] = 1;
  for (int t = 0; t < deg; ++t) {
    f[static_cast<std::size_t>(t)] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return f;
}

bool divides(const Poly& g, const Poly& f, const FpContext& fp) {
  return poly_deg(poly_rem(f, g, fp)) < 0;
}

// Trial division by every monic polynomial of degree 1..k/2. Fine for
// the k <= 4, small-p scans this backs.
bool is_irreducible(const Poly& f, int k, const FpContext& fp) {
  const std::uint64_t p = fp.modulus();
  for (int dg = 1; dg <= k / 2; ++dg) {
    std::uint64_t count = 1;
    for (int t = 0; t < dg; ++t) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (divides(nth_monic(idx, dg, p), f, fp)) return false;
    }
  }
  return true;
}

}  // namespace

FpkContext::FpkContext(std::uint64_t p, int k) : fp_(p), k_(k) {
  if (k < 1 || k > 4) {
    throw std::invalid_argument("FpkContext: extension degree must be in 1..4");
  }
  order_ = 1;
  for (int t = 0; t < k; ++t) order_ *= p;

  if (k == 1) {
    modpoly_ = {0};  // modulus x; arithmetic degenerates to F_p
    reduction_ = {0};
    return;
  }
  std::uint64_t count = 1;
  for (int t = 0; t < k; ++t) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f = nth_monic(idx, k, p);
    if (is_irreducible(f, k, fp_)) {
      modpoly_.assign(f.begin(), f.end() - 1);
      reduction_.resize(static_cast<std::size_t>(k));
      for (int t = 0; t < k; ++t) {
        reduction_[static_cast<std::size_t>(t)] =
            static_cast<std::uint32_t>(fp_.neg(modpoly_[static_cast<std::size_t>(t)]));
      }
      return;
    }
  }
  throw std::logic_error("FpkContext: no irreducible polynomial found");  // unreachable
}

FpkContext::Elem FpkContext::one() const {
  Elem e = zero();
  e[0] = 1;
  return e;
}

FpkContext::Elem FpkContext::element(std::uint64_t index) const {
  Elem e = zero();
  for (int t = 0; t < k_; ++t) {
    e[static_cast<std::size_t>(t)] = static_cast<std::uint32_t>(index % p());
    index /= p();
  }
  return e;
}

bool FpkContext::is_zero(const Elem& a) const noexcept {
  for (std::uint32_t c : a) {
    if (c != 0) return false;
  }
  return true;
}

FpkContext::Elem FpkContext::add(const Elem& a, const Elem& b) const {
  Elem out = zero();
  for (int t = 0; t < k_; ++t) {
    out[static_cast<std::size_t>(t)] = static_cast<std::uint32_t>(
        fp_.add(a[static_cast<std::size_t>(t)], b[static_cast<std::size_t>(t)]));
  }
  return out;
}

FpkContext::Elem FpkContext::mul(const Elem& a, const Elem& b) const {
  const std::size_t k = static_cast<std::size_t>(k_);
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  for (std::size_t s = 0; s < k; ++s) {
    if (a[s] == 0) continue;
    for (std::size_t t = 0; t < k; ++t) {
      prod[s + t] = (prod[s + t] + static_cast<std::uint64_t>(a[s]) * b[t]) % p();
    }
  }
  // fold x^{k+m} down using x^k ≡ reduction_
  for (std::size_t d = 2 * k - 2; d >= k; --d) {
    const std::uint64_t c = prod[d];
    if (c != 0) {
      prod[d] = 0;
      for (std::size_t t = 0; t < k; ++t) {
        prod[d - k + t] = fp_.add(prod[d - k + t], fp_.mul(c, reduction_[t]));
      }
    }
    if (d == k) break;
  }
  Elem out = zero();
  for (std::size_t t = 0; t < k; ++t) out[t] = static_cast<std::uint32_t>(prod[t]);
  return out;
}

FpkContext::Elem FpkContext::pow(const Elem& a, std::uint64_t e) const {
  Elem base = a;
  Elem result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

bool FpkContext::in_proper_subfield(const Elem& a) const {
  if (k_ == 1) return false;
  // largest proper subfield degree: k/2 for k in {2, 4}, 1 for k = 3;
  // F_p sits inside F_{p^2}, so checking j = k/2 covers j = 1 when k = 4
  const int j = (k_ == 3) ? 1 : k_ / 2;
  std::uint64_t q = 1;
  for (int t = 0; t < j; ++t) q *= p();
  return pow(a, q) == a;
}

}  // namespace cartier
