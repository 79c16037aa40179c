#include "cartier/poly.hpp"

#include <sstream>

namespace cartier {

BivarPoly BivarPoly::one(std::uint64_t p) {
  BivarPoly f(p);
  f.add_term(0, 0, 1);
  return f;
}

BivarPoly BivarPoly::monomial(std::uint64_t p, std::int64_t i, std::int64_t j,
                              std::int64_t coeff) {
  BivarPoly f(p);
  f.add_term(i, j, coeff);
  return f;
}

void BivarPoly::add_term(std::int64_t i, std::int64_t j, std::int64_t coeff) {
  if (i < 0 || j < 0) throw exponent_error("negative exponent");
  std::int64_t r = coeff % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  if (r == 0) return;
  auto [it, fresh] = terms_.try_emplace(Monomial{i, j}, 0);
  it->second += static_cast<std::uint64_t>(r);
  if (it->second >= p_) it->second -= p_;
  if (it->second == 0) terms_.erase(it);
}

std::uint64_t BivarPoly::coeff(std::int64_t i, std::int64_t j) const noexcept {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t BivarPoly::degree() const noexcept {
  std::int64_t d = -1;
  for (const auto& [m, c] : terms_) {
    if (m.i + m.j > d) d = m.i + m.j;
  }
  return d;
}

namespace {

void check_same_modulus(const BivarPoly& f, const BivarPoly& g) {
  if (f.modulus() != g.modulus()) {
    throw modulus_mismatch("polynomial moduli differ: " + std::to_string(f.modulus()) +
                           " vs " + std::to_string(g.modulus()));
  }
}

}  // namespace

BivarPoly poly_add(const BivarPoly& f, const BivarPoly& g) {
  check_same_modulus(f, g);
  BivarPoly out = f;
  for (const auto& [m, c] : g.terms()) {
    out.add_term(m.i, m.j, static_cast<std::int64_t>(c));
  }
  return out;
}

BivarPoly poly_mul(const BivarPoly& f, const BivarPoly& g) {
  check_same_modulus(f, g);
  BivarPoly out(f.modulus());
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      out.add_term(mf.i + mg.i, mf.j + mg.j,
                   static_cast<std::int64_t>((cf * cg) % f.modulus()));
    }
  }
  return out;
}

BivarPoly poly_pow(const BivarPoly& f, std::uint64_t e) {
  BivarPoly result = BivarPoly::one(f.modulus());
  if (e == 0) return result;
  BivarPoly base = f;
  while (true) {
    if (e & 1) result = poly_mul(result, base);
    e >>= 1;
    if (e == 0) break;
    base = poly_mul(base, base);
  }
  return result;
}

BivarPoly nabla(const BivarPoly& f) {
  const std::int64_t p = static_cast<std::int64_t>(f.modulus());
  BivarPoly out(f.modulus());
  for (const auto& [m, c] : f.terms()) {
    if (m.i % p == p - 1 && m.j % p == p - 1) {
      out.add_term(m.i - (p - 1), m.j - (p - 1), static_cast<std::int64_t>(c));
    }
  }
  return out;
}

BivarPoly root_p(const BivarPoly& f) {
  const std::int64_t p = static_cast<std::int64_t>(f.modulus());
  BivarPoly out(f.modulus());
  for (const auto& [m, c] : f.terms()) {
    if (m.i % p != 0 || m.j % p != 0) {
      throw exponent_error("root_p: exponent pair (" + std::to_string(m.i) + ", " +
                           std::to_string(m.j) + ") is not divisible by " + std::to_string(p));
    }
    out.add_term(m.i / p, m.j / p, static_cast<std::int64_t>(c));
  }
  return out;
}

BivarPoly derivative_x(const BivarPoly& f) {
  const FpContext fp(f.modulus());
  BivarPoly out(f.modulus());
  for (const auto& [m, c] : f.terms()) {
    if (m.i == 0) continue;
    out.add_term(m.i - 1, m.j, static_cast<std::int64_t>(fp.mul(c, fp.reduce(m.i))));
  }
  return out;
}

BivarPoly derivative_y(const BivarPoly& f) {
  const FpContext fp(f.modulus());
  BivarPoly out(f.modulus());
  for (const auto& [m, c] : f.terms()) {
    if (m.j == 0) continue;
    out.add_term(m.i, m.j - 1, static_cast<std::int64_t>(fp.mul(c, fp.reduce(m.j))));
  }
  return out;
}

std::string to_string(const BivarPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    if (c != 1 || (m.i == 0 && m.j == 0)) os << c;
    if (m.i > 0) {
      if (c != 1) os << "*";
      os << "x";
      if (m.i > 1) os << "^" << m.i;
    }
    if (m.j > 0) {
      if (c != 1 || m.i > 0) os << "*";
      os << "y";
      if (m.j > 1) os << "^" << m.j;
    }
  }
  return os.str();
}

}  // namespace cartier
