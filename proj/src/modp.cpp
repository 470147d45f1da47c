#include "toric/modp.hpp"

#include <stdexcept>

namespace toric::modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (x == q) return true;
    if (x % q == 0) return false;
  }
  std::uint64_t d = x - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // these bases are a proven witness set below 3.3e24
  for (std::uint64_t b : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t y = pow(b, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      y = mul(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime(unsigned bits, std::mt19937_64& rng) {
  if (bits < 2 || bits > 63) throw std::invalid_argument("prime size must be between 2 and 63 bits");
  const std::uint64_t lo = std::uint64_t{1} << (bits - 1);
  const std::uint64_t hi = (std::uint64_t{1} << bits) - 1;
  std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
  for (;;) {
    std::uint64_t c = dist(rng);
    if (is_prime(c)) return c;
  }
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::size_t rank(Matrix m, std::uint64_t p) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
    const std::uint64_t iv = inv(m(r, c), p);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (m(i, c) == 0) continue;
      const std::uint64_t f = mul(m(i, c), iv, p);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) = sub(m(i, j), mul(f, m(r, j), p), p);
    }
    ++r;
  }
  return r;
}

}  // namespace toric::modp
