#pragma once

// Arithmetic in prime fields of up to 63 bits, and random prime selection.

#include <cstdint>
#include <random>
#include <vector>

namespace toric::modp {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t x);

/// Uniform random prime with exactly `bits` bits (2 <= bits <= 63).
std::uint64_t random_prime(unsigned bits, std::mt19937_64& rng);

/// splitmix64 finalizer; derives independent per-trial seeds.
std::uint64_t mix(std::uint64_t x);

/// Dense row-major matrix over F_p.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  std::uint64_t& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Rank by Gaussian elimination; the argument is consumed.
std::size_t rank(Matrix m, std::uint64_t p);

}  // namespace toric::modp
