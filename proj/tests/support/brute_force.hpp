#pragma once

// Test-only reference computations. Nothing here calls into arithcorr; every
// routine works on plain strings and machine integers so it can serve as an
// independent oracle for the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace brute {

using u128 = unsigned __int128;
using i128 = __int128;

/// sum bits[i] * 2^i for at most 126 bits.
inline u128 value(const std::string& bits) {
  u128 v = 0;
  for (std::size_t i = bits.size(); i-- > 0;) v = (v << 1) | static_cast<u128>(bits[i] == '1');
  return v;
}

inline int popcount(u128 v) {
  int c = 0;
  for (; v != 0; v &= v - 1) ++c;
  return c;
}

inline std::string shift(const std::string& bits, std::size_t tau) {
  const std::size_t t = bits.size();
  std::string out(t, '0');
  for (std::size_t i = 0; i < t; ++i) out[i] = bits[(i + tau) % t];
  return out;
}

inline std::string xor_bits(const std::string& a, const std::string& b) {
  std::string out(a.size(), '0');
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] == b[i] ? '0' : '1';
  return out;
}

inline int ones(const std::string& bits) {
  return static_cast<int>(std::count(bits.begin(), bits.end(), '1'));
}

/// Arithmetic autocorrelation straight from S(2) - S^(tau)(2), for T <= 126.
inline std::int64_t arithmetic(const std::string& bits, std::size_t tau) {
  const auto t = static_cast<std::int64_t>(bits.size());
  const i128 d = static_cast<i128>(value(bits)) - static_cast<i128>(value(shift(bits, tau)));
  if (d == 0) return t;
  const int n1 = popcount(static_cast<u128>(d < 0 ? -d : d));
  return d > 0 ? t - 2 * n1 : 2 * n1 - t;
}

inline std::int64_t classical(const std::string& bits, std::size_t tau) {
  const std::string s = shift(bits, tau);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) sum += bits[i] == s[i] ? 1 : -1;
  return sum;
}

/// Naive GF(2) remainder.
inline std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = 63 - __builtin_clzll(m);
  while (a != 0 && 63 - __builtin_clzll(a) >= dm) a ^= m << ((63 - __builtin_clzll(a)) - dm);
  return a;
}

/// Irreducible iff no polynomial of degree 1..deg/2 divides p.
inline bool irreducible(std::uint64_t p) {
  const int n = 63 - __builtin_clzll(p);
  for (std::uint64_t d = 2; d < (std::uint64_t{1} << (n / 2 + 1)); ++d) {
    if (poly_mod(p, d) == 0) return false;
  }
  return n >= 1;
}

/// Order of X modulo p by stepping X, X^2, ... until 1; 0 if 1 is never hit.
inline std::uint64_t order_of_x(std::uint64_t p) {
  const int n = 63 - __builtin_clzll(p);
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t x = poly_mod(2, p);
  for (std::uint64_t k = 1; k < limit; ++k) {
    if (x == 1) return k;
    x <<= 1;
    if (x >> n & 1U) x ^= p;
  }
  return 0;
}

/// Primitive polynomials of degree n, ascending, via the stepping order test.
inline std::vector<std::uint64_t> primitive_list(unsigned n) {
  std::vector<std::uint64_t> out;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t low = 1; low < (std::uint64_t{1} << n); low += 2) {
    const std::uint64_t p = (std::uint64_t{1} << n) | low;
    if (order_of_x(p) == full) out.push_back(p);
  }
  return out;
}

inline std::uint64_t phi_by_gcd(std::uint64_t m) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= m; ++k) count += std::gcd(k, m) == 1 ? 1 : 0;
  return count;
}

/// Fibonacci recurrence s_{i+n} = sum c_j s_{i+j} written out on strings.
inline std::string lfsr(std::uint64_t poly, const std::string& init) {
  const std::size_t n = init.size();
  const std::size_t t = (std::size_t{1} << n) - 1;
  std::string s = init;
  while (s.size() < t) {
    int next = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (poly >> j & 1U) next ^= s[s.size() - n + j] - '0';
    }
    s.push_back(static_cast<char>('0' + next));
  }
  return s;
}

inline std::string random_bits(std::mt19937_64& rng, std::size_t length) {
  std::string s(length, '0');
  for (auto& c : s) c = (rng() & 1U) ? '1' : '0';
  return s;
}

}  // namespace brute
