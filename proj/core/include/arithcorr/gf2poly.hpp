#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace arithcorr {

/// Polynomial over GF(2) of degree at most 63; bit i of coeffs() is the
/// coefficient of X^i, so X^4 + X + 1 is 0x13.
class Gf2Poly {
 public:
  constexpr Gf2Poly() = default;
  constexpr explicit Gf2Poly(std::uint64_t coeffs) : coeffs_(coeffs) {}

  static constexpr Gf2Poly one() { return Gf2Poly(1); }
  static constexpr Gf2Poly x() { return Gf2Poly(2); }

  constexpr std::uint64_t coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept;
  constexpr bool is_zero() const noexcept { return coeffs_ == 0; }
  constexpr bool coefficient(unsigned i) const noexcept { return (coeffs_ >> i) & 1U; }

  friend constexpr Gf2Poly operator+(Gf2Poly a, Gf2Poly b) { return Gf2Poly(a.coeffs_ ^ b.coeffs_); }
  friend constexpr auto operator<=>(Gf2Poly, Gf2Poly) = default;

 private:
  std::uint64_t coeffs_ = 0;
};

/// "0x13" or "x^4+x+1" (case-insensitive, any term order, spaces ignored).
/// Throws std::invalid_argument on malformed text, repeated terms or a
/// degree above 63.
Gf2Poly parse_poly(std::string_view text);
std::string to_hex(Gf2Poly p);
/// Descending monomial form, e.g. "x^4+x+1"; the zero polynomial prints "0".
std::string to_monomial(Gf2Poly p);

/// Remainder of a modulo m. Throws std::invalid_argument if m is zero.
Gf2Poly poly_mod(Gf2Poly a, Gf2Poly m);
Gf2Poly poly_gcd(Gf2Poly a, Gf2Poly b);

/// a * b mod m. Requires degree(m) >= 1.
Gf2Poly polymod_mul(Gf2Poly a, Gf2Poly b, Gf2Poly m);
Gf2Poly polymod_pow(Gf2Poly base, std::uint64_t exponent, Gf2Poly m);

/// Rabin's test: X^(2^n) = X mod p and gcd(X^(2^(n/q)) - X, p) = 1 for
/// every prime q dividing n. Requires degree(p) >= 1.
bool is_irreducible(Gf2Poly p);

struct PrimeFactor {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

struct Factorization {
  std::uint64_t value = 0;
  std::vector<PrimeFactor> factors;  // ascending primes
};

/// Complete factorization of 2 <= v < 2^63. Throws std::out_of_range otherwise.
Factorization factor_by_trial_division(std::uint64_t v);
std::uint64_t euler_phi(const Factorization& f);

/// Irreducible of degree n with X of multiplicative order 2^n - 1.
/// Requires 2 <= degree(p) <= 63; throws std::invalid_argument otherwise.
bool is_primitive(Gf2Poly p);

/// Multiplicative order of X modulo an irreducible p with p(0) = 1.
/// Throws std::invalid_argument when p is reducible or divisible by X.
std::uint64_t order_of_x(Gf2Poly p);

inline constexpr unsigned kMinEnumerateDegree = 2;
inline constexpr unsigned kMaxEnumerateDegree = 20;

/// Every primitive polynomial of degree n, ascending by coefficient integer.
/// Requires 2 <= n <= 20; jobs = 0 uses every hardware thread.
std::vector<Gf2Poly> enumerate_primitive(unsigned n, unsigned jobs = 1);

}  // namespace arithcorr
