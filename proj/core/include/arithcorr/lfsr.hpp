#pragma once

#include <cstddef>
#include <cstdint>

#include "arithcorr/bitseq.hpp"
#include "arithcorr/gf2poly.hpp"

namespace arithcorr {

/// Largest degree generate_m_sequence will materialize (period 2^24 - 1).
inline constexpr unsigned kMaxGenerateDegree = 24;

/// (0, ..., 0, 1): the reproducible default phase.
BitVector canonical_init_state(unsigned n);

/// Fibonacci LFSR setup: a primitive characteristic polynomial of degree n
/// and a nonzero n-bit initial state (s_0, ..., s_{n-1}).
class LfsrSpec {
 public:
  /// Throws std::invalid_argument when the degree is outside
  /// [2, kMaxGenerateDegree] or the state length is not n, and MathError when
  /// the polynomial is not primitive or the state is all-zero.
  LfsrSpec(Gf2Poly poly, BitVector init_state);
  static LfsrSpec canonical(Gf2Poly poly);

  const Gf2Poly& poly() const noexcept { return poly_; }
  const BitVector& init_state() const noexcept { return init_state_; }
  unsigned degree() const noexcept { return static_cast<unsigned>(poly_.degree()); }
  std::size_t period() const noexcept { return (std::size_t{1} << degree()) - 1; }

 private:
  Gf2Poly poly_;
  BitVector init_state_;
};

/// One period (2^n - 1 terms) of s_{i+n} = sum_{j<n} c_j s_{i+j} mod 2, where
/// poly = X^n + sum_{j<n} c_j X^j. The least period is checked to be exactly
/// 2^n - 1.
PeriodicSequence generate_m_sequence(const LfsrSpec& spec);

/// The tau' in [0, T) with s xor s^(tau) = s^(tau'), found by scanning every
/// shift. tau is reduced modulo T and must not be 0 (std::invalid_argument);
/// MathError when no shift matches.
std::size_t shift_and_add_tau_prime(const PeriodicSequence& s, std::int64_t tau);

/// True when no proper divisor of the period is itself a period.
bool has_exact_period(const PeriodicSequence& s);

}  // namespace arithcorr
