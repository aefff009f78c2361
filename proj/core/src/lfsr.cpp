#include "arithcorr/lfsr.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "arithcorr/errors.hpp"

namespace arithcorr {

BitVector canonical_init_state(unsigned n) {
  if (n == 0) throw std::invalid_argument("canonical_init_state: degree must be positive");
  BitVector v(n);
  v.set(n - 1);
  return v;
}

LfsrSpec::LfsrSpec(Gf2Poly poly, BitVector init_state)
    : poly_(poly), init_state_(std::move(init_state)) {
  const int n = poly_.degree();
  if (n < 2 || n > static_cast<int>(kMaxGenerateDegree)) {
    throw std::invalid_argument("LFSR degree must be in [2, " + std::to_string(kMaxGenerateDegree) +
                                "], got " + std::to_string(n));
  }
  if (init_state_.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("initial state must have " + std::to_string(n) + " bits, got " +
                                std::to_string(init_state_.size()));
  }
  if (init_state_.is_zero()) throw MathError("initial state is all-zero");
  if (!is_primitive(poly_)) throw MathError("polynomial is not primitive: " + to_hex(poly_));
}

LfsrSpec LfsrSpec::canonical(Gf2Poly poly) {
  const int n = poly.degree();
  if (n < 1) throw std::invalid_argument("LFSR degree must be in [2, " + std::to_string(kMaxGenerateDegree) + "]");
  return LfsrSpec(poly, canonical_init_state(static_cast<unsigned>(n)));
}

PeriodicSequence generate_m_sequence(const LfsrSpec& spec) {
  const unsigned n = spec.degree();
  const std::size_t period = spec.period();
  const std::uint64_t taps = spec.poly().coeffs() & ((std::uint64_t{1} << n) - 1);

  // window bit j holds s_{i+j}.
  std::uint64_t window = 0;
  for (unsigned j = 0; j < n; ++j) {
    if (spec.init_state().test(j)) window |= std::uint64_t{1} << j;
  }

  BitVector out(period);
  for (std::size_t i = 0; i < period; ++i) {
    if (window & 1U) out.set(i);
    const std::uint64_t next = static_cast<std::uint64_t>(std::popcount(window & taps) & 1);
    window = (window >> 1) | (next << (n - 1));
  }

  PeriodicSequence seq(std::move(out));
  if (!has_exact_period(seq)) {
    throw MathError("generated sequence does not have least period " + std::to_string(period));
  }
  return seq;
}

bool has_exact_period(const PeriodicSequence& s) {
  const std::size_t t = s.period();
  for (const auto& f : factor_by_trial_division(t).factors) {
    if (rotate(s.first_period(), t / f.prime) == s.first_period()) return false;
  }
  return true;
}

std::size_t shift_and_add_tau_prime(const PeriodicSequence& s, std::int64_t tau) {
  const std::size_t t = s.period();
  const std::size_t r = reduce_shift(tau, t);
  if (r == 0) throw std::invalid_argument("shift_and_add_tau_prime: tau must be nonzero mod T");
  const BitVector sum = xor_vectors(s.first_period(), rotate(s.first_period(), r));
  for (std::size_t candidate = 0; candidate < t; ++candidate) {
    if (rotate(s.first_period(), candidate) == sum) return candidate;
  }
  throw MathError("not an m-sequence under shift-and-add");
}

}  // namespace arithcorr
