#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arithcorr/bitseq.hpp"
#include "arithcorr/gf2poly.hpp"
#include "arithcorr/lfsr.hpp"
#include "arithcorr/ternary.hpp"

namespace arithcorr {

/// Arithmetic autocorrelation at one shift.
///
/// For D = S(2) - S^(tau)(2) with |D| written in exactly T bits and N_1 ones:
/// correlation = T - 2 N_1 if D > 0 and 2 N_1 - T if D < 0. D = 0 (only
/// possible for tau = 0 or a sequence with a shorter true period) gives T.
struct ShiftRecord {
  std::size_t tau = 0;
  Sign sign = Sign::zero;
  std::size_t n_ones = 0;
  std::int64_t correlation = 0;

  /// Applies the sign rule above. Throws std::invalid_argument if n_ones
  /// exceeds the period or is nonzero for a zero difference.
  static ShiftRecord from_expansion(std::size_t tau, std::size_t period, Sign sign, std::size_t n_ones);

  friend bool operator==(const ShiftRecord&, const ShiftRecord&) = default;
};

enum class Validation {
  automatic,  // on for periods up to kAutoValidatePeriod
  on,
  off,
};

inline constexpr std::size_t kAutoValidatePeriod = 1023;

bool validation_enabled(Validation v, std::size_t period) noexcept;

/// A^A(tau) through the big-integer route. With validation enabled the
/// block-transfer and 2-adic routes are also run and any disagreement throws
/// OracleMismatch. tau is reduced modulo T; tau = 0 yields T.
ShiftRecord arithmetic_autocorrelation(const PeriodicSequence& s, std::int64_t tau,
                                       Validation validation = Validation::automatic);

/// The three routes side by side, for reporting and tests.
struct OracleTriangle {
  ShiftRecord block_transfer;
  ShiftRecord bignum;
  std::int64_t two_adic_correlation = 0;
  std::size_t two_adic_preperiod = 0;

  bool agree() const noexcept;
};
OracleTriangle oracle_triangle(const PeriodicSequence& s, std::int64_t tau);

struct CorrelationSpectrum {
  std::size_t period = 0;
  std::string sequence_id;
  std::vector<ShiftRecord> records;  // tau = 1 .. T-1 in order
};

struct SpectrumOptions {
  Validation validation = Validation::automatic;
  unsigned jobs = 1;
  std::string sequence_id;
};

CorrelationSpectrum spectrum(const PeriodicSequence& s, const SpectrumOptions& options = {});

/// |A^A| <= 2^(n-1) - 1 over every record.
struct BoundCheck {
  bool holds = true;
  std::int64_t max_abs = 0;
  std::int64_t bound = 0;
  bool attained = false;
};
BoundCheck check_correlation_bound(const CorrelationSpectrum& sp, unsigned n);

/// Counts of |A^A| over one spectrum.
std::map<std::int64_t, std::size_t> abs_value_counts(const CorrelationSpectrum& sp);
std::set<std::int64_t> value_set(const CorrelationSpectrum& sp);

/// Shifts where A^A(T - tau) = -A^A(tau), and where the difference signs are
/// opposite. Observational only; neither is claimed to always hold.
struct AntisymmetryReport {
  std::size_t pairs = 0;
  std::size_t correlation_negated = 0;
  std::size_t sign_flipped = 0;
};
AntisymmetryReport antisymmetry(const CorrelationSpectrum& sp);

inline constexpr unsigned kDefaultDegreeCap = 12;

struct SweepOptions {
  unsigned cap = kDefaultDegreeCap;
  unsigned jobs = 1;
  Validation validation = Validation::automatic;
};

/// One way the value-spectrum conjecture failed for one polynomial.
struct ConjectureViolation {
  enum class Kind { value_form, count };
  Kind kind = Kind::value_form;
  Gf2Poly poly;
  std::size_t tau = 0;           // value_form only
  std::int64_t value = 0;        // value_form: A^A; count: |A^A| = 2^k - 1
  std::size_t expected_count = 0;  // count only
  std::size_t observed_count = 0;  // count only
};

struct PolynomialCounts {
  Gf2Poly poly;
  std::map<std::int64_t, std::size_t> counts;  // |A^A| -> number of shifts
};

/// Per degree: (1) every A^A is +-(2^k - 1) with 1 <= k < n, and
/// (2) exactly 2^(n-k) shifts have |A^A| = 2^k - 1, for every polynomial.
struct ConjectureReport {
  unsigned degree = 0;
  std::size_t polynomial_count = 0;
  /// Per-sequence |A^A| counts when every polynomial agrees; otherwise the
  /// counts of the first polynomial (see per_polynomial).
  std::map<std::int64_t, std::size_t> value_multiset;
  bool uniform = true;
  bool part1_holds = true;
  bool part2_holds = true;
  /// Every per-polynomial count total equals 2^n - 2.
  bool totals_consistent = true;
  std::vector<PolynomialCounts> per_polynomial;
  std::vector<ConjectureViolation> violations;
};

/// Sweeps every primitive polynomial of degree n at the canonical phase.
/// Requires 2 <= n <= options.cap and options.cap <= kMaxEnumerateDegree
/// (std::out_of_range otherwise). Never throws because the conjecture fails.
ConjectureReport conjecture_check(unsigned n, const SweepOptions& options = {});

struct PolynomialValues {
  Gf2Poly poly;
  std::set<std::int64_t> values;
  BoundCheck bound;
};

struct Table1Row {
  unsigned degree = 0;
  std::size_t polynomial_count = 0;
  std::set<std::int64_t> values;  // union over all polynomials
  bool every_polynomial_attains_union = true;
  std::vector<PolynomialValues> per_polynomial;
};

/// Requires 2 <= n_min <= n_max <= options.cap (std::out_of_range otherwise).
std::vector<Table1Row> table1_report(unsigned n_min, unsigned n_max, const SweepOptions& options = {});

/// |A^A(tau)| <= (T + A(tau)) / 2, compared as 2|A^A| <= T + A.
struct InequalityCheck {
  bool holds = true;
  std::int64_t arithmetic = 0;
  std::int64_t classical = 0;
  std::int64_t period = 0;
};
InequalityCheck arith_vs_classical_check(const PeriodicSequence& s, std::int64_t tau,
                                         Validation validation = Validation::automatic);

inline constexpr unsigned kMaxPhaseSweepDegree = 10;

struct PhaseCheck {
  bool holds = true;
  std::optional<std::size_t> first_differing_phase;
};

/// Compares the multiset of A^A(tau), 1 <= tau < T, of every phase of the
/// generated sequence against phase 0. Requires degree <= 10.
PhaseCheck phase_invariance_check(const LfsrSpec& spec, unsigned jobs = 1,
                                  Validation validation = Validation::off);

}  // namespace arithcorr
