#include "arithcorr/correlation.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "arithcorr/errors.hpp"
#include "arithcorr/parallel.hpp"

namespace arithcorr {

namespace {

std::string describe(const ShiftRecord& r) {
  std::ostringstream os;
  os << "tau=" << r.tau << " sign=" << to_string(r.sign) << " N_1=" << r.n_ones
     << " A=" << r.correlation;
  return os.str();
}

void require_sweep_range(unsigned n_min, unsigned n_max, const SweepOptions& options) {
  if (options.cap > kMaxEnumerateDegree) {
    throw std::out_of_range("degree cap may not exceed " + std::to_string(kMaxEnumerateDegree));
  }
  if (n_min < kMinEnumerateDegree || n_min > n_max || n_max > options.cap) {
    throw std::out_of_range("degree range [" + std::to_string(n_min) + ", " + std::to_string(n_max) +
                            "] must satisfy 2 <= n_min <= n_max <= " + std::to_string(options.cap));
  }
}

bool is_mersenne_value(std::int64_t v, unsigned n) {
  if (v <= 0) return false;
  const auto next = static_cast<std::uint64_t>(v) + 1;
  return std::has_single_bit(next) && std::countr_zero(next) < static_cast<int>(n);
}

}  // namespace

ShiftRecord ShiftRecord::from_expansion(std::size_t tau, std::size_t period, Sign sign,
                                        std::size_t n_ones) {
  if (n_ones > period) throw std::invalid_argument("N_1 exceeds the period");
  const auto t = static_cast<std::int64_t>(period);
  const auto ones = static_cast<std::int64_t>(n_ones);
  ShiftRecord r{tau, sign, n_ones, 0};
  switch (sign) {
    case Sign::positive:
      r.correlation = t - 2 * ones;
      break;
    case Sign::negative:
      r.correlation = 2 * ones - t;
      break;
    case Sign::zero:
      if (n_ones != 0) throw std::invalid_argument("zero difference with nonzero expansion");
      r.correlation = t;
      break;
  }
  return r;
}

bool validation_enabled(Validation v, std::size_t period) noexcept {
  switch (v) {
    case Validation::on:
      return true;
    case Validation::off:
      return false;
    case Validation::automatic:
      return period <= kAutoValidatePeriod;
  }
  return false;
}

bool OracleTriangle::agree() const noexcept {
  return block_transfer == bignum && bignum.correlation == two_adic_correlation;
}

OracleTriangle oracle_triangle(const PeriodicSequence& s, std::int64_t tau) {
  const std::size_t t = s.period();
  const std::size_t r = reduce_shift(tau, t);
  const BitVector shifted = rotate(s.first_period(), r);

  OracleTriangle out;
  const Normalization norm = normalize_to_binary(binary_subtract(s.first_period(), shifted));
  out.block_transfer = ShiftRecord::from_expansion(r, t, norm.value.sign, weight(norm.value.magnitude));

  const BigBinary big = bignum_expand_oracle(s.first_period(), shifted);
  out.bignum = ShiftRecord::from_expansion(r, t, big.sign, weight(big.magnitude));

  if (r == 0) {
    out.two_adic_correlation = static_cast<std::int64_t>(t);
  } else {
    const TwoAdicTail tail = two_adic_difference_oracle(s, static_cast<std::int64_t>(r));
    out.two_adic_correlation =
        static_cast<std::int64_t>(t) - 2 * static_cast<std::int64_t>(weight(tail.period_bits));
    out.two_adic_preperiod = tail.preperiod;
  }
  return out;
}

ShiftRecord arithmetic_autocorrelation(const PeriodicSequence& s, std::int64_t tau,
                                       Validation validation) {
  const std::size_t t = s.period();
  const std::size_t r = reduce_shift(tau, t);
  if (r == 0) return ShiftRecord::from_expansion(0, t, Sign::zero, 0);

  if (validation_enabled(validation, t)) {
    const OracleTriangle tri = oracle_triangle(s, static_cast<std::int64_t>(r));
    if (!tri.agree()) {
      throw OracleMismatch("oracle disagreement on " + s.to_string() + ": block-transfer {" +
                           describe(tri.block_transfer) + "}, big-integer {" + describe(tri.bignum) +
                           "}, 2-adic A=" + std::to_string(tri.two_adic_correlation));
    }
    return tri.bignum;
  }

  const BigBinary big = bignum_expand_oracle(s.first_period(), rotate(s.first_period(), r));
  return ShiftRecord::from_expansion(r, t, big.sign, weight(big.magnitude));
}

CorrelationSpectrum spectrum(const PeriodicSequence& s, const SpectrumOptions& options) {
  CorrelationSpectrum sp;
  sp.period = s.period();
  sp.sequence_id = options.sequence_id;
  sp.records.resize(s.period() - 1);
  parallel_for(sp.records.size(), options.jobs, [&](std::size_t i) {
    sp.records[i] = arithmetic_autocorrelation(s, static_cast<std::int64_t>(i + 1), options.validation);
  });
  return sp;
}

BoundCheck check_correlation_bound(const CorrelationSpectrum& sp, unsigned n) {
  if (n < 1 || n > 62) throw std::out_of_range("check_correlation_bound: degree out of range");
  BoundCheck check;
  check.bound = (std::int64_t{1} << (n - 1)) - 1;
  for (const auto& r : sp.records) check.max_abs = std::max(check.max_abs, std::abs(r.correlation));
  check.holds = check.max_abs <= check.bound;
  check.attained = !sp.records.empty() && check.max_abs == check.bound;
  return check;
}

std::map<std::int64_t, std::size_t> abs_value_counts(const CorrelationSpectrum& sp) {
  std::map<std::int64_t, std::size_t> counts;
  for (const auto& r : sp.records) ++counts[std::abs(r.correlation)];
  return counts;
}

std::set<std::int64_t> value_set(const CorrelationSpectrum& sp) {
  std::set<std::int64_t> values;
  for (const auto& r : sp.records) values.insert(r.correlation);
  return values;
}

AntisymmetryReport antisymmetry(const CorrelationSpectrum& sp) {
  AntisymmetryReport report;
  const std::size_t t = sp.period;
  for (const auto& r : sp.records) {
    const ShiftRecord& mirror = sp.records[t - r.tau - 1];
    ++report.pairs;
    if (mirror.correlation == -r.correlation) ++report.correlation_negated;
    const bool flipped = (r.sign == Sign::positive && mirror.sign == Sign::negative) ||
                         (r.sign == Sign::negative && mirror.sign == Sign::positive);
    if (flipped) ++report.sign_flipped;
  }
  return report;
}

ConjectureReport conjecture_check(unsigned n, const SweepOptions& options) {
  require_sweep_range(n, n, options);
  const std::vector<Gf2Poly> polys = enumerate_primitive(n, options.jobs);

  std::vector<CorrelationSpectrum> spectra(polys.size());
  parallel_for(polys.size(), options.jobs, [&](std::size_t i) {
    const PeriodicSequence s = generate_m_sequence(LfsrSpec::canonical(polys[i]));
    spectra[i] = spectrum(s, {options.validation, 1, to_hex(polys[i])});
  });

  ConjectureReport report;
  report.degree = n;
  report.polynomial_count = polys.size();
  const std::size_t expected_total = (std::size_t{1} << n) - 2;

  for (std::size_t i = 0; i < polys.size(); ++i) {
    const CorrelationSpectrum& sp = spectra[i];
    for (const auto& r : sp.records) {
      if (!is_mersenne_value(std::abs(r.correlation), n)) {
        report.part1_holds = false;
        report.violations.push_back({ConjectureViolation::Kind::value_form, polys[i], r.tau,
                                     r.correlation, 0, 0});
      }
    }

    PolynomialCounts pc{polys[i], abs_value_counts(sp)};
    std::size_t total = 0;
    for (const auto& [value, count] : pc.counts) total += count;
    if (total != expected_total) report.totals_consistent = false;

    for (unsigned k = 1; k < n; ++k) {
      const std::int64_t value = (std::int64_t{1} << k) - 1;
      const std::size_t want = std::size_t{1} << (n - k);
      const auto it = pc.counts.find(value);
      const std::size_t got = it == pc.counts.end() ? 0 : it->second;
      if (got != want) {
        report.part2_holds = false;
        report.violations.push_back({ConjectureViolation::Kind::count, polys[i], 0, value, want, got});
      }
    }
    report.per_polynomial.push_back(std::move(pc));
  }

  if (!report.per_polynomial.empty()) {
    report.value_multiset = report.per_polynomial.front().counts;
    for (const auto& pc : report.per_polynomial) {
      if (pc.counts != report.value_multiset) report.uniform = false;
    }
  }
  return report;
}

std::vector<Table1Row> table1_report(unsigned n_min, unsigned n_max, const SweepOptions& options) {
  require_sweep_range(n_min, n_max, options);
  std::vector<Table1Row> rows;
  for (unsigned n = n_min; n <= n_max; ++n) {
    const std::vector<Gf2Poly> polys = enumerate_primitive(n, options.jobs);
    Table1Row row;
    row.degree = n;
    row.polynomial_count = polys.size();
    row.per_polynomial.resize(polys.size());
    parallel_for(polys.size(), options.jobs, [&](std::size_t i) {
      const PeriodicSequence s = generate_m_sequence(LfsrSpec::canonical(polys[i]));
      const CorrelationSpectrum sp = spectrum(s, {options.validation, 1, to_hex(polys[i])});
      row.per_polynomial[i] = {polys[i], value_set(sp), check_correlation_bound(sp, n)};
    });
    for (const auto& pv : row.per_polynomial) row.values.insert(pv.values.begin(), pv.values.end());
    for (const auto& pv : row.per_polynomial) {
      if (pv.values != row.values) row.every_polynomial_attains_union = false;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

InequalityCheck arith_vs_classical_check(const PeriodicSequence& s, std::int64_t tau,
                                         Validation validation) {
  InequalityCheck check;
  check.period = static_cast<std::int64_t>(s.period());
  check.arithmetic = arithmetic_autocorrelation(s, tau, validation).correlation;
  check.classical = classical_autocorrelation(s, tau);
  check.holds = 2 * std::abs(check.arithmetic) <= check.period + check.classical;
  return check;
}

PhaseCheck phase_invariance_check(const LfsrSpec& spec, unsigned jobs, Validation validation) {
  if (spec.degree() > kMaxPhaseSweepDegree) {
    throw std::out_of_range("phase sweep is limited to degree <= " +
                            std::to_string(kMaxPhaseSweepDegree));
  }
  const PeriodicSequence base = generate_m_sequence(spec);
  const std::size_t t = base.period();

  auto sorted_values = [&](const PeriodicSequence& s) {
    std::vector<std::int64_t> values;
    values.reserve(t - 1);
    for (std::size_t tau = 1; tau < t; ++tau) {
      values.push_back(arithmetic_autocorrelation(s, static_cast<std::int64_t>(tau), validation).correlation);
    }
    std::sort(values.begin(), values.end());
    return values;
  };

  const std::vector<std::int64_t> reference = sorted_values(base);
  std::vector<char> matches(t, 1);
  parallel_for(t - 1, jobs, [&](std::size_t i) {
    const std::size_t phase = i + 1;
    const PeriodicSequence shifted(rotate(base.first_period(), phase));
    matches[phase] = sorted_values(shifted) == reference ? 1 : 0;
  });

  PhaseCheck check;
  for (std::size_t phase = 0; phase < t; ++phase) {
    if (!matches[phase]) {
      check.holds = false;
      check.first_differing_phase = phase;
      break;
    }
  }
  return check;
}

}  // namespace arithcorr
