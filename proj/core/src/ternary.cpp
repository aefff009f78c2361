#include "arithcorr/ternary.hpp"

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>

#include "arithcorr/errors.hpp"

namespace arithcorr {

namespace {

mpz_class to_mpz(const BitVector& v) {
  mpz_class z;
  const auto words = v.words();
  if (!words.empty()) {
    mpz_import(z.get_mpz_t(), words.size(), -1, sizeof(BitVector::Word), 0, 0, words.data());
  }
  return z;
}

BigBinary from_mpz(const mpz_class& z, std::size_t width) {
  BigBinary out;
  out.sign = z < 0 ? Sign::negative : (z == 0 ? Sign::zero : Sign::positive);
  const mpz_class mag = abs(z);
  if (mpz_sizeinbase(mag.get_mpz_t(), 2) > width && mag != 0) {
    throw std::logic_error("integer does not fit the requested width");
  }
  std::vector<BitVector::Word> words((width + BitVector::kWordBits - 1) / BitVector::kWordBits, 0);
  std::size_t written = 0;
  if (mag != 0) {
    mpz_export(words.data(), &written, -1, sizeof(BitVector::Word), 0, 0, mag.get_mpz_t());
  }
  out.magnitude = BitVector::from_words(words, width);
  return out;
}

// Sign of sum g_i 2^i is the sign of the highest nonzero entry.
Sign value_sign(const TernaryVector& g) {
  for (std::size_t i = g.size(); i-- > 0;) {
    if (g[i] == Trit::plus) return Sign::positive;
    if (g[i] == Trit::minus) return Sign::negative;
  }
  return Sign::zero;
}

std::int64_t adjustment(const std::vector<TransferBlock>& blocks) {
  return std::accumulate(blocks.begin(), blocks.end(), std::int64_t{0},
                         [](std::int64_t acc, const TransferBlock& b) {
                           return acc + static_cast<std::int64_t>(b.zeros) - 1;
                         });
}

}  // namespace

TernaryVector TernaryVector::from_string(std::string_view text) {
  std::vector<Trit> entries;
  entries.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '1':
        entries.push_back(Trit::plus);
        break;
      case '0':
        entries.push_back(Trit::zero);
        break;
      case 'N':
        entries.push_back(Trit::minus);
        break;
      default:
        throw std::invalid_argument("ternary text may only contain '1', '0', 'N'");
    }
  }
  return TernaryVector(std::move(entries));
}

std::string TernaryVector::to_string() const {
  std::string out;
  out.reserve(entries_.size());
  for (Trit t : entries_) out.push_back(t == Trit::plus ? '1' : (t == Trit::minus ? 'N' : '0'));
  return out;
}

std::string_view to_string(Sign s) noexcept {
  switch (s) {
    case Sign::negative:
      return "negative";
    case Sign::zero:
      return "zero";
    case Sign::positive:
      return "positive";
  }
  return "zero";
}

TernaryVector binary_subtract(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("binary_subtract: length mismatch (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  }
  std::vector<Trit> out(a.size(), Trit::zero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = static_cast<Trit>(static_cast<int>(a.test(i)) - static_cast<int>(b.test(i)));
  }
  return TernaryVector(std::move(out));
}

TritCounts count_entries(const TernaryVector& g) noexcept {
  TritCounts c;
  for (Trit t : g.entries()) {
    switch (t) {
      case Trit::minus:
        ++c.minus;
        break;
      case Trit::zero:
        ++c.zero;
        break;
      case Trit::plus:
        ++c.plus;
        break;
    }
  }
  return c;
}

std::size_t weight(const TernaryVector& g) noexcept {
  const TritCounts c = count_entries(g);
  return c.minus + c.plus;
}

TernaryVector negate(const TernaryVector& g) {
  std::vector<Trit> out(g.entries());
  for (Trit& t : out) t = static_cast<Trit>(-static_cast<int>(t));
  return TernaryVector(std::move(out));
}

BigBinary ternary_value(const TernaryVector& g) {
  BitVector plus(g.size());
  BitVector minus(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == Trit::plus) plus.set(i);
    if (g[i] == Trit::minus) minus.set(i);
  }
  return from_mpz(to_mpz(plus) - to_mpz(minus), g.size());
}

std::int64_t BlockTransfer::weight_adjustment() const noexcept { return adjustment(blocks); }

std::int64_t Normalization::weight_adjustment() const noexcept { return adjustment(blocks); }

BlockTransfer replay_block_transfer(const TernaryVector& g) {
  if (value_sign(g) == Sign::negative) {
    throw std::invalid_argument("replay_block_transfer: value must be nonnegative");
  }
  std::vector<Trit> work(g.entries());
  BlockTransfer out;

  // Every entry above the current -1 is 0 or +1 and, since the value is
  // nonnegative, some +1 lies above it. Rewrites only touch positions at or
  // above the -1, so one downward sweep visits the blocks in order.
  for (std::size_t p = work.size(); p-- > 0;) {
    if (work[p] != Trit::minus) continue;
    std::size_t top = p + 1;
    while (work[top] == Trit::zero) ++top;
    for (std::size_t i = p; i < top; ++i) work[i] = Trit::plus;
    work[top] = Trit::zero;
    out.blocks.push_back({p, top - p - 1});
  }

  out.delta = BitVector(work.size());
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (work[i] == Trit::plus) out.delta.set(i);
  }
  return out;
}

Normalization normalize_to_binary(const TernaryVector& g) {
  const Sign sign = value_sign(g);
  const TernaryVector operand = sign == Sign::negative ? negate(g) : g;

  BitVector bits(operand.size());
  int borrow = 0;
  for (std::size_t i = 0; i < operand.size(); ++i) {
    const int digit = static_cast<int>(operand[i]) - borrow;
    // digit in {-2, -1, 0, 1}
    borrow = digit < 0 ? 1 : 0;
    if ((digit & 1) != 0) bits.set(i);
  }
  if (borrow != 0) throw std::logic_error("normalize_to_binary: borrow left over");

  BlockTransfer replay = replay_block_transfer(operand);
  if (replay.delta != bits) {
    throw OracleMismatch("block replay and borrow pass disagree on " + g.to_string());
  }
  return Normalization{BigBinary{sign, std::move(bits)}, std::move(replay.blocks)};
}

BigBinary bignum_expand_oracle(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("bignum_expand_oracle: length mismatch (" +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  }
  return from_mpz(to_mpz(a) - to_mpz(b), a.size());
}

std::string to_decimal(const BitVector& v) { return to_mpz(v).get_str(10); }

std::string to_decimal(const BigBinary& v) {
  mpz_class z = to_mpz(v.magnitude);
  if (v.sign == Sign::negative) z = -z;
  return z.get_str(10);
}

TwoAdicTail two_adic_difference_oracle(const PeriodicSequence& s, std::int64_t tau,
                                       std::size_t horizon) {
  const std::size_t t = s.period();
  const std::size_t shift = reduce_shift(tau, t);
  if (shift == 0) throw std::invalid_argument("two_adic_difference_oracle: tau must be nonzero mod T");
  if (horizon == 0) horizon = kDefaultHorizonPeriods * t;
  if (horizon < 3 * t) throw std::invalid_argument("two_adic_difference_oracle: horizon must be >= 3T");

  std::vector<std::uint8_t> digit(horizon);
  std::vector<std::uint8_t> borrow_in(horizon);
  const BitVector& bits = s.first_period();
  int borrow = 0;
  std::size_t pa = 0;
  std::size_t pb = shift;
  for (std::size_t i = 0; i < horizon; ++i) {
    borrow_in[i] = static_cast<std::uint8_t>(borrow);
    const int d = static_cast<int>(bits.test(pa)) - static_cast<int>(bits.test(pb)) - borrow;
    digit[i] = static_cast<std::uint8_t>(d & 1);
    borrow = d < 0 ? 1 : 0;
    if (++pa == t) pa = 0;
    if (++pb == t) pb = 0;
  }

  // The subtraction is a finite automaton on (i mod T, borrow): once the
  // borrow entering digit k equals the one entering k + T, digits repeat
  // with period T from k on.
  std::size_t k = 0;
  while (k + t < horizon && borrow_in[k] != borrow_in[k + t]) ++k;
  if (k + t >= horizon) {
    throw std::runtime_error("two_adic_difference_oracle: no periodic tail within horizon " +
                             std::to_string(horizon));
  }
  std::size_t j = k;
  while (j > 0 && digit[j - 1] == digit[j - 1 + t]) --j;

  TwoAdicTail tail;
  tail.preperiod = j;
  tail.period_bits = BitVector(t);
  for (std::size_t i = 0; i < t; ++i) {
    if (digit[j + i]) tail.period_bits.set(i);
  }
  return tail;
}

}  // namespace arithcorr
