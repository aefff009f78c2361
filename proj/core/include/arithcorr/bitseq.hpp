#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arithcorr {

/// Fixed-length vector over {0,1}.
///
/// Bit i carries weight 2^i, so the vector read as an integer is
/// sum(bit_i * 2^i). The text form prints index 0 leftmost, e.g. the
/// period-15 word "000111101011001" has bits 3,4,5,6,8,10,11,14 set.
/// Storage is packed into 64-bit words; bits past size() are always zero.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length);

  /// Parses a string of '0'/'1'. Throws std::invalid_argument on any other
  /// character or on an empty string.
  static BitVector from_string(std::string_view text);
  static BitVector from_words(std::span<const Word> words, std::size_t length);

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  bool operator[](std::size_t i) const noexcept { return test(i); }
  void set(std::size_t i, bool value = true) noexcept;

  std::span<const Word> words() const noexcept { return words_; }
  bool is_zero() const noexcept;
  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::vector<Word> words_;
  std::size_t length_ = 0;
};

std::size_t weight(const BitVector& v) noexcept;

/// Entrywise addition mod 2. Throws std::invalid_argument on length mismatch.
BitVector xor_vectors(const BitVector& a, const BitVector& b);

/// Entrywise complement within the vector's length.
BitVector complement(const BitVector& v);

/// One period of a periodic binary sequence.
///
/// The period is at least 2 and the period word is never all-zero.
class PeriodicSequence {
 public:
  /// Throws MathError for an all-zero word and std::invalid_argument for a
  /// period below 2.
  explicit PeriodicSequence(BitVector first_period);
  static PeriodicSequence from_string(std::string_view text);

  std::size_t period() const noexcept { return first_period_.size(); }
  const BitVector& first_period() const noexcept { return first_period_; }
  bool at(std::size_t i) const noexcept { return first_period_.test(i % period()); }
  std::string to_string() const { return first_period_.to_string(); }

  friend bool operator==(const PeriodicSequence&, const PeriodicSequence&) = default;

 private:
  BitVector first_period_;
};

/// Canonical representative of tau modulo period, for any signed tau.
std::size_t reduce_shift(std::int64_t tau, std::size_t period) noexcept;

/// Cyclic rotation: result_i = v_{(i + tau) mod n}. tau must be < v.size().
BitVector rotate(const BitVector& v, std::size_t tau);

/// First period of the tau-shift (s_tau, ..., s_{tau+T-1}); tau is reduced
/// modulo T first.
BitVector cyclic_shift(const PeriodicSequence& s, std::int64_t tau);

/// sum_{0<=i<T} (-1)^(s_i xor s_{i+tau}).
std::int64_t classical_autocorrelation(const PeriodicSequence& s, std::int64_t tau);

struct RunCount {
  int bit = 0;
  std::size_t length = 0;
  std::size_t count = 0;

  friend auto operator<=>(const RunCount&, const RunCount&) = default;
};

/// Maximal runs of the cyclic period, grouped by (bit, length) and sorted
/// ascending. A constant period is one run of length T.
std::vector<RunCount> run_lengths(const PeriodicSequence& s);

/// Golomb's run postulate for a period of length 2^n - 1: for 1 <= k <= n-2
/// there are 2^(n-k-2) runs of each bit value of length k, one 0-run of
/// length n-1 and one 1-run of length n. Deviations are listed, not thrown.
struct RunPostulateReport {
  bool holds = true;
  std::vector<std::string> deviations;
};
RunPostulateReport check_run_postulate(const PeriodicSequence& s);

/// n such that period == 2^n - 1, if any.
std::optional<unsigned> m_sequence_degree(std::size_t period) noexcept;

}  // namespace arithcorr
