#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "arithcorr/bitseq.hpp"

namespace arithcorr {

enum class Trit : std::int8_t { minus = -1, zero = 0, plus = 1 };

/// Vector over {-1, 0, +1}; entry i carries weight 2^i. Text form uses
/// '1', '0' and 'N' (for -1), index 0 leftmost: "1N00N0N1N0100".
class TernaryVector {
 public:
  TernaryVector() = default;
  explicit TernaryVector(std::vector<Trit> entries) : entries_(std::move(entries)) {}
  /// Throws std::invalid_argument on characters other than '1', '0', 'N'.
  static TernaryVector from_string(std::string_view text);

  std::size_t size() const noexcept { return entries_.size(); }
  Trit operator[](std::size_t i) const noexcept { return entries_[i]; }
  const std::vector<Trit>& entries() const noexcept { return entries_; }
  std::string to_string() const;

  friend bool operator==(const TernaryVector&, const TernaryVector&) = default;

 private:
  std::vector<Trit> entries_;
};

enum class Sign { negative, zero, positive };

std::string_view to_string(Sign s) noexcept;

/// Sign-magnitude integer. The magnitude is fixed-width (leading zeros kept);
/// correlation code always uses exactly T bits.
struct BigBinary {
  Sign sign = Sign::zero;
  BitVector magnitude;

  friend bool operator==(const BigBinary&, const BigBinary&) = default;
};

struct TritCounts {
  std::size_t minus = 0;
  std::size_t zero = 0;
  std::size_t plus = 0;

  friend bool operator==(const TritCounts&, const TritCounts&) = default;
};

/// Entrywise a_i - b_i without borrow. Throws std::invalid_argument on a
/// length mismatch.
TernaryVector binary_subtract(const BitVector& a, const BitVector& b);

TritCounts count_entries(const TernaryVector& g) noexcept;

/// Number of nonzero entries.
std::size_t weight(const TernaryVector& g) noexcept;

TernaryVector negate(const TernaryVector& g);

/// sum g_i 2^i evaluated with arbitrary-precision integers; the magnitude
/// has g.size() bits.
BigBinary ternary_value(const TernaryVector& g);

/// One rewrite step: the block (-1, 0 x zeros, +1) starting at `position` is
/// replaced by (1 x (zeros + 1), 0).
struct TransferBlock {
  std::size_t position = 0;
  std::size_t zeros = 0;

  friend bool operator==(const TransferBlock&, const TransferBlock&) = default;
};

struct BlockTransfer {
  BitVector delta;
  std::vector<TransferBlock> blocks;  // in rewrite order

  /// sum over blocks of (zeros - 1); equals wt(delta) - wt(gamma).
  std::int64_t weight_adjustment() const noexcept;
};

/// Rewrites a ternary vector of nonnegative value into its binary expansion
/// by repeatedly replacing the highest -1 together with the zeros and +1
/// above it. Each step removes one -1. Throws std::invalid_argument if the
/// value is negative.
BlockTransfer replay_block_transfer(const TernaryVector& g);

struct Normalization {
  BigBinary value;
  /// Block ledger of the nonnegative operand (g, or -g when g < 0).
  std::vector<TransferBlock> blocks;

  std::int64_t weight_adjustment() const noexcept;
};

/// sign(g) and the g.size()-bit binary expansion of |value(g)|, computed by a
/// single low-to-high borrow pass over g (or -g when negative). The block
/// ledger comes from replay_block_transfer; the two expansions must agree or
/// OracleMismatch is thrown.
Normalization normalize_to_binary(const TernaryVector& g);

/// sign(A - B) and |A - B| for A = sum a_i 2^i, B = sum b_i 2^i, using
/// arbitrary-precision integers and no ternary machinery.
BigBinary bignum_expand_oracle(const BitVector& a, const BitVector& b);

/// Decimal text of sum v_i 2^i.
std::string to_decimal(const BitVector& v);
/// Decimal text with a leading '-' for negative values.
std::string to_decimal(const BigBinary& v);

/// Eventually periodic part of the 2-adic difference s - s^(tau).
struct TwoAdicTail {
  std::size_t preperiod = 0;  // least j with u_i = u_{i+T} for all i >= j
  BitVector period_bits;      // u_j, ..., u_{j+T-1}
};

/// Default number of digits simulated: 4T.
inline constexpr std::size_t kDefaultHorizonPeriods = 4;

/// Subtracts the 2-adic expansions of s and its tau-shift digit by digit with
/// borrow. tau is reduced modulo T and must be nonzero; horizon 0 selects 4T
/// and any other horizon must be at least 3T (std::invalid_argument).
/// Throws std::runtime_error if no repeat of the borrow state is seen within
/// the horizon.
TwoAdicTail two_adic_difference_oracle(const PeriodicSequence& s, std::int64_t tau,
                                       std::size_t horizon = 0);

}  // namespace arithcorr
