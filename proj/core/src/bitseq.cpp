#include "arithcorr/bitseq.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

#include "arithcorr/errors.hpp"

namespace arithcorr {

namespace {

using Word = BitVector::Word;
constexpr std::size_t kWordBits = BitVector::kWordBits;

std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

// count bits from pos; pos + count must not run past the last stored word.
Word read_bits(std::span<const Word> w, std::size_t pos, std::size_t count) {
  const std::size_t idx = pos / kWordBits;
  const std::size_t off = pos % kWordBits;
  Word v = w[idx] >> off;
  if (off != 0 && idx + 1 < w.size()) v |= w[idx + 1] << (kWordBits - off);
  return count == kWordBits ? v : v & ((Word{1} << count) - 1);
}

}  // namespace

BitVector::BitVector(std::size_t length) : words_(word_count(length), 0), length_(length) {}

BitVector BitVector::from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("bit string is empty");
  BitVector v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '0':
        break;
      case '1':
        v.set(i);
        break;
      default:
        throw std::invalid_argument("bit string may only contain '0' and '1': '" +
                                    std::string(text) + "'");
    }
  }
  return v;
}

BitVector BitVector::from_words(std::span<const Word> words, std::size_t length) {
  BitVector v(length);
  const std::size_t n = std::min(words.size(), v.words_.size());
  std::copy_n(words.begin(), n, v.words_.begin());
  if (const std::size_t tail = length % kWordBits; tail != 0 && !v.words_.empty()) {
    v.words_.back() &= (Word{1} << tail) - 1;
  }
  return v;
}

void BitVector::set(std::size_t i, bool value) noexcept {
  const Word mask = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

bool BitVector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::string BitVector::to_string() const {
  std::string out(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

std::size_t weight(const BitVector& v) noexcept {
  std::size_t total = 0;
  for (Word w : v.words()) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

BitVector xor_vectors(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("xor_vectors: length mismatch (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  }
  std::vector<Word> out(a.words().begin(), a.words().end());
  const auto bw = b.words();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] ^= bw[i];
  return BitVector::from_words(out, a.size());
}

BitVector complement(const BitVector& v) {
  std::vector<Word> out(v.words().begin(), v.words().end());
  for (Word& w : out) w = ~w;
  return BitVector::from_words(out, v.size());
}

PeriodicSequence::PeriodicSequence(BitVector first_period) : first_period_(std::move(first_period)) {
  if (first_period_.size() < 2) {
    throw std::invalid_argument("period must be at least 2");
  }
  if (first_period_.is_zero()) {
    throw MathError("the all-zero sequence is not accepted");
  }
}

PeriodicSequence PeriodicSequence::from_string(std::string_view text) {
  return PeriodicSequence(BitVector::from_string(text));
}

std::size_t reduce_shift(std::int64_t tau, std::size_t period) noexcept {
  const auto t = static_cast<std::int64_t>(period);
  const std::int64_t r = tau % t;
  return static_cast<std::size_t>(r < 0 ? r + t : r);
}

BitVector rotate(const BitVector& v, std::size_t tau) {
  const std::size_t n = v.size();
  if (tau == 0 || n == 0) return v;

  BitVector out(n);
  if (n < kWordBits) {
    for (std::size_t i = 0; i < n; ++i) out.set(i, v.test((i + tau) % n));
    return out;
  }

  const auto src = v.words();
  std::vector<Word> words(word_count(n));
  for (std::size_t j = 0; j < words.size(); ++j) {
    const std::size_t pos = (tau + j * kWordBits) % n;
    const std::size_t first = std::min(kWordBits, n - pos);
    Word w = read_bits(src, pos, first);
    if (first < kWordBits) w |= read_bits(src, 0, kWordBits - first) << first;
    words[j] = w;
  }
  return BitVector::from_words(words, n);
}

BitVector cyclic_shift(const PeriodicSequence& s, std::int64_t tau) {
  return rotate(s.first_period(), reduce_shift(tau, s.period()));
}

std::int64_t classical_autocorrelation(const PeriodicSequence& s, std::int64_t tau) {
  const auto diff = xor_vectors(s.first_period(), cyclic_shift(s, tau));
  return static_cast<std::int64_t>(s.period()) - 2 * static_cast<std::int64_t>(weight(diff));
}

std::vector<RunCount> run_lengths(const PeriodicSequence& s) {
  const std::size_t n = s.period();
  const BitVector& v = s.first_period();

  // Start at a boundary so no run wraps around the scan.
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (v.test(i) != v.test((i + n - 1) % n)) {
      start = i;
      break;
    }
  }
  if (start == n) return {RunCount{v.test(0) ? 1 : 0, n, 1}};

  std::map<std::pair<int, std::size_t>, std::size_t> counts;
  std::size_t i = 0;
  while (i < n) {
    const bool bit = v.test((start + i) % n);
    std::size_t len = 0;
    while (i < n && v.test((start + i) % n) == bit) {
      ++len;
      ++i;
    }
    ++counts[{bit ? 1 : 0, len}];
  }

  std::vector<RunCount> out;
  out.reserve(counts.size());
  for (const auto& [key, count] : counts) out.push_back({key.first, key.second, count});
  return out;
}

std::optional<unsigned> m_sequence_degree(std::size_t period) noexcept {
  const std::size_t next = period + 1;
  if (period < 1 || !std::has_single_bit(next)) return std::nullopt;
  return static_cast<unsigned>(std::countr_zero(next));
}

RunPostulateReport check_run_postulate(const PeriodicSequence& s) {
  RunPostulateReport report;
  const auto degree = m_sequence_degree(s.period());
  if (!degree || *degree < 2) {
    report.holds = false;
    report.deviations.push_back("period " + std::to_string(s.period()) + " is not 2^n - 1 with n >= 2");
    return report;
  }
  const unsigned n = *degree;

  std::map<std::pair<int, std::size_t>, std::size_t> expected;
  for (unsigned k = 1; k + 2 <= n; ++k) {
    expected[{0, k}] = std::size_t{1} << (n - k - 2);
    expected[{1, k}] = std::size_t{1} << (n - k - 2);
  }
  expected[{0, n - 1}] += 1;
  expected[{1, n}] += 1;

  std::map<std::pair<int, std::size_t>, std::size_t> observed;
  for (const auto& r : run_lengths(s)) observed[{r.bit, r.length}] = r.count;

  auto describe = [](int bit, std::size_t len, std::size_t want, std::size_t got) {
    std::ostringstream os;
    os << bit << "-runs of length " << len << ": expected " << want << ", found " << got;
    return os.str();
  };
  for (const auto& [key, want] : expected) {
    const auto it = observed.find(key);
    const std::size_t got = it == observed.end() ? 0 : it->second;
    if (got != want) report.deviations.push_back(describe(key.first, key.second, want, got));
  }
  for (const auto& [key, got] : observed) {
    if (!expected.contains(key)) report.deviations.push_back(describe(key.first, key.second, 0, got));
  }
  report.holds = report.deviations.empty();
  return report;
}

}  // namespace arithcorr
