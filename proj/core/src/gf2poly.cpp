#include "arithcorr/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "arithcorr/parallel.hpp"

namespace arithcorr {

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// X^(2^k) mod m by k squarings of X.
Gf2Poly x_pow_two_pow(unsigned k, Gf2Poly m) {
  Gf2Poly t = poly_mod(Gf2Poly::x(), m);
  for (unsigned i = 0; i < k; ++i) t = polymod_mul(t, t, m);
  return t;
}

void require_modulus(Gf2Poly m) {
  if (m.degree() < 1) throw std::invalid_argument("modulus must have degree >= 1");
}

// Order test against a precomputed factorization of 2^n - 1.
bool primitive_given(Gf2Poly p, const Factorization& group_order) {
  if (!p.coefficient(0) || !is_irreducible(p)) return false;
  const std::uint64_t t = group_order.value;
  for (const auto& f : group_order.factors) {
    if (polymod_pow(Gf2Poly::x(), t / f.prime, p) == Gf2Poly::one()) return false;
  }
  return true;
}

std::uint64_t mersenne(unsigned n) { return (std::uint64_t{1} << n) - 1; }

std::string lowercase_without_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

}  // namespace

int Gf2Poly::degree() const noexcept { return static_cast<int>(std::bit_width(coeffs_)) - 1; }

Gf2Poly parse_poly(std::string_view text) {
  const std::string s = lowercase_without_spaces(text);
  if (s.empty()) throw std::invalid_argument("empty polynomial");

  if (s.starts_with("0x")) {
    std::uint64_t value = 0;
    const char* first = s.data() + 2;
    const char* last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(first, last, value, 16);
    if (first == last || ec != std::errc{} || ptr != last) {
      throw std::invalid_argument("malformed hex polynomial '" + std::string(text) + "'");
    }
    return Gf2Poly(value);
  }

  std::uint64_t coeffs = 0;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t plus = std::min(s.find('+', pos), s.size());
    const std::string_view term = std::string_view(s).substr(pos, plus - pos);
    unsigned exponent = 0;
    if (term == "1") {
      exponent = 0;
    } else if (term == "x") {
      exponent = 1;
    } else if (term.starts_with("x^") && term.size() > 2) {
      const auto [ptr, ec] = std::from_chars(term.data() + 2, term.data() + term.size(), exponent);
      if (ec != std::errc{} || ptr != term.data() + term.size()) {
        throw std::invalid_argument("malformed term '" + std::string(term) + "'");
      }
    } else {
      throw std::invalid_argument("malformed term '" + std::string(term) + "' in '" +
                                  std::string(text) + "'");
    }
    if (exponent > 63) throw std::invalid_argument("degree above 63 is not supported");
    const std::uint64_t bit = std::uint64_t{1} << exponent;
    if (coeffs & bit) throw std::invalid_argument("repeated term '" + std::string(term) + "'");
    coeffs |= bit;
    pos = plus + 1;
  }
  return Gf2Poly(coeffs);
}

std::string to_hex(Gf2Poly p) {
  char buf[24];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p.coeffs(), 16);
  (void)ec;
  return "0x" + std::string(buf, ptr);
}

std::string to_monomial(Gf2Poly p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    if (!p.coefficient(static_cast<unsigned>(i))) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else if (i == 1) {
      out += 'x';
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

Gf2Poly poly_mod(Gf2Poly a, Gf2Poly m) {
  if (m.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const int dm = m.degree();
  std::uint64_t r = a.coeffs();
  for (int d = Gf2Poly(r).degree(); d >= dm; d = Gf2Poly(r).degree()) {
    r ^= m.coeffs() << (d - dm);
  }
  return Gf2Poly(r);
}

Gf2Poly poly_gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    const Gf2Poly r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

Gf2Poly polymod_mul(Gf2Poly a, Gf2Poly b, Gf2Poly m) {
  require_modulus(m);
  const unsigned dm = static_cast<unsigned>(m.degree());
  const std::uint64_t top = std::uint64_t{1} << dm;
  std::uint64_t acc = 0;
  std::uint64_t shifted = poly_mod(a, m).coeffs();
  for (std::uint64_t rest = poly_mod(b, m).coeffs(); rest != 0; rest >>= 1) {
    if (rest & 1U) acc ^= shifted;
    // shifted has degree < dm <= 63, so the shift cannot overflow.
    shifted <<= 1;
    if (shifted & top) shifted ^= m.coeffs();
  }
  return Gf2Poly(acc);
}

Gf2Poly polymod_pow(Gf2Poly base, std::uint64_t exponent, Gf2Poly m) {
  require_modulus(m);
  Gf2Poly result = poly_mod(Gf2Poly::one(), m);
  Gf2Poly b = poly_mod(base, m);
  for (; exponent != 0; exponent >>= 1) {
    if (exponent & 1U) result = polymod_mul(result, b, m);
    b = polymod_mul(b, b, m);
  }
  return result;
}

bool is_irreducible(Gf2Poly p) {
  require_modulus(p);
  const unsigned n = static_cast<unsigned>(p.degree());
  const Gf2Poly x = poly_mod(Gf2Poly::x(), p);
  if (x_pow_two_pow(n, p) != x) return false;
  for (unsigned q : prime_divisors(n)) {
    const Gf2Poly t = x_pow_two_pow(n / q, p) + x;
    if (poly_gcd(t, p).degree() != 0) return false;
  }
  return true;
}

Factorization factor_by_trial_division(std::uint64_t v) {
  if (v < 2 || v >= (std::uint64_t{1} << 63)) {
    throw std::out_of_range("trial division requires 2 <= v < 2^63, got " + std::to_string(v));
  }
  Factorization f{v, {}};
  std::uint64_t rest = v;
  auto take = [&](std::uint64_t d) {
    unsigned e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    if (e != 0) f.factors.push_back({d, e});
  };
  take(2);
  for (std::uint64_t d = 3; d <= rest / d; d += 2) take(d);
  if (rest > 1) f.factors.push_back({rest, 1});
  return f;
}

std::uint64_t euler_phi(const Factorization& f) {
  std::uint64_t phi = f.value;
  for (const auto& pf : f.factors) phi = phi / pf.prime * (pf.prime - 1);
  return phi;
}

bool is_primitive(Gf2Poly p) {
  const int n = p.degree();
  if (n < 2) throw std::invalid_argument("primitivity is defined here for degree >= 2");
  return primitive_given(p, factor_by_trial_division(mersenne(static_cast<unsigned>(n))));
}

std::uint64_t order_of_x(Gf2Poly p) {
  require_modulus(p);
  if (!p.coefficient(0) || !is_irreducible(p)) {
    throw std::invalid_argument("order_of_x needs an irreducible polynomial with p(0) = 1");
  }
  const unsigned n = static_cast<unsigned>(p.degree());
  if (n == 1) return 1;
  const Factorization f = factor_by_trial_division(mersenne(n));
  std::uint64_t order = f.value;
  for (const auto& pf : f.factors) {
    while (order % pf.prime == 0 &&
           polymod_pow(Gf2Poly::x(), order / pf.prime, p) == Gf2Poly::one()) {
      order /= pf.prime;
    }
  }
  return order;
}

std::vector<Gf2Poly> enumerate_primitive(unsigned n, unsigned jobs) {
  if (n < kMinEnumerateDegree || n > kMaxEnumerateDegree) {
    throw std::out_of_range("enumerate_primitive: degree must be in [2, 20], got " +
                            std::to_string(n));
  }
  const Factorization group_order = factor_by_trial_division(mersenne(n));
  const std::uint64_t leading = std::uint64_t{1} << n;
  // Candidates are X^n + (odd lower part): 2^(n-1) of them.
  const std::size_t candidates = std::size_t{1} << (n - 1);

  const unsigned workers = resolve_jobs(jobs);
  const std::size_t blocks = std::min<std::size_t>(candidates, std::size_t{workers} * 8);
  const std::size_t per_block = (candidates + blocks - 1) / blocks;
  std::vector<std::vector<Gf2Poly>> found(blocks);

  parallel_for(blocks, workers, [&](std::size_t b) {
    const std::size_t end = std::min(candidates, (b + 1) * per_block);
    for (std::size_t i = b * per_block; i < end; ++i) {
      const Gf2Poly p(leading | (2 * i + 1));
      if (primitive_given(p, group_order)) found[b].push_back(p);
    }
  });

  std::vector<Gf2Poly> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace arithcorr
