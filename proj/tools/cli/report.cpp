#include "report.hpp"

#include <cstdlib>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace arithcorr::cli {

namespace {

using Json = nlohmann::ordered_json;

std::optional<unsigned> degree_of(const SequenceSource& src) {
  if (src.poly) return static_cast<unsigned>(src.poly->degree());
  return m_sequence_degree(src.sequence.period());
}

std::string csv_degree(const SequenceSource& src) {
  const auto n = degree_of(src);
  return n ? std::to_string(*n) : std::string{};
}

std::string csv_poly(const SequenceSource& src) { return src.poly ? to_hex(*src.poly) : std::string{}; }

Json record_json(const ShiftRecord& r) {
  return Json{{"tau", r.tau},
              {"sign", std::string(to_string(r.sign))},
              {"n_ones", r.n_ones},
              {"correlation", r.correlation}};
}

Json values_json(const std::set<std::int64_t>& values) {
  Json arr = Json::array();
  for (auto v : values) arr.push_back(v);
  return arr;
}

Json counts_json(const std::map<std::int64_t, std::size_t>& counts) {
  Json obj = Json::object();
  for (const auto& [value, count] : counts) obj[std::to_string(value)] = count;
  return obj;
}

// One degree holding one polynomial/sequence entry.
Json nest(const SequenceSource& src, Json entry) {
  Json degree = Json::object();
  const auto n = degree_of(src);
  degree["degree"] = n ? Json(*n) : Json(nullptr);
  degree["polynomials"] = Json::array({std::move(entry)});
  return Json{{"degrees", Json::array({std::move(degree)})}};
}

Json source_json(const SequenceSource& src) {
  Json j = Json::object();
  j["poly_hex"] = src.poly ? Json(to_hex(*src.poly)) : Json(nullptr);
  j["poly"] = src.poly ? Json(to_monomial(*src.poly)) : Json(nullptr);
  j["sequence_id"] = src.sequence_id;
  j["period"] = src.sequence.period();
  j["sequence"] = src.sequence.to_string();
  return j;
}

std::string ones_positions(const BitVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v.test(i)) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out.empty() ? "none" : out;
}

void emit(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string format_value_set(const std::set<std::int64_t>& values) {
  std::set<std::int64_t> magnitudes;
  for (auto v : values) magnitudes.insert(std::abs(v));
  std::string out = "{";
  bool first = true;
  for (auto m : magnitudes) {
    if (!first) out += ", ";
    first = false;
    const bool pos = values.contains(m);
    const bool neg = values.contains(-m);
    if (m == 0) {
      out += "0";
    } else if (pos && neg) {
      out += "±" + std::to_string(m);
    } else {
      out += pos ? std::to_string(m) : "-" + std::to_string(m);
    }
  }
  return out + "}";
}

void write_primitive_list(std::ostream& os, Format format, unsigned degree,
                          const std::vector<Gf2Poly>& polys) {
  switch (format) {
    case Format::text:
      os << "# degree " << degree << ": " << polys.size() << " primitive polynomials\n";
      for (auto p : polys) os << to_hex(p) << ' ' << to_monomial(p) << '\n';
      break;
    case Format::csv:
      os << "degree,poly_hex,poly\n";
      for (auto p : polys) os << degree << ',' << to_hex(p) << ',' << to_monomial(p) << '\n';
      break;
    case Format::json: {
      Json list = Json::array();
      for (auto p : polys) list.push_back({{"poly_hex", to_hex(p)}, {"poly", to_monomial(p)}});
      emit(os, Json{{"degree", degree}, {"count", polys.size()}, {"polynomials", std::move(list)}});
      break;
    }
  }
}

void write_sequence(std::ostream& os, Format format, const std::optional<Gf2Poly>& poly,
                    const PeriodicSequence& s) {
  switch (format) {
    case Format::text:
      os << s.to_string() << '\n';
      break;
    case Format::csv:
      os << "poly_hex,period,weight,sequence\n"
         << (poly ? to_hex(*poly) : "") << ',' << s.period() << ',' << weight(s.first_period()) << ','
         << s.to_string() << '\n';
      break;
    case Format::json:
      emit(os, Json{{"poly_hex", poly ? Json(to_hex(*poly)) : Json(nullptr)},
                    {"period", s.period()},
                    {"weight", weight(s.first_period())},
                    {"sequence", s.to_string()}});
      break;
  }
}

void write_single_shift(std::ostream& os, Format format, const SequenceSource& src,
                        const ShiftRecord& record, const std::optional<OracleTriangle>& oracles) {
  const BitVector& base = src.sequence.first_period();
  const BitVector shifted = rotate(base, record.tau);
  const BigBinary diff = bignum_expand_oracle(base, shifted);
  const std::size_t t = src.sequence.period();

  switch (format) {
    case Format::text: {
      const std::string shift_label = "S^(" + std::to_string(record.tau) + ")(2)";
      auto line = [&os](std::string_view key, const std::string& value) {
        os << std::left << std::setw(14) << key << value << '\n';
      };
      if (src.poly) line("poly", to_hex(*src.poly) + " " + to_monomial(*src.poly));
      line("sequence", base.to_string());
      line("period", std::to_string(t));
      line("tau", std::to_string(record.tau));
      line("shifted", shifted.to_string());
      line("S(2)", to_decimal(base));
      line(shift_label, to_decimal(shifted));
      line("difference", to_decimal(diff));
      line("expansion", diff.magnitude.to_string());
      line("ones at", ones_positions(diff.magnitude));
      line("sign", std::string(to_string(record.sign)));
      line("N_1", std::to_string(record.n_ones));
      line("N_0", std::to_string(t - record.n_ones));
      line("A^A", std::to_string(record.correlation));
      if (oracles) {
        std::ostringstream o;
        o << "block-transfer=" << oracles->block_transfer.correlation
          << " big-integer=" << oracles->bignum.correlation
          << " 2-adic=" << oracles->two_adic_correlation
          << (oracles->agree() ? " (agree)" : " (DISAGREE)");
        line("oracles", o.str());
      }
      break;
    }
    case Format::csv:
      os << "degree,poly_hex,tau,sign,n_ones,correlation\n"
         << csv_degree(src) << ',' << csv_poly(src) << ',' << record.tau << ','
         << to_string(record.sign) << ',' << record.n_ones << ',' << record.correlation << '\n';
      break;
    case Format::json: {
      Json entry = source_json(src);
      Json rec = record_json(record);
      rec["s_value"] = to_decimal(base);
      rec["shifted_value"] = to_decimal(shifted);
      rec["difference"] = to_decimal(diff);
      rec["expansion"] = diff.magnitude.to_string();
      entry["records"] = Json::array({std::move(rec)});
      if (oracles) {
        entry["oracles"] = {{"block_transfer", oracles->block_transfer.correlation},
                            {"big_integer", oracles->bignum.correlation},
                            {"two_adic", oracles->two_adic_correlation},
                            {"agree", oracles->agree()}};
      }
      emit(os, nest(src, std::move(entry)));
      break;
    }
  }
}

void write_spectrum(std::ostream& os, Format format, const SequenceSource& src,
                    const CorrelationSpectrum& sp) {
  const auto n = degree_of(src);
  const bool m_sequence_period = n && m_sequence_degree(sp.period) == n;
  switch (format) {
    case Format::text: {
      os << "# sequence " << src.sequence.to_string() << " (period " << sp.period << ")\n";
      if (src.poly) os << "# poly " << to_hex(*src.poly) << ' ' << to_monomial(*src.poly) << '\n';
      os << std::left << std::setw(8) << "tau" << std::setw(10) << "sign" << std::setw(8) << "N_1"
         << "A^A\n";
      for (const auto& r : sp.records) {
        os << std::left << std::setw(8) << r.tau << std::setw(10) << to_string(r.sign) << std::setw(8)
           << r.n_ones << r.correlation << '\n';
      }
      os << "# values " << format_value_set(value_set(sp)) << '\n';
      if (m_sequence_period) {
        const BoundCheck b = check_correlation_bound(sp, *n);
        os << "# max |A^A| = " << b.max_abs << ", bound 2^(n-1)-1 = " << b.bound
           << (b.holds ? " holds" : " VIOLATED") << (b.attained ? " (attained)" : "") << '\n';
      }
      break;
    }
    case Format::csv:
      os << "degree,poly_hex,tau,sign,n_ones,correlation\n";
      for (const auto& r : sp.records) {
        os << csv_degree(src) << ',' << csv_poly(src) << ',' << r.tau << ',' << to_string(r.sign) << ','
           << r.n_ones << ',' << r.correlation << '\n';
      }
      break;
    case Format::json: {
      Json entry = source_json(src);
      Json records = Json::array();
      for (const auto& r : sp.records) records.push_back(record_json(r));
      entry["records"] = std::move(records);
      Json summary = {{"values", values_json(value_set(sp))}, {"abs_counts", counts_json(abs_value_counts(sp))}};
      if (m_sequence_period) {
        const BoundCheck b = check_correlation_bound(sp, *n);
        summary["max_abs"] = b.max_abs;
        summary["bound"] = b.bound;
        summary["bound_holds"] = b.holds;
        summary["bound_attained"] = b.attained;
      }
      entry["summary"] = std::move(summary);
      emit(os, nest(src, std::move(entry)));
      break;
    }
  }
}

void write_table1(std::ostream& os, Format format, const std::vector<Table1Row>& rows) {
  switch (format) {
    case Format::text:
      os << std::left << std::setw(5) << "n" << std::setw(24) << "primitive polynomials"
         << std::setw(8) << "max" << std::setw(10) << "bound" << std::setw(12) << "uniform"
         << "A^A(tau) values\n";
      for (const auto& row : rows) {
        std::int64_t max_abs = 0;
        bool holds = true;
        for (const auto& pv : row.per_polynomial) {
          max_abs = std::max(max_abs, pv.bound.max_abs);
          holds = holds && pv.bound.holds;
        }
        os << std::left << std::setw(5) << row.degree << std::setw(24) << row.polynomial_count
           << std::setw(8) << max_abs << std::setw(10) << (holds ? "holds" : "VIOLATED") << std::setw(12)
           << (row.every_polynomial_attains_union ? "yes" : "no") << format_value_set(row.values) << '\n';
      }
      break;
    case Format::csv:
      os << "degree,poly_hex,values,max_abs,bound,bound_holds\n";
      for (const auto& row : rows) {
        for (const auto& pv : row.per_polynomial) {
          std::string vals;
          for (auto v : pv.values) vals += (vals.empty() ? "" : ";") + std::to_string(v);
          os << row.degree << ',' << to_hex(pv.poly) << ',' << vals << ',' << pv.bound.max_abs << ','
             << pv.bound.bound << ',' << (pv.bound.holds ? "true" : "false") << '\n';
        }
      }
      break;
    case Format::json: {
      Json degrees = Json::array();
      for (const auto& row : rows) {
        Json polys = Json::array();
        for (const auto& pv : row.per_polynomial) {
          polys.push_back({{"poly_hex", to_hex(pv.poly)},
                           {"poly", to_monomial(pv.poly)},
                           {"values", values_json(pv.values)},
                           {"max_abs", pv.bound.max_abs},
                           {"bound", pv.bound.bound},
                           {"bound_holds", pv.bound.holds},
                           {"bound_attained", pv.bound.attained}});
        }
        degrees.push_back({{"degree", row.degree},
                           {"polynomials", std::move(polys)},
                           {"summary",
                            {{"polynomial_count", row.polynomial_count},
                             {"values", values_json(row.values)},
                             {"every_polynomial_attains_union", row.every_polynomial_attains_union}}}});
      }
      emit(os, Json{{"degrees", std::move(degrees)}});
      break;
    }
  }
}

void write_conjecture(std::ostream& os, Format format, const ConjectureReport& report) {
  const unsigned n = report.degree;
  auto expected = [n](std::int64_t value) -> std::optional<std::size_t> {
    for (unsigned k = 1; k < n; ++k) {
      if (value == (std::int64_t{1} << k) - 1) return std::size_t{1} << (n - k);
    }
    return std::nullopt;
  };
  auto violation_text = [](const ConjectureViolation& v) {
    std::ostringstream o;
    if (v.kind == ConjectureViolation::Kind::value_form) {
      o << to_hex(v.poly) << " tau=" << v.tau << " A^A=" << v.value << " is not +-(2^k-1)";
    } else {
      o << to_hex(v.poly) << " |A^A|=" << v.value << " at " << v.observed_count << " shifts, expected "
        << v.expected_count;
    }
    return o.str();
  };

  switch (format) {
    case Format::text: {
      os << "degree            " << n << '\n'
         << "polynomials       " << report.polynomial_count << '\n'
         << "part (1) values   " << (report.part1_holds ? "holds" : "violated") << '\n'
         << "part (2) counts   " << (report.part2_holds ? "holds" : "violated") << '\n'
         << "uniform           " << (report.uniform ? "yes" : "no") << '\n'
         << "totals            " << (report.totals_consistent ? "consistent" : "INCONSISTENT") << '\n'
         << std::left << std::setw(10) << "|A^A|" << std::setw(10) << "shifts" << "expected\n";
      std::size_t total = 0;
      for (const auto& [value, count] : report.value_multiset) {
        const auto want = expected(value);
        os << std::left << std::setw(10) << value << std::setw(10) << count
           << (want ? std::to_string(*want) : "-") << '\n';
        total += count;
      }
      os << std::left << std::setw(10) << "total" << std::setw(10) << total << ((std::size_t{1} << n) - 2)
         << '\n';
      if (report.violations.empty()) {
        os << "violations        none\n";
      } else {
        os << "violations        " << report.violations.size() << '\n';
        for (const auto& v : report.violations) os << "  " << violation_text(v) << '\n';
      }
      break;
    }
    case Format::csv:
      os << "degree,poly_hex,abs_value,count,expected\n";
      for (const auto& pc : report.per_polynomial) {
        for (const auto& [value, count] : pc.counts) {
          const auto want = expected(value);
          os << n << ',' << to_hex(pc.poly) << ',' << value << ',' << count << ','
             << (want ? std::to_string(*want) : "") << '\n';
        }
      }
      break;
    case Format::json: {
      Json polys = Json::array();
      for (const auto& pc : report.per_polynomial) {
        polys.push_back({{"poly_hex", to_hex(pc.poly)}, {"poly", to_monomial(pc.poly)}, {"abs_counts", counts_json(pc.counts)}});
      }
      Json violations = Json::array();
      for (const auto& v : report.violations) violations.push_back(violation_text(v));
      Json degree = {{"degree", n},
                     {"polynomials", std::move(polys)},
                     {"summary",
                      {{"polynomial_count", report.polynomial_count},
                       {"value_multiset", counts_json(report.value_multiset)},
                       {"uniform", report.uniform},
                       {"part1_holds", report.part1_holds},
                       {"part2_holds", report.part2_holds},
                       {"totals_consistent", report.totals_consistent},
                       {"violations", std::move(violations)}}}};
      emit(os, Json{{"degrees", Json::array({std::move(degree)})}});
      break;
    }
  }
}

}  // namespace arithcorr::cli
