#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include <arithcorr/correlation.hpp>
#include <arithcorr/errors.hpp>

#include "report.hpp"

namespace arithcorr::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string format = "text";
  std::string output;
  unsigned jobs = 0;
  bool validate = false;
  bool no_validate = false;

  Validation validation() const {
    if (validate && no_validate) throw UsageError("--validate and --no-validate are exclusive");
    if (validate) return Validation::on;
    if (no_validate) return Validation::off;
    return Validation::automatic;
  }
};

struct SequenceOptions {
  std::string seq;
  std::string poly;
  std::string init = "canonical";
  std::int64_t phase = 0;
};

struct AcorrOptions {
  SequenceOptions source;
  std::optional<std::int64_t> tau;
  bool all = false;
};

struct RangeOptions {
  unsigned degree = 0;
  unsigned nmin = 0;
  unsigned nmax = 0;
  unsigned cap = kDefaultDegreeCap;
};

Gf2Poly parse_poly_arg(const std::string& text) {
  try {
    return parse_poly(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--poly: ") + e.what());
  }
}

LfsrSpec make_spec(const SequenceOptions& o) {
  const Gf2Poly poly = parse_poly_arg(o.poly);
  const int n = poly.degree();
  if (n < 2 || n > static_cast<int>(kMaxGenerateDegree)) {
    throw UsageError("--poly: degree must be in [2, " + std::to_string(kMaxGenerateDegree) + "]");
  }
  if (o.init == "canonical") return LfsrSpec::canonical(poly);
  BitVector state;
  try {
    state = BitVector::from_string(o.init);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--init: ") + e.what());
  }
  if (state.is_zero()) throw MathError("initial state is all-zero");
  if (state.size() != static_cast<std::size_t>(n)) {
    throw UsageError("--init: expected " + std::to_string(n) + " bits");
  }
  return LfsrSpec(poly, std::move(state));
}

std::string phase_label(const SequenceOptions& o, std::size_t phase) {
  return to_hex(parse_poly(o.poly)) + "@" + (o.init == "canonical" ? "canonical" : "init=" + o.init) +
         "+phase" + std::to_string(phase);
}

SequenceSource load_source(const SequenceOptions& o) {
  if (!o.seq.empty()) {
    BitVector bits;
    try {
      bits = BitVector::from_string(o.seq);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--seq: ") + e.what());
    }
    if (bits.size() < 2) throw UsageError("--seq: period must be at least 2");
    return SequenceSource{std::nullopt, "seq", PeriodicSequence(std::move(bits))};
  }
  if (o.poly.empty()) throw UsageError("give either --seq or --poly");
  const LfsrSpec spec = make_spec(o);
  const PeriodicSequence base = generate_m_sequence(spec);
  const std::size_t phase = reduce_shift(o.phase, base.period());
  return SequenceSource{spec.poly(), phase_label(o, phase),
                        PeriodicSequence(rotate(base.first_period(), phase))};
}

class Output {
 public:
  explicit Output(const GlobalOptions& g, std::ostream& fallback) : stream_(&fallback) {
    if (!g.output.empty()) {
      file_.open(g.output);
      if (!file_) throw UsageError("cannot open output file '" + g.output + "'");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void require_range(unsigned value, unsigned lo, unsigned hi, const char* what) {
  if (value < lo || value > hi) {
    throw UsageError(std::string(what) + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                     "], got " + std::to_string(value));
  }
}

void require_cap(unsigned cap) { require_range(cap, kMinEnumerateDegree, kMaxEnumerateDegree, "--cap"); }

int cmd_primpolys(const GlobalOptions& g, const RangeOptions& r, std::ostream& out) {
  require_range(r.degree, kMinEnumerateDegree, kMaxEnumerateDegree, "--degree");
  const auto polys = enumerate_primitive(r.degree, g.jobs);
  Output o(g, out);
  write_primitive_list(o.stream(), parse_format(g.format), r.degree, polys);
  return kSuccess;
}

int cmd_gen(const GlobalOptions& g, const SequenceOptions& s, std::ostream& out) {
  const SequenceSource src = load_source(s);
  Output o(g, out);
  write_sequence(o.stream(), parse_format(g.format), src.poly, src.sequence);
  return kSuccess;
}

int cmd_acorr(const GlobalOptions& g, const AcorrOptions& a, std::ostream& out) {
  const Validation validation = g.validation();
  const SequenceSource src = load_source(a.source);
  const std::size_t t = src.sequence.period();
  const Format format = parse_format(g.format);

  if (a.all) {
    const CorrelationSpectrum sp = spectrum(src.sequence, {validation, g.jobs, src.sequence_id});
    Output o(g, out);
    write_spectrum(o.stream(), format, src, sp);
    return kSuccess;
  }

  const std::int64_t tau = *a.tau;
  if (tau < 0 || tau >= static_cast<std::int64_t>(t)) {
    throw UsageError("--tau must be in [0, " + std::to_string(t) + "), got " + std::to_string(tau));
  }
  const ShiftRecord record = arithmetic_autocorrelation(src.sequence, tau, validation);
  std::optional<OracleTriangle> oracles;
  if (validation_enabled(validation, t)) oracles = oracle_triangle(src.sequence, tau);
  Output o(g, out);
  write_single_shift(o.stream(), format, src, record, oracles);
  return kSuccess;
}

int cmd_table1(const GlobalOptions& g, const RangeOptions& r, std::ostream& out) {
  require_cap(r.cap);
  if (r.nmin < kMinEnumerateDegree || r.nmin > r.nmax || r.nmax > r.cap) {
    throw UsageError("degree range must satisfy 2 <= nmin <= nmax <= " + std::to_string(r.cap));
  }
  const auto rows = table1_report(r.nmin, r.nmax, {r.cap, g.jobs, g.validation()});
  Output o(g, out);
  write_table1(o.stream(), parse_format(g.format), rows);
  return kSuccess;
}

int cmd_conjecture(const GlobalOptions& g, const RangeOptions& r, std::ostream& out) {
  require_cap(r.cap);
  require_range(r.degree, kMinEnumerateDegree, r.cap, "--degree");
  const ConjectureReport report = conjecture_check(r.degree, {r.cap, g.jobs, g.validation()});
  Output o(g, out);
  write_conjecture(o.stream(), parse_format(g.format), report);
  return report.part1_holds && report.part2_holds ? kSuccess : kConjectureViolated;
}

void add_source_options(CLI::App* cmd, SequenceOptions& s, bool allow_seq) {
  auto* poly = cmd->add_option("--poly", s.poly, "Primitive polynomial, hex (0x13) or monomial (x^4+x+1)");
  cmd->add_option("--init", s.init, "Initial state bits s_0..s_{n-1}, or 'canonical' (0...01)")
      ->capture_default_str();
  cmd->add_option("--phase", s.phase, "Rotate the generated period by this many positions")
      ->capture_default_str();
  if (allow_seq) {
    auto* seq = cmd->add_option("--seq", s.seq, "Explicit period as a 0/1 string, index 0 leftmost");
    seq->excludes(poly);
    poly->excludes(seq);
  } else {
    poly->required();
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic autocorrelation of binary m-sequences", "arithcorr"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file mirroring the flags (flags win)");

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--output,-o", g.output, "Write the report to this file instead of stdout");
  app.add_option("--jobs,-j", g.jobs, "Worker threads for sweeps (0 = all cores)")
      ->envname("ARITHCORR_JOBS");
  auto* validate = app.add_flag("--validate", g.validate, "Force the three-route cross-check");
  app.add_flag("--no-validate", g.no_validate, "Skip the three-route cross-check")->excludes(validate);

  RangeOptions range;
  auto* primpolys = app.add_subcommand("primpolys", "List the primitive polynomials of one degree");
  primpolys->add_option("--degree,-n", range.degree, "Degree, 2..20")->required();

  SequenceOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Print one period of an m-sequence");
  add_source_options(gen, gen_opts, false);

  AcorrOptions acorr_opts;
  auto* acorr = app.add_subcommand("acorr", "Arithmetic autocorrelation of a sequence");
  add_source_options(acorr, acorr_opts.source, true);
  auto* tau = acorr->add_option("--tau", acorr_opts.tau, "Shift, 0 <= tau < T");
  auto* all = acorr->add_flag("--all", acorr_opts.all, "Every shift 1 <= tau < T");
  tau->excludes(all);
  all->excludes(tau);

  auto* table1 = app.add_subcommand("table1", "Primitive-polynomial counts and value sets per degree");
  table1->add_option("--nmin", range.nmin, "Lowest degree")->required();
  table1->add_option("--nmax", range.nmax, "Highest degree")->required();
  table1->add_option("--cap", range.cap, "Largest degree accepted")->capture_default_str();

  auto* conjecture = app.add_subcommand("conjecture", "Check the value-spectrum conjecture at one degree");
  conjecture->add_option("--degree,-n", range.degree, "Degree")->required();
  conjecture->add_option("--cap", range.cap, "Largest degree accepted")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*primpolys) return cmd_primpolys(g, range, out);
    if (*gen) return cmd_gen(g, gen_opts, out);
    if (*acorr) {
      if (!acorr_opts.all && !acorr_opts.tau) throw UsageError("acorr needs --tau or --all");
      return cmd_acorr(g, acorr_opts, out);
    }
    if (*table1) return cmd_table1(g, range, out);
    if (*conjecture) return cmd_conjecture(g, range, out);
  } catch (const OracleMismatch& e) {
    err << "oracle mismatch: " << e.what() << '\n';
    return kOracleMismatch;
  } catch (const MathError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << "error: no command given\n";
  return kUsage;
}

}  // namespace arithcorr::cli
