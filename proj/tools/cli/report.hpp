#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <arithcorr/correlation.hpp>

namespace arithcorr::cli {

enum class Format { text, csv, json };

Format parse_format(std::string_view name);

/// "{±1, ±3, 7}": magnitudes ascending, "±" when both signs occur.
std::string format_value_set(const std::set<std::int64_t>& values);

void write_primitive_list(std::ostream& os, Format format, unsigned degree,
                          const std::vector<Gf2Poly>& polys);

void write_sequence(std::ostream& os, Format format, const std::optional<Gf2Poly>& poly,
                    const PeriodicSequence& s);

/// What the correlation records were computed from.
struct SequenceSource {
  std::optional<Gf2Poly> poly;
  std::string sequence_id;
  PeriodicSequence sequence;
};

/// Full breakdown of one shift: both integers, their difference, the
/// expansion, N_0/N_1 and, when validation ran, the three oracle values.
void write_single_shift(std::ostream& os, Format format, const SequenceSource& src,
                        const ShiftRecord& record, const std::optional<OracleTriangle>& oracles);

void write_spectrum(std::ostream& os, Format format, const SequenceSource& src,
                    const CorrelationSpectrum& sp);

void write_table1(std::ostream& os, Format format, const std::vector<Table1Row>& rows);

void write_conjecture(std::ostream& os, Format format, const ConjectureReport& report);

}  // namespace arithcorr::cli
