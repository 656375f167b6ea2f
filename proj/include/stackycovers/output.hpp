#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "stackycovers/oracle.hpp"
#include "stackycovers/simple_cyclic.hpp"
#include "stackycovers/sweep.hpp"
#include "stackycovers/triple_cover.hpp"
#include "stackycovers/verify.hpp"

namespace stacky {

inline constexpr int kFormatVersion = 1;

enum class OutputFormat { Json, Csv, Md };

OutputFormat parse_format(const std::string& name);

// Input echo plus every classifier output with its reason chain, under a
// declared format version. Serialization round-trips losslessly: every
// integer is carried as a decimal string.
struct OutputRecord {
  nlohmann::json payload;

  std::string emit() const;  // canonical, key-sorted, 2-space indent
  static OutputRecord parse(const std::string& text);
  bool operator==(const OutputRecord& other) const { return payload == other.payload; }
};

OutputRecord classify_simple_record(const SimpleCyclicParams& p, CharAssumption ch);
OutputRecord classify_triple_record(const TripleCoverParams& p);
OutputRecord pic_report_record(const SimpleCyclicParams& p);
OutputRecord strata_p1_record(const Int& rd);
OutputRecord strata_p2_record(const Int& d);

// Flat key-range sweep description: one "param = lo..hi" per line, '#'
// comments. Keys {n, r, d} select a simple sweep, {d1, d2} a triple
// sweep; the two key sets cannot be mixed.
struct SweepSpec {
  enum class Kind { Simple, Triple };
  Kind kind = Kind::Simple;
  long long n_lo = 1, n_hi = 1;
  long long r_lo = 1, r_hi = 1;
  long long d_lo = 1, d_hi = 1;
  long long d1_lo = 1, d1_hi = 1;
  long long d2_lo = 1, d2_hi = 1;

  static SweepSpec parse(const std::string& text);
  long long tuple_count() const;
};

struct TableOptions {
  OutputFormat format = OutputFormat::Csv;
  CharAssumption char_assumption = CharAssumption::Unknown;
  ExecMode mode = ExecMode::Parallel;
  long long cap = kDefaultEnumerationCap;
};

// One row per tuple, sorted lexicographically by parameters, byte-stable
// for a fixed format version. Json means JSON-lines here. Triple tuples
// whose derived degrees fall below 4 are skipped. Throws
// CapExceededError when the sweep exceeds options.cap.
void emit_table(const SweepSpec& spec, const TableOptions& options, std::ostream& os);

// Row builders shared by classify and table output.
std::vector<std::string> simple_table_header();
std::vector<std::string> simple_table_row(const SimpleCyclicParams& p, CharAssumption ch);
std::vector<std::string> triple_table_header();
std::vector<std::string> triple_table_row(const TripleCoverParams& p);

void emit_csv_row(const std::vector<std::string>& fields, std::ostream& os);
void emit_md_row(const std::vector<std::string>& fields, std::ostream& os);

void emit_verify_report(const VerifyReport& report, bool as_json, std::ostream& os);

}  // namespace stacky
