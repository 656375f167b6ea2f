// stackycovers: exact classifiers for moduli of cyclic covers of
// projective spaces. Subcommands: classify simple|triple, pic,
// strata p1|p2, table, verify.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "stackycovers/errors.hpp"
#include "stackycovers/output.hpp"

namespace {

using namespace stacky;

constexpr int kExitOk = 0;
constexpr int kExitDiscrepancy = 1;
constexpr int kExitDomain = 2;
constexpr int kExitCap = 3;

long long env_cap() {
  if (const char* env = std::getenv("STACKYCOVERS_CAP")) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid STACKYCOVERS_CAP\n";
  }
  return kDefaultEnumerationCap;
}

CharAssumption parse_char(const std::string& s) {
  if (s == "zero") return CharAssumption::Zero;
  if (s == "large") return CharAssumption::GreaterThanBound;
  if (s == "unknown") return CharAssumption::Unknown;
  throw DomainError("unknown --char value '" + s + "' (expected zero, large or unknown)");
}

ExecMode parse_mode(const std::string& s) {
  if (s == "serial") return ExecMode::Serial;
  if (s == "parallel") return ExecMode::Parallel;
  throw DomainError("unknown --mode value '" + s + "' (expected serial or parallel)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open sweep file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Single-record output honoring --format: json emits the full record,
// csv/md emit the same row the table command would produce.
void emit_single(const OutputRecord& record, const std::vector<std::string>& header,
                 const std::vector<std::string>& row, OutputFormat format) {
  if (format == OutputFormat::Json) {
    std::cout << record.emit();
  } else if (format == OutputFormat::Csv) {
    emit_csv_row(header, std::cout);
    emit_csv_row(row, std::cout);
  } else {
    emit_md_row(header, std::cout);
    std::vector<std::string> sep(header.size(), "---");
    emit_md_row(sep, std::cout);
    emit_md_row(row, std::cout);
  }
}

struct Options {
  long n = 1, r = 1, d = 1, d1 = 1, d2 = 1, rd = 4;
  std::string format = "json";
  std::string table_format = "csv";
  std::string char_assumption = "unknown";
  std::string sweep_file;
  std::string only;
  std::string mode = "parallel";
  long long cap = 0;
  bool verify_json = false;
  int mutation = 0;
};

int run(CLI::App& app, const Options& opt) {
  long long cap = opt.cap > 0 ? opt.cap : env_cap();

  if (app.got_subcommand("classify")) {
    CLI::App* classify = app.get_subcommand("classify");
    if (classify->got_subcommand("simple")) {
      auto p = SimpleCyclicParams::make(opt.n, opt.r, opt.d);
      CharAssumption ch = parse_char(opt.char_assumption);
      emit_single(classify_simple_record(p, ch), simple_table_header(),
                  simple_table_row(p, ch), parse_format(opt.format));
      return kExitOk;
    }
    auto p = TripleCoverParams::make(opt.d1, opt.d2);
    emit_single(classify_triple_record(p), triple_table_header(),
                triple_table_row(p), parse_format(opt.format));
    return kExitOk;
  }

  if (app.got_subcommand("pic")) {
    auto p = SimpleCyclicParams::make(opt.n, opt.r, opt.d);
    std::cout << pic_report_record(p).emit();
    return kExitOk;
  }

  if (app.got_subcommand("strata")) {
    CLI::App* strata = app.get_subcommand("strata");
    OutputRecord rec = strata->got_subcommand("p1") ? strata_p1_record(Int(opt.rd))
                                                    : strata_p2_record(Int(opt.d));
    std::cout << rec.emit();
    return kExitOk;
  }

  if (app.got_subcommand("table")) {
    if (opt.sweep_file.empty()) throw DomainError("table: --sweep FILE is required");
    SweepSpec spec = SweepSpec::parse(read_file(opt.sweep_file));
    TableOptions topt;
    topt.format = parse_format(opt.table_format);
    topt.char_assumption = parse_char(opt.char_assumption);
    topt.mode = parse_mode(opt.mode);
    topt.cap = cap;
    emit_table(spec, topt, std::cout);
    return kExitOk;
  }

  if (app.got_subcommand("verify")) {
    SweepBox box;
    box.cap = cap;
    if (!opt.sweep_file.empty()) {
      SweepSpec spec = SweepSpec::parse(read_file(opt.sweep_file));
      if (spec.kind == SweepSpec::Kind::Simple) {
        box.n_lo = spec.n_lo; box.n_hi = spec.n_hi;
        box.r_lo = spec.r_lo; box.r_hi = spec.r_hi;
        box.d_lo = spec.d_lo; box.d_hi = spec.d_hi;
      } else {
        box.d1_lo = spec.d1_lo; box.d1_hi = spec.d1_hi;
        box.d2_lo = spec.d2_lo; box.d2_hi = spec.d2_hi;
      }
    }
    VerifyReport report = run_verify(box, opt.only, parse_mode(opt.mode), opt.mutation);
    emit_verify_report(report, opt.verify_json, std::cout);
    return report.ok() ? kExitOk : kExitDiscrepancy;
  }

  std::cerr << app.help() << "\n";
  return kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classifiers for moduli stacks of cyclic covers of projective spaces"};
  app.require_subcommand(0, 1);
  Options opt;

  CLI::App* classify = app.add_subcommand("classify", "classify a single parameter tuple");
  classify->require_subcommand(1);
  CLI::App* simple = classify->add_subcommand("simple", "simple cyclic covers of P^n");
  simple->add_option("-n,--dim", opt.n, "dimension of the base projective space")->required();
  simple->add_option("-r,--degree", opt.r, "cover degree")->required();
  simple->add_option("-d,--line-degree", opt.d, "line-bundle degree parameter")->required();
  CLI::App* triple = classify->add_subcommand("triple", "cyclic triple covers of P^1");
  triple->add_option("--d1", opt.d1, "first degree parameter")->required();
  triple->add_option("--d2", opt.d2, "second degree parameter")->required();

  CLI::App* pic = app.add_subcommand("pic", "Picard presentations, indices and the coarse check");
  pic->add_option("-n,--dim", opt.n)->required();
  pic->add_option("-r,--degree", opt.r)->required();
  pic->add_option("-d,--line-degree", opt.d)->required();

  CLI::App* strata = app.add_subcommand("strata", "automorphism-locus dimension reports");
  strata->require_subcommand(1);
  CLI::App* p1 = strata->add_subcommand("p1", "divisors on P^1, branch degree rd");
  p1->add_option("--rd", opt.rd, "branch degree")->required();
  CLI::App* p2 = strata->add_subcommand("p2", "plane curves of degree d");
  p2->add_option("-d,--curve-degree", opt.d, "plane-curve degree")->required();

  CLI::App* table = app.add_subcommand("table", "stream one classification row per sweep tuple");
  table->add_option("--sweep", opt.sweep_file, "sweep spec file (param = lo..hi lines)");
  table->add_option("--format", opt.table_format, "output format: csv, md or json (JSON-lines)");

  CLI::App* verify = app.add_subcommand("verify", "run every shortcut against its oracle");
  verify->add_option("--sweep", opt.sweep_file, "override the default sweep box");
  verify->add_option("--only", opt.only, "check a single identity family");
  verify->add_flag("--json", opt.verify_json, "emit the report as JSON");
#ifdef STACKYCOVERS_MUTATIONS
  verify->add_option("--mutate", opt.mutation,
                     "fault-injection: perturb the numbered shortcut (self-test)");
#endif

  for (CLI::App* sub : {simple, triple})
    sub->add_option("--format", opt.format, "output format: json, csv or md");
  for (CLI::App* sub : {simple, triple, table})
    sub->add_option("--char", opt.char_assumption,
                    "characteristic assumption: zero, large or unknown");
  for (CLI::App* sub : {table, verify}) {
    sub->add_option("--cap", opt.cap, "enumeration cap (overrides STACKYCOVERS_CAP)");
    sub->add_option("--mode", opt.mode, "execution mode: serial or parallel");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitDomain;
  }

  try {
    return run(app, opt);
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
