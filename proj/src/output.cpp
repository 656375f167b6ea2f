#include "stackycovers/output.hpp"

#include <ostream>
#include <sstream>

#include "stackycovers/errors.hpp"
#include "stackycovers/strata.hpp"

namespace stacky {

using nlohmann::json;

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "md") return OutputFormat::Md;
  throw DomainError("unknown format '" + name + "' (expected json, csv or md)");
}

std::string OutputRecord::emit() const { return payload.dump(2) + "\n"; }

OutputRecord OutputRecord::parse(const std::string& text) {
  return {json::parse(text)};
}

namespace {

json reasons_json(const std::vector<Reason>& rs) {
  json arr = json::array();
  for (const auto& r : rs) arr.push_back({{"rule", r.rule}, {"cite", r.cite}});
  return arr;
}

json verdict_json(const Verdict& v) {
  return {{"outcome", outcome_str(v.outcome)},
          {"condition", v.condition},
          {"reasons", reasons_json(v.reasons)}};
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_str(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json witness_json(const CongruenceWitness& w) {
  json assignment = json::object();
  for (const auto& [name, value] : w.assignment) assignment[name] = to_str(value);
  json checked = json::array();
  for (const auto& [value, modulus] : w.checked)
    checked.push_back({{"value", to_str(value)}, {"modulus", to_str(modulus)}});
  return {{"assignment", assignment}, {"checked", checked}};
}

std::string char_str(CharAssumption ch) {
  switch (ch) {
    case CharAssumption::Zero: return "zero";
    case CharAssumption::GreaterThanBound: return "large";
    case CharAssumption::Unknown: return "unknown";
  }
  return "unknown";
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

OutputRecord classify_simple_record(const SimpleCyclicParams& p, CharAssumption ch) {
  json out;
  out["format_version"] = kFormatVersion;
  out["kind"] = "classify-simple";
  out["input"] = {{"n", to_str(p.n)}, {"r", to_str(p.r)}, {"d", to_str(p.d)},
                  {"char_assumption", char_str(ch)}};
  out["derived"] = {{"rd", to_str(p.rd)}, {"g", to_str(p.g)}, {"g_d", to_str(p.g_d)}};
  out["least_linearized_degree"] = to_str(least_linearized_degree(p));

  TautFamilyResult fam = tautological_family_exists(p);
  out["tautological_family"] = {{"exists", fam.exists},
                                {"brauer_severi_trivial", fam.brauer_severi_trivial},
                                {"reasons", reasons_json(fam.reasons)}};

  if (p.rd >= 4) {
    RationalityResult rat = rationality_simple(p);
    json r = verdict_json(rat.verdict);
    r["unirational"] = rat.unirational;
    out["rationality"] = r;
    CoarsePicRecord rec = verify_coarse_pic_trivial(p);
    out["coarse_pic"] = {{"m", to_str(rec.m)},
                         {"m_times_rd", to_str(rec.m_times_rd)},
                         {"power", to_str(rec.power)},
                         {"gcd", to_str(rec.gcd_value)},
                         {"coprime", rec.coprime},
                         {"constraint_power", to_str(rec.constraint_power)},
                         {"constraint_g", to_str(rec.constraint_g)},
                         {"combined", to_str(rec.combined)},
                         {"conclusion", rec.conclusion}};
  } else {
    out["rationality"] = {{"available", false}, {"note", "requires rd >= 4"}};
    out["coarse_pic"] = {{"available", false}, {"note", "requires rd >= 4"}};
  }

  if (p.rd >= 2) {
    CyclicPresentation stack = pic_stack(p);
    CyclicPresentation rigid = pic_rigidification(p);
    out["pic_stack"] = {{"generator", stack.generator_label()},
                        {"exponent", to_str(stack.generator_exponent)},
                        {"order", to_str(stack.order)}};
    out["pic_rigidification"] = {{"generator", rigid.generator_label()},
                                 {"exponent", to_str(rigid.generator_exponent)},
                                 {"order", to_str(rigid.order)}};
    out["pic_index_full"] = to_str(pic_index(p, p.r));
  } else {
    out["pic_stack"] = {{"available", false}, {"note", "requires rd >= 2"}};
    out["pic_rigidification"] = {{"available", false}, {"note", "requires rd >= 2"}};
    out["pic_index_full"] = to_str(pic_index(p, p.r));
  }

  out["no_section_over_M0"] = verdict_json(no_section_over_M0(p, ch));

  if (divides(p.g, p.d)) {
    GnrRecord gnr = gnr_classification(p);
    out["gnr"] = {{"applicable", true},
                  {"simple_cyclic_gnr_exists", gnr.simple_cyclic_gnr_exists},
                  {"guaranteed_multiple", to_str(gnr.guaranteed_multiple)}};
  } else {
    out["gnr"] = {{"applicable", false},
                  {"note", "requires gcd(rd, n+1) | d"}};
  }
  return {out};
}

OutputRecord classify_triple_record(const TripleCoverParams& p) {
  json out;
  out["format_version"] = kFormatVersion;
  out["kind"] = "classify-triple";
  out["input"] = {{"d1", to_str(p.d1)}, {"d2", to_str(p.d2)}};
  out["derived"] = {{"l1", to_str(p.l1)}, {"l2", to_str(p.l2)}};

  TripleTautResult fam = tautological_family_triple(p);
  out["tautological_family"] = {{"exists", fam.exists},
                                {"brauer_severi_trivial", fam.brauer_severi_trivial},
                                {"reasons", reasons_json(fam.reasons)}};

  out["hom_witness"] = witness_json(triple_hom_witness(p));

  InjectivityRecord rec = pic_injectivity_index(p);
  json inj = {{"index", to_str(rec.index)},
              {"strictly_greater_than_one", rec.strictly_greater_than_one},
              {"image_in_hnf_basis", matrix_json(rec.image_in_hnf_basis)}};
  if (rec.image_in_printed_basis)
    inj["image_in_printed_basis"] = matrix_json(*rec.image_in_printed_basis);
  if (rec.det_note) inj["det_note"] = *rec.det_note;
  out["pic_injectivity"] = inj;

  out["char_lattices"] = {{"source", matrix_json(gamma_char_lattice(p.l1, p.l2))},
                          {"target", matrix_json(gamma_char_lattice(p.d1, p.d2))}};

  out["no_section_over_M0"] = verdict_json(no_section_over_M0_triple(p));

  TripleStructureFlags fl = triple_structure_flags(p);
  out["structure"] = {
      {"unirational", fl.unirational},
      {"fibered_over_rational_base", fl.fibered_over_rational_base},
      {"fibers_rational_in_char_zero", fl.fibers_rational_in_char_zero},
      {"g13_exists", fl.g13_exists},
      {"two_g13_exists", fl.two_g13_exists}};
  return {out};
}

OutputRecord pic_report_record(const SimpleCyclicParams& p) {
  json out;
  out["format_version"] = kFormatVersion;
  out["kind"] = "pic-report";
  out["input"] = {{"n", to_str(p.n)}, {"r", to_str(p.r)}, {"d", to_str(p.d)}};
  if (p.rd < 2) throw DomainError("pic report: requires rd >= 2");
  CyclicPresentation stack = pic_stack(p);
  out["pic_stack"] = {{"generator", stack.generator_label()},
                      {"exponent", to_str(stack.generator_exponent)},
                      {"order", to_str(stack.order)}};
  json divisors = json::array();
  bool law = true;
  for (Int k = 1; k <= p.r; ++k) {
    if (!divides(k, p.r)) continue;
    CyclicPresentation q = pic_quotient(p, k);
    Int idx = pic_index(p, k);
    law = law && (q.order * idx == stack.order);
    divisors.push_back({{"k", to_str(k)},
                        {"generator", q.generator_label()},
                        {"order", to_str(q.order)},
                        {"index", to_str(idx)}});
  }
  out["divisors"] = divisors;
  out["order_law_holds"] = law;
  if (p.rd >= 4) {
    CoarsePicRecord rec = verify_coarse_pic_trivial(p);
    out["coarse_pic"] = {{"m", to_str(rec.m)},
                         {"gcd", to_str(rec.gcd_value)},
                         {"coprime", rec.coprime},
                         {"conclusion", rec.conclusion}};
  } else {
    out["coarse_pic"] = {{"available", false}, {"note", "requires rd >= 4"}};
  }
  return {out};
}

OutputRecord strata_p1_record(const Int& rd) {
  P1Report rep = aut_locus_codim_p1(rd);
  json out;
  out["format_version"] = kFormatVersion;
  out["kind"] = "strata-p1";
  out["rd"] = to_str(rep.rd);
  out["ambient_dim"] = to_str(rep.ambient_dim);
  out["max_stratum_dim"] = to_str(rep.max_stratum_dim);
  out["codim"] = to_str(rep.codim);
  out["codim_at_least_two"] = rep.codim_at_least_two;
  out["stated_guarantee"] = rep.stated_guarantee;
  json strata = json::array();
  for (const auto& s : rep.strata)
    strata.push_back({{"p", to_str(s.p)},
                      {"i", s.i},
                      {"dim", to_str(s.dim)},
                      {"empty", s.empty}});
  out["strata"] = strata;
  return {out};
}

OutputRecord strata_p2_record(const Int& d) {
  P2Report rep = aut_locus_codim_p2(d);
  json out;
  out["format_version"] = kFormatVersion;
  out["kind"] = "strata-p2";
  out["d"] = to_str(rep.d);
  out["ambient_dim"] = to_str(rep.ambient_dim);
  out["ambient_dim_standard"] = to_str(rep.ambient_dim_standard);
  out["ambient_note"] = rep.ambient_note;
  out["char_assumption"] = rep.char_assumption;
  out["codim_at_least_two"] = rep.codim_at_least_two;
  json strata = json::array();
  for (const auto& s : rep.per_case)
    strata.push_back({{"case", s.case_id},
                      {"m", to_str(s.m)},
                      {"k", to_str(s.k)},
                      {"params", s.params},
                      {"dim_or_bound", to_str(s.dim_or_bound)},
                      {"bound_exact", to_str(s.bound_exact.get_num()) + "/" +
                                          to_str(s.bound_exact.get_den())},
                      {"is_upper_bound", s.is_upper_bound},
                      {"codim_printed", to_str(s.codim_printed)},
                      {"codim_standard", to_str(s.codim_standard)},
                      {"violates_codim2", s.violates_codim2}});
  out["strata"] = strata;
  return {out};
}

SweepSpec SweepSpec::parse(const std::string& text) {
  SweepSpec spec;
  bool saw_simple = false, saw_triple = false;
  bool have[5] = {false, false, false, false, false};  // n r d d1 d2
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string compact;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    if (compact.empty()) continue;
    auto eq = compact.find('=');
    auto dots = compact.find("..");
    if (eq == std::string::npos || dots == std::string::npos || dots < eq)
      throw SweepSpecError("sweep spec line " + std::to_string(lineno) +
                           ": expected 'param = lo..hi'");
    std::string key = compact.substr(0, eq);
    std::string lo_s = compact.substr(eq + 1, dots - eq - 1);
    std::string hi_s = compact.substr(dots + 2);
    long long lo, hi;
    try {
      lo = std::stoll(lo_s);
      hi = std::stoll(hi_s);
    } catch (const std::exception&) {
      throw SweepSpecError("sweep spec line " + std::to_string(lineno) +
                           ": bad integer range");
    }
    if (lo < 1 || hi < lo - 1)  // hi = lo-1 is an explicit empty range
      throw SweepSpecError("sweep spec line " + std::to_string(lineno) +
                           ": need 1 <= lo and hi >= lo-1");
    if (key == "n") { spec.n_lo = lo; spec.n_hi = hi; have[0] = true; saw_simple = true; }
    else if (key == "r") { spec.r_lo = lo; spec.r_hi = hi; have[1] = true; saw_simple = true; }
    else if (key == "d") { spec.d_lo = lo; spec.d_hi = hi; have[2] = true; saw_simple = true; }
    else if (key == "d1") { spec.d1_lo = lo; spec.d1_hi = hi; have[3] = true; saw_triple = true; }
    else if (key == "d2") { spec.d2_lo = lo; spec.d2_hi = hi; have[4] = true; saw_triple = true; }
    else throw SweepSpecError("sweep spec line " + std::to_string(lineno) +
                              ": unknown parameter '" + key + "'");
  }
  if (saw_simple && saw_triple)
    throw SweepSpecError("sweep spec: cannot mix {n, r, d} with {d1, d2}");
  if (saw_triple) {
    if (!have[3] || !have[4])
      throw SweepSpecError("sweep spec: triple sweeps need both d1 and d2");
    spec.kind = Kind::Triple;
    return spec;
  }
  if (!have[0] || !have[1] || !have[2])
    throw SweepSpecError("sweep spec: simple sweeps need n, r and d");
  spec.kind = Kind::Simple;
  return spec;
}

long long SweepSpec::tuple_count() const {
  if (kind == Kind::Triple)
    return (d1_hi - d1_lo + 1) * (d2_hi - d2_lo + 1);
  return (n_hi - n_lo + 1) * (r_hi - r_lo + 1) * (d_hi - d_lo + 1);
}

std::vector<std::string> simple_table_header() {
  return {"n", "r", "d", "rd", "g", "family", "bs_trivial",
          "rational", "rational_condition", "unirational", "pic_generator",
          "pic_order", "no_section", "no_section_condition", "gnr_exists",
          "gnr_multiple"};
}

std::vector<std::string> simple_table_row(const SimpleCyclicParams& p,
                                          CharAssumption ch) {
  TautFamilyResult fam = tautological_family_exists(p);
  std::string rational = "n/a", rational_cond;
  if (p.rd >= 4) {
    RationalityResult rat = rationality_simple(p);
    rational = outcome_str(rat.verdict.outcome);
    rational_cond = rat.verdict.condition;
  }
  std::string pic_gen = "n/a", pic_ord = "n/a";
  if (p.rd >= 2) {
    CyclicPresentation stack = pic_stack(p);
    pic_gen = stack.generator_label();
    pic_ord = to_str(stack.order);
  }
  Verdict ns = no_section_over_M0(p, ch);
  std::string gnr_exists = "n/a", gnr_multiple;
  if (divides(p.g, p.d)) {
    GnrRecord gnr = gnr_classification(p);
    gnr_exists = bool_str(gnr.simple_cyclic_gnr_exists);
    gnr_multiple = to_str(gnr.guaranteed_multiple);
  }
  return {to_str(p.n), to_str(p.r), to_str(p.d), to_str(p.rd), to_str(p.g),
          bool_str(fam.exists), bool_str(fam.brauer_severi_trivial),
          rational, rational_cond, "true", pic_gen,
          pic_ord, outcome_str(ns.outcome), ns.condition,
          gnr_exists, gnr_multiple};
}

std::vector<std::string> triple_table_header() {
  return {"d1", "d2", "l1", "l2", "family", "bs_trivial", "pic_index",
          "index_gt_one", "g13", "two_g13", "no_section",
          "k1", "k2", "k1p", "k2p", "s", "t"};
}

std::vector<std::string> triple_table_row(const TripleCoverParams& p) {
  TripleTautResult fam = tautological_family_triple(p);
  InjectivityRecord rec = pic_injectivity_index(p);
  TripleStructureFlags fl = triple_structure_flags(p);
  Verdict ns = no_section_over_M0_triple(p);
  CongruenceWitness w = triple_hom_witness(p);
  return {to_str(p.d1), to_str(p.d2), to_str(p.l1), to_str(p.l2),
          bool_str(fam.exists), bool_str(fam.brauer_severi_trivial),
          to_str(rec.index), bool_str(rec.strictly_greater_than_one),
          bool_str(fl.g13_exists), bool_str(fl.two_g13_exists),
          outcome_str(ns.outcome),
          to_str(w.assignment.at("k1")), to_str(w.assignment.at("k2")),
          to_str(w.assignment.at("k1p")), to_str(w.assignment.at("k2p")),
          to_str(w.assignment.at("s")), to_str(w.assignment.at("t"))};
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void emit_csv_row(const std::vector<std::string>& fields, std::ostream& os) {
  for (std::size_t i = 0; i < fields.size(); ++i)
    os << (i ? "," : "") << csv_escape(fields[i]);
  os << "\n";
}

void emit_md_row(const std::vector<std::string>& fields, std::ostream& os) {
  os << "|";
  for (const auto& f : fields) os << " " << f << " |";
  os << "\n";
}

namespace {

json simple_row_json(const SimpleCyclicParams& p, CharAssumption ch) {
  auto header = simple_table_header();
  auto row = simple_table_row(p, ch);
  json out;
  out["format_version"] = kFormatVersion;
  out["kind"] = "simple";
  for (std::size_t i = 0; i < header.size(); ++i) out[header[i]] = row[i];
  return out;
}

json triple_row_json(const TripleCoverParams& p) {
  auto header = triple_table_header();
  auto row = triple_table_row(p);
  json out;
  out["format_version"] = kFormatVersion;
  out["kind"] = "triple";
  for (std::size_t i = 0; i < header.size(); ++i) out[header[i]] = row[i];
  return out;
}

}  // namespace

void emit_table(const SweepSpec& spec, const TableOptions& options, std::ostream& os) {
  if (spec.tuple_count() > options.cap)
    throw CapExceededError("table sweep: " + std::to_string(spec.tuple_count()) +
                           " tuples exceed the cap of " + std::to_string(options.cap));

  const bool simple = (spec.kind == SweepSpec::Kind::Simple);
  const auto header = simple ? simple_table_header() : triple_table_header();

  // Materialize tuples in lexicographic parameter order, evaluate
  // concurrently into index-addressed slots, emit serially.
  struct Tuple { long a, b, c; };
  std::vector<Tuple> tuples;
  if (simple) {
    for (long long n = spec.n_lo; n <= spec.n_hi; ++n)
      for (long long r = spec.r_lo; r <= spec.r_hi; ++r)
        for (long long d = spec.d_lo; d <= spec.d_hi; ++d)
          tuples.push_back({static_cast<long>(n), static_cast<long>(r), static_cast<long>(d)});
  } else {
    for (long long d1 = spec.d1_lo; d1 <= spec.d1_hi; ++d1)
      for (long long d2 = spec.d2_lo; d2 <= spec.d2_hi; ++d2) {
        if (2 * d1 - d2 < 4 || 2 * d2 - d1 < 4) continue;
        tuples.push_back({static_cast<long>(d1), static_cast<long>(d2), 0});
      }
  }

  std::vector<std::string> rendered(tuples.size());
  sweep_for_each(static_cast<long long>(tuples.size()), options.mode, [&](long long i) {
    const Tuple& t = tuples[i];
    std::ostringstream line;
    if (options.format == OutputFormat::Json) {
      json row = simple
                     ? simple_row_json(SimpleCyclicParams::make(t.a, t.b, t.c),
                                       options.char_assumption)
                     : triple_row_json(TripleCoverParams::make(t.a, t.b));
      line << row.dump() << "\n";
    } else {
      auto row = simple ? simple_table_row(SimpleCyclicParams::make(t.a, t.b, t.c),
                                           options.char_assumption)
                        : triple_table_row(TripleCoverParams::make(t.a, t.b));
      if (options.format == OutputFormat::Csv)
        emit_csv_row(row, line);
      else
        emit_md_row(row, line);
    }
    rendered[i] = line.str();
  });

  if (options.format == OutputFormat::Csv) {
    emit_csv_row(header, os);
  } else if (options.format == OutputFormat::Md) {
    emit_md_row(header, os);
    std::vector<std::string> sep(header.size(), "---");
    emit_md_row(sep, os);
  }
  for (const auto& line : rendered) os << line;
}

void emit_verify_report(const VerifyReport& report, bool as_json, std::ostream& os) {
  if (as_json) {
    json out;
    out["format_version"] = kFormatVersion;
    out["kind"] = "verify-report";
    json ids = json::array();
    for (const auto& r : report.identities)
      ids.push_back({{"id", r.id},
                     {"cite", r.cite},
                     {"checked", r.checked},
                     {"discrepancies", r.discrepancies},
                     {"samples", r.samples}});
    out["identities"] = ids;
    out["total_checked"] = report.total_checked();
    out["total_discrepancies"] = report.total_discrepancies();
    out["ok"] = report.ok();
    os << out.dump(2) << "\n";
    return;
  }
  for (const auto& r : report.identities) {
    os << (r.discrepancies == 0 ? "ok   " : "FAIL ") << r.id << ": " << r.checked
       << " tuples, " << r.discrepancies << " discrepancies  [" << r.cite << "]\n";
    for (const auto& s : r.samples) os << "       " << s << "\n";
  }
  os << (report.ok() ? "verify: all identities agree (" : "verify: DISCREPANCIES (")
     << report.total_checked() << " tuples checked, " << report.total_discrepancies()
     << " discrepancies)\n";
}

}  // namespace stacky
