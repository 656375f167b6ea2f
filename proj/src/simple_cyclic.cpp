#include "stackycovers/simple_cyclic.hpp"

#include <array>

#include "stackycovers/errors.hpp"
#include "stackycovers/rules.hpp"

namespace stacky {

SimpleCyclicParams SimpleCyclicParams::make(const Int& n, const Int& r, const Int& d,
                                            bool strict_rd4) {
  if (n < 1) throw DomainError("simple cyclic params: n >= 1 required");
  if (r < 1) throw DomainError("simple cyclic params: r >= 1 required");
  if (d < 1) throw DomainError("simple cyclic params: d >= 1 required");
  SimpleCyclicParams p;
  p.n = n;
  p.r = r;
  p.d = d;
  p.rd = r * d;
  p.g = gcd(p.rd, n + 1);
  p.g_d = gcd(d, n + 1);
  if (strict_rd4 && p.rd < 4)
    throw DomainError("simple cyclic params: rd >= 4 required under strict policy");
  return p;
}

std::string CyclicPresentation::generator_label() const {
  return "det^" + to_str(generator_exponent);
}

std::pair<bool, std::optional<CongruenceWitness>> torsor_hom_exists(
    const Int& d_from, const Int& d_to, const Int& n) {
  if (d_from < 1 || d_to < 1) throw DomainError("torsor_hom_exists: degrees must be >= 1");
  if (!divides(gcd(d_from, n + 1), d_to)) return {false, std::nullopt};
  Congruence c;
  c.form.coeffs["k"] = n + 1;
  c.form.constant = d_to;
  c.modulus = d_from;
  auto w = solve_linear_congruences({c});
  return {true, w};
}

Int least_linearized_degree(const SimpleCyclicParams& p) { return p.g; }

TautFamilyResult tautological_family_exists(const SimpleCyclicParams& p) {
  TautFamilyResult r;
  r.exists = divides(p.g, p.d);
  r.brauer_severi_trivial = (p.g == 1);
  r.reasons = {rules::taut_family(), rules::bs_trivial()};
  return r;
}

bool in_dim2_nonrational_table(const Int& r, const Int& rd) {
  static const std::array<std::pair<long, long>, 9> table = {{
      {3, 6}, {3, 12}, {3, 15}, {9, 18}, {3, 24}, {6, 24}, {12, 24}, {3, 48}, {6, 48},
  }};
  for (const auto& [tr, trd] : table)
    if (r == tr && rd == trd) return true;
  return false;
}

RationalityResult rationality_simple(const SimpleCyclicParams& p) {
  if (p.rd < 4) throw DomainError("rationality_simple: requires rd >= 4");
  RationalityResult out;
  out.unirational = true;

  if (p.n == 1) {
    bool rational = is_odd(p.rd) || is_even(p.d);
    out.verdict = rational ? Verdict::yes({rules::rationality_dim1(), rules::unirational()})
                           : Verdict::no({rules::rationality_dim1(), rules::unirational()});
    return out;
  }

  if (p.n == 2) {
    if (p.rd >= 49) {
      bool rational = divides(3, p.d) || !divides(3, p.rd);
      out.verdict = rational
                        ? Verdict::yes({rules::rationality_dim2_large(), rules::unirational()})
                        : Verdict::no({rules::rationality_dim2_large(), rules::unirational()});
      return out;
    }
    if (in_dim2_nonrational_table(p.r, p.rd)) {
      out.verdict = Verdict::no({rules::rationality_dim2_table(), rules::unirational()});
      return out;
    }
    if (!divides(p.g, p.d)) {
      out.verdict =
          Verdict::no({rules::not_rational_no_family(), rules::unirational()});
      return out;
    }
    out.verdict = Verdict::conditional(
        "rationality of C(2," + to_str(p.rd) + ")",
        {rules::rationality_dim2_open(), rules::rational_iff_coarse(), rules::unirational()});
    return out;
  }

  // n >= 3
  if (!divides(p.g, p.d)) {
    out.verdict = Verdict::no({rules::not_rational_no_family(), rules::unirational()});
    return out;
  }
  out.verdict = Verdict::conditional(
      "rationality of M_{" + to_str(p.n) + "," + to_str(p.r) + "," + to_str(p.d) + "}",
      {rules::rational_iff_coarse(), rules::unirational()});
  return out;
}

CyclicPresentation pic_quotient(const SimpleCyclicParams& p, const Int& k) {
  if (k < 1 || !divides(k, p.r)) throw DomainError("pic_quotient: k must divide r");
  if (p.rd < 2)
    throw DomainError("pic_quotient: rd >= 2 required (the relation exponent "
                      "rd(rd-1)^n vanishes at rd = 1)");
  Int kd = k * p.d;
  Int e = exact_div(kd, gcd(kd, p.n + 1));
  Int relation = p.rd * pow_ui(p.rd - 1, to_ulong(p.n));
  CyclicPresentation c;
  c.generator_exponent = e;
  // order of <e> in Z/relation, from the lattice quotient
  c.order = exact_div(relation, gcd(e, relation));
  return c;
}

CyclicPresentation pic_stack(const SimpleCyclicParams& p) { return pic_quotient(p, 1); }

CyclicPresentation pic_rigidification(const SimpleCyclicParams& p) {
  return pic_quotient(p, p.r);
}

Int pic_index(const SimpleCyclicParams& p, const Int& k) {
  if (k < 1 || !divides(k, p.r)) throw DomainError("pic_index: k must divide r");
  return exact_div(k * gcd(p.d, p.n + 1), gcd(k * p.d, p.n + 1));
}

CoarsePicRecord verify_coarse_pic_trivial(const SimpleCyclicParams& p) {
  if (p.rd < 4) throw DomainError("verify_coarse_pic_trivial: requires rd >= 4");
  CoarsePicRecord rec;
  rec.m = 1;
  Int term = 1;
  for (Int i = 1; i <= p.n; ++i) {
    term *= (1 - p.rd);
    rec.m += term;
  }
  rec.power = pow_ui(p.rd - 1, to_ulong(p.n));
  rec.m_times_rd = rec.m * p.rd;
  rec.gcd_value = gcd(rec.m_times_rd, rec.power);
  rec.coprime = (rec.gcd_value == 1);
  rec.constraint_power = rec.power;
  rec.constraint_g = p.g;
  rec.combined = rec.power * p.g;
  rec.conclusion = rec.coprime ? "Pic = 0" : "coprimality failed";
  return rec;
}

Verdict no_section_over_M0(const SimpleCyclicParams& p, CharAssumption ch) {
  if (!divides(p.g, p.d)) {
    // No tautological family exists over any open subset, in particular
    // none over M^0.
    return Verdict::yes({rules::taut_family(), rules::no_section_index()});
  }
  Int index = exact_div(p.r * p.g_d, p.g);
  if (index == 1) {
    return Verdict::no({rules::no_section_index()});
  }
  if (p.n == 1 && p.rd >= 8)
    return Verdict::yes({rules::no_section_dim1(), rules::codim_dim1()});
  if (p.n == 2 && p.rd >= 7) {
    if (ch == CharAssumption::Zero || ch == CharAssumption::GreaterThanBound)
      return Verdict::yes({rules::no_section_dim2(), rules::codim_dim2()});
    Int bound = (p.rd - 1) * (p.rd - 2) + 1;
    return Verdict::conditional("char(k) = 0 or char(k) > " + to_str(bound),
                                {rules::no_section_dim2(), rules::codim_dim2()});
  }
  return Verdict::conditional("codim(M - M^0) >= 2", {rules::no_section_index()});
}

GnrRecord gnr_classification(const SimpleCyclicParams& p) {
  if (!divides(p.g, p.d))
    throw HypothesisError(
        "gnr_classification: gcd(rd, n+1) | d is a standing hypothesis");
  return {p.g == 1, p.g};
}

}  // namespace stacky
