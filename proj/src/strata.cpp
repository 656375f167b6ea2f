#include "stackycovers/strata.hpp"

#include "stackycovers/errors.hpp"

namespace stacky {

namespace {

bool is_prime(const Int& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 32) != 0;
}

std::vector<Int> primes_up_to(const Int& n) {
  std::vector<Int> ps;
  for (Int p = 2; p <= n; ++p)
    if (is_prime(p)) ps.push_back(p);
  return ps;
}

}  // namespace

P1Report aut_locus_codim_p1(const Int& rd) {
  if (rd < 4) throw DomainError("aut_locus_codim_p1: requires rd >= 4");
  P1Report rep;
  rep.rd = rd;
  rep.ambient_dim = rd - 3;
  rep.max_stratum_dim = 0;
  bool any = false;
  for (const Int& p : primes_up_to(rd)) {
    for (int i = 0; i <= 2; ++i) {
      if (!divides(p, rd - i)) continue;
      StratumP1 s;
      s.rd = rd;
      s.p = p;
      s.i = i;
      s.dim = exact_div(rd - i, p) - 1;
      s.empty = (s.dim < 0);
      if (!s.empty && (!any || s.dim > rep.max_stratum_dim)) {
        rep.max_stratum_dim = s.dim;
        any = true;
      }
      rep.strata.push_back(std::move(s));
    }
  }
  rep.codim = rep.ambient_dim - rep.max_stratum_dim;
  rep.codim_at_least_two = (rep.codim >= 2);
  rep.stated_guarantee = (rd >= 8);
  return rep;
}

P2Report aut_locus_codim_p2(const Int& d) {
  if (d < 4) throw DomainError("aut_locus_codim_p2: requires d >= 4");
  P2Report rep;
  rep.d = d;
  Int half = exact_div((d + 2) * (d + 1), 2);
  rep.ambient_dim = half + kP2AmbientOffsetPrinted;
  rep.ambient_dim_standard = half + kP2AmbientOffsetStandard;
  rep.ambient_note =
      "the recorded ambient constant (d+2)(d+1)/2 - 8 exceeds the standard "
      "projective count by one; codimension-2 verdicts compare against the "
      "standard count";
  rep.char_assumption = "char(k) = 0 or char(k) > " + to_str((d - 1) * (d - 2) + 1);
  rep.codim_at_least_two = true;

  auto push = [&](StratumP2 s) {
    // Exact comparison first; the integer field is the floored bound.
    Rat threshold(rep.ambient_dim_standard - 2);
    s.violates_codim2 = (s.bound_exact > threshold);
    Int floored;
    mpz_fdiv_q(floored.get_mpz_t(), s.bound_exact.get_num().get_mpz_t(),
               s.bound_exact.get_den().get_mpz_t());
    s.dim_or_bound = floored;
    s.codim_printed = rep.ambient_dim - floored;
    s.codim_standard = rep.ambient_dim_standard - floored;
    if (s.violates_codim2) rep.codim_at_least_two = false;
    rep.per_case.push_back(std::move(s));
  };

  // Cases 1 and 2: exact dimensions m*k*(k-1)/2 + 2k + d over primes
  // dividing d-1 resp. d.
  for (int c = 1; c <= 2; ++c) {
    Int target = (c == 1) ? d - 1 : d;
    for (const Int& m : primes_up_to(target)) {
      if (!divides(m, target)) continue;
      Int k = exact_div(target, m);
      StratumP2 s;
      s.case_id = c;
      s.m = m;
      s.k = k;
      s.params = (c == 1 ? "d-1 = mk, m = " : "d = mk, m = ") + to_str(m) +
                 ", k = " + to_str(k);
      Int dim = exact_div(m * k * (k - 1), 2) + 2 * k + d;
      s.bound_exact = Rat(dim);
      s.is_upper_bound = false;
      push(std::move(s));
    }
  }

  // Case 3: bound (3/m) * sum_{j=2}^{d-2} (j+1) = (3/m)(d^2-d-6)/2 over
  // primes m >= 3 dividing (d-1)(d-2).
  {
    Int disc = (d - 1) * (d - 2);
    for (const Int& m : primes_up_to(disc)) {
      if (m < 3 || !divides(m, disc)) continue;
      StratumP2 s;
      s.case_id = 3;
      s.m = m;
      s.k = 0;
      s.params = "m | (d-1)(d-2), m = " + to_str(m) + ", (a,b) in Gamma_m";
      s.bound_exact = Rat(3 * (d * d - d - 6)) / Rat(2 * m);
      s.is_upper_bound = true;
      push(std::move(s));
    }
  }

  // Cases 4-6: uniform bound (1/3)(sum_{j=2}^{d-2}(j+1) + 3d - 8)
  // = (d^2+5d-22)/6, independent of m >= 3.
  for (int c = 4; c <= 6; ++c) {
    StratumP2 s;
    s.case_id = c;
    s.m = 0;
    s.k = 0;
    s.params = "all primes m >= 3, (a,b) in Gamma_m";
    s.bound_exact = Rat(d * d + 5 * d - 22) / Rat(6);
    s.is_upper_bound = true;
    push(std::move(s));
  }

  return rep;
}

}  // namespace stacky
