#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stackycovers/bigint.hpp"
#include "stackycovers/congruence.hpp"
#include "stackycovers/verdict.hpp"

namespace stacky {

// Parameters of the stack H_{n,r,d}: degree-r simple cyclic covers of P^n
// branched along a divisor of degree rd. The gcd ops below are total;
// rationality and Picard classifiers additionally require rd >= 4 and
// throw DomainError otherwise (or at construction when strict_rd4 is set).
struct SimpleCyclicParams {
  Int n;    // dimension of the base projective space, >= 1
  Int r;    // cover degree, >= 1
  Int d;    // line-bundle degree parameter, >= 1
  Int rd;   // branch degree r*d
  Int g;    // gcd(rd, n+1)
  Int g_d;  // gcd(d, n+1)

  static SimpleCyclicParams make(const Int& n, const Int& r, const Int& d,
                                 bool strict_rd4 = false);
};

// Finite cyclic group presented by one generator det^e and its order.
struct CyclicPresentation {
  Int generator_exponent;
  Int order;  // >= 1; order 1 means the trivial group

  std::string generator_label() const;  // "det^e"
};

struct TautFamilyResult {
  bool exists;
  bool brauer_severi_trivial;
  std::vector<Reason> reasons;
};

struct RationalityResult {
  Verdict verdict;
  bool unirational;  // always true
};

// Arithmetic of the coarse-Picard triviality proof, returned in full so
// the conclusion can be audited step by step.
struct CoarsePicRecord {
  Int m;             // 1 + sum_{i=1..n} (1-rd)^i
  Int m_times_rd;    // m * rd
  Int power;         // (rd-1)^n
  Int gcd_value;     // gcd(m*rd, (rd-1)^n), must be 1
  bool coprime;      // gcd_value == 1
  Int constraint_power;  // (rd-1)^n divides any invariant exponent
  Int constraint_g;      // gcd(rd, n+1) divides any invariant exponent
  Int combined;          // their product, which is the full relation order
  std::string conclusion;
};

enum class CharAssumption { Zero, GreaterThanBound, Unknown };

struct GnrRecord {
  bool simple_cyclic_gnr_exists;
  Int guaranteed_multiple;
};

// A torsor morphism GL(n+1)/mu_{d_from} -> GL(n+1)/mu_{d_to} exists iff
// gcd(d_from, n+1) | d_to; on success also returns the canonical witness
// k with d_from | k(n+1) + d_to.
std::pair<bool, std::optional<CongruenceWitness>> torsor_hom_exists(
    const Int& d_from, const Int& d_to, const Int& n);

Int least_linearized_degree(const SimpleCyclicParams& p);

TautFamilyResult tautological_family_exists(const SimpleCyclicParams& p);

// Requires rd >= 4.
RationalityResult rationality_simple(const SimpleCyclicParams& p);

// Pic of the quotient by GL(n+1)/mu_{kd} for k | r: k = 1 gives the
// stack, k = r gives the rigidification. Order is computed from the
// cyclic lattice quotient, never read off a closed form.
CyclicPresentation pic_quotient(const SimpleCyclicParams& p, const Int& k);
CyclicPresentation pic_stack(const SimpleCyclicParams& p);
CyclicPresentation pic_rigidification(const SimpleCyclicParams& p);

// Index of Pic(quotient by mu_{kd}) inside Pic(stack); k must divide r.
Int pic_index(const SimpleCyclicParams& p, const Int& k);

// Requires rd >= 4.
CoarsePicRecord verify_coarse_pic_trivial(const SimpleCyclicParams& p);

// Yes: no section of the coarse moduli map exists over M^0.
// No: the Picard-index obstruction vanishes (index 1), so these criteria
//     impose nothing; for r = 1 a section exists outright.
// Conditional: the obstruction applies once the named fact holds.
Verdict no_section_over_M0(const SimpleCyclicParams& p, CharAssumption ch);

// Requires gcd(rd, n+1) | d (throws HypothesisError otherwise).
GnrRecord gnr_classification(const SimpleCyclicParams& p);

// The printed list of non-rational (r, rd) pairs with rd <= 48 in
// dimension two, verbatim.
bool in_dim2_nonrational_table(const Int& r, const Int& rd);

}  // namespace stacky
