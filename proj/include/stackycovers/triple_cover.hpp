#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stackycovers/bigint.hpp"
#include "stackycovers/congruence.hpp"
#include "stackycovers/int_matrix.hpp"
#include "stackycovers/verdict.hpp"

namespace stacky {

// Parameters of the stack H_{1,3,d1,d2} of cyclic triple covers of P^1
// with branch divisors of degrees l1 = 2d1 - d2 and l2 = 2d2 - d1. Both
// l_i >= 4 is a standing assumption; the degenerate l_i = 0 cases are
// simple cyclic covers and belong to the simple_cyclic module.
struct TripleCoverParams {
  Int d1, d2;
  Int l1, l2;

  static TripleCoverParams make(const Int& d1, const Int& d2);
};

// A character of Gamma(a,b) in exponent coordinates: x on the scalar
// coordinate e1, y on the determinant coordinate e2. Membership in the
// character lattice of Gamma(a,b) means b | x and a | 2y - x.
struct GammaCharacter {
  Int x, y;

  bool operator==(const GammaCharacter&) const = default;
};

bool in_gamma_lattice(const GammaCharacter& chi, const Int& a, const Int& b);

// Hermite-reduced basis (columns) of the character lattice of Gamma(a,b),
// computed from the divisibility conditions by a kernel computation, with
// no parity case split.
IntMatrix gamma_char_lattice(const Int& a, const Int& b);

// Witness (k1, k2, k1', k2', s, t) for the homomorphism
// Gamma(l1,l2) -> Gamma(d1,d2): the four divisibilities
// l1 | 2k2-k1+d1, l1 | 2k2'-k1'+d2, l2 | k1, l2 | k1' hold, with
// s, t the exact quotients of the first two by l1. Canonical choice:
// lexicographically smallest nonnegative (k1, k2) and (k1', k2').
CongruenceWitness triple_hom_witness(const TripleCoverParams& p);

struct TripleTautResult {
  bool exists;  // always true
  bool brauer_severi_trivial;
  std::vector<Reason> reasons;
};

TripleTautResult tautological_family_triple(const TripleCoverParams& p);

// Pullback of a character of Gamma(l1,l2) to Gamma(d1,d2):
// (x, y) -> (d2*((x-2y)/l1 + 2x/l2), y). Both divisions are exact on
// lattice members; MembershipError otherwise.
GammaCharacter pullback_character(const TripleCoverParams& p, const GammaCharacter& chi);

struct InjectivityRecord {
  Int index;
  bool strictly_greater_than_one;
  // Images of the Hermite basis of the source lattice, written in the
  // Hermite basis of the target lattice.
  IntMatrix image_in_hnf_basis;
  // When d1, d2 are both even the printed generators
  // v1 = (l2, l2/2), v2 = (0, l1/2) / u1 = (d2, d2/2), u2 = (0, d1/2)
  // apply; the image matrix in those coordinates is reported, along with
  // a note on its determinant.
  std::optional<IntMatrix> image_in_printed_basis;
  std::optional<std::string> det_note;
};

// Index of the pulled-back character lattice of Gamma(l1,l2) inside the
// character lattice of Gamma(d1,d2). Throws InjectivityFailure if the
// index is infinite, which would contradict strict injectivity.
InjectivityRecord pic_injectivity_index(const TripleCoverParams& p);

Verdict no_section_over_M0_triple(const TripleCoverParams& p);

struct TripleStructureFlags {
  bool unirational = true;
  bool fibered_over_rational_base = true;
  bool fibers_rational_in_char_zero = true;
  bool g13_exists = false;  // iff d1 or d2 is odd
  bool two_g13_exists = true;
};

TripleStructureFlags triple_structure_flags(const TripleCoverParams& p);

}  // namespace stacky
