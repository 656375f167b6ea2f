#pragma once

#include "stackycovers/verdict.hpp"

namespace stacky::rules {

// Stable rule ids and the criteria they stand for. Verdict reason chains
// and verify-report anchors both draw from this table.

inline Reason torsor() {
  return {"torsor-criterion",
          "a torsor morphism GL(n+1)/mu_d -> GL(n+1)/mu_d' exists iff "
          "gcd(d, n+1) | d', witnessed by d | k(n+1) + d'"};
}

inline Reason least_linearized() {
  return {"least-linearized-degree",
          "the least fibrewise degree of a line bundle on the universal "
          "Brauer-Severi scheme is gcd(rd, n+1)"};
}

inline Reason taut_family() {
  return {"taut-family-criterion",
          "a tautological family exists over an open subset of M_{n,r,d} iff "
          "gcd(rd, n+1) | d"};
}

inline Reason bs_trivial() {
  return {"brauer-severi-trivial",
          "the Brauer-Severi scheme of the tautological family is Zariski "
          "locally trivial iff gcd(rd, n+1) = 1"};
}

inline Reason unirational() {
  return {"unirational", "H_{n,r,d} and M_{n,r,d} are always unirational"};
}

inline Reason not_rational_no_family() {
  return {"no-family-not-rational",
          "if gcd(rd, n+1) does not divide d, the stack H_{n,r,d} is not rational"};
}

inline Reason rational_iff_coarse() {
  return {"rational-iff-coarse",
          "when a tautological family exists, H_{n,r,d} is rational iff "
          "M_{n,r,d} is rational"};
}

inline Reason rationality_dim1() {
  return {"rationality-dim1",
          "for rd >= 4, H_{1,r,d} is rational iff rd is odd or d is even"};
}

inline Reason rationality_dim2_large() {
  return {"rationality-dim2-large",
          "for rd >= 49, H_{2,r,d} is rational iff 3 | d or 3 does not divide rd"};
}

inline Reason rationality_dim2_table() {
  return {"rationality-dim2-table",
          "(r, rd) lies in the finite list of non-rational pairs with rd <= 48"};
}

inline Reason rationality_dim2_open() {
  return {"rationality-dim2-open",
          "for rd <= 48 with a tautological family, H_{2,r,d} is rational iff "
          "the moduli C(2, rd) of plane curves of degree rd is rational"};
}

inline Reason pic_stack() {
  return {"pic-stack",
          "Pic(H_{n,r,d}) is cyclic, generated by det^(d/gcd(d,n+1)) subject "
          "to det^(rd(rd-1)^n) = id"};
}

inline Reason pic_quotient() {
  return {"pic-quotient",
          "Pic([A_sm(n,rd)/(GL(n+1)/mu_kd)]) is cyclic, generated by "
          "det^(kd/gcd(kd,n+1)) subject to det^(rd(rd-1)^n) = id"};
}

inline Reason pic_index() {
  return {"pic-index",
          "the comparison map into Pic(H_{n,r,d}) is injective of index "
          "k*gcd(d,n+1)/gcd(kd,n+1)"};
}

inline Reason coarse_pic() {
  return {"coarse-pic-trivial", "Pic(M_{n,r,d}) = 0 whenever rd >= 4"};
}

inline Reason no_section_dim1() {
  return {"no-section-dim1",
          "no tautological family extends over M^0_{1,r,d} once rd >= 8"};
}

inline Reason no_section_dim2() {
  return {"no-section-dim2",
          "no tautological family extends over M^0_{2,r,d} once rd >= 7, in "
          "characteristic 0 or > (rd-1)(rd-2)+1"};
}

inline Reason no_section_index() {
  return {"no-section-index",
          "if r*gcd(d,n+1)/gcd(rd,n+1) > 1 and M - M^0 has codimension >= 2, "
          "no section exists over M^0"};
}

inline Reason codim_dim1() {
  return {"codim-dim1",
          "the locus with extra automorphisms has codimension >= 2 in "
          "M_{1,r,d} for rd >= 8"};
}

inline Reason codim_dim2() {
  return {"codim-dim2",
          "the locus with extra automorphisms has codimension >= 2 in "
          "M_{2,r,d} for rd >= 7, in characteristic 0 or > (rd-1)(rd-2)+1"};
}

inline Reason gnr() {
  return {"gnr-classification",
          "given gcd(rd,n+1) | d, a simple cyclic G^n_r exists iff "
          "gcd(rd,n+1) = 1, and a gcd(rd,n+1)G^n_r always exists"};
}

inline Reason triple_taut() {
  return {"triple-taut-family",
          "a tautological family of cyclic triple covers always exists over "
          "an open subset of M_{1,3,d1,d2}"};
}

inline Reason zlt13() {
  return {"triple-bs-parity",
          "the Brauer-Severi scheme is Zariski locally trivial iff d1 or d2 "
          "is odd, i.e. s*d2 + t*d1 + 1 is even for some integers s, t"};
}

inline Reason triple_hom() {
  return {"triple-hom-witness",
          "homomorphisms Gamma(l1,l2) -> Gamma(d1,d2) over PGL_2 exist, "
          "witnessed by l1 | 2k2-k1+d1, l1 | 2k2'-k1'+d2, l2 | k1, l2 | k1'"};
}

inline Reason gamma_lattice() {
  return {"gamma-char-lattice",
          "characters of Gamma(a,b) are the pairs (x,y) with b | x and "
          "a | 2y - x"};
}

inline Reason pullback() {
  return {"char-pullback",
          "the pullback of characters sends (x,y) to "
          "(d2*((x-2y)/l1 + 2x/l2), y)"};
}

inline Reason inj_index() {
  return {"pic-injectivity-index",
          "the pullback Pic(D_{1,3,d1,d2}) -> Pic(H_{1,3,d1,d2}) is injective "
          "of finite index > 1"};
}

inline Reason codim_triple() {
  return {"codim-triple",
          "the locus with extra automorphisms has codimension >= 2 in "
          "M_{1,3,d1,d2}"};
}

inline Reason no_section_triple() {
  return {"no-section-triple",
          "no tautological section exists over M^0_{1,3,d1,d2}"};
}

inline Reason triple_structure() {
  return {"triple-structure",
          "M_{1,3,d1,d2} is unirational and fibred over a rational base by "
          "homogeneous fibres, rational when char(k) = 0"};
}

inline Reason triple_gnr() {
  return {"triple-gnr",
          "a cyclic G^1_3 on a tautological family exists iff d1 or d2 is "
          "odd; a cyclic 2G^1_3 always exists"};
}

inline Reason strata_dim1() {
  return {"strata-dim1",
          "the fixed-order-p stratum with i marked ramification points has "
          "dimension (rd-i)/p - 1 inside M_{1,r,d} of dimension rd-3"};
}

inline Reason strata_dim2() {
  return {"strata-dim2",
          "plane curves of degree d with a cyclic automorphism of prime "
          "order m stratify into six cases with the recorded dimensions and "
          "upper bounds"};
}

}  // namespace stacky::rules
