#pragma once

#include <optional>

#include "stackycovers/bigint.hpp"
#include "stackycovers/int_matrix.hpp"

namespace stacky {

inline constexpr long long kDefaultEnumerationCap = 10'000'000;

// Inclusive parameter ranges for the exhaustive sweeps, with a hard cap
// on the number of enumerated tuples.
struct SweepBox {
  long long n_lo = 1, n_hi = 6;
  long long r_lo = 1, r_hi = 12;
  long long d_lo = 1, d_hi = 12;
  long long d1_lo = 1, d1_hi = 50;
  long long d2_lo = 1, d2_hi = 50;
  long long cap = kDefaultEnumerationCap;

  long long simple_count() const;
  long long triple_count() const;
  // Throws CapExceededError when the total tuple count exceeds the cap.
  void validate() const;
};

// Least k in [0, d_from) with d_from | k(n+1) + d_to, by exhaustive
// search; the condition is periodic in k with period dividing d_from, so
// this range is complete.
std::optional<Int> oracle_torsor_witness(const Int& d_from, const Int& d_to,
                                         const Int& n);

// Order of the image of gen*Z in Z/relation by direct orbit enumeration.
// Throws CapExceededError when the orbit exceeds the cap.
Int oracle_cyclic_quotient_order(const Int& gen_exponent, const Int& relation_exponent,
                                 long long cap = kDefaultEnumerationCap);

// Coset count of a 2-dimensional sublattice in Z^2 over a fundamental box
// of side 2*max|entry| + 1, via residue canonicalization. nullopt when
// the basis is rank deficient ("infinite").
std::optional<Int> oracle_lattice_index_boxcount(const IntMatrix& sub);

// True iff some s, t in {0,1} make s*d2 + t*d1 + 1 even.
bool oracle_parity_solver(const Int& d1, const Int& d2);

}  // namespace stacky
