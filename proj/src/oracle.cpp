#include "stackycovers/oracle.hpp"

#include <set>
#include <utility>

#include "stackycovers/errors.hpp"

namespace stacky {

long long SweepBox::simple_count() const {
  auto span = [](long long lo, long long hi) { return hi >= lo ? hi - lo + 1 : 0; };
  return span(n_lo, n_hi) * span(r_lo, r_hi) * span(d_lo, d_hi);
}

long long SweepBox::triple_count() const {
  auto span = [](long long lo, long long hi) { return hi >= lo ? hi - lo + 1 : 0; };
  return span(d1_lo, d1_hi) * span(d2_lo, d2_hi);
}

void SweepBox::validate() const {
  if (n_lo < 1 || r_lo < 1 || d_lo < 1 || d1_lo < 1 || d2_lo < 1)
    throw DomainError("sweep box: all parameters start at 1");
  long long total = simple_count() + triple_count();
  if (total > cap)
    throw CapExceededError("sweep box: " + std::to_string(total) +
                           " tuples exceed the cap of " + std::to_string(cap));
}

std::optional<Int> oracle_torsor_witness(const Int& d_from, const Int& d_to,
                                         const Int& n) {
  for (Int k = 0; k < d_from; ++k)
    if (divides(d_from, k * (n + 1) + d_to)) return k;
  return std::nullopt;
}

Int oracle_cyclic_quotient_order(const Int& gen_exponent, const Int& relation_exponent,
                                 long long cap) {
  if (relation_exponent < 1 || gen_exponent < 1)
    throw DomainError("oracle_cyclic_quotient_order: positive inputs required");
  Int step = mod_floor(gen_exponent, relation_exponent);
  Int cur = step;
  long long count = 1;
  while (cur != 0) {
    cur += step;
    if (cur >= relation_exponent) cur -= relation_exponent;
    ++count;
    if (count > cap)
      throw CapExceededError("oracle_cyclic_quotient_order: orbit exceeds cap");
  }
  return Int(static_cast<long>(count));
}

std::optional<Int> oracle_lattice_index_boxcount(const IntMatrix& sub) {
  if (sub.rows() != 2) throw DomainError("oracle_lattice_index_boxcount: 2-D only");
  IntMatrix h = hnf2_columns(sub);
  if (h.cols() < 2) return std::nullopt;
  const Int h00 = h.at(0, 0), h10 = h.at(1, 0), h11 = h.at(1, 1);
  Int side = 2 * sub.max_abs_entry() + 1;
  std::set<std::pair<Int, Int>> reps;
  for (Int x = 0; x < side; ++x) {
    for (Int y = 0; y < side; ++y) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), h00.get_mpz_t());
      Int rx = x - q * h00;
      Int ry = mod_floor(y - q * h10, h11);
      reps.emplace(rx, ry);
    }
  }
  return Int(static_cast<unsigned long>(reps.size()));
}

bool oracle_parity_solver(const Int& d1, const Int& d2) {
  for (int s = 0; s <= 1; ++s)
    for (int t = 0; t <= 1; ++t)
      if (is_even(s * d2 + t * d1 + 1)) return true;
  return false;
}

}  // namespace stacky
