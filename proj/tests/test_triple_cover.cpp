#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "stackycovers/errors.hpp"
#include "stackycovers/oracle.hpp"
#include "stackycovers/triple_cover.hpp"

using namespace stacky;

namespace {

TripleCoverParams T(long d1, long d2) { return TripleCoverParams::make(d1, d2); }

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != 2 || b.cols() != 2) return false;
  for (std::size_t j = 0; j < 2; ++j) {
    if (!solve_in_lattice(b, {a.at(0, j), a.at(1, j)})) return false;
    if (!solve_in_lattice(a, {b.at(0, j), b.at(1, j)})) return false;
  }
  return true;
}

IntMatrix cols2(long x0, long y0, long x1, long y1) {
  IntMatrix m(2, 2);
  m.at(0, 0) = x0;
  m.at(1, 0) = y0;
  m.at(0, 1) = x1;
  m.at(1, 1) = y1;
  return m;
}

struct Lcg {
  std::uint64_t state;
  explicit Lcg(std::uint64_t seed) : state(seed) {}
  long next(long lo, long hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long>((state >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace

TEST_CASE("parameter validation and derived degrees") {
  CHECK_THROWS_AS(TripleCoverParams::make(2, 2), DomainError);
  CHECK_THROWS_AS(TripleCoverParams::make(10, 4), DomainError);  // l2 = -2
  CHECK_THROWS_AS(TripleCoverParams::make(4, 10), DomainError);  // l1 = -2
  CHECK_THROWS_AS(TripleCoverParams::make(5, 4), DomainError);   // l2 = 3
  TripleCoverParams p = T(5, 6);
  CHECK(p.l1 == 4);
  CHECK(p.l2 == 7);
  // d1 = (2 l1 + l2)/3 and d2 = (l1 + 2 l2)/3 are exact
  for (long d1 = 4; d1 <= 20; ++d1)
    for (long d2 = 4; d2 <= 20; ++d2) {
      if (2 * d1 - d2 < 4 || 2 * d2 - d1 < 4) continue;
      TripleCoverParams q = T(d1, d2);
      CHECK(q.d1 == exact_div(2 * q.l1 + q.l2, 3));
      CHECK(q.d2 == exact_div(q.l1 + 2 * q.l2, 3));
    }
}

TEST_CASE("character lattice of Gamma(a,b)") {
  SUBCASE("even case printed generators") {
    IntMatrix l = gamma_char_lattice(4, 4);
    CHECK(same_lattice(l, cols2(4, 2, 0, 2)));
  }
  SUBCASE("no conditions gives the full lattice") {
    IntMatrix l = gamma_char_lattice(1, 1);
    CHECK(same_lattice(l, cols2(1, 0, 0, 1)));
  }
  SUBCASE("mixed parity case, cross-checked by brute force") {
    IntMatrix l = gamma_char_lattice(5, 4);
    CHECK(same_lattice(l, cols2(4, 12, 0, 5)));
    // Enumerate lattice points in [0,20)^2 and Hermite-reduce them.
    IntMatrix pts(2, 0);
    std::vector<Int> xs, ys;
    for (long x = 0; x < 20; ++x)
      for (long y = 0; y < 20; ++y)
        if (in_gamma_lattice({Int(x), Int(y)}, 5, 4)) {
          xs.push_back(x);
          ys.push_back(y);
        }
    IntMatrix gens(2, xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) {
      gens.at(0, j) = xs[j];
      gens.at(1, j) = ys[j];
    }
    CHECK(same_lattice(hnf2_columns(gens), l));
  }
  SUBCASE("membership is exactly the divisibility condition") {
    Lcg rng(99);
    for (long a = 1; a <= 12; ++a)
      for (long b = 1; b <= 12; ++b) {
        IntMatrix l = gamma_char_lattice(a, b);
        REQUIRE(l.cols() == 2);
        for (int trial = 0; trial < 40; ++trial) {
          long bound = 3 * a * b;
          GammaCharacter chi{Int(rng.next(-bound, bound)), Int(rng.next(-bound, bound))};
          bool member = solve_in_lattice(l, {chi.x, chi.y}).has_value();
          CHECK(member == in_gamma_lattice(chi, a, b));
        }
      }
  }
  SUBCASE("printed parity-case generators span the lattice") {
    for (long d1 = 4; d1 <= 28; ++d1)
      for (long d2 = 4; d2 <= 28; ++d2) {
        long l1 = 2 * d1 - d2, l2 = 2 * d2 - d1;
        if (l1 < 4 || l2 < 4 || l1 > 40 || l2 > 40) continue;
        IntMatrix lat = gamma_char_lattice(l1, l2);
        if (l1 % 2 == 0 && l2 % 2 == 0) {
          CHECK(same_lattice(lat, cols2(l2, l2 / 2, 0, l1 / 2)));
        } else if (l1 % 2 == 1) {
          CHECK(same_lattice(lat, cols2(l2, l2 * (l1 + 1) / 2, 0, l1)));
        }
      }
  }
}

TEST_CASE("homomorphism witnesses") {
  SUBCASE("both even: everything vanishes") {
    CongruenceWitness w = triple_hom_witness(T(4, 4));
    CHECK(w.assignment.at("k1") == 0);
    CHECK(w.assignment.at("k2") == 0);
    CHECK(w.assignment.at("k1p") == 0);
    CHECK(w.assignment.at("k2p") == 0);
    CHECK(w.assignment.at("s") == 1);
    CHECK(w.assignment.at("t") == 1);
  }
  SUBCASE("both odd: zero offsets with odd bound variables") {
    CongruenceWitness w = triple_hom_witness(T(5, 5));
    CHECK(w.assignment.at("k1") == 0);
    CHECK(w.assignment.at("k1p") == 0);
    CHECK(is_odd(w.assignment.at("s")));
    CHECK(is_odd(w.assignment.at("t")));
  }
  SUBCASE("d1 odd, d2 even picks k1 = l2") {
    for (auto [d1, d2] : {std::pair<long, long>{5, 6}, {7, 6}, {9, 8}}) {
      TripleCoverParams p = T(d1, d2);
      CongruenceWitness w = triple_hom_witness(p);
      CHECK(w.assignment.at("k1") == p.l2);
      CHECK(w.assignment.at("k1p") == 0);
    }
  }
  SUBCASE("all four divisibilities hold over the sweep") {
    for (long d1 = 4; d1 <= 24; ++d1)
      for (long d2 = 4; d2 <= 24; ++d2) {
        if (2 * d1 - d2 < 4 || 2 * d2 - d1 < 4) continue;
        TripleCoverParams p = T(d1, d2);
        CongruenceWitness w = triple_hom_witness(p);
        Int k1 = w.assignment.at("k1"), k2 = w.assignment.at("k2");
        Int k1p = w.assignment.at("k1p"), k2p = w.assignment.at("k2p");
        CHECK(divides(p.l1, 2 * k2 - k1 + p.d1));
        CHECK(divides(p.l1, 2 * k2p - k1p + p.d2));
        CHECK(divides(p.l2, k1));
        CHECK(divides(p.l2, k1p));
        CHECK(k1 >= 0);
        CHECK(k2 >= 0);
        for (const auto& [value, modulus] : w.checked) CHECK(divides(modulus, value));
      }
  }
}

TEST_CASE("tautological families always exist; triviality is the parity rule") {
  auto a = tautological_family_triple(T(4, 4));
  CHECK(a.exists);
  CHECK(!a.brauer_severi_trivial);
  auto b = tautological_family_triple(T(5, 6));
  CHECK(b.exists);
  CHECK(b.brauer_severi_trivial);
  auto c = tautological_family_triple(T(5, 5));
  CHECK(c.exists);
  CHECK(c.brauer_severi_trivial);

  SUBCASE("matches the parity-search oracle") {
    for (long d1 = 4; d1 <= 30; ++d1)
      for (long d2 = 4; d2 <= 30; ++d2) {
        if (2 * d1 - d2 < 4 || 2 * d2 - d1 < 4) continue;
        CHECK(tautological_family_triple(T(d1, d2)).brauer_severi_trivial ==
              oracle_parity_solver(d1, d2));
      }
  }
}

TEST_CASE("character pullback") {
  TripleCoverParams p = T(4, 4);
  SUBCASE("printed even-case images") {
    GammaCharacter v1 = pullback_character(p, {4, 2});
    CHECK(v1 == GammaCharacter{8, 2});  // (2 d2, l2/2)
    GammaCharacter v2 = pullback_character(p, {0, 2});
    CHECK(v2 == GammaCharacter{-4, 2});
  }
  SUBCASE("trivial character maps to itself") {
    for (long d1 = 4; d1 <= 10; ++d1)
      for (long d2 = 4; d2 <= 10; ++d2) {
        if (2 * d1 - d2 < 4 || 2 * d2 - d1 < 4) continue;
        CHECK(pullback_character(T(d1, d2), {0, 0}) == GammaCharacter{0, 0});
      }
  }
  SUBCASE("non-members are rejected") {
    CHECK_THROWS_AS(pullback_character(p, {1, 0}), MembershipError);
    CHECK_THROWS_AS(pullback_character(p, {4, 1}), MembershipError);
  }
  SUBCASE("integrality and closure on basis vectors") {
    for (long d1 = 4; d1 <= 22; ++d1)
      for (long d2 = 4; d2 <= 22; ++d2) {
        if (2 * d1 - d2 < 4 || 2 * d2 - d1 < 4) continue;
        TripleCoverParams q = T(d1, d2);
        IntMatrix src = gamma_char_lattice(q.l1, q.l2);
        for (std::size_t j = 0; j < src.cols(); ++j) {
          GammaCharacter im =
              pullback_character(q, {src.at(0, j), src.at(1, j)});
          CHECK(in_gamma_lattice(im, q.d1, q.d2));
        }
      }
  }
}

TEST_CASE("injectivity index") {
  SUBCASE("even-even case reproduces the printed image matrix") {
    InjectivityRecord rec = pic_injectivity_index(T(4, 4));
    REQUIRE(rec.image_in_printed_basis.has_value());
    CHECK(*rec.image_in_printed_basis == cols2(2, -1, -1, 2));
    CHECK(rec.index == 3);
    CHECK(rec.strictly_greater_than_one);
    REQUIRE(rec.det_note.has_value());
    CHECK(rec.det_note->find("3") != std::string::npos);
  }
  SUBCASE("the printed image matrix is constant across even-even pairs") {
    for (long d1 = 4; d1 <= 16; d1 += 2)
      for (long d2 = 4; d2 <= 16; d2 += 2) {
        if (2 * d1 - d2 < 4 || 2 * d2 - d1 < 4) continue;
        InjectivityRecord rec = pic_injectivity_index(T(d1, d2));
        REQUIRE(rec.image_in_printed_basis.has_value());
        CHECK(*rec.image_in_printed_basis == cols2(2, -1, -1, 2));
      }
  }
  SUBCASE("pinned small cases all have index three") {
    CHECK(pic_injectivity_index(T(4, 4)).index == 3);
    CHECK(pic_injectivity_index(T(5, 5)).index == 3);
    CHECK(pic_injectivity_index(T(5, 6)).index == 3);
    CHECK(!pic_injectivity_index(T(5, 6)).image_in_printed_basis.has_value());
  }
  SUBCASE("finite and strictly greater than one across the box") {
    for (long d1 = 4; d1 <= 15; ++d1)
      for (long d2 = 4; d2 <= 15; ++d2) {
        if (2 * d1 - d2 < 4 || 2 * d2 - d1 < 4) continue;
        InjectivityRecord rec = pic_injectivity_index(T(d1, d2));
        CHECK(rec.strictly_greater_than_one);
        CHECK(rec.index > 1);
        // box-count oracle on the image coordinates
        auto boxed = oracle_lattice_index_boxcount(rec.image_in_hnf_basis);
        REQUIRE(boxed.has_value());
        CHECK(*boxed == rec.index);
      }
  }
}

TEST_CASE("no section over the automorphism-free locus") {
  for (auto [d1, d2] : {std::pair<long, long>{4, 4}, {5, 6}, {5, 5}}) {
    Verdict v = no_section_over_M0_triple(T(d1, d2));
    CHECK(v.outcome == Outcome::Yes);
    CHECK(!v.reasons.empty());
  }
}

TEST_CASE("structure flags") {
  TripleStructureFlags a = triple_structure_flags(T(4, 4));
  CHECK(!a.g13_exists);
  CHECK(a.two_g13_exists);
  CHECK(a.unirational);
  CHECK(a.fibered_over_rational_base);
  CHECK(a.fibers_rational_in_char_zero);
  CHECK(triple_structure_flags(T(5, 6)).g13_exists);
  CHECK(triple_structure_flags(T(5, 5)).g13_exists);
}
