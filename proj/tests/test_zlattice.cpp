#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "algdyn/zlattice.hpp"
#include "support.hpp"

using namespace algdyn;
using testsupport::rand_matrix;
using testsupport::rand_range;

TEST_CASE("lattice construction") {
  IMat b(2, 2);
  b << Int(2), Int(1), Int(0), Int(3);
  Lattice L(b);
  CHECK(L.dim() == 2);
  CHECK(L.index() == 6);
  CHECK(scaled_lattice(3, Int(2)).index() == 8);
  CHECK_THROWS(Lattice(IMat(IMat::Zero(2, 2))));
  CHECK_THROWS(Lattice(IMat(IMat::Zero(2, 3))));
}

TEST_CASE("quotient group invariant factors") {
  IMat b(2, 2);
  b << Int(2), Int(0), Int(0), Int(3);
  CHECK(quotient_group(Lattice(b)).invariant_factors == std::vector<Int>{Int(6)});

  IMat c(2, 2);
  c << Int(2), Int(0), Int(0), Int(2);
  CHECK(quotient_group(Lattice(c)).invariant_factors == std::vector<Int>{Int(2), Int(2)});

  IMat d(2, 2);
  d << Int(2), Int(1), Int(0), Int(3);
  CHECK(quotient_group(Lattice(d)).invariant_factors == std::vector<Int>{Int(6)});

  CHECK(quotient_group(scaled_lattice(1, Int(1))).trivial());
  FiniteAbelianGroup g = quotient_group(scaled_lattice(2, Int(4)));
  CHECK(g.order() == 16);
  CHECK(to_string(g) == "[4,4]");
  CHECK(dual_group(g) == g);
}

TEST_CASE("coset representatives in the documented order") {
  auto reps = coset_reps(scaled_lattice(2, Int(2)));
  REQUIRE(reps.size() == 4);
  CHECK(reps[0] == Exponent{0, 0});
  CHECK(reps[1] == Exponent{0, 1});
  CHECK(reps[2] == Exponent{1, 0});
  CHECK(reps[3] == Exponent{1, 1});
}

TEST_CASE("coset table reduce and index round trip") {
  std::mt19937 rng(9201);
  for (int trial = 0; trial < 30; ++trial) {
    Index d = static_cast<Index>(rand_range(rng, 1, 3));
    IMat b;
    do {
      b = rand_matrix(rng, d, d, -4, 4);
    } while (bareiss_determinant(b) == 0);
    Lattice L(b);
    if (L.index() > 200) continue;
    CosetTable tab(L);
    CHECK(Int(tab.size()) == L.index());

    std::set<std::vector<Int>> seen;
    for (Index i = 0; i < tab.size(); ++i) {
      IVec r = to_ivec(tab.reps()[i]);
      CHECK(exact_equal(IVec(tab.reduce(r)), r));
      CHECK(tab.index_of(r) == i);
      seen.insert(testsupport::ivec_to_vec(r));
    }
    CHECK(Int(seen.size()) == L.index());

    for (int probe = 0; probe < 10; ++probe) {
      IVec x(d);
      for (Index i = 0; i < d; ++i) x(i) = Int(rand_range(rng, -20, 20));
      IVec r = tab.reduce(x);
      // difference lies in the lattice
      IVec diff = x - r;
      IMat aug(d, b.cols() + 1);
      aug.leftCols(b.cols()) = b;
      aug.col(b.cols()) = diff;
      CHECK(lattice_span_equal<Int>(aug, b));
      CHECK(exact_equal(IVec(tab.reduce(r)), r));
      IVec shifted = x + IVec(b.col(static_cast<Index>(rand_range(rng, 0, d - 1))));
      CHECK(tab.index_of_general(shifted) == tab.index_of_general(x));
    }
  }
}

TEST_CASE("characters are exactly the dual group") {
  FiniteAbelianGroup g{{Int(2), Int(4)}};
  auto chars = all_characters(g);
  auto elems = group_elements(g);
  CHECK(chars.size() == 8);
  CHECK(elems.size() == 8);

  std::set<std::vector<Rat>> tables;
  for (const auto& chi : chars) {
    std::vector<Rat> table;
    for (const auto& x : elems) table.push_back(character_value(chi, x));
    tables.insert(table);
  }
  CHECK(tables.size() == 8);
}

TEST_CASE("character values are additive mod 1") {
  FiniteAbelianGroup g{{Int(3), Int(6)}};
  auto chars = all_characters(g);
  auto elems = group_elements(g);
  std::mt19937 rng(9202);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& chi = chars[rng() % chars.size()];
    const auto& x = elems[rng() % elems.size()];
    const auto& y = elems[rng() % elems.size()];
    std::vector<Int> xy;
    for (std::size_t i = 0; i < x.size(); ++i)
      xy.push_back((x[i] + y[i]) % g.invariant_factors[i]);
    Rat sum = character_value(chi, x) + character_value(chi, y);
    if (sum >= 1) sum -= 1;
    CHECK(character_value(chi, xy) == sum);
  }
}

TEST_CASE("nontrivial characters hit every phase class equally often") {
  // exact substitute for the orthogonality relation: for a nontrivial
  // character the phase multiset is uniform over multiples of 1/m, so the
  // complex sum vanishes
  FiniteAbelianGroup g{{Int(2), Int(6)}};
  auto elems = group_elements(g);
  for (const auto& chi : all_characters(g)) {
    std::map<Rat, int> counts;
    for (const auto& x : elems) counts[character_value(chi, x)]++;
    if (counts.size() == 1) continue;  // trivial character
    int first = counts.begin()->second;
    for (const auto& [phase, n] : counts) CHECK(n == first);
  }
}

TEST_CASE("matrix text round trip") {
  for (const char* text : {"2,1;0,3", "5", "1,0;0,1", "-2,7;4,-9", "1,2,3;4,5,6"}) {
    IMat m = parse_matrix(text);
    CHECK(matrix_to_string(m) == text);
  }
  CHECK_THROWS_AS(parse_matrix("1,2;3"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1,x;3,4"), ParseError);
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
}

TEST_CASE("group element enumeration matches the order") {
  FiniteAbelianGroup g{{Int(2), Int(3), Int(3)}};
  auto elems = group_elements(g);
  CHECK(Int(elems.size()) == g.order());
  std::set<std::vector<Int>> uniq(elems.begin(), elems.end());
  CHECK(uniq.size() == elems.size());
}
