#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "multicross/decompose.hpp"
#include "multicross/families.hpp"
#include "multicross/seifert.hpp"
#include "oracles.hpp"

using namespace multicross;

TEST_CASE("trefoil smooths to two circles") {
  OrientedDiagram trefoil = braid_closure(2, {1, 1, 1});
  SeifertState s = smooth(trefoil.diagram, trefoil.orientation);
  CHECK(s.count() == 2);
  CHECK(s.count() == test::brute_circle_count(trefoil.diagram, trefoil.orientation));
  CHECK(genus_of_diagram(trefoil.diagram, trefoil.orientation) == 1);
}

TEST_CASE("figure-eight smooths to three circles") {
  OrientedDiagram fig8 = braid_closure(3, {1, -2, 1, -2});
  CHECK(fig8.diagram.crossing_count() == 4);
  CHECK(fig8.diagram.component_count() == 1);
  SeifertState s = smooth(fig8.diagram, fig8.orientation);
  CHECK(s.count() == 3);
  CHECK(s.count() == test::brute_circle_count(fig8.diagram, fig8.orientation));
  CHECK(genus_of_diagram(fig8.diagram, fig8.orientation) == 1);
}

TEST_CASE("a braid closure smooths to one circle per strand") {
  for (int width : {2, 3, 4}) {
    std::vector<int> word;
    for (int r = 0; r < 5; ++r)
      for (int i = 1; i < width; ++i) word.push_back(r % 2 ? i : -i);
    OrientedDiagram d = braid_closure(width, word);
    CHECK(smooth(d.diagram, d.orientation).count() == width);
  }
}

TEST_CASE("crossing-free diagrams smooth to their components") {
  MulticrossingDiagram unlink = MulticrossingDiagram::parse("O\nO\n");
  CHECK(smooth(unlink, Orientation{}).count() == 2);
  MulticrossingDiagram unknot = MulticrossingDiagram::parse("O\n");
  CHECK(smooth(unknot, Orientation{}).count() == 1);
  CHECK(genus_of_diagram(unknot, Orientation{}) == 0);
}

TEST_CASE("genus formula") {
  CHECK(canonical_genus(3, 2, 1) == 1);   // trefoil
  CHECK(canonical_genus(4, 3, 1) == 1);   // figure-eight
  CHECK(canonical_genus(0, 1, 1) == 0);   // round unknot
  CHECK(canonical_genus(13, 2, 1) == 6);  // T(2,13) standard diagram
  CHECK_THROWS_AS(canonical_genus(3, 2, 2), Error);  // odd numerator
}

TEST_CASE("smoothing requires a consistent orientation") {
  OrientedDiagram trefoil = braid_closure(2, {1, 1, 1});
  Orientation broken = trefoil.orientation;
  broken[0] ^= 1;
  CHECK_THROWS_AS(smooth(trefoil.diagram, broken), Error);
  CHECK_THROWS_AS(smooth(trefoil.diagram, Orientation{}), Error);
}

TEST_CASE("odd-order diagrams cannot be smoothed directly") {
  MulticrossingDiagram d = necklace(1, 2);
  CHECK_THROWS_AS(smooth(d, orient_components(d)), Error);
}

TEST_CASE("circle count ignores over-under levels") {
  std::mt19937 rng(test::test_seed());
  for (int q : {3, 5, 7}) {
    OrientedDiagram t = torus2(q);
    int base = smooth(t.diagram, t.orientation).count();
    // flip all levels
    std::vector<Crossing> flipped = t.diagram.crossings();
    for (Crossing& c : flipped)
      for (int& level : c.levels) level = 3 - level;
    MulticrossingDiagram mirrored = MulticrossingDiagram::from_crossings(std::move(flipped));
    CHECK(smooth(mirrored, t.orientation).count() == base);
  }
  (void)rng;
}

TEST_CASE("torus closures have the expected genus") {
  for (int q : {3, 5, 7, 9, 11}) {
    OrientedDiagram t = torus2(q);
    CHECK(t.diagram.component_count() == 1);
    CHECK(smooth(t.diagram, t.orientation).count() == 2);
    CHECK(genus_of_diagram(t.diagram, t.orientation) == (q - 1) / 2);
  }
}

TEST_CASE("decomposed odd diagrams satisfy the genus inequality") {
  for (const MulticrossingDiagram& d :
       {necklace(1, 2), necklace(1, 4), necklace(2, 1), necklace(2, 3), necklace(3, 1), nested_loops3(),
        petal({1, 3, 5, 2, 4})}) {
    OrientedColoredDiagram ocd = impose_piecewise_natural(d);
    DecomposedDiagram dec = decompose_diagram(ocd, Target::majority);
    long long k = dec.k, n = dec.original_crossings, r = d.component_count();
    long long genus = genus_of_diagram(dec.diagram, dec.orientation);
    CHECK(2 * genus <= k * k * n - r + 1);
    CHECK(genus >= 0);
  }
}
