#include "beamalign/geometry.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <random>

using namespace beamalign;
using beamalign::testing::grid_equal;
using beamalign::testing::random_arc;
using beamalign::testing::random_region;

TEST_CASE("angle normalization lands in (0, 1]") {
  CHECK(Angle::from_turns(Rat(0)).turns() == 1);
  CHECK(Angle::from_turns(Rat(5, 2)).turns() == Rat(1, 2));
  CHECK(Angle::from_turns(Rat(-1, 4)).turns() == Rat(3, 4));
  CHECK(Angle::from_turns(Rat(1)).turns() == 1);
}

TEST_CASE("arc width handles wrap-around") {
  CHECK(make_arc(Rat(1, 4), Rat(3, 4)).width() == Rat(1, 2));
  CHECK(make_arc(Rat(3, 4), Rat(1, 4)).width() == Rat(1, 2));
  CHECK(make_arc(Rat(9, 10), Rat(1, 10)).width() == Rat(1, 5));
  CHECK_THROWS_AS(make_arc(Rat(1, 4), Rat(1, 4)), std::invalid_argument);
  CHECK_THROWS_AS(make_arc(Rat(0), Rat(1)), std::invalid_argument);  // full circle
}

TEST_CASE("half-open membership") {
  const AngularInterval arc = make_arc(Rat(1, 4), Rat(3, 4));
  CHECK(arc.contains(Angle::from_turns(Rat(3, 4))));
  CHECK_FALSE(arc.contains(Angle::from_turns(Rat(1, 4))));
  const AngularInterval wrap = make_arc(Rat(9, 10), Rat(1, 10));
  CHECK(wrap.contains(Angle::from_turns(Rat(1))));
  CHECK(wrap.contains(Angle::from_turns(Rat(1, 20))));
  CHECK_FALSE(wrap.contains(Angle::from_turns(Rat(1, 2))));
}

TEST_CASE("half space: beam on ACK, complement on NACK") {
  const AngularInterval beam = make_arc(Rat(1, 4), Rat(3, 4));
  CHECK(half_space(beam, true) == AngularRegion::of(beam));
  CHECK(half_space(beam, false) == AngularRegion::of(make_arc(Rat(3, 4), Rat(1, 4))));
  CHECK(half_space(make_arc(Rat(9, 10), Rat(1, 10)), false) ==
        AngularRegion::of(make_arc(Rat(1, 10), Rat(9, 10))));
}

TEST_CASE("intersection basics") {
  const AngularRegion a = AngularRegion::of(make_arc(Rat(0), Rat(1, 2)));
  const AngularRegion b = AngularRegion::of(make_arc(Rat(1, 4), Rat(3, 4)));
  CHECK(intersect(a, b) == AngularRegion::of(make_arc(Rat(1, 4), Rat(1, 2))));
  const AngularRegion c = AngularRegion::of(make_arc(Rat(1, 2), Rat(1)));
  CHECK(intersect(a, c).is_empty());
}

TEST_CASE("intersection of wrapping regions splits into two arcs") {
  const AngularRegion a = AngularRegion::of(make_arc(Rat(9, 10), Rat(3, 10)));
  const AngularRegion b = AngularRegion::of(make_arc(Rat(1, 5), Rat(19, 20)));
  const AngularRegion expected = AngularRegion::from_arcs(
      {make_arc(Rat(9, 10), Rat(19, 20)), make_arc(Rat(1, 5), Rat(3, 10))});
  const AngularRegion got = intersect(a, b);
  CHECK(got == expected);
  CHECK(grid_equal(got, expected));
  REQUIRE(got.arcs().size() == 2);
}

TEST_CASE("unions merge adjacent and wrapped arcs") {
  const AngularRegion r = AngularRegion::from_arcs(
      {make_arc(Rat(3, 4), Rat(1)), make_arc(Rat(0), Rat(1, 4)), make_arc(Rat(1, 4), Rat(2, 4))});
  REQUIRE(r.arcs().size() == 1);
  CHECK(r.arcs().front() == make_arc(Rat(3, 4), Rat(1, 2)));
  CHECK(unite(AngularRegion::of(make_arc(Rat(0), Rat(1, 2))),
              AngularRegion::of(make_arc(Rat(1, 2), Rat(1))))
            .is_full());
}

TEST_CASE("measure + complement measure is exactly one turn") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 2000; ++trial) {
    const AngularRegion r = random_region(rng);
    CHECK(r.measure() + r.complement().measure() == 1);
    CHECK(intersect(r, r.complement()).is_empty());
    CHECK(unite(r, r.complement()).is_full());
  }
}

TEST_CASE("intersect is commutative, associative, idempotent") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 800; ++trial) {
    const AngularRegion a = random_region(rng);
    const AngularRegion b = random_region(rng);
    const AngularRegion c = random_region(rng);
    CHECK(intersect(a, b) == intersect(b, a));
    CHECK(intersect(a, intersect(b, c)) == intersect(intersect(a, b), c));
    CHECK(intersect(a, a) == a);
    CHECK(grid_equal(intersect(a, b), intersect(b, a), 360));
  }
}

TEST_CASE("half spaces of one beam tile the circle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const AngularInterval beam = random_arc(rng);
    const AngularRegion yes = half_space(beam, true);
    const AngularRegion no = half_space(beam, false);
    CHECK(unite(yes, no).is_full());
    CHECK(intersect(yes, no).is_empty());
  }
}

TEST_CASE("partition: single beam gives its two sides") {
  const ComponentBeamLoop loop = partition({make_arc(Rat(0), Rat(1, 2))});
  REQUIRE(loop.size() == 2);
  CHECK(loop.cell(0) == make_arc(Rat(1, 2), Rat(1)));
  CHECK(loop.cell(1) == make_arc(Rat(0), Rat(1, 2)));
}

TEST_CASE("partition deduplicates repeated beams") {
  const AngularInterval beam = make_arc(Rat(0), Rat(1, 2));
  const ComponentBeamLoop once = partition({beam});
  const ComponentBeamLoop twice = partition({beam, beam});
  REQUIRE(once.size() == twice.size());
  for (std::size_t k = 0; k < once.size(); ++k) CHECK(once.cell(k) == twice.cell(k));
}

TEST_CASE("partition of the demo beams yields ten abutting cells") {
  std::vector<AngularInterval> beams;
  const ScanningBeamSet set = beamalign::testing::demo_beamset_b4_d3();
  for (const auto& level : set.levels())
    for (const auto& [prefix, beam] : level) beams.push_back(beam);
  const ComponentBeamLoop loop = partition(beams);
  REQUIRE(loop.size() == 10);
  Rat total = 0;
  // cells start at the smallest endpoint 1/10 and wrap back to it
  for (std::size_t k = 0; k < loop.size(); ++k) {
    const int j = static_cast<int>(k);
    CHECK(loop.cell(k) == make_arc(Rat(j + 1, 10), Rat(j + 2, 10)));
    total += loop.cell(k).width();
  }
  CHECK(total == 1);
}

TEST_CASE("every input beam is a union of consecutive partition cells") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> count_dist(1, 5);
    std::vector<AngularInterval> beams;
    const int count = count_dist(rng);
    for (int k = 0; k < count; ++k) beams.push_back(random_arc(rng));
    const ComponentBeamLoop loop = partition(beams);
    const std::size_t n = loop.size();
    for (const auto& beam : beams) {
      std::vector<bool> inside(n);
      for (std::size_t k = 0; k < n; ++k) inside[k] = beam.contains(midpoint(loop.cell(k)));
      // member cells must be cyclically consecutive
      int boundaries = 0;
      std::vector<AngularInterval> members;
      for (std::size_t k = 0; k < n; ++k) {
        boundaries += inside[k] != inside[(k + 1) % n];
        if (inside[k]) members.push_back(loop.cell(k));
      }
      CHECK(boundaries == 2);
      CHECK(AngularRegion::from_arcs(members) == AngularRegion::of(beam));
    }
  }
}
