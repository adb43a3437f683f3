#include <catch2/catch_amalgamated.hpp>

#include "chekanov/disks.hpp"
#include "chekanov/front.hpp"
#include "helpers.hpp"

using namespace chek;

namespace {
FrontDiagram unknot_front() {
  FrontDiagram f;
  f.events = {{'L', 1, ""}, {'R', 1, "a0"}};
  return f;
}
}  // namespace

TEST_CASE("unknot resolves to the one-crossing diagram") {
  auto res = resolve_front(unknot_front());
  const auto& d = res.diagram;
  REQUIRE(d.num_crossings() == 1);
  CHECK(d.crossing(0).name == "a0");
  CHECK(d.crossing(0).degree == 1);
  CHECK(d.num_faces() == 3);  // two lobes plus outer
  CHECK(d.euler_ok());
  CHECK(d.writhe() == -1);
  CHECK(res.front_components == 1);
  CHECK(d.outer_faces().size() == 1);
}

TEST_CASE("unknot geometry: heights and areas are exact and consistent") {
  auto res = resolve_front(unknot_front());
  const auto& d = res.diagram;
  REQUIRE(d.has_heights());
  REQUIRE(d.has_areas());
  REQUIRE(d.height(0).has_value());
  CHECK(*d.height(0) > Rat(0));
  // both lobes are disks with the single positive corner: area = h(a0)
  auto disks = enumerate_disks(d, 0);
  REQUIRE(disks.size() == 2);
  for (const auto& disk : disks) {
    REQUIRE(disk.area.has_value());
    CHECK(*disk.area == *d.height(0));
    CHECK(disk.corners.empty());
    // cross-check against face multiplicities
    auto mult = disk_face_multiplicities(d, disk);
    Rat total(0);
    for (int fc = 0; fc < d.num_faces(); ++fc) {
      if (mult[fc] == 0) continue;
      REQUIRE(d.area(fc).has_value());
      total += Rat(mult[fc]) * *d.area(fc);
    }
    CHECK(total == *disk.area);
  }
}

TEST_CASE("unknot differential: two monogons cancel") {
  auto res = resolve_front(unknot_front());
  Dga dga = differential_from_diagram(res.diagram);
  REQUIRE(dga.alg->size() == 1);
  CHECK(dga.diff[0].is_zero());
  CHECK(verify_dga(dga).pass());
}

TEST_CASE("empty front resolves to the empty diagram") {
  FrontDiagram f;
  auto res = resolve_front(f);
  CHECK(res.diagram.num_crossings() == 0);
}

TEST_CASE("malformed fronts are rejected") {
  FrontDiagram f;
  f.events = {{'X', 1, ""}};
  CHECK_THROWS(validate_front(f));
  f.events = {{'L', 1, ""}};
  CHECK_THROWS(validate_front(f));  // does not close
  f.events = {{'L', 3, ""}};
  CHECK_THROWS(validate_front(f));
}

TEST_CASE("classical invariants of the unknot and a stabilization") {
  auto inv = classical_invariants(unknot_front());
  CHECK(inv.tb == -1);
  CHECK(inv.r == 0);

  // stabilization: zigzag spliced into the strand at position 1
  FrontDiagram s;
  s.events = {{'L', 1, ""}, {'L', 2, ""}, {'R', 1, ""}, {'R', 1, "a0"}};
  validate_front(s);
  auto sinv = classical_invariants(s);
  CHECK(sinv.tb == -2);
}

TEST_CASE("trefoil front: degrees and invariants") {
  // two nested caps, three crossings between the middle strands
  FrontDiagram f;
  f.events = {{'L', 1, ""}, {'L', 3, ""}, {'X', 2, "b1"}, {'X', 2, "b2"},
              {'X', 2, "b3"}, {'R', 1, "a1"}, {'R', 1, "a2"}};
  validate_front(f);
  auto inv = classical_invariants(f);
  CHECK(inv.tb == 1);
  CHECK(inv.r == 0);
  auto res = resolve_front(f);
  CHECK(res.chord_degrees.at("a1") == 1);
  CHECK(res.chord_degrees.at("a2") == 1);
  CHECK(res.chord_degrees.at("b1") == 0);
  CHECK(res.chord_degrees.at("b2") == 0);
  CHECK(res.chord_degrees.at("b3") == 0);
  Dga dga = differential_from_diagram(res.diagram);
  auto rep = verify_dga(dga);
  for (auto& it : rep.items) {
    INFO(it.generator << ": " << it.detail);
    CHECK(it.degree_ok);
    CHECK(it.d2_ok);
    CHECK(it.action_ok);
  }
}
