#include <doctest.h>
#include <qcw/forms.hpp>
#include <qcw/quiver.hpp>
#include <qcw/tilting.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace qcw;

namespace {

Quiver sink_star_a5() {
  return parse_quiver(
      "quiver a5_t33\n"
      "vertices: 1 2 2' 3 3'\n"
      "arrows: 2->1 2'->1 3->2 3'->2'\n");
}

}  // namespace

TEST_CASE("tilting module counts follow the Catalan sequence on type A") {
  CHECK(enumerate_tilting(build_catalog(path_quiver(2))).size() == 2);
  CHECK(enumerate_tilting(build_catalog(path_quiver(4))).size() == 14);
  CHECK(enumerate_tilting(build_catalog(sink_star_a5())).size() == 42);
  for (const Quiver& q : all_orientations(path_quiver(3)))
    CHECK(enumerate_tilting(build_catalog(q)).size() == 5);
}

TEST_CASE("enumerated tilting modules are valid and pairwise distinct") {
  Catalog cat = build_catalog(path_quiver(4));
  std::vector<TiltingModule> all = enumerate_tilting(cat);
  std::set<std::vector<int>> seen;
  for (const TiltingModule& t : all) {
    CHECK(t.rank() == 4);
    CHECK(std::is_sorted(t.idx.begin(), t.idx.end()));
    CHECK(is_tilting(cat, t.idx));
    seen.insert(t.idx);
    for (int i : t.idx)
      for (int j : t.idx) CHECK(cat.ext[i][j] == 0);
  }
  CHECK(seen.size() == all.size());
}

TEST_CASE("is_tilting rejects defective candidates") {
  Catalog cat = build_catalog(path_quiver(2));
  int p1 = cat.index_of_name("P(1)"), p2 = cat.index_of_name("P(2)"), i2 = cat.index_of_name("I(2)");
  CHECK(is_tilting(cat, {p1, p2}));
  CHECK(is_tilting(cat, {p2, i2}));
  CHECK_FALSE(is_tilting(cat, {p1, i2}));   // Ext^1(I(2), P(1)) != 0
  CHECK_FALSE(is_tilting(cat, {p1}));       // wrong rank
  CHECK_FALSE(is_tilting(cat, {p1, p1}));   // repeated summand
}

TEST_CASE("tilting_from_names keeps order and validates") {
  Catalog cat = build_catalog(path_quiver(2));
  TiltingModule t = tilting_from_names(cat, {"I(2)", "P(2)"});
  CHECK(t.idx == std::vector<int>{cat.index_of_name("I(2)"), cat.index_of_name("P(2)")});
  CHECK_THROWS_AS(tilting_from_names(cat, {"P(1)", "nosuch"}), std::invalid_argument);
  CHECK_THROWS_AS(tilting_from_names(cat, {"P(1)", "I(2)"}), std::invalid_argument);
  CHECK_THROWS_AS(tilting_from_names(cat, {"P(1)"}), std::invalid_argument);
}

TEST_CASE("the progenerator gives the identity base change") {
  Catalog cat = build_catalog(path_quiver(3));
  std::vector<int> proj;
  for (int v = 1; v <= 3; ++v) proj.push_back(cat.index_of_name("P(" + std::to_string(v) + ")"));
  TiltingModule t{proj};
  REQUIRE(is_tilting(cat, t.idx));

  TorsionClassification cls = classify_torsion(cat, t);
  CHECK(cls.torsion.size() == static_cast<size_t>(cat.size()));
  CHECK(cls.torsion_free.empty());
  CHECK(cls.mixed.empty());

  BaseChange bc = base_change(cat, t);
  CHECK(bc.g == int_identity(3));
  CHECK(bc.ginv == int_identity(3));
  CHECK(pushforward_form(cat, bc).M == cat.euler.E);
}

TEST_CASE("base change sends summand classes to hom dimension columns") {
  Catalog cat = build_catalog(sink_star_a5());
  for (const TiltingModule& t : enumerate_tilting(cat)) {
    BaseChange bc = base_change(cat, t);
    for (int r = 0; r < t.rank(); ++r) {
      IntVec image = apply_base_change(bc, cat.dims[t.idx[r]]);
      for (int s = 0; s < t.rank(); ++s) CHECK(image[s] == cat.hom[t.idx[s]][t.idx[r]]);
    }
    CHECK(int_mul(bc.g, bc.ginv) == int_identity(t.rank()));
  }
}

TEST_CASE("torsion classification of the two-sink-arm tilting module") {
  Catalog cat = build_catalog(sink_star_a5());
  TiltingModule t = tilting_from_names(cat, {"P(1)", "P(3)", "P(3')", "I(3)", "I(3')"});
  TorsionClassification cls = classify_torsion(cat, t);
  CHECK(cls.torsion_free.size() == 2);
  CHECK(cls.mixed.size() == 5);
  CHECK(cls.torsion.size() == 8);
  for (int i = 0; i < cat.size(); ++i) {
    int buckets = 0;
    for (const std::vector<int>* part : {&cls.torsion_free, &cls.mixed, &cls.torsion})
      buckets += std::count(part->begin(), part->end(), i);
    CHECK(buckets == 1);
  }
  for (int i : t.idx) CHECK(cls.tags[i] == Tag::Torsion);
  CHECK(tag_name(Tag::Mixed) == "mixed");

  BaseChange bc = base_change(cat, t);
  CHECK(bc.g == IntMat{{1, 0, 0, 0, 0},
                       {0, 0, 0, 1, 0},
                       {0, 0, 0, 0, 1},
                       {0, -1, 0, 1, 0},
                       {0, 0, -1, 0, 1}});
}

TEST_CASE("the pushed-forward form is a unit form isometric over the roots") {
  Catalog cat = build_catalog(path_quiver(4));
  UnitForm qa = euler_unit_form(cat.euler);
  for (const TiltingModule& t : enumerate_tilting(cat)) {
    BaseChange bc = base_change(cat, t);
    UnitForm qb = pushforward_form(cat, bc);
    for (int i = 0; i < qb.n(); ++i) CHECK(qb.M[i][i] == 1);
    for (const IntVec& root : cat.dims) CHECK(form_eval(qb, apply_base_change(bc, root)) == form_eval(qa, root));
    CHECK(is_positive_definite(qb));
  }
}
