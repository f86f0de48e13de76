#include <doctest.h>
#include <qcw/catalog.hpp>
#include <qcw/forms.hpp>
#include <qcw/quiver.hpp>

#include <set>
#include <string>
#include <vector>

using namespace qcw;

TEST_CASE("catalog size equals the number of positive roots") {
  const struct {
    Quiver q;
    int count;
  } cases[] = {
      {path_quiver(2), 3},   {path_quiver(4), 10},       {path_quiver(5), 15},
      {path_quiver(6), 21},  {dynkin_quiver('D', 4), 12}, {dynkin_quiver('D', 5), 20},
  };
  for (const auto& c : cases) {
    CAPTURE(c.q.name);
    Catalog cat = build_catalog(c.q);
    CHECK(cat.size() == c.count);
    RootSet rs = enumerate_positive_roots(euler_unit_form(cat.euler));
    std::set<IntVec> roots(rs.roots.begin(), rs.roots.end());
    std::set<IntVec> dims(cat.dims.begin(), cat.dims.end());
    CHECK(roots == dims);
  }
}

TEST_CASE("catalog entries are ordered, named and indexed consistently") {
  Catalog cat = build_catalog(path_quiver(4));
  std::set<std::string> names(cat.names.begin(), cat.names.end());
  CHECK(names.size() == cat.names.size());
  for (int v = 1; v <= 4; ++v) CHECK(cat.index_of_name("P(" + std::to_string(v) + ")") >= 0);
  for (int v = 2; v <= 4; ++v) CHECK(cat.index_of_name("I(" + std::to_string(v) + ")") >= 0);
  // The sincere module is projective and injective at once and takes the
  // projective name.
  CHECK(cat.index_of_name("I(1)") == -1);
  CHECK(cat.index_of_name("P(4)") == cat.index_of_dim({1, 1, 1, 1}));
  // Simples at the ends of the path are projective or injective and take
  // those names; the middle ones keep the simple name.
  CHECK(cat.index_of_name("S(1)") == -1);
  CHECK(cat.index_of_name("S(2)") >= 0);
  CHECK(cat.index_of_name("S(3)") >= 0);
  CHECK(cat.index_of_name("S(4)") == -1);
  CHECK(cat.index_of_name("P(1)") == cat.index_of_dim({1, 0, 0, 0}));
  CHECK(cat.index_of_name("I(4)") == cat.index_of_dim({0, 0, 0, 1}));
  for (int i = 0; i < cat.size(); ++i) {
    CHECK(cat.index_of_dim(cat.dims[i]) == i);
    CHECK(cat.index_of_name(cat.names[i]) == i);
    CHECK(cat.reps[i].dim_vec() == cat.dims[i]);
    if (i > 0) {
      Int prev = vec_sum(cat.dims[i - 1]), cur = vec_sum(cat.dims[i]);
      CHECK((prev < cur || (prev == cur && cat.dims[i - 1] < cat.dims[i])));
    }
  }
  CHECK(cat.index_of_dim({9, 9, 9, 9}) == -1);
  CHECK(cat.index_of_name("bogus") == -1);
}

TEST_CASE("cached hom and ext tables match direct computation") {
  Catalog cat = build_catalog(path_quiver(4));
  for (int i = 0; i < cat.size(); ++i)
    for (int j = 0; j < cat.size(); ++j) {
      CHECK(cat.hom[i][j] == hom_dim(cat.reps[i], cat.reps[j]));
      CHECK(cat.ext[i][j] == ext1_dim(cat.reps[i], cat.reps[j]));
      CHECK(cat.hom_bases[i][j].cols == cat.hom[i][j]);
    }
  // Every member is an exceptional brick.
  for (int i = 0; i < cat.size(); ++i) {
    CHECK(cat.hom[i][i] == 1);
    CHECK(cat.ext[i][i] == 0);
  }
}

TEST_CASE("representation infinite quivers are rejected") {
  CHECK_THROWS_AS(build_catalog(kronecker_quiver()), std::invalid_argument);
}

TEST_CASE("decompose recovers known direct sums") {
  Quiver q = dynkin_quiver('D', 4);
  Catalog cat = build_catalog(q);
  int p3 = cat.index_of_name("P(3)"), s3 = cat.index_of_name("S(3)");
  REQUIRE(p3 >= 0);
  REQUIRE(s3 >= 0);

  CHECK(decompose(cat, cat.reps[p3]) == std::vector<int>{p3});
  CHECK(decompose(cat, zero_rep(q)).empty());

  Representation m = direct_sum(cat.reps[p3], cat.reps[s3]);
  std::vector<int> expect = {p3, s3};
  std::sort(expect.begin(), expect.end());
  CHECK(decompose(cat, m) == expect);

  Representation mm = direct_sum(m, cat.reps[s3]);
  std::vector<int> expect2 = {p3, s3, s3};
  std::sort(expect2.begin(), expect2.end());
  CHECK(decompose(cat, mm) == expect2);
}

TEST_CASE("isomorphism testing separates distinct members") {
  Quiver q = path_quiver(4);
  Catalog cat = build_catalog(q);
  for (int v = 0; v < q.n(); ++v) {
    Representation p = projective_rep(q, v);
    int idx = cat.index_of_name("P(" + std::to_string(v + 1) + ")");
    CHECK(is_isomorphic(cat, p, cat.reps[idx]));
  }
  int a = cat.index_of_name("S(2)"), b = cat.index_of_name("S(3)");
  CHECK_FALSE(is_isomorphic(cat, cat.reps[a], cat.reps[b]));
  // Same dimension vector, different modules: P(2) vs P(1) + S(2).
  int p1 = cat.index_of_name("P(1)");
  Representation sum = direct_sum(cat.reps[p1], cat.reps[a]);
  CHECK_FALSE(is_isomorphic(cat, cat.reps[cat.index_of_name("P(2)")], sum));
  CHECK(is_isomorphic(cat, sum, direct_sum(cat.reps[a], cat.reps[p1])));
}

TEST_CASE("catalog respects labeled orientations") {
  Quiver q = parse_quiver(
      "quiver a5_t33\n"
      "vertices: 1 2 2' 3 3'\n"
      "arrows: 2->1 2'->1 3->2 3'->2'\n");
  Catalog cat = build_catalog(q);
  CHECK(cat.size() == 15);
  // P(3) is supported on the arm through 2 down to 1.
  int p3 = cat.index_of_name("P(3)");
  CHECK(cat.dims[p3] == IntVec{1, 1, 0, 1, 0});
  int i1 = cat.index_of_name("I(1)");
  CHECK(cat.dims[i1] == IntVec{1, 1, 1, 1, 1});
  // 3 and 3' are sources, so their injectives are simple.
  CHECK(cat.index_of_name("I(3)") == cat.index_of_dim({0, 0, 0, 1, 0}));
  CHECK(cat.index_of_name("I(3')") == cat.index_of_dim({0, 0, 0, 0, 1}));
}
