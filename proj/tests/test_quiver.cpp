#include <doctest.h>
#include <qcw/quiver.hpp>

using namespace qcw;

TEST_CASE("parse a quiver and read its structure") {
  Quiver q = parse_quiver("# comment\nquiver demo\nvertices: a b c\narrows: b->a c->b\n");
  CHECK(q.name == "demo");
  CHECK(q.n() == 3);
  CHECK(q.labels == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(q.arrows.size() == 2);
  CHECK(q.arrows[0].src == 1);
  CHECK(q.arrows[0].tgt == 0);
  CHECK(q.vertex_index("c") == 2);
  CHECK(q.vertex_index("missing") == -1);
  CHECK(q.arrows_out(1) == std::vector<int>{0});
  CHECK(q.arrows_in(1) == std::vector<int>{1});
  CHECK(q.is_connected());
}

TEST_CASE("parser reports errors with line numbers") {
  CHECK_THROWS_AS(parse_quiver("vertices: a b\narrows: a->x\n"), ParseError);
  CHECK_THROWS_AS(parse_quiver("vertices: a a\narrows:\n"), ParseError);       // duplicate label
  CHECK_THROWS_AS(parse_quiver("vertices: a\narrows: a->a\n"), ParseError);    // loop
  CHECK_THROWS_AS(parse_quiver("vertices: a b\narrows: a->b b->a\n"), ParseError);  // cycle
  CHECK_THROWS_AS(parse_quiver("arrows: a->b\n"), ParseError);                 // no vertices
  CHECK_THROWS_AS(parse_quiver(""), ParseError);
  try {
    parse_quiver("vertices: a b\narrows: a->x\n");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("round trip through text") {
  Quiver q = dynkin_quiver('D', 4);
  Quiver back = parse_quiver(quiver_to_text(q));
  CHECK(back.labels == q.labels);
  CHECK(back.arrows.size() == q.arrows.size());
  for (size_t i = 0; i < q.arrows.size(); ++i) {
    CHECK(back.arrows[i].src == q.arrows[i].src);
    CHECK(back.arrows[i].tgt == q.arrows[i].tgt);
  }
}

TEST_CASE("opposite quiver reverses arrows") {
  Quiver q = path_quiver(3);
  Quiver op = opposite(q);
  REQUIRE(op.arrows.size() == 2);
  for (size_t i = 0; i < q.arrows.size(); ++i) {
    CHECK(op.arrows[i].src == q.arrows[i].tgt);
    CHECK(op.arrows[i].tgt == q.arrows[i].src);
  }
}

TEST_CASE("all orientations of trees flip every edge subset") {
  CHECK(all_orientations(path_quiver(3)).size() == 4);
  CHECK(all_orientations(path_quiver(6)).size() == 32);
  CHECK(all_orientations(dynkin_quiver('D', 4)).size() == 8);
  // The double arrow gives 2^2 masks, but the two mixed ones are 2-cycles.
  CHECK(all_orientations(kronecker_quiver()).size() == 2);
  for (const Quiver& o : all_orientations(dynkin_quiver('D', 5))) {
    CHECK(o.n() == 5);
    CHECK(o.arrows.size() == 4);
    CHECK(o.labels == dynkin_quiver('D', 5).labels);
  }
}

TEST_CASE("builders produce the expected shapes") {
  Quiver a5 = path_quiver(5);
  CHECK(a5.n() == 5);
  CHECK(a5.arrows.size() == 4);
  Quiver d6 = dynkin_quiver('D', 6);
  CHECK(d6.n() == 6);
  CHECK(d6.arrows.size() == 5);
  Quiver e6 = dynkin_quiver('E', 6);
  CHECK(e6.n() == 6);
  CHECK(e6.arrows.size() == 5);
  CHECK_THROWS(dynkin_quiver('D', 3));
  CHECK_THROWS(dynkin_quiver('E', 5));
  CHECK_THROWS(dynkin_quiver('X', 4));
  Quiver k = kronecker_quiver();
  CHECK(k.n() == 2);
  CHECK(k.arrows.size() == 2);
}
