#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qcw/intvec.hpp"

namespace qcw {

struct Arrow {
  int src = -1, tgt = -1;  // vertex indices
};

// Finite acyclic quiver. Vertex and arrow order is declaration order; all
// coordinates (dimension vectors, Euler matrices, ...) follow it.
struct Quiver {
  std::string name;
  std::vector<std::string> labels;
  std::vector<Arrow> arrows;

  int n() const { return static_cast<int>(labels.size()); }
  int vertex_index(const std::string& label) const;  // -1 if absent
  std::vector<int> arrows_out(int v) const;          // arrow indices
  std::vector<int> arrows_in(int v) const;
  bool is_connected() const;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& what, int line_) : std::runtime_error(what), line(line_) {}
};

// Text format:
//   # comment
//   quiver <name>          (optional)
//   vertices: <label> ...
//   arrows: <src>-><tgt> ...
// Loops and oriented cycles are rejected (the path algebra must be
// finite dimensional hereditary); parallel arrows are allowed.
Quiver parse_quiver(const std::string& text);
Quiver parse_quiver_file(const std::string& path);
std::string quiver_to_text(const Quiver& q);

Quiver opposite(const Quiver& q);

// All acyclic orientations of the underlying graph of q (2^#arrows masks,
// cyclic ones dropped), labels preserved, deterministic order.
std::vector<Quiver> all_orientations(const Quiver& q);

// Builders used by tests and the verification suites.
Quiver path_quiver(int n);                          // A_n: arrows i+1 -> i
Quiver dynkin_quiver(char type, int rank);          // 'A', 'D' or 'E', canonical orientation
Quiver kronecker_quiver();                          // two vertices, double arrow 2 -> 1

}  // namespace qcw
