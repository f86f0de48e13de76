#include "qcw/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace qcw {

int Quiver::vertex_index(const std::string& label) const {
  for (int i = 0; i < n(); ++i)
    if (labels[i] == label) return i;
  return -1;
}

std::vector<int> Quiver::arrows_out(int v) const {
  std::vector<int> out;
  for (size_t a = 0; a < arrows.size(); ++a)
    if (arrows[a].src == v) out.push_back(static_cast<int>(a));
  return out;
}

std::vector<int> Quiver::arrows_in(int v) const {
  std::vector<int> in;
  for (size_t a = 0; a < arrows.size(); ++a)
    if (arrows[a].tgt == v) in.push_back(static_cast<int>(a));
  return in;
}

bool Quiver::is_connected() const {
  if (n() == 0) return true;
  std::vector<bool> seen(n(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Arrow& a : arrows) {
      int w = -1;
      if (a.src == v) w = a.tgt;
      if (a.tgt == v) w = a.src;
      if (w >= 0 && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

namespace {

bool has_oriented_cycle(const Quiver& q) {
  std::vector<int> indeg(q.n(), 0);
  for (const Arrow& a : q.arrows) ++indeg[a.tgt];
  std::vector<int> queue;
  for (int v = 0; v < q.n(); ++v)
    if (indeg[v] == 0) queue.push_back(v);
  int removed = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++removed;
    for (const Arrow& a : q.arrows)
      if (a.src == v && --indeg[a.tgt] == 0) queue.push_back(a.tgt);
  }
  return removed != q.n();
}

void validate(const Quiver& q, int line_for_errors) {
  for (int i = 0; i < q.n(); ++i)
    for (int j = i + 1; j < q.n(); ++j)
      if (q.labels[i] == q.labels[j]) throw ParseError("duplicate vertex label '" + q.labels[i] + "'", line_for_errors);
  for (const Arrow& a : q.arrows)
    if (a.src == a.tgt) throw ParseError("loop at vertex '" + q.labels[a.src] + "' not allowed", line_for_errors);
  if (has_oriented_cycle(q)) throw ParseError("quiver has an oriented cycle; the path algebra would be infinite dimensional", line_for_errors);
}

}  // namespace

Quiver parse_quiver(const std::string& text) {
  Quiver q;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool saw_vertices = false;
  std::vector<std::pair<std::pair<std::string, std::string>, int>> arrow_tokens;  // (src,tgt), line
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "quiver") {
      if (!(ls >> q.name)) throw ParseError("'quiver' header without a name", lineno);
      std::string extra;
      if (ls >> extra) throw ParseError("unexpected token '" + extra + "' after quiver name", lineno);
    } else if (head == "vertices:") {
      saw_vertices = true;
      std::string label;
      while (ls >> label) q.labels.push_back(label);
    } else if (head == "arrows:") {
      std::string tok;
      while (ls >> tok) {
        auto pos = tok.find("->");
        if (pos == std::string::npos || pos == 0 || pos + 2 >= tok.size())
          throw ParseError("malformed arrow token '" + tok + "' (expected src->tgt)", lineno);
        arrow_tokens.push_back({{tok.substr(0, pos), tok.substr(pos + 2)}, lineno});
      }
    } else {
      throw ParseError("unrecognized directive '" + head + "'", lineno);
    }
  }
  if (!saw_vertices) throw ParseError("missing 'vertices:' line", lineno);
  if (q.labels.empty()) throw ParseError("empty vertex list", lineno);
  for (const auto& [st, ln] : arrow_tokens) {
    int s = q.vertex_index(st.first), t = q.vertex_index(st.second);
    if (s < 0) throw ParseError("arrow references unknown vertex '" + st.first + "'", ln);
    if (t < 0) throw ParseError("arrow references unknown vertex '" + st.second + "'", ln);
    q.arrows.push_back({s, t});
  }
  validate(q, lineno);
  return q;
}

Quiver parse_quiver_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open quiver file '" + path + "'", 0);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_quiver(buf.str());
}

std::string quiver_to_text(const Quiver& q) {
  std::ostringstream os;
  if (!q.name.empty()) os << "quiver " << q.name << "\n";
  os << "vertices:";
  for (const auto& l : q.labels) os << ' ' << l;
  os << "\narrows:";
  for (const Arrow& a : q.arrows) os << ' ' << q.labels[a.src] << "->" << q.labels[a.tgt];
  os << "\n";
  return os.str();
}

Quiver opposite(const Quiver& q) {
  Quiver r = q;
  if (!r.name.empty()) r.name += "_op";
  for (Arrow& a : r.arrows) std::swap(a.src, a.tgt);
  return r;
}

std::vector<Quiver> all_orientations(const Quiver& q) {
  std::vector<Quiver> out;
  size_t m = q.arrows.size();
  if (m > 20) throw std::invalid_argument("all_orientations: too many arrows");
  for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
    Quiver o = q;
    o.name = q.name.empty() ? "orient" : q.name;
    o.name += "_" + std::to_string(mask);
    for (size_t a = 0; a < m; ++a)
      if (mask & (size_t(1) << a)) std::swap(o.arrows[a].src, o.arrows[a].tgt);
    if (!has_oriented_cycle(o)) out.push_back(std::move(o));
  }
  return out;
}

Quiver path_quiver(int n) {
  Quiver q;
  q.name = "A" + std::to_string(n);
  for (int i = 1; i <= n; ++i) q.labels.push_back(std::to_string(i));
  for (int i = 1; i < n; ++i) q.arrows.push_back({i, i - 1});  // i+1 -> i
  return q;
}

Quiver dynkin_quiver(char type, int rank) {
  if (type == 'A') return path_quiver(rank);
  if (type == 'D') {
    if (rank < 4) throw std::invalid_argument("dynkin_quiver: D rank must be >= 4");
    Quiver q;
    q.name = "D" + std::to_string(rank);
    for (int i = 1; i <= rank; ++i) q.labels.push_back(std::to_string(i));
    // 1 and 2 are the short arms attached to 3; 3 - 4 - ... - rank is the tail.
    q.arrows.push_back({2, 0});
    q.arrows.push_back({2, 1});
    for (int i = 3; i < rank; ++i) q.arrows.push_back({i, i - 1});
    return q;
  }
  if (type == 'E') {
    if (rank < 6 || rank > 8) throw std::invalid_argument("dynkin_quiver: E rank must be 6, 7 or 8");
    Quiver q;
    q.name = "E" + std::to_string(rank);
    for (int i = 1; i <= rank; ++i) q.labels.push_back(std::to_string(i));
    // Path 1 - ... - (rank-1) with vertex rank attached to 3.
    for (int i = 1; i < rank - 1; ++i) q.arrows.push_back({i, i - 1});
    q.arrows.push_back({rank - 1, 2});
    return q;
  }
  throw std::invalid_argument("dynkin_quiver: unsupported type");
}

Quiver kronecker_quiver() {
  Quiver q;
  q.name = "kronecker";
  q.labels = {"1", "2"};
  q.arrows = {{1, 0}, {1, 0}};
  return q;
}

}  // namespace qcw
