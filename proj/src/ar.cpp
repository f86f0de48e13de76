#include "qcw/ar.hpp"

#include <algorithm>
#include <stdexcept>

#include "qcw/rep.hpp"

namespace qcw {

int ARComponent::find_by_dim(const IntVec& d) const {
  int found = -1;
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].dim != d) continue;
    if (found >= 0) throw std::runtime_error("find_by_dim: dimension vector " + vec_to_string(d) + " is ambiguous in the component");
    found = static_cast<int>(i);
  }
  return found;
}

namespace {

std::vector<int> sink_first(const Quiver& q) {
  std::vector<int> outdeg(q.n(), 0);
  for (const Arrow& a : q.arrows) ++outdeg[a.src];
  std::vector<int> order;
  std::vector<bool> done(q.n(), false);
  for (int step = 0; step < q.n(); ++step) {
    int pick = -1;
    for (int v = 0; v < q.n(); ++v)
      if (!done[v] && outdeg[v] == 0) {
        pick = v;
        break;
      }
    if (pick < 0) throw std::logic_error("sink_first: cycle");
    done[pick] = true;
    order.push_back(pick);
    for (const Arrow& a : q.arrows)
      if (a.tgt == pick && !done[a.src]) --outdeg[a.src];
  }
  return order;
}

bool is_nonpositive(const IntVec& v) {
  for (Int x : v)
    if (x > 0) return false;
  return true;
}

}  // namespace

ARComponent knit_preprojective(const Quiver& q, int max_depth) {
  ARComponent comp;
  comp.Q = q;
  EulerForm f = euler_matrix(q);
  Coxeter cox = coxeter_matrix(f);
  IntMat mult = int_zero(q.n(), q.n());
  for (const Arrow& a : q.arrows) ++mult[a.src][a.tgt];
  std::vector<int> order = sink_first(q);

  auto add_node = [&](int orbit, int power, IntVec dim, bool projective) {
    ARNode nd;
    nd.orbit = orbit;
    nd.power = power;
    nd.dim = std::move(dim);
    nd.projective = projective;
    comp.nodes.push_back(std::move(nd));
    comp.node_at[{orbit, power}] = static_cast<int>(comp.nodes.size() - 1);
  };

  for (int v : order) add_node(v, 0, projective_rep(q, v).dim_vec(), true);

  bool alive = true;
  int r = 0;
  for (; alive && r < max_depth; ++r) {
    alive = false;
    for (int i : order) {
      auto it = comp.node_at.find({i, r});
      if (it == comp.node_at.end()) continue;
      ARNode& cur = comp.nodes[it->second];
      IntVec next = mat_vec(cox.phi_inv, cur.dim);
      if (is_nonpositive(next)) {
        cur.injective = true;
        continue;
      }
      if (!is_positive(next))
        throw std::logic_error("knit_preprojective: Phi^{-1} image has mixed signs at " + vec_to_string(cur.dim));
      // Mesh additivity cross-check: middles are (r, j) for arrows j->i and
      // (r+1, l) for arrows i->l (those already knitted this slice).
      IntVec mesh(q.n(), 0);
      for (int j = 0; j < q.n(); ++j) {
        if (mult[j][i] > 0) {
          auto jt = comp.node_at.find({j, r});
          if (jt != comp.node_at.end())
            for (int t = 0; t < q.n(); ++t) mesh[t] += mult[j][i] * comp.nodes[jt->second].dim[t];
        }
        if (mult[i][j] > 0) {
          auto lt = comp.node_at.find({j, r + 1});
          if (lt != comp.node_at.end())
            for (int t = 0; t < q.n(); ++t) mesh[t] += mult[i][j] * comp.nodes[lt->second].dim[t];
        }
      }
      mesh = vec_sub(mesh, cur.dim);
      if (mesh != next)
        throw std::logic_error("knit_preprojective: mesh formula disagrees with the Coxeter step at " + vec_to_string(cur.dim));
      add_node(i, r + 1, next, false);
      alive = true;
    }
  }
  comp.depth = 0;
  for (const ARNode& nd : comp.nodes) comp.depth = std::max(comp.depth, nd.power);
  comp.complete = !alive;

  // Arrows: within a slice (r,i) -> (r,j) per arrow j->i; across slices
  // (r,i) -> (r+1,l) per arrow i->l.
  for (const auto& [key, id] : comp.node_at) {
    auto [orbit, power] = key;
    for (int j = 0; j < q.n(); ++j) {
      if (mult[j][orbit] > 0) {
        auto jt = comp.node_at.find({j, power});
        if (jt != comp.node_at.end()) comp.arrows.push_back({id, jt->second, mult[j][orbit]});
      }
      if (mult[orbit][j] > 0) {
        auto lt = comp.node_at.find({j, power + 1});
        if (lt != comp.node_at.end()) comp.arrows.push_back({id, lt->second, mult[orbit][j]});
      }
    }
  }
  std::sort(comp.arrows.begin(), comp.arrows.end(), [](const ARArrow& a, const ARArrow& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  return comp;
}

std::set<int> predecessor_closure(const ARComponent& comp, const std::set<int>& seeds) {
  std::set<int> out = seeds;
  std::vector<int> stack(seeds.begin(), seeds.end());
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const ARArrow& a : comp.arrows)
      if (a.to == v && !out.count(a.from)) {
        out.insert(a.from);
        stack.push_back(a.from);
      }
  }
  return out;
}

std::optional<std::pair<char, int>> is_dynkin(const Quiver& q) {
  int n = q.n();
  if (n == 0 || !q.is_connected()) return std::nullopt;
  if (static_cast<int>(q.arrows.size()) != n - 1) return std::nullopt;  // not a tree
  IntMat mult = int_zero(n, n);
  for (const Arrow& a : q.arrows) {
    ++mult[a.src][a.tgt];
    ++mult[a.tgt][a.src];
    if (mult[a.src][a.tgt] > 1) return std::nullopt;  // multiple edge
  }
  std::vector<int> deg(n, 0);
  for (const Arrow& a : q.arrows) {
    ++deg[a.src];
    ++deg[a.tgt];
  }
  int branch = -1;
  for (int v = 0; v < n; ++v) {
    if (deg[v] > 3) return std::nullopt;
    if (deg[v] == 3) {
      if (branch >= 0) return std::nullopt;
      branch = v;
    }
  }
  if (branch < 0) return std::make_pair('A', n);
  // Arm lengths from the branch vertex.
  std::vector<int> arms;
  for (const Arrow& a : q.arrows) {
    int start = -1;
    if (a.src == branch) start = a.tgt;
    if (a.tgt == branch) start = a.src;
    if (start < 0) continue;
    int len = 1, prev = branch, cur = start;
    while (true) {
      int next = -1;
      for (const Arrow& b : q.arrows) {
        int other = -1;
        if (b.src == cur) other = b.tgt;
        if (b.tgt == cur) other = b.src;
        if (other >= 0 && other != prev) next = other;
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) return std::nullopt;
  if (arms[0] == 1 && arms[1] == 1) return std::make_pair('D', n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return std::make_pair('E', n);
  return std::nullopt;
}

bool dim_is_preprojective(const Coxeter& cox, IntVec d, int bound) {
  for (int k = 0; k < bound; ++k) {
    if (is_nonpositive(d)) return true;
    if (!is_positive(d)) return true;  // left the cone with mixed signs: orbit ended
    d = mat_vec(cox.phi, d);
  }
  return false;
}

bool dim_is_preinjective(const Coxeter& cox, IntVec d, int bound) {
  for (int k = 0; k < bound; ++k) {
    if (is_nonpositive(d)) return true;
    if (!is_positive(d)) return true;
    d = mat_vec(cox.phi_inv, d);
  }
  return false;
}

}  // namespace qcw
