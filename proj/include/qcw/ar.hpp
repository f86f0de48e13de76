#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qcw/euler.hpp"
#include "qcw/quiver.hpp"

namespace qcw {

// Node tau^{-power} P(orbit) of the preprojective component.
struct ARNode {
  int orbit = -1;
  int power = 0;
  IntVec dim;
  bool projective = false;
  bool injective = false;  // tau^{-1} of it vanishes
};

struct ARArrow {
  int from = -1, to = -1;
  Int mult = 1;
};

struct ARComponent {
  Quiver Q;
  std::vector<ARNode> nodes;
  std::vector<ARArrow> arrows;
  std::map<std::pair<int, int>, int> node_at;  // (orbit, power) -> node id
  int depth = 0;       // largest power reached
  bool complete = false;  // every orbit ended in an injective

  int find_by_dim(const IntVec& d) const;  // unique match or -1; throws if ambiguous
};

// Knit the preprojective component slice by slice: slice 0 holds the
// projectives; dim tau^{-(r+1)}P(i) = Phi^{-1} dim tau^{-r}P(i) while that
// stays positive, cross-checked against mesh additivity. Stops when all
// orbits have ended (complete) or at max_depth.
ARComponent knit_preprojective(const Quiver& q, int max_depth);

// All nodes from which some seed is reachable along AR arrows (the seeds
// themselves included).
std::set<int> predecessor_closure(const ARComponent& comp, const std::set<int>& seeds);

// Underlying-graph Dynkin classification, e.g. {'A', 5}.
std::optional<std::pair<char, int>> is_dynkin(const Quiver& q);

// Dimension-vector tests through the Coxeter transformation: an
// indecomposable M is preprojective iff Phi^k dim M leaves the positive
// cone for some k >= 0 (and dually with Phi^{-1}). Exact for
// representation finite and tame quivers at the default bound.
bool dim_is_preprojective(const Coxeter& cox, IntVec d, int bound = 64);
bool dim_is_preinjective(const Coxeter& cox, IntVec d, int bound = 64);

}  // namespace qcw
