#include "stonework/error.hpp"
#include "stonework/interval.hpp"

namespace stonework::interval {

using profinite::RelGraph;
using profinite::RelGraphTower;

namespace {

RelGraph path_graph(std::size_t n, bool wrap) {
  std::size_t size = std::size_t{1} << n;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(size);
  for (std::size_t k = 0; k + 1 < size; ++k) edges.emplace_back(k, k + 1);
  if (wrap) edges.emplace_back(0, size - 1);
  return RelGraph::from_edges(size, edges);
}

RelGraphTower build_tower(std::size_t depth, std::size_t cap, bool wrap) {
  enforce_cap(depth, cap);
  RelGraphTower t;
  for (std::size_t n = 0; n <= depth; ++n) t.levels.push_back(path_graph(n, wrap));
  for (std::size_t n = 0; n < depth; ++n) t.transitions.push_back(restrict_graph_map(n, cap));
  return t;
}

}  // namespace

RelGraph interval_graph(std::size_t n, std::size_t cap) {
  enforce_cap(n, cap);
  return path_graph(n, false);
}

RelGraph circle_graph(std::size_t n, std::size_t cap) {
  enforce_cap(n, cap);
  return path_graph(n, true);
}

std::vector<std::size_t> restrict_graph_map(std::size_t n, std::size_t cap) {
  enforce_cap(n + 1, cap);
  std::vector<std::size_t> phi(std::size_t{1} << (n + 1));
  for (std::size_t k = 0; k < phi.size(); ++k) phi[k] = k / 2;
  return phi;
}

RelGraphTower interval_tower(std::size_t depth, std::size_t cap) { return build_tower(depth, cap, false); }

RelGraphTower circle_tower(std::size_t depth, std::size_t cap) { return build_tower(depth, cap, true); }

}  // namespace stonework::interval
