#include <algorithm>
#include <deque>

#include "stonework/error.hpp"
#include "stonework/profinite.hpp"

namespace stonework::profinite {

RelGraph::RelGraph(std::size_t n) : adj_(n) {
  for (std::size_t v = 0; v < n; ++v) adj_[v].push_back(v);
}

RelGraph RelGraph::from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) {
  RelGraph g(n);
  for (const auto& [u, v] : edges) g.relate(u, v);
  return g;
}

void RelGraph::relate(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw OutOfRange("vertex out of range");
  auto insert = [](std::vector<std::size_t>& list, std::size_t x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it == list.end() || *it != x) list.insert(it, x);
  };
  insert(adj_[u], v);
  insert(adj_[v], u);
}

bool RelGraph::related(std::size_t u, std::size_t v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::size_t RelGraph::pair_count() const {
  std::size_t n = 0;
  for (const auto& list : adj_) n += list.size();
  return n;
}

bool preserves_relation(const RelGraph& from, const RelGraph& to, std::span<const std::size_t> phi) {
  if (phi.size() != from.size()) return false;
  for (std::size_t u = 0; u < from.size(); ++u) {
    if (phi[u] >= to.size()) return false;
    for (auto v : from.neighbours(u))
      if (!to.related(phi[u], phi[v])) return false;
  }
  return true;
}

void RelGraphTower::validate() const {
  if (transitions.size() + 1 != levels.size() && !levels.empty())
    throw InvariantViolated("graph tower needs one transition per adjacent pair of levels");
  for (std::size_t n = 0; n < transitions.size(); ++n)
    if (!preserves_relation(levels[n + 1], levels[n], transitions[n]))
      throw RelationNotPreserved("transition " + std::to_string(n) + " does not preserve the relation");
}

std::vector<std::size_t> connected_component(const RelGraph& g, std::size_t v) {
  if (v >= g.size()) throw OutOfRange("vertex out of range");
  std::vector<bool> seen(g.size(), false);
  std::deque<std::size_t> queue{v};
  seen[v] = true;
  std::vector<std::size_t> out;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    out.push_back(u);
    for (auto w : g.neighbours(u)) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_totally_disconnected(const RelGraphTower& t, std::size_t depth) {
  if (depth >= t.levels.size()) throw OutOfRange("depth exceeds the tower");
  for (std::size_t n = 0; n <= depth; ++n)
    for (std::size_t v = 0; v < t.levels[n].size(); ++v)
      if (connected_component(t.levels[n], v).size() != 1) return false;
  return true;
}

BoundedMap bound_levelwise_nat_map(std::span<const std::size_t> values) {
  BoundedMap out;
  out.factored.assign(values.begin(), values.end());
  if (!values.empty()) out.bound = *std::max_element(values.begin(), values.end()) + 1;
  return out;
}

}  // namespace stonework::profinite
