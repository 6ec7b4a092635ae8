#include "vne/embedding.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace vne {

std::string ValidationReport::summary() const {
  if (violations.empty()) return "valid";
  std::ostringstream out;
  for (size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].code << ": " << violations[i].detail;
  }
  return out.str();
}

ValidationReport validate_embedding(const Instance& instance, const Embedding& emb) {
  ValidationReport report;
  auto add = [&](const std::string& code, const std::string& detail) {
    report.violations.push_back({code, detail});
  };
  const int n = instance.node_count();
  const auto& pn = instance.pn();

  if (static_cast<int>(emb.node_map.size()) != n) {
    add("node-map-size", "expected " + std::to_string(n) + " entries, got " +
                             std::to_string(emb.node_map.size()));
    return report;  // nothing else is checkable
  }
  std::vector<int> hits(n, 0);
  bool bijection = true;
  for (NodeId img : emb.node_map) {
    if (img < 0 || img >= n) {
      add("node-map-range", "image " + std::to_string(img) + " out of [0, n)");
      bijection = false;
    } else if (++hits[img] > 1) {
      bijection = false;
    }
  }
  if (bijection) {
    for (int i = 0; i < n; ++i) bijection &= hits[i] == 1;
  }
  if (!bijection) add("not-a-bijection", "node_map is not a permutation of [0, n)");

  for (const auto& e : instance.vn().edges()) {
    auto key = std::make_pair(e.u, e.v);
    auto it = emb.paths.find(key);
    std::string name = "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    if (it == emb.paths.end()) {
      add("path-missing", "virtual edge " + name + " has no routed path");
      continue;
    }
    const auto& p = it->second;
    if (p.empty()) {
      add("path-empty", "virtual edge " + name);
      continue;
    }
    std::set<NodeId> on_path;
    bool broken = false;
    for (NodeId x : p) {
      if (x < 0 || x >= n) {
        add("path-node-range", name + " visits node " + std::to_string(x));
        broken = true;
        break;
      }
      if (!on_path.insert(x).second) {
        add("path-not-simple", name + " revisits node " + std::to_string(x));
        broken = true;
        break;
      }
    }
    if (broken) continue;
    for (size_t i = 1; i < p.size(); ++i) {
      if (pn.edge_index(p[i - 1], p[i]) < 0) {
        add("path-unknown-edge", name + " uses absent physical edge (" +
                                     std::to_string(p[i - 1]) + "," + std::to_string(p[i]) + ")");
        broken = true;
        break;
      }
    }
    if (broken) continue;
    if (bijection) {
      NodeId want_front = emb.node_map[e.u];
      NodeId want_back = emb.node_map[e.v];
      if (p.front() != want_front || p.back() != want_back) {
        add("path-endpoint-mismatch",
            name + " should run " + std::to_string(want_front) + " -> " +
                std::to_string(want_back));
      }
    }
  }
  for (const auto& [key, p] : emb.paths) {
    if (instance.vn().edge_index(key.first, key.second) < 0)
      add("path-unknown-virtual-edge",
          "(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
  }
  return report;
}

namespace {

void require_valid(const Instance& instance, const Embedding& emb) {
  auto report = validate_embedding(instance, emb);
  if (!report.ok()) throw std::invalid_argument("invalid embedding: " + report.summary());
}

}  // namespace

Cost embedding_cost(const Instance& instance, const Embedding& emb) {
  require_valid(instance, emb);
  const auto& pn = instance.pn();
  Cost total = 0;
  for (const auto& e : instance.vn().edges()) {
    const auto& p = emb.path(e.u, e.v);
    Cost len = 0;
    for (size_t i = 1; i < p.size(); ++i) len += pn.edges()[pn.edge_index(p[i - 1], p[i])].cost;
    total += e.demand * len;
  }
  return total;
}

std::map<std::pair<NodeId, NodeId>, std::int64_t> edge_loads(const Instance& instance,
                                                             const Embedding& emb) {
  require_valid(instance, emb);
  const auto& pn = instance.pn();
  std::map<std::pair<NodeId, NodeId>, std::int64_t> loads;
  for (const auto& e : pn.edges()) loads[{e.u, e.v}] = 0;
  for (const auto& e : instance.vn().edges()) {
    const auto& p = emb.path(e.u, e.v);
    for (size_t i = 1; i < p.size(); ++i) {
      auto key = std::minmax(p[i - 1], p[i]);
      loads[key] += e.demand;
    }
  }
  return loads;
}

bool check_capacities(const Instance& instance, const Embedding& emb) {
  auto loads = edge_loads(instance, emb);
  const auto& pn = instance.pn();
  for (const auto& e : pn.edges()) {
    if (!capacity_allows(e.capacity, loads[{e.u, e.v}])) return false;
  }
  return true;
}

}  // namespace vne
