#include "vne/sources.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace vne {

std::int64_t PpSource::half_sum() const {
  std::int64_t total = std::accumulate(items.begin(), items.end(), std::int64_t{0});
  return total / 2;
}

std::int64_t ThreePpSource::target() const {
  std::int64_t total = std::accumulate(items.begin(), items.end(), std::int64_t{0});
  return total / m();
}

std::string source_kind(const SourceProblem& source) {
  struct Visitor {
    std::string operator()(const HamSource&) const { return "ham"; }
    std::string operator()(const BppSource&) const { return "bpp"; }
    std::string operator()(const PpSource&) const { return "pp"; }
    std::string operator()(const ThreePpSource&) const { return "3pp"; }
    std::string operator()(const ThreeDmSource&) const { return "3dm"; }
  };
  return std::visit(Visitor{}, source);
}

std::string certificate_kind(const Certificate& certificate) {
  struct Visitor {
    std::string operator()(const HamCertificate&) const { return "ham"; }
    std::string operator()(const BppCertificate&) const { return "bpp"; }
    std::string operator()(const PpCertificate&) const { return "pp"; }
    std::string operator()(const ThreePpCertificate&) const { return "3pp"; }
    std::string operator()(const ThreeDmCertificate&) const { return "3dm"; }
  };
  return std::visit(Visitor{}, certificate);
}

void validate_source(const SourceProblem& source) {
  if (const auto* ham = std::get_if<HamSource>(&source)) {
    if (ham->n < 1) throw std::invalid_argument("ham: need at least one vertex");
    std::set<std::pair<NodeId, NodeId>> seen;
    for (auto [u, v] : ham->edges) {
      if (u < 0 || u >= ham->n || v < 0 || v >= ham->n)
        throw std::invalid_argument("ham: vertex out of range");
      if (u == v) throw std::invalid_argument("ham: self-loop");
      if (!seen.insert(std::minmax(u, v)).second)
        throw std::invalid_argument("ham: duplicate edge");
    }
    return;
  }
  if (const auto* bpp = std::get_if<BppSource>(&source)) {
    if (bpp->items.empty()) throw std::invalid_argument("bpp: no items");
    if (bpp->bin_size < 1 || bpp->bin_count < 1)
      throw std::invalid_argument("bpp: bin size and count must be positive");
    std::int64_t sum = 0;
    for (auto a : bpp->items) {
      if (a < 1) throw std::invalid_argument("bpp: items must be positive");
      sum += a;
    }
    if (sum > bpp->bin_size * bpp->bin_count)
      throw std::invalid_argument("bpp: items exceed total bin volume");
    return;
  }
  if (const auto* pp = std::get_if<PpSource>(&source)) {
    if (pp->items.empty()) throw std::invalid_argument("pp: no items");
    std::int64_t sum = 0;
    for (auto a : pp->items) {
      if (a < 1) throw std::invalid_argument("pp: items must be positive");
      sum += a;
    }
    if (sum % 2 != 0) throw std::invalid_argument("pp: item sum must be even");
    return;
  }
  if (const auto* tpp = std::get_if<ThreePpSource>(&source)) {
    if (tpp->items.empty() || tpp->items.size() % 3 != 0)
      throw std::invalid_argument("3pp: item count must be a positive multiple of 3");
    std::int64_t sum = 0;
    for (auto a : tpp->items) {
      if (a < 1) throw std::invalid_argument("3pp: items must be positive");
      sum += a;
    }
    if (sum % tpp->m() != 0)
      throw std::invalid_argument("3pp: item sum must be divisible by the triple count");
    return;
  }
  const auto& dm = std::get<ThreeDmSource>(source);
  if (dm.q < 1) throw std::invalid_argument("3dm: q must be positive");
  std::set<std::array<int, 3>> seen;
  for (const auto& t : dm.triplets) {
    for (int c = 0; c < 3; ++c)
      if (t[c] < 0 || t[c] >= dm.q) throw std::invalid_argument("3dm: coordinate out of range");
    if (!seen.insert(t).second) throw std::invalid_argument("3dm: duplicate triplet");
  }
}

namespace {

bool verify_ham(const HamSource& src, const HamCertificate& cert) {
  if (static_cast<int>(cert.path.size()) != src.n) return false;
  std::vector<char> used(src.n, 0);
  for (NodeId v : cert.path) {
    if (v < 0 || v >= src.n || used[v]) return false;
    used[v] = 1;
  }
  std::set<std::pair<NodeId, NodeId>> edges;
  for (auto [u, v] : src.edges) edges.insert(std::minmax(u, v));
  for (size_t i = 1; i < cert.path.size(); ++i)
    if (!edges.count(std::minmax(cert.path[i - 1], cert.path[i]))) return false;
  return true;
}

bool verify_bpp(const BppSource& src, const BppCertificate& cert) {
  if (cert.bin_of_item.size() != src.items.size()) return false;
  std::vector<std::int64_t> load(src.bin_count, 0);
  for (size_t i = 0; i < src.items.size(); ++i) {
    int b = cert.bin_of_item[i];
    if (b < 0 || b >= src.bin_count) return false;
    load[b] += src.items[i];
  }
  for (auto l : load)
    if (l > src.bin_size) return false;
  return true;
}

bool verify_pp(const PpSource& src, const PpCertificate& cert) {
  std::set<int> left(cert.left.begin(), cert.left.end());
  if (left.size() != cert.left.size()) return false;
  std::int64_t sum = 0;
  for (int i : left) {
    if (i < 0 || i >= static_cast<int>(src.items.size())) return false;
    sum += src.items[i];
  }
  return sum == src.half_sum();
}

bool verify_3pp(const ThreePpSource& src, const ThreePpCertificate& cert) {
  if (static_cast<int>(cert.triples.size()) != src.m()) return false;
  std::vector<char> used(src.items.size(), 0);
  for (const auto& t : cert.triples) {
    std::int64_t sum = 0;
    for (int idx : t) {
      if (idx < 0 || idx >= static_cast<int>(src.items.size()) || used[idx]) return false;
      used[idx] = 1;
      sum += src.items[idx];
    }
    if (sum != src.target()) return false;
  }
  return true;
}

bool verify_3dm(const ThreeDmSource& src, const ThreeDmCertificate& cert) {
  if (static_cast<int>(cert.matching.size()) != src.q) return false;
  std::set<int> chosen(cert.matching.begin(), cert.matching.end());
  if (static_cast<int>(chosen.size()) != src.q) return false;
  std::array<std::set<int>, 3> covered;
  for (int idx : chosen) {
    if (idx < 0 || idx >= static_cast<int>(src.triplets.size())) return false;
    for (int c = 0; c < 3; ++c)
      if (!covered[c].insert(src.triplets[idx][c]).second) return false;
  }
  return true;
}

}  // namespace

bool verify_source(const SourceProblem& source, const Certificate& certificate) {
  if (source_kind(source) != certificate_kind(certificate))
    throw std::invalid_argument("certificate kind does not match source kind");
  if (const auto* s = std::get_if<HamSource>(&source))
    return verify_ham(*s, std::get<HamCertificate>(certificate));
  if (const auto* s = std::get_if<BppSource>(&source))
    return verify_bpp(*s, std::get<BppCertificate>(certificate));
  if (const auto* s = std::get_if<PpSource>(&source))
    return verify_pp(*s, std::get<PpCertificate>(certificate));
  if (const auto* s = std::get_if<ThreePpSource>(&source))
    return verify_3pp(*s, std::get<ThreePpCertificate>(certificate));
  return verify_3dm(std::get<ThreeDmSource>(source), std::get<ThreeDmCertificate>(certificate));
}

namespace {

SourceAnswer solve_ham(const HamSource& src) {
  if (src.n > 8) throw BudgetError("ham brute force limited to 8 vertices");
  std::vector<std::vector<NodeId>> adj(src.n);
  for (auto [u, v] : src.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  // DFS in ascending order with failed-state memoization; the first full
  // path found is the lexicographically smallest Hamiltonian path.
  std::vector<std::vector<char>> dead(1 << src.n, std::vector<char>(src.n, 0));
  std::vector<NodeId> path;
  auto dfs = [&](auto&& self, unsigned mask, NodeId last) -> bool {
    if (mask == (1u << src.n) - 1) return true;
    if (dead[mask][last]) return false;
    for (NodeId next : adj[last]) {
      if (mask & (1u << next)) continue;
      path.push_back(next);
      if (self(self, mask | (1u << next), next)) return true;
      path.pop_back();
    }
    dead[mask][last] = 1;
    return false;
  };
  for (NodeId start = 0; start < src.n; ++start) {
    path.assign(1, start);
    if (dfs(dfs, 1u << start, start)) return {true, HamCertificate{path}};
  }
  return {false, std::nullopt};
}

SourceAnswer solve_bpp(const BppSource& src) {
  if (src.items.size() > 10) throw BudgetError("bpp brute force limited to 10 items");
  const int n = static_cast<int>(src.items.size());
  std::vector<std::int64_t> load(src.bin_count, 0);
  std::vector<int> assign(n, -1);
  auto dfs = [&](auto&& self, int item) -> bool {
    if (item == n) return true;
    for (int b = 0; b < src.bin_count; ++b) {
      if (load[b] + src.items[item] > src.bin_size) continue;
      load[b] += src.items[item];
      assign[item] = b;
      if (self(self, item + 1)) return true;
      load[b] -= src.items[item];
      assign[item] = -1;
      if (load[b] == 0) break;  // later empty bins are symmetric
    }
    return false;
  };
  if (dfs(dfs, 0)) return {true, BppCertificate{assign}};
  return {false, std::nullopt};
}

SourceAnswer solve_pp(const PpSource& src) {
  if (src.items.size() > 10) throw BudgetError("pp brute force limited to 10 items");
  const int n = static_cast<int>(src.items.size());
  const std::int64_t target = src.half_sum();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::int64_t sum = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sum += src.items[i];
    if (sum == target) {
      std::vector<int> left;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) left.push_back(i);
      return {true, PpCertificate{left}};
    }
  }
  return {false, std::nullopt};
}

SourceAnswer solve_3pp(const ThreePpSource& src) {
  if (src.items.size() > 12) throw BudgetError("3pp brute force limited to 12 items");
  const int n = static_cast<int>(src.items.size());
  const std::int64_t target = src.target();
  std::vector<char> used(n, 0);
  std::vector<std::array<int, 3>> triples;
  auto dfs = [&](auto&& self) -> bool {
    int first = -1;
    for (int i = 0; i < n; ++i)
      if (!used[i]) {
        first = i;
        break;
      }
    if (first < 0) return true;
    used[first] = 1;
    for (int j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      for (int k = j + 1; k < n; ++k) {
        if (used[k]) continue;
        if (src.items[first] + src.items[j] + src.items[k] != target) continue;
        used[j] = used[k] = 1;
        triples.push_back({first, j, k});
        if (self(self)) return true;
        triples.pop_back();
        used[j] = used[k] = 0;
      }
    }
    used[first] = 0;
    return false;
  };
  if (dfs(dfs)) return {true, ThreePpCertificate{triples}};
  return {false, std::nullopt};
}

SourceAnswer solve_3dm(const ThreeDmSource& src) {
  if (src.q > 4) throw BudgetError("3dm brute force limited to q <= 4");
  const int m = static_cast<int>(src.triplets.size());
  std::vector<int> chosen;
  std::array<std::vector<char>, 3> covered{std::vector<char>(src.q, 0),
                                           std::vector<char>(src.q, 0),
                                           std::vector<char>(src.q, 0)};
  auto dfs = [&](auto&& self, int from) -> bool {
    if (static_cast<int>(chosen.size()) == src.q) return true;
    for (int idx = from; idx < m; ++idx) {
      const auto& t = src.triplets[idx];
      if (covered[0][t[0]] || covered[1][t[1]] || covered[2][t[2]]) continue;
      for (int c = 0; c < 3; ++c) covered[c][t[c]] = 1;
      chosen.push_back(idx);
      if (self(self, idx + 1)) return true;
      chosen.pop_back();
      for (int c = 0; c < 3; ++c) covered[c][t[c]] = 0;
    }
    return false;
  };
  if (dfs(dfs, 0)) return {true, ThreeDmCertificate{chosen}};
  return {false, std::nullopt};
}

}  // namespace

SourceAnswer brute_force_source(const SourceProblem& source) {
  validate_source(source);
  if (const auto* s = std::get_if<HamSource>(&source)) return solve_ham(*s);
  if (const auto* s = std::get_if<BppSource>(&source)) return solve_bpp(*s);
  if (const auto* s = std::get_if<PpSource>(&source)) return solve_pp(*s);
  if (const auto* s = std::get_if<ThreePpSource>(&source)) return solve_3pp(*s);
  return solve_3dm(std::get<ThreeDmSource>(source));
}

}  // namespace vne
