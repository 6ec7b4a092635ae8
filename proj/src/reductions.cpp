#include "vne/reductions.hpp"

#include <algorithm>
#include <numeric>

namespace vne {

namespace {

std::string tag(const std::string& head, int a) { return head + ":" + std::to_string(a); }
std::string tag(const std::string& head, int a, int b) {
  return head + ":" + std::to_string(a) + ":" + std::to_string(b);
}
std::string tag(const std::string& head, int a, int b, int c) {
  return tag(head, a, b) + ":" + std::to_string(c);
}

void check_sizes(const ReductionArtifact& artifact) {
  if (artifact.instance.vn().node_count() != artifact.instance.pn().node_count())
    throw std::logic_error(artifact.reduction + ": generated networks differ in size");
}

}  // namespace

ReductionArtifact reduce_ham(const HamSource& source) {
  validate_source(SourceProblem{source});
  const int n = source.n;
  std::vector<VnEdge> vn_edges;
  std::map<NodeId, std::string> vn_labels, pn_labels;
  for (int k = 0; k < n; ++k) vn_labels[k] = tag("pos", k);
  for (int k = 0; k + 1 < n; ++k) vn_edges.push_back({k, k + 1, 1});
  std::vector<PnEdge> pn_edges;
  for (auto [u, v] : source.edges) pn_edges.push_back({u, v, 1, kUnbounded});
  for (int i = 0; i < n; ++i) pn_labels[i] = tag("v", i);

  // The physical network must be connected; a disconnected source is a
  // trivial no-instance and cannot be represented.
  try {
    PhysicalNetwork probe(n, pn_edges);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("ham reduction requires a connected source graph");
  }

  ReductionArtifact artifact{
      Instance(VirtualNetwork(n, std::move(vn_edges)), PhysicalNetwork(n, std::move(pn_edges)),
               Variant::kWvne, Cost{n - 1}),
      std::move(vn_labels), std::move(pn_labels), SourceProblem{source}, "ham", {}};
  check_sizes(artifact);
  return artifact;
}

ReductionArtifact reduce_bpp_line_on_line(const BppSource& source) {
  validate_source(SourceProblem{source});
  const std::int64_t total =
      std::accumulate(source.items.begin(), source.items.end(), std::int64_t{0});
  const std::int64_t volume = source.bin_size * source.bin_count;
  std::map<NodeId, std::string> vn_labels, pn_labels;
  std::vector<VnEdge> vn_edges;

  // Element chains, then one-vertex pads, all joined by zero-demand links.
  NodeId next = 0;
  NodeId prev_tail = -1;
  auto start_section = [&](NodeId head) {
    if (prev_tail >= 0) vn_edges.push_back({prev_tail, head, 0});
  };
  for (size_t i = 0; i < source.items.size(); ++i) {
    start_section(next);
    for (std::int64_t k = 0; k < source.items[i]; ++k) {
      vn_labels[next] = tag("elem", static_cast<int>(i), static_cast<int>(k));
      if (k > 0) vn_edges.push_back({next - 1, next, 1});
      ++next;
    }
    prev_tail = next - 1;
  }
  for (std::int64_t j = 0; j < volume - total; ++j) {
    start_section(next);
    vn_labels[next] = tag("pad", static_cast<int>(j));
    prev_tail = next;
    ++next;
  }

  std::vector<PnEdge> pn_edges;
  NodeId p = 0;
  for (int j = 0; j < source.bin_count; ++j) {
    for (std::int64_t k = 0; k < source.bin_size; ++k) {
      pn_labels[p] = tag("bin", j, static_cast<int>(k));
      if (k > 0) pn_edges.push_back({p - 1, p, 0, kUnbounded});
      else if (j > 0) pn_edges.push_back({p - 1, p, 1, kUnbounded});
      ++p;
    }
  }

  ReductionArtifact artifact{
      Instance(VirtualNetwork(next, std::move(vn_edges)), PhysicalNetwork(p, std::move(pn_edges)),
               Variant::kWvne, Cost{0}),
      std::move(vn_labels), std::move(pn_labels), SourceProblem{source}, "bpp-line-line", {}};
  check_sizes(artifact);
  return artifact;
}

ReductionArtifact reduce_bpp_line_on_uniform_tree(const BppSource& source) {
  validate_source(SourceProblem{source});
  const std::int64_t B = source.bin_size;
  const int K = source.bin_count;
  const std::int64_t total =
      std::accumulate(source.items.begin(), source.items.end(), std::int64_t{0});
  std::map<NodeId, std::string> vn_labels, pn_labels;
  std::vector<VnEdge> vn_edges;

  NodeId next = 0;
  NodeId prev_tail = -1;
  auto chain = [&](const std::string& head, std::int64_t len, int index) {
    if (prev_tail >= 0) vn_edges.push_back({prev_tail, next, 0});
    for (std::int64_t k = 0; k < len; ++k) {
      vn_labels[next] = index < 0 ? tag(head, static_cast<int>(k))
                                  : tag(head, index, static_cast<int>(k));
      if (k > 0) vn_edges.push_back({next - 1, next, 1});
      ++next;
    }
    prev_tail = next - 1;
  };
  for (size_t i = 0; i < source.items.size(); ++i)
    chain("elem", source.items[i], static_cast<int>(i));
  for (std::int64_t j = 0; j < B * K - total; ++j) {
    if (prev_tail >= 0) vn_edges.push_back({prev_tail, next, 0});
    vn_labels[next] = tag("pad", static_cast<int>(j));
    prev_tail = next;
    ++next;
  }
  chain("long", 2 * B + 1, -1);

  // Octopus: a root with K + 2 pendant legs of B vertices, uniform costs.
  std::vector<PnEdge> pn_edges;
  pn_labels[0] = "root";
  NodeId p = 1;
  for (int j = 0; j < K + 2; ++j) {
    for (std::int64_t k = 0; k < B; ++k) {
      pn_labels[p] = tag("leg", j, static_cast<int>(k));
      pn_edges.push_back({k == 0 ? 0 : p - 1, p, 1, kUnbounded});
      ++p;
    }
  }

  std::int64_t theta = 2 * B;
  for (auto a : source.items) theta += a - 1;
  ReductionArtifact artifact{
      Instance(VirtualNetwork(next, std::move(vn_edges)), PhysicalNetwork(p, std::move(pn_edges)),
               Variant::kWvne, theta),
      std::move(vn_labels), std::move(pn_labels), SourceProblem{source}, "bpp-octopus", {}};
  check_sizes(artifact);
  return artifact;
}

ReductionArtifact reduce_bpp_2star_on_2star(const BppSource& source) {
  validate_source(SourceProblem{source});
  const std::int64_t total =
      std::accumulate(source.items.begin(), source.items.end(), std::int64_t{0});
  const std::int64_t volume = source.bin_size * source.bin_count;
  std::map<NodeId, std::string> vn_labels, pn_labels;
  std::vector<VnEdge> vn_edges;

  vn_labels[0] = "root";
  NodeId next = 1;
  for (size_t i = 0; i < source.items.size(); ++i) {
    NodeId head = next;
    vn_labels[next] = tag("item", static_cast<int>(i), 0);
    vn_edges.push_back({0, next, 0});
    ++next;
    for (std::int64_t k = 1; k < source.items[i]; ++k) {
      vn_labels[next] = tag("item", static_cast<int>(i), static_cast<int>(k));
      vn_edges.push_back({head, next, 1});
      ++next;
    }
  }
  for (std::int64_t j = 0; j < volume - total; ++j) {
    vn_labels[next] = tag("pad", static_cast<int>(j));
    vn_edges.push_back({0, next, 0});
    ++next;
  }

  std::vector<PnEdge> pn_edges;
  pn_labels[0] = "root";
  NodeId p = 1;
  for (int j = 0; j < source.bin_count; ++j) {
    NodeId head = p;
    pn_labels[p] = tag("bin", j, 0);
    pn_edges.push_back({0, p, 1, kUnbounded});
    ++p;
    for (std::int64_t k = 1; k < source.bin_size; ++k) {
      pn_labels[p] = tag("bin", j, static_cast<int>(k));
      pn_edges.push_back({head, p, 0, kUnbounded});
      ++p;
    }
  }

  ReductionArtifact artifact{
      Instance(VirtualNetwork(next, std::move(vn_edges)), PhysicalNetwork(p, std::move(pn_edges)),
               Variant::kWvne, Cost{0}),
      std::move(vn_labels), std::move(pn_labels), SourceProblem{source}, "bpp-2star", {}};
  check_sizes(artifact);
  return artifact;
}

ReductionArtifact reduce_bpp_2star_on_uniform_2star(const BppSource& source) {
  validate_source(SourceProblem{source});
  if (source.bin_count < 2)
    throw std::invalid_argument("uniform 2-star gadget needs at least two bins");
  const std::int64_t B = source.bin_size;
  const int K = source.bin_count;

  // Pad with unit items until the items fill the bins exactly.
  BppSource padded = source;
  std::int64_t total = std::accumulate(padded.items.begin(), padded.items.end(), std::int64_t{0});
  while (total < B * K) {
    padded.items.push_back(1);
    ++total;
  }
  if (padded.items.size() < 2)
    throw std::invalid_argument("uniform 2-star gadget needs at least two items");

  const Demand dummy_demand = 2 * B * K;
  std::map<NodeId, std::string> vn_labels, pn_labels;
  std::vector<VnEdge> vn_edges;
  vn_labels[0] = "root";
  NodeId next = 1;
  for (size_t i = 0; i < padded.items.size(); ++i) {
    NodeId head = next;
    vn_labels[next] = tag("item", static_cast<int>(i), 0);
    vn_edges.push_back({0, next, 0});
    ++next;
    for (std::int64_t k = 1; k < padded.items[i]; ++k) {
      vn_labels[next] = tag("item", static_cast<int>(i), static_cast<int>(k));
      vn_edges.push_back({head, next, 1});
      ++next;
    }
  }
  for (std::int64_t j = 0; j < K + B; ++j) {
    vn_labels[next] = tag("dummy", static_cast<int>(j));
    vn_edges.push_back({0, next, dummy_demand});
    ++next;
  }

  std::vector<PnEdge> pn_edges;
  pn_labels[0] = "root";
  NodeId p = 1;
  for (int j = 0; j < K; ++j) {
    NodeId head = p;
    pn_labels[p] = tag("bin", j, 0);
    pn_edges.push_back({0, p, 1, kUnbounded});
    ++p;
    for (std::int64_t k = 1; k <= B; ++k) {
      pn_labels[p] = tag("bin", j, static_cast<int>(k));
      pn_edges.push_back({head, p, 1, kUnbounded});
      ++p;
    }
  }
  for (std::int64_t j = 0; j < B; ++j) {
    pn_labels[p] = tag("rootleaf", static_cast<int>(j));
    pn_edges.push_back({0, p, 1, kUnbounded});
    ++p;
  }

  std::int64_t theta = (K + B) * dummy_demand;
  for (auto a : padded.items) theta += 2 * (a - 1);
  ReductionArtifact artifact{
      Instance(VirtualNetwork(next, std::move(vn_edges)), PhysicalNetwork(p, std::move(pn_edges)),
               Variant::kWvne, theta),
      std::move(vn_labels), std::move(pn_labels), SourceProblem{padded}, "bpp-uniform-2star", {}};
  check_sizes(artifact);
  return artifact;
}

ReductionArtifact reduce_3pp_star_on_2star(const ThreePpSource& source,
                                           const ReduceOptions& options) {
  validate_source(SourceProblem{source});
  const int m = source.m();
  std::vector<std::string> warnings;
  if (m < 4) {
    if (!options.allow_below_threshold)
      throw std::invalid_argument("3-partition gadget is sound only for m >= 4");
    warnings.push_back("m < 4: gadget emitted for witness validation only");
  }
  const int n = static_cast<int>(source.items.size());
  const Capacity cap = source.target();

  std::map<NodeId, std::string> vn_labels, pn_labels;
  std::vector<VnEdge> vn_edges;
  vn_labels[0] = "root";
  for (int i = 0; i < n; ++i) {
    vn_labels[i + 1] = tag("leaf", i);
    vn_edges.push_back({0, i + 1, source.items[i]});
  }

  std::vector<PnEdge> pn_edges;
  pn_labels[0] = "root";
  NodeId p = 1;
  for (int j = 0; j < m; ++j) {
    NodeId head = p;
    pn_labels[p] = tag("grp", j, 0);
    pn_edges.push_back({0, p, 1, cap});
    ++p;
    for (int k = 1; k <= 2; ++k) {
      pn_labels[p] = tag("grp", j, k);
      pn_edges.push_back({head, p, 1, cap});
      ++p;
    }
  }

  ReductionArtifact artifact{
      Instance(VirtualNetwork(n + 1, std::move(vn_edges)), PhysicalNetwork(p, std::move(pn_edges)),
               Variant::kCvne),
      std::move(vn_labels), std::move(pn_labels), SourceProblem{source}, "3pp",
      std::move(warnings)};
  check_sizes(artifact);
  return artifact;
}

ReductionArtifact reduce_pp_star_on_line(const PpSource& source) {
  validate_source(SourceProblem{source});
  const int n = static_cast<int>(source.items.size());
  const Capacity cap = source.half_sum();

  std::map<NodeId, std::string> vn_labels, pn_labels;
  std::vector<VnEdge> vn_edges;
  vn_labels[0] = "root";
  for (int i = 0; i < n; ++i) {
    vn_labels[i + 1] = tag("leaf", i);
    vn_edges.push_back({0, i + 1, source.items[i]});
  }
  std::vector<PnEdge> pn_edges;
  for (int k = 0; k <= n; ++k) {
    pn_labels[k] = tag("pos", k);
    if (k > 0) pn_edges.push_back({k - 1, k, 1, cap});
  }

  ReductionArtifact artifact{
      Instance(VirtualNetwork(n + 1, std::move(vn_edges)),
               PhysicalNetwork(n + 1, std::move(pn_edges)), Variant::kCvne),
      std::move(vn_labels), std::move(pn_labels), SourceProblem{source}, "pp", {}};
  check_sizes(artifact);
  return artifact;
}

ReductionArtifact reduce_3dm_oversub_2star(const ThreeDmSource& source,
                                           const ReduceOptions& options) {
  validate_source(SourceProblem{source});
  const int q = source.q;
  const int m = static_cast<int>(source.triplets.size());
  std::vector<std::string> warnings;
  if (q < 3) {
    if (!options.allow_below_threshold)
      throw std::invalid_argument("matching gadget is sound only for q >= 3");
    warnings.push_back("q < 3: gadget emitted for witness validation only");
  }

  // Global vertex ids: x coordinates, then y shifted by q, then z by 2q.
  const int vertex_count = 3 * q;
  std::vector<std::vector<int>> incident(vertex_count);  // hyperedge indices, ascending
  for (int j = 0; j < m; ++j) {
    incident[source.triplets[j][0]].push_back(j);
    incident[q + source.triplets[j][1]].push_back(j);
    incident[2 * q + source.triplets[j][2]].push_back(j);
  }
  int max_degree = 0;
  for (const auto& inc : incident) max_degree = std::max(max_degree, static_cast<int>(inc.size()));
  if (max_degree < 2)
    throw std::invalid_argument(
        "matching gadget needs a vertex of degree at least 2 (group size would be empty)");
  const int B = max_degree;
  const int s = 3 * (B - 1);

  std::map<NodeId, std::string> pn_labels;
  std::vector<PnEdge> pn_edges;
  pn_labels[0] = "r";
  std::vector<NodeId> t_node(m);
  NodeId p = 1;
  for (int j = 0; j < m; ++j) {
    t_node[j] = p;
    pn_labels[p] = tag("t", j);
    pn_edges.push_back({0, p, 1, s});
    ++p;
  }
  int j_count = 0;
  for (int u = 0; u < vertex_count; ++u) {
    const auto& inc = incident[u];
    const int d = static_cast<int>(inc.size());
    for (int a = 0; a < d; ++a) {
      for (int b = a + 1; b < d; ++b) {
        pn_labels[p] = tag("p", u, inc[a], inc[b]);
        pn_edges.push_back({t_node[inc[a]], p, 1, 1});
        pn_edges.push_back({t_node[inc[b]], p, 1, 1});
        ++p;
        ++j_count;
      }
    }
    for (int a = 0; a < d; ++a) {
      for (int j = 1; j <= B - d; ++j) {
        pn_labels[p] = tag("c", u, inc[a], j);
        pn_edges.push_back({t_node[inc[a]], p, 1, 1});
        ++p;
        ++j_count;
      }
    }
  }
  const int g = m + j_count - q * (s + 1);
  if (g < 0)
    throw std::invalid_argument("matching gadget infeasible: filler count would be negative");
  for (int i = 0; i < g; ++i) {
    NodeId head = p;
    pn_labels[p] = tag("f", i, 0);
    pn_edges.push_back({0, p, 1, Capacity{s + 1}});
    ++p;
    for (int k = 1; k < s; ++k) {
      pn_labels[p] = tag("f", i, k);
      pn_edges.push_back({head, p, 1, 1});
      ++p;
    }
  }

  std::map<NodeId, std::string> vn_labels;
  std::vector<VnEdge> vn_edges;
  vn_labels[0] = "root";
  NodeId v = 1;
  for (int grp = 0; grp < q + g; ++grp) {
    NodeId head = v;
    vn_labels[v] = tag("grp", grp) + ":root";
    vn_edges.push_back({0, v, Demand{s}});  // oversubscription factor 1
    ++v;
    for (int l = 0; l < s; ++l) {
      vn_labels[v] = tag("grp", grp) + ":leaf:" + std::to_string(l);
      vn_edges.push_back({head, v, 1});
      ++v;
    }
  }

  ReductionArtifact artifact{
      Instance(VirtualNetwork(v, std::move(vn_edges)), PhysicalNetwork(p, std::move(pn_edges)),
               Variant::kCvne),
      std::move(vn_labels), std::move(pn_labels), SourceProblem{source}, "3dm",
      std::move(warnings)};
  check_sizes(artifact);
  return artifact;
}

ReductionArtifact transform_wvne0_to_cvne(const ReductionArtifact& artifact) {
  const Instance& inst = artifact.instance;
  if (inst.variant() != Variant::kWvne || !inst.theta() || *inst.theta() != 0)
    throw std::invalid_argument("transform requires a cost-only artifact with theta = 0");
  for (const auto& e : inst.vn().edges())
    if (e.demand != 0 && e.demand != 1)
      throw std::invalid_argument("transform requires 0/1 demands");
  for (const auto& e : inst.pn().edges())
    if (e.cost != 0 && e.cost != 1) throw std::invalid_argument("transform requires 0/1 costs");

  const Capacity zero_cost_cap = static_cast<Capacity>(inst.vn().edges().size());
  std::vector<PnEdge> pn_edges = inst.pn().edges();
  for (auto& e : pn_edges) e.capacity = e.cost == 0 ? zero_cost_cap : 0;

  ReductionArtifact out = artifact;
  out.instance = Instance(inst.vn(), PhysicalNetwork(inst.pn().node_count(), std::move(pn_edges)),
                          Variant::kCvne);
  out.reduction = artifact.reduction + ":cvne";
  return out;
}

ReductionArtifact reduce(const std::string& kind, const SourceProblem& source,
                         const ReduceOptions& options) {
  if (kind == "ham") return reduce_ham(std::get<HamSource>(source));
  if (kind == "bpp-line-line") return reduce_bpp_line_on_line(std::get<BppSource>(source));
  if (kind == "bpp-octopus") return reduce_bpp_line_on_uniform_tree(std::get<BppSource>(source));
  if (kind == "bpp-2star") return reduce_bpp_2star_on_2star(std::get<BppSource>(source));
  if (kind == "bpp-uniform-2star")
    return reduce_bpp_2star_on_uniform_2star(std::get<BppSource>(source));
  if (kind == "3pp") return reduce_3pp_star_on_2star(std::get<ThreePpSource>(source), options);
  if (kind == "pp") return reduce_pp_star_on_line(std::get<PpSource>(source));
  if (kind == "3dm") return reduce_3dm_oversub_2star(std::get<ThreeDmSource>(source), options);
  throw std::invalid_argument("unknown reduction kind: " + kind);
}

std::vector<std::string> reduction_kinds() {
  return {"ham",  "bpp-line-line", "bpp-octopus", "bpp-2star", "bpp-uniform-2star",
          "3pp",  "pp",            "3dm"};
}

}  // namespace vne
