#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "tree_util.hpp"
#include "vne/reductions.hpp"

namespace vne {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::string base_reduction(const std::string& name) {
  auto pos = name.find(':');
  return pos == std::string::npos ? name : name.substr(0, pos);
}

// Label-indexed node collections. Every accessor sorts by the numeric label
// suffix so recovery is stable after a JSON round trip.
class LabelIndex {
 public:
  explicit LabelIndex(const std::map<NodeId, std::string>& labels) {
    for (const auto& [node, label] : labels) {
      auto parts = split(label, ':');
      entries_[parts[0]].emplace_back(parts, node);
    }
  }

  // Nodes whose label is exactly `head` (e.g. "root").
  NodeId unique(const std::string& head) const {
    auto it = entries_.find(head);
    if (it == entries_.end() || it->second.size() != 1)
      throw std::invalid_argument("artifact labels miss a unique '" + head + "' node");
    return it->second[0].second;
  }

  // head:<i> -> node, as a dense vector over i.
  std::vector<NodeId> series(const std::string& head) const {
    std::vector<std::pair<int, NodeId>> keyed;
    auto it = entries_.find(head);
    if (it == entries_.end()) return {};
    for (const auto& [parts, node] : it->second) keyed.emplace_back(std::stoi(parts[1]), node);
    std::sort(keyed.begin(), keyed.end());
    std::vector<NodeId> out;
    for (auto& [k, node] : keyed) out.push_back(node);
    return out;
  }

  // head:<i>:<k> -> nodes grouped by i, each group ordered by k.
  std::vector<std::vector<NodeId>> grouped(const std::string& head) const {
    std::vector<std::vector<NodeId>> out;
    auto it = entries_.find(head);
    if (it == entries_.end()) return out;
    std::map<int, std::vector<std::pair<int, NodeId>>> groups;
    for (const auto& [parts, node] : it->second)
      groups[std::stoi(parts[1])].emplace_back(std::stoi(parts[2]), node);
    for (auto& [i, members] : groups) {
      std::sort(members.begin(), members.end());
      std::vector<NodeId> g;
      for (auto& [k, node] : members) g.push_back(node);
      out.push_back(std::move(g));
    }
    return out;
  }

  const std::vector<std::pair<std::vector<std::string>, NodeId>>& raw(
      const std::string& head) const {
    static const std::vector<std::pair<std::vector<std::string>, NodeId>> empty;
    auto it = entries_.find(head);
    return it == entries_.end() ? empty : it->second;
  }

 private:
  std::map<std::string, std::vector<std::pair<std::vector<std::string>, NodeId>>> entries_;
};

// Oversubscribed groups of the matching gadget: grp:<g>:root / grp:<g>:leaf:<l>.
struct DmGroups {
  std::vector<NodeId> roots;
  std::vector<std::vector<NodeId>> leaves;
};

DmGroups dm_groups(const LabelIndex& vn) {
  DmGroups out;
  std::map<int, NodeId> roots;
  std::map<int, std::vector<std::pair<int, NodeId>>> leaves;
  for (const auto& [parts, node] : vn.raw("grp")) {
    int g = std::stoi(parts[1]);
    if (parts[2] == "root")
      roots[g] = node;
    else
      leaves[g].emplace_back(std::stoi(parts[3]), node);
  }
  for (auto& [g, node] : roots) {
    out.roots.push_back(node);
    auto& lv = leaves[g];
    std::sort(lv.begin(), lv.end());
    std::vector<NodeId> group;
    for (auto& [l, n] : lv) group.push_back(n);
    out.leaves.push_back(std::move(group));
  }
  return out;
}

using Slot = std::pair<int, NodeId>;  // (container index, node)

// Packs item vertex chains into their certificate container and pads into
// whatever is left, in ascending order.
void place_sections(const std::vector<std::vector<NodeId>>& item_nodes,
                    const std::vector<NodeId>& pad_nodes, const std::vector<int>& container_of,
                    const std::vector<std::vector<NodeId>>& container_slots,
                    std::vector<NodeId>& node_map) {
  std::vector<size_t> cursor(container_slots.size(), 0);
  std::vector<std::vector<char>> taken(container_slots.size());
  for (size_t c = 0; c < container_slots.size(); ++c)
    taken[c].assign(container_slots[c].size(), 0);
  for (size_t i = 0; i < item_nodes.size(); ++i) {
    int c = container_of[i];
    for (NodeId vn_node : item_nodes[i]) {
      size_t& at = cursor[c];
      if (at >= container_slots[c].size())
        throw std::invalid_argument("certificate overfills a container");
      taken[c][at] = 1;
      node_map[vn_node] = container_slots[c][at++];
    }
  }
  size_t c = 0, k = 0;
  for (NodeId pad : pad_nodes) {
    while (c < container_slots.size() && (k >= container_slots[c].size() || taken[c][k])) {
      if (k >= container_slots[c].size()) {
        ++c;
        k = 0;
      } else {
        ++k;
      }
    }
    if (c >= container_slots.size())
      throw std::invalid_argument("no slot left for a pad vertex");
    taken[c][k] = 1;
    node_map[pad] = container_slots[c][k];
  }
}

void add_tree_paths(const Instance& instance, Embedding& emb) {
  for (const auto& e : instance.vn().edges())
    emb.paths[{e.u, e.v}] = detail::tree_path(instance.pn(), emb.node_map[e.u],
                                              emb.node_map[e.v]);
}

const BppSource& bpp_of(const ReductionArtifact& artifact) {
  return std::get<BppSource>(artifact.source);
}

Embedding witness_ham(const ReductionArtifact& artifact, const HamCertificate& cert) {
  Embedding emb;
  emb.node_map = cert.path;
  for (const auto& e : artifact.instance.vn().edges())
    emb.paths[{e.u, e.v}] = {emb.node_map[e.u], emb.node_map[e.v]};
  return emb;
}

Embedding witness_bpp_line_line(const ReductionArtifact& artifact, const BppCertificate& cert) {
  LabelIndex vn(artifact.vn_labels), pn(artifact.pn_labels);
  Embedding emb;
  emb.node_map.assign(artifact.instance.node_count(), -1);
  place_sections(vn.grouped("elem"), vn.series("pad"), cert.bin_of_item, pn.grouped("bin"),
                 emb.node_map);
  add_tree_paths(artifact.instance, emb);
  return emb;
}

Embedding witness_bpp_octopus(const ReductionArtifact& artifact, const BppCertificate& cert) {
  LabelIndex vn(artifact.vn_labels), pn(artifact.pn_labels);
  const auto legs = pn.grouped("leg");
  const auto long_section = vn.series("long");
  const int K = bpp_of(artifact).bin_count;
  const auto B = bpp_of(artifact).bin_size;

  Embedding emb;
  emb.node_map.assign(artifact.instance.node_count(), -1);
  // The long chain runs tip-to-tip over the last two legs and the root.
  for (std::int64_t k = 0; k < B; ++k) emb.node_map[long_section[k]] = legs[K][B - 1 - k];
  emb.node_map[long_section[B]] = pn.unique("root");
  for (std::int64_t k = B + 1; k <= 2 * B; ++k)
    emb.node_map[long_section[k]] = legs[K + 1][k - B - 1];

  std::vector<std::vector<NodeId>> bins(legs.begin(), legs.begin() + K);
  place_sections(vn.grouped("elem"), vn.series("pad"), cert.bin_of_item, bins, emb.node_map);
  add_tree_paths(artifact.instance, emb);
  return emb;
}

Embedding witness_bpp_2star(const ReductionArtifact& artifact, const BppCertificate& cert) {
  LabelIndex vn(artifact.vn_labels), pn(artifact.pn_labels);
  Embedding emb;
  emb.node_map.assign(artifact.instance.node_count(), -1);
  emb.node_map[vn.unique("root")] = pn.unique("root");
  place_sections(vn.grouped("item"), vn.series("pad"), cert.bin_of_item, pn.grouped("bin"),
                 emb.node_map);
  add_tree_paths(artifact.instance, emb);
  return emb;
}

Embedding witness_bpp_uniform_2star(const ReductionArtifact& artifact,
                                    const BppCertificate& cert) {
  LabelIndex vn(artifact.vn_labels), pn(artifact.pn_labels);
  const auto bins = pn.grouped("bin");
  Embedding emb;
  emb.node_map.assign(artifact.instance.node_count(), -1);
  emb.node_map[vn.unique("root")] = pn.unique("root");
  // Dummies take the root's children: bin roots first, then the bare leaves.
  std::vector<NodeId> root_children;
  for (const auto& bin : bins) root_children.push_back(bin[0]);
  for (NodeId leaf : pn.series("rootleaf")) root_children.push_back(leaf);
  const auto dummies = vn.series("dummy");
  for (size_t j = 0; j < dummies.size(); ++j) emb.node_map[dummies[j]] = root_children[j];
  // Items go onto bin leaves only.
  std::vector<std::vector<NodeId>> leaf_slots;
  for (const auto& bin : bins) leaf_slots.emplace_back(bin.begin() + 1, bin.end());
  place_sections(vn.grouped("item"), {}, cert.bin_of_item, leaf_slots, emb.node_map);
  add_tree_paths(artifact.instance, emb);
  return emb;
}

Embedding witness_3pp(const ReductionArtifact& artifact, const ThreePpCertificate& cert) {
  LabelIndex vn(artifact.vn_labels), pn(artifact.pn_labels);
  const auto leaves = vn.series("leaf");
  const auto groups = pn.grouped("grp");
  Embedding emb;
  emb.node_map.assign(artifact.instance.node_count(), -1);
  emb.node_map[vn.unique("root")] = pn.unique("root");
  for (size_t j = 0; j < cert.triples.size(); ++j)
    for (int k = 0; k < 3; ++k) emb.node_map[leaves[cert.triples[j][k]]] = groups[j][k];
  add_tree_paths(artifact.instance, emb);
  return emb;
}

Embedding witness_pp(const ReductionArtifact& artifact, const PpCertificate& cert) {
  LabelIndex vn(artifact.vn_labels), pn(artifact.pn_labels);
  const auto leaves = vn.series("leaf");
  const auto line = pn.series("pos");
  std::vector<int> left = cert.left;
  std::sort(left.begin(), left.end());
  std::set<int> in_left(left.begin(), left.end());
  Embedding emb;
  emb.node_map.assign(artifact.instance.node_count(), -1);
  size_t pos = 0;
  for (int i : left) emb.node_map[leaves[i]] = line[pos++];
  emb.node_map[vn.unique("root")] = line[pos++];
  for (size_t i = 0; i < leaves.size(); ++i)
    if (!in_left.count(static_cast<int>(i))) emb.node_map[leaves[i]] = line[pos++];
  add_tree_paths(artifact.instance, emb);
  return emb;
}

// Adjacency of a hyperedge node within the matching gadget, from labels.
struct DmGadget {
  NodeId r;
  std::vector<NodeId> t_nodes;                    // by hyperedge index
  std::map<NodeId, std::vector<int>> t_of_j;      // J node -> adjacent hyperedge indices
  std::vector<std::vector<NodeId>> j_neighbors;   // per hyperedge, ascending node id
  std::vector<std::vector<NodeId>> fillers;       // per filler, by k
};

DmGadget dm_gadget(const ReductionArtifact& artifact) {
  LabelIndex pn(artifact.pn_labels);
  DmGadget g;
  g.r = pn.unique("r");
  g.t_nodes = pn.series("t");
  g.j_neighbors.assign(g.t_nodes.size(), {});
  for (const auto& [parts, node] : pn.raw("p")) {
    int a = std::stoi(parts[2]), b = std::stoi(parts[3]);
    g.t_of_j[node] = {a, b};
    g.j_neighbors[a].push_back(node);
    g.j_neighbors[b].push_back(node);
  }
  for (const auto& [parts, node] : pn.raw("c")) {
    int a = std::stoi(parts[2]);
    g.t_of_j[node] = {a};
    g.j_neighbors[a].push_back(node);
  }
  for (auto& nbrs : g.j_neighbors) std::sort(nbrs.begin(), nbrs.end());
  g.fillers = pn.grouped("f");
  return g;
}

Embedding witness_3dm(const ReductionArtifact& artifact, const ThreeDmCertificate& cert) {
  LabelIndex vn(artifact.vn_labels);
  DmGadget gadget = dm_gadget(artifact);
  DmGroups groups = dm_groups(vn);
  const int q = std::get<ThreeDmSource>(artifact.source).q;

  std::vector<int> matching = cert.matching;
  std::sort(matching.begin(), matching.end());

  Embedding emb;
  const int n = artifact.instance.node_count();
  emb.node_map.assign(n, -1);
  std::vector<char> occupied(n, 0);
  auto occupy = [&](NodeId vn_node, NodeId pn_node) {
    emb.node_map[vn_node] = pn_node;
    occupied[pn_node] = 1;
  };
  occupy(vn.unique("root"), gadget.r);

  // Effective groups sit on the matched hyperedge nodes; their leaves fill
  // every adjacent pair/degree node.
  for (int k = 0; k < q; ++k) {
    NodeId t = gadget.t_nodes[matching[k]];
    occupy(groups.roots[k], t);
    emb.paths[{std::min(vn.unique("root"), groups.roots[k]),
               std::max(vn.unique("root"), groups.roots[k])}] = {gadget.r, t};
    const auto& nbrs = gadget.j_neighbors[matching[k]];
    for (size_t l = 0; l < nbrs.size(); ++l) {
      NodeId leaf = groups.leaves[k][l];
      occupy(leaf, nbrs[l]);
      emb.paths[{std::min(groups.roots[k], leaf), std::max(groups.roots[k], leaf)}] = {t, nbrs[l]};
    }
  }
  // Filler groups take the filler subtrees; each has one leaf left over.
  const int g = static_cast<int>(gadget.fillers.size());
  std::vector<NodeId> spare_leaves;
  for (int i = 0; i < g; ++i) {
    NodeId group_root = groups.roots[q + i];
    const auto& filler = gadget.fillers[i];
    occupy(group_root, filler[0]);
    emb.paths[{std::min(vn.unique("root"), group_root),
               std::max(vn.unique("root"), group_root)}] = {gadget.r, filler[0]};
    for (size_t k = 1; k < filler.size(); ++k) {
      NodeId leaf = groups.leaves[q + i][k - 1];
      occupy(leaf, filler[k]);
      emb.paths[{std::min(group_root, leaf), std::max(group_root, leaf)}] = {filler[0], filler[k]};
    }
    spare_leaves.push_back(groups.leaves[q + i].back());
  }
  // Spare leaves land on whatever is still free, routed through the hub.
  std::vector<NodeId> free_nodes;
  for (NodeId v = 0; v < n; ++v)
    if (!occupied[v]) free_nodes.push_back(v);
  if (free_nodes.size() != spare_leaves.size())
    throw std::logic_error("matching witness: free node count mismatch");
  for (int i = 0; i < g; ++i) {
    NodeId leaf = spare_leaves[i];
    NodeId target = free_nodes[i];
    NodeId group_root_at = gadget.fillers[i][0];
    std::vector<NodeId> path{group_root_at, gadget.r};
    auto jt = gadget.t_of_j.find(target);
    if (jt != gadget.t_of_j.end()) {
      path.push_back(gadget.t_nodes[jt->second.front()]);
      path.push_back(target);
    } else {
      path.push_back(target);  // an unmatched hyperedge node
    }
    emb.node_map[leaf] = target;
    NodeId group_root = groups.roots[q + i];
    emb.paths[{std::min(group_root, leaf), std::max(group_root, leaf)}] = std::move(path);
  }
  return emb;
}

}  // namespace

Embedding build_witness(const ReductionArtifact& artifact, const Certificate& certificate) {
  if (source_kind(artifact.source) != certificate_kind(certificate))
    throw std::invalid_argument("certificate kind does not match the artifact source");
  const std::string kind = base_reduction(artifact.reduction);
  if (kind == "ham") return witness_ham(artifact, std::get<HamCertificate>(certificate));
  if (kind == "bpp-line-line")
    return witness_bpp_line_line(artifact, std::get<BppCertificate>(certificate));
  if (kind == "bpp-octopus")
    return witness_bpp_octopus(artifact, std::get<BppCertificate>(certificate));
  if (kind == "bpp-2star")
    return witness_bpp_2star(artifact, std::get<BppCertificate>(certificate));
  if (kind == "bpp-uniform-2star")
    return witness_bpp_uniform_2star(artifact, std::get<BppCertificate>(certificate));
  if (kind == "3pp") return witness_3pp(artifact, std::get<ThreePpCertificate>(certificate));
  if (kind == "pp") return witness_pp(artifact, std::get<PpCertificate>(certificate));
  if (kind == "3dm") return witness_3dm(artifact, std::get<ThreeDmCertificate>(certificate));
  throw std::invalid_argument("unknown reduction: " + artifact.reduction);
}

namespace {

void require_criterion(const ReductionArtifact& artifact, const Embedding& emb) {
  auto report = validate_embedding(artifact.instance, emb);
  if (!report.ok())
    throw std::invalid_argument("embedding invalid: " + report.summary());
  if (artifact.instance.capacities_apply()) {
    if (!check_capacities(artifact.instance, emb))
      throw std::invalid_argument("embedding violates capacities");
  }
  if (artifact.instance.theta()) {
    Cost cost = embedding_cost(artifact.instance, emb);
    if (cost > *artifact.instance.theta())
      throw std::invalid_argument("embedding cost misses the artifact bound");
  }
}

// Bin of each item by where its vertices landed; items form connected
// chains/stars so one vertex decides, the rest only needs to agree.
BppCertificate bins_from_placement(const ReductionArtifact& artifact, const Embedding& emb,
                                   const std::vector<std::vector<NodeId>>& item_nodes,
                                   const std::vector<std::vector<NodeId>>& container_slots,
                                   std::optional<NodeId> overflow_node) {
  const auto& source = bpp_of(artifact);
  std::vector<int> container_of_pn(artifact.instance.node_count(), -1);
  for (size_t c = 0; c < container_slots.size(); ++c)
    for (NodeId v : container_slots[c]) container_of_pn[v] = static_cast<int>(c);

  BppCertificate cert;
  cert.bin_of_item.assign(item_nodes.size(), -1);
  std::vector<std::int64_t> load(container_slots.size(), 0);
  std::vector<int> deferred;
  for (size_t i = 0; i < item_nodes.size(); ++i) {
    int bin = -1;
    for (NodeId vn_node : item_nodes[i]) {
      int c = container_of_pn[emb.node_map[vn_node]];
      if (c < 0) {
        if (overflow_node && emb.node_map[vn_node] == *overflow_node &&
            item_nodes[i].size() == 1) {
          bin = -2;  // a floating unit item, settled below
          break;
        }
        throw std::invalid_argument("item vertex sits outside every bin");
      }
      if (bin == -1) bin = c;
      if (bin != c) throw std::invalid_argument("item straddles two bins");
    }
    if (bin == -2) {
      deferred.push_back(static_cast<int>(i));
    } else {
      cert.bin_of_item[i] = bin;
      load[bin] += source.items[i];
    }
  }
  for (int i : deferred) {
    int chosen = -1;
    for (size_t b = 0; b < load.size(); ++b) {
      if (load[b] + source.items[i] <= source.bin_size) {
        chosen = static_cast<int>(b);
        break;
      }
    }
    if (chosen < 0) throw std::invalid_argument("no bin has room for a floating unit item");
    cert.bin_of_item[i] = chosen;
    load[chosen] += source.items[i];
  }
  return cert;
}

Certificate extract_ham(const ReductionArtifact&, const Embedding& emb) {
  return HamCertificate{emb.node_map};
}

Certificate extract_bpp_line_line(const ReductionArtifact& artifact, const Embedding& emb) {
  LabelIndex vn(artifact.vn_labels), pn(artifact.pn_labels);
  return bins_from_placement(artifact, emb, vn.grouped("elem"), pn.grouped("bin"), std::nullopt);
}

Certificate extract_bpp_octopus(const ReductionArtifact& artifact, const Embedding& emb) {
  LabelIndex vn(artifact.vn_labels), pn(artifact.pn_labels);
  const auto legs = pn.grouped("leg");
  // Legs hosting the forced long chain cannot be bins.
  std::set<int> long_legs;
  std::vector<char> is_long_image(artifact.instance.node_count(), 0);
  for (NodeId v : vn.series("long")) is_long_image[emb.node_map[v]] = 1;
  std::vector<std::vector<NodeId>> bins;
  for (const auto& leg : legs) {
    bool used = std::any_of(leg.begin(), leg.end(),
                            [&](NodeId v) { return is_long_image[v] != 0; });
    if (!used) bins.push_back(leg);
  }
  if (static_cast<int>(bins.size()) != bpp_of(artifact).bin_count)
    throw std::invalid_argument("long chain does not pin exactly two legs");
  return bins_from_placement(artifact, emb, vn.grouped("elem"), bins, std::nullopt);
}

Certificate extract_bpp_2star(const ReductionArtifact& artifact, const Embedding& emb) {
  LabelIndex vn(artifact.vn_labels), pn(artifact.pn_labels);
  return bins_from_placement(artifact, emb, vn.grouped("item"), pn.grouped("bin"),
                             pn.unique("root"));
}

Certificate extract_bpp_uniform_2star(const ReductionArtifact& artifact, const Embedding& emb) {
  LabelIndex vn(artifact.vn_labels), pn(artifact.pn_labels);
  return bins_from_placement(artifact, emb, vn.grouped("item"), pn.grouped("bin"), std::nullopt);
}

Certificate extract_3pp(const ReductionArtifact& artifact, const Embedding& emb) {
  LabelIndex vn(artifact.vn_labels), pn(artifact.pn_labels);
  if (emb.node_map[vn.unique("root")] != pn.unique("root"))
    throw std::invalid_argument("hub vertex is not on the gadget root");
  const auto groups = pn.grouped("grp");
  const auto leaves = vn.series("leaf");
  std::vector<int> group_of_pn(artifact.instance.node_count(), -1);
  for (size_t j = 0; j < groups.size(); ++j)
    for (NodeId v : groups[j]) group_of_pn[v] = static_cast<int>(j);
  std::vector<std::vector<int>> members(groups.size());
  for (size_t i = 0; i < leaves.size(); ++i) {
    int j = group_of_pn[emb.node_map[leaves[i]]];
    if (j < 0) throw std::invalid_argument("leaf image outside every group");
    members[j].push_back(static_cast<int>(i));
  }
  ThreePpCertificate cert;
  for (const auto& triple : members) {
    if (triple.size() != 3) throw std::invalid_argument("group does not hold exactly 3 leaves");
    cert.triples.push_back({triple[0], triple[1], triple[2]});
  }
  return cert;
}

Certificate extract_pp(const ReductionArtifact& artifact, const Embedding& emb) {
  LabelIndex vn(artifact.vn_labels), pn(artifact.pn_labels);
  const auto line = pn.series("pos");
  std::vector<int> pos_of(artifact.instance.node_count(), -1);
  for (size_t k = 0; k < line.size(); ++k) pos_of[line[k]] = static_cast<int>(k);
  const int root_pos = pos_of[emb.node_map[vn.unique("root")]];
  const auto leaves = vn.series("leaf");
  PpCertificate cert;
  for (size_t i = 0; i < leaves.size(); ++i)
    if (pos_of[emb.node_map[leaves[i]]] < root_pos) cert.left.push_back(static_cast<int>(i));
  return cert;
}

Certificate extract_3dm(const ReductionArtifact& artifact, const Embedding& emb) {
  LabelIndex vn(artifact.vn_labels);
  DmGadget gadget = dm_gadget(artifact);
  DmGroups groups = dm_groups(vn);
  std::map<NodeId, int> t_index;
  for (size_t j = 0; j < gadget.t_nodes.size(); ++j)
    t_index[gadget.t_nodes[j]] = static_cast<int>(j);
  ThreeDmCertificate cert;
  for (NodeId root : groups.roots) {
    auto it = t_index.find(emb.node_map[root]);
    if (it != t_index.end()) cert.matching.push_back(it->second);
  }
  std::sort(cert.matching.begin(), cert.matching.end());
  return cert;
}

}  // namespace

Certificate extract_certificate(const ReductionArtifact& artifact, const Embedding& emb) {
  require_criterion(artifact, emb);
  const std::string kind = base_reduction(artifact.reduction);
  if (kind == "ham") return extract_ham(artifact, emb);
  if (kind == "bpp-line-line") return extract_bpp_line_line(artifact, emb);
  if (kind == "bpp-octopus") return extract_bpp_octopus(artifact, emb);
  if (kind == "bpp-2star") return extract_bpp_2star(artifact, emb);
  if (kind == "bpp-uniform-2star") return extract_bpp_uniform_2star(artifact, emb);
  if (kind == "3pp") return extract_3pp(artifact, emb);
  if (kind == "pp") return extract_pp(artifact, emb);
  if (kind == "3dm") return extract_3dm(artifact, emb);
  throw std::invalid_argument("unknown reduction: " + artifact.reduction);
}

}  // namespace vne
