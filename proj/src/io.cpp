#include "vne/io.hpp"

#include <fstream>
#include <sstream>

namespace vne {

namespace {

const Json& field(const Json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string(where) + ": missing field '" + key + "'");
  return j.at(key);
}

std::int64_t int_field(const Json& j, const char* key, const char* where) {
  const Json& f = field(j, key, where);
  if (!f.is_number_integer())
    throw ParseError(std::string(where) + ": field '" + key + "' must be an integer");
  return f.get<std::int64_t>();
}

int checked_int(const Json& j, const char* where) {
  if (!j.is_number_integer()) throw ParseError(std::string(where) + ": expected an integer");
  return j.get<int>();
}

}  // namespace

Json to_json(const Instance& instance) {
  Json vn_edges = Json::array();
  for (const auto& e : instance.vn().edges()) vn_edges.push_back({e.u, e.v, e.demand});
  Json pn_edges = Json::array();
  for (const auto& e : instance.pn().edges()) pn_edges.push_back({e.u, e.v, e.cost, e.capacity});
  Json j;
  j["variant"] = to_string(instance.variant());
  j["theta"] = instance.theta() ? Json(*instance.theta()) : Json(nullptr);
  j["vn"] = {{"n", instance.vn().node_count()}, {"edges", vn_edges}};
  j["pn"] = {{"n", instance.pn().node_count()}, {"edges", pn_edges}};
  return j;
}

Instance instance_from_json(const Json& j) {
  const std::string variant_name = field(j, "variant", "instance").get<std::string>();
  Variant variant;
  try {
    variant = variant_from_string(variant_name);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  std::optional<Cost> theta;
  if (j.contains("theta") && !j.at("theta").is_null())
    theta = int_field(j, "theta", "instance");

  const Json& vn_json = field(j, "vn", "instance");
  const Json& pn_json = field(j, "pn", "instance");
  std::vector<VnEdge> vn_edges;
  for (size_t i = 0; i < field(vn_json, "edges", "instance.vn").size(); ++i) {
    const Json& e = vn_json.at("edges").at(i);
    const std::string where = "instance.vn.edges[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 3)
      throw ParseError(where + ": expected [u, v, demand]");
    vn_edges.push_back({checked_int(e.at(0), where.c_str()), checked_int(e.at(1), where.c_str()),
                        Demand{e.at(2).get<std::int64_t>()}});
  }
  std::vector<PnEdge> pn_edges;
  for (size_t i = 0; i < field(pn_json, "edges", "instance.pn").size(); ++i) {
    const Json& e = pn_json.at("edges").at(i);
    const std::string where = "instance.pn.edges[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 4)
      throw ParseError(where + ": expected [u, v, cost, capacity]");
    pn_edges.push_back({checked_int(e.at(0), where.c_str()), checked_int(e.at(1), where.c_str()),
                        Cost{e.at(2).get<std::int64_t>()},
                        Capacity{e.at(3).get<std::int64_t>()}});
  }
  try {
    return Instance(
        VirtualNetwork(static_cast<int>(int_field(vn_json, "n", "instance.vn")),
                       std::move(vn_edges)),
        PhysicalNetwork(static_cast<int>(int_field(pn_json, "n", "instance.pn")),
                        std::move(pn_edges)),
        variant, theta);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
}

Json to_json(const Embedding& emb) {
  Json paths = Json::object();
  for (const auto& [key, path] : emb.paths)
    paths[std::to_string(key.first) + "-" + std::to_string(key.second)] = path;
  return Json{{"node_map", emb.node_map}, {"paths", paths}};
}

Embedding embedding_from_json(const Json& j) {
  Embedding emb;
  for (const auto& v : field(j, "node_map", "embedding"))
    emb.node_map.push_back(checked_int(v, "embedding.node_map"));
  for (const auto& [key, value] : field(j, "paths", "embedding").items()) {
    auto sep = key.find('-');
    if (sep == std::string::npos)
      throw ParseError("embedding.paths: key '" + key + "' is not of the form u-v");
    int u, v;
    try {
      u = std::stoi(key.substr(0, sep));
      v = std::stoi(key.substr(sep + 1));
    } catch (const std::exception&) {
      throw ParseError("embedding.paths: key '" + key + "' is not of the form u-v");
    }
    if (u >= v) throw ParseError("embedding.paths: key '" + key + "' must have u < v");
    std::vector<NodeId> path;
    for (const auto& node : value) path.push_back(checked_int(node, "embedding.paths"));
    emb.paths[{u, v}] = std::move(path);
  }
  return emb;
}

Json to_json(const SourceProblem& source) {
  Json j;
  j["kind"] = source_kind(source);
  if (const auto* s = std::get_if<HamSource>(&source)) {
    j["n"] = s->n;
    Json edges = Json::array();
    for (auto [u, v] : s->edges) edges.push_back({u, v});
    j["edges"] = edges;
  } else if (const auto* s = std::get_if<BppSource>(&source)) {
    j["A"] = s->items;
    j["B"] = s->bin_size;
    j["K"] = s->bin_count;
  } else if (const auto* s = std::get_if<PpSource>(&source)) {
    j["A"] = s->items;
  } else if (const auto* s = std::get_if<ThreePpSource>(&source)) {
    j["A"] = s->items;
  } else {
    const auto& dm = std::get<ThreeDmSource>(source);
    j["q"] = dm.q;
    Json triplets = Json::array();
    for (const auto& t : dm.triplets) triplets.push_back({t[0], t[1], t[2]});
    j["triplets"] = triplets;
  }
  return j;
}

SourceProblem source_from_json(const Json& j) {
  const std::string kind = field(j, "kind", "source").get<std::string>();
  if (kind == "ham") {
    HamSource s;
    s.n = static_cast<int>(int_field(j, "n", "source"));
    for (const auto& e : field(j, "edges", "source")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("source.edges: expected [u, v]");
      s.edges.emplace_back(checked_int(e.at(0), "source.edges"),
                           checked_int(e.at(1), "source.edges"));
    }
    return s;
  }
  if (kind == "bpp") {
    BppSource s;
    for (const auto& a : field(j, "A", "source")) s.items.push_back(a.get<std::int64_t>());
    s.bin_size = int_field(j, "B", "source");
    s.bin_count = static_cast<int>(int_field(j, "K", "source"));
    return s;
  }
  if (kind == "pp") {
    PpSource s;
    for (const auto& a : field(j, "A", "source")) s.items.push_back(a.get<std::int64_t>());
    return s;
  }
  if (kind == "3pp") {
    ThreePpSource s;
    for (const auto& a : field(j, "A", "source")) s.items.push_back(a.get<std::int64_t>());
    return s;
  }
  if (kind == "3dm") {
    ThreeDmSource s;
    s.q = static_cast<int>(int_field(j, "q", "source"));
    for (const auto& t : field(j, "triplets", "source")) {
      if (!t.is_array() || t.size() != 3) throw ParseError("source.triplets: expected [x, y, z]");
      s.triplets.push_back({checked_int(t.at(0), "source.triplets"),
                            checked_int(t.at(1), "source.triplets"),
                            checked_int(t.at(2), "source.triplets")});
    }
    return s;
  }
  throw ParseError("source: unknown kind '" + kind + "'");
}

Json to_json(const Certificate& certificate) {
  Json j;
  j["kind"] = certificate_kind(certificate);
  if (const auto* c = std::get_if<HamCertificate>(&certificate)) {
    j["path"] = c->path;
  } else if (const auto* c = std::get_if<BppCertificate>(&certificate)) {
    j["bins"] = c->bin_of_item;
  } else if (const auto* c = std::get_if<PpCertificate>(&certificate)) {
    j["left"] = c->left;
  } else if (const auto* c = std::get_if<ThreePpCertificate>(&certificate)) {
    Json triples = Json::array();
    for (const auto& t : c->triples) triples.push_back({t[0], t[1], t[2]});
    j["triples"] = triples;
  } else {
    j["matching"] = std::get<ThreeDmCertificate>(certificate).matching;
  }
  return j;
}

Certificate certificate_from_json(const Json& j) {
  const std::string kind = field(j, "kind", "certificate").get<std::string>();
  if (kind == "ham") {
    HamCertificate c;
    for (const auto& v : field(j, "path", "certificate"))
      c.path.push_back(checked_int(v, "certificate.path"));
    return c;
  }
  if (kind == "bpp") {
    BppCertificate c;
    for (const auto& v : field(j, "bins", "certificate"))
      c.bin_of_item.push_back(checked_int(v, "certificate.bins"));
    return c;
  }
  if (kind == "pp") {
    PpCertificate c;
    for (const auto& v : field(j, "left", "certificate"))
      c.left.push_back(checked_int(v, "certificate.left"));
    return c;
  }
  if (kind == "3pp") {
    ThreePpCertificate c;
    for (const auto& t : field(j, "triples", "certificate")) {
      if (!t.is_array() || t.size() != 3)
        throw ParseError("certificate.triples: expected [i, j, k]");
      c.triples.push_back({checked_int(t.at(0), "certificate.triples"),
                           checked_int(t.at(1), "certificate.triples"),
                           checked_int(t.at(2), "certificate.triples")});
    }
    return c;
  }
  if (kind == "3dm") {
    ThreeDmCertificate c;
    for (const auto& v : field(j, "matching", "certificate"))
      c.matching.push_back(checked_int(v, "certificate.matching"));
    return c;
  }
  throw ParseError("certificate: unknown kind '" + kind + "'");
}

Json to_json(const ReductionArtifact& artifact) {
  Json j = to_json(artifact.instance);
  Json vn_labels = Json::object(), pn_labels = Json::object();
  for (const auto& [node, label] : artifact.vn_labels) vn_labels[std::to_string(node)] = label;
  for (const auto& [node, label] : artifact.pn_labels) pn_labels[std::to_string(node)] = label;
  j["labels"] = {{"vn", vn_labels}, {"pn", pn_labels}};
  j["source"] = to_json(artifact.source);
  j["reduction"] = artifact.reduction;
  if (!artifact.warnings.empty()) j["warnings"] = artifact.warnings;
  return j;
}

ReductionArtifact artifact_from_json(const Json& j) {
  Instance instance = instance_from_json(j);
  const Json& labels = field(j, "labels", "artifact");
  std::map<NodeId, std::string> vn_labels, pn_labels;
  for (const auto& [key, value] : field(labels, "vn", "artifact.labels").items())
    vn_labels[std::stoi(key)] = value.get<std::string>();
  for (const auto& [key, value] : field(labels, "pn", "artifact.labels").items())
    pn_labels[std::stoi(key)] = value.get<std::string>();
  ReductionArtifact artifact{std::move(instance), std::move(vn_labels), std::move(pn_labels),
                             source_from_json(field(j, "source", "artifact")),
                             field(j, "reduction", "artifact").get<std::string>(),
                             {}};
  if (j.contains("warnings"))
    for (const auto& w : j.at("warnings")) artifact.warnings.push_back(w.get<std::string>());
  return artifact;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << contents;
}

}  // namespace vne
