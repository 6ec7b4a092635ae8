#pragma once

#include <map>
#include <string>
#include <vector>

#include "vne/embedding.hpp"
#include "vne/instance.hpp"
#include "vne/sources.hpp"

namespace vne {

// A generated hardness-gadget instance. Labels name every node's role so
// certificates stay extractable after a round trip through JSON.
struct ReductionArtifact {
  Instance instance;
  std::map<NodeId, std::string> vn_labels;
  std::map<NodeId, std::string> pn_labels;
  SourceProblem source;
  std::string reduction;               // generator token, e.g. "bpp-line-line"
  std::vector<std::string> warnings;   // below-threshold notes

  const std::string& vn_label(NodeId v) const { return vn_labels.at(v); }
  const std::string& pn_label(NodeId v) const { return pn_labels.at(v); }
};

struct ReduceOptions {
  // Emit gadgets below the soundness thresholds (3-partition m < 4,
  // matching q < 3). Such artifacts carry a warning and are meant for
  // witness-validation use only.
  bool allow_below_threshold = false;
};

// Hamiltonian path -> uniform line on the source graph, theta = n - 1.
ReductionArtifact reduce_ham(const HamSource& source);

// Bin packing -> line on line, zero-cost target. Element chains must land
// inside zero-cost bin segments.
ReductionArtifact reduce_bpp_line_on_line(const BppSource& source);

// Bin packing -> line on a uniform "octopus" tree: root plus K+2 legs of
// length B; a long chain pins two legs and the root.
ReductionArtifact reduce_bpp_line_on_uniform_tree(const BppSource& source);

// Bin packing -> 2-star on 2-star, zero-cost target.
ReductionArtifact reduce_bpp_2star_on_2star(const BppSource& source);

// Bin packing -> 2-star on a uniform 2-star; heavy dummy leaves pin the
// root, items must pack into bin leaves. Pads the items to full volume.
ReductionArtifact reduce_bpp_2star_on_uniform_2star(const BppSource& source);

// 3-partition -> star on 2-star with every capacity equal to the triple sum.
ReductionArtifact reduce_3pp_star_on_2star(const ThreePpSource& source,
                                           const ReduceOptions& options = {});

// Partition -> star on a line whose edges all carry half the total demand.
ReductionArtifact reduce_pp_star_on_line(const PpSource& source);

// 3-dimensional matching -> oversubscribed 2-star on a gadget graph of
// hyperedge nodes, pair/degree-filler nodes, and filler subtrees.
ReductionArtifact reduce_3dm_oversub_2star(const ThreeDmSource& source,
                                           const ReduceOptions& options = {});

// Cost-zero gadget to capacitated gadget: zero-cost edges get capacity
// |E_vn|, unit-cost edges get capacity zero. Requires 0/1 demands and
// costs and theta == 0.
ReductionArtifact transform_wvne0_to_cvne(const ReductionArtifact& artifact);

// Forward direction of each proof: a source solution becomes a concrete
// embedding that meets the artifact's criterion.
Embedding build_witness(const ReductionArtifact& artifact, const Certificate& certificate);

// Backward direction: read a source solution off a qualifying embedding.
// Throws std::invalid_argument when the embedding misses the criterion.
Certificate extract_certificate(const ReductionArtifact& artifact, const Embedding& emb);

// Generator registry for the command line; kind tokens:
// ham, bpp-line-line, bpp-octopus, bpp-2star, bpp-uniform-2star, 3pp, pp, 3dm.
ReductionArtifact reduce(const std::string& kind, const SourceProblem& source,
                         const ReduceOptions& options = {});
std::vector<std::string> reduction_kinds();

}  // namespace vne
