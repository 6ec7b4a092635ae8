#pragma once

#include <optional>
#include <string>

#include "vne/graph.hpp"

namespace vne {

// Which constraints apply: cost bound only, capacities only, or both.
enum class Variant { kWvne, kCvne, kWcvne };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

// A problem instance: one virtual network to embed onto one physical
// network of the same size, plus an optional decision bound theta.
class Instance {
 public:
  Instance(VirtualNetwork vn, PhysicalNetwork pn, Variant variant,
           std::optional<Cost> theta = std::nullopt);

  const VirtualNetwork& vn() const { return vn_; }
  const PhysicalNetwork& pn() const { return pn_; }
  Variant variant() const { return variant_; }
  const std::optional<Cost>& theta() const { return theta_; }
  int node_count() const { return vn_.node_count(); }

  bool capacities_apply() const { return variant_ != Variant::kWvne; }

 private:
  VirtualNetwork vn_;
  PhysicalNetwork pn_;
  Variant variant_;
  std::optional<Cost> theta_;
};

}  // namespace vne
