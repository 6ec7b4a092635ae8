#include "vne/instance.hpp"

namespace vne {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::kWvne: return "wvne";
    case Variant::kCvne: return "cvne";
    case Variant::kWcvne: return "wcvne";
  }
  return "?";
}

Variant variant_from_string(const std::string& s) {
  if (s == "wvne") return Variant::kWvne;
  if (s == "cvne") return Variant::kCvne;
  if (s == "wcvne") return Variant::kWcvne;
  throw std::invalid_argument("unknown variant: " + s);
}

Instance::Instance(VirtualNetwork vn, PhysicalNetwork pn, Variant variant,
                   std::optional<Cost> theta)
    : vn_(std::move(vn)), pn_(std::move(pn)), variant_(variant), theta_(theta) {
  if (vn_.node_count() != pn_.node_count())
    throw std::invalid_argument("instance: virtual and physical node counts differ");
  if (theta_ && *theta_ < 0) throw std::invalid_argument("instance: negative theta");
}

}  // namespace vne
