#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vne/types.hpp"

namespace vne {

// Hamiltonian path: does the graph admit a path visiting every vertex once?
struct HamSource {
  int n = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;
};

// Bin packing: can the items be split into bin_count groups of sum <= bin_size?
struct BppSource {
  std::vector<std::int64_t> items;
  std::int64_t bin_size = 0;
  int bin_count = 0;
};

// Partition: split the items into two halves of equal sum.
struct PpSource {
  std::vector<std::int64_t> items;
  std::int64_t half_sum() const;
};

// 3-partition: split 3m items into m triples, each summing to target().
struct ThreePpSource {
  std::vector<std::int64_t> items;
  int m() const { return static_cast<int>(items.size()) / 3; }
  std::int64_t target() const;
};

// 3-dimensional matching over X, Y, Z of size q each; triplets hold
// per-set coordinates in [0, q).
struct ThreeDmSource {
  int q = 0;
  std::vector<std::array<int, 3>> triplets;
};

using SourceProblem = std::variant<HamSource, BppSource, PpSource, ThreePpSource, ThreeDmSource>;

std::string source_kind(const SourceProblem& source);

// Throws std::invalid_argument when the payload violates its problem's
// well-formedness rules (item sums, sizes, coordinate ranges).
void validate_source(const SourceProblem& source);

struct HamCertificate {
  std::vector<NodeId> path;
};
struct BppCertificate {
  std::vector<int> bin_of_item;
};
struct PpCertificate {
  std::vector<int> left;  // indices of one half
};
struct ThreePpCertificate {
  std::vector<std::array<int, 3>> triples;  // item indices
};
struct ThreeDmCertificate {
  std::vector<int> matching;  // triplet indices
};

using Certificate =
    std::variant<HamCertificate, BppCertificate, PpCertificate, ThreePpCertificate,
                 ThreeDmCertificate>;

std::string certificate_kind(const Certificate& certificate);

// Pure predicate: does the certificate solve the source problem?
// Throws std::invalid_argument when the certificate kind does not match.
bool verify_source(const SourceProblem& source, const Certificate& certificate);

struct SourceAnswer {
  bool yes = false;
  std::optional<Certificate> certificate;  // present on yes
};

// Exhaustive decision for small sources (items <= 10, q <= 4, HAM n <= 8).
// Deterministic: the first certificate in lexicographic search order.
// Throws BudgetError beyond those sizes.
SourceAnswer brute_force_source(const SourceProblem& source);

}  // namespace vne
