#pragma once

#include <string>

#include "json.hpp"
#include "vne/embedding.hpp"
#include "vne/instance.hpp"
#include "vne/reductions.hpp"
#include "vne/sources.hpp"

namespace vne {

using Json = nlohmann::json;

// Canonical instance format:
// {"variant":"wvne|cvne|wcvne","theta":int|null,
//  "vn":{"n":int,"edges":[[u,v,demand],...]},
//  "pn":{"n":int,"edges":[[u,v,cost,capacity],...]}}
// capacity -1 encodes an unbounded edge.
Json to_json(const Instance& instance);
Instance instance_from_json(const Json& j);

// {"node_map":[...],"paths":{"u-v":[n0,n1,...],...}} with u < v in keys.
Json to_json(const Embedding& emb);
Embedding embedding_from_json(const Json& j);

// {"kind":"bpp","A":[...],"B":int,"K":int} and friends.
Json to_json(const SourceProblem& source);
SourceProblem source_from_json(const Json& j);

Json to_json(const Certificate& certificate);
Certificate certificate_from_json(const Json& j);

// Instance fields plus "labels", "source", "reduction", and optional
// "warnings".
Json to_json(const ReductionArtifact& artifact);
ReductionArtifact artifact_from_json(const Json& j);

// Fixed two-space indentation with sorted keys; regeneration is
// byte-stable.
std::string dump_canonical(const Json& j);

// Reads and parses a file, wrapping failures in ParseError with context.
Json load_json_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace vne
