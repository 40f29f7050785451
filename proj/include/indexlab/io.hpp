#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "indexlab/exact.hpp"
#include "indexlab/iteration.hpp"
#include "indexlab/morse.hpp"
#include "indexlab/prover.hpp"
#include "indexlab/symplectic.hpp"

namespace indexlab::io {

using json = nlohmann::json;

// Every reader takes the JSON path of its argument and reports malformed
// input as ParseError(path, reason), e.g. "models[0].dec.blocks[2].rho".

json to_json(const ExactReal& x);
ExactReal exact_from_json(const json& j, const std::string& path);

/// Rational as "p" or "p/q".
json rational_to_json(const ExactReal& x);

json to_json(const Block& block);
Block block_from_json(const json& j, const std::string& path);

json to_json(const NormalFormDecomposition& dec);
NormalFormDecomposition decomposition_from_json(const json& j, const std::string& path);

json to_json(const GeodesicModel& g);
GeodesicModel model_from_json(const json& j, const std::string& path);

struct ModelSet {
  std::optional<int> n;  // from the file, or the common n of its models
  std::vector<GeodesicModel> models;
};

/// Accepts {"n": 2, "models": [...]} or a bare array of models.
ModelSet models_from_json(const json& j);

json to_json(const Violation& v);
json to_json(const SymbolicFact& fact);
json to_json(const ProofTrace& trace);
ProofTrace trace_from_json(const json& j, const std::string& path);

/// {"n": n, "traces": [...]}.
json certificate(int n, const std::vector<ProofTrace>& traces);

/// Re-checks a serialized certificate: every trace must parse and pass
/// verify_trace. Returns the problems found, prefixed with the trace index.
std::vector<std::string> verify_certificate(const json& cert);

/// Reads and parses a JSON file; syntax errors carry the byte offset.
json load_file(const std::string& path);

}  // namespace indexlab::io
