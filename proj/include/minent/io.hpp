#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "minent/metrics.hpp"
#include "minent/reductions.hpp"

namespace minent {

/// A pair of distributions for the pseudometric commands.
struct MetricPair {
  Distribution p;
  Distribution q;
};

using Instance = std::variant<SubsetSumInstance, ThreePartitionInstance,
                              TransportationPolytope, ChannelFamily, MetricPair>;

using Json = nlohmann::ordered_json;

/// Parses and validates an instance document. Probabilities must be exact
/// "a/b" strings (float literals are rejected); integers may be JSON
/// integers or decimal strings. Throws ParseError / SchemaError /
/// ValueError.
Instance parse_instance(const std::string& text);

const char* instance_kind_name(const Instance& instance);

Json instance_to_json(const Instance& instance);

Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

struct RunOptions {
  std::uint64_t limit = kDefaultVertexLimit;
  int width_exp = kDefaultWidthExp;
  std::uint64_t seed = 0;  ///< reserved for instance-generation tooling
};

/// One CLI invocation: the result document plus the process exit code
/// (0 = witness/value, 1 = no_witness, 2 = limit_exceeded; errors are
/// reported by throwing and mapped to codes > 2 by the frontend).
struct RunOutcome {
  int exit_code = 0;
  Json document;
};

/// Dispatches a solve/reduce command against a parsed instance.
RunOutcome run_command(const std::string& command, const Instance& instance,
                       const RunOptions& opts = {});

/// Re-verifies the witness of a previously emitted result document against
/// an instance.
RunOutcome run_verify(const Instance& instance, const Json& result_document);

}  // namespace minent
