#include "minent/io.hpp"

#include <chrono>
#include <set>

namespace minent {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_fields(const Json& j, const std::set<std::string>& fields) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!fields.count(key))
      throw SchemaError("unexpected field '" + key + "'");
  }
  for (const auto& f : fields)
    if (!j.contains(f)) throw SchemaError("missing field '" + f + "'");
}

Integer integer_from_json(const Json& j, const std::string& context) {
  if (j.is_number_float())
    throw ValueError("float literal in '" + context + "'; use an integer");
  if (j.is_number_integer()) {
    if (j.is_number_unsigned())
      return Integer(static_cast<unsigned long>(j.get<std::uint64_t>()));
    return Integer(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty() ||
        s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) !=
            std::string::npos)
      throw ValueError("'" + s + "' is not a decimal integer in '" + context +
                       "'");
    return Integer(s, 10);
  }
  throw SchemaError("expected an integer in '" + context + "'");
}

Rational rational_from_json(const Json& j, const std::string& context) {
  if (!j.is_string())
    throw ValueError("probabilities must be exact \"a/b\" strings in '" +
                     context + "'");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ValueError(std::string(e.what()) + " in '" + context + "'");
  }
}

Distribution distribution_from_json(const Json& j, const std::string& context) {
  if (!j.is_array() || j.empty())
    throw SchemaError("'" + context + "' must be a nonempty array");
  RationalVector v(static_cast<Index>(j.size()));
  Index i = 0;
  for (const auto& cell : j) v(i++) = rational_from_json(cell, context);
  try {
    return Distribution(std::move(v));
  } catch (const std::invalid_argument& e) {
    throw ValueError(std::string(e.what()) + " in '" + context + "'");
  }
}

std::vector<Integer> weights_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw SchemaError("'weights' must be a nonempty array");
  std::vector<Integer> out;
  out.reserve(j.size());
  for (const auto& cell : j) out.push_back(integer_from_json(cell, "weights"));
  return out;
}

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json distribution_to_json(const Distribution& d) {
  Json out = Json::array();
  for (Index i = 0; i < d.size(); ++i) out.push_back(rational_to_string(d[i]));
  return out;
}

Json interval_to_json(const RealInterval& v) {
  return Json::array({v.lower_string(), v.upper_string()});
}

Json stats_json(std::uint64_t vertices_visited, Clock::time_point start) {
  Json stats;
  stats["vertices_visited"] = vertices_visited;
  stats["elapsed"] = seconds_since(start);
  return stats;
}

const char* claim_name(CertificateClaim claim) {
  switch (claim) {
    case CertificateClaim::kMember:
      return "member";
    case CertificateClaim::kRowDeterministic:
      return "row_deterministic";
    case CertificateClaim::kRowDeterministicUniformCols:
      return "row_deterministic_uniform_cols";
  }
  return "member";
}

CertificateClaim claim_from_name(const std::string& name) {
  if (name == "member") return CertificateClaim::kMember;
  if (name == "row_deterministic") return CertificateClaim::kRowDeterministic;
  if (name == "row_deterministic_uniform_cols")
    return CertificateClaim::kRowDeterministicUniformCols;
  throw SchemaError("unknown claim '" + name + "'");
}

}  // namespace

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j)
      row.push_back(rational_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array() || j.front().empty())
    throw SchemaError("witness must be a nonempty matrix of \"a/b\" strings");
  const Index n = static_cast<Index>(j.size());
  const Index m = static_cast<Index>(j.front().size());
  RationalMatrix out(n, m);
  Index i = 0;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<Index>(row.size()) != m)
      throw SchemaError("ragged witness matrix");
    Index jj = 0;
    for (const auto& cell : row)
      out(i, jj++) = rational_from_json(cell, "witness");
    ++i;
  }
  return out;
}

Instance parse_instance(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object()) throw SchemaError("instance must be a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw SchemaError("missing string field 'kind'");
  const std::string kind = j["kind"].get<std::string>();

  auto checked = [&](auto make) -> Instance {
    try {
      return make();
    } catch (const MalformedInstance& e) {
      throw ValueError(e.what());
    } catch (const std::invalid_argument& e) {
      throw ValueError(e.what());
    }
  };

  if (kind == "subset_sum") {
    require_fields(j, {"kind", "weights", "target"});
    return checked([&]() -> Instance {
      SubsetSumInstance inst{weights_from_json(j["weights"]),
                             integer_from_json(j["target"], "target")};
      validate(inst);
      return inst;
    });
  }
  if (kind == "three_partition") {
    require_fields(j, {"kind", "weights", "bound"});
    return checked([&]() -> Instance {
      ThreePartitionInstance inst{weights_from_json(j["weights"]),
                                  integer_from_json(j["bound"], "bound")};
      validate(inst);
      return inst;
    });
  }
  if (kind == "transportation") {
    require_fields(j, {"kind", "p", "q"});
    return checked([&]() -> Instance {
      return TransportationPolytope(distribution_from_json(j["p"], "p"),
                                    distribution_from_json(j["q"], "q"));
    });
  }
  if (kind == "channel_family") {
    require_fields(j, {"kind", "p", "m"});
    return checked([&]() -> Instance {
      Integer m = integer_from_json(j["m"], "m");
      if (m < 1 || !m.fits_slong_p())
        throw ValueError("output alphabet size m must be a small positive integer");
      return ChannelFamily(distribution_from_json(j["p"], "p"),
                           static_cast<Index>(m.get_si()));
    });
  }
  if (kind == "metric_pair") {
    require_fields(j, {"kind", "p", "q"});
    return checked([&]() -> Instance {
      return MetricPair{distribution_from_json(j["p"], "p"),
                        distribution_from_json(j["q"], "q")};
    });
  }
  throw SchemaError("unknown instance kind '" + kind + "'");
}

const char* instance_kind_name(const Instance& instance) {
  struct Visitor {
    const char* operator()(const SubsetSumInstance&) { return "subset_sum"; }
    const char* operator()(const ThreePartitionInstance&) {
      return "three_partition";
    }
    const char* operator()(const TransportationPolytope&) {
      return "transportation";
    }
    const char* operator()(const ChannelFamily&) { return "channel_family"; }
    const char* operator()(const MetricPair&) { return "metric_pair"; }
  };
  return std::visit(Visitor{}, instance);
}

Json instance_to_json(const Instance& instance) {
  Json j;
  j["kind"] = instance_kind_name(instance);
  if (const auto* ss = std::get_if<SubsetSumInstance>(&instance)) {
    Json w = Json::array();
    for (const Integer& d : ss->weights) w.push_back(integer_to_json(d));
    j["weights"] = std::move(w);
    j["target"] = integer_to_json(ss->target);
  } else if (const auto* tp = std::get_if<ThreePartitionInstance>(&instance)) {
    Json w = Json::array();
    for (const Integer& d : tp->weights) w.push_back(integer_to_json(d));
    j["weights"] = std::move(w);
    j["bound"] = integer_to_json(tp->bound);
  } else if (const auto* t = std::get_if<TransportationPolytope>(&instance)) {
    j["p"] = distribution_to_json(t->row_marginal);
    j["q"] = distribution_to_json(t->col_marginal);
  } else if (const auto* cf = std::get_if<ChannelFamily>(&instance)) {
    j["p"] = distribution_to_json(cf->input_marginal);
    j["m"] = static_cast<std::int64_t>(cf->output_size);
  } else if (const auto* mp = std::get_if<MetricPair>(&instance)) {
    j["p"] = distribution_to_json(mp->p);
    j["q"] = distribution_to_json(mp->q);
  }
  return j;
}

namespace {

[[noreturn]] void wrong_kind(const std::string& command,
                             const Instance& instance) {
  throw SchemaError("command '" + command + "' cannot run on instance kind '" +
                    std::string(instance_kind_name(instance)) + "'");
}

RunOutcome run_min_entropy(const TransportationPolytope& p,
                           const RunOptions& opts) {
  auto start = Clock::now();
  MinEntropyResult r =
      min_joint_entropy_exact(p, SolveOptions{opts.limit, opts.width_exp});
  RunOutcome out;
  out.exit_code = r.optimal ? 0 : 2;
  out.document["status"] = r.optimal ? "value" : "limit_exceeded";
  out.document["value_interval"] = interval_to_json(r.value);
  out.document["witness"] = matrix_to_json(r.best.cells());
  out.document["claim"] = claim_name(CertificateClaim::kMember);
  out.document["stats"] = stats_json(r.vertices_visited, start);
  return out;
}

RunOutcome run_decide_min(const Instance& instance, const RunOptions&) {
  auto start = Clock::now();
  const auto* poly = std::get_if<TransportationPolytope>(&instance);
  const auto* ss = std::get_if<SubsetSumInstance>(&instance);
  std::optional<TransportationPolytope> reduced;
  std::vector<Index> subset;
  RunOutcome out;
  if (ss) {
    Integer total = 0;
    for (const Integer& d : ss->weights) total += d;
    if (ss->target > total) {
      // The target cannot be reached; short-circuit without reducing.
      out.exit_code = 1;
      out.document["status"] = "no_witness";
      out.document["stats"] = stats_json(0, start);
      return out;
    }
    reduced.emplace(reduce_subset_sum(*ss));
    poly = &*reduced;
  }
  if (!poly) wrong_kind("decide-min", instance);

  DecideMinResult r = decide_entropy_min(*poly);
  if (!r.witness) {
    out.exit_code = 1;
    out.document["status"] = "no_witness";
    out.document["stats"] = stats_json(0, start);
    return out;
  }
  Coupling w = witness_coupling(*r.witness, *poly);
  out.exit_code = 0;
  out.document["status"] = "witness";
  out.document["witness"] = matrix_to_json(w.cells());
  out.document["claim"] = claim_name(CertificateClaim::kRowDeterministic);
  if (ss) {
    for (const auto& [row, col] : r.witness->assignment)
      if (col == 0) subset.push_back(row);
    out.document["subset"] = subset;
  }
  out.document["stats"] = stats_json(0, start);
  return out;
}

RunOutcome run_optimal_channel(const Instance& instance,
                               const RunOptions& opts) {
  auto start = Clock::now();
  const auto* family = std::get_if<ChannelFamily>(&instance);
  std::optional<ChannelFamily> reduced;
  if (const auto* tp = std::get_if<ThreePartitionInstance>(&instance)) {
    reduced.emplace(reduce_three_partition(*tp));
    family = &*reduced;
  }
  if (!family) wrong_kind("optimal-channel", instance);

  MinEntropyResult r =
      max_mutual_information(*family, SolveOptions{opts.limit, opts.width_exp});
  RunOutcome out;
  out.exit_code = r.optimal ? 0 : 2;
  out.document["status"] = r.optimal ? "value" : "limit_exceeded";
  out.document["value_interval"] = interval_to_json(r.value);
  out.document["witness"] = matrix_to_json(r.best.cells());
  out.document["claim"] = claim_name(CertificateClaim::kRowDeterministic);
  out.document["stats"] = stats_json(r.vertices_visited, start);
  return out;
}

RunOutcome run_decide_channel(const Instance& instance, const RunOptions&) {
  auto start = Clock::now();
  const auto* family = std::get_if<ChannelFamily>(&instance);
  const auto* tp = std::get_if<ThreePartitionInstance>(&instance);
  std::optional<ChannelFamily> reduced;
  if (tp) {
    reduced.emplace(reduce_three_partition(*tp));
    family = &*reduced;
  }
  if (!family) wrong_kind("decide-channel", instance);

  DecideChannelResult r = decide_optimal_channel(*family);
  RunOutcome out;
  if (!r.witness) {
    out.exit_code = 1;
    out.document["status"] = "no_witness";
    out.document["stats"] = stats_json(0, start);
    return out;
  }
  Coupling w = witness_coupling(*r.witness, *family);
  out.exit_code = 0;
  out.document["status"] = "witness";
  out.document["witness"] = matrix_to_json(w.cells());
  out.document["claim"] =
      claim_name(CertificateClaim::kRowDeterministicUniformCols);
  if (tp) {
    std::vector<std::vector<Index>> groups(
        static_cast<std::size_t>(family->output_size));
    for (std::size_t i = 0; i < r.witness->assignment.size(); ++i)
      groups[static_cast<std::size_t>(r.witness->assignment[i])].push_back(
          static_cast<Index>(i));
    out.document["partition"] = groups;
  }
  out.document["stats"] = stats_json(0, start);
  return out;
}

RunOutcome run_metric(const std::string& command, const Instance& instance,
                      const RunOptions& opts) {
  auto start = Clock::now();
  const auto* mp = std::get_if<MetricPair>(&instance);
  if (!mp) wrong_kind(command, instance);
  RunOutcome out;
  if (command == "total-variation") {
    Rational v = total_variation(mp->p, mp->q);
    out.exit_code = 0;
    out.document["status"] = "value";
    out.document["value_interval"] = interval_to_json(RealInterval::of(v, 96));
    out.document["value_rational"] = rational_to_string(v);
    out.document["stats"] = stats_json(0, start);
    return out;
  }
  SolveOptions solve_opts{opts.limit, opts.width_exp};
  MetricResult r = command == "vi-distance"
                       ? vi_distance(mp->p, mp->q, solve_opts)
                       : vi_distance_normalized(mp->p, mp->q, solve_opts);
  out.exit_code = r.exact ? 0 : 2;
  out.document["status"] = r.exact ? "value" : "limit_exceeded";
  out.document["value_interval"] = interval_to_json(r.value);
  out.document["witness"] = matrix_to_json(r.witness.cells());
  out.document["claim"] = claim_name(CertificateClaim::kMember);
  out.document["stats"] = stats_json(0, start);
  return out;
}

RunOutcome run_reduce(const Instance& instance) {
  RunOutcome out;
  if (const auto* ss = std::get_if<SubsetSumInstance>(&instance)) {
    out.document = instance_to_json(Instance(reduce_subset_sum(*ss)));
    return out;
  }
  if (const auto* tp = std::get_if<ThreePartitionInstance>(&instance)) {
    out.document = instance_to_json(Instance(reduce_three_partition(*tp)));
    return out;
  }
  wrong_kind("reduce", instance);
}

}  // namespace

RunOutcome run_command(const std::string& command, const Instance& instance,
                       const RunOptions& opts) {
  if (command == "min-entropy") {
    const auto* poly = std::get_if<TransportationPolytope>(&instance);
    if (!poly) wrong_kind(command, instance);
    return run_min_entropy(*poly, opts);
  }
  if (command == "decide-min") return run_decide_min(instance, opts);
  if (command == "optimal-channel") return run_optimal_channel(instance, opts);
  if (command == "decide-channel") return run_decide_channel(instance, opts);
  if (command == "vi-distance" || command == "vi-distance-normalized" ||
      command == "total-variation")
    return run_metric(command, instance, opts);
  if (command == "reduce") return run_reduce(instance);
  throw SchemaError("unknown command '" + command + "'");
}

RunOutcome run_verify(const Instance& instance, const Json& result_document) {
  auto start = Clock::now();
  if (!result_document.is_object() || !result_document.contains("witness"))
    throw SchemaError("result document carries no witness");
  Certificate cert;
  cert.matrix = matrix_from_json(result_document["witness"]);
  cert.claim =
      result_document.contains("claim")
          ? claim_from_name(result_document["claim"].get<std::string>())
          : CertificateClaim::kMember;

  bool ok = false;
  if (const auto* poly = std::get_if<TransportationPolytope>(&instance)) {
    ok = verify_certificate(cert, *poly);
  } else if (const auto* family = std::get_if<ChannelFamily>(&instance)) {
    ok = verify_certificate(cert, *family);
  } else if (const auto* mp = std::get_if<MetricPair>(&instance)) {
    ok = verify_certificate(cert, TransportationPolytope(mp->p, mp->q));
  } else if (const auto* ss = std::get_if<SubsetSumInstance>(&instance)) {
    ok = verify_certificate(cert, reduce_subset_sum(*ss));
  } else if (const auto* tp = std::get_if<ThreePartitionInstance>(&instance)) {
    ok = verify_certificate(cert, reduce_three_partition(*tp));
  }

  RunOutcome out;
  out.exit_code = ok ? 0 : 1;
  out.document["status"] = ok ? "witness" : "no_witness";
  out.document["stats"] = stats_json(0, start);
  return out;
}

}  // namespace minent
