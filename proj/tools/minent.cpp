// Command-line frontend: parses an instance document (file or stdin),
// dispatches to the solvers, and prints a machine-readable result.
//
// Exit codes: 0 witness/value, 1 no_witness, 2 limit_exceeded,
// 3 input error, 4 usage error, 5 internal error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "minent/io.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file)
    throw minent::ParseError("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const minent::Json& document) {
  std::string text = document.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file)
    throw minent::ParseError("cannot open output file '" + path + "'");
  file << text;
}

struct CommonArgs {
  std::string instance_path = "-";
  std::string output_path;
  std::uint64_t limit = minent::kDefaultVertexLimit;
  int precision = minent::kDefaultWidthExp;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("instance", args.instance_path,
                  "instance JSON file ('-' for stdin)");
  cmd->add_option("-o,--output", args.output_path,
                  "write the result here instead of stdout");
  cmd->add_option("--limit", args.limit, "vertex / assignment budget");
  cmd->add_option("--precision", args.precision,
                  "target enclosure width exponent e (width 2^-e)");
  cmd->add_option("--seed", args.seed,
                  "reserved for instance-generation tooling");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "minent: exact joint-entropy minimization over couplings with fixed "
      "marginals, optimal-channel search, their subset-sum / 3-partition "
      "reductions, and variation-of-information pseudometrics"};
  app.require_subcommand(1);

  const std::vector<std::string> solve_commands = {
      "min-entropy",    "decide-min",       "optimal-channel",
      "decide-channel", "vi-distance",      "vi-distance-normalized",
      "total-variation", "reduce"};
  const std::vector<std::string> descriptions = {
      "minimize H(X,Y) over C(P,Q) exactly (vertex search)",
      "decide whether H(X,Y) = H(P) is attained over C(P,Q)",
      "maximize I(X;Y) over C(P,m)",
      "decide whether I(X;Y) = log2 m is attained over C(P,m)",
      "pseudometric inf over couplings of H(X,Y) - I(X;Y)",
      "normalized pseudometric inf over couplings of 1 - I/H",
      "total variation distance (exact rational)",
      "emit the transportation / channel instance of a reduction"};

  std::map<std::string, CommonArgs> args;
  for (std::size_t k = 0; k < solve_commands.size(); ++k) {
    CLI::App* cmd = app.add_subcommand(solve_commands[k], descriptions[k]);
    add_common(cmd, args[solve_commands[k]]);
  }

  CommonArgs verify_args;
  std::string verify_result_path = "-";
  CLI::App* verify = app.add_subcommand(
      "verify", "re-check a result's witness against its instance");
  verify->add_option("instance", verify_args.instance_path,
                     "instance JSON file ('-' for stdin)");
  verify->add_option("result", verify_result_path,
                     "result JSON file carrying the witness ('-' for stdin)");
  verify->add_option("-o,--output", verify_args.output_path,
                     "write the verdict here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 4;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();

    if (name == "verify") {
      minent::Instance instance =
          minent::parse_instance(read_input(verify_args.instance_path));
      minent::Json result_doc;
      try {
        result_doc = minent::Json::parse(read_input(verify_result_path));
      } catch (const nlohmann::json::parse_error& e) {
        throw minent::ParseError(e.what());
      }
      minent::RunOutcome outcome = minent::run_verify(instance, result_doc);
      write_output(verify_args.output_path, outcome.document);
      return outcome.exit_code;
    }

    const CommonArgs& a = args[name];
    minent::Instance instance =
        minent::parse_instance(read_input(a.instance_path));
    minent::RunOptions opts;
    opts.limit = a.limit;
    opts.width_exp = a.precision;
    opts.seed = a.seed;
    minent::RunOutcome outcome = minent::run_command(name, instance, opts);
    write_output(a.output_path, outcome.document);
    return outcome.exit_code;
  } catch (const minent::Error& e) {
    minent::Json doc;
    doc["status"] = "error";
    doc["error"] = {{"code", e.code()}, {"message", e.what()}};
    std::cout << doc.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    minent::Json doc;
    doc["status"] = "error";
    doc["error"] = {{"code", "InternalError"}, {"message", e.what()}};
    std::cout << doc.dump(2) << "\n";
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
}
