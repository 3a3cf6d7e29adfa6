// hetero: verify heterotic solutions on nilmanifolds.
// Exit status: 0 all checks pass, 2 some check fails, 1 input error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hetero/catalog.hpp"
#include "hetero/error.hpp"
#include "hetero/identities.hpp"
#include "hetero/model_file.hpp"
#include "hetero/report_io.hpp"
#include "hetero/verifier.hpp"

namespace {

using namespace hetero;

constexpr int kPass = 0;
constexpr int kInputError = 1;
constexpr int kCheckFailure = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ConnectionChoice parse_connection(const std::string& text) {
  if (text == "plus") return ConnectionChoice::Plus;
  if (text == "levi-civita") return ConnectionChoice::LeviCivita;
  throw Error("unknown connection '" + text + "' (expected plus or levi-civita)");
}

int emit(const VerificationReport& report, bool json) {
  if (json) {
    std::cout << report_to_json(report).dump(2) << "\n";
  } else {
    std::cout << render_text(report);
  }
  return report.passed() ? kPass : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of heterotic G2 and Spin(7) solutions on nilmanifolds"};
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> evals;
  bool json = false;
  std::string connection = "plus";

  auto* verify = app.add_subcommand("verify", "Verify the model described by a model file");
  verify->add_option("file", file, "Model file")->required();
  verify->add_option("--eval", evals, "Evaluation point k=v,... (repeatable)");
  verify->add_flag("--json", json, "Emit a JSON report");
  verify->add_option("--connection", connection, "Gravitational connection: plus or levi-civita");

  auto* catalog_cmd = app.add_subcommand("catalog", "Built-in examples");
  catalog_cmd->require_subcommand(1);
  auto* list = catalog_cmd->add_subcommand("list", "List catalog entries");
  std::string entry_name;
  std::string params;
  auto* run = catalog_cmd->add_subcommand("run", "Verify a catalog entry at concrete parameters");
  run->add_option("name", entry_name, "Catalog entry")->required();
  run->add_option("--params", params, "Parameter overrides k=v,...");
  run->add_flag("--json", json, "Emit a JSON report");
  run->add_option("--connection", connection, "Gravitational connection: plus or levi-civita");

  auto* identities = app.add_subcommand("identities", "Run only the curvature identity suite");
  identities->add_option("file", file, "Model file")->required();
  identities->add_flag("--json", json, "Emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*verify) {
      ModelFile model = parse_model(read_file(file));
      for (const auto& e : evals) model.eval_points.push_back(parse_assignment(e));
      for (const auto& point : model.eval_points)
        for (const auto& [k, v] : point)
          if (std::find(model.params.begin(), model.params.end(), k) == model.params.end())
            throw Error("--eval names undeclared parameter '" + k + "'");
      VerifyInput input = to_verify_input(model, std::filesystem::path(file).stem().string(),
                                          parse_connection(connection));
      return emit(verify_model(input), json);
    }
    if (*list) {
      for (const auto& entry : catalog()) {
        std::cout << entry.name << "  " << entry.description << "\n   defaults:";
        for (const auto& p : entry.params) std::cout << " " << p.name << "=" << to_string(p.default_value);
        std::cout << "\n";
      }
      return kPass;
    }
    if (*run) {
      const CatalogEntry* entry = find_catalog_entry(entry_name);
      if (!entry) throw Error("no catalog entry named '" + entry_name + "'");
      Assignment overrides = params.empty() ? Assignment{} : parse_assignment(params);
      return emit(verify_model(configure(*entry, overrides, parse_connection(connection))), json);
    }
    if (*identities) {
      ModelFile model = parse_model(read_file(file));
      LieAlgebraModel lie = to_model(model);
      GStructure structure = to_structure(model);
      TorsionGeometry geometry = TorsionGeometry::build(lie, torsion_3form(lie, structure), structure.psi());
      auto results = identity_suite(geometry);
      std::string name = std::filesystem::path(file).stem().string();
      bool all = std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.zero; });
      if (json) {
        std::cout << identities_to_json(name, results).dump(2) << "\n";
      } else {
        std::cout << render_identities_text(name, results);
      }
      return all ? kPass : kCheckFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
