#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "orbistruct/commands.hpp"
#include "orbistruct/errors.hpp"
#include "orbistruct/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;

void emit(const orbistruct::doc::ReportDocument& document, const std::string& format) {
  const std::vector<std::string>* warnings = nullptr;
  if (document.analysis)
    warnings = &document.analysis->warnings;
  else if (document.sweep)
    warnings = &document.sweep->warnings;
  if (warnings)
    for (const auto& warning : *warnings)
      std::cerr << "warning: " << warning << "\n";
  if (format == "json")
    std::cout << orbistruct::doc::to_json_string(document);
  else
    std::cout << orbistruct::doc::to_text(document);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbistruct: inheritance of orbifold substructures over finite "
               "permutation group chains"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string catalog_file;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--catalog", catalog_file,
                 "Load the group catalog from a manifest file instead of the "
                 "built-in one");

  std::string gamma_spec, b_spec, delta_spec;
  std::optional<std::string> lambda_spec;
  std::optional<unsigned> degree;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Classify the inherited substructures of one chain delta <= b <= gamma");
  analyze->add_option("--gamma", gamma_spec, "Ambient group (catalog name or generators)")
      ->required();
  analyze->add_option("--b", b_spec, "Middle subgroup")->required();
  analyze->add_option("--delta", delta_spec, "Inner subgroup")->required();
  std::string lambda_raw;
  CLI::Option* lambda_opt = analyze->add_option(
      "--lambda", lambda_raw,
      "Non-canonical structure group for the Q level (must stabilize R[delta])");
  unsigned degree_raw = 0;
  CLI::Option* degree_opt =
      app.add_option("--degree", degree_raw, "Common degree to pad all groups to");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Analyze every chain class of a group and summarize the results");
  std::string sweep_gamma;
  sweep->add_option("gamma", sweep_gamma, "Group to sweep (catalog name or generators)")
      ->required();
  bool only_incompatible = false;
  bool only_unsaturated = false;
  sweep->add_flag("--only-incompatible", only_incompatible,
                  "List only chains whose canonical structures disagree");
  sweep->add_flag("--only-unsaturated", only_unsaturated,
                  "List only chains where P is not saturated in O");
  std::size_t jobs = 0;
  sweep->add_option("--jobs", jobs, "Worker threads (0 = hardware)");

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "Inspect the group catalog");
  catalog_cmd->require_subcommand(1);
  CLI::App* catalog_list = catalog_cmd->add_subcommand("list", "List catalog entries");
  CLI::App* catalog_show = catalog_cmd->add_subcommand("show", "Show one catalog entry");
  std::string show_name;
  catalog_show->add_option("name", show_name, "Entry name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    orbistruct::commands::OrderCaps caps = orbistruct::commands::caps_from_environment();
    std::optional<orbistruct::catalog::Catalog> loaded;
    const orbistruct::catalog::Catalog* groups = nullptr;
    if (!catalog_file.empty()) {
      loaded = orbistruct::catalog::load_catalog_file(catalog_file);
      groups = &*loaded;
    }
    if (*degree_opt)
      degree = degree_raw;
    if (*lambda_opt)
      lambda_spec = lambda_raw;

    if (*analyze) {
      orbistruct::commands::AnalyzeRequest request{gamma_spec, b_spec, delta_spec,
                                                   lambda_spec, degree, caps, groups};
      emit(orbistruct::commands::run_analyze(request), format);
    } else if (*sweep) {
      orbistruct::commands::SweepRequest request{sweep_gamma, only_incompatible,
                                                 only_unsaturated, degree, jobs,
                                                 caps, groups};
      emit(orbistruct::commands::run_sweep(request), format);
    } else if (*catalog_list) {
      emit(orbistruct::commands::run_catalog_list(groups), format);
    } else if (*catalog_show) {
      emit(orbistruct::commands::run_catalog_show(show_name, groups), format);
    }
  } catch (const orbistruct::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const orbistruct::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
