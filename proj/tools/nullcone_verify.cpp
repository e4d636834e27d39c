// nullcone_verify: run the verification suites and print a report.
//
// Exit status: 0 when no check fails, 1 when some check fails, 2 on usage errors.

#include "nullcone/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  using namespace nullcone;

  CLI::App app{"Verify root-system, invariant-theory and nullcone computations"};
  app.require_subcommand(1);
  app.fallthrough();

  std::vector<std::string> types;
  std::uint64_t seed = 1;
  std::size_t samples = 8;
  std::uint64_t max_order = WeylGroup::default_max_order;
  std::string format = "text";
  std::string out_path;
  std::string tables;
  bool timings = false;

  app.add_option("--type", types,
                 "Simple type such as A3 or E6; repeatable or comma separated. An empty value selects no types")
      ->delimiter(',')
      ->take_all();
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  app.add_option("--samples", samples, "Samples per randomized check")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--max-weyl-order", max_order, "Largest Weyl group to enumerate")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}))->capture_default_str();
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");
  app.add_option("--tables", tables, "Directory of root-table files replacing the built-in tables")
      ->check(CLI::ExistingDirectory);
  app.add_flag("--timings", timings, "Show per-check timings in text output");

  std::set<Suite> suites;
  struct Sub {
    const char* name;
    const char* help;
    std::set<Suite> suites;
  };
  const std::vector<Sub> subs = {
      {"roots", "Root systems, Weyl groups and chains of lines", {Suite::roots}},
      {"appendix", "Regularity of rho +- alpha and the root tables", {Suite::appendix}},
      {"invariants", "Invariant polynomials, polarizations and sigma", {Suite::invariants}},
      {"geometry", "Tangent ranks, fibers and nullcone membership", {Suite::geometry}},
      {"all", "Every suite", {Suite::roots, Suite::appendix, Suite::invariants, Suite::geometry}},
  };
  for (const auto& s : subs) {
    auto* sc = app.add_subcommand(s.name, s.help);
    sc->callback([&suites, &s] { suites = s.suites; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  RunConfig config;
  config.suites = suites;
  if (app.count("--type") > 0) {
    config.types.clear();
    for (const auto& t : types)
      if (!t.empty()) config.types.push_back(t);
  }
  config.seed = seed;
  config.samples = samples;
  config.max_weyl_order = max_order;
  config.format = format == "structured" ? OutputFormat::structured : OutputFormat::text;
  if (!tables.empty()) config.tables_dir = tables;

  const Report report = run(config);

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "cannot open " << out_path << " for writing\n";
      return 2;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  if (config.format == OutputFormat::structured)
    write_structured(out, report);
  else
    write_text(out, report, timings);
  return report.any_failed() ? 1 : 0;
}
