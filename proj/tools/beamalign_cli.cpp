// Command-line front end: beam-set validation, cardinality bounds, the
// duration-versus-delay sweep, Monte-Carlo checks, and uncertainty-region
// dumps.
//
// Exit codes: 0 success, 1 validation failure, 2 parse error,
// 3 search budget exhausted or target unreachable.

#include "beamalign/beamset.hpp"
#include "beamalign/codes.hpp"
#include "beamalign/experiment.hpp"
#include "beamalign/json_io.hpp"
#include "beamalign/strategies.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

using namespace beamalign;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

int cmd_validate(const std::string& path) {
  const ScanningBeamSet set = load_beamset(path);
  const std::vector<Defect> defects = validate(set);
  for (const auto& d : defects)
    std::cout << "level=" << d.level << " prefix=\"" << d.prefix << "\" " << d.message << "\n";
  if (!defects.empty()) return kExitValidation;
  if (!check_feedback_code(set)) {
    std::cout << "feedback sequences do not form a minimal characteristic loop\n";
    return kExitValidation;
  }
  std::cout << "ok: b=" << set.num_packets() << " d=" << set.delay() << " urs="
            << uncertainty_map(set).entries().size() << "\n";
  return kExitOk;
}

int cmd_maxcard(int b, int d, std::optional<int> bruteforce_len, long long budget,
                bool print_witness) {
  std::cout << "b=" << b << " d=" << d << " bound=" << max_code_cardinality_bound(b, d) << "\n";
  if (!bruteforce_len) return kExitOk;
  const CardinalitySearch search = max_cardinality_bruteforce(b, d, *bruteforce_len, budget);
  if (search.status == CardinalitySearch::Status::budget_exceeded) {
    std::cout << "bruteforce: budget exceeded after " << search.nodes_visited
              << " nodes (best so far " << search.max_cardinality << ")\n";
    return kExitBudget;
  }
  const long long gap = max_code_cardinality_bound(b, d) - search.max_cardinality;
  std::cout << "bruteforce=" << search.max_cardinality << " gap=" << gap
            << " nodes=" << search.nodes_visited << " max_len=" << *bruteforce_len << "\n";
  if (print_witness && search.witness)
    for (const auto& w : search.witness->words()) std::cout << w.bits() << "\n";
  return kExitOk;
}

int cmd_figure2(const ExperimentConfig& config, const std::string& out_path) {
  write_output(duration_sweep_csv(config), out_path);
  return kExitOk;
}

int cmd_simulate(const std::string& path, const std::string& prior_name, std::size_t n,
                 std::uint64_t seed) {
  const ScanningBeamSet set = load_beamset(path);
  if (!validate(set).empty()) {
    std::cout << "beam set fails validation; run the validate subcommand\n";
    return kExitValidation;
  }
  const Prior prior = load_prior(prior_name);
  const SimulationReport report = simulate_expected_width(set, prior, n, seed);
  std::printf("exact_width_turns=%s (%.10g turns, %.10g deg)\n",
              rational_to_string(report.exact_width).c_str(), to_double(report.exact_width),
              to_double(report.exact_width) * 360.0);
  if (n > 0)
    std::printf("mc_mean_turns=%.10g mc_stderr=%.10g n=%zu seed=%llu\n", report.mc_mean,
                report.mc_stderr, report.samples,
                static_cast<unsigned long long>(report.seed));
  return kExitOk;
}

int cmd_enumerate(const std::string& path, const std::string& prior_name,
                  const std::string& out_path) {
  const ScanningBeamSet set = load_beamset(path);
  if (!validate(set).empty()) {
    std::cout << "beam set fails validation; run the validate subcommand\n";
    return kExitValidation;
  }
  const UncertaintyMap map = uncertainty_map(set);
  std::string text = "# loop:";
  for (const auto& w : map.feedback_loop().words()) text += " " + w.bits();
  text += "\n" + uncertainty_csv(map, load_prior(prior_name));
  write_output(text, out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact delayed-feedback beam alignment toolkit"};
  app.require_subcommand(1);

  std::string beamset_path;
  std::string prior_name = "uniform";
  std::string out_path;

  auto* validate_cmd = app.add_subcommand("validate", "check a beam-set file");
  validate_cmd->add_option("beamset", beamset_path, "beam set JSON file")->required();

  int b = 1, d = 1;
  std::optional<int> bruteforce_len;
  long long budget = 200'000'000;
  bool print_witness = false;
  auto* maxcard_cmd = app.add_subcommand("maxcard", "cardinality bound for codes of length b");
  maxcard_cmd->add_option("b", b, "codeword length")->required();
  maxcard_cmd->add_option("d", d, "feedback delay")->required();
  maxcard_cmd->add_option("--bruteforce", bruteforce_len, "exhaustive search up to this loop length");
  maxcard_cmd->add_option("--budget", budget, "search node budget");
  maxcard_cmd->add_flag("--witness", print_witness, "print a maximizing loop, one codeword per line");

  std::string config_path;
  std::string target_text;
  double target_degrees = 0.0;
  bool have_degrees = false;
  int d_min = 1, d_max = 20, b_cap = 4096;
  std::uint64_t seed = 1;
  std::string methods_csv = "bisection,modified-exhaustive,non-interactive,lower-bound";
  auto* figure2_cmd = app.add_subcommand("figure2", "duration-vs-delay sweep as CSV");
  figure2_cmd->add_option("--config", config_path, "JSON config file (flags override nothing)");
  figure2_cmd->add_option("--target", target_text, "target expected width in turns, as p/q");
  figure2_cmd->add_option("--degrees", target_degrees, "target expected width in degrees")
      ->each([&](const std::string&) { have_degrees = true; });
  figure2_cmd->add_option("--d-min", d_min, "smallest delay");
  figure2_cmd->add_option("--d-max", d_max, "largest delay");
  figure2_cmd->add_option("--methods", methods_csv, "comma-separated method list");
  figure2_cmd->add_option("--prior", prior_name, "prior name or file");
  figure2_cmd->add_option("--seed", seed, "recorded in the CSV header");
  figure2_cmd->add_option("--b-cap", b_cap, "largest packet count to try");
  figure2_cmd->add_option("--out", out_path, "output file (stdout when absent)");

  std::size_t samples = 100'000;
  auto* simulate_cmd = app.add_subcommand("simulate", "exact expected width plus Monte-Carlo check");
  simulate_cmd->add_option("beamset", beamset_path, "beam set JSON file")->required();
  simulate_cmd->add_option("--prior", prior_name, "prior name or file");
  simulate_cmd->add_option("--n", samples, "Monte-Carlo sample count (0 = exact only)");
  simulate_cmd->add_option("--seed", seed, "sampling seed");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "dump uncertainty regions and feedback loop");
  enumerate_cmd->add_option("beamset", beamset_path, "beam set JSON file")->required();
  enumerate_cmd->add_option("--prior", prior_name, "prior name or file");
  enumerate_cmd->add_option("--out", out_path, "output file (stdout when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(beamset_path);
    if (maxcard_cmd->parsed()) return cmd_maxcard(b, d, bruteforce_len, budget, print_witness);
    if (figure2_cmd->parsed()) {
      ExperimentConfig config;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw FileParseError("cannot open " + config_path);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        config = config_from_json(text);
      }
      if (!target_text.empty()) config.target_width = parse_rational(target_text);
      if (have_degrees) config.target_width = rat_from_double(target_degrees) / 360;
      if (figure2_cmd->count("--d-min")) config.d_min = d_min;
      if (figure2_cmd->count("--d-max")) config.d_max = d_max;
      if (figure2_cmd->count("--b-cap")) config.b_cap = b_cap;
      if (figure2_cmd->count("--seed")) config.seed = seed;
      if (figure2_cmd->count("--prior")) {
        config.prior_label = prior_name;
        config.prior = load_prior(prior_name);
      }
      if (figure2_cmd->count("--methods")) {
        config.methods.clear();
        std::stringstream ss(methods_csv);
        std::string name;
        while (std::getline(ss, name, ',')) config.methods.push_back(method_from_name(name));
      }
      if (config.methods.empty() || config.d_min < 1 || config.d_max < config.d_min ||
          !(config.target_width > 0 && config.target_width < 1))
        throw std::invalid_argument("figure2: bad sweep configuration");
      return cmd_figure2(config, out_path);
    }
    if (simulate_cmd->parsed()) return cmd_simulate(beamset_path, prior_name, samples, seed);
    if (enumerate_cmd->parsed()) return cmd_enumerate(beamset_path, prior_name, out_path);
  } catch (const FileParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UnreachableTargetError& e) {
    std::cerr << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
