#include "beamalign/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace beamalign {

namespace {

std::string format_degrees(const Rat& turns) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", to_double(turns) * 360.0);
  return buf;
}

std::string arc_text(const AngularInterval& arc) {
  return "(" + rational_to_string(arc.lo().turns()) + "," + rational_to_string(arc.hi().turns()) +
         "]";
}

}  // namespace

std::string duration_sweep_csv(const ExperimentConfig& config) {
  std::ostringstream out;
  out << "# target_turns=" << rational_to_string(config.target_width)
      << " prior=" << config.prior_label << " d_min=" << config.d_min << " d_max=" << config.d_max
      << " b_cap=" << config.b_cap << " seed=" << config.seed << " methods=";
  for (std::size_t k = 0; k < config.methods.size(); ++k)
    out << (k ? "+" : "") << method_name(config.methods[k]);
  out << "\n";
  out << "method,d,b,total_slots,achieved_width_turns,achieved_width_degrees\n";
  for (Method method : config.methods) {
    for (int d = config.d_min; d <= config.d_max; ++d) {
      const DurationResult row = duration(method, d, config.target_width, config.prior, config.b_cap);
      out << method_name(method) << ',' << row.d << ',' << row.b << ',' << row.total_slots << ','
          << rational_to_string(row.achieved_width) << ',' << format_degrees(row.achieved_width)
          << "\n";
    }
  }
  return out.str();
}

std::string uncertainty_csv(const UncertaintyMap& map, const Prior& prior) {
  std::ostringstream out;
  out << "codeword,arcs,measure_turns,probability\n";
  for (const auto& [word, region] : map.entries()) {
    out << word.bits() << ",\"";
    const auto& arcs = region.arcs();
    for (std::size_t k = 0; k < arcs.size(); ++k) out << (k ? ";" : "") << arc_text(arcs[k]);
    out << "\"," << rational_to_string(region.measure()) << ','
        << rational_to_string(prior.prob(region)) << "\n";
  }
  return out.str();
}

SimulationReport simulate_expected_width(const ScanningBeamSet& set, const Prior& prior,
                                         std::size_t n, std::uint64_t seed) {
  SimulationReport report;
  report.exact_width = expected_beamwidth(set, prior);
  report.samples = n;
  report.seed = seed;
  if (n == 0) return report;

  // Feedback is constant per component cell, so a sorted cell table turns
  // each sample into a binary search for the cell containing it.
  const UncertaintyMap map = uncertainty_map(set);
  std::vector<std::pair<Rat, double>> cells;  // (cell lo, width of its region)
  cells.reserve(map.component_beams().size());
  for (std::size_t k = 0; k < map.component_beams().size(); ++k) {
    const double width = to_double(map.region_of(map.feedback_loop().word(k)).measure());
    cells.emplace_back(map.component_beams().cell(k).lo().turns(), width);
  }
  std::sort(cells.begin(), cells.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  auto width_at = [&](const Angle& psi) {
    auto it = std::lower_bound(cells.begin(), cells.end(), psi.turns(),
                               [](const auto& cell, const Rat& t) { return cell.first < t; });
    // cell (lo_i, lo_{i+1}]: take the largest lo below psi, wrapping to the
    // last cell when psi precedes every lo
    const std::size_t idx =
        it == cells.begin() ? cells.size() - 1 : static_cast<std::size_t>(it - cells.begin()) - 1;
    return cells[idx].second;
  };

  std::mt19937_64 rng(seed);
  double mean = 0.0, m2 = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double width = width_at(prior.sample(rng));
    const double delta = width - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (width - mean);
  }
  report.mc_mean = mean;
  report.mc_stderr = n > 1 ? std::sqrt(m2 / (static_cast<double>(n - 1) * static_cast<double>(n)))
                           : 0.0;
  return report;
}

}  // namespace beamalign
