#include "beamalign/strategies.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace beamalign {

std::string method_name(Method m) {
  switch (m) {
    case Method::bisection: return "bisection";
    case Method::modified_exhaustive: return "modified-exhaustive";
    case Method::non_interactive: return "non-interactive";
    case Method::lower_bound: return "lower-bound";
  }
  throw std::logic_error("method_name: unknown method");
}

Method method_from_name(const std::string& name) {
  if (name == "bisection") return Method::bisection;
  if (name == "modified-exhaustive") return Method::modified_exhaustive;
  if (name == "non-interactive") return Method::non_interactive;
  if (name == "lower-bound") return Method::lower_bound;
  throw std::invalid_argument("unknown method: " + name);
}

Rat uniform_lower_bound_width(int b, int d) {
  return Rat(BigInt(1), BigInt(max_code_cardinality_bound(b, d)));
}

double lower_bound_width(int b, int d, const Prior& prior) {
  return std::exp2(prior.entropy_bits()) /
         static_cast<double>(max_code_cardinality_bound(b, d));
}

namespace {

// Expands a fixed per-slot beam schedule (feedback-independent) into the
// hierarchical level layout: slots past the delay carry one entry per
// reachable prefix, all mapping to the slot's single beam.
ScanningBeamSet oblivious_beamset(const std::vector<AngularInterval>& beams, int d) {
  const int b = static_cast<int>(beams.size());
  std::vector<BeamLevel> levels(static_cast<std::size_t>(b));
  std::vector<std::pair<std::string, AngularRegion>> frontier;
  frontier.emplace_back("", AngularRegion::full_circle());
  for (int i = 1; i <= b; ++i) {
    const AngularInterval& beam = beams[static_cast<std::size_t>(i - 1)];
    const int need = std::max(0, i - d);
    BeamLevel& level = levels[static_cast<std::size_t>(i - 1)];
    std::vector<std::pair<std::string, AngularRegion>> next;
    for (auto& [prefix, region] : frontier) {
      level.emplace(prefix.substr(0, static_cast<std::size_t>(need)), beam);
      AngularRegion ack = intersect(region, AngularRegion::of(beam));
      AngularRegion nack = intersect(region, AngularRegion::of(beam).complement());
      if (!ack.is_empty()) next.emplace_back(prefix + "1", std::move(ack));
      if (!nack.is_empty()) next.emplace_back(prefix + "0", std::move(nack));
    }
    frontier = std::move(next);
  }
  return ScanningBeamSet(b, d, std::move(levels));
}

}  // namespace

ScanningBeamSet noninteractive_beamset(int b, int d) {
  if (b < 1 || d < 1) throw std::invalid_argument("noninteractive_beamset: b, d must be >= 1");
  std::vector<AngularInterval> beams;
  beams.reserve(static_cast<std::size_t>(b));
  for (int i = 1; i <= b; ++i) {
    const Rat lo(i, 2 * b);
    beams.push_back(make_arc(lo, lo + Rat(1, 2)));
  }
  return oblivious_beamset(beams, d);
}

ScanningBeamSet exhaustive_beamset(int b, int d) {
  if (b < 1 || d < 1) throw std::invalid_argument("exhaustive_beamset: b, d must be >= 1");
  std::vector<AngularInterval> beams;
  beams.reserve(static_cast<std::size_t>(b));
  for (int i = 1; i <= b; ++i)
    beams.push_back(make_arc(Rat(i - 1, b + 1), Rat(i, b + 1)));
  return oblivious_beamset(beams, d);
}

ScanningBeamSet bisection_beamset(int b) {
  if (b < 1) throw std::invalid_argument("bisection_beamset: b must be >= 1");
  std::vector<BeamLevel> levels(static_cast<std::size_t>(b));
  // Per-prefix uncertainty arcs, tracked as (start, width) with start in [0, 1).
  std::map<std::string, std::pair<Rat, Rat>> regions;
  regions.emplace("", std::make_pair(Rat(0), Rat(1)));
  for (int i = 1; i <= b; ++i) {
    std::map<std::string, std::pair<Rat, Rat>> next;
    for (const auto& [prefix, lw] : regions) {
      const auto& [lo, width] = lw;
      const Rat half = width / 2;
      levels[static_cast<std::size_t>(i - 1)].emplace(prefix, make_arc(lo, lo + half));
      next.emplace(prefix + "1", std::make_pair(lo, half));
      next.emplace(prefix + "0", std::make_pair(frac(lo + half), half));
    }
    regions = std::move(next);
  }
  return ScanningBeamSet(b, 1, std::move(levels));
}

DurationResult duration(Method method, int d, const Rat& target, const Prior& prior, int b_cap) {
  if (d < 1) throw std::invalid_argument("duration: delay must be >= 1");
  if (!(target > 0 && target < 1))
    throw std::invalid_argument("duration: target width must lie in (0, 1) turns");
  const bool uniform = prior.is_uniform();
  for (int b = 1; b <= b_cap; ++b) {
    Rat width;
    switch (method) {
      case Method::bisection:
        width = uniform ? Rat(BigInt(1), BigInt(1) << b)
                        : expected_beamwidth(bisection_beamset(b), prior);
        break;
      case Method::modified_exhaustive:
        width = uniform ? Rat(1, b + 1) : expected_beamwidth(exhaustive_beamset(b, d), prior);
        break;
      case Method::non_interactive:
        width = uniform ? Rat(1, 2 * b) : expected_beamwidth(noninteractive_beamset(b, d), prior);
        break;
      case Method::lower_bound:
        width = uniform ? uniform_lower_bound_width(b, d)
                        : rat_from_double(lower_bound_width(b, d, prior));
        break;
    }
    if (width <= target) {
      DurationResult out;
      out.method = method;
      out.d = d;
      out.b = b;
      out.total_slots = method == Method::bisection ? static_cast<long long>(b) * d + 1
                                                    : static_cast<long long>(b) + d;
      out.achieved_width = width;
      return out;
    }
  }
  throw UnreachableTargetError("duration: target " + rational_to_string(target) +
                               " unreachable with b <= " + std::to_string(b_cap));
}

}  // namespace beamalign
