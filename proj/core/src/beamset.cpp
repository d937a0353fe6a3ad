#include "beamalign/beamset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace beamalign {

ScanningBeamSet::ScanningBeamSet(int num_packets, int delay, std::vector<BeamLevel> levels)
    : num_packets_(num_packets), delay_(delay), levels_(std::move(levels)) {
  if (num_packets_ < 1) throw std::invalid_argument("ScanningBeamSet: need at least one packet");
  if (delay_ < 1) throw std::invalid_argument("ScanningBeamSet: delay must be >= 1");
  if (static_cast<int>(levels_.size()) != num_packets_)
    throw std::invalid_argument("ScanningBeamSet: one level per packet required");
}

namespace {

bool binary_string(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

int prefix_length(const ScanningBeamSet& set, int slot) {
  return std::max(0, slot - set.delay());
}

}  // namespace

std::vector<Defect> validate(const ScanningBeamSet& set) {
  std::vector<Defect> defects;
  const int b = set.num_packets();

  for (int i = 1; i <= b; ++i) {
    const BeamLevel& level = set.levels()[static_cast<std::size_t>(i - 1)];
    const int need = prefix_length(set, i);
    if (need == 0) {
      if (level.size() != 1 || !level.count(""))
        defects.push_back({i, "", "slot before first feedback must hold exactly one beam keyed "
                                  "by the empty prefix"});
      continue;
    }
    for (const auto& [key, beam] : level)
      if (static_cast<int>(key.size()) != need || !binary_string(key))
        defects.push_back({i, key, "prefix key must be a binary string of length slot-delay"});
  }

  // Sweep the reachable feedback prefixes and demand a beam for each.
  std::set<std::pair<int, std::string>> reported;
  std::vector<std::pair<std::string, AngularRegion>> frontier;
  frontier.emplace_back("", AngularRegion::full_circle());
  for (int i = 1; i <= b; ++i) {
    const BeamLevel& level = set.levels()[static_cast<std::size_t>(i - 1)];
    const int need = prefix_length(set, i);
    std::vector<std::pair<std::string, AngularRegion>> next;
    for (auto& [prefix, region] : frontier) {
      const std::string key = prefix.substr(0, static_cast<std::size_t>(need));
      auto it = level.find(key);
      if (it == level.end()) {
        if (reported.insert({i, key}).second)
          defects.push_back({i, key, "missing beam for reachable feedback prefix"});
        continue;
      }
      AngularRegion ack = intersect(region, AngularRegion::of(it->second));
      AngularRegion nack = intersect(region, AngularRegion::of(it->second).complement());
      if (!ack.is_empty()) next.emplace_back(prefix + "1", std::move(ack));
      if (!nack.is_empty()) next.emplace_back(prefix + "0", std::move(nack));
    }
    frontier = std::move(next);
  }
  return defects;
}

Codeword simulate_feedback(const ScanningBeamSet& set, const Angle& psi) {
  std::string feedback;
  feedback.reserve(static_cast<std::size_t>(set.num_packets()));
  for (int i = 1; i <= set.num_packets(); ++i) {
    const std::string key = feedback.substr(0, static_cast<std::size_t>(prefix_length(set, i)));
    const AngularInterval& beam = set.levels()[static_cast<std::size_t>(i - 1)].at(key);
    feedback.push_back(beam.contains(psi) ? '1' : '0');
  }
  return Codeword(std::move(feedback));
}

AngularRegion data_beam(const ScanningBeamSet& set, const Angle& psi) {
  AngularRegion region = AngularRegion::full_circle();
  std::string feedback;
  for (int i = 1; i <= set.num_packets(); ++i) {
    const std::string key = feedback.substr(0, static_cast<std::size_t>(prefix_length(set, i)));
    const AngularInterval& beam = set.levels()[static_cast<std::size_t>(i - 1)].at(key);
    const bool ack = beam.contains(psi);
    region = intersect(region, half_space(beam, ack));
    feedback.push_back(ack ? '1' : '0');
  }
  return region;
}

UncertaintyMap::UncertaintyMap(ComponentBeamLoop cells, CodewordLoop labels,
                               std::vector<std::pair<Codeword, AngularRegion>> entries)
    : cells_(std::move(cells)), labels_(std::move(labels)), entries_(std::move(entries)) {}

const AngularRegion& UncertaintyMap::region_of(const Codeword& w) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), w,
                             [](const auto& entry, const Codeword& key) { return entry.first < key; });
  if (it == entries_.end() || !(it->first == w))
    throw std::out_of_range("UncertaintyMap: unknown feedback sequence");
  return it->second;
}

UncertaintyMap uncertainty_map(const ScanningBeamSet& set) {
  std::vector<AngularInterval> beams;
  for (const auto& level : set.levels())
    for (const auto& [key, beam] : level) beams.push_back(beam);

  const ComponentBeamLoop raw = partition(beams);
  std::vector<std::pair<AngularInterval, Codeword>> labeled;
  labeled.reserve(raw.size());
  for (const auto& cell : raw.cells())
    labeled.emplace_back(cell, simulate_feedback(set, midpoint(cell)));

  // A beam endpoint that does not change the feedback sequence is not a
  // component-beam boundary (it belongs to a beam that is off-trajectory
  // there); fuse such neighbouring cells.
  std::vector<std::pair<AngularInterval, Codeword>> merged;
  for (auto& lc : labeled) {
    if (!merged.empty() && merged.back().second == lc.second)
      merged.back().first = AngularInterval(merged.back().first.lo(), lc.first.hi());
    else
      merged.push_back(std::move(lc));
  }
  if (merged.size() > 1 && merged.front().second == merged.back().second) {
    AngularInterval joined(merged.back().first.lo(), merged.front().first.hi());
    merged.front().first = joined;
    merged.pop_back();
  }
  if (merged.size() < 2)
    throw std::logic_error("uncertainty_map: feedback cannot be constant over the circle");

  std::vector<AngularInterval> cells;
  std::vector<Codeword> labels;
  std::map<Codeword, std::vector<AngularInterval>> grouped;
  for (auto& [cell, word] : merged) {
    cells.push_back(cell);
    labels.push_back(word);
    grouped[word].push_back(cell);
  }
  std::vector<std::pair<Codeword, AngularRegion>> entries;
  entries.reserve(grouped.size());
  for (auto& [word, arcs] : grouped) entries.emplace_back(word, AngularRegion::from_arcs(arcs));

  return UncertaintyMap(ComponentBeamLoop(std::move(cells)),
                        CodewordLoop(std::move(labels), set.delay()), std::move(entries));
}

bool check_feedback_code(const ScanningBeamSet& set) {
  const UncertaintyMap map = uncertainty_map(set);
  return map.feedback_loop().is_minimal() && is_characteristic_loop(map.feedback_loop());
}

Rat expected_beamwidth(const ScanningBeamSet& set, const Prior& prior) {
  const UncertaintyMap map = uncertainty_map(set);
  Rat total = 0;
  for (const auto& [word, region] : map.entries()) total += region.measure() * prior.prob(region);
  return total;
}

}  // namespace beamalign
