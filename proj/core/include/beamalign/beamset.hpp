#pragma once

// Delayed-feedback beam alignment semantics: hierarchical scanning beam sets,
// error-free feedback simulation, uncertainty regions, and the bridge from
// beam sets to d-unimodal feedback codes.

#include "beamalign/codes.hpp"
#include "beamalign/geometry.hpp"
#include "beamalign/prior.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace beamalign {

// Beams of one time slot, keyed by the feedback prefix available when the
// slot's packet is sent (the empty prefix while no feedback has arrived).
using BeamLevel = std::map<std::string, AngularInterval>;

class ScanningBeamSet {
 public:
  // levels.size() must equal num_packets; num_packets, delay >= 1.
  ScanningBeamSet(int num_packets, int delay, std::vector<BeamLevel> levels);

  int num_packets() const { return num_packets_; }
  int delay() const { return delay_; }
  const std::vector<BeamLevel>& levels() const { return levels_; }

 private:
  int num_packets_;
  int delay_;
  std::vector<BeamLevel> levels_;
};

struct Defect {
  int level = 0;
  std::string prefix;
  std::string message;
};

// Structural validation: slots before the first feedback hold exactly one
// beam under the empty prefix; later slots hold a beam for every reachable
// feedback prefix of length i-d. Unreachable prefixes are ignored.
std::vector<Defect> validate(const ScanningBeamSet& set);

// Feedback sequence (a_1, ..., a_b) for direction psi: slot i uses the beam
// keyed by the first max(0, i-d) feedback bits, and a_i reports membership.
Codeword simulate_feedback(const ScanningBeamSet& set, const Angle& psi);

// Final data-beam region for direction psi: the intersection of the realized
// per-slot half-spaces. Always contains psi.
AngularRegion data_beam(const ScanningBeamSet& set, const Angle& psi);

// Uncertainty regions of a beam set: the component-beam loop, each cell's
// feedback sequence, and the grouping of cells into per-codeword regions.
class UncertaintyMap {
 public:
  UncertaintyMap(ComponentBeamLoop cells, CodewordLoop labels,
                 std::vector<std::pair<Codeword, AngularRegion>> entries);

  const ComponentBeamLoop& component_beams() const { return cells_; }
  const CodewordLoop& feedback_loop() const { return labels_; }
  // Sorted by codeword; regions are nonempty, pairwise disjoint, and tile the circle.
  const std::vector<std::pair<Codeword, AngularRegion>>& entries() const { return entries_; }
  const AngularRegion& region_of(const Codeword& w) const;

 private:
  ComponentBeamLoop cells_;
  CodewordLoop labels_;
  std::vector<std::pair<Codeword, AngularRegion>> entries_;
};

UncertaintyMap uncertainty_map(const ScanningBeamSet& set);

// Executable witness that the feedback sequences of a valid beam set form a
// d-unimodal code whose minimal characteristic loop is the labelled
// component-beam loop. A false return signals an implementation bug.
bool check_feedback_code(const ScanningBeamSet& set);

// Prior-weighted expected width of the final data beam, exactly.
Rat expected_beamwidth(const ScanningBeamSet& set, const Prior& prior);

}  // namespace beamalign
