#pragma once

// JSON file formats: arc endpoints as exact "p/q" strings, beam sets as one
// entry list per slot, priors as piece lists, codes and loops as bit strings.

#include "beamalign/beamset.hpp"
#include "beamalign/codes.hpp"
#include "beamalign/experiment.hpp"
#include "beamalign/geometry.hpp"
#include "beamalign/prior.hpp"

#include <stdexcept>
#include <string>

namespace beamalign {

struct FileParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string interval_to_json(const AngularInterval& arc);
AngularInterval interval_from_json(const std::string& text);

std::string region_to_json(const AngularRegion& region);  // array of intervals; full circle rejected
AngularRegion region_from_json(const std::string& text);

std::string beamset_to_json(const ScanningBeamSet& set);
ScanningBeamSet beamset_from_json(const std::string& text);
ScanningBeamSet load_beamset(const std::string& path);

std::string prior_to_json(const Prior& prior);
Prior prior_from_json(const std::string& text);
// "uniform" or a path to a prior JSON file.
Prior load_prior(const std::string& name_or_path);

std::string code_to_json(const Code& code);
Code code_from_json(const std::string& text);

std::string loop_to_json(const CodewordLoop& loop);
CodewordLoop loop_from_json(const std::string& text);

// Sweep configuration mirroring the figure2 subcommand flags; absent fields
// keep their defaults.
ExperimentConfig config_from_json(const std::string& text);

}  // namespace beamalign
