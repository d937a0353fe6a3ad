#include "beamalign/json_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <utility>

namespace beamalign {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FileParseError(std::string("invalid JSON: ") + e.what());
  }
}

Rat rat_field(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string()) throw FileParseError("expected a rational \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FileParseError(e.what());
  }
}

json interval_json(const AngularInterval& arc) {
  return json{{"lo", rational_to_string(arc.lo().turns())},
              {"hi", rational_to_string(arc.hi().turns())}};
}

AngularInterval interval_from(const json& j) {
  if (!j.is_object() || !j.contains("lo") || !j.contains("hi"))
    throw FileParseError("interval must be an object with \"lo\" and \"hi\"");
  try {
    return AngularInterval(Angle::from_turns(rat_field(j.at("lo"))),
                           Angle::from_turns(rat_field(j.at("hi"))));
  } catch (const std::invalid_argument& e) {
    throw FileParseError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string interval_to_json(const AngularInterval& arc) { return interval_json(arc).dump(); }

AngularInterval interval_from_json(const std::string& text) {
  return interval_from(parse_text(text));
}

std::string region_to_json(const AngularRegion& region) {
  if (region.is_full())
    throw std::invalid_argument("region_to_json: the full circle has no arc decomposition");
  json arr = json::array();
  for (const auto& arc : region.arcs()) arr.push_back(interval_json(arc));
  return arr.dump();
}

AngularRegion region_from_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_array()) throw FileParseError("region must be an array of intervals");
  std::vector<AngularInterval> arcs;
  for (const auto& item : j) arcs.push_back(interval_from(item));
  return AngularRegion::from_arcs(arcs);
}

std::string beamset_to_json(const ScanningBeamSet& set) {
  json levels = json::array();
  for (const auto& level : set.levels()) {
    json entries = json::array();
    for (const auto& [prefix, beam] : level)
      entries.push_back(json{{"prefix", prefix}, {"beam", interval_json(beam)}});
    levels.push_back(std::move(entries));
  }
  return json{{"b", set.num_packets()}, {"d", set.delay()}, {"levels", std::move(levels)}}.dump(2);
}

ScanningBeamSet beamset_from_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("b") || !j.contains("d") || !j.contains("levels"))
    throw FileParseError("beam set must be an object with \"b\", \"d\", \"levels\"");
  if (!j.at("b").is_number_integer() || !j.at("d").is_number_integer() ||
      !j.at("levels").is_array())
    throw FileParseError("beam set fields have wrong types");
  std::vector<BeamLevel> levels;
  for (const auto& level_json : j.at("levels")) {
    if (!level_json.is_array()) throw FileParseError("each level must be an array of entries");
    BeamLevel level;
    for (const auto& entry : level_json) {
      if (!entry.is_object() || !entry.contains("prefix") || !entry.contains("beam") ||
          !entry.at("prefix").is_string())
        throw FileParseError("level entry must hold \"prefix\" and \"beam\"");
      const auto prefix = entry.at("prefix").get<std::string>();
      if (!level.emplace(prefix, interval_from(entry.at("beam"))).second)
        throw FileParseError("duplicate prefix \"" + prefix + "\" in one level");
    }
    levels.push_back(std::move(level));
  }
  try {
    return ScanningBeamSet(j.at("b").get<int>(), j.at("d").get<int>(), std::move(levels));
  } catch (const std::invalid_argument& e) {
    throw FileParseError(e.what());
  }
}

ScanningBeamSet load_beamset(const std::string& path) {
  return beamset_from_json(read_file(path));
}

std::string prior_to_json(const Prior& prior) {
  json arr = json::array();
  for (const auto& piece : prior.pieces())
    arr.push_back(json{{"lo", rational_to_string(piece.arc.lo().turns())},
                       {"hi", rational_to_string(piece.arc.hi().turns())},
                       {"density", rational_to_string(piece.density)}});
  return arr.dump(2);
}

Prior prior_from_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_array()) throw FileParseError("prior must be an array of pieces");
  std::vector<Prior::Piece> pieces;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("density"))
      throw FileParseError("prior piece must hold \"lo\", \"hi\", \"density\"");
    pieces.push_back({interval_from(item), rat_field(item.at("density"))});
  }
  try {
    return Prior::from_pieces(std::move(pieces));
  } catch (const std::invalid_argument& e) {
    throw FileParseError(e.what());
  }
}

Prior load_prior(const std::string& name_or_path) {
  if (name_or_path == "uniform") return Prior::uniform();
  return prior_from_json(read_file(name_or_path));
}

std::string code_to_json(const Code& code) {
  json words = json::array();
  for (const auto& w : code.words()) words.push_back(w.bits());
  return json{{"d", code.delay()}, {"words", std::move(words)}}.dump();
}

Code code_from_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("d") || !j.contains("words") || !j.at("words").is_array())
    throw FileParseError("code must be an object with \"d\" and \"words\"");
  std::vector<Codeword> words;
  try {
    for (const auto& w : j.at("words")) words.emplace_back(w.get<std::string>());
    return Code(std::move(words), j.at("d").get<int>());
  } catch (const std::invalid_argument& e) {
    throw FileParseError(e.what());
  } catch (const json::exception& e) {
    throw FileParseError(std::string("invalid code JSON: ") + e.what());
  }
}

std::string loop_to_json(const CodewordLoop& loop) {
  json words = json::array();
  for (const auto& w : loop.words()) words.push_back(w.bits());
  return json{{"d", loop.delay()}, {"loop", std::move(words)}}.dump();
}

CodewordLoop loop_from_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("d") || !j.contains("loop") || !j.at("loop").is_array())
    throw FileParseError("loop must be an object with \"d\" and \"loop\"");
  std::vector<Codeword> words;
  try {
    for (const auto& w : j.at("loop")) words.emplace_back(w.get<std::string>());
    return CodewordLoop(std::move(words), j.at("d").get<int>());
  } catch (const std::invalid_argument& e) {
    throw FileParseError(e.what());
  } catch (const json::exception& e) {
    throw FileParseError(std::string("invalid loop JSON: ") + e.what());
  }
}

ExperimentConfig config_from_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object()) throw FileParseError("config must be a JSON object");
  ExperimentConfig config;
  try {
    if (j.contains("target")) config.target_width = rat_field(j.at("target"));
    if (j.contains("degrees")) {
      if (!j.at("degrees").is_number())
        throw FileParseError("\"degrees\" must be a number");
      config.target_width = rat_from_double(j.at("degrees").get<double>()) / 360;
    }
    if (j.contains("d_min")) config.d_min = j.at("d_min").get<int>();
    if (j.contains("d_max")) config.d_max = j.at("d_max").get<int>();
    if (j.contains("b_cap")) config.b_cap = j.at("b_cap").get<int>();
    if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("methods")) {
      config.methods.clear();
      for (const auto& name : j.at("methods"))
        config.methods.push_back(method_from_name(name.get<std::string>()));
    }
    if (j.contains("prior")) {
      config.prior_label = j.at("prior").get<std::string>();
      config.prior = load_prior(config.prior_label);
    }
  } catch (const json::exception& e) {
    throw FileParseError(std::string("invalid config JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FileParseError(e.what());
  }
  if (config.d_min < 1 || config.d_max < config.d_min)
    throw FileParseError("config: need 1 <= d_min <= d_max");
  if (config.methods.empty()) throw FileParseError("config: methods must be nonempty");
  if (!(config.target_width > 0 && config.target_width < 1))
    throw FileParseError("config: target width must lie in (0, 1) turns");
  return config;
}

}  // namespace beamalign
