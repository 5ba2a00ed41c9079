#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "tiltstab/destab.hpp"
#include "tiltstab/lattice.hpp"
#include "tiltstab/reider.hpp"
#include "tiltstab/tilt.hpp"
#include "tiltstab/walls.hpp"

namespace tiltstab::report {

using json = nlohmann::ordered_json;

enum class Command { Slope, Charge, Wall, Ladder, Destab, Reider, Plot };
enum class OutputMode { Human, Json, Csv };
enum class ReiderMode { Classical, Bridgeland, Pic1 };

const char* to_string(Command c);
const char* to_string(OutputMode m);
const char* to_string(ReiderMode m);
Command parse_command(std::string_view text);
OutputMode parse_output_mode(std::string_view text);
ReiderMode parse_reider_mode(std::string_view text);

/// Parses "cH,c2;cH,c2;..." (empty string gives an empty list).
std::vector<DivisorData> parse_exclusions(std::string_view text);

struct RunConfig {
  Geometry geometry;
  Command command = Command::Slope;
  OutputMode output = OutputMode::Human;

  std::optional<NumericalClass> cls;     // slope, charge
  std::optional<NumericalClass> a;       // wall
  std::optional<NumericalClass> b;       // wall; slope comparison partner
  std::optional<NumericalClass> target;  // destab; plot
  std::optional<TiltPoint> point;

  std::optional<std::int64_t> d;
  std::optional<std::int64_t> d_max;
  std::optional<std::int64_t> rank_max;
  bool include_shifted = false;
  bool include_torsion = false;
  ReiderMode mode = ReiderMode::Classical;
  std::vector<DivisorData> exclusions;
  std::string svg_path;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

json config_to_json(const RunConfig& cfg);
/// Throws ParseError on malformed or incomplete input.
RunConfig config_from_json(const json& j);
/// Canonical text form: config_to_json pretty-printed with two-space indent.
std::string serialize(const RunConfig& cfg);
RunConfig parse_config(std::string_view text);

json to_json(const NumericalClass& cls);
json to_json(const Wall& w);
json to_json(const DestabilizerCandidate& c, const Wall& w);
json to_json(const Certificate& cert);
json to_json(const ReiderVerdict& v);
json to_json(const LadderRow& row);

/// A rectangular table of strings, shared by the human and csv renderers.
struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

std::string render_human(const Table& t);
std::string render_csv(const Table& t);

struct CommandResult {
  json data;
  std::vector<std::pair<std::string, Table>> tables;  // titled tables
};

CommandResult cmd_slope(const RunConfig& cfg);
CommandResult cmd_charge(const RunConfig& cfg);
CommandResult cmd_wall(const RunConfig& cfg);
CommandResult cmd_ladder(const RunConfig& cfg);
CommandResult cmd_destab(const RunConfig& cfg);
CommandResult cmd_reider(const RunConfig& cfg);

struct PlotWall {
  std::int64_t d = 0;
  NumericalClass target;
  Wall wall;
};

/// Walls between each target and L ⊗ I_Z for d in [0, d_max], skipping Empty/Everywhere.
std::vector<PlotWall> plot_walls(const Geometry& g, const std::vector<NumericalClass>& targets,
                                 std::int64_t d_max);
/// SVG of the strip s ∈ [0,1], t ∈ [0,0.6] on a 1000×600 viewport.
std::string render_svg(const std::vector<PlotWall>& walls);
CommandResult cmd_plot(const RunConfig& cfg);

CommandResult dispatch(const RunConfig& cfg);
/// Formats a result for cfg.output. Writes the SVG file for plot when svg_path is set.
std::string run(const RunConfig& cfg);

}  // namespace tiltstab::report
