#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tiltstab/errors.hpp"
#include "tiltstab/report.hpp"

namespace {

using tiltstab::ParseError;
using tiltstab::Rational;
using namespace tiltstab::report;

struct Flags {
  std::int64_t hn = 0;
  int dim = 2;
  bool pic1 = true;
  std::string cls, a, b, target, s, t2, t, exclude, mode = "classical", svg, config;
  std::optional<std::int64_t> d, d_max, rank_max;
  bool include_shifted = false, include_torsion = false, json = false, csv = false, emit_config = false;
};

std::optional<tiltstab::NumericalClass> opt_class(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return tiltstab::NumericalClass::parse(text);
}

RunConfig build_config(Command cmd, const Flags& f) {
  if (f.hn < 1) throw ParseError("--hn is required and must be >= 1");
  RunConfig cfg;
  cfg.command = cmd;
  try {
    cfg.geometry = tiltstab::Geometry::make(f.hn, f.dim, f.pic1);
  } catch (const tiltstab::PreconditionViolated& e) {
    throw ParseError(e.what());
  }
  if (f.json && f.csv) throw ParseError("--json and --csv are mutually exclusive");
  cfg.output = f.json ? OutputMode::Json : (f.csv ? OutputMode::Csv : OutputMode::Human);
  cfg.cls = opt_class(f.cls);
  cfg.a = opt_class(f.a);
  cfg.b = opt_class(f.b);
  if (!f.target.empty()) {
    // Accept both "r,c1H,ch2H" and names such as thaddeus or L_ideal(3).
    cfg.target = f.target.find(',') != std::string::npos
                     ? tiltstab::NumericalClass::parse(f.target)
                     : tiltstab::standard_class(tiltstab::StandardClass::parse(f.target), cfg.geometry);
  }
  if (!f.t2.empty() && !f.t.empty()) throw ParseError("give either --t2 or --t, not both");
  if (!f.s.empty()) {
    const Rational s = Rational::parse(f.s);
    if (!f.t2.empty()) {
      cfg.point = tiltstab::TiltPoint::make(s, Rational::parse(f.t2));
    } else if (!f.t.empty()) {
      cfg.point = tiltstab::TiltPoint::from_t(s, Rational::parse(f.t));
    } else {
      throw ParseError("--s needs --t2 or --t");
    }
  }
  cfg.d = f.d;
  cfg.d_max = f.d_max;
  cfg.rank_max = f.rank_max;
  cfg.include_shifted = f.include_shifted;
  cfg.include_torsion = f.include_torsion;
  cfg.mode = parse_reider_mode(f.mode);
  cfg.exclusions = parse_exclusions(f.exclude);
  cfg.svg_path = f.svg;
  return cfg;
}

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--hn", f.hn, "H^n, the top self-intersection of the polarization")->required();
  sub->add_option("--dim", f.dim, "dimension n (2 or 3)")->capture_default_str();
  sub->add_option("--pic1", f.pic1, "Picard rank one (true/false)")->capture_default_str();
  sub->add_flag("--json", f.json, "print JSON");
  sub->add_flag("--csv", f.csv, "print CSV");
  sub->add_flag("--emit-config", f.emit_config, "print the canonical run configuration instead of running");
}

void add_point(CLI::App* sub, Flags& f) {
  sub->add_option("--s", f.s, "s as a rational p/q");
  sub->add_option("--t2", f.t2, "tau = t^2 as a rational p/q");
  sub->add_option("--t", f.t, "t as a rational p/q (squared internally)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-rational tilt stability and Reider-type criteria"};
  app.require_subcommand(1);
  Flags f;

  auto* slope = app.add_subcommand("slope", "tilt slope of a class, optionally compared with --b");
  add_common(slope, f);
  add_point(slope, f);
  slope->add_option("--class", f.cls, "class r,c1H,ch2H")->required();
  slope->add_option("--b", f.b, "comparison class r,c1H,ch2H");

  auto* charge = app.add_subcommand("charge", "central charge and compact-form check");
  add_common(charge, f);
  add_point(charge, f);
  charge->add_option("--class", f.cls, "class r,c1H,ch2H")->required();

  auto* wall = app.add_subcommand("wall", "numerical wall between two classes");
  add_common(wall, f);
  wall->add_option("--a", f.a, "class r,c1H,ch2H")->required();
  wall->add_option("--b", f.b, "class r,c1H,ch2H")->required();

  auto* ladder = app.add_subcommand("ladder", "rank-one wall ladder of (0,H,H^2/2) on s = 1/2");
  add_common(ladder, f);
  ladder->add_option("--dmax", f.d_max, "largest length d")->required();

  auto* destab = app.add_subcommand("destab", "numerical destabilizer candidates");
  add_common(destab, f);
  add_point(destab, f);
  destab->add_option("--target", f.target, "class r,c1H,ch2H or a name such as thaddeus, L_ideal(d)")->required();
  destab->add_option("--rank-max", f.rank_max, "explicit rank cap");
  destab->add_flag("--include-shifted", f.include_shifted, "also scan shifted (negative rank) classes");
  destab->add_flag("--include-torsion", f.include_torsion, "also scan rank-zero classes");

  auto* reider = app.add_subcommand("reider", "Reider-type verdicts with certificates");
  add_common(reider, f);
  reider->add_option("--d", f.d, "length of the subscheme")->required();
  reider->add_option("--mode", f.mode, "classical | bridgeland | pic1")->capture_default_str();
  reider->add_option("--exclude", f.exclude, "non-effective classes \"cH,c2;cH,c2\"");

  auto* plot = app.add_subcommand("plot", "SVG of the walls of a target against L(x)I_Z, d = 0..dmax");
  add_common(plot, f);
  plot->add_option("--target", f.target, "class or name (default thaddeus)");
  plot->add_option("--dmax", f.d_max, "largest length d")->required();
  plot->add_option("--svg", f.svg, "output SVG path");

  auto* run_cmd = app.add_subcommand("run", "execute a JSON run configuration");
  run_cmd->add_option("--config", f.config, "path to the configuration file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(tiltstab::ErrorFamily::Parse);
  }

  try {
    RunConfig cfg;
    if (run_cmd->parsed()) {
      std::ifstream in(f.config, std::ios::binary);
      std::stringstream buf;
      buf << in.rdbuf();
      cfg = parse_config(buf.str());
    } else {
      const std::pair<CLI::App*, Command> table[] = {
          {slope, Command::Slope},   {charge, Command::Charge}, {wall, Command::Wall},
          {ladder, Command::Ladder}, {destab, Command::Destab}, {reider, Command::Reider},
          {plot, Command::Plot},
      };
      for (const auto& [sub, cmd] : table) {
        if (sub->parsed()) cfg = build_config(cmd, f);
      }
      if (f.emit_config) {
        std::cout << serialize(cfg);
        return 0;
      }
    }
    std::cout << run(cfg);
    return 0;
  } catch (const tiltstab::Error& e) {
    std::cerr << "error [" << tiltstab::family_name(e.family()) << "]: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
