#include "tiltstab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tiltstab/errors.hpp"

namespace tiltstab::report {

namespace {

template <typename Enum, std::size_t N>
Enum parse_enum(std::string_view text, const std::pair<const char*, Enum> (&table)[N], const char* what) {
  for (const auto& [name, value] : table) {
    if (text == name) return value;
  }
  throw ParseError(std::string("unknown ") + what + ": '" + std::string(text) + "'");
}

constexpr std::pair<const char*, Command> kCommands[] = {
    {"slope", Command::Slope},   {"charge", Command::Charge}, {"wall", Command::Wall},
    {"ladder", Command::Ladder}, {"destab", Command::Destab}, {"reider", Command::Reider},
    {"plot", Command::Plot},
};
constexpr std::pair<const char*, OutputMode> kModes[] = {
    {"human", OutputMode::Human}, {"json", OutputMode::Json}, {"csv", OutputMode::Csv}};
constexpr std::pair<const char*, ReiderMode> kReiderModes[] = {
    {"classical", ReiderMode::Classical}, {"bridgeland", ReiderMode::Bridgeland}, {"pic1", ReiderMode::Pic1}};

template <typename T>
const T& need(const std::optional<T>& v, const char* flag) {
  if (!v) throw ParseError(std::string("missing required parameter ") + flag);
  return *v;
}

std::string fmt6(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", q.to_double());
  return buf;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::vector<std::string> wall_cells(const Wall& w) {
  switch (w.kind) {
    case Wall::Kind::Circle: return {"circle", w.center.str(), w.radius_sq.str()};
    case Wall::Kind::VerticalLine: return {"vertical_line", w.center.str(), ""};
    case Wall::Kind::Empty: return {"empty", "", ""};
    case Wall::Kind::Everywhere: return {"everywhere", "", ""};
  }
  return {"", "", ""};
}

json optional_class(const std::optional<NumericalClass>& c) {
  return c ? json(c->str()) : json(nullptr);
}

std::optional<NumericalClass> read_class(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return NumericalClass::parse(j.at(key).get<std::string>());
}

std::optional<std::int64_t> read_int(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::int64_t>();
}

json optional_int(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

const char* to_string(Command c) {
  for (const auto& [name, value] : kCommands) {
    if (value == c) return name;
  }
  return "?";
}
const char* to_string(OutputMode m) {
  for (const auto& [name, value] : kModes) {
    if (value == m) return name;
  }
  return "?";
}
const char* to_string(ReiderMode m) {
  for (const auto& [name, value] : kReiderModes) {
    if (value == m) return name;
  }
  return "?";
}
Command parse_command(std::string_view text) { return parse_enum(text, kCommands, "command"); }
OutputMode parse_output_mode(std::string_view text) { return parse_enum(text, kModes, "output mode"); }
ReiderMode parse_reider_mode(std::string_view text) { return parse_enum(text, kReiderModes, "reider mode"); }

std::vector<DivisorData> parse_exclusions(std::string_view text) {
  std::vector<DivisorData> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(pos, end - pos);
    const std::size_t comma = item.find(',');
    if (comma == std::string_view::npos) throw ParseError("exclusion must be 'cH,c2', got '" + std::string(item) + "'");
    const Rational cH = Rational::parse(item.substr(0, comma));
    const Rational c2 = Rational::parse(item.substr(comma + 1));
    if (!cH.is_integer() || !c2.is_integer()) throw ParseError("exclusion entries must be integers");
    out.push_back({cH.floor(), c2.floor()});
    pos = end + 1;
  }
  return out;
}

json config_to_json(const RunConfig& cfg) {
  json j;
  j["command"] = to_string(cfg.command);
  j["geometry"] = {{"hn", cfg.geometry.hn}, {"dim", cfg.geometry.dim}, {"pic_rank_one", cfg.geometry.pic_rank_one}};
  j["output"] = to_string(cfg.output);
  j["class"] = optional_class(cfg.cls);
  j["a"] = optional_class(cfg.a);
  j["b"] = optional_class(cfg.b);
  j["target"] = optional_class(cfg.target);
  j["point"] = cfg.point ? json(cfg.point->str()) : json(nullptr);
  j["d"] = optional_int(cfg.d);
  j["d_max"] = optional_int(cfg.d_max);
  j["rank_max"] = optional_int(cfg.rank_max);
  j["include_shifted"] = cfg.include_shifted;
  j["include_torsion"] = cfg.include_torsion;
  j["mode"] = to_string(cfg.mode);
  json excl = json::array();
  for (const auto& e : cfg.exclusions) excl.push_back({e.cH, e.c2});
  j["exclusions"] = excl;
  j["svg_path"] = cfg.svg_path;
  return j;
}

RunConfig config_from_json(const json& j) {
  try {
    RunConfig cfg;
    cfg.command = parse_command(j.at("command").get<std::string>());
    const json& g = j.at("geometry");
    cfg.geometry = Geometry::make(g.at("hn").get<std::int64_t>(), g.value("dim", 2), g.value("pic_rank_one", true));
    cfg.output = parse_output_mode(j.value("output", std::string("human")));
    cfg.cls = read_class(j, "class");
    cfg.a = read_class(j, "a");
    cfg.b = read_class(j, "b");
    cfg.target = read_class(j, "target");
    if (j.contains("point") && !j.at("point").is_null()) cfg.point = TiltPoint::parse(j.at("point").get<std::string>());
    cfg.d = read_int(j, "d");
    cfg.d_max = read_int(j, "d_max");
    cfg.rank_max = read_int(j, "rank_max");
    cfg.include_shifted = j.value("include_shifted", false);
    cfg.include_torsion = j.value("include_torsion", false);
    cfg.mode = parse_reider_mode(j.value("mode", std::string("classical")));
    if (j.contains("exclusions")) {
      for (const auto& e : j.at("exclusions")) cfg.exclusions.push_back({e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>()});
    }
    cfg.svg_path = j.value("svg_path", std::string());
    return cfg;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad config: ") + e.what());
  } catch (const PreconditionViolated& e) {
    throw ParseError(std::string("bad config geometry: ") + e.what());
  }
}

std::string serialize(const RunConfig& cfg) { return config_to_json(cfg).dump(2) + "\n"; }

RunConfig parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  return config_from_json(j);
}

json to_json(const NumericalClass& cls) {
  return {{"r", cls.r}, {"c1H", cls.c1H.str()}, {"ch2H", cls.ch2H.str()}};
}

json to_json(const Wall& w) {
  switch (w.kind) {
    case Wall::Kind::Circle: return {{"type", "circle"}, {"center", w.center.str()}, {"radius_sq", w.radius_sq.str()}};
    case Wall::Kind::VerticalLine: return {{"type", "vertical_line"}, {"s0", w.center.str()}};
    case Wall::Kind::Empty: return {{"type", "empty"}};
    case Wall::Kind::Everywhere: return {{"type", "everywhere"}};
  }
  return nullptr;
}

json to_json(const DestabilizerCandidate& c, const Wall& w) {
  return {{"class", to_json(c.cls)},     {"k", c.k},
          {"c2", c.c2},                  {"relation", to_string(c.relation)},
          {"phase", to_string(c.phase)}, {"side", to_string(c.side)},
          {"wall", to_json(w)}};
}

json to_json(const Certificate& cert) {
  json arr = json::array();
  for (const auto& step : cert) {
    arr.push_back({{"name", step.name},
                   {"lhs", step.lhs.str()},
                   {"rel", to_string(step.rel)},
                   {"rhs", step.rhs.str()},
                   {"anchor", step.anchor}});
  }
  return arr;
}

json to_json(const ReiderVerdict& v) {
  json witnesses = json::array();
  for (const auto& w : v.witnesses) witnesses.push_back({{"cH", w.cH}, {"c2", w.c2}});
  return {{"status", to_string(v.status)}, {"witnesses", witnesses}, {"certificate", to_json(v.certificate)}};
}

json to_json(const LadderRow& row) {
  return {{"d", row.d},
          {"radius_sq", row.radius_sq.str()},
          {"exists", row.exists},
          {"rank1_wall", row.rank1_wall},
          {"above_one_sixth", row.above_one_sixth},
          {"flip_label", row.flip_label}};
}

std::string render_human(const Table& t) {
  std::vector<std::size_t> width(t.headers.size(), 0);
  auto widen = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  widen(t.headers);
  for (const auto& row : t.rows) widen(row);
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out += cells[i];
      if (i + 1 < cells.size()) out += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    os << out << '\n';
  };
  line(t.headers);
  std::string rule;
  for (std::size_t i = 0; i < width.size(); ++i) rule += std::string(width[i], '-') + (i + 1 < width.size() ? "  " : "");
  os << rule << '\n';
  for (const auto& row : t.rows) line(row);
  return os.str();
}

std::string render_csv(const Table& t) {
  auto quote = [](const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << quote(cells[i]);
    os << '\n';
  };
  line(t.headers);
  for (const auto& row : t.rows) line(row);
  return os.str();
}

CommandResult cmd_slope(const RunConfig& cfg) {
  const NumericalClass& cls = need(cfg.cls, "--class");
  const TiltPoint& pt = need(cfg.point, "--s/--t2");
  const Geometry& g = cfg.geometry;
  const ProjectiveSlope sl = slope_frac(cls, pt, g);
  CommandResult out;
  out.data = {{"class", to_json(cls)}, {"point", pt.str()}, {"num", sl.num.str()}, {"den", sl.den.str()}};
  std::string display = sl.zero_charge() ? "zero charge" : (sl.maximal_phase() ? "maximal phase" : "");
  if (auto v = sl.display()) display = v->str();
  out.data["mu_times_t"] = sl.display() ? json(sl.display()->str()) : json(nullptr);
  out.data["maximal_phase"] = sl.maximal_phase();
  out.data["zero_charge"] = sl.zero_charge();
  Table t{{"class", "d_st", "r_s", "mu*t"}, {{cls.str(), sl.num.str(), sl.den.str(), display}}};
  if (cfg.b) {
    const SlopeOrder order = slope_cmp(cls, *cfg.b, pt, g);
    out.data["compare"] = {{"other", to_json(*cfg.b)}, {"order", to_string(order)}};
    const ProjectiveSlope other = slope_frac(*cfg.b, pt, g);
    std::string other_display = other.zero_charge() ? "zero charge" : (other.maximal_phase() ? "maximal phase" : "");
    if (auto v = other.display()) other_display = v->str();
    t.rows.push_back({cfg.b->str(), other.num.str(), other.den.str(), other_display});
    out.tables.push_back({"slopes at (s,t2) = " + pt.str(), t});
    out.tables.push_back({"comparison", Table{{"left", "right", "order"}, {{cls.str(), cfg.b->str(), to_string(order)}}}});
  } else {
    out.tables.push_back({"slope at (s,t2) = " + pt.str(), t});
  }
  return out;
}

CommandResult cmd_charge(const RunConfig& cfg) {
  const NumericalClass& cls = need(cfg.cls, "--class");
  const TiltPoint& pt = need(cfg.point, "--s/--t2");
  const CentralCharge z = central_charge(cls, pt, cfg.geometry);
  const bool compact = verify_compact_form(cls, pt, cfg.geometry);
  CommandResult out;
  out.data = {{"class", to_json(cls)},
              {"point", pt.str()},
              {"re", z.re.str()},
              {"im_over_t", z.im_over_t.str()},
              {"compact_form_verified", compact}};
  out.tables.push_back({"central charge Z = re + i*t*im_over_t",
                        Table{{"class", "re", "im_over_t", "compact_form"},
                              {{cls.str(), z.re.str(), z.im_over_t.str(), bool_str(compact)}}}});
  return out;
}

CommandResult cmd_wall(const RunConfig& cfg) {
  const NumericalClass& a = need(cfg.a, "--a");
  const NumericalClass& b = need(cfg.b, "--b");
  const Wall w = wall(a, b, cfg.geometry);
  CommandResult out;
  out.data = to_json(w);
  auto cells = wall_cells(w);
  cells.push_back(bool_str(w.meets_open_strip()));
  out.tables.push_back({"wall between " + a.str() + " and " + b.str(),
                        Table{{"type", "center", "radius_sq", "meets_strip"}, {cells}}});
  return out;
}

CommandResult cmd_ladder(const RunConfig& cfg) {
  const std::int64_t d_max = need(cfg.d_max, "--dmax");
  const auto rows = thaddeus_ladder(cfg.geometry, d_max);
  CommandResult out;
  out.data = json::array();
  Table t{{"d", "radius_sq", "exists", "rank1_wall", "above_one_sixth", "flip"}, {}};
  for (const auto& row : rows) {
    out.data.push_back(to_json(row));
    t.rows.push_back({std::to_string(row.d), row.radius_sq.str(), bool_str(row.exists), bool_str(row.rank1_wall),
                      bool_str(row.above_one_sixth), row.flip_label});
  }
  out.tables.push_back({"wall ladder on s = 1/2, hn = " + std::to_string(cfg.geometry.hn), t});
  return out;
}

CommandResult cmd_destab(const RunConfig& cfg) {
  const NumericalClass& target = need(cfg.target, "--target");
  const TiltPoint& pt = need(cfg.point, "--s/--t2");
  EnumerationOptions opts;
  opts.rank_max = cfg.rank_max;
  opts.include_shifted = cfg.include_shifted;
  opts.include_torsion = cfg.include_torsion;
  const auto cands = enumerate_destabilizers(target, pt, cfg.geometry, opts);
  CommandResult out;
  out.data = json::array();
  Table t{{"r", "c1H", "ch2H", "k", "c2", "relation", "phase", "side", "wall", "center", "radius_sq"}, {}};
  for (const auto& c : cands) {
    const Wall w = wall(c.cls, target, cfg.geometry);
    out.data.push_back(to_json(c, w));
    std::vector<std::string> row{std::to_string(c.cls.r), c.cls.c1H.str(), c.cls.ch2H.str(),
                                 std::to_string(c.k),     std::to_string(c.c2), to_string(c.relation),
                                 to_string(c.phase),      to_string(c.side)};
    for (auto& cell : wall_cells(w)) row.push_back(std::move(cell));
    t.rows.push_back(std::move(row));
  }
  out.tables.push_back({"numerical destabilizer candidates of " + target.str() + " at (s,t2) = " + pt.str() +
                            " (necessary conditions only)",
                        t});
  return out;
}

CommandResult cmd_reider(const RunConfig& cfg) {
  const std::int64_t d = need(cfg.d, "--d");
  const Geometry& g = cfg.geometry;
  CommandResult out;
  Certificate cert;
  Table summary;
  if (cfg.mode == ReiderMode::Pic1) {
    const VanishingResult r = picard_rank_one_vanishing(g, d);
    out.data = {{"vanishes", r.vanishes}, {"certificate", to_json(r.certificate)}};
    cert = r.certificate;
    summary = Table{{"hn", "d", "vanishes"}, {{std::to_string(g.hn), std::to_string(d), bool_str(r.vanishes)}}};
    out.tables.push_back({"picard rank one vanishing", summary});
  } else {
    const ReiderVerdict v =
        cfg.mode == ReiderMode::Classical ? reider_classical(g, d, cfg.exclusions) : reider_bridgeland(g, d);
    out.data = to_json(v);
    const FujitaBound f = cfg.mode == ReiderMode::Classical ? fujita_classical(d) : fujita_bridgeland(d);
    out.data["fujita_multiple"] = f.multiple;
    cert = v.certificate;
    out.tables.push_back({std::string(to_string(cfg.mode)) + " verdict",
                          Table{{"hn", "d", "status", "witnesses", "fujita_multiple"},
                                {{std::to_string(g.hn), std::to_string(d), to_string(v.status),
                                  std::to_string(v.witnesses.size()), std::to_string(f.multiple)}}}});
    Table wt{{"cH", "c2"}, {}};
    for (const auto& w : v.witnesses) wt.rows.push_back({std::to_string(w.cH), std::to_string(w.c2)});
    out.tables.push_back({"witness classes (must be non-effective)", wt});
  }
  Table ct{{"step", "lhs", "rel", "rhs", "anchor"}, {}};
  for (const auto& s : cert) ct.rows.push_back({s.name, s.lhs.str(), to_string(s.rel), s.rhs.str(), s.anchor});
  out.tables.push_back({"certificate", ct});
  return out;
}

std::vector<PlotWall> plot_walls(const Geometry& g, const std::vector<NumericalClass>& targets, std::int64_t d_max) {
  if (d_max < 0) throw PreconditionViolated("d_max must be >= 0");
  std::vector<PlotWall> out;
  for (const auto& target : targets) {
    for (std::int64_t d = 0; d <= d_max; ++d) {
      const NumericalClass sub = standard_class(StandardClass::l_ideal(d), g);
      const Wall w = wall(sub, target, g);
      if (w.kind == Wall::Kind::Empty || w.kind == Wall::Kind::Everywhere) continue;
      out.push_back({d, target, w});
    }
  }
  return out;
}

std::string render_svg(const std::vector<PlotWall>& walls) {
  // 1000 units per unit of s and of t, with t pointing up.
  auto x = [](const Rational& s) { return Rational(1000) * s; };
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"600\" viewBox=\"0 0 1000 600\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"1000\" height=\"600\" fill=\"white\" stroke=\"black\"/>\n";
  os << "  <line class=\"axis\" x1=\"0\" y1=\"600\" x2=\"1000\" y2=\"600\" stroke=\"black\"/>\n";
  for (const auto& pw : walls) {
    const std::string label = "d=" + std::to_string(pw.d) +
                              (pw.wall.kind == Wall::Kind::Circle ? " r^2=" + pw.wall.radius_sq.str()
                                                                  : " s=" + pw.wall.center.str());
    if (pw.wall.kind == Wall::Kind::Circle) {
      const double r = std::sqrt(pw.wall.radius_sq.to_double());
      const double cx = x(pw.wall.center).to_double();
      char buf[512];
      std::snprintf(buf, sizeof buf,
                    "  <path class=\"wall\" d=\"M %.6f 600.000000 A %.6f %.6f 0 0 1 %.6f 600.000000\" "
                    "fill=\"none\" stroke=\"steelblue\"/>\n",
                    cx - 1000.0 * r, 1000.0 * r, 1000.0 * r, cx + 1000.0 * r);
      os << buf;
      std::snprintf(buf, sizeof buf, "  <text x=\"%.6f\" y=\"%.6f\" font-size=\"10\">", cx, 600.0 - 1000.0 * r - 4.0);
      os << buf << label << "</text>\n";
    } else {
      const std::string sx = fmt6(x(pw.wall.center));
      os << "  <line class=\"vertical-wall\" x1=\"" << sx << "\" y1=\"0.000000\" x2=\"" << sx
         << "\" y2=\"600.000000\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";
      os << "  <text x=\"" << sx << "\" y=\"12.000000\" font-size=\"10\">" << label << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

CommandResult cmd_plot(const RunConfig& cfg) {
  const std::int64_t d_max = need(cfg.d_max, "--dmax");
  const NumericalClass target =
      cfg.target ? *cfg.target : standard_class(StandardClass::thaddeus(), cfg.geometry);
  const auto walls = plot_walls(cfg.geometry, {target}, d_max);
  CommandResult out;
  out.data = json::array();
  Table t{{"d", "target", "wall", "center", "radius_sq"}, {}};
  for (const auto& pw : walls) {
    json entry = to_json(pw.wall);
    entry["d"] = pw.d;
    entry["target"] = to_json(pw.target);
    out.data.push_back(entry);
    std::vector<std::string> row{std::to_string(pw.d), pw.target.str()};
    for (auto& cell : wall_cells(pw.wall)) row.push_back(std::move(cell));
    t.rows.push_back(std::move(row));
  }
  out.tables.push_back({"plotted walls", t});
  return out;
}

CommandResult dispatch(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Slope: return cmd_slope(cfg);
    case Command::Charge: return cmd_charge(cfg);
    case Command::Wall: return cmd_wall(cfg);
    case Command::Ladder: return cmd_ladder(cfg);
    case Command::Destab: return cmd_destab(cfg);
    case Command::Reider: return cmd_reider(cfg);
    case Command::Plot: return cmd_plot(cfg);
  }
  throw ParseError("unknown command");
}

std::string run(const RunConfig& cfg) {
  const CommandResult result = dispatch(cfg);
  if (cfg.command == Command::Plot && !cfg.svg_path.empty()) {
    const NumericalClass target =
        cfg.target ? *cfg.target : standard_class(StandardClass::thaddeus(), cfg.geometry);
    std::ofstream svg(cfg.svg_path, std::ios::binary);
    if (!svg) throw PreconditionViolated("cannot write SVG to '" + cfg.svg_path + "'");
    svg << render_svg(plot_walls(cfg.geometry, {target}, *cfg.d_max));
  }
  switch (cfg.output) {
    case OutputMode::Json: return result.data.dump(2) + "\n";
    case OutputMode::Csv: {
      std::string out;
      for (std::size_t i = 0; i < result.tables.size(); ++i) {
        if (i) out += "\n";
        out += render_csv(result.tables[i].second);
      }
      return out;
    }
    case OutputMode::Human: {
      std::string out;
      for (std::size_t i = 0; i < result.tables.size(); ++i) {
        if (i) out += "\n";
        out += result.tables[i].first + "\n" + render_human(result.tables[i].second);
      }
      return out;
    }
  }
  return {};
}

}  // namespace tiltstab::report
