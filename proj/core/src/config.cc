// Copyright 2026 The lambda_nav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lambda_nav/config.h"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include <toml.hpp>

#include "csv.h"
#include "lambda_nav/errors.h"

namespace lambda_nav {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

std::string WithLine(const std::string& what, const toml::node& node) {
  const auto line = node.source().begin.line;
  if (line == 0) return what;
  return what + " (line " + std::to_string(line) + ")";
}

// Reads typed values out of one TOML table and remembers which keys were
// consumed, so leftovers can be reported as unknown.
class TableReader {
 public:
  TableReader(const toml::table& table, std::string prefix)
      : table_(table), prefix_(std::move(prefix)) {}

  std::string Path(std::string_view key) const {
    return prefix_.empty() ? std::string(key) : prefix_ + "." + std::string(key);
  }

  const toml::node* Find(std::string_view key) {
    const toml::node* node = table_.get(key);
    if (node != nullptr) used_.insert(std::string(key));
    return node;
  }

  bool Has(std::string_view key) const { return table_.contains(key); }

  double Number(std::string_view key, double fallback) {
    const toml::node* node = Find(key);
    if (node == nullptr) return fallback;
    return AsNumber(*node, Path(key));
  }

  std::int64_t Integer(std::string_view key, std::int64_t fallback) {
    const toml::node* node = Find(key);
    if (node == nullptr) return fallback;
    if (const auto* v = node->as_integer()) return v->get();
    throw ValidationError(Path(key), WithLine("expected an integer", *node));
  }

  std::string String(std::string_view key, std::string fallback) {
    const toml::node* node = Find(key);
    if (node == nullptr) return fallback;
    if (const auto* v = node->as_string()) return v->get();
    throw ValidationError(Path(key), WithLine("expected a string", *node));
  }

  std::vector<double> Numbers(std::string_view key, std::vector<double> fallback) {
    const toml::node* node = Find(key);
    if (node == nullptr) return fallback;
    return AsNumbers(*node, Path(key));
  }

  Vec2 Point(std::string_view key, Vec2 fallback) {
    const toml::node* node = Find(key);
    if (node == nullptr) return fallback;
    return AsPoint(*node, Path(key));
  }

  std::array<double, 3> Triple(std::string_view key, std::array<double, 3> fallback) {
    const toml::node* node = Find(key);
    if (node == nullptr) return fallback;
    const std::vector<double> v = AsNumbers(*node, Path(key));
    if (v.size() != 3) {
      throw ValidationError(Path(key), WithLine("expected 3 numbers", *node));
    }
    return {v[0], v[1], v[2]};
  }

  // An angle given either in radians under `key` or in degrees under
  // `key`_deg.
  double Angle(std::string_view key, double fallback) {
    const std::string deg_key = std::string(key) + "_deg";
    if (Has(key) && Has(deg_key)) {
      throw ValidationError(Path(key), "give either " + std::string(key) +
                                           " or " + deg_key + ", not both");
    }
    if (Has(deg_key)) return Number(deg_key, 0.0) * kDegToRad;
    return Number(key, fallback);
  }

  std::vector<double> Angles(std::string_view key, std::vector<double> fallback) {
    const std::string deg_key = std::string(key) + "_deg";
    if (Has(key) && Has(deg_key)) {
      throw ValidationError(Path(key), "give either " + std::string(key) +
                                           " or " + deg_key + ", not both");
    }
    if (Has(deg_key)) {
      std::vector<double> v = Numbers(deg_key, {});
      for (double& a : v) a *= kDegToRad;
      return v;
    }
    return Numbers(key, std::move(fallback));
  }

  const toml::table* Table(std::string_view key) {
    const toml::node* node = Find(key);
    if (node == nullptr) return nullptr;
    if (const auto* t = node->as_table()) return t;
    throw ValidationError(Path(key), WithLine("expected a table", *node));
  }

  const toml::array* Array(std::string_view key) {
    const toml::node* node = Find(key);
    if (node == nullptr) return nullptr;
    if (const auto* a = node->as_array()) return a;
    throw ValidationError(Path(key), WithLine("expected an array", *node));
  }

  void RejectUnknown() const {
    for (const auto& [k, node] : table_) {
      if (used_.count(std::string(k.str())) == 0) {
        throw ValidationError(Path(k.str()), WithLine("unknown key", node));
      }
    }
  }

  static double AsNumber(const toml::node& node, const std::string& path) {
    if (const auto* v = node.as_floating_point()) return v->get();
    if (const auto* v = node.as_integer()) return static_cast<double>(v->get());
    throw ValidationError(path, WithLine("expected a number", node));
  }

  static std::vector<double> AsNumbers(const toml::node& node,
                                       const std::string& path) {
    const auto* arr = node.as_array();
    if (arr == nullptr) {
      throw ValidationError(path, WithLine("expected an array of numbers", node));
    }
    std::vector<double> out;
    for (const toml::node& e : *arr) out.push_back(AsNumber(e, path));
    return out;
  }

  static Vec2 AsPoint(const toml::node& node, const std::string& path) {
    const std::vector<double> v = AsNumbers(node, path);
    if (v.size() != 2) throw ValidationError(path, WithLine("expected [x, y]", node));
    return {v[0], v[1]};
  }

 private:
  const toml::table& table_;
  std::string prefix_;
  std::set<std::string> used_;
};

Primitive ReadPrimitive(const toml::table& t, const std::string& path) {
  TableReader r(t, path);
  const std::string kind = r.String("type", "");
  Primitive out;
  if (kind == "bump") {
    SpeedBump b;
    b.center = r.Point("center", b.center);
    b.length = r.Number("length", b.length);
    b.width = r.Number("width", b.width);
    b.height = r.Number("height", b.height);
    b.ramp = r.Number("ramp", b.ramp);
    b.yaw = r.Angle("yaw", b.yaw);
    const std::string profile = r.String("profile", "trapezoid");
    if (profile == "trapezoid") {
      b.profile = BumpProfile::kTrapezoid;
    } else if (profile == "cosine") {
      b.profile = BumpProfile::kRaisedCosine;
    } else {
      throw ValidationError(path + ".profile", "expected \"trapezoid\" or \"cosine\"");
    }
    if (!(b.length > 0.0)) throw ValidationError(path + ".length", "must be > 0");
    if (!(b.width > 0.0)) throw ValidationError(path + ".width", "must be > 0");
    if (!(b.ramp >= 0.0)) throw ValidationError(path + ".ramp", "must be >= 0");
    out = b;
  } else if (kind == "curb") {
    Curb c;
    c.point = r.Point("point", c.point);
    c.normal = r.Angle("normal", c.normal);
    c.height = r.Number("height", c.height);
    out = c;
  } else if (kind == "cone") {
    Cone c;
    c.center = r.Point("center", c.center);
    c.base_radius = r.Number("base_radius", c.base_radius);
    c.top_radius = r.Number("top_radius", c.top_radius);
    c.height = r.Number("height", c.height);
    if (!(c.base_radius > 0.0)) {
      throw ValidationError(path + ".base_radius", "must be > 0");
    }
    if (!(c.top_radius >= 0.0)) {
      throw ValidationError(path + ".top_radius", "must be >= 0");
    }
    out = c;
  } else if (kind == "wall") {
    Wall w;
    w.min = r.Point("min", w.min);
    w.max = r.Point("max", w.max);
    w.height = r.Number("height", w.height);
    if (!(w.max.x > w.min.x && w.max.y > w.min.y)) {
      throw ValidationError(path + ".max", "must exceed min on both axes");
    }
    out = w;
  } else if (kind == "pole") {
    Pole p;
    p.center = r.Point("center", p.center);
    p.radius = r.Number("radius", p.radius);
    p.height = r.Number("height", p.height);
    if (!(p.radius > 0.0)) throw ValidationError(path + ".radius", "must be > 0");
    out = p;
  } else {
    throw ValidationError(path + ".type",
                          "expected one of bump, curb, cone, wall, pole");
  }
  r.RejectUnknown();
  const double height = std::visit([](const auto& k) { return k.height; }, out);
  if (!(std::isfinite(height) && height >= 0.0)) {
    throw ValidationError(path + ".height", "must be finite and >= 0");
  }
  return out;
}

// TOML float literal that parses back to exactly `v`.
std::string Float(double v) {
  std::string s = csv::FormatDouble(v);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string Pair(Vec2 p) { return "[" + Float(p.x) + ", " + Float(p.y) + "]"; }

template <class Range>
std::string List(const Range& values) {
  std::string s = "[";
  bool first = true;
  for (double v : values) {
    if (!first) s += ", ";
    s += Float(v);
    first = false;
  }
  return s + "]";
}

}  // namespace

ScenarioConfig ParseConfig(std::string_view toml_text,
                           std::string_view source_name) {
  toml::table root;
  try {
    root = toml::parse(toml_text, source_name);
  } catch (const toml::parse_error& e) {
    const int line = static_cast<int>(e.source().begin.line);
    throw ParseError(std::string(source_name) + ":" + std::to_string(line) +
                         ": " + std::string(e.description()),
                     line);
  }

  ScenarioConfig cfg;
  TableReader top(root, "");
  const std::int64_t seed = top.Integer("seed", static_cast<std::int64_t>(cfg.seed));
  if (seed < 0) throw ValidationError("seed", "must be >= 0");
  cfg.seed = static_cast<std::uint64_t>(seed);
  cfg.max_time = top.Number("max_time", cfg.max_time);

  if (const toml::table* t = top.Table("grid")) {
    TableReader r(*t, "grid");
    cfg.grid.origin = r.Point("origin", cfg.grid.origin);
    cfg.grid.cell_size = r.Number("cell_size", cfg.grid.cell_size);
    cfg.grid.width = static_cast<int>(r.Integer("width", cfg.grid.width));
    cfg.grid.height = static_cast<int>(r.Integer("height", cfg.grid.height));
    r.RejectUnknown();
  }
  if (const toml::table* t = top.Table("dem")) {
    TableReader r(*t, "dem");
    cfg.h_safe = r.Number("h_safe", cfg.h_safe);
    r.RejectUnknown();
  }
  if (const toml::table* t = top.Table("lambda")) {
    TableReader r(*t, "lambda");
    cfg.error_area = r.Number("e", cfg.error_area);
    r.RejectUnknown();
  }
  if (const toml::table* t = top.Table("wheel")) {
    TableReader r(*t, "wheel");
    cfg.wheel_radius = r.Number("R", cfg.wheel_radius);
    cfg.wheel_stiffness = r.Number("k_r", cfg.wheel_stiffness);
    cfg.mass = r.Number("m", cfg.mass);
    r.RejectUnknown();
  }
  if (const toml::table* t = top.Table("planner")) {
    TableReader r(*t, "planner");
    PlannerConfig& p = cfg.planner;
    p.wheelbase = r.Number("wheelbase", p.wheelbase);
    p.dt = r.Number("dt", p.dt);
    p.horizon = static_cast<int>(r.Integer("horizon", p.horizon));
    p.q = r.Triple("q", p.q);
    p.q_terminal = r.Triple("q_terminal", p.q_terminal);
    p.w_v = r.Number("w_v", p.w_v);
    p.v_max = r.Number("v_max", p.v_max);
    p.delta_max = r.Angle("delta_max", p.delta_max);
    p.r_threshold = r.Number("r_threshold", p.r_threshold);
    p.track_width = r.Number("track_width", p.track_width);
    r.RejectUnknown();
  }
  if (const toml::table* t = top.Table("lidar")) {
    TableReader r(*t, "lidar");
    LidarModel& l = cfg.lidar;
    l.range = r.Number("range", l.range);
    l.azimuth_count = static_cast<int>(r.Integer("azimuth_count", l.azimuth_count));
    l.ring_pitch = r.Angles("ring_pitch", l.ring_pitch);
    l.z_noise_sigma = r.Number("z_noise_sigma", l.z_noise_sigma);
    l.mount_height = r.Number("mount_height", l.mount_height);
    r.RejectUnknown();
  }
  if (const toml::table* t = top.Table("reference")) {
    TableReader r(*t, "reference");
    if (const toml::array* arr = r.Array("waypoints")) {
      cfg.reference.clear();
      for (const toml::node& n : *arr) {
        cfg.reference.push_back(TableReader::AsPoint(n, "reference.waypoints"));
      }
    }
    r.RejectUnknown();
  }
  if (const toml::array* arr = top.Array("environment")) {
    for (std::size_t i = 0; i < arr->size(); ++i) {
      const std::string path = "environment[" + std::to_string(i) + "]";
      const toml::table* t = (*arr)[i].as_table();
      if (t == nullptr) throw ValidationError(path, "expected a table");
      cfg.environment.push_back(ReadPrimitive(*t, path));
    }
  }
  top.RejectUnknown();
  cfg.Validate();
  return cfg;
}

ScenarioConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return ParseConfig(text.str(), path.string());
}

std::string DumpConfig(const ScenarioConfig& cfg) {
  std::ostringstream os;
  os << "seed = " << cfg.seed << "\n";
  os << "max_time = " << Float(cfg.max_time) << "\n\n";
  os << "[grid]\n"
     << "origin = " << Pair(cfg.grid.origin) << "\n"
     << "cell_size = " << Float(cfg.grid.cell_size) << "\n"
     << "width = " << cfg.grid.width << "\n"
     << "height = " << cfg.grid.height << "\n\n";
  os << "[dem]\nh_safe = " << Float(cfg.h_safe) << "\n\n";
  os << "[lambda]\ne = " << Float(cfg.error_area) << "\n\n";
  os << "[wheel]\n"
     << "R = " << Float(cfg.wheel_radius) << "\n"
     << "k_r = " << Float(cfg.wheel_stiffness) << "\n"
     << "m = " << Float(cfg.mass) << "\n\n";
  const PlannerConfig& p = cfg.planner;
  os << "[planner]\n"
     << "wheelbase = " << Float(p.wheelbase) << "\n"
     << "dt = " << Float(p.dt) << "\n"
     << "horizon = " << p.horizon << "\n"
     << "q = " << List(p.q) << "\n"
     << "q_terminal = " << List(p.q_terminal) << "\n"
     << "w_v = " << Float(p.w_v) << "\n"
     << "v_max = " << Float(p.v_max) << "\n"
     << "delta_max = " << Float(p.delta_max) << "\n"
     << "r_threshold = " << Float(p.r_threshold) << "\n"
     << "track_width = " << Float(p.track_width) << "\n\n";
  const LidarModel& l = cfg.lidar;
  os << "[lidar]\n"
     << "range = " << Float(l.range) << "\n"
     << "azimuth_count = " << l.azimuth_count << "\n"
     << "ring_pitch = " << List(l.ring_pitch) << "\n"
     << "z_noise_sigma = " << Float(l.z_noise_sigma) << "\n"
     << "mount_height = " << Float(l.mount_height) << "\n\n";
  os << "[reference]\nwaypoints = [";
  for (std::size_t i = 0; i < cfg.reference.size(); ++i) {
    os << (i ? ", " : "") << Pair(cfg.reference[i]);
  }
  os << "]\n";
  for (const Primitive& prim : cfg.environment) {
    os << "\n[[environment]]\ntype = \"" << PrimitiveKind(prim) << "\"\n";
    if (const auto* b = std::get_if<SpeedBump>(&prim)) {
      os << "center = " << Pair(b->center) << "\n"
         << "length = " << Float(b->length) << "\n"
         << "width = " << Float(b->width) << "\n"
         << "height = " << Float(b->height) << "\n"
         << "ramp = " << Float(b->ramp) << "\n"
         << "yaw = " << Float(b->yaw) << "\n"
         << "profile = \""
         << (b->profile == BumpProfile::kTrapezoid ? "trapezoid" : "cosine")
         << "\"\n";
    } else if (const auto* c = std::get_if<Curb>(&prim)) {
      os << "point = " << Pair(c->point) << "\n"
         << "normal = " << Float(c->normal) << "\n"
         << "height = " << Float(c->height) << "\n";
    } else if (const auto* k = std::get_if<Cone>(&prim)) {
      os << "center = " << Pair(k->center) << "\n"
         << "base_radius = " << Float(k->base_radius) << "\n"
         << "top_radius = " << Float(k->top_radius) << "\n"
         << "height = " << Float(k->height) << "\n";
    } else if (const auto* w = std::get_if<Wall>(&prim)) {
      os << "min = " << Pair(w->min) << "\n"
         << "max = " << Pair(w->max) << "\n"
         << "height = " << Float(w->height) << "\n";
    } else if (const auto* q = std::get_if<Pole>(&prim)) {
      os << "center = " << Pair(q->center) << "\n"
         << "radius = " << Float(q->radius) << "\n"
         << "height = " << Float(q->height) << "\n";
    }
  }
  return os.str();
}

}  // namespace lambda_nav
