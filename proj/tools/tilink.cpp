// Command line front end: volumes of generalized hyperbolic tetrahedra and
// bipyramids, equilateral tiling realizations, link volume densities, and
// the reference tables.  Output goes to stdout in human, json, or csv form;
// diagnostics go to stderr.  Exit codes: 0 success, 2 parse error,
// 3 domain error, 4 numerical failure.

#include <algorithm>
#include <cfenv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tilink/bipyramid.hpp"
#include "tilink/catalog.hpp"
#include "tilink/dilog.hpp"
#include "tilink/errors.hpp"
#include "tilink/tetrahedron.hpp"
#include "tilink/tiling.hpp"

using json = nlohmann::ordered_json;
using namespace tilink;

namespace {

constexpr double kPi = std::numbers::pi;

struct Options {
  std::string format = "human";
  int digits = 6;
  double tol = 1e-13;
};

// ---------------------------------------------------------------------------
// Formatting

// Round to the given number of decimals, ties to even, -0 normalized.
double round_decimals(double x, int digits) {
  double scale = std::pow(10.0, digits);
  double r = std::nearbyint(x * scale) / scale;
  if (r == 0.0) r = 0.0;
  return r;
}

std::string fixed_str(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, round_decimals(x, digits));
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string cell_str(const json& v, int digits) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_float()) return fixed_str(v.get<double>(), digits);
  return v.dump();
}

void flatten(const json& node, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out,
             int digits) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      std::string path = prefix.empty() ? key : prefix + "." + key;
      flatten(value, path, out, digits);
    }
  } else if (node.is_array()) {
    for (size_t i = 0; i < node.size(); ++i)
      flatten(node[i], prefix + "[" + std::to_string(i) + "]", out, digits);
  } else {
    out.emplace_back(prefix, cell_str(node, digits));
  }
}

bool is_table(const json& payload) {
  return payload.contains("rows") && payload["rows"].is_array() &&
         !payload["rows"].empty() && payload["rows"][0].is_object();
}

void render_human(const json& payload, const Options& opt) {
  if (is_table(payload)) {
    for (const auto& [key, value] : payload.items()) {
      if (key == "rows") continue;
      std::cout << key << ": " << cell_str(value, opt.digits) << "\n";
    }
    const json& rows = payload["rows"];
    std::vector<std::string> cols;
    for (const auto& [key, value] : rows[0].items()) cols.push_back(key);
    std::vector<size_t> width;
    for (const auto& c : cols) width.push_back(c.size());
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : rows) {
      std::vector<std::string> line;
      for (size_t i = 0; i < cols.size(); ++i) {
        std::string s =
            row.contains(cols[i]) ? cell_str(row[cols[i]], opt.digits) : "";
        width[i] = std::max(width[i], s.size());
        line.push_back(std::move(s));
      }
      cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
      for (size_t i = 0; i < line.size(); ++i) {
        std::cout << line[i];
        if (i + 1 < line.size())
          std::cout << std::string(width[i] - line[i].size() + 2, ' ');
      }
      std::cout << "\n";
    };
    emit(cols);
    for (const auto& line : cells) emit(line);
    return;
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  flatten(payload, "", pairs, opt.digits);
  size_t w = 0;
  for (const auto& [key, value] : pairs) w = std::max(w, key.size());
  for (const auto& [key, value] : pairs)
    std::cout << key << std::string(w - key.size() + 2, ' ') << value << "\n";
}

void render_csv(const json& payload, const Options& opt) {
  if (is_table(payload)) {
    const json& rows = payload["rows"];
    std::vector<std::string> cols;
    for (const auto& [key, value] : rows[0].items()) cols.push_back(key);
    for (size_t i = 0; i < cols.size(); ++i)
      std::cout << csv_escape(cols[i]) << (i + 1 < cols.size() ? "," : "\n");
    for (const auto& row : rows) {
      for (size_t i = 0; i < cols.size(); ++i) {
        if (row.contains(cols[i]))
          std::cout << csv_escape(cell_str(row[cols[i]], opt.digits));
        std::cout << (i + 1 < cols.size() ? "," : "\n");
      }
    }
    return;
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  flatten(payload, "", pairs, opt.digits);
  std::cout << "field,value\n";
  for (const auto& [key, value] : pairs)
    std::cout << csv_escape(key) << "," << csv_escape(value) << "\n";
}

void render(const json& payload, const Options& opt) {
  if (opt.format == "json") {
    std::cout << payload.dump(2) << "\n";
    return;
  }
  if (opt.format == "csv") {
    render_csv(payload, opt);
    return;
  }
  render_human(payload, opt);
}

double rounded(double x, const Options& opt) {
  return round_decimals(x, opt.digits);
}

// Residual-style quantities are tiny by design; fixed-point display at the
// output digit count would collapse them to zero, so they get their own
// scientific form.
std::string sci_str(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

// ---------------------------------------------------------------------------
// Input parsing

// Angle literals: a decimal number, "pi", "pi/b", "a*pi", or "a*pi/b",
// denoting a dihedral angle in [0, pi].
double parse_angle_literal(const std::string& text) {
  auto fail = [&](const std::string& why) -> double {
    throw ParseError("angle \"" + text + "\": " + why);
  };
  if (text.empty()) fail("empty");

  double value = 0.0;
  auto pos = text.find("pi");
  if (pos != std::string::npos) {
    long long a = 1, b = 1;
    std::string head = text.substr(0, pos), tail = text.substr(pos + 2);
    if (!head.empty()) {
      if (head.back() != '*') fail("expected \"a*pi\"");
      head.pop_back();
      try {
        size_t used = 0;
        a = std::stoll(head, &used);
        if (used != head.size()) fail("bad multiplier");
      } catch (const std::exception&) {
        fail("bad multiplier");
      }
    }
    if (!tail.empty()) {
      if (tail.front() != '/') fail("expected \"pi/b\"");
      tail.erase(tail.begin());
      try {
        size_t used = 0;
        b = std::stoll(tail, &used);
        if (used != tail.size() || b <= 0) fail("bad divisor");
      } catch (const std::exception&) {
        fail("bad divisor");
      }
    }
    value = static_cast<double>(a) * kPi / static_cast<double>(b);
  } else {
    try {
      size_t used = 0;
      value = std::stod(text, &used);
      if (used != text.size()) fail("not a number");
    } catch (const std::exception&) {
      fail("not a number");
    }
  }
  if (!std::isfinite(value) || value < 0.0 || value > kPi)
    fail("must lie in [0, pi]");
  return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

AngleVector parse_angle_vector(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 6)
    throw ParseError("angles \"" + text + "\": expected 6 comma-separated values, got " +
                     std::to_string(parts.size()));
  double v[6];
  for (int i = 0; i < 6; ++i) v[i] = parse_angle_literal(parts[i]);
  return AngleVector{v[0], v[1], v[2], v[3], v[4], v[5]};
}

// "p.q.r.s" or "p.q.r.s:weight"
VertexClass parse_class_arg(const std::string& text, bool* had_weight) {
  auto colon = text.find(':');
  VertexClass cl;
  if (colon == std::string::npos) {
    cl.config = parse_vertex_config(text);
    cl.weight = Rational(1);
    *had_weight = false;
  } else {
    cl.config = parse_vertex_config(text.substr(0, colon));
    cl.weight = parse_rational(text.substr(colon + 1));
    *had_weight = true;
  }
  return cl;
}

TilingSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("spec file \"" + path + "\": cannot open");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("spec file \"" + path + "\": " + e.what());
  }
  if (!doc.is_object())
    throw ParseError("spec file \"" + path + "\": expected a JSON object");

  for (const auto& [key, value] : doc.items()) {
    if (key != "name" && key != "classes" && key != "faces")
      throw ParseError("spec file \"" + path + "\": unknown field \"" + key +
                       "\"");
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      throw ParseError("spec file \"" + path + "\": \"name\" must be a string");
    name = doc["name"].get<std::string>();
  }
  if (!doc.contains("classes") || !doc["classes"].is_array() ||
      doc["classes"].empty())
    throw ParseError("spec file \"" + path +
                     "\": \"classes\" must be a non-empty array");

  std::vector<VertexClass> classes;
  bool all_weighted = true;
  for (const auto& entry : doc["classes"]) {
    if (!entry.is_object())
      throw ParseError("spec file \"" + path + "\": class entries must be objects");
    for (const auto& [key, value] : entry.items()) {
      if (key != "config" && key != "weight")
        throw ParseError("spec file \"" + path +
                         "\": unknown class field \"" + key + "\"");
    }
    if (!entry.contains("config") || !entry["config"].is_string())
      throw ParseError("spec file \"" + path +
                       "\": each class needs a \"config\" string");
    VertexClass cl;
    cl.config = parse_vertex_config(entry["config"].get<std::string>());
    if (entry.contains("weight")) {
      const json& w = entry["weight"];
      if (w.is_string())
        cl.weight = parse_rational(w.get<std::string>());
      else if (w.is_number())
        cl.weight = parse_rational(w.dump());
      else
        throw ParseError("spec file \"" + path +
                         "\": \"weight\" must be a number or string");
    } else {
      cl.weight = Rational(1);
      all_weighted = false;
    }
    classes.push_back(std::move(cl));
  }
  if (classes.size() > 1 && !all_weighted)
    throw ParseError("spec file \"" + path +
                     "\": weights are required when there are multiple classes");

  std::map<int, long long> faces;
  if (doc.contains("faces")) {
    if (!doc["faces"].is_object())
      throw ParseError("spec file \"" + path + "\": \"faces\" must be an object");
    for (const auto& [key, value] : doc["faces"].items()) {
      bool numeric = !key.empty() && key.size() <= 9 &&
                     std::all_of(key.begin(), key.end(), [](char c) {
                       return c >= '0' && c <= '9';
                     });
      if (!numeric)
        throw ParseError("spec file \"" + path + "\": face size \"" + key +
                         "\" is not a positive integer");
      if (!value.is_number_integer() || value.get<long long>() <= 0)
        throw ParseError("spec file \"" + path + "\": face count for \"" +
                         key + "\" must be a positive integer");
      faces[std::stoi(key)] = value.get<long long>();
    }
  }
  return TilingSpec::make(std::move(classes), std::move(faces), std::move(name));
}

// ---------------------------------------------------------------------------
// Payload builders

json angles_json(const AngleVector& t, const Options& opt) {
  json angles;
  angles["A"] = rounded(t.A, opt);
  angles["B"] = rounded(t.B, opt);
  angles["C"] = rounded(t.C, opt);
  angles["D"] = rounded(t.D, opt);
  angles["E"] = rounded(t.E, opt);
  angles["F"] = rounded(t.F, opt);
  return angles;
}

json vertices_json(const AngleVector& t, const Options& opt) {
  auto sums = vertex_angle_sums(t);
  auto kinds = classify_vertices(t);
  json out = json::array();
  for (int i = 0; i < 4; ++i) {
    json v;
    v["vertex"] = "v" + std::to_string(i + 1);
    v["angle_sum"] = rounded(sums[i], opt);
    v["kind"] = to_string(kinds[i]);
    out.push_back(std::move(v));
  }
  return out;
}

json cmd_tetra(const std::string& angle_arg, const Options& opt) {
  AngleVector t = parse_angle_vector(angle_arg);
  json payload;
  payload["command"] = "tetra";
  payload["angles"] = angles_json(t, opt);
  payload["gram_det"] = rounded(gram_determinant(t), opt);
  payload["volume"] = rounded(volume(t), opt);
  payload["vertices"] = vertices_json(t, opt);
  return payload;
}

json cmd_wedge(const std::string& a_arg, const Options& opt) {
  double a = parse_angle_literal(a_arg);
  AngleVector t = maximal_wedge_angles(a);
  json payload;
  payload["command"] = "wedge";
  payload["a"] = rounded(a, opt);
  payload["angles"] = angles_json(t, opt);
  payload["volume"] = rounded(volume(t), opt);
  payload["criticality_residual"] = sci_str(criticality_residual(a));
  payload["vertices"] = vertices_json(t, opt);
  return payload;
}

json report_json(const BipyramidReport& r, const std::string& family,
                 const Options& opt) {
  json payload;
  payload["command"] = "bipyramid";
  payload["family"] = family;
  payload["n"] = r.n;
  payload["alpha"] = rounded(r.alpha, opt);
  payload["apex_kind"] = to_string(r.apex_kind);
  payload["wedge_volume"] = rounded(r.wedge_volume, opt);
  payload["total_volume"] = rounded(r.total_volume, opt);
  return payload;
}

json cmd_bipyramid(const std::string& family, int n,
                   const std::string& alpha_arg, const Options& opt) {
  if (family == "custom") {
    if (alpha_arg.empty())
      throw ParseError("bipyramid: --alpha is required with --family custom");
    double alpha = parse_angle_literal(alpha_arg);
    return report_json(bipyramid_volume(n, alpha), family, opt);
  }
  if (!alpha_arg.empty())
    throw ParseError("bipyramid: --alpha only applies to --family custom");
  if (family == "trunc") return report_json(bn_trunc(n), family, opt);
  if (family == "ideal") return report_json(bn_ideal(n), family, opt);
  return report_json(bn_square(n), family, opt);
}

json checks_json(const DecompositionChecks& c) {
  json out;
  out["vertical"] = c.vertical_ok ? "ok" : "fail";
  out["equatorial"] = c.equatorial_ok ? "ok" : "fail";
  out["bigon"] = c.has_bigons ? (c.bigon_ok ? "ok" : "fail") : "n/a";
  out["apex"] = c.apex_ok ? "ok" : "fail";
  out["max_residual"] = sci_str(c.max_residual);
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

json tiling_json(const TilingReport& rep, const Options& opt) {
  json payload;
  payload["command"] = "tiling";
  if (!rep.spec.name.empty()) payload["name"] = rep.spec.name;
  json classes = json::array();
  for (const auto& cl : rep.spec.classes) {
    json c;
    c["config"] = cl.config.str();
    c["weight"] = cl.weight.str();
    classes.push_back(std::move(c));
  }
  payload["classes"] = std::move(classes);
  payload["geometry"] = to_string(rep.geometry);
  payload["s"] = rounded(rep.assignment.s, opt);
  payload["edge_length"] = rounded(rep.assignment.edge_length, opt);
  json angles;
  for (const auto& [n, alpha] : rep.assignment.angles)
    angles[std::to_string(n)] = rounded(alpha, opt);
  payload["angles"] = std::move(angles);
  json fv;
  for (const auto& [n, vol] : rep.face_volumes)
    fv[std::to_string(n)] = rounded(vol, opt);
  payload["face_volumes"] = std::move(fv);
  payload["density"] = rounded(rep.density, opt);
  payload["euler_per_crossing"] = rep.euler_per_crossing.str();
  if (rep.min_genus) payload["minimal_genus"] = rep.min_genus->str();
  payload["checks"] = checks_json(rep.checks);
  if (rep.total_volume) {
    payload["total_volume"] = rounded(*rep.total_volume, opt);
    payload["vol_over_2"] = rounded(*rep.vol_over_2, opt);
  }
  if (rep.note) {
    json note;
    note["published_value"] = rep.note->published_value;
    note["status"] = rep.note->status;
    payload["note"] = std::move(note);
  }
  return payload;
}

json cmd_tiling(const std::vector<std::string>& config_args,
                const std::string& spec_path, const Options& opt) {
  if (!spec_path.empty() && !config_args.empty())
    throw ParseError("tiling: use either --config or --spec, not both");
  TilingSpec spec;
  if (!spec_path.empty()) {
    spec = load_spec_file(spec_path);
  } else {
    if (config_args.empty())
      throw ParseError("tiling: need at least one --config or a --spec file");
    std::vector<VertexClass> classes;
    bool all_weighted = true;
    for (const auto& arg : config_args) {
      bool had = false;
      classes.push_back(parse_class_arg(arg, &had));
      all_weighted = all_weighted && had;
    }
    if (classes.size() > 1 && !all_weighted)
      throw ParseError(
          "tiling: per-class weights (\"p.q.r.s:w\") are required when more "
          "than one class is given");
    spec = TilingSpec::make(std::move(classes));
  }
  return tiling_json(density(spec, opt.tol), opt);
}

json solid_row(const CatalogSolid& solid, bool volumes, const Options& opt) {
  json row;
  row["name"] = solid.name;
  row["config"] = solid.config.str();
  std::string faces;
  long long half_edges = 0, face_count = 0;
  for (const auto& [size, count] : solid.faces) {
    if (!faces.empty()) faces += ";";
    faces += std::to_string(size) + ":" + std::to_string(count);
    half_edges += size * count;
    face_count += count;
  }
  row["faces"] = faces;
  row["vertices"] = half_edges / solid.config.valence();
  row["edges"] = half_edges / 2;
  row["face_count"] = face_count;
  if (volumes) {
    auto link = spherical_link_volume(solid);
    row["total_volume"] = rounded(link.total_volume, opt);
    row["vol_over_2"] = rounded(link.vol_over_2, opt);
  }
  return row;
}

json cmd_catalog(const std::string& name, bool volumes, const Options& opt) {
  if (!name.empty()) {
    const CatalogSolid* found = nullptr;
    auto fold = [](std::string s) {
      std::transform(s.begin(), s.end(), s.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      return s;
    };
    for (const auto& solid : spherical_catalog())
      if (fold(solid.name) == fold(name)) found = &solid;
    if (!found) throw DomainError("catalog: unknown solid \"" + name + "\"");
    json out;
    out["command"] = "catalog";
    json row = solid_row(*found, true, opt);
    for (auto& [key, value] : row.items()) out[key] = value;
    auto link = spherical_link_volume(*found);
    json angles;
    for (const auto& [n, alpha] : link.angles)
      angles[std::to_string(n)] = rounded(alpha, opt);
    out["angles"] = std::move(angles);
    return out;
  }
  json payload;
  payload["command"] = "catalog";
  json rows = json::array();
  for (const auto& solid : spherical_catalog())
    rows.push_back(solid_row(solid, volumes, opt));
  payload["rows"] = std::move(rows);
  return payload;
}

json cmd_tables(const std::string& figure, const Options& opt) {
  json payload;
  payload["command"] = "tables";
  payload["figure"] = figure;
  json rows = json::array();

  if (figure == "fig8") {
    std::vector<int> ns = {2, 3, 4, 5, 6, 7, 8, 9, 10, 100, 1000};
    for (int n : ns) {
      json row;
      row["n"] = n;
      row["volume"] = rounded(bn_trunc(n).total_volume, opt);
      rows.push_back(std::move(row));
    }
  } else if (figure == "fig11") {
    for (const auto& solid : spherical_catalog()) {
      auto link = spherical_link_volume(solid);
      json row;
      row["name"] = solid.name;
      row["config"] = solid.config.str();
      std::string angles;
      for (int n : solid.config.sizes) {
        if (!angles.empty()) angles += ".";
        angles += "(" + fixed_str(link.angles.at(n), 2) + ")";
      }
      row["angles"] = angles;
      row["vol_over_2"] = rounded(link.vol_over_2, opt);
      rows.push_back(std::move(row));
    }
  } else if (figure == "fig12a" || figure == "fig12b") {
    std::vector<std::string> configs =
        figure == "fig12a"
            ? std::vector<std::string>{"4.4.4.4", "6.6.6", "3.6.3.6", "4.8.8",
                                       "3.4.6.4"}
            : std::vector<std::string>{"5.5.5.5", "6.6.6.6", "12.12.12.12",
                                       "4.8.4.8", "5.6.5.6"};
    for (const auto& cfg : configs) {
      TilingReport rep = density(TilingSpec::single(parse_vertex_config(cfg)));
      json row;
      row["config"] = cfg;
      row["geometry"] = to_string(rep.geometry);
      row["density"] = rounded(rep.density, opt);
      if (figure == "fig12b") row["minimal_genus"] = rep.min_genus->str();
      row["published_value"] =
          rep.note ? json(rep.note->published_value) : json("");
      row["status"] = rep.note ? json(rep.note->status) : json("");
      rows.push_back(std::move(row));
    }
  } else {
    throw ParseError("tables: unknown figure \"" + figure + "\"");
  }
  payload["rows"] = std::move(rows);
  return payload;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{
      "Volumes of generalized hyperbolic tetrahedra and bipyramids, "
      "equilateral tiling realizations, and alternating link volume "
      "densities"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--digits", opt.digits, "Decimal digits in output")
      ->check(CLI::Range(0, 17))
      ->capture_default_str();
  app.add_option("--tol", opt.tol, "Solver tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string tetra_angles;
  auto* tetra = app.add_subcommand(
      "tetra", "Generalized tetrahedron: Gram matrix, vertex kinds, volume");
  tetra->fallthrough();
  tetra
      ->add_option("--angles", tetra_angles,
                   "Six dihedral angles A,B,C,D,E,F (opposite pairs "
                   "(A,D),(B,E),(C,F)), e.g. pi/3,pi/3,pi/3,pi/3,pi/3,pi/3")
      ->required();

  std::string wedge_a;
  auto* wedge = app.add_subcommand(
      "wedge", "Maximal-volume bipyramid wedge with apex angle a");
  wedge->fallthrough();
  wedge->add_option("--a", wedge_a, "Apex edge angle in [0, pi]")->required();

  std::string bp_family = "trunc";
  int bp_n = 0;
  std::string bp_alpha;
  auto* bp = app.add_subcommand(
      "bipyramid", "n-gonal bipyramid volumes (trunc, ideal, square, custom)");
  bp->fallthrough();
  bp->add_option("--family", bp_family, "Bipyramid family")
      ->check(CLI::IsMember({"trunc", "ideal", "square", "custom"}))
      ->capture_default_str();
  bp->add_option("--n", bp_n, "Equatorial polygon size")->required();
  bp->add_option("--alpha", bp_alpha,
                 "Vertical dihedral angle (only with --family custom)");

  std::vector<std::string> tiling_configs;
  std::string tiling_spec_path;
  auto* tl = app.add_subcommand(
      "tiling",
      "Equilateral realization, link volume density, and genus of a "
      "k-uniform tiling");
  tl->fallthrough();
  tl->add_option("--config", tiling_configs,
                 "Vertex configuration \"p.q.r[.s][:weight]\"; repeat for "
                 "multiple classes (weights then required)");
  tl->add_option("--spec", tiling_spec_path, "JSON spec file");

  std::string cat_name;
  bool cat_volumes = false;
  auto* cat = app.add_subcommand(
      "catalog", "Vertex-transitive spherical tilings with valence 3 or 4");
  cat->fallthrough();
  cat->add_option("--name", cat_name, "Single solid to report");
  cat->add_flag("--volumes", cat_volumes, "Include link volumes in the list");

  std::string figure;
  auto* tables = app.add_subcommand("tables", "Reference tables");
  tables->fallthrough();
  tables->add_option("--figure", figure, "One of fig8, fig11, fig12a, fig12b")
      ->required()
      ->check(CLI::IsMember({"fig8", "fig11", "fig12a", "fig12b"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    json payload;
    if (tetra->parsed()) payload = cmd_tetra(tetra_angles, opt);
    else if (wedge->parsed()) payload = cmd_wedge(wedge_a, opt);
    else if (bp->parsed()) payload = cmd_bipyramid(bp_family, bp_n, bp_alpha, opt);
    else if (tl->parsed()) payload = cmd_tiling(tiling_configs, tiling_spec_path, opt);
    else if (cat->parsed()) payload = cmd_catalog(cat_name, cat_volumes, opt);
    else payload = cmd_tables(figure, opt);
    render(payload, opt);
    return 0;
  } catch (const tilink::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const tilink::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const tilink::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
