#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "tworay/lattice.hpp"
#include "tworay/ring.hpp"

namespace tworay {

using Json = nlohmann::ordered_json;

struct Coordinate {
  std::string name;
  Int weight;
};

struct Centre {
  std::string coordinate;
  std::string type;  // "I" or "II2"
};

struct FiberModel {
  std::vector<Int> ambient;
  std::vector<Int> degrees;
  std::string evidence;  // "derived" or "declared"
};

struct BlowupData {
  Int r = 1;                       // quotient order prefix of the weight tuple
  std::vector<Int> weights;        // printed blowup weights
  std::vector<std::string> local;  // local coordinates at the contracted point
};

struct TargetModel {
  std::vector<Int> weights;  // printed ambient of X', sorted multiset
  std::optional<Int> quotient;
  std::vector<Int> degrees;  // printed complete-intersection degrees, if any
};

struct FlipFixture {
  std::vector<Int> contracted, extracted;  // curve types P(w1,w2)
  std::vector<std::string> contracted_equations, extracted_equations;
  std::vector<std::string> contracted_coordinates, extracted_coordinates;
  Rat k_contracted, k_extracted;  // -K . C on each side
};

struct GammaCurve {
  std::vector<Coordinate> variables;               // ring of the Gamma ambient
  std::vector<std::vector<std::string>> matrix;    // 2x3 entries
  int cone_dim = 0;
};

struct CoverData {
  std::string id;                        // index-1 double cover GRDB id
  std::vector<std::vector<Int>> degrees; // upper triangle of wt(M), rows 4,3,2,1
  std::string configuration;             // expected "A"/"B"
  Int pivot = 0;
};

struct Expected {
  int table = 0;
  std::optional<Int> dim_A;
  std::string centre_label;
  std::string lcm;       // NONSOLID / INCONCLUSIVE, empty when not computable
  std::string endpoint;  // fibration / point / curve, empty for bare rows
  std::optional<std::vector<Int>> base;
  std::optional<Int> dp;
  std::optional<FiberModel> fiber;
  std::optional<BlowupData> blowup;
  std::optional<std::vector<std::string>> survivors;
  std::optional<TargetModel> target;
  std::optional<Rat> discrepancy;
  std::optional<std::vector<Int>> gamma;
  std::optional<FlipFixture> flip;
  std::optional<GammaCurve> gamma_curve;
  std::optional<CoverData> cover;
};

// One GRDB-style record.
struct FanoFamily {
  std::string id;
  Int fano_index = 2;
  std::vector<Coordinate> coordinates;      // empty for weight-less rows
  std::optional<Centre> centre;
  std::optional<IntMatrix2xN> grading;      // columns: t then the coordinates
  RingPtr cox_ring;                         // {t} + coordinates, when grading present
  std::vector<Poly> equations;              // lifted equations in the Cox ring
  Expected expected;

  bool has_weights() const { return !coordinates.empty(); }

  Int weight(const std::string& name) const {
    for (const auto& c : coordinates)
      if (c.name == name) return c.weight;
    throw std::out_of_range(id + ": no coordinate " + name);
  }

  std::vector<Int> weights() const {
    std::vector<Int> w;
    for (const auto& c : coordinates) w.push_back(c.weight);
    return w;
  }

  // positive weights grading the Cox ring (sum of the two rows need not be
  // positive; H-degree + E-degree is, on every corpus grading)
  std::vector<Int> cox_positive_weights() const {
    std::vector<Int> w;
    for (const auto& c : grading->cols) w.push_back(c.x + c.y);
    return w;
  }
};

// Number of weight-1 generators; Table 1 prints this as dim |A| for the rows
// whose ambient is known (a projective-dimension reading would differ by one,
// see the stored #41028 row).
inline Int weight_one_count(const FanoFamily& f) {
  Int n = 0;
  for (const auto& c : f.coordinates)
    if (c.weight == 1) ++n;
  return n;
}

namespace detail {

inline void check_keys(const Json& j, const std::set<std::string>& allowed,
                       const std::string& where) {
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw std::invalid_argument(where + ": unknown key '" + k + "'");
}

inline std::vector<Int> int_list(const Json& j) {
  std::vector<Int> out;
  for (const auto& x : j) out.push_back(Int(x.get<long long>()));
  return out;
}

inline Json int_list_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(static_cast<long long>(x));
  return a;
}

}  // namespace detail

inline Expected parse_expected(const Json& j, const std::string& where) {
  detail::check_keys(j, {"table", "dim_A", "centre_label", "lcm", "endpoint", "base", "dp",
                         "fiber", "blowup", "survivors", "target", "discrepancy", "gamma",
                         "flip", "gamma_curve", "cover"},
                     where + ".expected");
  Expected e;
  e.table = j.at("table").get<int>();
  if (j.contains("dim_A")) e.dim_A = Int(j["dim_A"].get<long long>());
  if (j.contains("centre_label")) e.centre_label = j["centre_label"].get<std::string>();
  if (j.contains("lcm")) e.lcm = j["lcm"].get<std::string>();
  if (j.contains("endpoint")) e.endpoint = j["endpoint"].get<std::string>();
  if (j.contains("base")) e.base = detail::int_list(j["base"]);
  if (j.contains("dp")) e.dp = Int(j["dp"].get<long long>());
  if (j.contains("fiber")) {
    const auto& f = j["fiber"];
    detail::check_keys(f, {"ambient", "degrees", "evidence"}, where + ".fiber");
    e.fiber = FiberModel{detail::int_list(f.at("ambient")), detail::int_list(f.at("degrees")),
                         f.at("evidence").get<std::string>()};
  }
  if (j.contains("blowup")) {
    const auto& b = j["blowup"];
    detail::check_keys(b, {"r", "weights", "local"}, where + ".blowup");
    BlowupData bd;
    bd.r = Int(b.at("r").get<long long>());
    bd.weights = detail::int_list(b.at("weights"));
    for (const auto& v : b.at("local")) bd.local.push_back(v.get<std::string>());
    e.blowup = bd;
  }
  if (j.contains("survivors")) {
    std::vector<std::string> s;
    for (const auto& v : j["survivors"]) s.push_back(v.get<std::string>());
    e.survivors = s;
  }
  if (j.contains("target")) {
    const auto& t = j["target"];
    detail::check_keys(t, {"weights", "quotient", "degrees"}, where + ".target");
    TargetModel tm;
    tm.weights = detail::int_list(t.at("weights"));
    if (t.contains("quotient")) tm.quotient = Int(t["quotient"].get<long long>());
    if (t.contains("degrees")) tm.degrees = detail::int_list(t["degrees"]);
    e.target = tm;
  }
  if (j.contains("discrepancy")) e.discrepancy = parse_rat(j["discrepancy"].get<std::string>());
  if (j.contains("gamma")) e.gamma = detail::int_list(j["gamma"]);
  if (j.contains("flip")) {
    const auto& f = j["flip"];
    detail::check_keys(f, {"contracted", "extracted", "contracted_equations",
                           "extracted_equations", "contracted_coordinates",
                           "extracted_coordinates", "k_contracted", "k_extracted"},
                       where + ".flip");
    FlipFixture ff;
    ff.contracted = detail::int_list(f.at("contracted"));
    ff.extracted = detail::int_list(f.at("extracted"));
    auto strs = [&](const char* key, std::vector<std::string>& out) {
      if (f.contains(key))
        for (const auto& v : f[key]) out.push_back(v.get<std::string>());
    };
    strs("contracted_equations", ff.contracted_equations);
    strs("extracted_equations", ff.extracted_equations);
    strs("contracted_coordinates", ff.contracted_coordinates);
    strs("extracted_coordinates", ff.extracted_coordinates);
    ff.k_contracted = parse_rat(f.at("k_contracted").get<std::string>());
    ff.k_extracted = parse_rat(f.at("k_extracted").get<std::string>());
    e.flip = ff;
  }
  if (j.contains("gamma_curve")) {
    const auto& g = j["gamma_curve"];
    detail::check_keys(g, {"variables", "matrix", "cone_dim"}, where + ".gamma_curve");
    GammaCurve gc;
    for (const auto& v : g.at("variables"))
      gc.variables.push_back({v.at(0).get<std::string>(), Int(v.at(1).get<long long>())});
    for (const auto& row : g.at("matrix")) {
      std::vector<std::string> r;
      for (const auto& ent : row) r.push_back(ent.get<std::string>());
      gc.matrix.push_back(r);
    }
    gc.cone_dim = g.at("cone_dim").get<int>();
    e.gamma_curve = gc;
  }
  if (j.contains("cover")) {
    const auto& c = j["cover"];
    detail::check_keys(c, {"id", "degrees", "configuration", "pivot"}, where + ".cover");
    CoverData cd;
    cd.id = c.at("id").get<std::string>();
    for (const auto& row : c.at("degrees")) cd.degrees.push_back(detail::int_list(row));
    cd.configuration = c.at("configuration").get<std::string>();
    cd.pivot = Int(c.at("pivot").get<long long>());
    e.cover = cd;
  }
  return e;
}

inline FanoFamily parse_family(const Json& j) {
  detail::check_keys(j, {"id", "fano_index", "coordinates", "centre", "grading",
                         "equations", "expected"},
                     "family");
  FanoFamily f;
  f.id = j.at("id").get<std::string>();
  f.fano_index = Int(j.at("fano_index").get<long long>());
  if (j.contains("coordinates")) {
    for (const auto& c : j["coordinates"]) {
      detail::check_keys(c, {"name", "weight"}, f.id + ".coordinates");
      Int w(c.at("weight").get<long long>());
      if (w <= 0) throw std::invalid_argument(f.id + ": coordinate weight must be positive");
      f.coordinates.push_back({c.at("name").get<std::string>(), w});
    }
  }
  if (j.contains("centre")) {
    const auto& c = j["centre"];
    detail::check_keys(c, {"coordinate", "type"}, f.id + ".centre");
    Centre ce{c.at("coordinate").get<std::string>(), c.at("type").get<std::string>()};
    if (ce.type != "I" && ce.type != "II2")
      throw std::invalid_argument(f.id + ": centre type must be I or II2");
    bool present = false;
    for (const auto& co : f.coordinates) present = present || co.name == ce.coordinate;
    if (!present) throw std::invalid_argument(f.id + ": centre coordinate missing");
    f.centre = ce;
  }
  if (j.contains("grading")) {
    const auto& g = j["grading"];
    if (!g.is_array() || g.size() != 2)
      throw std::invalid_argument(f.id + ": grading must have two rows");
    auto r0 = detail::int_list(g[0]), r1 = detail::int_list(g[1]);
    if (r0.size() != f.coordinates.size() + 1 || r1.size() != r0.size())
      throw std::invalid_argument(f.id + ": grading rows must cover t + coordinates");
    std::vector<std::string> labels = {"t"};
    for (const auto& c : f.coordinates) labels.push_back(c.name);
    std::vector<Vec2> cols;
    for (size_t i = 0; i < r0.size(); ++i) cols.push_back({r0[i], r1[i]});
    f.grading = IntMatrix2xN(labels, cols);
    f.cox_ring = make_ring(labels);
  }
  f.expected = parse_expected(j.at("expected"), f.id);
  if (j.contains("equations")) {
    if (!f.grading) throw std::invalid_argument(f.id + ": equations need a grading");
    for (const auto& s : j["equations"]) {
      Poly p = parse_poly(s.get<std::string>(), f.cox_ring);
      // bihomogeneity for both grading rows
      for (int row = 0; row < 2; ++row) {
        std::vector<Int> w;
        for (const auto& col : f.grading->cols) w.push_back(row == 0 ? col.x : col.y);
        std::optional<Int> deg;
        for (const auto& [m, c] : p.terms()) {
          Int d = mono_weighted_degree(m, w);
          if (!deg) deg = d;
          else if (*deg != d)
            throw std::invalid_argument(f.id + ": equation of mixed degree: " +
                                        s.get<std::string>());
        }
      }
      f.equations.push_back(p);
    }
  }
  return f;
}

inline Json family_to_json(const FanoFamily& f) {
  Json j;
  j["id"] = f.id;
  j["fano_index"] = static_cast<long long>(f.fano_index);
  if (!f.coordinates.empty()) {
    Json cs = Json::array();
    for (const auto& c : f.coordinates)
      cs.push_back(Json{{"name", c.name}, {"weight", static_cast<long long>(c.weight)}});
    j["coordinates"] = cs;
  }
  if (f.centre) j["centre"] = Json{{"coordinate", f.centre->coordinate}, {"type", f.centre->type}};
  if (f.grading) {
    Json r0 = Json::array(), r1 = Json::array();
    for (const auto& c : f.grading->cols) {
      r0.push_back(static_cast<long long>(c.x));
      r1.push_back(static_cast<long long>(c.y));
    }
    j["grading"] = Json::array({r0, r1});
  }
  if (!f.equations.empty()) {
    Json eqs = Json::array();
    for (const auto& e : f.equations) eqs.push_back(to_string(e));
    j["equations"] = eqs;
  }
  Json e;
  e["table"] = f.expected.table;
  if (f.expected.dim_A) e["dim_A"] = static_cast<long long>(*f.expected.dim_A);
  if (!f.expected.centre_label.empty()) e["centre_label"] = f.expected.centre_label;
  if (!f.expected.lcm.empty()) e["lcm"] = f.expected.lcm;
  if (!f.expected.endpoint.empty()) e["endpoint"] = f.expected.endpoint;
  if (f.expected.base) e["base"] = detail::int_list_json(*f.expected.base);
  if (f.expected.dp) e["dp"] = static_cast<long long>(*f.expected.dp);
  if (f.expected.fiber)
    e["fiber"] = Json{{"ambient", detail::int_list_json(f.expected.fiber->ambient)},
                      {"degrees", detail::int_list_json(f.expected.fiber->degrees)},
                      {"evidence", f.expected.fiber->evidence}};
  if (f.expected.blowup) {
    Json b;
    b["r"] = static_cast<long long>(f.expected.blowup->r);
    b["weights"] = detail::int_list_json(f.expected.blowup->weights);
    b["local"] = f.expected.blowup->local;
    e["blowup"] = b;
  }
  if (f.expected.survivors) e["survivors"] = *f.expected.survivors;
  if (f.expected.target) {
    Json t;
    t["weights"] = detail::int_list_json(f.expected.target->weights);
    if (f.expected.target->quotient)
      t["quotient"] = static_cast<long long>(*f.expected.target->quotient);
    if (!f.expected.target->degrees.empty())
      t["degrees"] = detail::int_list_json(f.expected.target->degrees);
    e["target"] = t;
  }
  if (f.expected.discrepancy) e["discrepancy"] = str(*f.expected.discrepancy);
  if (f.expected.gamma) e["gamma"] = detail::int_list_json(*f.expected.gamma);
  if (f.expected.flip) {
    const auto& ff = *f.expected.flip;
    Json fl;
    fl["contracted"] = detail::int_list_json(ff.contracted);
    fl["extracted"] = detail::int_list_json(ff.extracted);
    if (!ff.contracted_equations.empty()) fl["contracted_equations"] = ff.contracted_equations;
    if (!ff.extracted_equations.empty()) fl["extracted_equations"] = ff.extracted_equations;
    if (!ff.contracted_coordinates.empty())
      fl["contracted_coordinates"] = ff.contracted_coordinates;
    if (!ff.extracted_coordinates.empty()) fl["extracted_coordinates"] = ff.extracted_coordinates;
    fl["k_contracted"] = str(ff.k_contracted);
    fl["k_extracted"] = str(ff.k_extracted);
    e["flip"] = fl;
  }
  if (f.expected.gamma_curve) {
    const auto& g = *f.expected.gamma_curve;
    Json vars = Json::array();
    for (const auto& v : g.variables)
      vars.push_back(Json::array({v.name, static_cast<long long>(v.weight)}));
    Json rows = Json::array();
    for (const auto& r : g.matrix) rows.push_back(r);
    e["gamma_curve"] = Json{{"variables", vars}, {"matrix", rows}, {"cone_dim", g.cone_dim}};
  }
  if (f.expected.cover) {
    const auto& c = *f.expected.cover;
    Json rows = Json::array();
    for (const auto& r : c.degrees) rows.push_back(detail::int_list_json(r));
    e["cover"] = Json{{"id", c.id},
                      {"degrees", rows},
                      {"configuration", c.configuration},
                      {"pivot", static_cast<long long>(c.pivot)}};
  }
  j["expected"] = e;
  return j;
}

}  // namespace tworay
