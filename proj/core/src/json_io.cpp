// Copyright 2026 The rcap Authors
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

#include "rcap/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "rcap/errors.hpp"

namespace rcap::io {
namespace {

using Json = nlohmann::ordered_json;

Json parse(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw MalformedInputError(fmt::format("{}: {}", what, e.what()));
  }
}

const Json& field(const Json& j, const char* key, std::string_view where) {
  if (!j.is_object() || !j.contains(key)) {
    throw MalformedInputError(fmt::format("{}: missing field '{}'", where, key));
  }
  return j.at(key);
}

template <typename T>
T as(const Json& j, std::string_view where) {
  try {
    return j.get<T>();
  } catch (const Json::exception&) {
    throw MalformedInputError(fmt::format("{}: unexpected value {}", where, j.dump()));
  }
}

const Json& array_field(const Json& j, const char* key, std::string_view where) {
  const Json& a = field(j, key, where);
  if (!a.is_array()) throw MalformedInputError(fmt::format("{}.{} must be an array", where, key));
  return a;
}

int index_of(const Json& v, int bound, std::string_view where) {
  const int one_based = as<int>(v, where);
  if (one_based < 1 || one_based > bound) {
    throw MalformedInputError(fmt::format("{}: index {} outside 1..{}", where, one_based, bound));
  }
  return one_based - 1;
}

Json point_feature(const GeoPoint& p, Json properties) {
  return Json{{"type", "Feature"},
              {"geometry", {{"type", "Point"}, {"coordinates", {p.lon, p.lat}}}},
              {"properties", std::move(properties)}};
}

std::vector<GeoPoint> ring_from(const Json& coords, std::string_view where) {
  std::vector<GeoPoint> ring;
  for (const Json& c : coords) {
    if (!c.is_array() || c.size() < 2) throw MalformedInputError(fmt::format("{}: bad position", where));
    ring.push_back({as<double>(c[1], where), as<double>(c[0], where)});
  }
  if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
  return ring;
}

geo::Polygon polygon_from(const Json& coords, std::string_view where) {
  if (!coords.is_array() || coords.empty()) throw MalformedInputError(fmt::format("{}: empty polygon", where));
  geo::Polygon p;
  p.outer = ring_from(coords[0], where);
  for (std::size_t h = 1; h < coords.size(); ++h) p.holes.push_back(ring_from(coords[h], where));
  return p;
}

void collect_polygons(const Json& g, std::vector<geo::Polygon>& out) {
  const std::string type = as<std::string>(field(g, "type", "geojson"), "geojson.type");
  if (type == "FeatureCollection") {
    for (const Json& f : array_field(g, "features", "geojson")) collect_polygons(f, out);
  } else if (type == "Feature") {
    collect_polygons(field(g, "geometry", "geojson.feature"), out);
  } else if (type == "Polygon") {
    out.push_back(polygon_from(field(g, "coordinates", "geojson.polygon"), "geojson.polygon"));
  } else if (type == "MultiPolygon") {
    for (const Json& p : array_field(g, "coordinates", "geojson.multipolygon")) {
      out.push_back(polygon_from(p, "geojson.multipolygon"));
    }
  } else {
    throw MalformedInputError(fmt::format("geojson: unsupported geometry '{}'", type));
  }
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInputError(fmt::format("cannot open {}", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(fmt::format("cannot write {}", path));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(fmt::format("failed writing {}", path));
}

std::string instance_to_json(const Instance& inst) {
  Json j;
  j["schema"] = kSchema;
  Json vessels = Json::array();
  for (const VesselType& v : inst.vessels) {
    vessels.push_back({{"name", v.name},
                       {"speed_kn", v.speed_kn},
                       {"draught_m", v.draught_m},
                       {"count", v.count},
                       {"range_nm", v.range_nm},
                       {"equipment", v.equipment}});
  }
  j["vessels"] = std::move(vessels);
  Json stations = Json::array();
  for (const Station& s : inst.stations) {
    stations.push_back({{"name", s.name},
                        {"lat", s.position.lat},
                        {"lon", s.position.lon},
                        {"base_depth_m", s.base_depth_m}});
  }
  j["stations"] = std::move(stations);
  Json zones = Json::array();
  for (const Zone& z : inst.zones) {
    zones.push_back({{"lat", z.position.lat}, {"lon", z.position.lon}, {"frequencies", z.frequencies}});
  }
  j["zones"] = std::move(zones);
  Json incidents = Json::array();
  for (const IncidentType& k : inst.incident_types) {
    incidents.push_back(
        {{"name", k.name}, {"severity", k.severity}, {"required_equipment", k.required_equipment}});
  }
  j["incident_types"] = std::move(incidents);

  const auto& rel = inst.relations;
  Json c = Json::array(), b = Json::array(), s = Json::array();
  for (int i = 0; i < rel.vessels(); ++i) {
    for (int jj = 0; jj < rel.stations(); ++jj) {
      if (rel.placeable(i, jj)) c.push_back({i + 1, jj + 1});
    }
    for (int k = 0; k < rel.incident_types(); ++k) {
      if (rel.equipped(i, k)) b.push_back({i + 1, k + 1});
    }
    for (int jj = 0; jj < rel.stations(); ++jj) {
      for (int r = 0; r < rel.zones(); ++r) {
        if (rel.reaches(i, jj, r)) s.push_back({i + 1, jj + 1, r + 1});
      }
    }
  }
  j["compat"] = {{"C", std::move(c)}, {"B", std::move(b)}, {"S", std::move(s)}};

  Json distances = Json::array();
  for (std::size_t row = 0; row < inst.distances.rows(); ++row) {
    Json line = Json::array();
    for (std::size_t col = 0; col < inst.distances.cols(); ++col) line.push_back(inst.distances(row, col));
    distances.push_back(std::move(line));
  }
  j["distances"] = std::move(distances);

  Json tidal = Json::array();
  for (const TidalState& st : inst.tidal.states) {
    Json pattern = Json::array();
    for (const auto& [sj, si] : st.pattern.pairs()) pattern.push_back({sj + 1, si + 1});
    tidal.push_back({{"pattern", std::move(pattern)}, {"p", st.probability}, {"count", st.occurrences}});
  }
  j["tidal"] = std::move(tidal);
  j["tidal_samples"] = inst.tidal.total_samples;
  return j.dump() + "\n";
}

Instance instance_from_json(std::string_view text) {
  const Json j = parse(text, "instance");
  const std::string schema = as<std::string>(field(j, "schema", "instance"), "instance.schema");
  if (schema != kSchema) {
    throw MalformedInputError(fmt::format("instance.schema: expected '{}', got '{}'", kSchema, schema));
  }
  Instance inst;
  for (const Json& v : array_field(j, "vessels", "instance")) {
    const std::string where = fmt::format("vessels[{}]", inst.vessels.size() + 1);
    inst.vessels.push_back({as<std::string>(field(v, "name", where), where),
                            as<double>(field(v, "speed_kn", where), where),
                            as<double>(field(v, "draught_m", where), where),
                            as<int>(field(v, "count", where), where),
                            as<double>(field(v, "range_nm", where), where),
                            v.contains("equipment") ? as<std::vector<std::string>>(v["equipment"], where)
                                                    : std::vector<std::string>{}});
  }
  for (const Json& s : array_field(j, "stations", "instance")) {
    const std::string where = fmt::format("stations[{}]", inst.stations.size() + 1);
    inst.stations.push_back({s.contains("name") ? as<std::string>(s["name"], where) : std::string{},
                             {as<double>(field(s, "lat", where), where), as<double>(field(s, "lon", where), where)},
                             as<double>(field(s, "base_depth_m", where), where)});
  }
  for (const Json& z : array_field(j, "zones", "instance")) {
    const std::string where = fmt::format("zones[{}]", inst.zones.size() + 1);
    inst.zones.push_back({{as<double>(field(z, "lat", where), where), as<double>(field(z, "lon", where), where)},
                          as<std::vector<double>>(field(z, "frequencies", where), where)});
  }
  for (const Json& k : array_field(j, "incident_types", "instance")) {
    const std::string where = fmt::format("incident_types[{}]", inst.incident_types.size() + 1);
    inst.incident_types.push_back(
        {k.contains("name") ? as<std::string>(k["name"], where) : std::string{},
         as<double>(field(k, "severity", where), where),
         k.contains("required_equipment") ? as<std::vector<std::string>>(k["required_equipment"], where)
                                          : std::vector<std::string>{}});
  }
  const int n = inst.num_vessels();
  const int m = inst.num_stations();
  const int f = inst.num_incident_types();
  const int z = inst.num_zones();

  inst.relations = CompatibilityRelations(n, m, f, z);
  const Json& compat = field(j, "compat", "instance");
  for (const Json& t : array_field(compat, "C", "compat")) {
    if (!t.is_array() || t.size() != 2) throw MalformedInputError("compat.C entries must be [i, j]");
    inst.relations.set_placeable(index_of(t[0], n, "compat.C vessel"), index_of(t[1], m, "compat.C station"));
  }
  for (const Json& t : array_field(compat, "B", "compat")) {
    if (!t.is_array() || t.size() != 2) throw MalformedInputError("compat.B entries must be [i, k]");
    inst.relations.set_equipped(index_of(t[0], n, "compat.B vessel"), index_of(t[1], f, "compat.B incident"));
  }
  for (const Json& t : array_field(compat, "S", "compat")) {
    if (!t.is_array() || t.size() != 3) throw MalformedInputError("compat.S entries must be [i, j, r]");
    inst.relations.set_reaches(index_of(t[0], n, "compat.S vessel"), index_of(t[1], m, "compat.S station"),
                               index_of(t[2], z, "compat.S zone"));
  }

  const Json& distances = array_field(j, "distances", "instance");
  if (static_cast<int>(distances.size()) != m) {
    throw MalformedInputError(fmt::format("distances: {} rows for {} stations", distances.size(), m));
  }
  inst.distances = Matrix<double>(static_cast<std::size_t>(m), static_cast<std::size_t>(z));
  for (int row = 0; row < m; ++row) {
    const Json& line = distances[static_cast<std::size_t>(row)];
    if (!line.is_array() || static_cast<int>(line.size()) != z) {
      throw MalformedInputError(fmt::format("distances[{}]: expected {} entries", row + 1, z));
    }
    for (int col = 0; col < z; ++col) {
      inst.distances(row, col) = as<double>(line[static_cast<std::size_t>(col)], "distances");
    }
  }

  for (const Json& st : array_field(j, "tidal", "instance")) {
    const std::string where = fmt::format("tidal[{}]", inst.tidal.states.size() + 1);
    TidalState state{TidalPattern(m, n), as<double>(field(st, "p", where), where), 0};
    for (const Json& pair : array_field(st, "pattern", where)) {
      if (!pair.is_array() || pair.size() != 2) {
        throw MalformedInputError(fmt::format("{}.pattern entries must be [j, i]", where));
      }
      state.pattern.set(index_of(pair[0], m, where), index_of(pair[1], n, where));
    }
    if (st.contains("count")) state.occurrences = as<std::uint64_t>(st["count"], where);
    inst.tidal.states.push_back(std::move(state));
  }
  if (j.contains("tidal_samples")) inst.tidal.total_samples = as<std::uint64_t>(j["tidal_samples"], "tidal_samples");
  return inst;
}

Instance read_instance(const std::string& path) { return instance_from_json(read_text_file(path)); }

void write_instance(const std::string& path, const Instance& instance) {
  write_text_file(path, instance_to_json(instance));
}

std::string allocation_to_json(const Allocation& alloc, const Instance& instance) {
  Json list = Json::array();
  for (const auto& [j, i] : alloc.assignments()) {
    Json entry{{"station", j + 1}, {"vessel", i + 1}};
    if (j < instance.num_stations()) entry["station_name"] = instance.stations[j].name;
    if (i < instance.num_vessels()) entry["vessel_name"] = instance.vessels[i].name;
    list.push_back(std::move(entry));
  }
  Json out{{"schema", kSchema}, {"stations", alloc.stations()}, {"allocation", std::move(list)}};
  return out.dump(2) + "\n";
}

Allocation allocation_from_json(std::string_view text, int stations) {
  const Json j = parse(text, "allocation");
  const Json* list = &j;
  if (j.is_object()) {
    if (j.contains("stations") && as<int>(j["stations"], "allocation.stations") != stations) {
      throw MalformedInputError(fmt::format("allocation.stations: file has {}, instance has {}",
                                            as<int>(j["stations"], "allocation.stations"), stations));
    }
    list = &array_field(j, "allocation", "allocation");
  }
  Allocation alloc(stations);
  for (const Json& e : *list) {
    const int j_idx = index_of(field(e, "station", "allocation"), stations, "allocation.station");
    const int i_idx = as<int>(field(e, "vessel", "allocation"), "allocation.vessel") - 1;
    if (i_idx < 0) throw MalformedInputError("allocation.vessel must be >= 1");
    if (alloc.is_assigned(j_idx)) {
      throw MalformedInputError(fmt::format("allocation: station {} assigned twice", j_idx + 1));
    }
    alloc.assign(j_idx, i_idx);
  }
  return alloc;
}

X3cInstance x3c_from_json(std::string_view text) {
  const Json j = parse(text, "x3c");
  X3cInstance x;
  x.universe = as<int>(field(j, "X", "x3c"), "x3c.X");
  for (const Json& t : array_field(j, "D", "x3c")) {
    if (!t.is_array() || t.size() != 3) throw MalformedInputError("x3c.D entries must have 3 elements");
    x.triples.push_back({as<int>(t[0], "x3c.D") - 1, as<int>(t[1], "x3c.D") - 1, as<int>(t[2], "x3c.D") - 1});
  }
  validate_x3c(x);
  return x;
}

std::string x3c_to_json(const X3cInstance& x3c) {
  Json d = Json::array();
  for (const auto& t : x3c.triples) d.push_back({t[0] + 1, t[1] + 1, t[2] + 1});
  return Json{{"X", x3c.universe}, {"D", std::move(d)}}.dump() + "\n";
}

std::string report_to_json(const SolveReport& report, const Instance& instance,
                           const ReportExtras& extras) {
  Json j;
  j["schema"] = kSchema;
  j["variant"] = std::string(to_string(report.variant));
  if (extras.zones) j["zones"] = *extras.zones;
  if (extras.seed) j["seed"] = *extras.seed;
  j["status"] = std::string(to_string(report.status));
  j["objective"] = report.objective ? Json(*report.objective) : Json(nullptr);
  j["lower_bound"] = std::isfinite(report.lower_bound) ? Json(report.lower_bound) : Json(nullptr);
  j["nodes"] = report.nodes;
  if (extras.timings) j["wall_seconds"] = report.wall_seconds;
  j["node_limit_hit"] = report.node_limit_hit;
  j["time_limit_hit"] = report.time_limit_hit;
  if (extras.build_seconds && extras.timings) j["build_seconds"] = *extras.build_seconds;
  Json alloc = Json::array();
  for (const auto& [s, v] : report.allocation.assignments()) alloc.push_back({{"station", s + 1}, {"vessel", v + 1}});
  j["allocation"] = std::move(alloc);
  Json unc = Json::array();
  for (const Triple& t : report.uncoverable) unc.push_back({t.incident + 1, t.zone + 1, t.scenario + 1});
  j["uncoverable"] = std::move(unc);
  if (extras.model_size) {
    const ModelSize& s = *extras.model_size;
    j["model_size"] = {{"x", s.x},
                       {"y", s.y},
                       {"cover_rows", s.cover_rows},
                       {"link_rows", s.link_rows},
                       {"fleet_rows", s.fleet_rows},
                       {"station_rows", s.station_rows}};
  }
  if (extras.full_resolution) {
    const Evaluation& e = *extras.full_resolution;
    Json per = Json::object();
    for (std::size_t k = 0; k < e.per_incident.size() && k < instance.incident_types.size(); ++k) {
      per[instance.incident_types[k].name.empty() ? fmt::format("{}", k + 1) : instance.incident_types[k].name] =
          e.per_incident[k];
    }
    j["full_resolution"] = {{"objective", e.objective ? Json(*e.objective) : Json(nullptr)},
                            {"covered_objective", e.covered_objective},
                            {"uncovered", e.uncovered.size()},
                            {"uncoverable", e.uncoverable},
                            {"per_incident", std::move(per)}};
  }
  return j.dump(2) + "\n";
}

geo::Region region_from_geojson(std::string_view text) {
  const Json j = parse(text, "geojson");
  std::vector<geo::Polygon> polygons;
  collect_polygons(j, polygons);
  return geo::Region(std::move(polygons));
}

std::string allocation_geojson(const Instance& instance, const Allocation& alloc,
                               const std::vector<GeoPoint>& centroids) {
  Json features = Json::array();
  for (int j = 0; j < instance.num_stations(); ++j) {
    Json props{{"kind", "station"}, {"station", j + 1}, {"name", instance.stations[j].name}};
    if (j < alloc.stations()) {
      if (auto v = alloc.vessel_at(j)) {
        props["vessel"] = *v + 1;
        props["vessel_name"] = instance.vessels.at(static_cast<std::size_t>(*v)).name;
      }
    }
    features.push_back(point_feature(instance.stations[j].position, std::move(props)));
  }
  for (int r = 0; r < instance.num_zones(); ++r) {
    features.push_back(point_feature(instance.zones[r].position, {{"kind", "zone"}, {"zone", r + 1}}));
  }
  for (std::size_t c = 0; c < centroids.size(); ++c) {
    features.push_back(point_feature(centroids[c], {{"kind", "centroid"}, {"cluster", c + 1}}));
  }
  return Json{{"type", "FeatureCollection"}, {"features", std::move(features)}}.dump() + "\n";
}

std::string clustering_geojson(const geo::ClusteringResult& clustering) {
  Json features = Json::array();
  for (std::size_t c = 0; c < clustering.cluster_zones.size(); ++c) {
    const Zone& z = clustering.cluster_zones[c];
    features.push_back(point_feature(z.position, {{"kind", "cluster"},
                                                  {"cluster", c + 1},
                                                  {"size", clustering.sizes.at(c)},
                                                  {"frequencies", z.frequencies}}));
  }
  Json membership = Json::array();
  for (int c : clustering.membership) membership.push_back(c + 1);
  return Json{{"type", "FeatureCollection"}, {"features", std::move(features)}, {"membership", std::move(membership)}}
             .dump() +
         "\n";
}

std::string distance_csv(const Matrix<double>& distances) {
  std::string out = "station";
  for (std::size_t r = 0; r < distances.cols(); ++r) out += fmt::format(",{}", r + 1);
  out += "\n";
  for (std::size_t j = 0; j < distances.rows(); ++j) {
    out += fmt::format("{}", j + 1);
    for (std::size_t r = 0; r < distances.cols(); ++r) out += fmt::format(",{:.17g}", distances(j, r));
    out += "\n";
  }
  return out;
}

}  // namespace rcap::io
