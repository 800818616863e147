#include "polyskel/io.hpp"

#include <fstream>
#include <map>
#include <set>

#include "json.hpp"

namespace polyskel {

namespace {

using nlohmann::ordered_json;

ordered_json load_file(const std::string& path, const char* kind) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError(path + ": expected a JSON object");
  if (!doc.contains("kind") || !doc["kind"].is_string())
    throw ParseError(path + ": missing kind");
  if (doc["kind"].get<std::string>() != kind)
    throw ParseError(path + ": expected kind \"" + kind + "\", found \"" +
                     doc["kind"].get<std::string>() + "\"");
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<long long>() != 1)
    throw ParseError(path + ": unsupported version");
  return doc;
}

void reject_unknown(const ordered_json& obj,
                    const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key))
      throw ParseError(where + ": unknown field \"" + key + "\"");
}

long long get_integer(const ordered_json& obj, const char* key,
                      const std::string& where) {
  if (!obj.contains(key))
    throw ParseError(where + ": missing field \"" + key + "\"");
  if (!obj[key].is_number_integer())
    throw ParseError(where + ": field \"" + key + "\" must be an integer");
  return obj[key].get<long long>();
}

const ordered_json& get_array(const ordered_json& obj, const char* key,
                              const std::string& where) {
  if (!obj.contains(key))
    throw ParseError(where + ": missing field \"" + key + "\"");
  if (!obj[key].is_array())
    throw ParseError(where + ": field \"" + key + "\" must be an array");
  return obj[key];
}

std::vector<long long> integer_vector(const ordered_json& arr,
                                      const std::string& where) {
  std::vector<long long> out;
  for (const auto& v : arr) {
    if (!v.is_number_integer())
      throw ParseError(where + ": expected integers");
    out.push_back(v.get<long long>());
  }
  return out;
}

void write_file(const std::string& path, const ordered_json& doc) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot write file");
  out << doc.dump(2) << "\n";
}

std::uint64_t mask_from_elements(const ordered_json& arr, int n,
                                 const std::string& where) {
  std::uint64_t mask = 0;
  for (const auto& v : arr) {
    if (!v.is_number_integer())
      throw ParseError(where + ": expected element indices");
    long long e = v.get<long long>();
    if (e < 0 || e >= n)
      throw ParseError(where + ": element index out of range");
    if (mask >> e & 1)
      throw ParseError(where + ": repeated element");
    mask |= std::uint64_t{1} << e;
  }
  return mask;
}

}  // namespace

NamedHypergraph load_hypergraph(const std::string& path) {
  ordered_json doc = load_file(path, "hypergraph");
  reject_unknown(doc, {"kind", "version", "n", "edges", "names"}, path);
  long long n = get_integer(doc, "n", path);
  if (n < 0 || n > 1'000'000) throw ParseError(path + ": bad vertex count");

  std::vector<std::string> names;
  std::map<std::string, int> name_index;
  if (doc.contains("names")) {
    const auto& arr = get_array(doc, "names", path);
    if (static_cast<long long>(arr.size()) != n)
      throw ParseError(path + ": names must list every vertex once");
    for (const auto& v : arr) {
      if (!v.is_string()) throw ParseError(path + ": names must be strings");
      std::string name = v.get<std::string>();
      if (!name_index.emplace(name, static_cast<int>(names.size())).second)
        throw ParseError(path + ": duplicate vertex name \"" + name + "\"");
      names.push_back(std::move(name));
    }
  }

  std::vector<std::vector<Vertex>> edges;
  for (const auto& edge : get_array(doc, "edges", path)) {
    if (!edge.is_array())
      throw ParseError(path + ": each edge must be an array");
    std::vector<Vertex> e;
    for (const auto& v : edge) {
      if (v.is_number_integer()) {
        long long idx = v.get<long long>();
        if (idx < 0 || idx >= n)
          throw ParseError(path + ": edge vertex out of range");
        e.push_back(static_cast<Vertex>(idx));
      } else if (v.is_string()) {
        auto it = name_index.find(v.get<std::string>());
        if (it == name_index.end())
          throw ParseError(path + ": unknown vertex name \"" +
                           v.get<std::string>() + "\"");
        e.push_back(it->second);
      } else {
        throw ParseError(path + ": edge entries must be indices or names");
      }
    }
    edges.push_back(std::move(e));
  }
  try {
    return NamedHypergraph{Hypergraph(static_cast<int>(n), std::move(edges)),
                           std::move(names)};
  } catch (const ValidationError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_hypergraph(const std::string& path, const Hypergraph& h,
                     const std::vector<std::string>& names) {
  ordered_json doc;
  doc["kind"] = "hypergraph";
  doc["version"] = 1;
  doc["n"] = h.vertex_count();
  if (!names.empty()) {
    if (static_cast<int>(names.size()) != h.vertex_count())
      throw ValidationError("save: names must list every vertex once");
    doc["names"] = names;
  }
  doc["edges"] = h.edges();
  write_file(path, doc);
}

Orientation load_orientation(const std::string& path) {
  ordered_json doc = load_file(path, "orientation");
  reject_unknown(doc, {"kind", "version", "heads"}, path);
  Orientation o;
  for (long long v : integer_vector(get_array(doc, "heads", path), path)) {
    if (v < 0 || v > 1'000'000)
      throw ParseError(path + ": head out of range");
    o.heads.push_back(static_cast<Vertex>(v));
  }
  return o;
}

void save_orientation(const std::string& path, const Orientation& o) {
  ordered_json doc;
  doc["kind"] = "orientation";
  doc["version"] = 1;
  doc["heads"] = o.heads;
  write_file(path, doc);
}

Graph load_graph(const std::string& path) {
  ordered_json doc = load_file(path, "graph");
  reject_unknown(doc, {"kind", "version", "n", "edges"}, path);
  long long n = get_integer(doc, "n", path);
  if (n < 0 || n > 1'000'000) throw ParseError(path + ": bad vertex count");
  std::vector<std::pair<int, int>> edges;
  for (const auto& edge : get_array(doc, "edges", path)) {
    if (!edge.is_array() || edge.size() != 2 ||
        !edge[0].is_number_integer() || !edge[1].is_number_integer())
      throw ParseError(path + ": each edge must be a pair of vertices");
    edges.emplace_back(edge[0].get<int>(), edge[1].get<int>());
  }
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const ValidationError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_graph(const std::string& path, const Graph& g) {
  ordered_json doc;
  doc["kind"] = "graph";
  doc["version"] = 1;
  doc["n"] = g.vertex_count();
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  write_file(path, doc);
}

BoxInstance load_box(const std::string& path) {
  ordered_json doc = load_file(path, "box");
  reject_unknown(doc, {"kind", "version", "a", "b"}, path);
  auto a = integer_vector(get_array(doc, "a", path), path);
  auto b = integer_vector(get_array(doc, "b", path), path);
  try {
    return BoxInstance(std::move(a), std::move(b));
  } catch (const ValidationError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_box(const std::string& path, const BoxInstance& inst) {
  ordered_json doc;
  doc["kind"] = "box";
  doc["version"] = 1;
  doc["a"] = inst.start();
  doc["b"] = inst.goal();
  write_file(path, doc);
}

PcfctInstance load_pcfct(const std::string& path) {
  ordered_json doc = load_file(path, "pcfct");
  reject_unknown(doc, {"kind", "version", "supplies", "demands"}, path);
  auto supplies = integer_vector(get_array(doc, "supplies", path), path);
  auto demands = integer_vector(get_array(doc, "demands", path), path);
  try {
    return PcfctInstance(std::move(supplies), std::move(demands));
  } catch (const ValidationError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_pcfct(const std::string& path, const PcfctInstance& p) {
  ordered_json doc;
  doc["kind"] = "pcfct";
  doc["version"] = 1;
  doc["supplies"] = p.supplies();
  doc["demands"] = p.demands();
  write_file(path, doc);
}

MatroidTest load_matroid_test(const std::string& path) {
  ordered_json doc = load_file(path, "matroid-test");
  reject_unknown(doc, {"kind", "version", "oracle", "base_a", "base_b"}, path);
  if (!doc.contains("oracle") || !doc["oracle"].is_object())
    throw ParseError(path + ": missing oracle object");
  const auto& node = doc["oracle"];
  if (!node.contains("type") || !node["type"].is_string())
    throw ParseError(path + ": oracle needs a type");
  std::string type = node["type"].get<std::string>();

  MatroidTest test;
  if (type == "uniform") {
    reject_unknown(node, {"type", "n", "k"}, path + ": oracle");
    long long n = get_integer(node, "n", path);
    long long k = get_integer(node, "k", path);
    if (n < 0 || n > 63 || k < 0 || k > n)
      throw ParseError(path + ": bad uniform matroid parameters");
    test.oracle = uniform_matroid(static_cast<int>(n), static_cast<int>(k));
  } else if (type == "graphic") {
    reject_unknown(node, {"type", "graph"}, path + ": oracle");
    if (!node.contains("graph") || !node["graph"].is_object())
      throw ParseError(path + ": graphic oracle needs a graph");
    const auto& gnode = node["graph"];
    reject_unknown(gnode, {"n", "edges"}, path + ": oracle graph");
    long long n = get_integer(gnode, "n", path);
    if (n < 0 || n > 1000) throw ParseError(path + ": bad vertex count");
    std::vector<std::pair<int, int>> edges;
    for (const auto& edge : get_array(gnode, "edges", path)) {
      if (!edge.is_array() || edge.size() != 2 ||
          !edge[0].is_number_integer() || !edge[1].is_number_integer())
        throw ParseError(path + ": each edge must be a pair of vertices");
      edges.emplace_back(edge[0].get<int>(), edge[1].get<int>());
    }
    try {
      test.oracle = graphic_matroid(Graph(static_cast<int>(n), std::move(edges)));
    } catch (const ValidationError& e) {
      throw ParseError(path + ": " + e.what());
    }
  } else if (type == "table") {
    reject_unknown(node, {"type", "n", "values"}, path + ": oracle");
    long long n = get_integer(node, "n", path);
    if (n < 0 || n > 24) throw ParseError(path + ": table oracle needs n <= 24");
    auto values = integer_vector(get_array(node, "values", path), path);
    if (values.size() != (std::size_t{1} << n))
      throw ParseError(path + ": table oracle needs one value per subset");
    test.oracle.n = static_cast<int>(n);
    test.oracle.label = "table";
    test.oracle.f = [values = std::move(values)](std::uint64_t mask) {
      return values[mask];
    };
  } else {
    throw ParseError(path + ": unknown oracle type \"" + type + "\"");
  }

  test.base_a = mask_from_elements(get_array(doc, "base_a", path),
                                   test.oracle.n, path);
  test.base_b = mask_from_elements(get_array(doc, "base_b", path),
                                   test.oracle.n, path);
  return test;
}

}  // namespace polyskel
