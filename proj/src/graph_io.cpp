#include "fgc/graph_io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fgc {

using nlohmann::json;

FatGraph parse_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("graph parse error: ") + e.what());
  }
  if (!doc.contains("vertices") || !doc.contains("pairing"))
    throw std::runtime_error("graph parse error: need 'vertices' and 'pairing' fields");
  std::map<int, std::vector<int>> stars;
  for (const auto& v : doc.at("vertices")) {
    int id = v.at("id").get<int>();
    if (stars.count(id)) throw std::runtime_error("graph parse error: duplicate vertex id");
    stars[id] = v.at("star").get<std::vector<int>>();
  }
  std::map<int, int> pairing;
  for (const auto& p : doc.at("pairing")) {
    auto pair = p.get<std::vector<int>>();
    if (pair.size() != 2) throw std::runtime_error("graph parse error: pairing entries need 2 half-edges");
    if (pairing.count(pair[0]) || pairing.count(pair[1]))
      throw std::runtime_error("graph parse error: half-edge paired twice");
    pairing[pair[0]] = pair[1];
    pairing[pair[1]] = pair[0];
  }
  FatGraph g(std::move(stars), std::move(pairing));
  auto violations = validate(g);
  if (!violations.empty()) {
    std::string msg = "graph validation failed:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw std::runtime_error(msg);
  }
  return g;
}

FatGraph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string graph_to_json(const FatGraph& g) {
  json doc;
  doc["vertices"] = json::array();
  for (const auto& [id, star] : g.stars()) doc["vertices"].push_back({{"id", id}, {"star", star}});
  doc["pairing"] = json::array();
  for (auto [h, hbar] : g.edges()) doc["pairing"].push_back({h, hbar});
  return doc.dump(2);
}

}  // namespace fgc
