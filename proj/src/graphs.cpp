#include "horobound/graphs.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>

#include "horobound/errors.hpp"

namespace horobound {

namespace {

// Parses "(a,b,...)" into integers.
std::vector<std::int32_t> parse_tuple(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s.push_back(ch);
  }
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw InvalidInput("expected a coordinate tuple like (1,0), got '" + std::string(text) + "'");
  }
  std::vector<std::int32_t> out;
  std::string_view body(s.data() + 1, s.size() - 2);
  while (true) {
    auto comma = body.find(',');
    auto part = body.substr(0, comma);
    std::int32_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw InvalidInput("bad integer '" + std::string(part) + "' in tuple");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::vector<std::int32_t> parse_int_tuple(std::string_view text) { return parse_tuple(text); }

VertexRef LadderGraph::vertex(std::int32_t column, std::int32_t row) {
  std::string key;
  keycodec::put_i32(key, column);
  keycodec::put_i32(key, row);
  return VertexRef(std::move(key), "(" + std::to_string(column) + "," + std::to_string(row) + ")");
}

std::pair<std::int32_t, std::int32_t> LadderGraph::coordinates(const VertexRef& v) {
  std::size_t pos = 0;
  auto column = keycodec::get_i32(v.key, pos);
  auto row = keycodec::get_i32(v.key, pos);
  return {column, row};
}

std::vector<VertexRef> LadderGraph::neighbors(const VertexRef& v) const {
  auto [k, j] = coordinates(v);
  std::vector<VertexRef> out;
  if (j == 0) {
    if (row0_edges_ && k > 1) out.push_back(vertex(k - 1, 0));
    out.push_back(vertex(k, -1));
    out.push_back(vertex(k, 1));
    if (row0_edges_) out.push_back(vertex(k + 1, 0));
  } else {
    if (k > 1) out.push_back(vertex(k - 1, j));
    out.push_back(vertex(k, 0));
    out.push_back(vertex(k + 1, j));
  }
  return out;
}

VertexRef LadderGraph::parse_vertex(std::string_view text) const {
  auto coords = parse_tuple(text);
  if (coords.size() != 2 || coords[0] < 1 || coords[1] < -1 || coords[1] > 1) {
    throw InvalidInput("vertex of " + descriptor() + " must be (k,j) with k >= 1 and j in {-1,0,1}");
  }
  return vertex(coords[0], coords[1]);
}

VertexRef LadderGraph::from_key(std::string_view key) const {
  if (key.size() != 8) throw InvalidInput("malformed ladder key");
  VertexRef probe{std::string(key)};
  auto [k, j] = coordinates(probe);
  return vertex(k, j);
}

FiniteGraph FiniteGraph::from_json(const nlohmann::json& doc, std::string descriptor) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
    throw InvalidInput("finite graph JSON needs \"vertices\" and \"edges\"");
  }
  FiniteGraph g;
  g.descriptor_ = std::move(descriptor);
  for (const auto& label : doc.at("vertices")) {
    if (!label.is_string()) throw InvalidInput("vertex labels must be strings");
    auto s = label.get<std::string>();
    if (!g.index_of_.emplace(s, g.labels_.size()).second) throw InvalidInput("duplicate vertex label '" + s + "'");
    g.labels_.push_back(std::move(s));
  }
  g.adjacency_.assign(g.labels_.size(), {});
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& edge : doc.at("edges")) {
    if (!edge.is_array() || edge.size() != 2 || !edge[0].is_number_unsigned() || !edge[1].is_number_unsigned()) {
      throw InvalidInput("edges must be pairs of vertex indices");
    }
    auto i = edge[0].get<std::size_t>();
    auto j = edge[1].get<std::size_t>();
    if (i >= g.labels_.size() || j >= g.labels_.size()) throw InvalidInput("edge index out of range");
    if (i == j) throw InvalidInput("self-loop at vertex '" + g.labels_[i] + "'");
    if (!seen.emplace(std::min(i, j), std::max(i, j)).second) {
      throw InvalidInput("duplicate edge between '" + g.labels_[i] + "' and '" + g.labels_[j] + "'");
    }
    g.adjacency_[i].push_back(j);
    g.adjacency_[j].push_back(i);
  }
  for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
  return g;
}

FiniteGraph FiniteGraph::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("graph file " + path + ": " + e.what());
  }
  return from_json(doc, "finite_graph:" + path);
}

VertexRef FiniteGraph::vertex(std::size_t index) const {
  std::string key;
  keycodec::put_i32(key, static_cast<std::int32_t>(index));
  return VertexRef(std::move(key), labels_.at(index));
}

std::vector<VertexRef> FiniteGraph::neighbors(const VertexRef& v) const {
  std::size_t pos = 0;
  auto index = static_cast<std::size_t>(keycodec::get_i32(v.key, pos));
  std::vector<VertexRef> out;
  for (auto j : adjacency_.at(index)) out.push_back(vertex(j));
  return out;
}

VertexRef FiniteGraph::parse_vertex(std::string_view text) const {
  auto it = index_of_.find(std::string(text));
  if (it == index_of_.end()) throw InvalidInput("unknown vertex label '" + std::string(text) + "'");
  return vertex(it->second);
}

VertexRef FiniteGraph::from_key(std::string_view key) const {
  std::size_t pos = 0;
  auto index = keycodec::get_i32(key, pos);
  if (index < 0 || static_cast<std::size_t>(index) >= labels_.size() || pos != key.size()) {
    throw InvalidInput("key does not name a vertex of " + descriptor_);
  }
  return vertex(static_cast<std::size_t>(index));
}

}  // namespace horobound
