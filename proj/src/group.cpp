#include "horobound/group.hpp"

#include <algorithm>
#include <unordered_set>

#include "horobound/errors.hpp"
#include "horobound/metric.hpp"

namespace horobound {

std::size_t GroupModel::add_involution(const std::string& symbol) {
  generators_.push_back({symbol, symbol, true});
  inverse_index_.push_back(generators_.size() - 1);
  return generators_.size() - 1;
}

std::pair<std::size_t, std::size_t> GroupModel::add_generator_pair(const std::string& symbol,
                                                                   const std::string& inverse) {
  std::size_t s = generators_.size();
  generators_.push_back({symbol, inverse, false});
  generators_.push_back({inverse, symbol, false});
  inverse_index_.push_back(s + 1);
  inverse_index_.push_back(s);
  return {s, s + 1};
}

VertexRef GroupModel::evaluate(const Word& word) const {
  VertexRef g = identity();
  for (auto gen : word) g = act(g, gen);
  return g;
}

Word GroupModel::parse_word(std::string_view text) const {
  std::string cleaned;
  for (char ch : text) {
    if (ch != ' ' && ch != '.' && ch != '\t') cleaned.push_back(ch);
  }
  auto is_symbol = [&](std::string_view s) {
    return std::any_of(generators_.begin(), generators_.end(), [&](const auto& g) { return g.symbol == s; });
  };
  if (cleaned.empty() || ((cleaned == "e" || cleaned == "1") && !is_symbol(cleaned))) return {};

  Word out;
  std::size_t pos = 0;
  while (pos < cleaned.size()) {
    std::size_t best = generators_.size();
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const auto& sym = generators_[i].symbol;
      if (sym.size() > best_len && cleaned.compare(pos, sym.size(), sym) == 0) {
        best = i;
        best_len = sym.size();
      }
    }
    if (best == generators_.size()) {
      throw InvalidInput("unknown generator at '" + cleaned.substr(pos) + "' for " + name());
    }
    out.push_back(best);
    pos += best_len;
  }
  return out;
}

std::string GroupModel::format_word(const Word& word) const {
  if (word.empty()) return "e";
  std::string out;
  for (auto gen : word) out += generators_.at(gen).symbol;
  return out;
}

VertexRef GroupModel::parse_element(std::string_view text) const {
  if (auto v = parse_coordinates(text)) return *v;
  return evaluate(parse_word(text));
}

CayleyOracle::CayleyOracle(std::shared_ptr<const GroupModel> model) : model_(std::move(model)) {
  if (!model_) throw InvalidInput("null group model");
}

std::vector<VertexRef> CayleyOracle::neighbors(const VertexRef& v) const {
  std::vector<VertexRef> out;
  const auto& gens = model_->generators();
  out.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto u = model_->act(v, i);
    if (u == v) continue;
    if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(std::move(u));
  }
  return out;
}

std::shared_ptr<CayleyOracle> cayley_oracle(std::shared_ptr<const GroupModel> model) {
  return std::make_shared<CayleyOracle>(std::move(model));
}

std::vector<BallEntry> ball(const GroupModel& model, int radius, const Limits& limits) {
  if (!model.metric_trusted()) {
    throw VerificationFailure("ball enumeration refused for " + model.name() + ": " + model.trust_diagnostic());
  }
  // Non-owning view; the oracle does not outlive this call.
  CayleyOracle oracle(std::shared_ptr<const GroupModel>(&model, [](const GroupModel*) {}));
  auto field = bfs(oracle, model.identity(), radius, limits);
  std::vector<BallEntry> out;
  out.reserve(field.size());
  for (const auto& v : field.order) out.push_back({v, field.dist.at(v.key)});
  std::sort(out.begin(), out.end(), [](const BallEntry& x, const BallEntry& y) { return x.element.key < y.element.key; });
  return out;
}

std::vector<std::size_t> sphere_sizes(const NeighborOracle& oracle, const VertexRef& center, int radius,
                                      const Limits& limits) {
  auto field = bfs(oracle, center, radius, limits);
  std::vector<std::size_t> sizes(static_cast<std::size_t>(radius) + 1, 0);
  for (const auto& [key, d] : field.dist) ++sizes[static_cast<std::size_t>(d)];
  return sizes;
}

}  // namespace horobound
