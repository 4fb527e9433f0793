#include "horobound/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>

#include "horobound/errors.hpp"

namespace horobound {

LetterWord Alphabet::parse(std::string_view text) const {
  LetterWord out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '.') {
      ++pos;
      continue;
    }
    std::size_t best = size();
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < size(); ++i) {
      const auto& s = symbols[i];
      if (s.size() > best_len && text.compare(pos, s.size(), s) == 0) {
        best = i;
        best_len = s.size();
      }
    }
    if (best == size()) throw InvalidInput("unknown letter at '" + std::string(text.substr(pos)) + "'");
    out.push_back(static_cast<char>(best));
    pos += best_len;
  }
  return out;
}

std::string Alphabet::format(const LetterWord& w) const {
  if (w.empty()) return "e";
  std::string out;
  for (char ch : w) out += symbols.at(static_cast<unsigned char>(ch));
  return out;
}

LetterWord Alphabet::invert(const LetterWord& w) const {
  LetterWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(static_cast<char>(inverse.at(static_cast<unsigned char>(*it))));
  }
  return out;
}

Alphabet Presentation::alphabet() const {
  Alphabet a;
  std::set<std::string> used;
  for (const auto& g : generators) {
    if (g.symbol.empty()) throw InvalidInput("empty generator symbol");
    if (!used.insert(g.symbol).second) throw InvalidInput("duplicate generator symbol '" + g.symbol + "'");
    std::size_t s = a.symbols.size();
    a.symbols.push_back(g.symbol);
    if (g.is_involution) {
      a.inverse.push_back(s);
    } else {
      if (g.inverse_symbol.empty() || g.inverse_symbol == g.symbol) {
        throw InvalidInput("generator '" + g.symbol + "' needs a distinct inverse symbol");
      }
      if (!used.insert(g.inverse_symbol).second) {
        throw InvalidInput("duplicate generator symbol '" + g.inverse_symbol + "'");
      }
      a.symbols.push_back(g.inverse_symbol);
      a.inverse.push_back(s + 1);
      a.inverse.push_back(s);
    }
  }
  if (a.size() > 127) throw InvalidInput("alphabet too large");
  return a;
}

std::vector<LetterWord> Presentation::relator_words() const {
  auto a = alphabet();
  std::vector<LetterWord> out;
  for (const auto& r : relators) {
    auto w = a.parse(r);
    if (w.empty()) throw InvalidInput("empty relator");
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (a.inverse[static_cast<unsigned char>(w[i])] == static_cast<unsigned char>(w[i + 1])) {
        throw InvalidInput("relator '" + r + "' is not freely reduced");
      }
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::size_t Presentation::max_relator_length() const {
  std::size_t m = 0;
  for (const auto& w : relator_words()) m = std::max(m, w.size());
  return m;
}

Presentation Presentation::from_json(const nlohmann::json& doc) {
  try {
    Presentation p;
    for (const auto& g : doc.at("generators")) {
      GeneratorLabel label;
      label.symbol = g.at("symbol").get<std::string>();
      label.is_involution = g.value("involution", false);
      label.inverse_symbol = label.is_involution ? label.symbol : g.at("inverse").get<std::string>();
      p.generators.push_back(std::move(label));
    }
    for (const auto& r : doc.value("relators", nlohmann::json::array())) p.relators.push_back(r.get<std::string>());
    p.relator_words();  // validate
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("presentation JSON: ") + e.what());
  }
}

Presentation Presentation::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open presentation file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("presentation file " + path + ": " + e.what());
  }
  return from_json(doc);
}

nlohmann::json Presentation::to_json() const {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : generators) {
    nlohmann::json entry{{"symbol", g.symbol}, {"involution", g.is_involution}};
    if (!g.is_involution) entry["inverse"] = g.inverse_symbol;
    gens.push_back(std::move(entry));
  }
  return {{"generators", gens}, {"relators", relators}};
}

bool shortlex_less(const LetterWord& a, const LetterWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
    return static_cast<unsigned char>(x) < static_cast<unsigned char>(y);
  });
}

void RuleIndex::add(const LetterWord& lhs, std::size_t rule) {
  by_lhs.emplace(lhs, rule);
  ++length_count[lhs.size()];
}

void RuleIndex::remove(const LetterWord& lhs) {
  if (by_lhs.erase(lhs) == 0) return;
  auto it = length_count.find(lhs.size());
  if (--it->second == 0) length_count.erase(it);
}

LetterWord reduce_indexed(const std::vector<Rule>& rules, const RuleIndex& index, const LetterWord& w) {
  LetterWord out;
  LetterWord pending(w.rbegin(), w.rend());  // back() is the next letter
  LetterWord probe;
  while (!pending.empty()) {
    out.push_back(pending.back());
    pending.pop_back();
    for (auto [len, count] : index.length_count) {
      if (len > out.size()) break;
      probe.assign(out, out.size() - len, len);
      auto hit = index.by_lhs.find(probe);
      if (hit == index.by_lhs.end()) continue;
      const auto& r = rules[hit->second];
      out.resize(out.size() - len);
      pending.append(r.rhs.rbegin(), r.rhs.rend());
      break;
    }
  }
  return out;
}

namespace {

struct Overlap {
  LetterWord word, left, right;
};

// Critical pairs of rule x followed by rule y: proper suffix/prefix overlaps
// and occurrences of y.lhs inside x.lhs.
std::vector<Overlap> overlaps(const Rule& x, const Rule& y) {
  std::vector<Overlap> out;
  const auto& l1 = x.lhs;
  const auto& l2 = y.lhs;
  for (std::size_t k = 1; k < std::min(l1.size(), l2.size()); ++k) {
    if (l1.compare(l1.size() - k, k, l2, 0, k) == 0) {
      out.push_back({l1 + l2.substr(k), x.rhs + l2.substr(k), l1.substr(0, l1.size() - k) + y.rhs});
    }
  }
  if (&x != &y && l2.size() <= l1.size()) {
    for (std::size_t pos = l1.find(l2); pos != LetterWord::npos; pos = l1.find(l2, pos + 1)) {
      out.push_back({l1, x.rhs, l1.substr(0, pos) + y.rhs + l1.substr(pos + l2.size())});
    }
  }
  return out;
}

class Completion {
 public:
  Completion(Alphabet alphabet, const KbBounds& bounds) : alphabet_(std::move(alphabet)), bounds_(bounds) {}

  void push_equation(LetterWord u, LetterWord v) { pending_.emplace_back(std::move(u), std::move(v)); }

  // Returns false when a bound was hit.
  bool run() {
    std::size_t i = 0;
    while (true) {
      if (!drain()) return false;
      while (i < rules_.size() && !active_[i]) ++i;
      if (i >= rules_.size()) return true;
      for (std::size_t j = 0; j <= i && j < rules_.size(); ++j) {
        if (!active_[j] || !active_[i]) continue;
        for (const auto& o : overlaps(rules_[i], rules_[j])) push_equation(o.left, o.right);
        if (j != i) {
          for (const auto& o : overlaps(rules_[j], rules_[i])) push_equation(o.left, o.right);
        }
        if (!drain()) return false;
      }
      ++i;
    }
  }

  RewritingSystem result(Confluence status, std::string diagnostic) const {
    RewritingSystem rs;
    rs.alphabet = alphabet_;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (active_[i]) rs.rules.push_back(rules_[i]);
    }
    std::sort(rs.rules.begin(), rs.rules.end(),
              [](const Rule& a, const Rule& b) { return shortlex_less(a.lhs, b.lhs); });
    rs.reindex();
    rs.status = status;
    rs.diagnostic = std::move(diagnostic);
    return rs;
  }

  std::string overflow_reason() const { return overflow_; }

 private:
  std::size_t active_count() const { return active_count_; }

  bool drain() {
    while (!pending_.empty()) {
      auto [u, v] = std::move(pending_.front());
      pending_.pop_front();
      u = reduce_indexed(rules_, index_, u);
      v = reduce_indexed(rules_, index_, v);
      if (u == v) continue;
      if (shortlex_less(u, v)) std::swap(u, v);
      if (u.size() > bounds_.max_rule_length) {
        overflow_ = "rule of length " + std::to_string(u.size()) + " exceeds max_rule_length " +
                    std::to_string(bounds_.max_rule_length);
        return false;
      }
      add_rule(Rule{std::move(u), std::move(v)});
      if (active_count() > bounds_.max_rules) {
        overflow_ = "more than " + std::to_string(bounds_.max_rules) + " rules";
        return false;
      }
    }
    return true;
  }

  void add_rule(Rule rule) {
    rules_.push_back(std::move(rule));
    active_.push_back(true);
    ++active_count_;
    index_.add(rules_.back().lhs, rules_.size() - 1);
    const auto& fresh = rules_.back();
    const std::size_t fresh_index = rules_.size() - 1;
    for (std::size_t k = 0; k < fresh_index; ++k) {
      if (!active_[k]) continue;
      if (rules_[k].lhs.find(fresh.lhs) != LetterWord::npos) {
        active_[k] = false;
        --active_count_;
        index_.remove(rules_[k].lhs);
        push_equation(rules_[k].lhs, rules_[k].rhs);
      } else {
        rules_[k].rhs = reduce_indexed(rules_, index_, rules_[k].rhs);
      }
    }
  }

  Alphabet alphabet_;
  KbBounds bounds_;
  std::vector<Rule> rules_;
  std::vector<bool> active_;
  std::size_t active_count_ = 0;
  RuleIndex index_;
  std::deque<std::pair<LetterWord, LetterWord>> pending_;
  std::string overflow_;
};

}  // namespace

void RewritingSystem::reindex() {
  index = {};
  for (std::size_t i = 0; i < rules.size(); ++i) index.add(rules[i].lhs, i);
}

LetterWord RewritingSystem::reduce(const LetterWord& w) const {
  if (index.by_lhs.size() != rules.size()) throw InvalidInput("rewriting system index is stale; call reindex()");
  return reduce_indexed(rules, index, w);
}

LetterWord normal_form(const RewritingSystem& rs, const LetterWord& word) { return rs.reduce(word); }

void check_confluence(RewritingSystem& rs) {
  for (const auto& r : rs.rules) {
    if (!shortlex_less(r.rhs, r.lhs)) {
      rs.status = Confluence::refuted;
      rs.diagnostic = "rule " + rs.alphabet.format(r.lhs) + " -> " + rs.alphabet.format(r.rhs) +
                      " does not decrease in shortlex order";
      return;
    }
  }
  for (std::size_t i = 0; i < rs.rules.size(); ++i) {
    for (std::size_t j = 0; j < rs.rules.size(); ++j) {
      for (const auto& o : overlaps(rs.rules[i], rs.rules[j])) {
        auto left = rs.reduce(o.left);
        auto right = rs.reduce(o.right);
        if (left != right) {
          rs.status = Confluence::refuted;
          rs.witness = CriticalPairWitness{o.word, left, right};
          rs.diagnostic = "critical pair on " + rs.alphabet.format(o.word) + " resolves to " +
                          rs.alphabet.format(left) + " and " + rs.alphabet.format(right);
          return;
        }
      }
    }
  }
  rs.status = Confluence::verified;
  rs.witness.reset();
}

RewritingSystem kb_complete(const Presentation& presentation, const KbBounds& bounds) {
  if (bounds.max_rule_length == 0 || bounds.max_rules == 0) throw InvalidInput("completion bounds must be positive");
  auto alphabet = presentation.alphabet();
  auto relators = presentation.relator_words();
  Completion completion(alphabet, bounds);
  for (std::size_t x = 0; x < alphabet.size(); ++x) {
    completion.push_equation(LetterWord{static_cast<char>(x), static_cast<char>(alphabet.inverse[x])}, {});
  }
  for (auto& r : relators) completion.push_equation(std::move(r), {});

  if (!completion.run()) {
    return completion.result(Confluence::unverified, "completion stopped: " + completion.overflow_reason());
  }
  auto rs = completion.result(Confluence::unverified, {});
  check_confluence(rs);
  if (rs.status == Confluence::verified) rs.diagnostic = "all critical pairs resolve";
  return rs;
}

std::string to_string(Confluence c) {
  switch (c) {
    case Confluence::verified:
      return "verified";
    case Confluence::unverified:
      return "unverified";
    case Confluence::refuted:
      return "refuted";
  }
  return "unknown";
}

RewritingModel::RewritingModel(std::string name, RewritingSystem rs) : name_(std::move(name)), rs_(std::move(rs)) {
  const auto& a = rs_.alphabet;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a.inverse[x] == x) {
      add_involution(a.symbols[x]);
    } else if (a.inverse[x] == x + 1) {
      add_generator_pair(a.symbols[x], a.symbols[x + 1]);
      ++x;
    } else {
      throw InvalidInput("alphabet must list each inverse right after its generator");
    }
  }
}

VertexRef RewritingModel::make(LetterWord w) const {
  auto label = rs_.alphabet.format(w);
  return VertexRef(std::move(w), std::move(label));
}

VertexRef RewritingModel::identity() const { return make({}); }

VertexRef RewritingModel::act(const VertexRef& g, std::size_t gen) const {
  return make(rs_.reduce(g.key + static_cast<char>(gen)));
}

VertexRef RewritingModel::multiply(const VertexRef& g, const VertexRef& h) const { return make(rs_.reduce(g.key + h.key)); }

VertexRef RewritingModel::inverse(const VertexRef& g) const { return make(rs_.reduce(rs_.alphabet.invert(g.key))); }

VertexRef RewritingModel::from_key(std::string_view key) const {
  for (char ch : key) {
    if (static_cast<unsigned char>(ch) >= rs_.alphabet.size()) throw InvalidInput("malformed rewriting key");
  }
  return make(rs_.reduce(LetterWord(key)));
}

std::string RewritingModel::trust_diagnostic() const {
  return "rewriting system is " + to_string(rs_.status) + (rs_.diagnostic.empty() ? "" : " (" + rs_.diagnostic + ")");
}

}  // namespace horobound
