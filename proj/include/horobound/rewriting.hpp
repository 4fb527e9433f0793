#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "horobound/group.hpp"

namespace horobound {

/// Words over a rewriting alphabet: one char per letter, value = letter index.
/// Letter order is the shortlex order.
using LetterWord = std::string;

struct Alphabet {
  std::vector<std::string> symbols;   // letter -> symbol
  std::vector<std::size_t> inverse;   // letter -> inverse letter

  std::size_t size() const { return symbols.size(); }
  LetterWord parse(std::string_view text) const;
  std::string format(const LetterWord& w) const;
  LetterWord invert(const LetterWord& w) const;
};

/// <S | R> with uppercase-as-inverse symbols.
struct Presentation {
  std::vector<GeneratorLabel> generators;  // one entry per generator (not per inverse)
  std::vector<std::string> relators;

  /// Letters: each generator in declaration order followed by its inverse
  /// (involutions contribute one letter).
  Alphabet alphabet() const;
  /// Relators parsed and validated: nonempty and freely reduced.
  std::vector<LetterWord> relator_words() const;
  /// Longest relator length; 0 when there are no relators.
  std::size_t max_relator_length() const;

  static Presentation from_json(const nlohmann::json& doc);
  static Presentation load(const std::string& path);
  nlohmann::json to_json() const;
};

bool shortlex_less(const LetterWord& a, const LetterWord& b);

struct Rule {
  LetterWord lhs;
  LetterWord rhs;
};

/// Left-hand sides by value, plus the multiset of their lengths, so that
/// reduction probes one hash lookup per distinct length.
struct RuleIndex {
  std::unordered_map<LetterWord, std::size_t> by_lhs;
  std::map<std::size_t, std::size_t> length_count;

  void add(const LetterWord& lhs, std::size_t rule);
  void remove(const LetterWord& lhs);
};

LetterWord reduce_indexed(const std::vector<Rule>& rules, const RuleIndex& index, const LetterWord& w);

enum class Confluence { verified, unverified, refuted };

struct CriticalPairWitness {
  LetterWord overlap;
  LetterWord left_normal_form;
  LetterWord right_normal_form;
};

struct RewritingSystem {
  Alphabet alphabet;
  std::vector<Rule> rules;
  Confluence status = Confluence::unverified;
  std::optional<CriticalPairWitness> witness;  // set when refuted
  std::string diagnostic;

  RuleIndex index;

  /// Rebuilds `index` after `rules` was edited by hand.
  void reindex();
  /// Irreducible descendant of w (leftmost-innermost rewriting).
  LetterWord reduce(const LetterWord& w) const;
};

struct KbBounds {
  std::size_t max_rule_length = 24;
  std::size_t max_rules = 2000;
};

/// Bounded Knuth-Bendix completion for the shortlex order. Never reports
/// `verified` unless every critical pair of the final rule set resolves.
RewritingSystem kb_complete(const Presentation& presentation, const KbBounds& bounds = {});

/// Exhaustive critical-pair check; sets status (and witness) accordingly.
void check_confluence(RewritingSystem& rs);

LetterWord normal_form(const RewritingSystem& rs, const LetterWord& word);

/// Group model whose elements are normal forms of a rewriting system.
/// Distances are only trusted when the system is verified confluent.
class RewritingModel final : public GroupModel {
 public:
  RewritingModel(std::string name, RewritingSystem rs);

  std::string name() const override { return name_; }
  VertexRef identity() const override;
  VertexRef act(const VertexRef& g, std::size_t gen) const override;
  VertexRef multiply(const VertexRef& g, const VertexRef& h) const override;
  VertexRef inverse(const VertexRef& g) const override;
  VertexRef from_key(std::string_view key) const override;
  bool metric_trusted() const override { return rs_.status == Confluence::verified; }
  std::string trust_diagnostic() const override;

  const RewritingSystem& system() const { return rs_; }

 private:
  VertexRef make(LetterWord w) const;

  std::string name_;
  RewritingSystem rs_;
};

std::string to_string(Confluence c);

}  // namespace horobound
