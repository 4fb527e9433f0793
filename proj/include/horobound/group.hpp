#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "horobound/limits.hpp"
#include "horobound/oracle.hpp"

namespace horobound {

struct GeneratorLabel {
  std::string symbol;
  std::string inverse_symbol;
  bool is_involution = false;
};

/// A word as indices into GroupModel::generators().
using Word = std::vector<std::size_t>;

/// A group with a symmetric generating set. Elements are handled through
/// their canonical keys (VertexRef), so two handles denote the same element
/// iff their keys are equal.
class GroupModel {
 public:
  virtual ~GroupModel() = default;

  virtual std::string name() const = 0;

  /// Symmetric generating set: each non-involution appears together with its
  /// inverse as a separate entry.
  const std::vector<GeneratorLabel>& generators() const { return generators_; }
  std::size_t inverse_of(std::size_t gen) const { return inverse_index_.at(gen); }

  virtual VertexRef identity() const = 0;
  virtual VertexRef act(const VertexRef& g, std::size_t gen) const = 0;
  virtual VertexRef multiply(const VertexRef& g, const VertexRef& h) const = 0;
  virtual VertexRef inverse(const VertexRef& g) const = 0;
  virtual VertexRef from_key(std::string_view key) const = 0;

  /// Structural coordinates such as "(1,2)", for models that have them.
  virtual std::optional<VertexRef> parse_coordinates(std::string_view) const { return std::nullopt; }

  /// Whether distances derived from this model may be trusted (false for an
  /// unverified rewriting system).
  virtual bool metric_trusted() const { return true; }
  virtual std::string trust_diagnostic() const { return {}; }

  VertexRef evaluate(const Word& word) const;

  /// Parses a word over the generator symbols; "e", "1" and "" denote the
  /// identity unless they are generator symbols. Whitespace and '.' are ignored.
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& word) const;

  /// Resolves a vertex address: coordinates when supported, else a word.
  VertexRef parse_element(std::string_view text) const;

 protected:
  /// Registers a generator; returns its index. For non-involutions call
  /// add_generator_pair instead.
  std::size_t add_involution(const std::string& symbol);
  std::pair<std::size_t, std::size_t> add_generator_pair(const std::string& symbol, const std::string& inverse);

 private:
  std::vector<GeneratorLabel> generators_;
  std::vector<std::size_t> inverse_index_;
};

/// Cayley graph g -- g*s of a group model.
class CayleyOracle final : public NeighborOracle {
 public:
  explicit CayleyOracle(std::shared_ptr<const GroupModel> model);

  std::vector<VertexRef> neighbors(const VertexRef& v) const override;
  std::optional<std::size_t> valence_bound() const override { return model_->generators().size(); }
  std::string descriptor() const override { return model_->name(); }
  VertexRef parse_vertex(std::string_view text) const override { return model_->parse_element(text); }
  VertexRef from_key(std::string_view key) const override { return model_->from_key(key); }

  const GroupModel& model() const { return *model_; }
  std::shared_ptr<const GroupModel> model_ptr() const { return model_; }

 private:
  std::shared_ptr<const GroupModel> model_;
};

std::shared_ptr<CayleyOracle> cayley_oracle(std::shared_ptr<const GroupModel> model);

struct BallEntry {
  VertexRef element;
  int length = 0;
};

/// All elements of word length <= radius, sorted by key. Refused with
/// VerificationFailure when the model's metric is not trusted.
std::vector<BallEntry> ball(const GroupModel& model, int radius, const Limits& limits = {});

/// Sphere sizes |S_0|, ..., |S_radius| around `center`.
std::vector<std::size_t> sphere_sizes(const NeighborOracle& oracle, const VertexRef& center, int radius,
                                      const Limits& limits = {});

}  // namespace horobound
