#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "horobound/garside.hpp"
#include "horobound/group.hpp"
#include "horobound/rewriting.hpp"

namespace horobound {

/// Z^d; element = integer vector, generators a, b, ... with inverses A, B, ...
class ZdModel final : public GroupModel {
 public:
  explicit ZdModel(int dimension);

  std::string name() const override { return "zd:" + std::to_string(dim_); }
  VertexRef identity() const override;
  VertexRef act(const VertexRef& g, std::size_t gen) const override;
  VertexRef multiply(const VertexRef& g, const VertexRef& h) const override;
  VertexRef inverse(const VertexRef& g) const override;
  VertexRef from_key(std::string_view key) const override;
  std::optional<VertexRef> parse_coordinates(std::string_view text) const override;

  VertexRef element(const std::vector<std::int32_t>& coords) const;

 private:
  int dim_;
};

/// Triangular lattice in axial coordinates: a = 1 -> (1,0), b = omega -> (0,1),
/// c = omega^2 -> (-1,1); A, B, C are the negatives.
class HexModel final : public GroupModel {
 public:
  HexModel();

  std::string name() const override { return "hex"; }
  VertexRef identity() const override { return element(0, 0); }
  VertexRef act(const VertexRef& g, std::size_t gen) const override;
  VertexRef multiply(const VertexRef& g, const VertexRef& h) const override;
  VertexRef inverse(const VertexRef& g) const override;
  VertexRef from_key(std::string_view key) const override;
  std::optional<VertexRef> parse_coordinates(std::string_view text) const override;

  VertexRef element(std::int32_t x, std::int32_t y) const;
};

/// Upper unitriangular integer matrices [[1,m,n],[0,1,k],[0,0,1]] stored as
/// (m,n,k). a = (1,0,0), b = (0,0,1); the extended variant adds the central
/// c = (0,1,0).
class HeisenbergModel final : public GroupModel {
 public:
  explicit HeisenbergModel(bool extended);

  std::string name() const override { return extended_ ? "heisenberg:extended" : "heisenberg:std"; }
  VertexRef identity() const override { return element(0, 0, 0); }
  VertexRef act(const VertexRef& g, std::size_t gen) const override;
  VertexRef multiply(const VertexRef& g, const VertexRef& h) const override;
  VertexRef inverse(const VertexRef& g) const override;
  VertexRef from_key(std::string_view key) const override;
  std::optional<VertexRef> parse_coordinates(std::string_view text) const override;

  VertexRef element(std::int64_t m, std::int64_t n, std::int64_t k) const;
  static std::array<std::int64_t, 3> coordinates(const VertexRef& g);

 private:
  bool extended_;
  std::vector<std::array<std::int64_t, 3>> gen_values_;
};

/// Free product of cyclic groups; order 0 means Z. Elements are reduced
/// syllable sequences (factor, exponent) with exponent in 1..order-1 for
/// finite factors. An order-2 factor has a single involutive generator.
class FreeProductModel final : public GroupModel {
 public:
  FreeProductModel(std::vector<int> orders, std::string name);

  std::string name() const override { return name_; }
  VertexRef identity() const override { return make({}); }
  VertexRef act(const VertexRef& g, std::size_t gen) const override;
  VertexRef multiply(const VertexRef& g, const VertexRef& h) const override;
  VertexRef inverse(const VertexRef& g) const override;
  VertexRef from_key(std::string_view key) const override;

  const std::vector<int>& orders() const { return orders_; }

 private:
  using Syllables = std::vector<std::pair<std::uint8_t, std::int32_t>>;
  Syllables decode(std::string_view key) const;
  VertexRef make(const Syllables& s) const;
  void push(Syllables& s, std::uint8_t factor, std::int32_t exponent) const;

  std::vector<int> orders_;
  std::string name_;
  std::vector<std::pair<std::uint8_t, std::int32_t>> gen_syllable_;
};

/// B_n on Garside normal-form keys; sigma_i is letter 'a'+i-1, inverse uppercase.
class BraidModel final : public GroupModel {
 public:
  explicit BraidModel(int strands);

  std::string name() const override { return "braid:" + std::to_string(strands_); }
  VertexRef identity() const override { return make(garside::identity(strands_)); }
  VertexRef act(const VertexRef& g, std::size_t gen) const override;
  VertexRef multiply(const VertexRef& g, const VertexRef& h) const override;
  VertexRef inverse(const VertexRef& g) const override;
  VertexRef from_key(std::string_view key) const override;

  VertexRef make(const garside::GarsideElement& x) const;
  int strands() const { return strands_; }

 private:
  int strands_;
};

/// Generators given as words in a base model: g.s = g * image(s). Used for
/// Tietze eliminations such as b = AdCDa in <a,b,c,d | abAdcD>, whose base
/// is the free group on a, c, d.
class SubstitutionModel final : public GroupModel {
 public:
  /// `images[i]` is the base-model word for generators().at(2i) (inverse
  /// images are derived).
  SubstitutionModel(std::string name, std::shared_ptr<const GroupModel> base,
                    const std::vector<std::pair<std::string, std::string>>& symbols,
                    const std::vector<std::string>& images);

  std::string name() const override { return name_; }
  VertexRef identity() const override { return base_->identity(); }
  VertexRef act(const VertexRef& g, std::size_t gen) const override;
  VertexRef multiply(const VertexRef& g, const VertexRef& h) const override { return base_->multiply(g, h); }
  VertexRef inverse(const VertexRef& g) const override { return base_->inverse(g); }
  VertexRef from_key(std::string_view key) const override { return base_->from_key(key); }

 private:
  std::string name_;
  std::shared_ptr<const GroupModel> base_;
  std::vector<VertexRef> images_;  // per generator index
};

}  // namespace horobound
