#include "horobound/models.hpp"

#include <limits>

#include "horobound/errors.hpp"
#include "horobound/graphs.hpp"
#include "horobound/vertex.hpp"

namespace horobound {

namespace {

std::string tuple_label(const std::vector<std::int64_t>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out + ")";
}

std::int32_t narrow(std::int64_t v) {
  if (v < std::numeric_limits<std::int32_t>::min() || v > std::numeric_limits<std::int32_t>::max()) {
    throw ResourceLimit("coordinate " + std::to_string(v) + " exceeds the 32-bit key range");
  }
  return static_cast<std::int32_t>(v);
}

std::string lower_symbol(std::size_t i) { return std::string(1, static_cast<char>('a' + i)); }
std::string upper_symbol(std::size_t i) { return std::string(1, static_cast<char>('A' + i)); }

std::vector<std::int64_t> widen(const std::vector<std::int32_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

// ---------------------------------------------------------------- Z^d

ZdModel::ZdModel(int dimension) : dim_(dimension) {
  if (dimension < 1 || dimension > 26) throw InvalidInput("zd dimension must be in 1..26");
  for (int i = 0; i < dimension; ++i) add_generator_pair(lower_symbol(i), upper_symbol(i));
}

VertexRef ZdModel::element(const std::vector<std::int32_t>& coords) const {
  if (coords.size() != static_cast<std::size_t>(dim_)) {
    throw InvalidInput("expected " + std::to_string(dim_) + " coordinates");
  }
  return VertexRef(keycodec::encode_ints(coords), tuple_label(widen(coords)));
}

VertexRef ZdModel::identity() const { return element(std::vector<std::int32_t>(dim_, 0)); }

VertexRef ZdModel::act(const VertexRef& g, std::size_t gen) const {
  auto v = keycodec::decode_ints(g.key);
  auto& x = v.at(gen / 2);
  x = narrow(static_cast<std::int64_t>(x) + (gen % 2 == 0 ? 1 : -1));
  return element(v);
}

VertexRef ZdModel::multiply(const VertexRef& g, const VertexRef& h) const {
  auto x = keycodec::decode_ints(g.key);
  auto y = keycodec::decode_ints(h.key);
  for (int i = 0; i < dim_; ++i) x[i] = narrow(static_cast<std::int64_t>(x[i]) + y[i]);
  return element(x);
}

VertexRef ZdModel::inverse(const VertexRef& g) const {
  auto x = keycodec::decode_ints(g.key);
  for (auto& v : x) v = narrow(-static_cast<std::int64_t>(v));
  return element(x);
}

VertexRef ZdModel::from_key(std::string_view key) const { return element(keycodec::decode_ints(key)); }

std::optional<VertexRef> ZdModel::parse_coordinates(std::string_view text) const {
  if (text.empty() || text.front() != '(') return std::nullopt;
  return element(parse_int_tuple(text));
}

// ---------------------------------------------------------------- hex

HexModel::HexModel() {
  add_generator_pair("a", "A");
  add_generator_pair("b", "B");
  add_generator_pair("c", "C");
}

VertexRef HexModel::element(std::int32_t x, std::int32_t y) const {
  return VertexRef(keycodec::encode_ints({x, y}), tuple_label({x, y}));
}

VertexRef HexModel::act(const VertexRef& g, std::size_t gen) const {
  static constexpr int dx[] = {1, -1, 0, 0, -1, 1};
  static constexpr int dy[] = {0, 0, 1, -1, 1, -1};
  auto v = keycodec::decode_ints(g.key);
  return element(narrow(static_cast<std::int64_t>(v.at(0)) + dx[gen]), narrow(static_cast<std::int64_t>(v.at(1)) + dy[gen]));
}

VertexRef HexModel::multiply(const VertexRef& g, const VertexRef& h) const {
  auto x = keycodec::decode_ints(g.key);
  auto y = keycodec::decode_ints(h.key);
  return element(narrow(static_cast<std::int64_t>(x[0]) + y[0]), narrow(static_cast<std::int64_t>(x[1]) + y[1]));
}

VertexRef HexModel::inverse(const VertexRef& g) const {
  auto x = keycodec::decode_ints(g.key);
  return element(narrow(-static_cast<std::int64_t>(x[0])), narrow(-static_cast<std::int64_t>(x[1])));
}

VertexRef HexModel::from_key(std::string_view key) const {
  auto v = keycodec::decode_ints(key);
  if (v.size() != 2) throw InvalidInput("malformed hex key");
  return element(v[0], v[1]);
}

std::optional<VertexRef> HexModel::parse_coordinates(std::string_view text) const {
  if (text.empty() || text.front() != '(') return std::nullopt;
  auto v = parse_int_tuple(text);
  if (v.size() != 2) throw InvalidInput("hex coordinates are (x,y)");
  return element(v[0], v[1]);
}

// ---------------------------------------------------------------- Heisenberg

HeisenbergModel::HeisenbergModel(bool extended) : extended_(extended) {
  add_generator_pair("a", "A");
  add_generator_pair("b", "B");
  gen_values_ = {{1, 0, 0}, {-1, 0, 0}, {0, 0, 1}, {0, 0, -1}};
  if (extended) {
    add_generator_pair("c", "C");
    gen_values_.push_back({0, 1, 0});
    gen_values_.push_back({0, -1, 0});
  }
}

VertexRef HeisenbergModel::element(std::int64_t m, std::int64_t n, std::int64_t k) const {
  return VertexRef(keycodec::encode_ints({narrow(m), narrow(n), narrow(k)}), tuple_label({m, n, k}));
}

std::array<std::int64_t, 3> HeisenbergModel::coordinates(const VertexRef& g) {
  auto v = keycodec::decode_ints(g.key);
  if (v.size() != 3) throw InvalidInput("malformed Heisenberg key");
  return {v[0], v[1], v[2]};
}

VertexRef HeisenbergModel::act(const VertexRef& g, std::size_t gen) const {
  auto [m, n, k] = coordinates(g);
  const auto& s = gen_values_.at(gen);
  return element(m + s[0], n + s[1] + m * s[2], k + s[2]);
}

VertexRef HeisenbergModel::multiply(const VertexRef& g, const VertexRef& h) const {
  auto [m, n, k] = coordinates(g);
  auto [m2, n2, k2] = coordinates(h);
  return element(m + m2, n + n2 + m * k2, k + k2);
}

VertexRef HeisenbergModel::inverse(const VertexRef& g) const {
  auto [m, n, k] = coordinates(g);
  return element(-m, -n + m * k, -k);
}

VertexRef HeisenbergModel::from_key(std::string_view key) const {
  auto [m, n, k] = coordinates(VertexRef(std::string(key)));
  return element(m, n, k);
}

std::optional<VertexRef> HeisenbergModel::parse_coordinates(std::string_view text) const {
  if (text.empty() || text.front() != '(') return std::nullopt;
  auto v = parse_int_tuple(text);
  if (v.size() != 3) throw InvalidInput("Heisenberg coordinates are (m,n,k)");
  return element(v[0], v[1], v[2]);
}

// ---------------------------------------------------------------- free products

FreeProductModel::FreeProductModel(std::vector<int> orders, std::string name)
    : orders_(std::move(orders)), name_(std::move(name)) {
  if (orders_.empty() || orders_.size() > 26) throw InvalidInput("free products need 1..26 factors");
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    int order = orders_[i];
    if (order < 0 || order == 1) throw InvalidInput("factor orders must be 0 (infinite) or at least 2");
    auto f = static_cast<std::uint8_t>(i);
    if (order == 2) {
      add_involution(lower_symbol(i));
      gen_syllable_.push_back({f, 1});
    } else {
      add_generator_pair(lower_symbol(i), upper_symbol(i));
      gen_syllable_.push_back({f, 1});
      gen_syllable_.push_back({f, -1});
    }
  }
}

void FreeProductModel::push(Syllables& s, std::uint8_t factor, std::int32_t exponent) const {
  auto normalize = [&](std::int64_t e) -> std::int32_t {
    int order = orders_[factor];
    if (order > 0) e = ((e % order) + order) % order;
    return narrow(e);
  };
  if (!s.empty() && s.back().first == factor) {
    auto e = normalize(static_cast<std::int64_t>(s.back().second) + exponent);
    if (e == 0) {
      s.pop_back();
    } else {
      s.back().second = e;
    }
    return;
  }
  auto e = normalize(exponent);
  if (e != 0) s.push_back({factor, e});
}

FreeProductModel::Syllables FreeProductModel::decode(std::string_view key) const {
  Syllables s;
  std::size_t pos = 0;
  while (pos < key.size()) {
    auto f = keycodec::get_u8(key, pos);
    auto e = keycodec::get_i32(key, pos);
    if (f >= orders_.size()) throw InvalidInput("malformed free-product key");
    s.push_back({f, e});
  }
  return s;
}

VertexRef FreeProductModel::make(const Syllables& s) const {
  std::string key;
  std::string label;
  for (auto [f, e] : s) {
    keycodec::put_u8(key, f);
    keycodec::put_i32(key, e);
    int order = orders_[f];
    std::int64_t shown = e;
    if (order > 2 && e > order / 2) shown = static_cast<std::int64_t>(e) - order;
    const auto sym = shown > 0 ? lower_symbol(f) : upper_symbol(f);
    for (std::int64_t i = 0; i < (shown > 0 ? shown : -shown); ++i) label += sym;
  }
  if (label.empty()) label = "e";
  return VertexRef(std::move(key), std::move(label));
}

VertexRef FreeProductModel::act(const VertexRef& g, std::size_t gen) const {
  auto s = decode(g.key);
  auto [f, e] = gen_syllable_.at(gen);
  push(s, f, e);
  return make(s);
}

VertexRef FreeProductModel::multiply(const VertexRef& g, const VertexRef& h) const {
  auto s = decode(g.key);
  for (auto [f, e] : decode(h.key)) push(s, f, e);
  return make(s);
}

VertexRef FreeProductModel::inverse(const VertexRef& g) const {
  auto s = decode(g.key);
  Syllables out;
  for (auto it = s.rbegin(); it != s.rend(); ++it) push(out, it->first, -it->second);
  return make(out);
}

VertexRef FreeProductModel::from_key(std::string_view key) const {
  Syllables s;
  for (auto [f, e] : decode(key)) push(s, f, e);
  auto v = make(s);
  if (v.key != key) throw InvalidInput("free-product key is not reduced");
  return v;
}

// ---------------------------------------------------------------- braids

BraidModel::BraidModel(int strands) : strands_(strands) {
  if (strands < 2 || strands > 26) throw InvalidInput("braid groups need 2..26 strands");
  for (int i = 0; i + 1 < strands; ++i) add_generator_pair(lower_symbol(i), upper_symbol(i));
}

VertexRef BraidModel::make(const garside::GarsideElement& x) const {
  return VertexRef(garside::encode_key(x), garside::to_string(x));
}

VertexRef BraidModel::act(const VertexRef& g, std::size_t gen) const {
  int letter = static_cast<int>(gen / 2) + 1;
  if (gen % 2 == 1) letter = -letter;
  return make(garside::append_letter(garside::decode_key(strands_, g.key), letter));
}

VertexRef BraidModel::multiply(const VertexRef& g, const VertexRef& h) const {
  return make(garside::multiply(garside::decode_key(strands_, g.key), garside::decode_key(strands_, h.key)));
}

VertexRef BraidModel::inverse(const VertexRef& g) const {
  return make(garside::inverse(garside::decode_key(strands_, g.key)));
}

VertexRef BraidModel::from_key(std::string_view key) const { return make(garside::decode_key(strands_, key)); }

// ---------------------------------------------------------------- substitutions

SubstitutionModel::SubstitutionModel(std::string name, std::shared_ptr<const GroupModel> base,
                                     const std::vector<std::pair<std::string, std::string>>& symbols,
                                     const std::vector<std::string>& images)
    : name_(std::move(name)), base_(std::move(base)) {
  if (!base_ || symbols.size() != images.size()) throw InvalidInput("substitution needs one image per generator");
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    add_generator_pair(symbols[i].first, symbols[i].second);
    auto image = base_->evaluate(base_->parse_word(images[i]));
    images_.push_back(image);
    images_.push_back(base_->inverse(image));
  }
}

VertexRef SubstitutionModel::act(const VertexRef& g, std::size_t gen) const { return base_->multiply(g, images_.at(gen)); }

}  // namespace horobound
