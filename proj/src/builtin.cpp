#include "horobound/builtin.hpp"

#include <charconv>

#include "horobound/errors.hpp"
#include "horobound/graphs.hpp"
#include "horobound/models.hpp"

namespace horobound {

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidInput("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string> split_params(std::string_view s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  while (true) {
    auto comma = s.find(',');
    out.emplace_back(s.substr(0, comma));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

GeneratorLabel pair_label(char lower) {
  return {std::string(1, lower), std::string(1, static_cast<char>(lower - 'a' + 'A')), false};
}

Presentation zd_presentation(int d) {
  Presentation p;
  for (int i = 0; i < d; ++i) p.generators.push_back(pair_label(static_cast<char>('a' + i)));
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      char x = static_cast<char>('a' + i), y = static_cast<char>('a' + j);
      p.relators.push_back({x, y, static_cast<char>(x - 'a' + 'A'), static_cast<char>(y - 'a' + 'A')});
    }
  }
  return p;
}

Presentation free_product_presentation(const std::vector<int>& orders) {
  Presentation p;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    char x = static_cast<char>('a' + i);
    if (orders[i] == 2) {
      p.generators.push_back({std::string(1, x), std::string(1, x), true});
    } else {
      p.generators.push_back(pair_label(x));
      if (orders[i] > 2) p.relators.emplace_back(static_cast<std::size_t>(orders[i]), x);
    }
  }
  return p;
}

Presentation hex_presentation() {
  Presentation p;
  for (char x : {'a', 'b', 'c'}) p.generators.push_back(pair_label(x));
  p.relators = {"abAB", "caB"};  // commuting, and c = b - a
  return p;
}

Presentation heisenberg_presentation(bool extended) {
  Presentation p;
  p.generators = {pair_label('a'), pair_label('b')};
  if (extended) {
    p.generators.push_back(pair_label('c'));
    p.relators = {"abABC", "acAC", "bcBC"};  // c = [a,b] central
  } else {
    p.relators = {"aabABAbaBA", "babABaBA"};  // [a,[a,b]], [b,[a,b]]
  }
  return p;
}

Presentation braid_presentation(int n) {
  Presentation p;
  for (int i = 0; i + 1 < n; ++i) p.generators.push_back(pair_label(static_cast<char>('a' + i)));
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = i + 1; j + 1 < n; ++j) {
      char x = static_cast<char>('a' + i), y = static_cast<char>('a' + j);
      char X = static_cast<char>(x - 'a' + 'A'), Y = static_cast<char>(y - 'a' + 'A');
      if (j == i + 1) {
        p.relators.push_back({x, y, x, Y, X, Y});
      } else {
        p.relators.push_back({x, y, X, Y});
      }
    }
  }
  return p;
}

Builtin from_presentation(std::string descriptor, Presentation p, const KbBounds& bounds) {
  auto rs = kb_complete(p, bounds);
  auto model = std::make_shared<RewritingModel>(descriptor, std::move(rs));
  return Builtin{descriptor, cayley_oracle(model), model, std::move(p)};
}

template <typename Model>
Builtin group_builtin(std::string descriptor, std::shared_ptr<Model> model, std::optional<Presentation> p) {
  return Builtin{std::move(descriptor), cayley_oracle(model), model, std::move(p)};
}

}  // namespace

Presentation one_relator_presentation() {
  Presentation p;
  for (char x : {'a', 'b', 'c', 'd'}) p.generators.push_back(pair_label(x));
  p.relators = {"abAdcD"};
  return p;
}

Builtin builtin(std::string_view spec, const KbBounds& bounds) {
  auto colon = spec.find(':');
  std::string name(spec.substr(0, colon));
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  auto params = split_params(rest);
  auto expect_params = [&](std::size_t n) {
    if (params.size() != n) {
      throw InvalidInput("builtin '" + name + "' takes " + std::to_string(n) + " parameter(s)");
    }
  };

  if (name == "zd") {
    expect_params(1);
    int d = parse_int(params[0], "dimension");
    return group_builtin("zd:" + std::to_string(d), std::make_shared<ZdModel>(d), zd_presentation(d));
  }
  if (name == "free") {
    expect_params(1);
    int k = parse_int(params[0], "rank");
    if (k < 1) throw InvalidInput("free group rank must be positive");
    std::vector<int> orders(static_cast<std::size_t>(k), 0);
    auto desc = "free:" + std::to_string(k);
    return group_builtin(desc, std::make_shared<FreeProductModel>(orders, desc), free_product_presentation(orders));
  }
  if (name == "free_product") {
    if (params.empty()) throw InvalidInput("free_product needs factor orders, e.g. free_product:2,3");
    std::vector<int> orders;
    std::string desc = "free_product:";
    for (std::size_t i = 0; i < params.size(); ++i) {
      orders.push_back(parse_int(params[i], "factor order"));
      desc += (i ? "," : "") + std::to_string(orders.back());
    }
    return group_builtin(desc, std::make_shared<FreeProductModel>(orders, desc), free_product_presentation(orders));
  }
  if (name == "hex") {
    expect_params(0);
    return group_builtin("hex", std::make_shared<HexModel>(), hex_presentation());
  }
  if (name == "heisenberg") {
    if (params.size() > 1) throw InvalidInput("heisenberg takes std or extended");
    std::string variant = params.empty() ? "std" : params[0];
    if (variant != "std" && variant != "extended") throw InvalidInput("heisenberg variant must be std or extended");
    bool extended = variant == "extended";
    return group_builtin("heisenberg:" + variant, std::make_shared<HeisenbergModel>(extended),
                         heisenberg_presentation(extended));
  }
  if (name == "braid") {
    expect_params(1);
    int n = parse_int(params[0], "strand count");
    return group_builtin("braid:" + std::to_string(n), std::make_shared<BraidModel>(n), braid_presentation(n));
  }
  if (name == "one_relator_example") {
    expect_params(0);
    return from_presentation("one_relator_example", one_relator_presentation(), bounds);
  }
  if (name == "one_relator_tietze") {
    expect_params(0);
    auto base = std::make_shared<FreeProductModel>(std::vector<int>{0, 0, 0}, "free:3");
    // Base letters a, b, c stand for a, c, d; the relator gives b = A d C D a.
    auto model = std::make_shared<SubstitutionModel>(
        "one_relator_tietze", base,
        std::vector<std::pair<std::string, std::string>>{{"a", "A"}, {"b", "B"}, {"c", "C"}, {"d", "D"}},
        std::vector<std::string>{"a", "AcBCa", "b", "c"});
    return group_builtin("one_relator_tietze", model, one_relator_presentation());
  }
  if (name == "gamma1" || name == "gamma2") {
    expect_params(0);
    return Builtin{name, std::make_shared<LadderGraph>(name == "gamma2"), nullptr, std::nullopt};
  }
  if (name == "finite_graph") {
    if (rest.empty()) throw InvalidInput("finite_graph needs a file path");
    auto g = std::make_shared<FiniteGraph>(FiniteGraph::load(std::string(rest)));
    return Builtin{"finite_graph:" + std::string(rest), g, nullptr, std::nullopt};
  }
  if (name == "presentation") {
    if (rest.empty()) throw InvalidInput("presentation needs a file path");
    return from_presentation("presentation:" + std::string(rest), Presentation::load(std::string(rest)), bounds);
  }
  throw InvalidInput("unknown graph '" + std::string(spec) + "'");
}

std::vector<std::string> builtin_names() {
  return {"zd:D",        "free:K",   "free_product:O1,O2,...", "hex",
          "heisenberg:std|extended", "braid:N", "one_relator_example", "one_relator_tietze", "gamma1",
          "gamma2",      "finite_graph:FILE", "presentation:FILE"};
}

}  // namespace horobound
