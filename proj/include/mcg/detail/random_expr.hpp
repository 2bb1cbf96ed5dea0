#pragma once

#include <random>

namespace mcg {

template <class Rng>
MappingClassExpr random_expr(Rng& rng, const std::vector<std::string>& names,
                             int max_length) {
  std::uniform_int_distribution<int> length(1, max_length);
  std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
  std::bernoulli_distribution invert(0.5);
  MappingClassExpr expr;
  const int n = length(rng);
  for (int k = 0; k < n; ++k) {
    expr.factors.push_back({names[pick(rng)], invert(rng) ? -1 : 1});
  }
  return expr;
}

}  // namespace mcg
