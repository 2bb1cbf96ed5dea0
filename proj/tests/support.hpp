#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "mcg/mapclass.hpp"
#include "mcg/word.hpp"

namespace testing {

inline std::string data_dir() { return MCG_TEST_DATA_DIR; }

inline mcg::Registry registry(int g, int n = 1) {
  return mcg::Registry::load(data_dir() + "/registry.txt", {g, n});
}

inline mcg::TwistTable table(int g) {
  return mcg::TwistTable::load(data_dir() + "/twists/g" + std::to_string(g) + ".tbl", g);
}

/// Engine built from the shipped data, cached per genus.
inline const mcg::Engine& engine(int g) {
  static std::map<int, std::unique_ptr<mcg::Engine>> cache;
  auto& slot = cache[g];
  if (!slot) slot = std::make_unique<mcg::Engine>(registry(g), table(g));
  return *slot;
}

/// Freely reduced random word with up to max_len letters.
inline mcg::Word random_word(std::mt19937_64& rng, int g, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, g);
  std::bernoulli_distribution neg(0.5);
  std::vector<mcg::Letter> letters;
  const int n = len(rng);
  for (int k = 0; k < n; ++k) letters.push_back(neg(rng) ? -gen(rng) : gen(rng));
  return mcg::Word(g, letters);
}

/// All freely reduced words of length <= max_len.
inline std::vector<mcg::Word> all_words(int g, int max_len) {
  std::vector<std::vector<mcg::Letter>> layer{{}};
  std::vector<mcg::Word> out{mcg::Word(g)};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<mcg::Letter>> next;
    for (const auto& w : layer) {
      for (int i = 1; i <= g; ++i) {
        for (int l : {i, -i}) {
          if (!w.empty() && w.back() == -l) continue;
          auto v = w;
          v.push_back(l);
          next.push_back(v);
          out.emplace_back(g, v);
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

/// Brute-force conjugacy: u and v are conjugate iff some conjugate of u by a
/// word of length <= reach equals some conjugate of v by such a word. For
/// |u|, |v| <= 6 and reach 4 both sides reach every rotation of the common
/// cyclic core, so the test is exact.
inline bool conjugate_by_search(const mcg::Word& u, const mcg::Word& v,
                                const std::vector<mcg::Word>& conjugators) {
  std::vector<mcg::Word> left;
  for (const auto& w : conjugators) left.push_back(mcg::concat(mcg::concat(w, u), mcg::invert(w)));
  std::sort(left.begin(), left.end());
  for (const auto& w : conjugators) {
    const auto c = mcg::concat(mcg::concat(w, v), mcg::invert(w));
    if (std::binary_search(left.begin(), left.end(), c)) return true;
  }
  return false;
}

/// Random pair of words of length <= 6; roughly half are conjugate by
/// construction.
inline std::pair<mcg::Word, mcg::Word> random_pair(std::mt19937_64& rng, int g) {
  const mcg::Word u = random_word(rng, g, 6);
  if (std::bernoulli_distribution(0.5)(rng)) return {u, random_word(rng, g, 6)};
  for (;;) {
    const mcg::Word w = random_word(rng, g, 4);
    const mcg::Word v = mcg::concat(mcg::concat(w, u), mcg::invert(w));
    if (v.size() <= 6) return {u, v};
  }
}

}  // namespace testing
