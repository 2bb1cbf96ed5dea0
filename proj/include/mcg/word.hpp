#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mcg {

/// A letter of F_g: +i stands for x_i, -i for x_i^-1 (i >= 1).
using Letter = int;

inline int generator_of(Letter l) { return l < 0 ? -l : l; }

/// Position of a letter in the order x1 < x1^-1 < x2 < x2^-1 < ...
inline int letter_rank(Letter l) {
  return 2 * (generator_of(l) - 1) + (l < 0 ? 1 : 0);
}

/// Freely reduced word over x_1..x_g. Immutable; every operation returns a
/// fresh reduced value.
class Word {
 public:
  Word() = default;
  explicit Word(int genus) : genus_(genus) {}

  /// Reduces `letters`; throws if any index falls outside 1..genus.
  Word(int genus, std::span<const Letter> letters);
  Word(int genus, std::initializer_list<Letter> letters)
      : Word(genus, std::span<const Letter>(letters.begin(), letters.size())) {}

  int genus() const { return genus_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Sum of all exponents; even exactly when the loop is two-sided.
  int exponent_sum() const;
  /// Exponent sum of each generator (index 0 is x_1).
  std::vector<long long> abelianization() const;

  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.genus_ == b.genus_ && a.letters_ == b.letters_;
  }
  friend bool operator<(const Word& a, const Word& b);

 private:
  int genus_ = 0;
  std::vector<Letter> letters_;
};

/// Parses the token grammar `x<i>` / `x<i>^-1`, separated by spaces.
Word parse_word(std::string_view text, int genus);

Word concat(const Word& u, const Word& v);
Word invert(const Word& w);
/// Replaces each x_i by images[i-1] (and x_i^-1 by its inverse).
Word substitute(const Word& w, std::span<const Word> images);
/// Free reduction of an arbitrary letter sequence.
std::vector<Letter> free_reduce(std::span<const Letter> letters);

/// Conjugacy class of a word: the cyclically reduced representative and its
/// least rotation under letter_rank order.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(const Word& w);

  const Word& representative() const { return representative_; }
  const Word& canonical() const { return canonical_; }
  CyclicWord inverse() const { return CyclicWord(invert(representative_)); }
  std::string str() const { return canonical_.str(); }

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
    return a.canonical_ == b.canonical_;
  }

 private:
  Word representative_;
  Word canonical_;
};

/// Strips matching first/last letters until the word is cyclically reduced.
Word cyclic_reduce(const Word& w);
/// Least rotation of a cyclically reduced letter sequence (Booth).
std::vector<Letter> least_rotation(std::span<const Letter> letters);

bool is_conjugate(const Word& u, const Word& v);

}  // namespace mcg
