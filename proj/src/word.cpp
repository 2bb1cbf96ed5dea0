#include "mcg/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mcg/error.hpp"

namespace mcg {

std::vector<Letter> free_reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word::Word(int genus, std::span<const Letter> letters) : genus_(genus) {
  for (Letter l : letters) {
    if (l == 0 || generator_of(l) > genus) {
      throw Error(ErrorCode::out_of_range,
                  "generator index " + std::to_string(generator_of(l)) +
                      " outside 1.." + std::to_string(genus));
    }
  }
  letters_ = free_reduce(letters);
}

int Word::exponent_sum() const {
  int sum = 0;
  for (Letter l : letters_) sum += l > 0 ? 1 : -1;
  return sum;
}

std::vector<long long> Word::abelianization() const {
  std::vector<long long> v(static_cast<std::size_t>(genus_), 0);
  for (Letter l : letters_) v[generator_of(l) - 1] += l > 0 ? 1 : -1;
  return v;
}

std::string Word::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) os << ' ';
    os << 'x' << generator_of(letters_[k]);
    if (letters_[k] < 0) os << "^-1";
  }
  return os.str();
}

bool operator<(const Word& a, const Word& b) {
  if (a.genus_ != b.genus_) return a.genus_ < b.genus_;
  return std::lexicographical_compare(
      a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
      b.letters_.end(),
      [](Letter x, Letter y) { return letter_rank(x) < letter_rank(y); });
}

Word parse_word(std::string_view text, int genus) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  const std::size_t n = text.size();
  while (pos < n) {
    if (text[pos] == ' ' || text[pos] == '\t') {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::parse, "malformed token at position " +
                                         std::to_string(start) + ": " + why);
    };
    if (text[pos] != 'x') throw fail("expected 'x'");
    ++pos;
    std::size_t digits = pos;
    while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (digits == pos) throw fail("expected generator index");
    if (pos - digits > 6) throw fail("generator index too long");
    const int index = std::stoi(std::string(text.substr(digits, pos - digits)));
    int sign = 1;
    if (pos < n && text[pos] == '^') {
      if (text.substr(pos, 3) != "^-1") throw fail("only ^-1 is allowed");
      sign = -1;
      pos += 3;
    }
    if (pos < n && text[pos] != ' ' && text[pos] != '\t') {
      throw fail("unexpected character");
    }
    if (index < 1 || index > genus) {
      throw Error(ErrorCode::out_of_range,
                  "generator x" + std::to_string(index) + " outside 1.." +
                      std::to_string(genus));
    }
    letters.push_back(sign * index);
  }
  return Word(genus, letters);
}

Word concat(const Word& u, const Word& v) {
  if (u.genus() != v.genus()) {
    throw Error(ErrorCode::genus_mismatch, "concat of words over F_" +
                                               std::to_string(u.genus()) +
                                               " and F_" +
                                               std::to_string(v.genus()));
  }
  std::vector<Letter> all(u.letters());
  all.insert(all.end(), v.letters().begin(), v.letters().end());
  return Word(u.genus(), all);
}

Word invert(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : out) l = -l;
  return Word(w.genus(), out);
}

Word substitute(const Word& w, std::span<const Word> images) {
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    const Word& img = images[static_cast<std::size_t>(generator_of(l) - 1)];
    if (l > 0) {
      for (Letter m : img.letters()) {
        if (!out.empty() && out.back() == -m) out.pop_back();
        else out.push_back(m);
      }
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        const Letter m = -*it;
        if (!out.empty() && out.back() == -m) out.pop_back();
        else out.push_back(m);
      }
    }
  }
  int genus = w.genus();
  if (!images.empty()) genus = images.front().genus();
  return Word(genus, out);
}

Word cyclic_reduce(const Word& w) {
  const auto& l = w.letters();
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.genus(), std::span<const Letter>(l.data() + lo, hi - lo));
}

std::vector<Letter> least_rotation(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n == 0) return {};
  // Booth's algorithm on the doubled sequence.
  std::vector<int> key(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) key[i] = letter_rank(s[i % n]);
  std::vector<long> fail(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    long i = fail[j - k - 1];
    while (i != -1 && key[j] != key[k + static_cast<std::size_t>(i) + 1]) {
      if (key[j] < key[k + static_cast<std::size_t>(i) + 1]) {
        k = j - static_cast<std::size_t>(i) - 1;
      }
      i = fail[static_cast<std::size_t>(i)];
    }
    if (i == -1 && key[j] != key[k + static_cast<std::size_t>(i) + 1]) {
      if (key[j] < key[k]) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  std::vector<Letter> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = s[(k + i) % n];
  return out;
}

CyclicWord::CyclicWord(const Word& w)
    : representative_(cyclic_reduce(w)),
      canonical_(w.genus(), least_rotation(representative_.letters())) {}

bool is_conjugate(const Word& u, const Word& v) {
  if (u.genus() != v.genus()) {
    throw Error(ErrorCode::genus_mismatch, "conjugacy test across genera");
  }
  return CyclicWord(u) == CyclicWord(v);
}

}  // namespace mcg
