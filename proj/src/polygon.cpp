#include "mcg/polygon.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "mcg/error.hpp"

namespace mcg {

CrossingSequence crossings_of(const Word& w) {
  CrossingSequence seq;
  seq.reserve(w.size());
  for (Letter l : w.letters()) seq.push_back({generator_of(l), l > 0 ? 1 : -1});
  return seq;
}

Word word_of(const CrossingSequence& seq, int genus) {
  std::vector<Letter> letters;
  letters.reserve(seq.size());
  for (const auto& c : seq) letters.push_back(c.sign * c.arc);
  return Word(genus, letters);
}

std::string format_crossings(const CrossingSequence& seq) {
  std::ostringstream os;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k) os << ',';
    os << 'A' << seq[k].arc << (seq[k].sign > 0 ? '+' : '-');
  }
  return os.str();
}

CrossingSequence parse_crossings(std::string_view text, int genus) {
  CrossingSequence seq;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    if (text[pos] != 'A') {
      throw Error(ErrorCode::parse, "expected A<i>+ or A<i>- at position " +
                                        std::to_string(start));
    }
    ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (digits == pos || pos >= text.size() ||
        (text[pos] != '+' && text[pos] != '-') || pos - digits > 6) {
      throw Error(ErrorCode::parse, "malformed crossing token at position " +
                                        std::to_string(start));
    }
    const int arc = std::stoi(std::string(text.substr(digits, pos - digits)));
    if (arc < 1 || arc > genus) {
      throw Error(ErrorCode::out_of_range,
                  "arc A" + std::to_string(arc) + " outside 1.." +
                      std::to_string(genus));
    }
    seq.push_back({arc, text[pos] == '+' ? 1 : -1});
    ++pos;
  }
  return seq;
}

std::vector<std::size_t> bigon_positions(const CrossingSequence& seq) {
  std::vector<std::size_t> out;
  const std::size_t k = seq.size();
  if (k < 2) return out;
  for (std::size_t j = 0; j < k; ++j) {
    const auto& a = seq[j];
    const auto& b = seq[(j + 1) % k];
    if (a.arc == b.arc && a.sign == -b.sign) out.push_back(j);
  }
  return out;
}

double ccw_distance(double a, double b, int genus) {
  const double period = polygon::side_count(genus);
  double d = std::fmod(b - a, period);
  if (d < 0) d += period;
  return d;
}

bool chords_cross(const Chord& a, const Chord& b) {
  const double lo = std::min(a.from, a.to);
  const double hi = std::max(a.from, a.to);
  const bool u = lo < b.from && b.from < hi;
  const bool v = lo < b.to && b.to < hi;
  return u != v;
}

namespace {

struct Strand {
  std::size_t curve;
  std::size_t index;     // crossing index in the curve as registered
  std::size_t position;  // index in the orientation where the crossing is +
  std::vector<int> forward;
  std::vector<int> backward;
};

int mod(int a, int m) {
  const int r = a % m;
  return r < 0 ? r + m : r;
}

// Keys whose lexicographic order is the order of strands along the arc
// (ascending parameter). At each step the first strand to leave D nearer
// counterclockwise sits higher on the arc; each shared chord flips the order.
std::vector<int> forward_key(const CrossingSequence& s, std::size_t j,
                             std::size_t length, int genus) {
  const int sides = polygon::side_count(genus);
  const std::size_t k = s.size();
  std::vector<int> key;
  key.reserve(length);
  int entry = polygon::entry_side(s[j]);
  for (std::size_t step = 1; step <= length; ++step) {
    const Crossing& next = s[(j + step) % k];
    const int d = mod(polygon::exit_side(next) - entry, sides);
    key.push_back(step % 2 ? -d : d);
    entry = polygon::entry_side(next);
  }
  return key;
}

std::vector<int> backward_key(const CrossingSequence& s, std::size_t j,
                              std::size_t length, int genus) {
  const int sides = polygon::side_count(genus);
  const std::size_t k = s.size();
  std::vector<int> key;
  key.reserve(length);
  int exit = polygon::exit_side(s[j]);
  for (std::size_t step = 1; step <= length; ++step) {
    const Crossing& prev = s[(j + k - step % k) % k];
    const int d = mod(polygon::entry_side(prev) - exit, sides);
    key.push_back(step % 2 ? -d : d);
    exit = polygon::exit_side(prev);
  }
  return key;
}

CrossingSequence reversed(const CrossingSequence& s) {
  CrossingSequence r(s.rbegin(), s.rend());
  for (auto& c : r) c.sign = -c.sign;
  return r;
}

}  // namespace

Realization::Realization(int genus, std::vector<CrossingSequence> curves)
    : genus_(genus), curves_(std::move(curves)) {
  std::size_t longest = 0;
  for (const auto& c : curves_) longest = std::max(longest, c.size());
  const std::size_t key_length = 2 * longest + 2;

  std::vector<std::vector<Strand>> by_arc(static_cast<std::size_t>(genus));
  for (std::size_t c = 0; c < curves_.size(); ++c) {
    const auto& s = curves_[c];
    const auto r = reversed(s);
    const std::size_t k = s.size();
    for (std::size_t j = 0; j < k; ++j) {
      if (s[j].arc < 1 || s[j].arc > genus) {
        throw Error(ErrorCode::out_of_range, "crossing with arc outside 1..g");
      }
      Strand st{c, j, j, {}, {}};
      const CrossingSequence* oriented = &s;
      if (s[j].sign < 0) {
        oriented = &r;
        st.position = k - 1 - j;
      }
      st.forward = forward_key(*oriented, st.position, key_length, genus);
      st.backward = backward_key(*oriented, st.position, key_length, genus);
      by_arc[static_cast<std::size_t>(s[j].arc - 1)].push_back(std::move(st));
    }
  }

  param_.resize(curves_.size());
  for (std::size_t c = 0; c < curves_.size(); ++c) {
    param_[c].assign(curves_[c].size(), 0.0);
  }
  on_arc_.assign(static_cast<std::size_t>(genus), 0);

  for (std::size_t a = 0; a < by_arc.size(); ++a) {
    auto& strands = by_arc[a];
    std::sort(strands.begin(), strands.end(),
              [](const Strand& p, const Strand& q) {
                if (p.forward != q.forward) return p.forward < q.forward;
                if (p.backward != q.backward) return p.backward < q.backward;
                // Parallel copies: alternate with position parity so that the
                // order flips across every shared chord.
                if (p.curve != q.curve) {
                  const bool p_first = p.curve < q.curve;
                  const Strand& low = p_first ? p : q;
                  const bool low_below = low.position % 2 == 0;
                  return p_first == low_below;
                }
                return p.position < q.position;
              });
    on_arc_[a] = strands.size();
    for (std::size_t r = 0; r < strands.size(); ++r) {
      param_[strands[r].curve][strands[r].index] =
          static_cast<double>(r + 1) / static_cast<double>(strands.size() + 1);
    }
  }

  chords_.resize(curves_.size());
  for (std::size_t c = 0; c < curves_.size(); ++c) {
    const auto& s = curves_[c];
    const std::size_t k = s.size();
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t n = (j + 1) % k;
      Chord ch;
      ch.curve = static_cast<int>(c);
      ch.index = j;
      ch.from = polygon::entry_side(s[j]) + param_[c][j];
      ch.to = polygon::exit_side(s[n]) + param_[c][n];
      chords_[c].push_back(ch);
    }
  }
}

int Realization::crossing_count(std::size_t c, std::size_t d) const {
  int count = 0;
  const auto& a = chords_[c];
  const auto& b = chords_[d];
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = (c == d ? i + 1 : 0); j < b.size(); ++j) {
      if (chords_cross(a[i], b[j])) ++count;
    }
  }
  return count;
}

}  // namespace mcg
