#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcg/automorphism.hpp"

namespace mcg {

/// Action on H_1(N_{g,1}; Z) = Z^g in the basis [x_1], ..., [x_g]. Entries are
/// 64-bit with every operation overflow-checked, so results are exact or an
/// Error(internal) is raised.
class HomologyMatrix {
 public:
  explicit HomologyMatrix(int n);
  static HomologyMatrix identity(int n);

  int size() const { return n_; }
  std::int64_t at(int r, int c) const { return e_[idx(r, c)]; }
  void set(int r, int c, std::int64_t v) { e_[idx(r, c)] = v; }

  /// Fraction-free Gaussian elimination (Bareiss).
  std::int64_t determinant() const;

  /// Row-major block, one row per line.
  std::string text() const;
  /// `g; r1c1,r1c2,...;r2c1,...`
  std::string line() const;

  friend HomologyMatrix operator*(const HomologyMatrix& a, const HomologyMatrix& b);
  friend bool operator==(const HomologyMatrix&, const HomologyMatrix&) = default;

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(c);
  }
  int n_;
  std::vector<std::int64_t> e_;
};

class Mod2Matrix {
 public:
  explicit Mod2Matrix(int n);
  static Mod2Matrix identity(int n);

  int size() const { return n_; }
  int at(int r, int c) const { return e_[idx(r, c)]; }
  void set(int r, int c, int v) { e_[idx(r, c)] = static_cast<std::uint8_t>(v & 1); }

  std::vector<int> apply(const std::vector<int>& v) const;
  std::string text() const;

  friend Mod2Matrix operator*(const Mod2Matrix& a, const Mod2Matrix& b);
  friend bool operator==(const Mod2Matrix&, const Mod2Matrix&) = default;

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(c);
  }
  int n_;
  std::vector<std::uint8_t> e_;
};

/// Column i holds the exponent sums of images(x_i); abelianize(p o q) equals
/// abelianize(p) * abelianize(q).
HomologyMatrix abelianize(const Automorphism& a);
Mod2Matrix mod2(const HomologyMatrix& m);

/// Expected mod-2 action of a twist along a two-sided curve with class v:
/// x -> x + (x . v) v, where . is the standard form on (Z/2)^g.
Mod2Matrix mod2_transvection(const std::vector<int>& v);

}  // namespace mcg
