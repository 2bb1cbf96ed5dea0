#include "mcg/homology.hpp"

#include <sstream>
#include <utility>

#include "mcg/error.hpp"

namespace mcg {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::internal, "integer overflow in homology arithmetic");
  }
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::internal, "integer overflow in homology arithmetic");
  }
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(ErrorCode::internal, "integer overflow in homology arithmetic");
  }
  return r;
}

}  // namespace

HomologyMatrix::HomologyMatrix(int n)
    : n_(n), e_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

HomologyMatrix HomologyMatrix::identity(int n) {
  HomologyMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

HomologyMatrix operator*(const HomologyMatrix& a, const HomologyMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::genus_mismatch, "matrix size mismatch");
  HomologyMatrix m(a.n_);
  for (int r = 0; r < a.n_; ++r) {
    for (int c = 0; c < a.n_; ++c) {
      std::int64_t s = 0;
      for (int k = 0; k < a.n_; ++k) s = checked_add(s, checked_mul(a.at(r, k), b.at(k, c)));
      m.set(r, c, s);
    }
  }
  return m;
}

std::int64_t HomologyMatrix::determinant() const {
  if (n_ == 0) return 1;
  std::vector<std::int64_t> m = e_;
  auto at = [&](int r, int c) -> std::int64_t& { return m[idx(r, c)]; };
  int sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k < n_ - 1; ++k) {
    if (at(k, k) == 0) {
      int p = k + 1;
      while (p < n_ && at(p, k) == 0) ++p;
      if (p == n_) return 0;
      for (int c = 0; c < n_; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n_; ++r) {
      for (int c = k + 1; c < n_; ++c) {
        const std::int64_t num =
            checked_sub(checked_mul(at(r, c), at(k, k)), checked_mul(at(r, k), at(k, c)));
        at(r, c) = num / prev;  // exact by Sylvester's identity
      }
      at(r, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(n_ - 1, n_ - 1);
}

std::string HomologyMatrix::text() const {
  std::ostringstream os;
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) {
      if (c) os << ' ';
      os << at(r, c);
    }
    os << '\n';
  }
  return os.str();
}

std::string HomologyMatrix::line() const {
  std::ostringstream os;
  os << n_ << ';';
  for (int r = 0; r < n_; ++r) {
    os << (r ? ";" : " ");
    for (int c = 0; c < n_; ++c) {
      if (c) os << ',';
      os << at(r, c);
    }
  }
  return os.str();
}

Mod2Matrix::Mod2Matrix(int n)
    : n_(n), e_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

Mod2Matrix Mod2Matrix::identity(int n) {
  Mod2Matrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mod2Matrix operator*(const Mod2Matrix& a, const Mod2Matrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::genus_mismatch, "matrix size mismatch");
  Mod2Matrix m(a.n_);
  for (int r = 0; r < a.n_; ++r) {
    for (int c = 0; c < a.n_; ++c) {
      int s = 0;
      for (int k = 0; k < a.n_; ++k) s ^= a.at(r, k) & b.at(k, c);
      m.set(r, c, s);
    }
  }
  return m;
}

std::vector<int> Mod2Matrix::apply(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != n_) {
    throw Error(ErrorCode::genus_mismatch, "vector size mismatch");
  }
  std::vector<int> out(v.size(), 0);
  for (int r = 0; r < n_; ++r) {
    int s = 0;
    for (int c = 0; c < n_; ++c) s ^= at(r, c) & (v[static_cast<std::size_t>(c)] & 1);
    out[static_cast<std::size_t>(r)] = s;
  }
  return out;
}

std::string Mod2Matrix::text() const {
  std::ostringstream os;
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) os << (c ? " " : "") << at(r, c);
    os << '\n';
  }
  return os.str();
}

HomologyMatrix abelianize(const Automorphism& a) {
  const int g = a.genus();
  HomologyMatrix m(g);
  for (int c = 0; c < g; ++c) {
    const auto col = a.images()[static_cast<std::size_t>(c)].abelianization();
    for (int r = 0; r < g; ++r) m.set(r, c, col[static_cast<std::size_t>(r)]);
  }
  return m;
}

Mod2Matrix mod2(const HomologyMatrix& m) {
  Mod2Matrix out(m.size());
  for (int r = 0; r < m.size(); ++r) {
    for (int c = 0; c < m.size(); ++c) {
      out.set(r, c, static_cast<int>(((m.at(r, c) % 2) + 2) % 2));
    }
  }
  return out;
}

Mod2Matrix mod2_transvection(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  Mod2Matrix m = Mod2Matrix::identity(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      m.set(r, c, m.at(r, c) ^ (v[static_cast<std::size_t>(r)] & v[static_cast<std::size_t>(c)] & 1));
    }
  }
  return m;
}

}  // namespace mcg
