#include "mcg/automorphism.hpp"

#include "mcg/error.hpp"

namespace mcg {

Automorphism Automorphism::identity(int genus) {
  Automorphism a;
  for (int i = 1; i <= genus; ++i) {
    a.images_.push_back(Word(genus, {i}));
  }
  a.inverse_images_ = a.images_;
  return a;
}

bool inverse_pair(std::span<const Word> images,
                  std::span<const Word> inverse_images) {
  if (images.size() != inverse_images.size()) return false;
  const int genus = static_cast<int>(images.size());
  for (int i = 1; i <= genus; ++i) {
    const Word x(genus, {i});
    if (substitute(substitute(x, inverse_images), images) != x) return false;
    if (substitute(substitute(x, images), inverse_images) != x) return false;
  }
  return true;
}

Automorphism::Automorphism(std::vector<Word> images,
                           std::vector<Word> inverse_images)
    : images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
  const int g = static_cast<int>(images_.size());
  for (const auto& w : images_) {
    if (w.genus() != g) throw Error(ErrorCode::genus_mismatch, "image genus");
  }
  for (const auto& w : inverse_images_) {
    if (w.genus() != g) throw Error(ErrorCode::genus_mismatch, "image genus");
  }
  if (!inverse_pair(images_, inverse_images_)) {
    throw Error(ErrorCode::validation,
                "inverse images do not invert the images");
  }
}

Automorphism Automorphism::inverse() const {
  Automorphism a;
  a.images_ = inverse_images_;
  a.inverse_images_ = images_;
  return a;
}

std::optional<int> Automorphism::first_difference(
    const Automorphism& other) const {
  const std::size_t n = std::min(images_.size(), other.images_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (images_[i] != other.images_[i]) return static_cast<int>(i + 1);
  }
  if (images_.size() != other.images_.size()) return static_cast<int>(n + 1);
  return std::nullopt;
}

Automorphism compose(const Automorphism& p, const Automorphism& q) {
  if (p.genus() != q.genus()) {
    throw Error(ErrorCode::genus_mismatch, "composing across genera");
  }
  Automorphism r;
  r.images_.reserve(q.images().size());
  for (const auto& w : q.images()) r.images_.push_back(p.apply(w));
  for (const auto& w : p.inverse_images()) r.inverse_images_.push_back(q.apply_inverse(w));
  return r;
}

bool equal(const Automorphism& p, const Automorphism& q) {
  return p.genus() == q.genus() && p == q;
}

}  // namespace mcg
