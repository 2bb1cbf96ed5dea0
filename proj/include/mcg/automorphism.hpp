#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mcg/word.hpp"

namespace mcg {

/// Automorphism of F_g stored with the images of the generators and of their
/// inverses. Construction checks that the two tables are mutually inverse.
class Automorphism {
 public:
  static Automorphism identity(int genus);

  /// Throws Error(validation) if images and inverse_images are not inverse.
  Automorphism(std::vector<Word> images, std::vector<Word> inverse_images);

  int genus() const { return static_cast<int>(images_.size()); }
  const std::vector<Word>& images() const { return images_; }
  const std::vector<Word>& inverse_images() const { return inverse_images_; }

  Word apply(const Word& w) const { return substitute(w, images_); }
  Word apply_inverse(const Word& w) const {
    return substitute(w, inverse_images_);
  }

  Automorphism inverse() const;

  /// Index (1-based) of the first generator whose image differs, if any.
  std::optional<int> first_difference(const Automorphism& other) const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.images_ == b.images_;
  }

 private:
  Automorphism() = default;
  // Composition of two checked automorphisms is an inverse pair by
  // construction, so compose() skips the check.
  friend Automorphism compose(const Automorphism& p, const Automorphism& q);

  std::vector<Word> images_;
  std::vector<Word> inverse_images_;
};

/// Functional composition: (p * q)(w) = p(q(w)).
Automorphism compose(const Automorphism& p, const Automorphism& q);

bool equal(const Automorphism& p, const Automorphism& q);

/// True when images and inverse images compose to the identity both ways.
bool inverse_pair(std::span<const Word> images,
                  std::span<const Word> inverse_images);

}  // namespace mcg
