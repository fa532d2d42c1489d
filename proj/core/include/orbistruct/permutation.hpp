#ifndef ORBISTRUCT_PERMUTATION_HPP
#define ORBISTRUCT_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <vector>

namespace orbistruct {

/// A permutation of {0, ..., degree-1} in image-array form.
///
/// Points are 0-based in memory. All text I/O (cycle notation, reports)
/// is 1-based; the conversion lives in the notation layer and never leaks
/// into this type.
///
/// Immutable after construction; the constructor rejects anything that is
/// not a bijection.
class Permutation {
public:
  /// Identity on `degree` points.
  explicit Permutation(unsigned degree);

  /// From an image array: `images[i]` is the image of point i.
  explicit Permutation(std::vector<unsigned> images);

  static Permutation identity(unsigned degree) { return Permutation(degree); }

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }

  /// Image of a point.
  unsigned operator()(unsigned point) const { return images_[point]; }

  const std::vector<unsigned>& images() const { return images_; }

  bool is_identity() const;

  Permutation inverse() const;

  /// Same mapping on `new_degree >= degree()` points, fixing the new ones.
  Permutation extended(unsigned new_degree) const;

  /// Multiplicative order.
  unsigned order() const;

  /// Nontrivial cycles, each rotated to start at its smallest point and
  /// sorted by that point. Identity yields an empty list.
  std::vector<std::vector<unsigned>> cycles() const;

  /// Lexicographic on (degree, images); the canonical element order used
  /// for group element sets, coset representatives and reports.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<unsigned> images_;
};

/// compose(p, q) applies q first: result(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

/// p q p^-1.
Permutation conjugated(const Permutation& q, const Permutation& p);

} // namespace orbistruct

#endif // ORBISTRUCT_PERMUTATION_HPP
