#include "orbistruct/permutation.hpp"

#include <numeric>
#include <string>

#include "orbistruct/errors.hpp"

namespace orbistruct {

Permutation::Permutation(unsigned degree) : images_(degree) {
  if (degree == 0)
    throw validation_error("permutation degree must be positive");
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  if (images_.empty())
    throw validation_error("permutation degree must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (unsigned image : images_) {
    if (image >= images_.size() || seen[image])
      throw validation_error("image array is not a permutation of 0.." +
                             std::to_string(images_.size() - 1));
    seen[image] = true;
  }
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < degree(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> inv(images_.size());
  for (unsigned i = 0; i < degree(); ++i)
    inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::extended(unsigned new_degree) const {
  if (new_degree < degree())
    throw validation_error("cannot extend a permutation to a smaller degree");
  std::vector<unsigned> images = images_;
  images.reserve(new_degree);
  for (unsigned i = degree(); i < new_degree; ++i)
    images.push_back(i);
  return Permutation(std::move(images));
}

unsigned Permutation::order() const {
  unsigned result = 1;
  for (const auto& cycle : cycles())
    result = std::lcm<unsigned>(result, static_cast<unsigned>(cycle.size()));
  return result;
}

std::vector<std::vector<unsigned>> Permutation::cycles() const {
  std::vector<std::vector<unsigned>> result;
  std::vector<bool> used(degree(), false);
  for (unsigned start = 0; start < degree(); ++start) {
    if (used[start] || images_[start] == start)
      continue;
    std::vector<unsigned> cycle;
    for (unsigned i = start; !used[i]; i = images_[i]) {
      cycle.push_back(i);
      used[i] = true;
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw validation_error("compose: degree mismatch (" + std::to_string(p.degree()) +
                           " vs " + std::to_string(q.degree()) + ")");
  std::vector<unsigned> images(p.degree());
  for (unsigned i = 0; i < p.degree(); ++i)
    images[i] = p(q(i));
  return Permutation(std::move(images));
}

Permutation conjugated(const Permutation& q, const Permutation& p) {
  return compose(compose(p, q), p.inverse());
}

} // namespace orbistruct
