#include "rfg/homomorphism.hpp"

#include <cstdlib>

#include "rfg/errors.hpp"

namespace rfg {

GroupElement evaluate_word(const TargetGroup& target, const std::vector<GroupElement>& images,
                           const Word& w) {
  if (w.max_generator() > static_cast<int>(images.size()))
    throw InputError("word uses a generator with no image");
  GroupElement acc = target.identity();
  for (Letter l : w.letters()) {
    const GroupElement& img = images[static_cast<std::size_t>(std::abs(l)) - 1];
    acc = ge_mul(acc, l > 0 ? img : ge_inverse(img));
  }
  return acc;
}

GroupElement evaluate(const Homomorphism& h, const Word& w) {
  return evaluate_word(h.target, h.images, w);
}

bool is_homomorphism(const Presentation& p, const TargetGroup& target,
                     const std::vector<GroupElement>& images) {
  if (images.size() != static_cast<std::size_t>(p.rank()))
    throw InputError("expected one image per generator");
  for (const Word& r : p.relators())
    if (!ge_is_identity(evaluate_word(target, images, r))) return false;
  return true;
}

Homomorphism make_homomorphism(Presentation p, TargetGroup target,
                               std::vector<GroupElement> images) {
  if (!is_homomorphism(p, target, images))
    throw ConstructionError("images do not satisfy the relators");
  return Homomorphism{std::move(p), std::move(target), std::move(images)};
}

}  // namespace rfg
