#pragma once

#include <vector>

#include "rfg/group_element.hpp"
#include "rfg/presentation.hpp"
#include "rfg/target_group.hpp"
#include "rfg/word.hpp"

namespace rfg {

// Map from a presented group into a finite target, given by one image per
// generator. Constructed only through make_homomorphism, which checks that
// every relator evaluates to the identity.
struct Homomorphism {
  Presentation source;
  TargetGroup target;
  std::vector<GroupElement> images;
};

// Product of generator images along w; the empty word gives the identity.
GroupElement evaluate_word(const TargetGroup& target, const std::vector<GroupElement>& images,
                           const Word& w);
GroupElement evaluate(const Homomorphism& h, const Word& w);

// True iff every relator of p maps to the identity.
bool is_homomorphism(const Presentation& p, const TargetGroup& target,
                     const std::vector<GroupElement>& images);

// Validating constructor; throws a construction error if images do not
// satisfy the relators.
Homomorphism make_homomorphism(Presentation p, TargetGroup target,
                               std::vector<GroupElement> images);

}  // namespace rfg
