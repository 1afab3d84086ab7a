#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rfg/homomorphism.hpp"
#include "rfg/presentation.hpp"
#include "rfg/word.hpp"

namespace rfg {

// One signed conjugated copy of a base word: conjugator^-1 base^sign conjugator.
struct ConjugateFactor {
  Word conjugator;
  int sign = 1;  // +1 or -1
};

// Certificate of normal-closure membership. The factor product, freely
// reduced, is the witnessed word, so checking costs one reduction.
struct ConjugateProduct {
  Word base;
  std::vector<ConjugateFactor> factors;
};

Word evaluate_conjugate_product(const ConjugateProduct& cp);

// A nontrivial word lying in the normal closure of every element of t_set,
// carrying one checkable certificate per element.
struct CommonMultiple {
  Word word;
  std::vector<Word> t_set;
  std::vector<ConjugateProduct> witnesses;  // parallel to t_set
  long radius = 0;  // largest conjugator length the construction needed
};

// Least (shortlex) mu with |mu| <= k_max such that [mu^-1 gamma mu, eta]
// is nontrivial in p.
Word find_conjugator(const Word& gamma, const Word& eta, long k_max,
                     const Presentation& p);

// Pads t_set to a power of two by repeating its last element, then pairs
// elements level by level, replacing each pair (x, y) by [mu^-1 x mu, y].
CommonMultiple common_multiple(const std::vector<Word>& t_set, long k_max,
                               const Presentation& p);

// True iff every witness reduces exactly to cm.word. On failure, names the
// first offending witness in *first_failure when given.
bool verify_witness(const CommonMultiple& cm, std::string* first_failure = nullptr);

struct TransferReport {
  bool vacuous = false;    // the hom kills the common multiple
  bool pass = false;       // every t_set element survives the hom
  std::size_t checked = 0;
};

// If h keeps cm.word alive, every element of t_set must stay alive too.
TransferReport certificate_transfer_check(const CommonMultiple& cm,
                                          const Homomorphism& h);

// {[mu0^-1 gamma mu0, gamma0], gamma0^2, ..., gamma0^j}; exactly j elements.
struct TjSet {
  Word gamma;
  Word gamma0;
  Word mu0;
  long j = 0;
  std::vector<Word> elements;
};

TjSet build_tj(const Word& gamma, const Word& gamma0, long j, long k_max,
               const Presentation& p);

struct LcmAudit {
  std::size_t d = 0;       // longest element of t_set
  std::size_t t = 0;       // element count
  std::size_t length = 0;  // common multiple length
  double fitted = 0.0;     // length / (d t^2)
  double cap = 0.0;        // 8 (k_max + 1) d t^2
};

// Checks the construction's length growth against the quadratic cap; a
// violation means the recursion itself is buggy.
LcmAudit lcm_length_audit(const std::vector<Word>& t_set,
                          const CommonMultiple& cm, long k_max);

}  // namespace rfg
