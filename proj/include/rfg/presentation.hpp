#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rfg/word.hpp"

namespace rfg {

struct Rational {
  long num = 1;
  long den = 6;
};

// Maximal repeated subword found during the overlap scan, with the relator
// whose length it is measured against.
struct PieceViolation {
  std::size_t relator_index;
  Word piece;
  std::size_t relator_length;
};

// Outcome of the small-cancellation overlap scan. A presentation is
// certified at lambda iff every piece is strictly shorter than
// lambda * (length of each relator it occurs in).
struct ScCheck {
  bool certified = false;
  Rational lambda;
  std::size_t max_piece = 0;
  std::vector<std::size_t> per_relator_max;
  std::optional<PieceViolation> violation;
};

// A finite presentation over an Alphabet. Relators are stored cyclically
// reduced; trivial relators are rejected. A presentation may carry a
// small-cancellation certificate, which unlocks the word problem.
class Presentation {
 public:
  Presentation(Alphabet alphabet, std::vector<Word> relators);
  static Presentation free_group(Alphabet alphabet);

  // Text format, round-trippable via print():
  //   # comment
  //   gens: a,b,c,d
  //   rels: [a,b][c,d], abab
  // Multiple "rels:" lines accumulate. A missing rels line means free.
  static Presentation parse(std::string_view text);
  std::string print() const;

  const Alphabet& alphabet() const { return alphabet_; }
  int rank() const { return alphabet_.rank(); }
  const std::vector<Word>& relators() const { return relators_; }
  bool is_free() const { return relators_.empty(); }

  // Runs the overlap scan and stores the certificate on success.
  // lambda must be at most 1/6 for the certificate to unlock is_trivial.
  ScCheck certify(Rational lambda = {1, 6});
  const std::optional<ScCheck>& certificate() const { return certificate_; }

  // All distinct cyclic rotations of the relators and their inverses.
  // Populated by certify(); used by the word problem routine.
  const std::vector<Word>& symmetrized_relators() const { return symmetrized_; }

 private:
  Alphabet alphabet_;
  std::vector<Word> relators_;
  std::optional<ScCheck> certificate_;
  std::vector<Word> symmetrized_;
};

// Overlap scan only; does not mutate the presentation.
ScCheck check_small_cancellation(const Presentation& p, Rational lambda = {1, 6});

// Word problem. Free presentations reduce and compare with the empty word.
// Presentations certified at lambda <= 1/6 run the length-reducing
// replacement loop, which is a decision procedure at that threshold.
// Anything else throws UnsupportedError rather than guessing.
bool is_trivial(const Word& w, const Presentation& p);

// Canonical representatives (least in shortlex order) of the distinct
// nontrivial elements spelled by words of length <= radius.
struct Ball {
  unsigned radius = 0;
  std::vector<Word> elements;
};

Ball ball(const Presentation& p, unsigned radius, std::size_t budget = 1'000'000);

// Elements reachable by products of at most `radius` factors drawn from the
// given words and their inverses. Free presentations only.
std::vector<Word> ball_over(const Presentation& p, const std::vector<Word>& generators,
                            unsigned radius, std::size_t budget = 1'000'000);

}  // namespace rfg
