#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rfg/homomorphism.hpp"
#include "rfg/presentation.hpp"
#include "rfg/target_group.hpp"
#include "rfg/word.hpp"

namespace rfg {

// Families of finite targets a detection ranges over. GL is every GL(n,q);
// SIMPLE is cyclic-of-prime-order, Alt(n >= 5), and simple PSL(n,q); ALL is
// the descriptor union of cyclic, dihedral, symmetric, alternating, GL, and
// simple PSL groups, a documented approximation of "all finite groups".
enum class TargetClass { All, GL, Simple };

std::string target_class_name(TargetClass c);
TargetClass parse_target_class(const std::string& text);

struct TargetCatalog {
  TargetClass cls = TargetClass::All;
  long order_limit = 2;
  // Sorted by (order, kind, q, n); catalogs with smaller limits are prefixes
  // of catalogs with larger ones.
  std::vector<TargetGroup> groups;
};

TargetCatalog build_catalog(TargetClass cls, long order_limit);

// Every generator-image tuple satisfying the relators, in odometer order
// over each group's element list (rightmost generator varies fastest).
// Throws a resource error when |g|^rank exceeds the budget.
std::vector<Homomorphism> enumerate_homs(const Presentation& p, const TargetGroup& g,
                                         std::size_t budget = 10'000'000);

struct DetectionResult {
  Word gamma;
  // Order of the detecting group; equal to the catalog limit when exhausted,
  // in which case it is only a lower bound for the true value.
  long order = 0;
  // Maps gamma to a non-identity element; absent iff exhausted.
  std::optional<Homomorphism> witness;
  bool exhausted = false;
  // Set when the catalog provably contains a minimal detector of gamma's
  // class, so `order` is the true detection value rather than an upper bound.
  bool exact = false;
};

// First catalog group admitting a homomorphism that keeps gamma alive.
// Projective targets work with matrix classes, so surviving means the image
// is not a scalar class.
DetectionResult detect(const Word& gamma, const Presentation& p, const TargetCatalog& cat,
                       std::size_t hom_budget = 10'000'000);

struct GrowthRow {
  long m = 0;
  long value = 0;
  Word argmax;
  std::string witness_group;
  // The row value is a lower bound ">= value": some element of the ball has
  // no detection within the catalog limit.
  bool exhausted = false;
  bool exact = false;
};

struct GrowthTable {
  TargetClass cls = TargetClass::All;
  long order_limit = 0;
  std::vector<GrowthRow> rows;  // rows[m-1].m == m, values nondecreasing
};

// Row m is the largest detection value over nontrivial elements of the ball
// of radius m, with the shortlex-first argmax. Detections are cached per
// canonical element and may run on jobs threads; the table is the same for
// every jobs value.
GrowthTable growth(const Presentation& p, unsigned max_length, const TargetCatalog& cat,
                   std::size_t ball_budget = 1'000'000, std::size_t hom_budget = 10'000'000,
                   std::size_t jobs = 1);

// Same table measured in the word metric of the given generating set
// (free presentations only).
GrowthTable growth_over(const Presentation& p, const std::vector<Word>& generators,
                        unsigned max_length, const TargetCatalog& cat,
                        std::size_t ball_budget = 1'000'000,
                        std::size_t hom_budget = 10'000'000, std::size_t jobs = 1);

// Checks f(m) <= c * g(c*m) on every row of f with c*m inside g's range.
// Throws an input error when no row is checkable.
bool growth_precedes(const GrowthTable& f, const GrowthTable& g, long c);

struct ComparisonRow {
  long m = 0;
  long all_value = 0;
  long gl_value = 0;
  long simple_value = 0;
  bool ok = false;
};

struct ClassComparison {
  GrowthTable all;
  GrowthTable gl;
  GrowthTable simple;
  std::vector<ComparisonRow> rows;
  bool ok = true;  // ALL <= GL and ALL <= SIMPLE held on every computed row
};

// The three catalogs must carry their namesake classes and a shared limit.
ClassComparison compare_classes(const Presentation& p, unsigned max_length,
                                const TargetCatalog& all_cat, const TargetCatalog& gl_cat,
                                const TargetCatalog& simple_cat,
                                std::size_t ball_budget = 1'000'000,
                                std::size_t hom_budget = 10'000'000, std::size_t jobs = 1);

struct RatioPoint {
  long j = 0;
  std::size_t eta_length = 0;
  // ||eta_j|| / (||gamma0|| j^3)
  double fitted_cubic = 0.0;
  long detected_order = 0;
  std::string witness_group;
  // Order of the witness image of gamma0; at least j+1 whenever the common
  // multiple survives.
  unsigned long image_order = 0;
  // log |G_j| / log m1(G_j) for the witness group.
  double ratio = 0.0;
  bool exhausted = false;
  bool exact = false;  // the detection's exactness flag
};

struct RatioCurve {
  std::vector<RatioPoint> points;
  bool truncated = false;  // a detection exhausted the catalog; later j skipped
};

// For j = 2..jmax: builds the power set T_j over (gamma, gamma0), constructs
// its common multiple, detects it in the catalog (GL or SIMPLE only), and
// records the length, the fitted cubic constant, and the order ratio.
RatioCurve ratio_experiment(const Word& gamma, const Word& gamma0, long jmax, long kmax,
                            const Presentation& p, const TargetCatalog& cat,
                            std::size_t hom_budget = 10'000'000);

}  // namespace rfg
