#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rfg/bigint.hpp"
#include "rfg/target_group.hpp"

namespace rfg {

// Families of finite groups with tabulated order, largest-element-order, and
// projective-rank data.  Classical Lie types are indexed by untwisted rank n
// and field size q, Alt by degree, CyclicPrime by the prime itself.
enum class Family {
  Alt,
  GL,
  A,        // PSL(n+1, q), n >= 1
  TwoA,     // PSU(n+1, q), n >= 2
  B,        // POmega(2n+1, q), n >= 2
  C,        // PSp(2n, q), n >= 3
  D,        // POmega+(2n, q), n >= 4
  TwoD,     // POmega-(2n, q), n >= 4
  E6,
  E7,
  E8,
  F4,
  G2,
  TwoE6,
  ThreeD4,
  TwoB2,    // Suzuki, q = 2^(2j+1)
  TwoG2,    // Ree, q = 3^(2j+1)
  TwoF4,    // Ree, q = 2^(2j+1)
  CyclicPrime,
  Sporadic,
};

struct FamilyId {
  Family family = Family::Sporadic;
  long n = 0;   // rank or degree; ignored by exceptional, cyclic, sporadic
  long q = 0;   // field size or prime; ignored by Alt and Sporadic
};

// "C(4,3)", "Alt(7)", "E8(5)", "2B2(8)", "Cyclic(7)", "Sporadic".
std::string family_name(const FamilyId& id);
FamilyId parse_family(const std::string& text);

// Exponent bracket q^lo < value < q^hi.  Approximate rows record a single
// exponent (lo == hi) and certify neither side.
struct ExpBound {
  long lo = 0;
  long hi = 0;
  bool approx = false;
};

// Integer invariant known exactly, bracketed inclusively, or conditionally
// unavailable; note says which parameters are excluded.
struct RankValue {
  std::optional<long> exact;
  std::optional<std::pair<long, long>> range;
  std::string note;
};

struct AtlasEntry {
  FamilyId family;
  bool simple = true;                    // false only for GL
  std::optional<BigInt> order_exact;     // closed form where one is implemented
  std::optional<ExpBound> order_bound;   // exponent bracket over q
  std::optional<BigInt> m1_exact;        // GL and cyclic entries only
  std::optional<ExpBound> m1_bound;
  std::optional<double> m1_log_approx;   // Alt only: log m1 ~ sqrt(n log n)
  RankValue r;                           // projective rank; unset for GL
  RankValue r_fl;                        // [n-2, n] for GL, [r, r^2] otherwise
  std::string notes;
};

// Largest-element-order growth quotient log|G| / log m1(G) together with the
// family's displayed bracket.  Natural logs; the quotient is base-free.
struct RatioReport {
  FamilyId family;
  std::optional<double> exact;   // set when |G| and m1 are exactly known
  std::optional<double> lower;
  std::optional<double> upper;
  bool lower_strict = true;
  bool upper_strict = true;
  bool approx = false;           // bracket carries unspecified constants
  std::optional<bool> passes;    // exact value sits inside the bracket
};

struct BoundCheck {
  std::string quantity;          // "order" or "max element order"
  BigInt value;
  BigInt lower;                  // 0 when the exponent is negative
  BigInt upper;
  bool lower_ok = false;
  bool upper_ok = false;
};

// Violations are reported, never asserted: the tabulated brackets are coarse
// and fail on known small-q corners.
struct InequalityReport {
  FamilyId family;
  std::vector<BoundCheck> checks;
  std::vector<std::string> skipped;  // quantities with nothing to compare
  bool all_ok = true;
};

struct EmbeddingReport {
  std::string group;             // name of the embedded group
  long psl_rank = 0;
  long psl_field = 0;
  long exponent = 0;             // D with |PSL| <= |G|^D
  bool identity_embedding = false;
  BigInt group_order;
  BigInt psl_order;
  bool order_ok = false;         // the exponent check, verified exactly
  std::string note;
};

AtlasEntry atlas_entry(const FamilyId& id);

RatioReport ratio(const FamilyId& id, std::size_t scan_budget = 1'000'000);

InequalityReport verify_family_inequalities(const FamilyId& id,
                                            std::size_t scan_budget = 1'000'000);

// Largest rank whose ratio lower bound stays at most C, mapped through the
// family's worst-case r value over q; 0 when even the minimal rank exceeds C.
// Defined for the solvable-bracket families Alt, GL, A..2D only.
long family_rank_bound(Family f, double C);

// R such that any tabulated group with log|G|/log m1(G) <= C has projective
// rank (field-and-rank bound for GL) at most R.  Includes the constant 248
// for exceptional and cyclic families always, 196883 when sporadics opt in.
long bounded_rank_threshold(double C, bool include_sporadic = false);

// Receiving PSL parameters and the certified exponent for one simple group;
// rank_cap is the uniform bound the embedding family must respect.
EmbeddingReport psl_embedding_bookkeeping(const TargetGroup& g, long rank_cap);

// Exact orders of the classical projective groups, used for bound audits.
BigInt psu_order(long n, long q);           // PSU(n, q), n >= 3
BigInt psp_order(long n, long q);           // PSp(2n, q), n >= 2
BigInt pomega_odd_order(long n, long q);    // POmega(2n+1, q), n >= 2
BigInt pomega_plus_order(long n, long q);   // POmega+(2n, q), n >= 2
BigInt pomega_minus_order(long n, long q);  // POmega-(2n, q), n >= 2

}  // namespace rfg
