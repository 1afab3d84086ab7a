#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "rfg/atlas.hpp"
#include "rfg/bigint.hpp"
#include "rfg/errors.hpp"
#include "rfg/target_group.hpp"

using namespace rfg;

namespace {

FamilyId fid(Family f, long n = 0, long q = 0) {
  FamilyId id;
  id.family = f;
  id.n = n;
  id.q = q;
  return id;
}

}  // namespace

TEST_CASE("family names round-trip through the parser") {
  std::vector<std::string> names = {"Alt(7)",  "GL(2,4)", "A(3,5)",  "2A(2,3)",
                                    "B(2,3)",  "C(4,3)",  "D(4,3)",  "2D(4,3)",
                                    "E8(5)",   "2B2(8)",  "2G2(3)",  "Cyclic(7)",
                                    "Sporadic"};
  for (const auto& s : names) {
    CHECK(family_name(parse_family(s)) == s);
  }
}

TEST_CASE("parser rejects malformed descriptors") {
  CHECK_THROWS_AS(parse_family("Q(2,3)"), InputError);
  CHECK_THROWS_AS(parse_family("GL(2)"), InputError);
  CHECK_THROWS_AS(parse_family("Alt(5,3)"), InputError);
  CHECK_THROWS_AS(parse_family("GL(2,x)"), InputError);
  CHECK_THROWS_AS(parse_family("GL(2,3"), InputError);
}

TEST_CASE("out-of-range parameters name the violated constraint") {
  CHECK_THROWS_AS(atlas_entry(fid(Family::Alt, 4)), DomainError);
  CHECK_THROWS_AS(atlas_entry(fid(Family::C, 2, 3)), DomainError);
  CHECK_THROWS_AS(atlas_entry(fid(Family::D, 3, 3)), DomainError);
  CHECK_THROWS_AS(atlas_entry(fid(Family::TwoA, 1, 3)), DomainError);
  CHECK_THROWS_AS(atlas_entry(fid(Family::GL, 2, 6)), DomainError);
  CHECK_THROWS_AS(atlas_entry(fid(Family::CyclicPrime, 0, 9)), DomainError);
  // Twisted families demand their defining characteristic and odd exponent.
  CHECK_THROWS_AS(atlas_entry(fid(Family::TwoB2, 0, 4)), DomainError);
  CHECK_THROWS_AS(atlas_entry(fid(Family::TwoB2, 0, 3)), DomainError);
  CHECK_THROWS_AS(atlas_entry(fid(Family::TwoG2, 0, 9)), DomainError);
  CHECK_THROWS_AS(atlas_entry(fid(Family::TwoF4, 0, 2 * 2)), DomainError);
}

TEST_CASE("classical projective order formulas hit known values") {
  CHECK(psu_order(3, 3) == 6048);
  CHECK(psu_order(4, 2) == 25920);
  CHECK(pomega_odd_order(2, 3) == 25920);  // B2(3) and 2A3(2) coincide
  CHECK(psp_order(2, 3) == 25920);
  CHECK(pomega_plus_order(4, 2) == 174182400);
  CHECK(pomega_minus_order(4, 2) == 197406720);
  CHECK(psp_order(2, 2) == 720);  // PSp(4,2) has symmetric-group size
  // Exceptional isomorphisms against the permutation-group formulas.
  CHECK(TargetGroup::psl(4, 2).order() == TargetGroup::alt(8).order());
  CHECK(TargetGroup::psl(2, 9).order() == TargetGroup::alt(6).order());
}

TEST_CASE("C-type entry carries the bracket and rank from the table") {
  AtlasEntry e = atlas_entry(fid(Family::C, 4, 3));
  REQUIRE(e.m1_bound.has_value());
  CHECK(e.m1_bound->lo == 2);
  CHECK(e.m1_bound->hi == 6);
  CHECK_FALSE(e.m1_bound->approx);
  REQUIRE(e.r.exact.has_value());
  CHECK(*e.r.exact == 8);
  REQUIRE(e.order_exact.has_value());
  CHECK(*e.order_exact == psp_order(4, 3));
  REQUIRE(e.r_fl.range.has_value());
  CHECK(e.r_fl.range->first == 8);
  CHECK(e.r_fl.range->second == 64);
  CHECK(e.simple);
}

TEST_CASE("E8 entry records the approximate exponents") {
  AtlasEntry e = atlas_entry(fid(Family::E8, 0, 7));
  REQUIRE(e.order_bound.has_value());
  CHECK(e.order_bound->lo == 248);
  CHECK(e.order_bound->hi == 248);
  CHECK(e.order_bound->approx);
  CHECK(e.m1_bound->lo == 8);
  REQUIRE(e.r.exact.has_value());
  CHECK(*e.r.exact == 248);
  CHECK_FALSE(e.order_exact.has_value());
}

TEST_CASE("sporadic bucket only knows the constant cap") {
  AtlasEntry e = atlas_entry(fid(Family::Sporadic));
  REQUIRE(e.r.range.has_value());
  CHECK(e.r.range->second == 196883);
  CHECK_FALSE(e.order_exact.has_value());
  RatioReport rr = ratio(fid(Family::Sporadic));
  REQUIRE(rr.upper.has_value());
  CHECK(*rr.upper == doctest::Approx(196883));
  CHECK_FALSE(rr.exact.has_value());
}

TEST_CASE("B-type rank depends on field parity and rank two") {
  CHECK(*atlas_entry(fid(Family::B, 3, 5)).r.exact == 7);
  CHECK(*atlas_entry(fid(Family::B, 3, 4)).r.exact == 6);
  CHECK(*atlas_entry(fid(Family::B, 2, 5)).r.exact == 4);
}

TEST_CASE("excluded parameter pairs leave the rank unavailable") {
  CHECK_FALSE(atlas_entry(fid(Family::A, 1, 4)).r.exact.has_value());
  CHECK_FALSE(atlas_entry(fid(Family::A, 1, 5)).r.exact.has_value());
  CHECK_FALSE(atlas_entry(fid(Family::A, 2, 2)).r.exact.has_value());
  CHECK(*atlas_entry(fid(Family::A, 1, 7)).r.exact == 2);
  CHECK_FALSE(atlas_entry(fid(Family::TwoA, 3, 2)).r.exact.has_value());
  CHECK_FALSE(atlas_entry(fid(Family::D, 4, 2)).r.exact.has_value());
  CHECK(*atlas_entry(fid(Family::D, 4, 3)).r.exact == 8);
  // Ree ranks are only listed away from exponent three.
  CHECK_FALSE(atlas_entry(fid(Family::TwoG2, 0, 27)).r.exact.has_value());
  CHECK(*atlas_entry(fid(Family::TwoG2, 0, 3)).r.exact == 7);
  CHECK(*atlas_entry(fid(Family::TwoF4, 0, 2)).r.exact == 26);
  CHECK_FALSE(atlas_entry(fid(Family::TwoF4, 0, 8)).r.exact.has_value());
}

TEST_CASE("alternating rank is exact only from degree nine") {
  AtlasEntry e7 = atlas_entry(fid(Family::Alt, 7));
  CHECK_FALSE(e7.r.exact.has_value());
  REQUIRE(e7.r.range.has_value());
  CHECK(e7.r.range->second == 5);
  AtlasEntry e9 = atlas_entry(fid(Family::Alt, 9));
  REQUIRE(e9.r.exact.has_value());
  CHECK(*e9.r.exact == 7);
  CHECK(*e9.order_exact == TargetGroup::alt(9).order());
}

TEST_CASE("GL entry keeps closed forms and the field-and-rank bracket") {
  AtlasEntry e = atlas_entry(fid(Family::GL, 3, 5));
  CHECK_FALSE(e.simple);
  CHECK_FALSE(e.r.exact.has_value());
  CHECK_FALSE(e.r.range.has_value());
  REQUIRE(e.r_fl.range.has_value());
  CHECK(e.r_fl.range->first == 1);
  CHECK(e.r_fl.range->second == 3);
  CHECK(*e.order_exact == 1488000);
  CHECK(*e.m1_exact == 124);
}

TEST_CASE("rank brackets are consistent on simple entries") {
  std::vector<FamilyId> ids = {
      fid(Family::A, 2, 3),  fid(Family::TwoA, 3, 3), fid(Family::B, 3, 5),
      fid(Family::C, 3, 3),  fid(Family::D, 4, 3),    fid(Family::TwoD, 4, 3),
      fid(Family::Alt, 7),   fid(Family::Alt, 11),    fid(Family::E8, 0, 2),
      fid(Family::F4, 0, 3), fid(Family::CyclicPrime, 0, 13)};
  for (const auto& id : ids) {
    AtlasEntry e = atlas_entry(id);
    REQUIRE(e.simple);
    long r_lo = e.r.exact ? *e.r.exact : e.r.range->first;
    long r_hi = e.r.exact ? *e.r.exact : e.r.range->second;
    REQUIRE(e.r_fl.range.has_value());
    CHECK(e.r_fl.range->first >= r_lo);
    CHECK(e.r_fl.range->first <= r_hi);
    CHECK(e.r_fl.range->second == r_hi * r_hi);
  }
}

TEST_CASE("GL ratio bracket matches the displayed bounds") {
  RatioReport r = ratio(fid(Family::GL, 3, 7));
  REQUIRE(r.lower.has_value());
  REQUIRE(r.upper.has_value());
  CHECK(*r.lower == doctest::Approx(2.0));
  CHECK(*r.upper == doctest::Approx(4.5));
  CHECK_FALSE(r.lower_strict);
  CHECK(r.upper_strict);
  REQUIRE(r.passes.has_value());
  CHECK(*r.passes);
}

TEST_CASE("tiny GL and Alt ratios come out exactly") {
  RatioReport gl22 = ratio(fid(Family::GL, 2, 2));
  REQUIRE(gl22.exact.has_value());
  CHECK(*gl22.exact == doctest::Approx(std::log(6.0) / std::log(3.0)));
  CHECK(*gl22.exact == doctest::Approx(1.6309).epsilon(1e-3));
  CHECK(*gl22.passes);

  RatioReport alt5 = ratio(fid(Family::Alt, 5));
  REQUIRE(alt5.exact.has_value());
  CHECK(*alt5.exact == doctest::Approx(std::log(60.0) / std::log(5.0)));
  CHECK(*alt5.exact == doctest::Approx(2.5440).epsilon(1e-3));
  CHECK(alt5.approx);
  CHECK_FALSE(alt5.passes.has_value());
}

TEST_CASE("small PSL ratio agrees with the alternating model") {
  RatioReport r = ratio(fid(Family::A, 1, 5));
  REQUIRE(r.exact.has_value());
  CHECK(*r.exact == doctest::Approx(std::log(60.0) / std::log(5.0)));
  REQUIRE(r.passes.has_value());
  CHECK(*r.passes);
}

TEST_CASE("exact GL ratios respect the displayed bracket") {
  for (long n = 2; n <= 5; ++n) {
    for (long q : {2, 3, 4, 5}) {
      RatioReport r = ratio(fid(Family::GL, n, q));
      REQUIRE(r.exact.has_value());
      CHECK(*r.exact >= static_cast<double>(n - 1));
      CHECK(*r.exact < static_cast<double>(n * n) / static_cast<double>(n - 1));
      CHECK(*r.passes);
    }
  }
}

TEST_CASE("GL ratio grows strictly with the rank at a fixed field") {
  double last = 0.0;
  for (long n = 2; n <= 8; ++n) {
    RatioReport r = ratio(fid(Family::GL, n, 3));
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact > last);
    last = *r.exact;
  }
}

TEST_CASE("order audits pass on the pinned classical instances") {
  std::vector<FamilyId> ids = {fid(Family::GL, 3, 5),   fid(Family::A, 2, 2),
                               fid(Family::A, 2, 3),    fid(Family::B, 2, 3),
                               fid(Family::C, 3, 3),    fid(Family::D, 4, 3),
                               fid(Family::TwoD, 4, 3), fid(Family::TwoA, 3, 7)};
  for (const auto& id : ids) {
    InequalityReport rep = verify_family_inequalities(id);
    CHECK(rep.all_ok);
    REQUIRE_FALSE(rep.checks.empty());
  }
}

TEST_CASE("GL(3,5) order sits strictly inside its bracket") {
  InequalityReport rep = verify_family_inequalities(fid(Family::GL, 3, 5));
  REQUIRE(rep.checks.size() == 2);
  const BoundCheck& order = rep.checks[0];
  CHECK(order.value == 1488000);
  CHECK(order.lower == pow(BigInt(5), 8));
  CHECK(order.upper == pow(BigInt(5), 9));
  CHECK(order.lower_ok);
  CHECK(order.upper_ok);
  const BoundCheck& m1 = rep.checks[1];
  CHECK(m1.value == 124);
  CHECK(m1.lower_ok);
  CHECK(m1.upper_ok);
}

TEST_CASE("GL(2,2) lower-bound failure is reported, not asserted") {
  InequalityReport rep = verify_family_inequalities(fid(Family::GL, 2, 2));
  REQUIRE_FALSE(rep.checks.empty());
  CHECK_FALSE(rep.checks[0].lower_ok);
  CHECK(rep.checks[0].upper_ok);
  CHECK_FALSE(rep.all_ok);
}

TEST_CASE("PSL(3,2) audit scans the largest element order") {
  InequalityReport rep = verify_family_inequalities(fid(Family::A, 2, 2));
  REQUIRE(rep.checks.size() == 2);
  CHECK(rep.checks[0].value == 168);
  CHECK(rep.checks[0].lower == 2);
  CHECK(rep.checks[0].upper == 512);
  CHECK(rep.checks[1].value == 7);
  CHECK(rep.all_ok);
}

TEST_CASE("approximate rows are skipped by the audit") {
  InequalityReport rep = verify_family_inequalities(fid(Family::E7, 0, 3));
  CHECK(rep.checks.empty());
  CHECK(rep.all_ok);
  CHECK(rep.skipped.size() == 2);
}

TEST_CASE("rank solve reproduces the GL threshold") {
  CHECK(family_rank_bound(Family::GL, 10.0) == 11);
  CHECK(family_rank_bound(Family::GL, 1.0) == 2);
  CHECK(family_rank_bound(Family::Alt, 1.0) == 3);
  CHECK_THROWS_AS(family_rank_bound(Family::E8, 2.0), InputError);
  CHECK_THROWS_AS(family_rank_bound(Family::GL, 0.0), InputError);
}

TEST_CASE("threshold is dominated by the exceptional constant at small C") {
  CHECK(bounded_rank_threshold(1.0, false) == 248);
  CHECK(bounded_rank_threshold(1.0, true) == 196883);
}

TEST_CASE("threshold is monotone in the ratio cap") {
  long last = 0;
  for (double c : {1.0, 2.0, 5.0, 10.0, 50.0}) {
    long r = bounded_rank_threshold(c, false);
    CHECK(r >= last);
    last = r;
  }
  CHECK(bounded_rank_threshold(5.0, false) <= bounded_rank_threshold(50.0, false));
  // Pure computation: repeated queries agree regardless of order.
  CHECK(bounded_rank_threshold(50.0, false) == bounded_rank_threshold(50.0, false));
  CHECK(bounded_rank_threshold(1.0, false) == 248);
}

TEST_CASE("cyclic groups land in rank two over their own prime") {
  EmbeddingReport rep = psl_embedding_bookkeeping(TargetGroup::cyclic(5), 2);
  CHECK(rep.psl_rank == 2);
  CHECK(rep.psl_field == 5);
  CHECK(rep.psl_order == 60);
  CHECK(rep.exponent == 4);
  CHECK(rep.group_order == 5);
  CHECK(rep.order_ok);  // 60 <= 5^4 = 625
}

TEST_CASE("a PSL group at the rank cap embeds identically") {
  EmbeddingReport rep = psl_embedding_bookkeeping(TargetGroup::psl(2, 7), 2);
  CHECK(rep.identity_embedding);
  CHECK(rep.psl_rank == 2);
  CHECK(rep.psl_field == 7);
  CHECK(rep.exponent == 4);
  CHECK(rep.order_ok);
}

TEST_CASE("Alt(5) goes through its linear model") {
  EmbeddingReport rep = psl_embedding_bookkeeping(TargetGroup::alt(5), 2);
  CHECK(rep.psl_rank == 2);
  CHECK(rep.psl_field == 4);
  CHECK(rep.psl_order == 60);
  CHECK(rep.group_order == 60);
  CHECK(rep.order_ok);
}

TEST_CASE("embedding bookkeeping rejects rank overflow and non-simple input") {
  CHECK_THROWS_AS(psl_embedding_bookkeeping(TargetGroup::psl(3, 2), 2),
                  DomainError);
  CHECK_THROWS_AS(psl_embedding_bookkeeping(TargetGroup::sym(4), 3),
                  DomainError);
  CHECK_THROWS_AS(psl_embedding_bookkeeping(TargetGroup::alt(7), 5),
                  UnsupportedError);
}

TEST_CASE("a PSL group below the rank cap reports the bigger receiver") {
  EmbeddingReport rep = psl_embedding_bookkeeping(TargetGroup::psl(2, 4), 3);
  CHECK_FALSE(rep.identity_embedding);
  CHECK(rep.psl_rank == 3);
  CHECK(rep.psl_field == 4);
  CHECK(rep.exponent == 9);
  CHECK(rep.order_ok);
}
