#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rfg/errors.hpp"
#include "rfg/presentation.hpp"
#include "rfg/word.hpp"

using namespace rfg;

namespace {

// Reference reducer: rescan from the top after every deletion. Slow and
// obviously correct; the library reducer must agree with it.
std::vector<Letter> oracle_reduce(std::vector<Letter> ls) {
  bool hit = true;
  while (hit) {
    hit = false;
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
      if (ls[i] == -ls[i + 1]) {
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i),
                 ls.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        hit = true;
        break;
      }
    }
  }
  return ls;
}

std::vector<Letter> random_letters(std::mt19937& rng, int rank, std::size_t len) {
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> ls;
  for (std::size_t i = 0; i < len; ++i) {
    int g = gen(rng);
    ls.push_back(static_cast<Letter>(sign(rng) ? g : -g));
  }
  return ls;
}

Word random_reduced(std::mt19937& rng, int rank, std::size_t len) {
  return Word::from_letters(random_letters(rng, rank, len));
}

const Alphabet kAB = Alphabet::from_csv("a,b");

Word wd(const char* s) { return kAB.parse_word(s); }

Presentation genus2() {
  Presentation p = Presentation::parse("gens: a,b,c,d\nrels: [a,b][c,d]\n");
  REQUIRE(p.certify().certified);
  return p;
}

}  // namespace

TEST_CASE("free reduction agrees with the rescan oracle") {
  std::mt19937 rng(20260819);
  for (int trial = 0; trial < 300; ++trial) {
    auto raw = random_letters(rng, 3, 1 + static_cast<std::size_t>(trial % 40));
    CHECK(Word::from_letters(raw).letters() == oracle_reduce(raw));
  }
}

TEST_CASE("reduction is idempotent and respects basic norms") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Word u = random_reduced(rng, 2, 12);
    Word v = random_reduced(rng, 2, 9);
    CHECK(Word::from_letters(u.letters()) == u);
    CHECK((u * v).length() <= u.length() + v.length());
    CHECK(u.inverse().length() == u.length());
    CHECK((u * u.inverse()).empty());
    Word mu = random_reduced(rng, 2, 4);
    CHECK(u.conjugated_by(mu).length() <= u.length() + 2 * mu.length());
  }
}

TEST_CASE("commutator of b^-1ab with a") {
  Word lhs = commutator(wd("Bab"), wd("a"));
  CHECK(lhs == wd("BAbABaba"));
  CHECK(lhs.length() == 8);
}

TEST_CASE("commutator identities") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Word u = random_reduced(rng, 2, 6);
    Word v = random_reduced(rng, 2, 6);
    CHECK(commutator(u, u).empty());
    CHECK(commutator(u, v).inverse() == commutator(v, u));
  }
}

TEST_CASE("word parsing and printing round-trip") {
  CHECK(wd("a^12").length() == 12);
  CHECK(wd("[a,b]") == wd("ABab"));
  CHECK(wd("(ab)^2") == wd("abab"));
  CHECK(wd("a^-3") == wd("AAA"));
  CHECK(wd("1").empty());
  CHECK(wd("a b * a") == wd("aba"));
  CHECK(kAB.print_word(wd("a^12")) == "a^12");
  CHECK(kAB.print_word(Word()) == "1");
  CHECK(kAB.print_word(wd("ABab")) == "ABab");

  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_reduced(rng, 2, 15);
    CHECK(kAB.parse_word(kAB.print_word(w)) == w);
  }

  CHECK_THROWS_AS(wd("axb"), InputError);
  CHECK_THROWS_AS(wd("a^"), InputError);
  CHECK_THROWS_AS(wd("(ab"), InputError);
}

TEST_CASE("presentation text format round-trips") {
  Presentation p = Presentation::parse("# surface\ngens: a,b,c,d\nrels: [a,b][c,d]\n");
  CHECK(p.rank() == 4);
  REQUIRE(p.relators().size() == 1);
  CHECK(p.relators()[0].length() == 8);
  Presentation q = Presentation::parse(p.print());
  CHECK(q.relators() == p.relators());

  Presentation f = Presentation::parse("gens: a\n");
  CHECK(f.is_free());

  CHECK_THROWS_AS(Presentation::parse("rels: ab\n"), InputError);
  CHECK_THROWS_AS(Presentation::parse("gens: a\nrels: aA\n"), InputError);
}

TEST_CASE("small cancellation: genus-2 surface relator passes at 1/6") {
  Presentation p = Presentation::parse("gens: a,b,c,d\nrels: [a,b][c,d]\n");
  ScCheck check = check_small_cancellation(p, {1, 6});
  CHECK(check.certified);
  CHECK(check.max_piece == 1);
}

TEST_CASE("small cancellation: abab fails with the overlap piece aba") {
  Presentation p = Presentation::parse("gens: a,b\nrels: abab\n");
  ScCheck check = check_small_cancellation(p, {1, 6});
  CHECK_FALSE(check.certified);
  REQUIRE(check.violation.has_value());
  CHECK(check.violation->piece.length() == 3);
  CHECK(check.violation->relator_length == 4);
  // 3 >= (1/6) * 4
  CHECK(check.violation->piece == wd("aba"));
}

TEST_CASE("small cancellation: free presentations certify vacuously") {
  Presentation p = Presentation::free_group(Alphabet::from_csv("a,b"));
  ScCheck check = check_small_cancellation(p);
  CHECK(check.certified);
  CHECK(check.max_piece == 0);
}

TEST_CASE("small cancellation: letter shared between relators is a piece") {
  Presentation p = Presentation::parse("gens: a,b\nrels: a, ab\n");
  CHECK_FALSE(check_small_cancellation(p).certified);
}

TEST_CASE("word problem in free groups") {
  Presentation f = Presentation::free_group(kAB);
  CHECK(is_trivial(wd("aA"), f));
  CHECK_FALSE(is_trivial(wd("ab"), f));
  CHECK_FALSE(is_trivial(wd("[a,b]"), f));
}

TEST_CASE("word problem needs a certificate when relators are present") {
  Presentation p = Presentation::parse("gens: a,b,c,d\nrels: [a,b][c,d]\n");
  CHECK_THROWS_AS(is_trivial(p.relators()[0], p), UnsupportedError);
}

TEST_CASE("word problem in the genus-2 group") {
  Presentation p = genus2();
  const Word r = p.relators()[0];
  CHECK(is_trivial(r, p));
  CHECK(is_trivial(r.inverse(), p));
  CHECK_FALSE(is_trivial(p.alphabet().parse_word("a"), p));
  CHECK_FALSE(is_trivial(p.alphabet().parse_word("abab"), p));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Word w = random_reduced(rng, 4, 1 + static_cast<std::size_t>(trial % 6));
    Word c = r.conjugated_by(w);
    CHECK(is_trivial(c, p));
    Word prod = c * r.inverse().conjugated_by(w * w);
    CHECK(is_trivial(prod, p));
  }
}

TEST_CASE("words the replacement loop kills have zero exponent sums") {
  Presentation p = genus2();
  std::mt19937 rng(13);
  int trivial_seen = 0;
  for (int trial = 0; trial < 80; ++trial) {
    Word w = random_reduced(rng, 4, 3);
    Word candidate = p.relators()[0].conjugated_by(w);
    if (trial % 2 == 0) candidate = candidate * random_reduced(rng, 4, 2);
    if (is_trivial(candidate, p)) {
      ++trivial_seen;
      for (long s : candidate.exponent_sums(4)) CHECK(s == 0);
    }
  }
  CHECK(trivial_seen >= 40);  // every pure conjugate qualifies
}

TEST_CASE("balls in free groups have the expected counts") {
  Presentation f2 = Presentation::free_group(kAB);
  CHECK(ball(f2, 1).elements.size() == 4);
  CHECK(ball(f2, 2).elements.size() == 16);
  CHECK(ball(f2, 3).elements.size() == 52);  // 4 + 12 + 36

  Presentation z = Presentation::free_group(Alphabet::from_csv("a"));
  CHECK(ball(z, 3).elements.size() == 6);

  // sum over lengths of 2k(2k-1)^(l-1), k = 3
  Presentation f3 = Presentation::free_group(Alphabet::from_csv("a,b,c"));
  CHECK(ball(f3, 2).elements.size() == 6 + 30);
}

TEST_CASE("balls nest and stay canonical") {
  Presentation f2 = Presentation::free_group(kAB);
  Ball b2 = ball(f2, 2);
  Ball b3 = ball(f2, 3);
  REQUIRE(b2.elements.size() <= b3.elements.size());
  for (std::size_t i = 0; i < b2.elements.size(); ++i) CHECK(b2.elements[i] == b3.elements[i]);
  for (std::size_t i = 1; i < b3.elements.size(); ++i)
    CHECK(Word::shortlex_less(b3.elements[i - 1], b3.elements[i]));
}

// Relator length 8: Dehn rewriting needs a match longer than 4 letters, so no
// pair of words of length <= 2 is identified and the count is the free one.
TEST_CASE("genus-2 ball of radius 2 matches the rank-4 free count") {
  Presentation p = genus2();
  Ball b = ball(p, 2);
  CHECK(b.elements.size() == 8 + 8 * 7);
}

TEST_CASE("ball enumeration enforces its candidate budget") {
  Presentation f2 = Presentation::free_group(kAB);
  CHECK_THROWS_AS(ball(f2, 13), ResourceError);
  CHECK_THROWS_AS(ball(f2, 3, 10), ResourceError);
}

TEST_CASE("balls over alternative generating sets") {
  Presentation f2 = Presentation::free_group(kAB);
  Presentation z = Presentation::free_group(Alphabet::from_csv("a"));
  auto za = ball_over(z, {z.alphabet().parse_word("a")}, 3);
  CHECK(za.size() == 6);
  auto y1 = ball_over(f2, {wd("a"), wd("ab")}, 1);
  CHECK(y1.size() == 4);
  Presentation g2 = genus2();
  CHECK_THROWS_AS(ball_over(g2, {g2.alphabet().parse_word("a")}, 2), UnsupportedError);
}
