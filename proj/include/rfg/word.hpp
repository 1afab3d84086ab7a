#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rfg {

// A letter is +g for generator g (1-based) or -g for its inverse. Never 0.
using Letter = std::int16_t;

// Total order on letters: a < a^-1 < b < b^-1 < ...
inline int letter_key(Letter l) {
  int g = l < 0 ? -l : l;
  return 2 * g + (l < 0 ? 1 : 0);
}

inline Letter letter_inverse(Letter l) { return static_cast<Letter>(-l); }

// A freely reduced word over an anonymous generating alphabet.
// Reduction is maintained as a class invariant: every constructor and
// every operation returns a word with no adjacent x x^-1 pair.
class Word {
 public:
  Word() = default;

  // Reduces the given letter sequence. Rejects zero letters.
  static Word from_letters(std::span<const Letter> letters);
  static Word from_letters(std::initializer_list<Letter> letters);
  static Word generator(int g);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word pow(long k) const;
  // mu^-1 * w * mu
  Word conjugated_by(const Word& mu) const;

  // Largest generator index appearing; 0 for the empty word.
  int max_generator() const;
  // Net exponent of each generator 1..rank.
  std::vector<long> exponent_sums(int rank) const;
  // Cyclically reduced form (conjugate of *this of minimal length).
  Word cyclic_reduction() const;

  friend Word operator*(const Word& a, const Word& b);
  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return !(*this == o); }

  // Length first, then lexicographic by letter_key.
  static bool shortlex_less(const Word& a, const Word& b);

 private:
  struct Reduced {};
  Word(std::vector<Letter> letters, Reduced) : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;
};

// u^-1 v^-1 u v, freely reduced.
Word commutator(const Word& u, const Word& v);

// Generator names for parsing and printing. Names are single lowercase
// letters; the corresponding uppercase letter denotes the inverse.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);
  static Alphabet from_csv(std::string_view csv);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::string& name(int g) const;  // g in [1, rank]

  // Grammar:  word   := { factor [ '^' int ] }
  //           factor := letter | '(' word ')' | '[' word ',' word ']'
  // Lowercase letter = generator, uppercase = its inverse, "1" = empty word.
  // Whitespace and '*' act as separators.
  Word parse_word(std::string_view text) const;

  // Round-trips through parse_word. Runs of length >= 3 print as powers.
  std::string print_word(const Word& w) const;

  bool operator==(const Alphabet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

}  // namespace rfg
