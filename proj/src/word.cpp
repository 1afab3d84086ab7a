#include "rfg/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "rfg/errors.hpp"

namespace rfg {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == letter_inverse(l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word Word::from_letters(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    if (l == 0) throw InputError("word letter must be nonzero");
    push_reduced(out, l);
  }
  return Word(std::move(out), Reduced{});
}

Word Word::from_letters(std::initializer_list<Letter> letters) {
  return from_letters(std::span<const Letter>(letters.begin(), letters.size()));
}

Word Word::generator(int g) {
  if (g == 0 || g > 32767 || g < -32768) throw InputError("generator index out of range");
  return Word({static_cast<Letter>(g)}, Reduced{});
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l = letter_inverse(l);
  return Word(std::move(out), Reduced{});
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out = a.letters_;
  out.reserve(a.length() + b.length());
  for (Letter l : b.letters_) push_reduced(out, l);
  return Word(std::move(out), Word::Reduced{});
}

Word Word::pow(long k) const {
  Word base = k < 0 ? inverse() : *this;
  long reps = k < 0 ? -k : k;
  Word acc;
  for (long i = 0; i < reps; ++i) acc = acc * base;
  return acc;
}

Word Word::conjugated_by(const Word& mu) const { return mu.inverse() * *this * mu; }

int Word::max_generator() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, l < 0 ? -l : static_cast<int>(l));
  return m;
}

std::vector<long> Word::exponent_sums(int rank) const {
  std::vector<long> sums(static_cast<std::size_t>(rank), 0);
  for (Letter l : letters_) {
    int g = l < 0 ? -l : l;
    if (g > rank) throw InputError("word uses a generator outside the alphabet");
    sums[static_cast<std::size_t>(g - 1)] += l < 0 ? -1 : 1;
  }
  return sums;
}

Word Word::cyclic_reduction() const {
  std::size_t i = 0, j = letters_.size();
  while (j > i + 1 && letters_[i] == letter_inverse(letters_[j - 1])) {
    ++i;
    --j;
  }
  std::vector<Letter> out(letters_.begin() + static_cast<std::ptrdiff_t>(i),
                          letters_.begin() + static_cast<std::ptrdiff_t>(j));
  return Word(std::move(out), Reduced{});
}

bool Word::shortlex_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (std::size_t i = 0; i < a.length(); ++i) {
    int ka = letter_key(a.letters_[i]), kb = letter_key(b.letters_[i]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

Word commutator(const Word& u, const Word& v) { return u.inverse() * v.inverse() * u * v; }

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InputError("alphabet needs at least one generator");
  if (names_.size() > 26) throw InputError("alphabet supports at most 26 generators");
  for (const auto& n : names_) {
    if (n.size() != 1 || !std::islower(static_cast<unsigned char>(n[0])))
      throw InputError("generator names must be single lowercase letters, got '" + n + "'");
  }
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw InputError("duplicate generator name '" + names_[i] + "'");
}

Alphabet Alphabet::from_csv(std::string_view csv) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      names.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  names.push_back(cur);
  return Alphabet(std::move(names));
}

const std::string& Alphabet::name(int g) const {
  if (g < 1 || g > rank()) throw InputError("generator index out of range");
  return names_[static_cast<std::size_t>(g - 1)];
}

namespace {

class WordParser {
 public:
  WordParser(const Alphabet& a, std::string_view text) : a_(a), s_(text) {}

  Word parse() {
    Word w = word();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return w;
  }

 private:
  Word word() {
    Word acc;
    for (;;) {
      skip_ws();
      if (pos_ == s_.size()) break;
      char c = s_[pos_];
      if (c == ')' || c == ']' || c == ',') break;
      Word f = factor();
      skip_ws();
      long e = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        e = integer();
      }
      acc = acc * f.pow(e);
    }
    return acc;
  }

  Word factor() {
    char c = s_[pos_];
    if (c == '1') {
      ++pos_;
      return Word();
    }
    if (c == '(') {
      ++pos_;
      Word w = word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word u = word();
      expect(',');
      Word v = word();
      expect(']');
      return commutator(u, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      bool inv = std::isupper(static_cast<unsigned char>(c));
      char low = inv ? static_cast<char>(std::tolower(static_cast<unsigned char>(c))) : c;
      for (int g = 1; g <= a_.rank(); ++g) {
        if (a_.name(g)[0] == low) return Word::generator(inv ? -g : g);
      }
      fail(std::string("unknown generator '") + c + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected an integer exponent");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000) fail("exponent too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ == s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() &&
           (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*'))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw InputError("word parse error at position " + std::to_string(pos_) + ": " + why +
                     " in \"" + std::string(s_) + "\"");
  }

  const Alphabet& a_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Word Alphabet::parse_word(std::string_view text) const { return WordParser(*this, text).parse(); }

std::string Alphabet::print_word(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    int g = ls[i] < 0 ? -ls[i] : ls[i];
    if (g > rank()) throw InputError("word uses a generator outside the alphabet");
    char c = name(g)[0];
    if (ls[i] < 0) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    std::size_t run = j - i;
    if (run >= 3) {
      out << c << '^' << run;
    } else {
      for (std::size_t k = 0; k < run; ++k) out << c;
    }
    i = j;
  }
  return out.str();
}

}  // namespace rfg
