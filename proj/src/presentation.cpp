#include "rfg/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rfg/errors.hpp"

namespace rfg {

namespace {

Word rotate(const Word& w, std::size_t s) {
  std::vector<Letter> out;
  out.reserve(w.length());
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size(); ++i) out.push_back(ls[(i + s) % ls.size()]);
  return Word::from_letters(out);
}

// One cyclic reading frame of a relator: (relator index, orientation, start).
struct Placement {
  std::size_t rel;
  bool inverse;
  std::size_t start;
  const Word* word;  // the oriented relator
  Letter at(std::size_t off) const {
    const auto& ls = word->letters();
    return ls[(start + off) % ls.size()];
  }
  std::size_t size() const { return word->length(); }
};

}  // namespace

Presentation::Presentation(Alphabet alphabet, std::vector<Word> relators)
    : alphabet_(std::move(alphabet)) {
  relators_.reserve(relators.size());
  for (const Word& r : relators) {
    Word c = r.cyclic_reduction();
    if (c.empty()) throw InputError("trivial relator rejected");
    if (c.max_generator() > alphabet_.rank())
      throw InputError("relator uses a generator outside the alphabet");
    relators_.push_back(std::move(c));
  }
}

Presentation Presentation::free_group(Alphabet alphabet) {
  return Presentation(std::move(alphabet), {});
}

Presentation Presentation::parse(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::vector<std::string> relator_specs;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw InputError("presentation line needs 'key: value': " + line);
    std::string key = line.substr(first, colon - first);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    std::string value = line.substr(colon + 1);
    if (key == "gens") {
      if (alphabet) throw InputError("duplicate gens line");
      alphabet = Alphabet::from_csv(value);
    } else if (key == "rels") {
      std::string cur;
      for (char c : value) {
        if (c == ',' ) {
          // commas inside [u,v] belong to the commutator, not the list
          int depth = 0;
          for (char d : cur) {
            if (d == '[') ++depth;
            if (d == ']') --depth;
          }
          if (depth == 0) {
            relator_specs.push_back(cur);
            cur.clear();
            continue;
          }
        }
        cur.push_back(c);
      }
      relator_specs.push_back(cur);
    } else {
      throw InputError("unknown presentation key '" + key + "'");
    }
  }
  if (!alphabet) throw InputError("presentation needs a gens line");
  std::vector<Word> relators;
  for (const auto& spec : relator_specs) {
    bool blank = std::all_of(spec.begin(), spec.end(),
                             [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (blank) continue;
    relators.push_back(alphabet->parse_word(spec));
  }
  return Presentation(std::move(*alphabet), std::move(relators));
}

std::string Presentation::print() const {
  std::ostringstream out;
  out << "gens: ";
  for (int g = 1; g <= rank(); ++g) {
    if (g > 1) out << ',';
    out << alphabet_.name(g);
  }
  out << '\n';
  if (!relators_.empty()) {
    out << "rels: ";
    for (std::size_t i = 0; i < relators_.size(); ++i) {
      if (i > 0) out << ", ";
      out << alphabet_.print_word(relators_[i]);
    }
    out << '\n';
  }
  return out.str();
}

ScCheck check_small_cancellation(const Presentation& p, Rational lambda) {
  if (lambda.num <= 0 || lambda.den <= 0) throw InputError("lambda must be positive");
  ScCheck result;
  result.lambda = lambda;
  result.per_relator_max.assign(p.relators().size(), 0);
  if (p.is_free()) {
    result.certified = true;
    return result;
  }

  std::vector<Word> oriented;  // relator followed by its inverse, per relator
  for (const Word& r : p.relators()) {
    oriented.push_back(r);
    oriented.push_back(r.inverse());
  }
  std::vector<Placement> placements;
  for (std::size_t i = 0; i < oriented.size(); ++i) {
    for (std::size_t s = 0; s < oriented[i].length(); ++s)
      placements.push_back({i / 2, i % 2 == 1, s, &oriented[i]});
  }

  // A piece is a subword readable from two distinct placements. Within one
  // reading frame of a single relator the whole relator always matches
  // itself, so same-relator same-orientation pairs are capped one short.
  std::vector<Word> best_piece(p.relators().size());
  for (std::size_t a = 0; a < placements.size(); ++a) {
    for (std::size_t b = a + 1; b < placements.size(); ++b) {
      const Placement& pa = placements[a];
      const Placement& pb = placements[b];
      std::size_t cap = std::min(pa.size(), pb.size());
      if (pa.rel == pb.rel && pa.inverse == pb.inverse) cap = pa.size() - 1;
      std::size_t len = 0;
      while (len < cap && pa.at(len) == pb.at(len)) ++len;
      if (len == 0) continue;
      for (std::size_t rel : {pa.rel, pb.rel}) {
        if (len > result.per_relator_max[rel]) {
          result.per_relator_max[rel] = len;
          std::vector<Letter> ls;
          for (std::size_t k = 0; k < len; ++k) ls.push_back(pa.at(k));
          best_piece[rel] = Word::from_letters(ls);
          result.max_piece = std::max(result.max_piece, len);
        }
        if (pa.rel == pb.rel) break;
      }
    }
  }

  result.certified = true;
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    std::size_t rl = p.relators()[i].length();
    // require piece < lambda * |relator|, exactly
    if (static_cast<long>(result.per_relator_max[i]) * lambda.den >=
        lambda.num * static_cast<long>(rl)) {
      result.certified = false;
      if (!result.violation)
        result.violation = PieceViolation{i, best_piece[i], rl};
    }
  }
  return result;
}

ScCheck Presentation::certify(Rational lambda) {
  ScCheck check = check_small_cancellation(*this, lambda);
  if (check.certified) {
    certificate_ = check;
    std::set<std::vector<Letter>> seen;
    symmetrized_.clear();
    for (const Word& r : relators_) {
      for (const Word& base : {r, r.inverse()}) {
        for (std::size_t s = 0; s < base.length(); ++s) {
          Word rot = rotate(base, s);
          if (seen.insert(rot.letters()).second) symmetrized_.push_back(rot);
        }
      }
    }
    std::sort(symmetrized_.begin(), symmetrized_.end(), Word::shortlex_less);
  }
  return check;
}

namespace {

// Longest common prefix of w[i..] and r's letters.
std::size_t match_at(const std::vector<Letter>& w, std::size_t i, const Word& r) {
  std::size_t len = 0;
  while (i + len < w.size() && len < r.length() && w[i + len] == r.letters()[len]) ++len;
  return len;
}

}  // namespace

bool is_trivial(const Word& w, const Presentation& p) {
  if (w.max_generator() > p.rank())
    throw InputError("word uses a generator outside the presentation's alphabet");
  if (p.is_free()) return w.empty();
  const auto& cert = p.certificate();
  if (!cert || cert->lambda.num * 6 > cert->lambda.den)
    throw UnsupportedError(
        "word problem needs a small-cancellation certificate at lambda <= 1/6; "
        "call certify() first");

  // Replace any subword that covers more than half of a defining relation
  // with the shorter complement; repeat until stuck. At lambda <= 1/6 a
  // nonempty word with no such subword is nontrivial.
  Word cur = w;
  bool progress = true;
  while (progress && !cur.empty()) {
    progress = false;
    const auto& ls = cur.letters();
    for (std::size_t i = 0; i < ls.size() && !progress; ++i) {
      for (const Word& r : p.symmetrized_relators()) {
        std::size_t len = match_at(ls, i, r);
        if (2 * len <= r.length()) continue;
        // ls[i..i+len) equals the prefix u of r = u v; substitute v^-1.
        std::vector<Letter> next(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(i));
        Word tail = Word::from_letters(
            std::span<const Letter>(r.letters().data() + len, r.length() - len));
        Word prefix = Word::from_letters(next);
        Word rest = Word::from_letters(
            std::span<const Letter>(ls.data() + i + len, ls.size() - i - len));
        cur = prefix * tail.inverse() * rest;
        progress = true;
        break;
      }
    }
  }
  return cur.empty();
}

namespace {

// Freely reduced words of length 1..radius in shortlex order.
std::vector<Word> reduced_words(int rank, unsigned radius, std::size_t budget,
                                const char* budget_name) {
  std::vector<Letter> letters;
  for (int g = 1; g <= rank; ++g) {
    letters.push_back(static_cast<Letter>(g));
    letters.push_back(static_cast<Letter>(-g));
  }
  std::vector<Word> all;
  std::vector<Word> level = {Word()};
  std::size_t produced = 0;
  for (unsigned len = 1; len <= radius; ++len) {
    std::vector<Word> next;
    for (const Word& w : level) {
      for (Letter l : letters) {
        if (!w.empty() && w.letters().back() == letter_inverse(l)) continue;
        if (++produced > budget)
          throw ResourceError(std::string(budget_name) + " budget of " +
                              std::to_string(budget) + " candidate words exceeded");
        std::vector<Letter> ls = w.letters();
        ls.push_back(l);
        next.push_back(Word::from_letters(ls));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

}  // namespace

Ball ball(const Presentation& p, unsigned radius, std::size_t budget) {
  Ball b;
  b.radius = radius;
  std::vector<Word> candidates = reduced_words(p.rank(), radius, budget, "ball enumeration");
  if (p.is_free()) {
    b.elements = std::move(candidates);  // already canonical and shortlex sorted
    return b;
  }
  for (const Word& w : candidates) {
    if (is_trivial(w, p)) continue;
    bool known = false;
    for (const Word& u : b.elements) {
      if (is_trivial(w * u.inverse(), p)) {
        known = true;
        break;
      }
    }
    if (!known) b.elements.push_back(w);
  }
  return b;
}

std::vector<Word> ball_over(const Presentation& p, const std::vector<Word>& generators,
                            unsigned radius, std::size_t budget) {
  if (!p.is_free())
    throw UnsupportedError("ball_over supports free presentations only");
  for (const Word& g : generators) {
    if (g.empty()) throw InputError("ball_over generators must be nontrivial");
    if (g.max_generator() > p.rank())
      throw InputError("generator word uses a symbol outside the alphabet");
  }
  std::set<std::vector<Letter>> seen;
  seen.emplace();
  std::vector<Word> frontier = {Word()};
  std::vector<Word> out;
  std::size_t produced = 0;
  for (unsigned step = 0; step < radius; ++step) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (const Word& g : generators) {
        for (const Word& f : {g, g.inverse()}) {
          if (++produced > budget)
            throw ResourceError("ball_over budget of " + std::to_string(budget) +
                                " products exceeded");
          Word v = w * f;
          if (seen.insert(v.letters()).second) {
            next.push_back(v);
            out.push_back(v);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), Word::shortlex_less);
  return out;
}

}  // namespace rfg
