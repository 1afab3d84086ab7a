#include "rfg/quotient_search.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <utility>

#include "rfg/bigint.hpp"
#include "rfg/certify.hpp"
#include "rfg/errors.hpp"
#include "rfg/parallel.hpp"

namespace rfg {

namespace {

bool is_prime_power(long v) {
  if (v < 2) return false;
  long p = v;
  for (long d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      p = d;
      break;
    }
  }
  long w = v;
  while (w % p == 0) w /= p;
  return w == 1;
}

bool is_prime(long v) {
  if (v < 2) return false;
  for (long d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

void add_gl_groups(std::vector<TargetGroup>& out, long limit) {
  for (int n = 1;; ++n) {
    if (TargetGroup::gl(n, 2).order() > limit) break;
    for (long q = 2;; ++q) {
      if (!is_prime_power(q)) continue;
      TargetGroup g = TargetGroup::gl(n, q);
      if (g.order() > limit) break;
      if (g.order() >= 2) out.push_back(g);
    }
  }
}

void add_simple_psl_groups(std::vector<TargetGroup>& out, long limit) {
  for (int n = 2;; ++n) {
    if (TargetGroup::psl(n, 2).order() > limit) break;
    for (long q = 2;; ++q) {
      if (!is_prime_power(q)) continue;
      TargetGroup g = TargetGroup::psl(n, q);
      if (g.order() > limit) break;
      if (g.is_simple()) out.push_back(g);
    }
  }
}

// Cyclic targets and one-dimensional matrix groups; images of a word there
// depend only on its exponent sums.
bool abelian_target(const TargetGroup& g) {
  switch (g.kind()) {
    case GroupKind::Cyclic:
      return true;
    case GroupKind::Dihedral:
      return false;
    case GroupKind::Sym:
      return g.n() <= 2;
    case GroupKind::Alt:
      return g.n() <= 3;
    default:
      return g.n() == 1;
  }
}

Word abelianized(const Word& w, int rank) {
  std::vector<Letter> letters;
  std::vector<long> sums = w.exponent_sums(rank);
  for (int i = 0; i < rank; ++i) {
    const long count = std::labs(sums[i]);
    const Letter l = static_cast<Letter>(sums[i] > 0 ? (i + 1) : -(i + 1));
    for (long k = 0; k < count; ++k) letters.push_back(l);
  }
  return Word::from_letters(letters);
}

// Runs fn over every relator-satisfying generator-image tuple in odometer
// order; stops early when fn returns true.
template <typename Fn>
bool scan_homs(const Presentation& p, const TargetGroup& g, std::size_t budget, Fn&& fn) {
  const int rank = p.rank();
  BigInt tuples = 1;
  for (int i = 0; i < rank; ++i) {
    tuples *= g.order();
    if (tuples > budget) {
      throw ResourceError("homomorphism enumeration into " + g.name() + " needs " +
                          tuples.str() + " tuples, over the budget");
    }
  }
  const std::vector<GroupElement> elements = g.elements(budget);
  std::vector<Word> relators = p.relators();
  if (abelian_target(g)) {
    for (Word& r : relators) r = abelianized(r, rank);
  }

  std::vector<std::size_t> idx(rank, 0);
  std::vector<GroupElement> images(rank, elements[0]);
  for (;;) {
    for (int i = 0; i < rank; ++i) images[i] = elements[idx[i]];
    bool satisfied = true;
    for (const Word& r : relators) {
      if (!ge_is_identity(evaluate_word(g, images, r))) {
        satisfied = false;
        break;
      }
    }
    if (satisfied && fn(images)) return true;
    int pos = rank - 1;
    while (pos >= 0 && ++idx[pos] == elements.size()) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) return false;
  }
}

// Smallest finite simple group outside the cyclic/alternating/PSL families.
constexpr long kFirstMissingSimpleOrder = 6048;  // PSU(3,3)

bool detection_exact(TargetClass cls, int rank, long order) {
  switch (cls) {
    case TargetClass::GL:
      return true;
    case TargetClass::Simple:
      return order < kFirstMissingSimpleOrder;
    case TargetClass::All:
      // Rank one: any finite image is cyclic, so the cyclic scan is complete.
      // Below order 8 every group is either abelian (a cyclic subquotient
      // detects at no larger order) or Sym(3); the first gap is Q8.
      return rank == 1 || order <= 8;
  }
  return false;
}

struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const { return Word::shortlex_less(a, b); }
};

GrowthTable growth_rows(const Presentation& p,
                        std::vector<std::pair<unsigned, Word>> elements, unsigned max_length,
                        const TargetCatalog& cat, std::size_t hom_budget, std::size_t jobs) {
  std::sort(elements.begin(), elements.end(),
            [](const std::pair<unsigned, Word>& a, const std::pair<unsigned, Word>& b) {
              if (a.first != b.first) return a.first < b.first;
              return Word::shortlex_less(a.second, b.second);
            });

  GrowthTable table;
  table.cls = cat.cls;
  table.order_limit = cat.order_limit;

  // Detection factors over distinct elements; the scan-order merge below is
  // unchanged by the parallelism degree.
  std::vector<Word> distinct;
  std::map<Word, std::size_t, ShortlexLess> position;
  for (const std::pair<unsigned, Word>& item : elements) {
    if (item.first > max_length) continue;
    if (position.emplace(item.second, distinct.size()).second) distinct.push_back(item.second);
  }
  std::vector<DetectionResult> detections = parallel_map(
      distinct.size(), jobs, [&](std::size_t i) { return detect(distinct[i], p, cat, hom_budget); });

  GrowthRow cur;
  long best = 0;
  bool best_exhausted = false;
  std::size_t next = 0;
  for (unsigned m = 1; m <= max_length; ++m) {
    while (next < elements.size() && elements[next].first <= m) {
      const Word& w = elements[next].second;
      const DetectionResult& det = detections[position.at(w)];
      if (!best_exhausted && (det.exhausted || det.order > best)) {
        best = det.order;
        best_exhausted = det.exhausted;
        cur.argmax = w;
        cur.witness_group = det.witness ? det.witness->target.name() : std::string();
        cur.exhausted = det.exhausted;
        cur.exact = det.exact;
      }
      ++next;
    }
    GrowthRow row = cur;
    row.m = static_cast<long>(m);
    row.value = best;
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace

std::string target_class_name(TargetClass c) {
  switch (c) {
    case TargetClass::All:
      return "ALL";
    case TargetClass::GL:
      return "GL";
    case TargetClass::Simple:
      return "SIMPLE";
  }
  return "ALL";
}

TargetClass parse_target_class(const std::string& text) {
  std::string up = text;
  for (char& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (up == "ALL") return TargetClass::All;
  if (up == "GL") return TargetClass::GL;
  if (up == "SIMPLE") return TargetClass::Simple;
  throw InputError("unknown target class '" + text + "'; expected ALL, GL, or SIMPLE");
}

TargetCatalog build_catalog(TargetClass cls, long order_limit) {
  if (order_limit < 2) throw InputError("catalog needs an order limit of at least 2");

  std::vector<TargetGroup> groups;
  switch (cls) {
    case TargetClass::GL:
      add_gl_groups(groups, order_limit);
      break;
    case TargetClass::Simple:
      for (long m = 2; m <= order_limit; ++m) {
        if (is_prime(m)) groups.push_back(TargetGroup::cyclic(m));
      }
      for (long n = 5;; ++n) {
        TargetGroup g = TargetGroup::alt(n);
        if (g.order() > order_limit) break;
        groups.push_back(g);
      }
      add_simple_psl_groups(groups, order_limit);
      break;
    case TargetClass::All:
      for (long m = 2; m <= order_limit; ++m) groups.push_back(TargetGroup::cyclic(m));
      for (long m = 3; 2 * m <= order_limit; ++m) groups.push_back(TargetGroup::dihedral(m));
      for (long n = 3;; ++n) {
        TargetGroup g = TargetGroup::sym(n);
        if (g.order() > order_limit) break;
        groups.push_back(g);
      }
      for (long n = 4;; ++n) {
        TargetGroup g = TargetGroup::alt(n);
        if (g.order() > order_limit) break;
        groups.push_back(g);
      }
      add_gl_groups(groups, order_limit);
      add_simple_psl_groups(groups, order_limit);
      break;
  }

  std::vector<std::pair<BigInt, TargetGroup>> keyed;
  keyed.reserve(groups.size());
  for (TargetGroup& g : groups) keyed.emplace_back(g.order(), std::move(g));
  std::sort(keyed.begin(), keyed.end(),
            [](const std::pair<BigInt, TargetGroup>& a, const std::pair<BigInt, TargetGroup>& b) {
              if (a.first != b.first) return a.first < b.first;
              const TargetGroup& x = a.second;
              const TargetGroup& y = b.second;
              if (x.kind() != y.kind()) return static_cast<int>(x.kind()) < static_cast<int>(y.kind());
              if (x.q() != y.q()) return x.q() < y.q();
              return x.n() < y.n();
            });

  TargetCatalog cat;
  cat.cls = cls;
  cat.order_limit = order_limit;
  cat.groups.reserve(keyed.size());
  for (std::pair<BigInt, TargetGroup>& item : keyed) cat.groups.push_back(std::move(item.second));
  return cat;
}

std::vector<Homomorphism> enumerate_homs(const Presentation& p, const TargetGroup& g,
                                         std::size_t budget) {
  std::vector<Homomorphism> out;
  scan_homs(p, g, budget, [&](const std::vector<GroupElement>& images) {
    out.push_back(make_homomorphism(p, g, images));
    return false;
  });
  return out;
}

DetectionResult detect(const Word& gamma, const Presentation& p, const TargetCatalog& cat,
                       std::size_t hom_budget) {
  if (is_trivial(gamma, p)) throw InputError("detect needs an element nontrivial in the group");

  DetectionResult res;
  res.gamma = gamma;
  for (const TargetGroup& g : cat.groups) {
    Word geff = gamma;
    if (abelian_target(g)) {
      geff = abelianized(gamma, p.rank());
      if (geff.empty()) continue;  // dies in every abelian image
    }
    std::optional<std::vector<GroupElement>> found;
    scan_homs(p, g, hom_budget, [&](const std::vector<GroupElement>& images) {
      if (ge_is_identity(evaluate_word(g, images, geff))) return false;
      found = images;
      return true;
    });
    if (found) {
      res.order = static_cast<long>(g.order());
      res.witness = make_homomorphism(p, g, *found);
      res.exact = detection_exact(cat.cls, p.rank(), res.order);
      return res;
    }
  }
  res.exhausted = true;
  res.order = cat.order_limit;
  return res;
}

GrowthTable growth(const Presentation& p, unsigned max_length, const TargetCatalog& cat,
                   std::size_t ball_budget, std::size_t hom_budget, std::size_t jobs) {
  Ball b = ball(p, max_length, ball_budget);
  std::vector<std::pair<unsigned, Word>> elements;
  elements.reserve(b.elements.size());
  for (Word& w : b.elements) {
    const unsigned len = static_cast<unsigned>(w.length());
    elements.emplace_back(len, std::move(w));
  }
  return growth_rows(p, std::move(elements), max_length, cat, hom_budget, jobs);
}

GrowthTable growth_over(const Presentation& p, const std::vector<Word>& generators,
                        unsigned max_length, const TargetCatalog& cat,
                        std::size_t ball_budget, std::size_t hom_budget, std::size_t jobs) {
  std::map<Word, unsigned, ShortlexLess> first_radius;
  for (unsigned m = 1; m <= max_length; ++m) {
    for (Word& w : ball_over(p, generators, m, ball_budget)) {
      first_radius.emplace(std::move(w), m);
    }
  }
  std::vector<std::pair<unsigned, Word>> elements;
  elements.reserve(first_radius.size());
  for (const std::pair<const Word, unsigned>& item : first_radius) {
    elements.emplace_back(item.second, item.first);
  }
  return growth_rows(p, std::move(elements), max_length, cat, hom_budget, jobs);
}

bool growth_precedes(const GrowthTable& f, const GrowthTable& g, long c) {
  if (c < 1) throw InputError("comparison constant must be at least 1");
  std::size_t checked = 0;
  for (const GrowthRow& row : f.rows) {
    const long gm = row.m * c;
    if (gm < 1 || gm > static_cast<long>(g.rows.size())) continue;
    const GrowthRow& grow = g.rows[static_cast<std::size_t>(gm - 1)];
    ++checked;
    if (row.exhausted && !grow.exhausted) return false;
    if (row.value > c * grow.value) return false;
  }
  if (checked == 0) throw InputError("no comparable rows; compute g out to c times f's range");
  return true;
}

ClassComparison compare_classes(const Presentation& p, unsigned max_length,
                                const TargetCatalog& all_cat, const TargetCatalog& gl_cat,
                                const TargetCatalog& simple_cat, std::size_t ball_budget,
                                std::size_t hom_budget, std::size_t jobs) {
  if (all_cat.cls != TargetClass::All || gl_cat.cls != TargetClass::GL ||
      simple_cat.cls != TargetClass::Simple) {
    throw InputError("compare_classes wants catalogs of class ALL, GL, SIMPLE in that order");
  }
  if (all_cat.order_limit != gl_cat.order_limit ||
      all_cat.order_limit != simple_cat.order_limit) {
    throw InputError("compare_classes needs a shared order limit");
  }

  ClassComparison cmp;
  cmp.all = growth(p, max_length, all_cat, ball_budget, hom_budget, jobs);
  cmp.gl = growth(p, max_length, gl_cat, ball_budget, hom_budget, jobs);
  cmp.simple = growth(p, max_length, simple_cat, ball_budget, hom_budget, jobs);
  for (unsigned m = 1; m <= max_length; ++m) {
    const GrowthRow& a = cmp.all.rows[m - 1];
    const GrowthRow& l = cmp.gl.rows[m - 1];
    const GrowthRow& s = cmp.simple.rows[m - 1];
    ComparisonRow row;
    row.m = static_cast<long>(m);
    row.all_value = a.value;
    row.gl_value = l.value;
    row.simple_value = s.value;
    const bool le_gl = a.exhausted ? l.exhausted : (l.exhausted || a.value <= l.value);
    const bool le_simple = a.exhausted ? s.exhausted : (s.exhausted || a.value <= s.value);
    row.ok = le_gl && le_simple;
    cmp.ok = cmp.ok && row.ok;
    cmp.rows.push_back(row);
  }
  return cmp;
}

RatioCurve ratio_experiment(const Word& gamma, const Word& gamma0, long jmax, long kmax,
                            const Presentation& p, const TargetCatalog& cat,
                            std::size_t hom_budget) {
  if (cat.cls == TargetClass::All) {
    throw InputError("ratio experiment wants a GL or SIMPLE catalog");
  }
  if (jmax < 2) throw InputError("ratio experiment needs jmax >= 2");

  RatioCurve curve;
  for (long j = 2; j <= jmax; ++j) {
    TjSet tj = build_tj(gamma, gamma0, j, kmax, p);
    CommonMultiple cm = common_multiple(tj.elements, kmax, p);

    RatioPoint pt;
    pt.j = j;
    pt.eta_length = cm.word.length();
    pt.fitted_cubic = static_cast<double>(cm.word.length()) /
                      (static_cast<double>(gamma0.length()) * static_cast<double>(j) *
                       static_cast<double>(j) * static_cast<double>(j));

    DetectionResult det = detect(cm.word, p, cat, hom_budget);
    if (det.exhausted) {
      pt.exhausted = true;
      curve.points.push_back(pt);
      curve.truncated = true;
      break;
    }
    pt.detected_order = det.order;
    pt.exact = det.exact;
    const TargetGroup& g = det.witness->target;
    pt.witness_group = g.name();
    pt.image_order = element_order(evaluate(*det.witness, gamma0));
    if (pt.image_order < static_cast<unsigned long>(j) + 1) {
      throw ConstructionError("detected common multiple left a base image of order " +
                              std::to_string(pt.image_order) + " < j+1");
    }
    const long m1 = static_cast<long>(g.max_element_order());
    pt.ratio = std::log(static_cast<double>(det.order)) / std::log(static_cast<double>(m1));
    curve.points.push_back(pt);
  }
  return curve;
}

}  // namespace rfg
