#include "rfg/induction.hpp"

#include <cstddef>
#include <cstdlib>
#include <limits>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "rfg/errors.hpp"
#include "rfg/finite_field.hpp"

namespace rfg {

namespace {

// Image of one letter under the quotient homomorphism.
GroupElement letter_image(const Homomorphism& h, Letter l) {
  const GroupElement& base = h.images[static_cast<std::size_t>(std::abs(l)) - 1];
  return l > 0 ? base : ge_inverse(base);
}

// Schreier generator of the (coset, generator) pair, empty when the edge
// stays inside the transversal.
Word schreier_word(const CosetStructure& cs, std::size_t i, int g) {
  std::size_t j = cs.table[static_cast<std::size_t>(g) - 1][i];
  return cs.transversal[i] * Word::generator(g) * cs.transversal[j].inverse();
}

// Schreier generators together with their 1-based positions; position 0
// marks a trivial pair.
struct SgenIndex {
  std::vector<Word> gens;
  // by_pair[g-1][i] for the pair (coset i, generator g)
  std::vector<std::vector<std::size_t>> by_pair;
};

SgenIndex build_sgen_index(const CosetStructure& cs) {
  SgenIndex out;
  int k = cs.ambient.rank();
  out.by_pair.assign(static_cast<std::size_t>(k), std::vector<std::size_t>(cs.index(), 0));
  for (std::size_t i = 0; i < cs.index(); ++i) {
    for (int g = 1; g <= k; ++g) {
      Word u = schreier_word(cs, i, g);
      if (u.empty()) continue;
      out.gens.push_back(std::move(u));
      out.by_pair[static_cast<std::size_t>(g) - 1][i] = out.gens.size();
    }
  }
  return out;
}

}  // namespace

CosetStructure coset_structure(const Presentation& p, const Homomorphism& h) {
  if (!p.is_free()) throw UnsupportedError("coset structure supports free presentations only");
  if (!(h.source.alphabet() == p.alphabet()))
    throw InputError("homomorphism alphabet does not match the presentation");

  CosetStructure cs{p, h, {}, {}};

  GroupElement id = evaluate_word(h.target, h.images, Word());
  std::map<GroupElement, std::size_t> coset_of;
  std::vector<GroupElement> elts;
  coset_of.emplace(id, 0);
  elts.push_back(id);
  cs.transversal.push_back(Word());

  int k = p.rank();
  // Breadth-first over image elements, letters in shortlex order, so each
  // representative is the shortlex-least word in its coset and every prefix
  // of a representative is again one.
  for (std::size_t head = 0; head < cs.transversal.size(); ++head) {
    for (int g = 1; g <= k; ++g) {
      for (Letter l : {static_cast<Letter>(g), static_cast<Letter>(-g)}) {
        GroupElement next = ge_mul(elts[head], letter_image(h, l));
        if (coset_of.emplace(next, cs.transversal.size()).second) {
          cs.transversal.push_back(cs.transversal[head] * Word::from_letters({l}));
          elts.push_back(next);
        }
      }
    }
  }

  cs.table.assign(static_cast<std::size_t>(k), std::vector<std::size_t>(cs.index(), 0));
  for (int g = 1; g <= k; ++g) {
    for (std::size_t i = 0; i < cs.index(); ++i) {
      GroupElement moved = ge_mul(elts[i], h.images[static_cast<std::size_t>(g) - 1]);
      cs.table[static_cast<std::size_t>(g) - 1][i] = coset_of.at(moved);
    }
  }
  return cs;
}

std::vector<Word> schreier_generators(const CosetStructure& cs) {
  return build_sgen_index(cs).gens;
}

Word rewrite(const CosetStructure& cs, const Word& w) {
  if (!ge_is_identity(evaluate(cs.quotient_hom, w)))
    throw MembershipError("rewrite needs a word in the kernel");

  SgenIndex sg = build_sgen_index(cs);
  if (sg.gens.size() > static_cast<std::size_t>(std::numeric_limits<Letter>::max()))
    throw ResourceError("too many Schreier generators for one alphabet");

  std::vector<Letter> out;
  std::size_t coset = 0;
  for (Letter l : w.letters()) {
    std::size_t g = static_cast<std::size_t>(std::abs(l)) - 1;
    if (l > 0) {
      std::size_t idx = sg.by_pair[g][coset];
      if (idx != 0) out.push_back(static_cast<Letter>(idx));
      coset = cs.table[g][coset];
    } else {
      std::size_t from = 0;
      while (cs.table[g][from] != coset) ++from;
      std::size_t idx = sg.by_pair[g][from];
      if (idx != 0) out.push_back(static_cast<Letter>(-static_cast<long>(idx)));
      coset = from;
    }
  }
  return Word::from_letters(std::span<const Letter>(out.data(), out.size()));
}

InducedRep induce(const CosetStructure& cs, const std::vector<Matrix>& base) {
  SgenIndex sg = build_sgen_index(cs);
  if (base.size() != sg.gens.size())
    throw InputError("induce needs one base matrix per Schreier generator");
  if (base.empty()) throw InputError("induce needs at least one Schreier generator");
  const FiniteField& f = base[0].field();
  int n = base[0].n();
  for (const Matrix& b : base) {
    if (&b.field() != &f) throw InputError("base matrices must share one field");
    if (b.n() != n) throw InputError("base matrices must share one dimension");
  }

  InducedRep rep;
  rep.index = cs.index();
  rep.base_dim = n;
  rep.dim = cs.index() * static_cast<std::size_t>(n);
  rep.q = f.q();
  rep.base = base;

  Matrix id = Matrix::identity(f, n);
  int k = cs.ambient.rank();
  for (int g = 1; g <= k; ++g) {
    std::vector<std::vector<long>> rows(rep.dim, std::vector<long>(rep.dim, 0));
    for (std::size_t i = 0; i < cs.index(); ++i) {
      std::size_t j = cs.table[static_cast<std::size_t>(g) - 1][i];
      std::size_t idx = sg.by_pair[static_cast<std::size_t>(g) - 1][i];
      const Matrix& block = idx == 0 ? id : base[idx - 1];
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          rows[i * n + r][j * n + c] = static_cast<long>(block.at(r, c));
    }
    rep.images.push_back(Matrix::from_rows(f, rows));
  }
  return rep;
}

Matrix induced_evaluate(const InducedRep& rep, const Word& w) {
  const FiniteField& f = FiniteField::of(rep.q);
  Matrix acc = Matrix::identity(f, static_cast<int>(rep.dim));
  for (Letter l : w.letters()) {
    std::size_t g = static_cast<std::size_t>(std::abs(l)) - 1;
    if (g >= rep.images.size()) throw InputError("word uses a generator outside the representation");
    acc = l > 0 ? acc * rep.images[g] : acc * rep.images[g].inverse();
  }
  return acc;
}

InductionSizeCheck induction_size_check(int n, long ell, long q) {
  if (n < 1 || ell < 1) throw InputError("size check needs n >= 1 and ell >= 1");
  InductionSizeCheck out;
  out.n = n;
  out.ell = ell;
  out.q = q;
  out.base_order = TargetGroup::gl(n, q).order();
  out.induced_order = TargetGroup::gl(static_cast<int>(n * ell), q).order();
  out.bound = 1;
  for (long e = 0; e < 2 * ell * ell; ++e) out.bound *= out.base_order;
  out.ok = out.induced_order <= out.bound;
  out.asserted = n >= 2;
  return out;
}

PslReport psl_project(const Matrix& m) {
  if (m.n() < 2) throw InputError("psl projection needs dimension at least 2");
  if (m.det() != 1) throw InputError("psl projection needs determinant one");
  long n = m.n();
  long q = m.field().q();
  PslReport out{ProjectiveClass::of(m), TargetGroup::psl(static_cast<int>(n), q).order(),
                BigInt(1), false};
  for (long e = 0; e < n * n; ++e) out.bound *= q;
  out.bound_ok = out.psl_order <= out.bound;
  return out;
}

}  // namespace rfg
