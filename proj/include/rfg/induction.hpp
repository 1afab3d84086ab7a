#pragma once

#include <cstddef>
#include <vector>

#include "rfg/bigint.hpp"
#include "rfg/group_element.hpp"
#include "rfg/homomorphism.hpp"
#include "rfg/presentation.hpp"
#include "rfg/word.hpp"

namespace rfg {

// Right-coset data for the kernel of a homomorphism onto a finite group.
// Cosets are indexed by the image elements of the transversal words;
// index 0 is the kernel itself.
struct CosetStructure {
  Presentation ambient;      // free
  Homomorphism quotient_hom;
  // Breadth-first shortlex representatives; prefix-closed, transversal[0]
  // is the empty word.
  std::vector<Word> transversal;
  // table[g-1][i] is the coset of transversal[i] * generator g; each row is
  // a permutation of the coset indices.
  std::vector<std::vector<std::size_t>> table;

  std::size_t index() const { return transversal.size(); }
};

CosetStructure coset_structure(const Presentation& p, const Homomorphism& h);

// Nontrivial words t * x * rep(t x)^-1 over transversal entries t and
// generators x, ordered by (coset, generator). For a free ambient group of
// rank k these freely generate the kernel; there are 1 + index*(k-1) of them.
std::vector<Word> schreier_generators(const CosetStructure& cs);

// Reidemeister-Schreier rewriting of a kernel word: the result's letter i
// stands for the i-th Schreier generator. Throws a membership error when w
// is not in the kernel.
Word rewrite(const CosetStructure& cs, const Word& w);

// Induced representation: each ambient generator becomes an index*n block
// matrix whose (i, sigma(i)) block is the base value of the Schreier
// generator carrying coset i across.
struct InducedRep {
  std::size_t index = 0;  // coset count
  int base_dim = 0;
  std::size_t dim = 0;  // base_dim * index
  long q = 0;
  std::vector<Matrix> base;    // aligned with schreier_generators
  std::vector<Matrix> images;  // one per ambient generator
};

// base[i] is the image of the i-th Schreier generator; all matrices must
// share one field and one dimension. Kernel elements with a nontrivial base
// value keep a nontrivial induced image.
InducedRep induce(const CosetStructure& cs, const std::vector<Matrix>& base);

// Evaluates the induced representation on an ambient word.
Matrix induced_evaluate(const InducedRep& rep, const Word& w);

// Order bookkeeping for the induced target: |GL(n*ell, q)| against the
// bound |GL(n, q)|^(2 ell^2). The bound can fail for n = 1 at small q,
// where |GL(1, q)| is tiny; those rows are reported, not asserted.
struct InductionSizeCheck {
  int n = 0;
  long ell = 0;
  long q = 0;
  BigInt induced_order;
  BigInt base_order;
  BigInt bound;
  bool ok = false;
  bool asserted = false;  // n >= 2
};

InductionSizeCheck induction_size_check(int n, long ell, long q);

// Reduction of a determinant-one matrix to its projective class, with the
// order of PSL(n, q) checked against q^(n^2).
struct PslReport {
  ProjectiveClass image;
  BigInt psl_order;
  BigInt bound;  // q^(n^2)
  bool bound_ok = false;
};

PslReport psl_project(const Matrix& m);

}  // namespace rfg
