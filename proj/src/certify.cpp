#include "rfg/certify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "rfg/errors.hpp"
#include "rfg/group_element.hpp"

namespace rfg {

namespace {

bool commutes_nontrivially(const Word& gamma, const Word& mu, const Word& eta,
                           const Presentation& p) {
  Word c = commutator(gamma.conjugated_by(mu), eta);
  return !is_trivial(c, p);
}

// Reduced words of the next length, extended in letter-key order so that a
// lexicographically sorted layer stays sorted.
std::vector<Word> extend_layer(const std::vector<Word>& layer, int rank) {
  std::vector<Word> next;
  next.reserve(layer.size() * 2 * rank);
  for (const Word& w : layer) {
    for (int g = 1; g <= rank; ++g) {
      for (Letter l : {static_cast<Letter>(g), static_cast<Letter>(-g)}) {
        if (!w.empty() && w.letters().back() == letter_inverse(l)) continue;
        std::vector<Letter> ls = w.letters();
        ls.push_back(l);
        next.push_back(Word::from_letters(ls));
      }
    }
  }
  return next;
}

// Witness-carrying node of the pairing recursion. Keys are indices into the
// padded input list.
struct Node {
  Word word;
  std::map<std::size_t, ConjugateProduct> wit;
};

// Given x expressed as a conjugate product of some base, re-express an outer
// product of x-conjugates over that base. Inverted outer factors reverse the
// inner factor order and flip signs.
void append_composed(std::vector<ConjugateFactor>& out,
                     const std::vector<ConjugateFactor>& inner,
                     const ConjugateFactor& outer) {
  if (outer.sign > 0) {
    for (const ConjugateFactor& f : inner) {
      out.push_back({f.conjugator * outer.conjugator, f.sign});
    }
  } else {
    for (auto it = inner.rbegin(); it != inner.rend(); ++it) {
      out.push_back({it->conjugator * outer.conjugator, -it->sign});
    }
  }
}

Node combine(const Node& x, const Node& y, const Word& mu) {
  Node out;
  Word z = x.word.conjugated_by(mu);
  out.word = commutator(z, y.word);
  // Over x the commutator is (mu)^-1 x^-1 (mu) * (mu y)^-1 x (mu y);
  // over y it is (z)^-1 y^-1 (z) * y.
  std::vector<ConjugateFactor> over_x = {{mu, -1}, {mu * y.word, +1}};
  std::vector<ConjugateFactor> over_y = {{z, -1}, {Word(), +1}};
  for (const auto& [idx, cp] : x.wit) {
    ConjugateProduct composed;
    composed.base = cp.base;
    for (const ConjugateFactor& outer : over_x) {
      append_composed(composed.factors, cp.factors, outer);
    }
    out.wit.emplace(idx, std::move(composed));
  }
  for (const auto& [idx, cp] : y.wit) {
    if (out.wit.count(idx)) continue;
    ConjugateProduct composed;
    composed.base = cp.base;
    for (const ConjugateFactor& outer : over_y) {
      append_composed(composed.factors, cp.factors, outer);
    }
    out.wit.emplace(idx, std::move(composed));
  }
  return out;
}

}  // namespace

Word evaluate_conjugate_product(const ConjugateProduct& cp) {
  Word product;
  for (const ConjugateFactor& f : cp.factors) {
    Word piece = (f.sign > 0 ? cp.base : cp.base.inverse()).conjugated_by(f.conjugator);
    product = product * piece;
  }
  return product;
}

Word find_conjugator(const Word& gamma, const Word& eta, long k_max,
                     const Presentation& p) {
  if (is_trivial(gamma, p) || is_trivial(eta, p)) {
    throw InputError("conjugator search needs nontrivial inputs");
  }
  std::vector<Word> layer = {Word()};
  for (long len = 0; len <= k_max; ++len) {
    for (const Word& mu : layer) {
      if (commutes_nontrivially(gamma, mu, eta, p)) return mu;
    }
    if (len < k_max) layer = extend_layer(layer, p.rank());
  }
  std::ostringstream os;
  os << "no conjugator within radius " << k_max
     << "; the group may not be malabelian at this radius";
  throw SearchExhaustedError(os.str());
}

CommonMultiple common_multiple(const std::vector<Word>& t_set, long k_max,
                               const Presentation& p) {
  if (t_set.empty()) throw InputError("common multiple needs a nonempty set");
  for (const Word& w : t_set) {
    if (is_trivial(w, p)) {
      throw InputError("common multiple inputs must be nontrivial");
    }
  }

  std::vector<Node> level;
  for (std::size_t i = 0; i < t_set.size(); ++i) {
    Node n;
    n.word = t_set[i];
    n.wit.emplace(i, ConjugateProduct{t_set[i], {{Word(), +1}}});
    level.push_back(std::move(n));
  }
  // Pad with copies of the final element; a common multiple for the padded
  // multiset is one for its support.
  std::size_t padded = 1;
  while (padded < t_set.size()) padded *= 2;
  while (level.size() < padded) level.push_back(level.back());

  long radius = 0;
  while (level.size() > 1) {
    std::vector<Node> next;
    next.reserve(level.size() / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      Word mu = find_conjugator(level[i].word, level[i + 1].word, k_max, p);
      radius = std::max(radius, static_cast<long>(mu.length()));
      next.push_back(combine(level[i], level[i + 1], mu));
    }
    level = std::move(next);
  }

  CommonMultiple cm;
  cm.word = level[0].word;
  cm.t_set = t_set;
  cm.radius = radius;
  for (std::size_t i = 0; i < t_set.size(); ++i) {
    cm.witnesses.push_back(level[0].wit.at(i));
  }
  return cm;
}

bool verify_witness(const CommonMultiple& cm, std::string* first_failure) {
  if (cm.witnesses.size() != cm.t_set.size()) {
    if (first_failure) *first_failure = "witness count differs from the set size";
    return false;
  }
  for (std::size_t i = 0; i < cm.witnesses.size(); ++i) {
    if (cm.witnesses[i].base != cm.t_set[i]) {
      if (first_failure) {
        std::ostringstream os;
        os << "witness " << i << " certifies a different base";
        *first_failure = os.str();
      }
      return false;
    }
    if (evaluate_conjugate_product(cm.witnesses[i]) != cm.word) {
      if (first_failure) {
        std::ostringstream os;
        os << "witness " << i << " does not reduce to the common multiple";
        *first_failure = os.str();
      }
      return false;
    }
  }
  return true;
}

TransferReport certificate_transfer_check(const CommonMultiple& cm,
                                          const Homomorphism& h) {
  TransferReport rep;
  GroupElement image = evaluate(h, cm.word);
  if (ge_is_identity(image)) {
    rep.vacuous = true;
    return rep;
  }
  rep.pass = true;
  for (const Word& gamma : cm.t_set) {
    ++rep.checked;
    if (ge_is_identity(evaluate(h, gamma))) {
      rep.pass = false;
      break;
    }
  }
  return rep;
}

TjSet build_tj(const Word& gamma, const Word& gamma0, long j, long k_max,
               const Presentation& p) {
  if (j < 2) throw InputError("the power set needs j >= 2");
  if (is_trivial(gamma, p) || is_trivial(gamma0, p)) {
    throw InputError("the power set needs nontrivial inputs");
  }
  TjSet out;
  out.gamma = gamma;
  out.gamma0 = gamma0;
  out.j = j;
  out.mu0 = find_conjugator(gamma, gamma0, k_max, p);
  out.elements.push_back(commutator(gamma.conjugated_by(out.mu0), gamma0));
  for (long i = 2; i <= j; ++i) {
    Word power = gamma0.pow(i);
    if (is_trivial(power, p)) {
      throw ConstructionError("a power of the base element vanishes; it must have infinite order");
    }
    out.elements.push_back(std::move(power));
  }
  return out;
}

LcmAudit lcm_length_audit(const std::vector<Word>& t_set,
                          const CommonMultiple& cm, long k_max) {
  if (t_set.empty()) throw InputError("length audit needs a nonempty set");
  LcmAudit audit;
  audit.t = t_set.size();
  for (const Word& w : t_set) audit.d = std::max(audit.d, w.length());
  audit.length = cm.word.length();
  double dt2 = static_cast<double>(audit.d) * static_cast<double>(audit.t) *
               static_cast<double>(audit.t);
  audit.fitted = dt2 > 0 ? static_cast<double>(audit.length) / dt2 : 0.0;
  audit.cap = 8.0 * static_cast<double>(k_max + 1) * dt2;
  if (static_cast<double>(audit.length) > audit.cap) {
    throw ConstructionError("common multiple length exceeds the quadratic cap");
  }
  return audit;
}

}  // namespace rfg
