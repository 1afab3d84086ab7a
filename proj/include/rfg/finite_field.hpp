#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rfg {

// Field element code: the polynomial sum d_i x^i is encoded as the integer
// sum d_i p^i, so codes run over [0, q) and code 0/1 are the field's 0/1.
using Fel = std::uint32_t;

// F_{p^t} = F_p[x] / (modulus). The modulus is the least irreducible monic
// polynomial of degree t, comparing coefficient vectors from the highest
// degree down (equivalently, the least encoded integer). Instances are
// interned: of(q) returns the same object for equal q, so field identity
// can be checked by pointer.
class FiniteField {
 public:
  static const FiniteField& of(long q);

  long p() const { return p_; }
  long t() const { return t_; }
  long q() const { return q_; }
  // Coefficients low degree first, length t+1, leading entry 1.
  const std::vector<int>& modulus() const { return modulus_; }

  Fel add(Fel a, Fel b) const;
  Fel neg(Fel a) const;
  Fel sub(Fel a, Fel b) const { return add(a, neg(b)); }
  Fel mul(Fel a, Fel b) const;
  Fel inv(Fel a) const;  // a != 0
  Fel pow(Fel a, long long e) const;

 private:
  explicit FiniteField(long q);

  Fel mul_slow(Fel a, Fel b) const;

  long p_ = 0;
  long t_ = 0;
  long q_ = 0;
  std::vector<int> modulus_;
  // Full operation tables, built only for small q.
  std::vector<Fel> add_table_;
  std::vector<Fel> mul_table_;
};

}  // namespace rfg
