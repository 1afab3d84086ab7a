#include "rfg/finite_field.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "rfg/bigint.hpp"
#include "rfg/errors.hpp"

namespace rfg {

namespace {

constexpr long kMaxFieldSize = 1L << 20;

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Coefficient vectors are low degree first; the leading coefficient of a
// monic polynomial is stored explicitly.
std::vector<int> decode_poly(long code, long p, long len) {
  std::vector<int> c(len);
  for (long i = 0; i < len; ++i) {
    c[i] = static_cast<int>(code % p);
    code /= p;
  }
  return c;
}

// Remainder of a by monic b over F_p.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, long p) {
  long db = static_cast<long>(b.size()) - 1;
  for (long i = static_cast<long>(a.size()) - 1; i >= db; --i) {
    int c = a[i];
    if (c == 0) continue;
    for (long j = 0; j <= db; ++j) {
      long k = i - db + j;
      a[k] = static_cast<int>(((a[k] - static_cast<long>(c) * b[j]) % p + p * p) % p);
    }
  }
  a.resize(db);
  return a;
}

bool is_zero_poly(const std::vector<int>& a) {
  for (int c : a)
    if (c != 0) return false;
  return true;
}

bool is_irreducible(const std::vector<int>& m, long p) {
  long t = static_cast<long>(m.size()) - 1;
  for (long d = 1; 2 * d <= t; ++d) {
    long count = 1;
    for (long i = 0; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      std::vector<int> div = decode_poly(code, p, d);
      div.push_back(1);
      if (is_zero_poly(poly_mod(m, div, p))) return false;
    }
  }
  return true;
}

}  // namespace

const FiniteField& FiniteField::of(long q) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<FiniteField>> registry;
  std::scoped_lock lock(mu);
  auto it = registry.find(q);
  if (it == registry.end())
    it = registry.emplace(q, std::unique_ptr<FiniteField>(new FiniteField(q))).first;
  return *it->second;
}

FiniteField::FiniteField(long q) {
  if (q < 2) throw InputError("field size must be at least 2");
  if (q > kMaxFieldSize)
    throw UnsupportedError("field size " + std::to_string(q) + " exceeds supported maximum " +
                           std::to_string(kMaxFieldSize));
  long p = 0;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;
  long t = 0;
  long rest = q;
  while (rest > 1) {
    if (rest % p != 0)
      throw InputError("field size " + std::to_string(q) + " is not a prime power");
    rest /= p;
    ++t;
  }
  if (!is_prime(p)) throw InputError("field characteristic must be prime");
  p_ = p;
  t_ = t;
  q_ = q;
  if (t == 1) {
    modulus_ = {0, 1};
  } else {
    for (long code = 0; code < q; ++code) {
      std::vector<int> cand = decode_poly(code, p, t);
      cand.push_back(1);
      if (is_irreducible(cand, p)) {
        modulus_ = cand;
        break;
      }
    }
  }
  if (q <= 256) {
    add_table_.resize(static_cast<std::size_t>(q) * q);
    mul_table_.resize(static_cast<std::size_t>(q) * q);
    for (long a = 0; a < q; ++a)
      for (long b = 0; b < q; ++b) {
        Fel fa = static_cast<Fel>(a), fb = static_cast<Fel>(b);
        std::size_t idx = static_cast<std::size_t>(a) * q + b;
        if (t == 1) {
          add_table_[idx] = static_cast<Fel>((a + b) % p);
          mul_table_[idx] = static_cast<Fel>((a * b) % p);
        } else {
          long sum = 0;
          for (long i = 0, pa = a, pb = b, pw = 1; i < t; ++i, pa /= p, pb /= p, pw *= p)
            sum += ((pa + pb) % p) * pw;
          add_table_[idx] = static_cast<Fel>(sum);
          mul_table_[idx] = mul_slow(fa, fb);
        }
      }
  }
}

Fel FiniteField::add(Fel a, Fel b) const {
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
  if (t_ == 1) return static_cast<Fel>((static_cast<long>(a) + b) % p_);
  long sum = 0;
  long pa = a, pb = b, pw = 1;
  for (long i = 0; i < t_; ++i, pa /= p_, pb /= p_, pw *= p_) sum += ((pa % p_ + pb % p_) % p_) * pw;
  return static_cast<Fel>(sum);
}

Fel FiniteField::neg(Fel a) const {
  if (t_ == 1) return static_cast<Fel>((p_ - a) % p_);
  long sum = 0;
  long pa = a, pw = 1;
  for (long i = 0; i < t_; ++i, pa /= p_, pw *= p_) sum += ((p_ - pa % p_) % p_) * pw;
  return static_cast<Fel>(sum);
}

Fel FiniteField::mul_slow(Fel a, Fel b) const {
  if (t_ == 1) return static_cast<Fel>(static_cast<unsigned long long>(a) * b % p_);
  std::vector<int> da = decode_poly(a, p_, t_), db = decode_poly(b, p_, t_);
  std::vector<int> prod(2 * t_ - 1, 0);
  for (long i = 0; i < t_; ++i)
    for (long j = 0; j < t_; ++j)
      prod[i + j] = static_cast<int>((prod[i + j] + static_cast<long>(da[i]) * db[j]) % p_);
  std::vector<int> rem = poly_mod(std::move(prod), modulus_, p_);
  long code = 0, pw = 1;
  for (long i = 0; i < t_; ++i, pw *= p_) code += rem[i] * pw;
  return static_cast<Fel>(code);
}

Fel FiniteField::mul(Fel a, Fel b) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
  return mul_slow(a, b);
}

Fel FiniteField::pow(Fel a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Fel acc = 1;
  while (e > 0) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

Fel FiniteField::inv(Fel a) const {
  if (a == 0) throw InputError("zero has no multiplicative inverse");
  return pow(a, q_ - 2);
}

double log_big(const BigInt& x) {
  if (x <= 0) throw InputError("log_big requires a positive value");
  std::string hex = x.str(0, std::ios_base::hex);
  std::size_t take = std::min<std::size_t>(14, hex.size());
  double mantissa = 0;
  for (std::size_t i = 0; i < take; ++i) {
    char c = hex[i];
    mantissa = mantissa * 16 + (c <= '9' ? c - '0' : c - 'a' + 10);
  }
  return std::log(mantissa) + 4.0 * std::log(2.0) * (hex.size() - take);
}

}  // namespace rfg
