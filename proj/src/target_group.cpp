#include "rfg/target_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rfg/errors.hpp"
#include "rfg/numbers.hpp"

namespace rfg {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<long, long>> prime_power_decomposition(long q) {
  if (q < 2) return std::nullopt;
  long p = q;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  long t = 0;
  for (long rest = q; rest > 1; rest /= p, ++t)
    if (rest % p != 0) return std::nullopt;
  return std::make_pair(p, t);
}

namespace {

void require_prime_power(long q) {
  if (!prime_power_decomposition(q))
    throw InputError("field size " + std::to_string(q) + " is not a prime power");
}

Permutation reversal(int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = degree - 1 - i;
  return Permutation::from_images(std::move(img));
}

}  // namespace

TargetGroup TargetGroup::cyclic(long m) {
  if (m < 1) throw InputError("cyclic group order must be at least 1");
  return TargetGroup(GroupKind::Cyclic, m, 0);
}

TargetGroup TargetGroup::dihedral(long m) {
  if (m < 3) throw InputError("dihedral groups are supported for m >= 3");
  return TargetGroup(GroupKind::Dihedral, m, 0);
}

TargetGroup TargetGroup::sym(long n) {
  if (n < 1) throw InputError("symmetric group degree must be at least 1");
  return TargetGroup(GroupKind::Sym, n, 0);
}

TargetGroup TargetGroup::alt(long n) {
  if (n < 2) throw InputError("alternating group degree must be at least 2");
  return TargetGroup(GroupKind::Alt, n, 0);
}

TargetGroup TargetGroup::gl(int n, long q) {
  if (n < 1) throw InputError("matrix dimension must be positive");
  require_prime_power(q);
  return TargetGroup(GroupKind::GL, n, q);
}

TargetGroup TargetGroup::sl(int n, long q) {
  if (n < 1) throw InputError("matrix dimension must be positive");
  require_prime_power(q);
  return TargetGroup(GroupKind::SL, n, q);
}

TargetGroup TargetGroup::psl(int n, long q) {
  if (n < 2) throw InputError("projective special linear groups need dimension >= 2");
  require_prime_power(q);
  return TargetGroup(GroupKind::PSL, n, q);
}

TargetGroup TargetGroup::pgl(int n, long q) {
  if (n < 1) throw InputError("matrix dimension must be positive");
  require_prime_power(q);
  return TargetGroup(GroupKind::PGL, n, q);
}

TargetGroup TargetGroup::parse(const std::string& name) {
  auto open = name.find('(');
  if (open == std::string::npos || name.empty() || name.back() != ')')
    throw InputError("group name must look like Kind(args): " + name);
  std::string kind = name.substr(0, open);
  std::string args = name.substr(open + 1, name.size() - open - 2);
  std::vector<long> vals;
  std::size_t pos = 0;
  while (pos <= args.size()) {
    auto comma = args.find(',', pos);
    std::string tok = args.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) throw InputError("empty argument in group name: " + name);
    try {
      vals.push_back(std::stol(tok));
    } catch (const std::exception&) {
      throw InputError("group name argument is not an integer: " + name);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  auto unary = [&](auto make) {
    if (vals.size() != 1) throw InputError("expected one argument: " + name);
    return make(vals[0]);
  };
  auto binary = [&](auto make) {
    if (vals.size() != 2) throw InputError("expected two arguments: " + name);
    return make(static_cast<int>(vals[0]), vals[1]);
  };
  if (kind == "Cyclic") return unary(&TargetGroup::cyclic);
  if (kind == "Dihedral") return unary(&TargetGroup::dihedral);
  if (kind == "Sym") return unary(&TargetGroup::sym);
  if (kind == "Alt") return unary(&TargetGroup::alt);
  if (kind == "GL") return binary(&TargetGroup::gl);
  if (kind == "SL") return binary(&TargetGroup::sl);
  if (kind == "PSL") return binary(&TargetGroup::psl);
  if (kind == "PGL") return binary(&TargetGroup::pgl);
  throw InputError("unknown group kind: " + kind);
}

std::string TargetGroup::name() const {
  switch (kind_) {
    case GroupKind::Cyclic:
      return "Cyclic(" + std::to_string(n_) + ")";
    case GroupKind::Dihedral:
      return "Dihedral(" + std::to_string(n_) + ")";
    case GroupKind::Sym:
      return "Sym(" + std::to_string(n_) + ")";
    case GroupKind::Alt:
      return "Alt(" + std::to_string(n_) + ")";
    case GroupKind::GL:
      return "GL(" + std::to_string(n_) + "," + std::to_string(q_) + ")";
    case GroupKind::SL:
      return "SL(" + std::to_string(n_) + "," + std::to_string(q_) + ")";
    case GroupKind::PSL:
      return "PSL(" + std::to_string(n_) + "," + std::to_string(q_) + ")";
    case GroupKind::PGL:
      return "PGL(" + std::to_string(n_) + "," + std::to_string(q_) + ")";
  }
  throw InternalError("unhandled group kind");
}

BigInt TargetGroup::order() const {
  auto factorial = [](long n) {
    BigInt f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (kind_) {
    case GroupKind::Cyclic:
      return n_;
    case GroupKind::Dihedral:
      return 2 * BigInt(n_);
    case GroupKind::Sym:
      return factorial(n_);
    case GroupKind::Alt:
      return factorial(n_) / 2;
    case GroupKind::GL:
    case GroupKind::SL:
    case GroupKind::PSL:
    case GroupKind::PGL: {
      BigInt qn = boost::multiprecision::pow(BigInt(q_), static_cast<unsigned>(n_));
      BigInt gl = 1;
      BigInt qi = 1;
      for (long i = 0; i < n_; ++i) {
        gl *= qn - qi;
        qi *= q_;
      }
      if (kind_ == GroupKind::GL) return gl;
      BigInt sl = gl / (q_ - 1);
      if (kind_ == GroupKind::SL || kind_ == GroupKind::PGL) return sl;
      return sl / boost::multiprecision::gcd(BigInt(n_), BigInt(q_ - 1));
    }
  }
  throw InternalError("unhandled group kind");
}

bool TargetGroup::is_simple() const {
  switch (kind_) {
    case GroupKind::Cyclic:
      return is_prime(n_);
    case GroupKind::Alt:
      return n_ >= 5;
    case GroupKind::PSL:
      return !(n_ == 2 && (q_ == 2 || q_ == 3));
    default:
      return false;
  }
}

GroupElement TargetGroup::identity() const {
  switch (kind_) {
    case GroupKind::Cyclic:
    case GroupKind::Dihedral:
    case GroupKind::Sym:
    case GroupKind::Alt:
      return Permutation::identity(static_cast<int>(n_));
    case GroupKind::GL:
    case GroupKind::SL:
      return Matrix::identity(FiniteField::of(q_), static_cast<int>(n_));
    case GroupKind::PSL:
    case GroupKind::PGL:
      return ProjectiveClass::of(Matrix::identity(FiniteField::of(q_), static_cast<int>(n_)));
  }
  throw InternalError("unhandled group kind");
}

std::vector<GroupElement> TargetGroup::elements(std::size_t budget) const {
  if (order() > budget)
    throw ResourceError("group " + name() + " exceeds the element budget of " +
                        std::to_string(budget));
  std::vector<GroupElement> out;
  switch (kind_) {
    case GroupKind::Cyclic: {
      Permutation c = Permutation::cycle(static_cast<int>(n_));
      Permutation acc = Permutation::identity(static_cast<int>(n_));
      for (long k = 0; k < n_; ++k) {
        out.emplace_back(acc);
        acc = acc * c;
      }
      break;
    }
    case GroupKind::Dihedral: {
      Permutation c = Permutation::cycle(static_cast<int>(n_));
      Permutation s = reversal(static_cast<int>(n_));
      Permutation acc = Permutation::identity(static_cast<int>(n_));
      for (long k = 0; k < n_; ++k) {
        out.emplace_back(acc);
        acc = acc * c;
      }
      acc = s;
      for (long k = 0; k < n_; ++k) {
        out.emplace_back(acc);
        acc = acc * c;
      }
      break;
    }
    case GroupKind::Sym:
    case GroupKind::Alt: {
      std::vector<int> img(n_);
      std::iota(img.begin(), img.end(), 0);
      do {
        Permutation p = Permutation::from_images(img);
        if (kind_ == GroupKind::Sym || p.is_even()) out.emplace_back(std::move(p));
      } while (std::next_permutation(img.begin(), img.end()));
      break;
    }
    case GroupKind::GL:
    case GroupKind::SL: {
      const FiniteField& f = FiniteField::of(q_);
      int n = static_cast<int>(n_);
      std::vector<Fel> cells(static_cast<std::size_t>(n) * n, 0);
      while (true) {
        Matrix m(&f, n, cells);
        Fel d = m.det();
        if (kind_ == GroupKind::GL ? d != 0 : d == 1) out.emplace_back(std::move(m));
        int cell = n * n - 1;
        while (cell >= 0 && static_cast<long>(++cells[cell]) == q_) cells[cell--] = 0;
        if (cell < 0) break;
      }
      break;
    }
    case GroupKind::PSL:
    case GroupKind::PGL: {
      TargetGroup cover = kind_ == GroupKind::PSL ? sl(static_cast<int>(n_), q_)
                                                  : gl(static_cast<int>(n_), q_);
      std::set<ProjectiveClass> classes;
      for (const GroupElement& g : cover.elements(budget * (q_ - 1)))
        classes.insert(ProjectiveClass::of(std::get<Matrix>(g)));
      for (const ProjectiveClass& c : classes) out.emplace_back(c);
      break;
    }
  }
  return out;
}

BigInt TargetGroup::max_element_order(std::size_t scan_budget) const {
  switch (kind_) {
    case GroupKind::Cyclic:
      return n_;
    case GroupKind::Dihedral:
      return n_;
    case GroupKind::Sym:
      return max_partition_lcm(n_, false, scan_budget);
    case GroupKind::Alt:
      return max_partition_lcm(n_, true, scan_budget);
    case GroupKind::GL:
      return boost::multiprecision::pow(BigInt(q_), static_cast<unsigned>(n_)) - 1;
    case GroupKind::SL:
    case GroupKind::PSL:
    case GroupKind::PGL:
      return max_element_order_by_scan(scan_budget);
  }
  throw InternalError("unhandled group kind");
}

BigInt TargetGroup::max_element_order_by_scan(std::size_t scan_budget) const {
  if (order() > scan_budget)
    throw ResourceError("group " + name() + " exceeds the element-order scan budget of " +
                        std::to_string(scan_budget));
  unsigned long best = 1;
  for (const GroupElement& g : elements(scan_budget))
    best = std::max(best, element_order(g));
  return best;
}

namespace {

void partition_lcms(long remaining, long max_part, long parts, long total, bool even_only,
                    const BigInt& acc, BigInt& best, std::size_t& visited, std::size_t budget) {
  if (++visited > budget)
    throw ResourceError("partition scan budget of " + std::to_string(budget) + " exceeded");
  if (remaining == 0) {
    if (!even_only || (total - parts) % 2 == 0) best = std::max(best, acc);
    return;
  }
  for (long part = std::min(remaining, max_part); part >= 1; --part)
    partition_lcms(remaining - part, part, parts + 1, total, even_only,
                   boost::multiprecision::lcm(acc, BigInt(part)), best, visited, budget);
}

}  // namespace

BigInt max_partition_lcm(long n, bool even_only, std::size_t budget) {
  if (n < 1) throw InputError("partition scans need n >= 1");
  BigInt best = 1;
  std::size_t visited = 0;
  partition_lcms(n, n, 0, n, even_only, 1, best, visited, budget);
  return best;
}

}  // namespace rfg
