#include "rfg/atlas.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "rfg/errors.hpp"
#include "rfg/numbers.hpp"

namespace rfg {

namespace {

BigInt pow_big(long base, long exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

BigInt factorial(long n) {
  BigInt total = 1;
  for (long i = 2; i <= n; ++i) total *= i;
  return total;
}

struct FamilyMeta {
  const char* name;
  bool takes_rank;
  bool takes_field;
  long min_rank;
};

const FamilyMeta& meta(Family f) {
  static const std::map<Family, FamilyMeta> table = {
      {Family::Alt, {"Alt", true, false, 5}},
      {Family::GL, {"GL", true, true, 1}},
      {Family::A, {"A", true, true, 1}},
      {Family::TwoA, {"2A", true, true, 2}},
      {Family::B, {"B", true, true, 2}},
      {Family::C, {"C", true, true, 3}},
      {Family::D, {"D", true, true, 4}},
      {Family::TwoD, {"2D", true, true, 4}},
      {Family::E6, {"E6", false, true, 0}},
      {Family::E7, {"E7", false, true, 0}},
      {Family::E8, {"E8", false, true, 0}},
      {Family::F4, {"F4", false, true, 0}},
      {Family::G2, {"G2", false, true, 0}},
      {Family::TwoE6, {"2E6", false, true, 0}},
      {Family::ThreeD4, {"3D4", false, true, 0}},
      {Family::TwoB2, {"2B2", false, true, 0}},
      {Family::TwoG2, {"2G2", false, true, 0}},
      {Family::TwoF4, {"2F4", false, true, 0}},
      {Family::CyclicPrime, {"Cyclic", false, true, 0}},
      {Family::Sporadic, {"Sporadic", false, false, 0}},
  };
  return table.at(f);
}

// Twisted Suzuki and Ree groups exist only over q = p^(2j+1) for their
// defining characteristic.
void check_twisted_field(Family f, long q) {
  long wanted_p = (f == Family::TwoG2) ? 3 : 2;
  auto pt = prime_power_decomposition(q);
  if (!pt || pt->first != wanted_p || pt->second % 2 == 0) {
    std::ostringstream os;
    os << meta(f).name << " needs q = " << wanted_p << "^(2j+1), got q = " << q;
    throw DomainError(os.str());
  }
}

void validate(const FamilyId& id) {
  const FamilyMeta& m = meta(id.family);
  if (m.takes_rank && id.n < m.min_rank) {
    std::ostringstream os;
    os << m.name << " needs n >= " << m.min_rank << ", got n = " << id.n;
    throw DomainError(os.str());
  }
  if (id.family == Family::CyclicPrime) {
    if (!is_prime(id.q)) {
      std::ostringstream os;
      os << "cyclic entries need a prime order, got " << id.q;
      throw DomainError(os.str());
    }
    return;
  }
  if (m.takes_field) {
    if (!prime_power_decomposition(id.q)) {
      std::ostringstream os;
      os << m.name << " needs a prime power q, got q = " << id.q;
      throw DomainError(os.str());
    }
    if (id.family == Family::TwoB2 || id.family == Family::TwoG2 ||
        id.family == Family::TwoF4) {
      check_twisted_field(id.family, id.q);
    }
  }
}

RankValue exact_rank(long v) {
  RankValue r;
  r.exact = v;
  return r;
}

RankValue rank_interval(long lo, long hi, std::string note = "") {
  RankValue r;
  r.range = {lo, hi};
  r.note = std::move(note);
  return r;
}

RankValue unavailable_rank(std::string note) {
  RankValue r;
  r.note = std::move(note);
  return r;
}

// r for the rank-n member, worst case over the field parameter; used by the
// threshold solve.
long rank_value_cap(Family f, long n) {
  switch (f) {
    case Family::GL:
      return n;  // upper end of the field-and-rank bracket
    case Family::A:
    case Family::TwoA:
      return n + 1;
    case Family::B:
      return n == 2 ? 4 : 2 * n + 1;
    case Family::C:
    case Family::D:
    case Family::TwoD:
      return 2 * n;
    case Family::Alt:
      return n - 2;
    default:
      throw InternalError("rank_value_cap outside the solve families");
  }
}

// Displayed lower bound of the ratio bracket at rank n.  The Alt form uses
// n! >= (n/e)^n, so it stays a valid lower bound with constant one.
double ratio_lower_bound(Family f, long n) {
  double x = static_cast<double>(n);
  switch (f) {
    case Family::GL:
      return x - 1;
    case Family::A:
      return (x * x - 3) / (x + 2);
    case Family::TwoA:
      return (x * x + 2 * x - 1) / (x + 1);
    case Family::B:
    case Family::C:
      return (2 * x * x + x - 2) / (x + 2);
    case Family::D:
    case Family::TwoD:
      return (2 * x * x - x - 2) / (x + 2);
    case Family::Alt:
      return (x * (std::log(x) - 1) - std::log(2.0)) / std::sqrt(x * std::log(x));
    default:
      throw InternalError("ratio_lower_bound outside the solve families");
  }
}

std::optional<double> ratio_upper_bound(Family f, long n) {
  double x = static_cast<double>(n);
  switch (f) {
    case Family::GL:
      if (n < 2) return std::nullopt;
      return x * x / (x - 1);
    case Family::A:
      if (n <= 2) return std::nullopt;
      return (x * x + 2 * x + 1) / (x - 2);
    case Family::TwoA:
      if (n <= 4) return std::nullopt;
      return (x * x + 2 * x + 1) / (x - 4);
    case Family::B:
    case Family::C:
      if (n <= 2) return std::nullopt;
      return (2 * x * x + x + 1) / (x - 2);
    case Family::D:
    case Family::TwoD:
      return (2 * x * x - x + 1) / (x - 2);
    default:
      return std::nullopt;
  }
}

}  // namespace

std::string family_name(const FamilyId& id) {
  const FamilyMeta& m = meta(id.family);
  std::ostringstream os;
  os << m.name;
  if (m.takes_rank && m.takes_field) {
    os << "(" << id.n << "," << id.q << ")";
  } else if (m.takes_rank) {
    os << "(" << id.n << ")";
  } else if (m.takes_field) {
    os << "(" << id.q << ")";
  }
  return os.str();
}

FamilyId parse_family(const std::string& text) {
  std::string tag = text;
  std::vector<long> args;
  auto open = text.find('(');
  if (open != std::string::npos) {
    if (text.empty() || text.back() != ')') {
      throw InputError("malformed family descriptor: " + text);
    }
    tag = text.substr(0, open);
    std::string body = text.substr(open + 1, text.size() - open - 2);
    std::istringstream is(body);
    std::string piece;
    while (std::getline(is, piece, ',')) {
      try {
        std::size_t used = 0;
        long v = std::stol(piece, &used);
        if (used != piece.size()) throw std::invalid_argument(piece);
        args.push_back(v);
      } catch (const std::exception&) {
        throw InputError("malformed family parameter: " + piece);
      }
    }
  }
  static const Family all[] = {
      Family::Alt,   Family::GL,    Family::A,       Family::TwoA,
      Family::B,     Family::C,     Family::D,       Family::TwoD,
      Family::E6,    Family::E7,    Family::E8,      Family::F4,
      Family::G2,    Family::TwoE6, Family::ThreeD4, Family::TwoB2,
      Family::TwoG2, Family::TwoF4, Family::CyclicPrime, Family::Sporadic};
  for (Family f : all) {
    const FamilyMeta& m = meta(f);
    if (tag != m.name) continue;
    std::size_t arity =
        (m.takes_rank ? 1u : 0u) + (m.takes_field ? 1u : 0u);
    if (args.size() != arity) {
      std::ostringstream os;
      os << m.name << " takes " << arity << " parameter(s), got " << args.size();
      throw InputError(os.str());
    }
    FamilyId id;
    id.family = f;
    std::size_t at = 0;
    if (m.takes_rank) id.n = args[at++];
    if (m.takes_field) id.q = args[at++];
    validate(id);
    return id;
  }
  throw InputError("unknown family: " + tag);
}

BigInt psu_order(long n, long q) {
  if (n < 3) throw DomainError("PSU order needs n >= 3");
  if (!prime_power_decomposition(q)) {
    throw DomainError("PSU order needs a prime power q");
  }
  BigInt total = pow_big(q, n * (n - 1) / 2);
  for (long i = 2; i <= n; ++i) {
    total *= pow_big(q, i) - (i % 2 == 0 ? 1 : -1);
  }
  return total / big_gcd(BigInt(n), BigInt(q + 1));
}

BigInt psp_order(long n, long q) {
  if (n < 2) throw DomainError("PSp order needs n >= 2");
  if (!prime_power_decomposition(q)) {
    throw DomainError("PSp order needs a prime power q");
  }
  BigInt total = pow_big(q, n * n);
  for (long i = 1; i <= n; ++i) total *= pow_big(q, 2 * i) - 1;
  return total / big_gcd(BigInt(2), BigInt(q - 1));
}

BigInt pomega_odd_order(long n, long q) {
  // B_n and C_n members share one order formula.
  return psp_order(n, q);
}

BigInt pomega_plus_order(long n, long q) {
  if (n < 2) throw DomainError("POmega+ order needs n >= 2");
  if (!prime_power_decomposition(q)) {
    throw DomainError("POmega+ order needs a prime power q");
  }
  BigInt total = pow_big(q, n * (n - 1)) * (pow_big(q, n) - 1);
  for (long i = 1; i < n; ++i) total *= pow_big(q, 2 * i) - 1;
  return total / big_gcd(BigInt(4), pow_big(q, n) - 1);
}

BigInt pomega_minus_order(long n, long q) {
  if (n < 2) throw DomainError("POmega- order needs n >= 2");
  if (!prime_power_decomposition(q)) {
    throw DomainError("POmega- order needs a prime power q");
  }
  BigInt total = pow_big(q, n * (n - 1)) * (pow_big(q, n) + 1);
  for (long i = 1; i < n; ++i) total *= pow_big(q, 2 * i) - 1;
  return total / big_gcd(BigInt(4), pow_big(q, n) + 1);
}

AtlasEntry atlas_entry(const FamilyId& id) {
  validate(id);
  AtlasEntry e;
  e.family = id;
  const long n = id.n;
  const long q = id.q;
  switch (id.family) {
    case Family::Alt: {
      e.order_exact = factorial(n) / 2;
      e.m1_log_approx = std::sqrt(static_cast<double>(n) *
                                  std::log(static_cast<double>(n)));
      if (n >= 9) {
        e.r = exact_rank(n - 2);
      } else {
        e.r = rank_interval(1, n - 2, "only the upper bound is tabulated");
      }
      break;
    }
    case Family::GL: {
      e.simple = false;
      e.order_exact = TargetGroup::gl(static_cast<int>(n), q).order();
      e.order_bound = ExpBound{n * n - 1, n * n, false};
      e.m1_exact = pow_big(q, n) - 1;
      e.m1_bound = ExpBound{n - 1, n + 1, false};
      e.r_fl = rank_interval(n - 2, n);
      break;
    }
    case Family::A: {
      e.order_exact = TargetGroup::psl(static_cast<int>(n + 1), q).order();
      e.order_bound = ExpBound{n * n - 3, n * n + 2 * n + 1, false};
      e.m1_bound = ExpBound{n - 2, n + 2, false};
      bool excluded = (n == 1 && (q == 4 || q == 5)) || (n == 2 && q == 2);
      e.r = excluded
                ? unavailable_rank(
                      "r is not tabulated at (n,q) = (1,4), (1,5), (2,2)")
                : exact_rank(n + 1);
      break;
    }
    case Family::TwoA: {
      e.order_exact = psu_order(n + 1, q);
      e.order_bound = ExpBound{n * n + 2 * n - 1, n * n + 2 * n + 1, false};
      e.m1_bound = ExpBound{n - 4, n + 1, false};
      e.r = (n == 3 && q == 2)
                ? unavailable_rank("r is not tabulated at (n,q) = (3,2)")
                : exact_rank(n + 1);
      break;
    }
    case Family::B: {
      e.order_exact = pomega_odd_order(n, q);
      e.order_bound = ExpBound{2 * n * n + n - 2, 2 * n * n + n + 1, false};
      e.m1_bound = ExpBound{n - 2, n + 2, false};
      e.r = exact_rank((q % 2 == 1 && n != 2) ? 2 * n + 1 : 2 * n);
      break;
    }
    case Family::C: {
      e.order_exact = psp_order(n, q);
      e.order_bound = ExpBound{2 * n * n + n - 2, 2 * n * n + n + 1, false};
      e.m1_bound = ExpBound{n - 2, n + 2, false};
      e.r = exact_rank(2 * n);
      break;
    }
    case Family::D: {
      e.order_exact = pomega_plus_order(n, q);
      e.order_bound = ExpBound{2 * n * n - n - 2, 2 * n * n - n + 1, false};
      e.m1_bound = ExpBound{n - 2, n + 2, false};
      e.r = (n == 4 && q == 2)
                ? unavailable_rank("r is not tabulated at (n,q) = (4,2)")
                : exact_rank(2 * n);
      break;
    }
    case Family::TwoD: {
      e.order_exact = pomega_minus_order(n, q);
      e.order_bound = ExpBound{2 * n * n - n - 2, 2 * n * n - n + 1, false};
      e.m1_bound = ExpBound{n - 2, n + 2, false};
      e.r = exact_rank(2 * n);
      break;
    }
    case Family::E6:
    case Family::TwoE6:
      e.order_bound = ExpBound{78, 78, true};
      e.m1_bound = ExpBound{6, 6, true};
      e.r = exact_rank(27);
      break;
    case Family::E7:
      e.order_bound = ExpBound{133, 133, true};
      e.m1_bound = ExpBound{7, 7, true};
      e.r = exact_rank(56);
      break;
    case Family::E8:
      e.order_bound = ExpBound{248, 248, true};
      e.m1_bound = ExpBound{8, 8, true};
      e.r = exact_rank(248);
      break;
    case Family::F4:
      e.order_bound = ExpBound{52, 52, true};
      e.m1_bound = ExpBound{4, 4, true};
      e.r = rank_interval(25, 26);
      break;
    case Family::G2:
      e.order_bound = ExpBound{14, 14, true};
      e.m1_bound = ExpBound{2, 2, true};
      e.r = rank_interval(6, 7);
      break;
    case Family::ThreeD4:
      e.order_bound = ExpBound{28, 28, true};
      e.m1_bound = ExpBound{4, 4, true};
      e.r = exact_rank(8);
      break;
    case Family::TwoB2:
      e.order_bound = ExpBound{5, 5, true};
      e.m1_bound = ExpBound{2, 2, true};
      e.r = exact_rank(4);
      break;
    case Family::TwoG2:
    case Family::TwoF4: {
      long order_exp = (id.family == Family::TwoG2) ? 2 : 26;
      e.order_bound = ExpBound{order_exp, order_exp, true};
      e.m1_bound = ExpBound{2, 2, true};
      long j = (prime_power_decomposition(q)->second - 1) / 2;
      e.r = (j == 1) ? unavailable_rank("r is not tabulated at j = 1")
                     : exact_rank(id.family == Family::TwoG2 ? 7 : 26);
      break;
    }
    case Family::CyclicPrime:
      e.order_exact = BigInt(q);
      e.m1_exact = BigInt(q);
      e.r = exact_rank(1);
      break;
    case Family::Sporadic:
      e.r = rank_interval(1, 196883, "only the upper bound is tabulated");
      break;
  }
  if (e.simple) {
    if (e.r.exact) {
      e.r_fl = rank_interval(*e.r.exact, *e.r.exact * *e.r.exact);
    } else if (e.r.range) {
      e.r_fl = rank_interval(e.r.range->first,
                             e.r.range->second * e.r.range->second);
    } else {
      e.r_fl = unavailable_rank(e.r.note);
    }
  }
  return e;
}

RatioReport ratio(const FamilyId& id, std::size_t scan_budget) {
  AtlasEntry entry = atlas_entry(id);
  RatioReport rep;
  rep.family = id;
  const long n = id.n;
  switch (id.family) {
    case Family::GL:
      rep.lower = ratio_lower_bound(Family::GL, n);
      rep.lower_strict = false;
      rep.upper = ratio_upper_bound(Family::GL, n);
      rep.exact = log_big(*entry.order_exact) / log_big(*entry.m1_exact);
      break;
    case Family::A:
    case Family::TwoA:
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::TwoD:
      rep.lower = ratio_lower_bound(id.family, n);
      rep.upper = ratio_upper_bound(id.family, n);
      if (id.family == Family::A && *entry.order_exact <= scan_budget) {
        BigInt m1 = TargetGroup::psl(static_cast<int>(n + 1), id.q)
                        .max_element_order(scan_budget);
        rep.exact = log_big(*entry.order_exact) / log_big(m1);
      }
      break;
    case Family::Alt: {
      double form = log_big(*entry.order_exact) / *entry.m1_log_approx;
      rep.lower = form;
      rep.upper = form;
      rep.approx = true;  // bracket constants are not pinned down
      try {
        BigInt m1 = max_partition_lcm(n, true, scan_budget);
        rep.exact = log_big(*entry.order_exact) / log_big(m1);
      } catch (const ResourceError&) {
      }
      break;
    }
    case Family::CyclicPrime:
      rep.exact = 1.0;
      rep.upper = 248.0;
      rep.upper_strict = false;
      break;
    case Family::Sporadic:
      rep.upper = 196883.0;
      rep.upper_strict = false;
      break;
    default: {  // exceptional Lie types: quotient of the tabulated exponents
      rep.lower = static_cast<double>(entry.order_bound->lo) /
                  static_cast<double>(entry.m1_bound->hi);
      rep.upper = rep.lower;
      rep.approx = true;
      break;
    }
  }
  if (rep.exact && (rep.lower || rep.upper) && !rep.approx) {
    bool ok = true;
    if (rep.lower) {
      ok = ok && (rep.lower_strict ? *rep.exact > *rep.lower
                                   : *rep.exact >= *rep.lower);
    }
    if (rep.upper) {
      ok = ok && (rep.upper_strict ? *rep.exact < *rep.upper
                                   : *rep.exact <= *rep.upper);
    }
    rep.passes = ok;
  }
  return rep;
}

InequalityReport verify_family_inequalities(const FamilyId& id,
                                            std::size_t scan_budget) {
  AtlasEntry entry = atlas_entry(id);
  InequalityReport rep;
  rep.family = id;

  auto check = [&](const std::string& quantity, const BigInt& value,
                   const ExpBound& bound) {
    BoundCheck c;
    c.quantity = quantity;
    c.value = value;
    c.lower = bound.lo < 0 ? BigInt(0) : pow_big(id.q, bound.lo);
    c.upper = pow_big(id.q, bound.hi);
    c.lower_ok = value > c.lower;
    c.upper_ok = value < c.upper;
    rep.all_ok = rep.all_ok && c.lower_ok && c.upper_ok;
    rep.checks.push_back(std::move(c));
  };

  if (entry.order_exact && entry.order_bound && !entry.order_bound->approx) {
    check("order", *entry.order_exact, *entry.order_bound);
  } else if (entry.order_bound && entry.order_bound->approx) {
    rep.skipped.push_back("order: approximate table row");
  } else {
    rep.skipped.push_back("order: no exponent bracket");
  }

  if (entry.m1_bound && !entry.m1_bound->approx) {
    if (entry.m1_exact) {
      check("max element order", *entry.m1_exact, *entry.m1_bound);
    } else if (id.family == Family::A && entry.order_exact &&
               *entry.order_exact <= scan_budget) {
      BigInt m1 = TargetGroup::psl(static_cast<int>(id.n + 1), id.q)
                      .max_element_order(scan_budget);
      check("max element order", m1, *entry.m1_bound);
    } else {
      rep.skipped.push_back("max element order: no exact value in budget");
    }
  } else if (entry.m1_bound) {
    rep.skipped.push_back("max element order: approximate table row");
  } else {
    rep.skipped.push_back("max element order: no exponent bracket");
  }
  return rep;
}

long family_rank_bound(Family f, double C) {
  if (!(C > 0)) throw InputError("the ratio bound must be positive");
  switch (f) {
    case Family::Alt:
    case Family::GL:
    case Family::A:
    case Family::TwoA:
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::TwoD:
      break;
    default:
      throw InputError("no rank solve for constant-bound families");
  }
  const long start = meta(f).min_rank;
  if (ratio_lower_bound(f, start) > C) return 0;
  const long kIterBudget = 10'000'000;
  long n = start;
  while (ratio_lower_bound(f, n + 1) <= C) {
    ++n;
    if (n - start > kIterBudget) {
      throw ResourceError("rank solve exceeded 10^7 candidate ranks");
    }
  }
  return rank_value_cap(f, n);
}

long bounded_rank_threshold(double C, bool include_sporadic) {
  if (!(C > 0)) throw InputError("the ratio bound must be positive");
  long best = 248;  // covers exceptional Lie types and cyclic groups
  for (Family f : {Family::GL, Family::A, Family::TwoA, Family::B, Family::C,
                   Family::D, Family::TwoD, Family::Alt}) {
    best = std::max(best, family_rank_bound(f, C));
  }
  if (include_sporadic) best = std::max(best, 196883L);
  return best;
}

EmbeddingReport psl_embedding_bookkeeping(const TargetGroup& g, long rank_cap) {
  if (!g.is_simple()) {
    throw DomainError("embedding bookkeeping needs a simple group");
  }
  EmbeddingReport rep;
  rep.group = g.name();
  rep.group_order = g.order();
  switch (g.kind()) {
    case GroupKind::Cyclic:
      // Prime-order groups always land in rank 2 over their own prime.
      rep.psl_rank = 2;
      rep.psl_field = g.n();
      rep.note = "diagonal order-p class in PSL(2,p)";
      break;
    case GroupKind::Alt: {
      // Tabulated small-degree linear models.
      if (g.n() == 5) {
        rep.psl_rank = 2;
        rep.psl_field = 4;
      } else if (g.n() == 6) {
        rep.psl_rank = 2;
        rep.psl_field = 9;
      } else if (g.n() == 8) {
        rep.psl_rank = 4;
        rep.psl_field = 2;
      } else {
        throw UnsupportedError("no tabulated linear model for " + g.name());
      }
      if (rep.psl_rank > rank_cap) {
        throw DomainError("projective rank of " + g.name() +
                          " exceeds the rank cap");
      }
      rep.note = "exceptional isomorphism";
      break;
    }
    case GroupKind::PSL: {
      if (g.n() > rank_cap) {
        throw DomainError("projective rank of " + g.name() +
                          " exceeds the rank cap");
      }
      rep.psl_rank = rank_cap;
      rep.psl_field = g.q();
      rep.identity_embedding = (g.n() == rank_cap);
      rep.note = rep.identity_embedding ? "identity embedding"
                                        : "corner block bookkeeping";
      break;
    }
    default:
      throw InternalError("simple target group of unexpected kind");
  }
  rep.psl_order =
      TargetGroup::psl(static_cast<int>(rep.psl_rank), rep.psl_field).order();
  rep.exponent = std::max<long>(rank_cap * rank_cap, 4);
  rep.order_ok =
      rep.psl_order <=
      boost::multiprecision::pow(rep.group_order,
                                 static_cast<unsigned>(rep.exponent));
  return rep;
}

}  // namespace rfg
