#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rfg/bigint.hpp"
#include "rfg/group_element.hpp"

namespace rfg {

enum class GroupKind { Cyclic, Dihedral, Sym, Alt, GL, SL, PSL, PGL };

// A concrete finite group named by a classical descriptor. Cyclic, dihedral
// and (alternating) symmetric groups act on points; the linear kinds are
// matrix groups over F_q, projective kinds work with classes of matrices.
class TargetGroup {
 public:
  static TargetGroup cyclic(long m);    // m >= 1
  static TargetGroup dihedral(long m);  // m >= 3
  static TargetGroup sym(long n);       // n >= 1
  static TargetGroup alt(long n);       // n >= 2
  static TargetGroup gl(int n, long q);
  static TargetGroup sl(int n, long q);
  static TargetGroup psl(int n, long q);  // n >= 2
  static TargetGroup pgl(int n, long q);
  // Inverse of name(), e.g. "GL(2,3)", "Alt(5)", "Cyclic(12)".
  static TargetGroup parse(const std::string& name);

  GroupKind kind() const { return kind_; }
  long n() const { return n_; }
  long q() const { return q_; }
  std::string name() const;
  BigInt order() const;
  bool is_simple() const;

  GroupElement identity() const;
  // All elements in a fixed deterministic order. Throws a resource error
  // when the group order exceeds the budget.
  std::vector<GroupElement> elements(std::size_t budget = 1'000'000) const;
  // Largest element order. Uses closed forms (GL: q^n - 1; cyclic: m;
  // dihedral: m; Sym/Alt: best lcm over admissible partitions), otherwise
  // falls back to an exhaustive scan within the budget.
  BigInt max_element_order(std::size_t scan_budget = 1'000'000) const;
  // Exhaustive-scan variant, used to cross-check the closed forms.
  BigInt max_element_order_by_scan(std::size_t scan_budget = 1'000'000) const;

  bool operator==(const TargetGroup& o) const {
    return kind_ == o.kind_ && n_ == o.n_ && q_ == o.q_;
  }

 private:
  TargetGroup(GroupKind kind, long n, long q) : kind_(kind), n_(n), q_(q) {}

  GroupKind kind_;
  long n_;  // point count for permutation kinds, dimension for matrix kinds
  long q_;  // field size for matrix kinds, otherwise 0
};

// Largest lcm of a partition of n, restricted to partitions of even
// permutation parity when even_only is set. Budget caps the partition count.
BigInt max_partition_lcm(long n, bool even_only, std::size_t budget = 1'000'000);

}  // namespace rfg
