#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "rfg/finite_field.hpp"

namespace rfg {

// Bijection on {0, ..., degree-1}. Composition is left to right:
// (p * q)(x) = q(p(x)).
class Permutation {
 public:
  static Permutation identity(int degree);
  // Validates that images form a bijection.
  static Permutation from_images(std::vector<int> images);
  // The cycle 0 -> 1 -> ... -> degree-1 -> 0.
  static Permutation cycle(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int at(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }
  Permutation inverse() const;
  bool is_identity() const;
  bool is_even() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  explicit Permutation(std::vector<int> img) : img_(std::move(img)) {}
  std::vector<int> img_;
};

Permutation operator*(const Permutation& a, const Permutation& b);

// Invertible square matrix over an interned field, row major. Invertibility
// is validated at from_rows; products and inverses preserve it.
class Matrix {
 public:
  static Matrix identity(const FiniteField& f, int n);
  // Entries are field element codes in [0, q). Rejects singular matrices.
  static Matrix from_rows(const FiniteField& f, const std::vector<std::vector<long>>& rows);

  const FiniteField& field() const { return *field_; }
  int n() const { return n_; }
  Fel at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  Fel det() const;
  Matrix inverse() const;
  bool is_identity() const;
  // True iff the matrix is c*I for some nonzero c.
  bool is_scalar() const;

  bool operator==(const Matrix& o) const;
  bool operator<(const Matrix& o) const;

 private:
  friend class ProjectiveClass;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend class TargetGroup;
  Matrix(const FiniteField* f, int n, std::vector<Fel> a)
      : field_(f), n_(n), a_(std::move(a)) {}

  const FiniteField* field_;
  int n_;
  std::vector<Fel> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

// Matrix modulo nonzero scalars; the stored representative has its first
// nonzero entry (row major) normalized to 1, so classes compare entrywise.
class ProjectiveClass {
 public:
  static ProjectiveClass of(Matrix m);

  const Matrix& rep() const { return rep_; }
  bool is_identity() const { return rep_.is_identity(); }

  bool operator==(const ProjectiveClass& o) const { return rep_ == o.rep_; }
  bool operator<(const ProjectiveClass& o) const { return rep_ < o.rep_; }

 private:
  explicit ProjectiveClass(Matrix m) : rep_(std::move(m)) {}
  Matrix rep_;
};

ProjectiveClass operator*(const ProjectiveClass& a, const ProjectiveClass& b);

using GroupElement = std::variant<Permutation, Matrix, ProjectiveClass>;

GroupElement ge_mul(const GroupElement& a, const GroupElement& b);
GroupElement ge_inverse(const GroupElement& a);
bool ge_is_identity(const GroupElement& a);

// Least k >= 1 with g^k = 1, by repeated multiplication.
unsigned long element_order(const GroupElement& g, unsigned long cap = 1'000'000);

// Text forms for CLI input: "[2,0,1]" is a permutation by 0-based images;
// "[[0,1],[1,1]]" is a matrix whose entries are field element codes.
Permutation parse_permutation(const std::string& text);
Matrix parse_matrix(const FiniteField& f, const std::string& text);
std::string show_element(const GroupElement& g);

}  // namespace rfg
