#include "rfg/group_element.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "rfg/errors.hpp"

namespace rfg {

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw InputError("permutation degree must be positive");
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> hit(images.size(), false);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || hit[v])
      throw InputError("permutation images must be a bijection on 0..n-1");
    hit[v] = true;
  }
  if (images.empty()) throw InputError("permutation degree must be positive");
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(int degree) {
  Permutation p = identity(degree);
  for (int i = 0; i < degree; ++i) p.img_[i] = (i + 1) % degree;
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

bool Permutation::is_even() const {
  std::vector<bool> seen(img_.size(), false);
  int transpositions = 0;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InputError("permutation degrees differ");
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = b.at(a.at(i));
  return Permutation(std::move(img));
}

Matrix Matrix::identity(const FiniteField& f, int n) {
  if (n < 1) throw InputError("matrix dimension must be positive");
  std::vector<Fel> a(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i) * n + i] = 1;
  return Matrix(&f, n, std::move(a));
}

Matrix Matrix::from_rows(const FiniteField& f, const std::vector<std::vector<long>>& rows) {
  int n = static_cast<int>(rows.size());
  if (n < 1) throw InputError("matrix dimension must be positive");
  std::vector<Fel> a;
  a.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw InputError("matrix must be square");
    for (long v : row) {
      if (v < 0 || v >= f.q()) throw InputError("matrix entry is not a field element code");
      a.push_back(static_cast<Fel>(v));
    }
  }
  Matrix m(&f, n, std::move(a));
  if (m.det() == 0) throw InputError("matrix is singular");
  return m;
}

Fel Matrix::det() const {
  const FiniteField& f = *field_;
  std::vector<Fel> a = a_;
  Fel d = 1;
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int row = col; row < n_; ++row)
      if (a[static_cast<std::size_t>(row) * n_ + col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n_; ++j)
        std::swap(a[static_cast<std::size_t>(pivot) * n_ + j],
                  a[static_cast<std::size_t>(col) * n_ + j]);
      d = f.neg(d);
    }
    Fel pv = a[static_cast<std::size_t>(col) * n_ + col];
    d = f.mul(d, pv);
    Fel pinv = f.inv(pv);
    for (int row = col + 1; row < n_; ++row) {
      Fel factor = f.mul(a[static_cast<std::size_t>(row) * n_ + col], pinv);
      if (factor == 0) continue;
      for (int j = col; j < n_; ++j) {
        std::size_t ri = static_cast<std::size_t>(row) * n_ + j;
        a[ri] = f.sub(a[ri], f.mul(factor, a[static_cast<std::size_t>(col) * n_ + j]));
      }
    }
  }
  return d;
}

Matrix Matrix::inverse() const {
  const FiniteField& f = *field_;
  std::vector<Fel> a = a_;
  Matrix out = identity(f, n_);
  std::vector<Fel>& b = out.a_;
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int row = col; row < n_; ++row)
      if (a[static_cast<std::size_t>(row) * n_ + col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw InputError("matrix is singular");
    for (int j = 0; j < n_; ++j) {
      std::swap(a[static_cast<std::size_t>(pivot) * n_ + j],
                a[static_cast<std::size_t>(col) * n_ + j]);
      std::swap(b[static_cast<std::size_t>(pivot) * n_ + j],
                b[static_cast<std::size_t>(col) * n_ + j]);
    }
    Fel pinv = f.inv(a[static_cast<std::size_t>(col) * n_ + col]);
    for (int j = 0; j < n_; ++j) {
      std::size_t ci = static_cast<std::size_t>(col) * n_ + j;
      a[ci] = f.mul(a[ci], pinv);
      b[ci] = f.mul(b[ci], pinv);
    }
    for (int row = 0; row < n_; ++row) {
      if (row == col) continue;
      Fel factor = a[static_cast<std::size_t>(row) * n_ + col];
      if (factor == 0) continue;
      for (int j = 0; j < n_; ++j) {
        std::size_t ri = static_cast<std::size_t>(row) * n_ + j;
        a[ri] = f.sub(a[ri], f.mul(factor, a[static_cast<std::size_t>(col) * n_ + j]));
        b[ri] = f.sub(b[ri], f.mul(factor, b[static_cast<std::size_t>(col) * n_ + j]));
      }
    }
  }
  return out;
}

bool Matrix::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (at(i, j) != static_cast<Fel>(i == j ? 1 : 0)) return false;
  return true;
}

bool Matrix::is_scalar() const {
  Fel c = at(0, 0);
  if (c == 0) return false;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? c : 0)) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && n_ == o.n_ && a_ == o.a_;
}

bool Matrix::operator<(const Matrix& o) const {
  if (field_ != o.field_) return field_->q() < o.field_->q();
  if (n_ != o.n_) return n_ < o.n_;
  return a_ < o.a_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.n_ != b.n_) throw InputError("matrix shapes or fields differ");
  const FiniteField& f = *a.field_;
  int n = a.n_;
  std::vector<Fel> c(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Fel av = a.at(i, k);
      if (av == 0) continue;
      for (int j = 0; j < n; ++j) {
        std::size_t ci = static_cast<std::size_t>(i) * n + j;
        c[ci] = f.add(c[ci], f.mul(av, b.at(k, j)));
      }
    }
  return Matrix(a.field_, n, std::move(c));
}

ProjectiveClass ProjectiveClass::of(Matrix m) {
  const FiniteField& f = m.field();
  Fel first = 0;
  for (Fel v : m.a_)
    if (v != 0) {
      first = v;
      break;
    }
  if (first == 0) throw InputError("projective class of the zero matrix");
  if (first != 1) {
    Fel scale = f.inv(first);
    for (Fel& v : m.a_) v = f.mul(v, scale);
  }
  return ProjectiveClass(std::move(m));
}

ProjectiveClass operator*(const ProjectiveClass& a, const ProjectiveClass& b) {
  return ProjectiveClass::of(a.rep() * b.rep());
}

GroupElement ge_mul(const GroupElement& a, const GroupElement& b) {
  if (a.index() != b.index()) throw InputError("group element kinds differ");
  if (auto* p = std::get_if<Permutation>(&a)) return *p * std::get<Permutation>(b);
  if (auto* m = std::get_if<Matrix>(&a)) return *m * std::get<Matrix>(b);
  return std::get<ProjectiveClass>(a) * std::get<ProjectiveClass>(b);
}

GroupElement ge_inverse(const GroupElement& a) {
  if (auto* p = std::get_if<Permutation>(&a)) return p->inverse();
  if (auto* m = std::get_if<Matrix>(&a)) return m->inverse();
  return ProjectiveClass::of(std::get<ProjectiveClass>(a).rep().inverse());
}

bool ge_is_identity(const GroupElement& a) {
  return std::visit([](const auto& g) { return g.is_identity(); }, a);
}

unsigned long element_order(const GroupElement& g, unsigned long cap) {
  GroupElement acc = g;
  unsigned long k = 1;
  while (!ge_is_identity(acc)) {
    if (k >= cap)
      throw ResourceError("element order exceeds cap of " + std::to_string(cap));
    acc = ge_mul(acc, g);
    ++k;
  }
  return k;
}

namespace {

std::vector<long> parse_long_list(const std::string& text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != '[') throw InputError("expected '['");
  ++pos;
  std::vector<long> out;
  while (true) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw InputError("expected an integer in element literal");
    out.push_back(std::stol(text.substr(start, pos - start)));
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      return out;
    }
    throw InputError("expected ',' or ']' in element literal");
  }
}

}  // namespace

Permutation parse_permutation(const std::string& text) {
  std::size_t pos = 0;
  while (pos < text.size() && text[pos] == ' ') ++pos;
  std::vector<long> vals = parse_long_list(text, pos);
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos != text.size()) throw InputError("trailing characters after permutation literal");
  std::vector<int> img(vals.begin(), vals.end());
  return Permutation::from_images(std::move(img));
}

Matrix parse_matrix(const FiniteField& f, const std::string& text) {
  std::size_t pos = 0;
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos >= text.size() || text[pos] != '[') throw InputError("expected '[' to open matrix");
  ++pos;
  std::vector<std::vector<long>> rows;
  while (true) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    rows.push_back(parse_long_list(text, pos));
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      break;
    }
    throw InputError("expected ',' or ']' in matrix literal");
  }
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos != text.size()) throw InputError("trailing characters after matrix literal");
  return Matrix::from_rows(f, rows);
}

std::string show_element(const GroupElement& g) {
  std::ostringstream out;
  if (auto* p = std::get_if<Permutation>(&g)) {
    out << '[';
    for (int i = 0; i < p->degree(); ++i) out << (i ? "," : "") << p->at(i);
    out << ']';
  } else {
    const Matrix& m = std::holds_alternative<Matrix>(g)
                          ? std::get<Matrix>(g)
                          : std::get<ProjectiveClass>(g).rep();
    out << '[';
    for (int i = 0; i < m.n(); ++i) {
      if (i) out << ',';
      out << '[';
      for (int j = 0; j < m.n(); ++j) out << (j ? "," : "") << m.at(i, j);
      out << ']';
    }
    out << ']';
    if (std::holds_alternative<ProjectiveClass>(g)) out << "*";
  }
  return out.str();
}

}  // namespace rfg
