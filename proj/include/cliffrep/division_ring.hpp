#pragma once

#include "cliffrep/vee_group.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace cliffrep {

// Monomial basis {1} | {1, e_i} | {1, e_i, e_j, e_k} of K = f Cl f, with
// e_i e_j = e_k in the quaternionic case.
class KBasis {
 public:
  static std::shared_ptr<const KBasis> build(const Idempotent& f, const Subgroup& stab);

  const Idempotent& idempotent() const { return f_; }
  // Real, Complex or Quaternion
  RingType ring() const { return ring_; }
  std::size_t dim() const { return monomials_.size(); }
  const std::vector<Blade>& monomials() const { return monomials_; }

  // b_a b_b = sign * b_index
  int product_sign(std::size_t a, std::size_t b) const { return sign_[a][b]; }
  std::size_t product_index(std::size_t a, std::size_t b) const { return index_[a][b]; }

  Multivector unit(std::size_t a) const;  // b_a f

  bool same_as(const KBasis& other) const;

 private:
  KBasis(const Idempotent& f) : f_(f) {}

  Idempotent f_;
  RingType ring_ = RingType::Real;
  std::vector<Blade> monomials_;
  std::array<std::array<int, 4>, 4> sign_{};
  std::array<std::array<std::size_t, 4>, 4> index_{};
};

std::shared_ptr<const KBasis> division_ring_basis(const Idempotent& f);

class KElement {
 public:
  explicit KElement(std::shared_ptr<const KBasis> basis);  // zero
  KElement(std::shared_ptr<const KBasis> basis, const std::vector<Rational>& coords);
  static KElement one(std::shared_ptr<const KBasis> basis);

  const KBasis& basis() const { return *basis_; }
  const std::shared_ptr<const KBasis>& basis_ptr() const { return basis_; }
  std::size_t dim() const { return basis_->dim(); }
  const Rational& operator[](std::size_t a) const { return c_[a]; }
  Rational& operator[](std::size_t a) { return c_[a]; }
  bool is_zero() const;

  KElement& operator+=(const KElement& o);
  KElement& operator-=(const KElement& o);
  KElement& operator*=(const Rational& s);

  friend bool operator==(const KElement& a, const KElement& b);

 private:
  void check(const KElement& o) const;

  std::shared_ptr<const KBasis> basis_;
  std::array<Rational, 4> c_;
};

KElement operator+(KElement a, const KElement& b);
KElement operator-(KElement a, const KElement& b);
KElement operator-(KElement a);
KElement operator*(KElement a, const Rational& s);
KElement k_mul(const KElement& a, const KElement& b);
KElement operator*(const KElement& a, const KElement& b);
// fixes the scalar coordinate, negates the unit coordinates
KElement k_conj(const KElement& a);

Multivector to_multivector(const KElement& a);  // sum c_a b_a f
// x == f x f
bool in_division_ring(const Multivector& x, const KBasis& basis);
// throws NotInDivisionRing when x is not of the form sum c_a b_a f
KElement project_to_k(const Multivector& x, const std::shared_ptr<const KBasis>& basis);

// "3/4 - 1/2*e23" with blade names, or with 1,i,j,k when symbolic is set
std::string to_string(const KElement& a, bool symbolic = false);

}  // namespace cliffrep
