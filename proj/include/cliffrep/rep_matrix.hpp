#pragma once

#include "cliffrep/spinor_basis.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace cliffrep {

// N x N matrix over K, or over K + K^ (pairs) for semisimple algebras.
class RepMatrix {
 public:
  RepMatrix(std::size_t n, std::shared_ptr<const KBasis> k);
  RepMatrix(std::size_t n, std::shared_ptr<const KBasis> k, std::shared_ptr<const KBasis> khat);

  std::size_t size() const { return n_; }
  bool paired() const { return !hat_.empty(); }
  KElement& at(std::size_t j, std::size_t k) { return main_[j * n_ + k]; }
  const KElement& at(std::size_t j, std::size_t k) const { return main_[j * n_ + k]; }
  // second pair component; paired matrices only
  KElement& hat(std::size_t j, std::size_t k) { return hat_.at(j * n_ + k); }
  const KElement& hat(std::size_t j, std::size_t k) const { return hat_.at(j * n_ + k); }

  RepMatrix zero_like() const;
  RepMatrix identity_like() const;
  bool is_zero() const;

  friend bool operator==(const RepMatrix&, const RepMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<KElement> main_;
  std::vector<KElement> hat_;
};

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b);
RepMatrix operator+(const RepMatrix& a, const RepMatrix& b);

// Simple algebras: [u] = [u f_1] + ... + [u f_N] column by column.
RepMatrix rep_matrix(const Multivector& u, const SpinorBasis& s);

// S + S^ for semisimple algebras; the first component lies in J+.
class DoubleSpinorBasis {
 public:
  static DoubleSpinorBasis build(const Idempotent& f);

  const SpinorBasis& first() const { return first_; }
  const SpinorBasis& second() const { return second_; }

 private:
  DoubleSpinorBasis(SpinorBasis a, SpinorBasis b) : first_(std::move(a)), second_(std::move(b)) {}
  SpinorBasis first_;
  SpinorBasis second_;
};

RepMatrix semisimple_rep_matrix(const Multivector& u, const DoubleSpinorBasis& s);

// Conjugate transpose (plain transpose over R); pairs conjugate componentwise.
RepMatrix adjoint(const RepMatrix& m);

// Dispatches to the simple or double construction for one idempotent.
class Representation {
 public:
  static Representation build(const Idempotent& f);
  static Representation build(const Signature& sig);  // searched idempotent

  bool simple() const { return !double_; }
  const SpinorBasis& basis() const { return simple_ ? *simple_ : double_->first(); }
  const DoubleSpinorBasis* double_basis() const { return double_ ? &*double_ : nullptr; }
  RepMatrix operator()(const Multivector& u) const;

 private:
  std::optional<SpinorBasis> simple_;
  std::optional<DoubleSpinorBasis> double_;
};

}  // namespace cliffrep
