#pragma once

#include "cliffrep/division_ring.hpp"

#include <memory>
#include <vector>

namespace cliffrep {

// Ordered basis {m_1 f, ..., m_N f} of S = Cl f over K, together with the
// family f_k = m_k f m_k^{-1} and lookup tables for fast coordinates.
class SpinorBasis {
 public:
  static SpinorBasis build(const Idempotent& f);
  // reuse a transversal (it must be one for the stabilizer of f)
  static SpinorBasis build(const Idempotent& f, const Transversal& t);

  const Idempotent& idempotent() const { return family_.front(); }
  const Subgroup& stabilizer() const { return stab_; }
  const Transversal& transversal() const { return t_; }
  const std::shared_ptr<const KBasis>& kbasis() const { return kbasis_; }
  std::size_t size() const { return t_.size(); }
  const std::vector<Multivector>& elements() const { return elements_; }
  const std::vector<Idempotent>& family() const { return family_; }

  // Every blade splits uniquely as e_X = sign * m_i b_a h with h in the factor span.
  struct Split {
    std::uint32_t i = 0, a = 0, h = 0;  // h indexes CommutingSet::span_masks()
    int sign = 1;
  };
  const Split& split(Blade x) const { return split_[x.mask]; }
  // h f_k = sign f_k
  int absorption(std::size_t k, std::uint32_t h) const { return absorb_[k][h]; }

  // coordinates of u f_k in the basis {m_i f_k}, K coordinates taken against f
  std::vector<KElement> product_coordinates(const Multivector& u, std::size_t k) const;

 private:
  SpinorBasis(const Idempotent& f, Subgroup stab, Transversal t);

  Subgroup stab_;
  Transversal t_;
  std::shared_ptr<const KBasis> kbasis_;
  std::vector<Multivector> elements_;
  std::vector<Idempotent> family_;
  std::vector<Split> split_;
  std::vector<std::vector<int>> absorb_;
};

// lambda_i with psi = sum m_i f lambda_i; throws NotInIdeal
std::vector<KElement> decompose_spinor(const Multivector& psi, const SpinorBasis& s);
Multivector assemble_spinor(const std::vector<KElement>& coords, const SpinorBasis& s);

// m_l m_k f = c^j_{l,k} m_j f
class StructConstants {
 public:
  explicit StructConstants(const SpinorBasis& s);

  std::size_t size() const { return n_; }
  std::size_t target(std::size_t l, std::size_t k) const { return target_[l * n_ + k]; }
  int sign(std::size_t l, std::size_t k) const { return sign_[l * n_ + k]; }
  // c^j_{l,k}: +-1 on the target row, 0 elsewhere
  int coefficient(std::size_t l, std::size_t k, std::size_t j) const {
    return target(l, k) == j ? sign(l, k) : 0;
  }
  // C[j][k] = c^j_{l,k} for the unique l reaching row j
  std::vector<std::vector<int>> matrix() const;

 private:
  std::size_t n_;
  std::vector<std::size_t> target_;
  std::vector<int> sign_;
};

StructConstants structure_constants(const SpinorBasis& s);

}  // namespace cliffrep
