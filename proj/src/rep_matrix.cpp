#include "cliffrep/rep_matrix.hpp"

#include "cliffrep/errors.hpp"

namespace cliffrep {

RepMatrix::RepMatrix(std::size_t n, std::shared_ptr<const KBasis> k) : n_(n), main_(n * n, KElement(std::move(k))) {}

RepMatrix::RepMatrix(std::size_t n, std::shared_ptr<const KBasis> k, std::shared_ptr<const KBasis> khat)
    : n_(n), main_(n * n, KElement(std::move(k))), hat_(n * n, KElement(std::move(khat))) {}

RepMatrix RepMatrix::zero_like() const {
  RepMatrix z = *this;
  for (auto& e : z.main_) e *= Rational(0);
  for (auto& e : z.hat_) e *= Rational(0);
  return z;
}

RepMatrix RepMatrix::identity_like() const {
  RepMatrix id = zero_like();
  for (std::size_t i = 0; i < n_; ++i) {
    id.at(i, i)[0] = 1;
    if (paired()) id.hat(i, i)[0] = 1;
  }
  return id;
}

bool RepMatrix::is_zero() const {
  for (const auto& e : main_)
    if (!e.is_zero()) return false;
  for (const auto& e : hat_)
    if (!e.is_zero()) return false;
  return true;
}

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
  if (a.size() != b.size() || a.paired() != b.paired()) throw InvalidArgument("matrix shape mismatch");
  RepMatrix out = a.zero_like();
  std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      bool main_nz = !a.at(i, l).is_zero();
      bool hat_nz = a.paired() && !a.hat(i, l).is_zero();
      if (!main_nz && !hat_nz) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (main_nz && !b.at(l, j).is_zero()) out.at(i, j) += k_mul(a.at(i, l), b.at(l, j));
        if (hat_nz && !b.hat(l, j).is_zero()) out.hat(i, j) += k_mul(a.hat(i, l), b.hat(l, j));
      }
    }
  return out;
}

RepMatrix operator+(const RepMatrix& a, const RepMatrix& b) {
  if (a.size() != b.size() || a.paired() != b.paired()) throw InvalidArgument("matrix shape mismatch");
  RepMatrix out = a;
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t k = 0; k < a.size(); ++k) {
      out.at(j, k) += b.at(j, k);
      if (a.paired()) out.hat(j, k) += b.hat(j, k);
    }
  return out;
}

namespace {

// entry (j,k) += c^j_{i,k} lambda_{i,k} with lambda_{i,k} = m_k^{-1} lambda_i m_k
template <class Cell>
void fill(const Multivector& u, const SpinorBasis& s, Cell cell) {
  StructConstants c(s);
  const auto& reps = s.transversal().reps;
  const auto& mono = s.kbasis()->monomials();
  for (std::size_t k = 0; k < s.size(); ++k) {
    std::vector<int> twist(mono.size());
    for (std::size_t a = 0; a < mono.size(); ++a) twist[a] = commutation_sign(reps[k], mono[a]);
    auto lambda = s.product_coordinates(u, k);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (lambda[i].is_zero()) continue;
      KElement& dst = cell(c.target(i, k), k);
      int sign = c.sign(i, k);
      for (std::size_t a = 0; a < mono.size(); ++a) {
        if (sign * twist[a] > 0)
          dst[a] += lambda[i][a];
        else
          dst[a] -= lambda[i][a];
      }
    }
  }
}

}  // namespace

RepMatrix rep_matrix(const Multivector& u, const SpinorBasis& s) {
  if (!classify(s.idempotent().signature()).simple)
    throw InvalidArgument("semisimple algebra; use semisimple_rep_matrix");
  RepMatrix m(s.size(), s.kbasis());
  fill(u, s, [&m](std::size_t j, std::size_t k) -> KElement& { return m.at(j, k); });
  return m;
}

DoubleSpinorBasis DoubleSpinorBasis::build(const Idempotent& f) {
  const Signature& sig = f.signature();
  if (classify(sig).simple) throw InvalidArgument(to_string(sig) + " is simple");
  Idempotent fhat = grade_involution(f);
  auto [jplus, jminus] = central_idempotents(sig);
  const Idempotent& a = (f.value * jplus == f.value) ? f : fhat;
  const Idempotent& b = (&a == &f) ? fhat : f;
  SpinorBasis first = SpinorBasis::build(a);
  SpinorBasis second = SpinorBasis::build(b, first.transversal());
  return DoubleSpinorBasis(std::move(first), std::move(second));
}

RepMatrix semisimple_rep_matrix(const Multivector& u, const DoubleSpinorBasis& s) {
  const SpinorBasis& a = s.first();
  const SpinorBasis& b = s.second();
  RepMatrix m(a.size(), a.kbasis(), b.kbasis());
  fill(u, a, [&m](std::size_t j, std::size_t k) -> KElement& { return m.at(j, k); });
  fill(u, b, [&m](std::size_t j, std::size_t k) -> KElement& { return m.hat(j, k); });
  return m;
}

RepMatrix adjoint(const RepMatrix& m) {
  RepMatrix out = m;
  for (std::size_t j = 0; j < m.size(); ++j)
    for (std::size_t k = 0; k < m.size(); ++k) {
      out.at(j, k) = k_conj(m.at(k, j));
      if (m.paired()) out.hat(j, k) = k_conj(m.hat(k, j));
    }
  return out;
}

Representation Representation::build(const Idempotent& f) {
  Representation r;
  if (classify(f.signature()).simple)
    r.simple_.emplace(SpinorBasis::build(f));
  else
    r.double_.emplace(DoubleSpinorBasis::build(f));
  return r;
}

Representation Representation::build(const Signature& sig) { return build(primitive_idempotent(sig)); }

RepMatrix Representation::operator()(const Multivector& u) const {
  return simple_ ? rep_matrix(u, *simple_) : semisimple_rep_matrix(u, *double_);
}

}  // namespace cliffrep
