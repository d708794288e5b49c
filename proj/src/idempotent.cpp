#include "cliffrep/idempotent.hpp"

#include "cliffrep/errors.hpp"
#include "cliffrep/left_regular.hpp"

#include <algorithm>

namespace cliffrep {

namespace {

// Gaussian elimination over GF(2) on masks; returns false if b is in the span.
bool independent_of(std::uint32_t b, const std::vector<Blade>& chosen) {
  std::vector<std::uint32_t> basis;
  for (Blade c : chosen) {
    std::uint32_t x = c.mask;
    for (std::uint32_t v : basis) x = std::min(x, x ^ v);
    if (x) basis.push_back(x);
    std::sort(basis.rbegin(), basis.rend());
  }
  for (std::uint32_t v : basis) b = std::min(b, b ^ v);
  return b != 0;
}

bool search(const std::vector<Blade>& order, std::size_t from, std::size_t k,
            std::vector<Blade>& chosen, const Signature& sig) {
  if (chosen.size() == k) return true;
  for (std::size_t i = from; i < order.size(); ++i) {
    if (!admissible_factor(order[i], chosen, sig)) continue;
    chosen.push_back(order[i]);
    if (search(order, i + 1, k, chosen, sig)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool admissible_factor(Blade b, const std::vector<Blade>& chosen, const Signature& sig) {
  if (b.is_scalar() || blade_square(b, sig) != 1) return false;
  for (Blade c : chosen)
    if (!blades_commute(b, c)) return false;
  return independent_of(b.mask, chosen);
}

CommutingSet::CommutingSet(const Signature& sig, std::vector<Blade> factors) : sig_(sig) {
  for (Blade b : factors) {
    if (b.mask >> sig.n()) throw InvalidArgument("factor outside the algebra");
    if (b.is_scalar() || blade_square(b, sig) != 1)
      throw InvalidArgument("factor " + format_blade(b, sig.n()) + " does not square to +1");
    for (Blade c : factors_)
      if (!blades_commute(b, c))
        throw InvalidArgument("factors " + format_blade(c, sig.n()) + " and " + format_blade(b, sig.n()) +
                              " do not commute");
    if (!independent_of(b.mask, factors_))
      throw InvalidArgument("factor " + format_blade(b, sig.n()) + " is a product of earlier factors");
    factors_.push_back(b);
  }
}

std::vector<std::uint32_t> CommutingSet::span_masks() const {
  std::vector<std::uint32_t> out(std::size_t{1} << factors_.size(), 0);
  for (std::size_t s = 1; s < out.size(); ++s) {
    int j = std::countr_zero(s);
    out[s] = out[s & (s - 1)] ^ factors_[j].mask;
  }
  return out;
}

bool CommutingSet::in_span(Blade b) const { return !independent_of(b.mask, factors_) || b.is_scalar(); }

CommutingSet find_commuting_set(const Signature& sig) {
  AlgebraStructure st = classify(sig);
  auto order = blade_order(sig);
  std::vector<Blade> chosen;
  if (!search(order, 1, static_cast<std::size_t>(st.k), chosen, sig))
    throw Error("no commuting set of size " + std::to_string(st.k) + " in " + to_string(sig));
  return CommutingSet(sig, chosen);
}

Idempotent product_idempotent(const CommutingSet& factors, const std::vector<int>& signs) {
  if (signs.size() != factors.size()) throw InvalidArgument("one sign per factor required");
  const Signature& sig = factors.signature();
  Multivector f(sig, Rational(1));
  Rational half(1, 2);
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (signs[j] != 1 && signs[j] != -1) throw InvalidArgument("signs must be +1 or -1");
    Multivector g(sig, half);
    g.add_term(factors.factors()[j], signs[j] > 0 ? half : Rational(-half));
    f = f * g;
  }
  return {f, factors, signs};
}

Idempotent primitive_idempotent(const CommutingSet& factors, const std::vector<int>& signs) {
  int k = classify(factors.signature()).k;
  if (factors.size() != static_cast<std::size_t>(k))
    throw InvalidArgument("primitive idempotent needs " + std::to_string(k) + " factors");
  return product_idempotent(factors, signs);
}

Idempotent primitive_idempotent(const CommutingSet& factors) {
  return primitive_idempotent(factors, std::vector<int>(factors.size(), 1));
}

Idempotent primitive_idempotent(const Signature& sig) { return primitive_idempotent(find_commuting_set(sig)); }

int absorption_sign(Blade h, const Idempotent& f) {
  const auto& t = f.factors.factors();
  const Signature& sig = f.signature();
  // write h as a product of factors, accumulating the reordering sign
  std::vector<Blade> basis;
  for (std::size_t s = 0; s < (std::size_t{1} << t.size()); ++s) {
    SignedBlade acc(Blade{});
    int sigma = 1;
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (!((s >> j) & 1)) continue;
      acc = blade_mul(acc, SignedBlade(t[j]), sig);
      sigma *= f.signs[j];
    }
    // (prod t_j) f = (prod s_j) f, and prod t_j = acc.sign e_h
    if (acc.blade == h) return acc.sign * sigma;
  }
  throw InvalidArgument("blade is not in the span of the factors");
}

Idempotent grade_involution(const Idempotent& f) {
  std::vector<int> signs = f.signs;
  for (std::size_t j = 0; j < signs.size(); ++j)
    if (f.factors.factors()[j].grade() & 1) signs[j] = -signs[j];
  return product_idempotent(f.factors, signs);
}

std::vector<Idempotent> idempotent_family(const CommutingSet& factors) {
  std::vector<Idempotent> out;
  std::size_t k = factors.size();
  for (std::size_t s = 0; s < (std::size_t{1} << k); ++s) {
    std::vector<int> signs(k);
    for (std::size_t j = 0; j < k; ++j) signs[j] = ((s >> j) & 1) ? -1 : 1;
    out.push_back(product_idempotent(factors, signs));
  }
  return out;
}

bool is_idempotent(const Multivector& f) { return f * f == f; }

std::size_t left_ideal_dimension(const Multivector& f) { return left_regular_matrix(f).rank(); }

bool is_primitive(const Multivector& f) {
  if (!is_idempotent(f)) throw InvalidArgument("element is not idempotent");
  if (f.is_zero()) return false;
  AlgebraStructure st = classify(f.signature());
  std::size_t minimal = f.signature().dimension() >> st.k;
  return left_ideal_dimension(f) == minimal;
}

std::pair<Multivector, Multivector> central_idempotents(const Signature& sig) {
  if (classify(sig).simple) throw InvalidArgument(to_string(sig) + " is simple");
  Blade omega((std::uint32_t{1} << sig.n()) - 1);
  Rational half(1, 2);
  Multivector plus(sig, half), minus(sig, half);
  plus.add_term(omega, half);
  minus.add_term(omega, -half);
  return {plus, minus};
}

std::string to_string(const Idempotent& f) {
  std::size_t k = f.factors.size();
  if (k == 0) return "1";
  std::string out = "1/" + std::to_string(std::size_t{1} << k);
  for (std::size_t j = 0; j < k; ++j) {
    out += std::string("(1") + (f.signs[j] > 0 ? "+" : "-") + format_blade(f.factors.factors()[j], f.signature().n()) + ")";
  }
  return out;
}

std::string factor_list(const Idempotent& f) {
  std::string out;
  for (std::size_t j = 0; j < f.factors.size(); ++j) {
    if (j) out += ",";
    out += (f.signs[j] > 0 ? "+" : "-") + format_blade(f.factors.factors()[j], f.signature().n());
  }
  return out;
}

}  // namespace cliffrep
