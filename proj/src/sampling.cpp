#include "cliffrep/sampling.hpp"

namespace cliffrep {

Rational Sampler::dyadic() {
  long a = static_cast<long>(below(33)) - 16;
  long den = 1L << below(4);
  return make_rational(a, den);
}

Rational Sampler::nonzero_dyadic() {
  for (;;) {
    Rational r = dyadic();
    if (!is_zero(r)) return r;
  }
}

Multivector Sampler::multivector(const Signature& sig) {
  Multivector u(sig);
  for (std::uint32_t m = 0; m < sig.dimension(); ++m) {
    if (below(4) == 0) continue;
    u.add_term(Blade(m), dyadic());
  }
  return u;
}

Multivector Sampler::sparse(const Signature& sig, std::size_t terms) {
  Multivector u(sig);
  for (std::size_t t = 0; t < terms; ++t)
    u.add_term(Blade(static_cast<std::uint32_t>(below(sig.dimension()))), nonzero_dyadic());
  return u;
}

Multivector Sampler::vector(const Signature& sig) {
  Multivector v(sig);
  for (int i = 0; i < sig.n(); ++i) v.add_term(Blade(1u << i), dyadic());
  return v;
}

SignedBlade Sampler::group_element(const Signature& sig) {
  auto mask = static_cast<std::uint32_t>(below(sig.dimension()));
  return {coin() ? -1 : 1, Blade(mask)};
}

}  // namespace cliffrep
