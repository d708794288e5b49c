#include "cliffrep/left_regular.hpp"

#include "cliffrep/errors.hpp"

namespace cliffrep {

namespace {

std::vector<std::size_t> positions(const std::vector<Blade>& order) {
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i].mask] = i;
  return pos;
}

}  // namespace

std::vector<Rational> coordinates(const Multivector& u) {
  auto pos = positions(blade_order(u.signature()));
  std::vector<Rational> out(pos.size());
  for (const auto& [b, c] : u.terms()) out[pos[b.mask]] = c;
  return out;
}

Multivector from_coordinates(const Signature& sig, const std::vector<Rational>& coords) {
  auto order = blade_order(sig);
  if (coords.size() != order.size()) throw InvalidArgument("coordinate vector has wrong length");
  Multivector u(sig);
  for (std::size_t i = 0; i < order.size(); ++i) u.add_term(order[i], coords[i]);
  return u;
}

RationalMatrix left_regular_matrix(const Multivector& u) {
  const Signature& sig = u.signature();
  auto order = blade_order(sig);
  auto pos = positions(order);
  RationalMatrix m(order.size(), order.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    for (const auto& [b, c] : u.terms()) {
      SignedBlade s = blade_mul(b, order[j], sig);
      Rational& cell = m.at(pos[s.blade.mask], j);
      if (s.sign > 0)
        cell += c;
      else
        cell -= c;
    }
  }
  return m;
}

}  // namespace cliffrep
