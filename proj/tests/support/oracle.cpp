#include "oracle.hpp"

#include <numeric>

namespace oracle {

std::pair<int, Blade> naive_blade_product(Blade a, Blade b, const Signature& sig) {
  std::vector<int> idx;
  for (int i = 1; i <= sig.n(); ++i)
    if (a.contains(i)) idx.push_back(i);
  for (int i = 1; i <= sig.n(); ++i)
    if (b.contains(i)) idx.push_back(i);
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
      if (idx[i] > idx[i + 1]) {
        std::swap(idx[i], idx[i + 1]);
        sign = -sign;
        changed = true;
      } else if (idx[i] == idx[i + 1]) {
        if (idx[i] > sig.p) sign = -sign;
        idx.erase(idx.begin() + static_cast<long>(i), idx.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  std::uint32_t mask = 0;
  for (int i : idx) mask |= 1u << (i - 1);
  return {sign, Blade(mask)};
}

Multivector naive_product(const Multivector& a, const Multivector& b) {
  Multivector out(a.signature());
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) {
      auto [s, blade] = naive_blade_product(ba, bb, a.signature());
      out.add_term(blade, ca * cb * s);
    }
  return out;
}

cliffrep::RationalMatrix naive_left_regular(const Multivector& u) {
  const Signature& sig = u.signature();
  std::size_t d = sig.dimension();
  cliffrep::RationalMatrix m(d, d);
  // rows and columns indexed by mask, then permuted to monomial order
  auto order = cliffrep::blade_order(sig);
  std::vector<std::size_t> pos(d);
  for (std::size_t i = 0; i < d; ++i) pos[order[i].mask] = i;
  for (std::size_t col = 0; col < d; ++col) {
    Multivector prod = naive_product(u, Multivector(sig, order[col]));
    for (const auto& [b, c] : prod.terms()) m.at(pos[b.mask], col) = c;
  }
  return m;
}

namespace {

Multivector inverse_blade(Blade b, const Signature& sig) {
  auto [s, unit] = naive_blade_product(b, b, sig);
  (void)unit;
  return Multivector(sig, b, Rational(s));  // e^-1 = e / e^2
}

}  // namespace

KMatrix direct_rep(const Multivector& u, const Multivector& f, const std::vector<Blade>& reps,
                   const std::vector<Blade>& kmonomials, int k) {
  const Signature& sig = u.signature();
  const Rational scale = Rational(1 << k);
  std::size_t n = reps.size();
  KMatrix out(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(kmonomials.size())));
  for (std::size_t col = 0; col < n; ++col) {
    Multivector image = naive_product(u, naive_product(Multivector(sig, reps[col]), f));
    for (std::size_t row = 0; row < n; ++row) {
      Multivector lambda = naive_product(naive_product(f, inverse_blade(reps[row], sig)), image);
      for (std::size_t a = 0; a < kmonomials.size(); ++a)
        out[row][col][a] = lambda.coefficient(kmonomials[a]) * scale;
    }
  }
  return out;
}

std::vector<std::pair<std::uint32_t, int>> brute_stabilizer(const Multivector& f) {
  const Signature& sig = f.signature();
  std::vector<std::pair<std::uint32_t, int>> out;
  for (std::uint32_t m = 0; m < sig.dimension(); ++m) {
    Multivector g(sig, Blade(m));
    if (naive_product(naive_product(g, f), inverse_blade(Blade(m), sig)) == f) {
      out.emplace_back(m, 1);
      out.emplace_back(m, -1);
    }
  }
  return out;
}

std::map<int, std::size_t> order_histogram(const std::vector<std::pair<std::uint32_t, int>>& members,
                                           const Signature& sig) {
  std::map<int, std::size_t> h;
  for (auto [mask, sign] : members) {
    int order = 1;
    std::uint32_t m = mask;
    int s = sign;
    while (!(m == 0 && s == 1)) {
      auto [ps, pb] = naive_blade_product(Blade(m), Blade(mask), sig);
      s = s * sign * ps;
      m = pb.mask;
      ++order;
    }
    ++h[order];
  }
  return h;
}

std::map<int, std::size_t> product_histogram(const std::map<int, std::size_t>& a, const std::map<int, std::size_t>& b) {
  std::map<int, std::size_t> h;
  for (auto [oa, ca] : a)
    for (auto [ob, cb] : b) h[std::lcm(oa, ob)] += ca * cb;
  return h;
}

int rh(int i) {
  static const int base[8] = {0, 1, 2, 2, 3, 3, 3, 3};
  int q = i >= 0 ? i / 8 : -((-i + 7) / 8);
  return base[i - 8 * q] + 4 * q;
}

}  // namespace oracle
