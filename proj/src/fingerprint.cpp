#include "cliffrep/fingerprint.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace cliffrep {

namespace {

std::string power(const std::string& base, int e) {
  if (e == 0) return "";
  if (e == 1) return base;
  return "(" + base + ")^" + std::to_string(e);
}

std::string join_factors(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += " x ";
    out += p;
  }
  return out.empty() ? "1" : out;
}

std::size_t order_product(const std::vector<SignedBlade>& gens, const Signature& sig) {
  std::size_t prod = 1;
  for (SignedBlade g : gens) prod *= element_order(g, sig);
  return prod;
}

// The listed elements generate h as an internal direct product of cyclic groups.
bool certifies(const std::vector<SignedBlade>& gens, const Subgroup& h) {
  const Signature& sig = h.signature();
  return order_product(gens, sig) == h.size() && Subgroup::generated_by(sig, gens) == h;
}

bool anticommute(SignedBlade a, SignedBlade b) { return !blades_commute(a.blade, b.blade); }

bool central(SignedBlade c, const Subgroup& h) {
  for (SignedBlade x : h.members())
    if (!blades_commute(c.blade, x.blade)) return false;
  return true;
}

// F generators plus a central elementary-abelian complement generating h directly.
bool certify_nonabelian(const std::vector<SignedBlade>& f, const std::vector<SignedBlade>& rest, const Subgroup& h) {
  const Signature& sig = h.signature();
  Subgroup fg = Subgroup::generated_by(sig, f);
  std::size_t expected = f.size() == 2 ? 8 : 16;
  if (fg.size() != expected) return false;
  for (SignedBlade c : rest) {
    if (element_order(c, sig) != 2 || !central(c, h)) return false;
  }
  std::vector<SignedBlade> all = f;
  all.insert(all.end(), rest.begin(), rest.end());
  return fg.size() * (std::size_t{1} << rest.size()) == h.size() && Subgroup::generated_by(sig, all) == h;
}

void classify_abelian(GroupFingerprint& fp, const Subgroup& h) {
  const Signature& sig = h.signature();
  std::size_t omega1 = fp.element_order_histogram[1] + fp.element_order_histogram[2];
  int log_h = std::countr_zero(h.size());
  int log_o = std::countr_zero(omega1);
  int b = log_h - log_o;
  int a = log_o - b;

  // turn extra order-4 generators into order-2 ones: g g0 squares to g^2 g0^2 = 1
  std::vector<SignedBlade> twos, fours;
  for (SignedBlade g : fp.generators) (element_order(g, sig) == 4 ? fours : twos).push_back(g);
  for (std::size_t i = 1; i < fours.size() && static_cast<int>(fours.size()) > b; ++i) {
    SignedBlade prod = blade_mul(fours[i], fours[0], sig);
    if (element_order(prod, sig) == 2) {
      twos.push_back(prod);
      fours.erase(fours.begin() + static_cast<long>(i));
      --i;
    }
  }
  std::vector<SignedBlade> cert = twos;
  cert.insert(cert.end(), fours.begin(), fours.end());
  if (static_cast<int>(twos.size()) != a || static_cast<int>(fours.size()) != b || !certifies(cert, h)) {
    fp.kind = GroupKind::Unresolved;
    fp.label = "UNRESOLVED";
    return;
  }
  fp.kind = b == 0 ? GroupKind::ElementaryAbelian : GroupKind::Abelian;
  fp.z2_rank = a;
  fp.z4_rank = b;
  fp.certificate = cert;
  fp.label = join_factors({power("Z2", a), power("Z4", b)});
}

void classify_nonabelian(GroupFingerprint& fp, const Subgroup& h) {
  const Signature& sig = h.signature();
  const auto& g = fp.generators;
  std::vector<std::size_t> fours;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (element_order(g[i], sig) == 4) fours.push_back(i);

  auto complement = [&](const std::vector<std::size_t>& used) {
    std::vector<SignedBlade> rest;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (std::find(used.begin(), used.end(), i) == used.end()) rest.push_back(g[i]);
    return rest;
  };
  auto accept = [&](GroupKind kind, const std::vector<std::size_t>& used) {
    std::vector<SignedBlade> f;
    for (std::size_t i : used) f.push_back(g[i]);
    auto rest = complement(used);
    if (!certify_nonabelian(f, rest, h)) return false;
    fp.kind = kind;
    fp.z2_rank = static_cast<int>(rest.size());
    fp.certificate = f;
    fp.certificate.insert(fp.certificate.end(), rest.begin(), rest.end());
    fp.label = join_factors({kind == GroupKind::F3 ? "F3" : "F2", power("Z2", fp.z2_rank)});
    return true;
  };

  for (std::size_t x = 0; x < fours.size(); ++x)
    for (std::size_t y = x + 1; y < fours.size(); ++y)
      for (std::size_t z = y + 1; z < fours.size(); ++z) {
        std::size_t i = fours[x], j = fours[y], k = fours[z];
        if (anticommute(g[i], g[j]) && anticommute(g[i], g[k]) && anticommute(g[j], g[k]) &&
            accept(GroupKind::F3, {i, j, k}))
          return;
      }
  for (std::size_t x = 0; x < fours.size(); ++x)
    for (std::size_t y = x + 1; y < fours.size(); ++y) {
      std::size_t i = fours[x], j = fours[y];
      if (anticommute(g[i], g[j]) && accept(GroupKind::F2, {i, j})) return;
    }
  fp.kind = GroupKind::Unresolved;
  fp.label = "UNRESOLVED";
}

}  // namespace

GroupFingerprint fingerprint(const Subgroup& h) {
  const Signature& sig = h.signature();
  GroupFingerprint fp;
  fp.order = h.size();
  for (SignedBlade x : h.members()) {
    ++fp.element_order_histogram[element_order(x, sig)];
    if (central(x, h)) ++fp.center_size;
  }
  fp.abelian = fp.center_size == fp.order;
  fp.generators = minimal_generators(h);
  for (SignedBlade g : fp.generators) fp.generator_orders.push_back(element_order(g, sig));

  if (fp.abelian)
    classify_abelian(fp, h);
  else
    classify_nonabelian(fp, h);

  if (fp.abelian) {
    int twos = static_cast<int>(std::count(fp.generator_orders.begin(), fp.generator_orders.end(), 2));
    int fours = static_cast<int>(fp.generator_orders.size()) - twos;
    fp.presentation = join_factors({power("Z2", twos), power("Z4", fours)});
  } else {
    fp.presentation = fp.label;
  }
  return fp;
}

std::string format_orders(const std::vector<int>& orders) {
  std::string out = "(";
  for (std::size_t i = 0; i < orders.size();) {
    std::size_t j = i;
    while (j < orders.size() && orders[j] == orders[i]) ++j;
    if (i) out += ",";
    out += std::to_string(orders[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out + ")";
}

std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::ElementaryAbelian: return "elementary-abelian";
    case GroupKind::Abelian: return "abelian";
    case GroupKind::F2: return "F2";
    case GroupKind::F3: return "F3";
    case GroupKind::Unresolved: return "unresolved";
  }
  return "?";
}

}  // namespace cliffrep
