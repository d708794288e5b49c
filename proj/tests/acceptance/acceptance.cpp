// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include "cliffrep/cli/commands.hpp"
#include "cliffrep/cli/expression.hpp"
#include "cliffrep/cli/formula.hpp"
#include "cliffrep/cli/verify.hpp"
#include "cliffrep/left_regular.hpp"
#include "cliffrep/norms.hpp"
#include "cliffrep/rep_matrix.hpp"
#include "cliffrep/sampling.hpp"
#include "oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

using namespace cliffrep;
using namespace cliffrep::cli;

namespace {

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;
  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first = what;
  }
};

bool report(int id, const std::string& title, const Outcome& o, const std::string& extra = {}) {
  bool ok = o.failures == 0 && o.cases > 0;
  std::cout << "AC" << id << " " << (ok ? "PASS" : "FAIL") << "  " << title << "  [" << o.cases << " cases";
  if (o.failures) std::cout << ", " << o.failures << " failing, first: " << o.first;
  if (!extra.empty()) std::cout << ", " << extra;
  std::cout << "]" << std::endl;
  return ok;
}

Idempotent idempotent_of(const Signature& sig, const std::string& factors) {
  FactorList fl = parse_factor_list(factors, sig);
  return primitive_idempotent(CommutingSet(sig, fl.blades), fl.signs);
}

std::vector<Signature> all_signatures(int max_n) {
  std::vector<Signature> out;
  for (int n = 1; n <= max_n; ++n)
    for (int p = 0; p <= n; ++p) out.emplace_back(p, n - p);
  return out;
}

bool semisimple(const Signature& sig) { return ((sig.p - sig.q) % 4 + 4) % 4 == 1; }

// e_I -> e_I^{-1} = (e_I^2) e_I, squares from the naive product
Multivector naive_transposition(const Multivector& u) {
  Multivector out(u.signature());
  for (const auto& [b, c] : u.terms()) out.add_term(b, c * oracle::naive_blade_product(b, b, u.signature()).first);
  return out;
}

Multivector naive_grade_involution(const Multivector& u) {
  Multivector out(u.signature());
  for (const auto& [b, c] : u.terms()) out.add_term(b, b.grade() % 2 ? Rational(-c) : c);
  return out;
}

Multivector blade_mv(const Signature& sig, std::uint32_t mask) { return Multivector(sig, Blade(mask)); }

// all g f g^{-1} = g f T(g), g running over the monomials
std::vector<Multivector> brute_orbit(const Multivector& f) {
  const Signature& sig = f.signature();
  std::vector<Multivector> out;
  for (std::uint32_t m = 0; m < sig.dimension(); ++m) {
    Multivector g = blade_mv(sig, m);
    Multivector h = oracle::naive_product(oracle::naive_product(g, f), naive_transposition(g));
    if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
  }
  return out;
}

// printed structure labels, as element-order histograms
std::map<int, std::size_t> label_histogram(const std::string& label) {
  auto cyclic = [](int n) {
    std::map<int, std::size_t> h;
    for (int k = 0; k < n; ++k) ++h[n / std::gcd(k, n)];
    return h;
  };
  // F2, F3: the vee groups of Cl(0,2) (quaternion group) and Cl(0,3)
  auto vee = [](int n) {
    Signature sig(0, n);
    std::vector<std::pair<std::uint32_t, int>> all;
    for (std::uint32_t m = 0; m < sig.dimension(); ++m) {
      all.emplace_back(m, 1);
      all.emplace_back(m, -1);
    }
    return oracle::order_histogram(all, sig);
  };
  std::map<int, std::size_t> h{{1, 1}};
  std::regex part(R"((F2|F3|\(Z2\)\^(\d+)|Z2|\(Z4\)\^(\d+)|Z4))");
  for (auto it = std::sregex_iterator(label.begin(), label.end(), part); it != std::sregex_iterator(); ++it) {
    std::string s = (*it)[1];
    if (s == "F2" || s == "F3") {
      h = oracle::product_histogram(h, vee(s == "F2" ? 2 : 3));
      continue;
    }
    int order = s.find("Z4") != std::string::npos ? 4 : 2;
    int count = (*it)[2].matched ? std::stoi((*it)[2]) : (*it)[3].matched ? std::stoi((*it)[3]) : 1;
    for (int i = 0; i < count; ++i) h = oracle::product_histogram(h, cyclic(order));
  }
  return h;
}

std::size_t histogram_total(const std::map<int, std::size_t>& h) {
  std::size_t t = 0;
  for (const auto& [o, c] : h) t += c;
  return t;
}

int naive_order(const Multivector& g) {
  Multivector one(g.signature(), Rational(1)), x = g;
  for (int k = 1; k <= 8; ++k) {
    if (x == one) return k;
    x = oracle::naive_product(x, g);
  }
  return 0;
}

// ---- AC1 ------------------------------------------------------------------

bool ac1() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  std::ostringstream out;
  cmd_tables(out, 0, Format::Json, false);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  auto rows = nlohmann::json::parse(out.str());
  const auto& cat = table_catalog();
  o.expect(rows.size() == cat.size(), "row count");
  for (std::size_t i = 0; i < std::min(rows.size(), cat.size()); ++i) {
    const TableEntry& e = cat[i];
    TableRow r = rows[i].get<TableRow>();
    Signature sig(e.p, e.q);
    std::string where = "table " + std::to_string(e.table) + " " + to_string(sig);
    o.expect(r.table == e.table && r.p == e.p && r.q == e.q, where + " row identity");

    int exp = (semisimple(sig) ? 2 : 1) + e.p + oracle::rh(e.q - e.p);
    std::size_t expected = std::size_t{1} << exp;
    o.expect(r.stab_order == expected, where + " stabilizer order " + std::to_string(r.stab_order));

    Idempotent f = idempotent_of(sig, r.idempotent);
    auto stab = oracle::brute_stabilizer(f.value);
    o.expect(stab.size() == expected, where + " brute-force stabilizer order " + std::to_string(stab.size()));

    auto printed = label_histogram(e.label);
    if (histogram_total(printed) == expected) {
      o.expect(r.label == e.label, where + " label " + r.label + " vs " + e.label);
      o.expect(oracle::order_histogram(stab, sig) == printed, where + " element orders vs " + e.label);
    } else {
      // the printed entry names the generators' presentation, not the full group
      o.expect(r.presentation == e.label, where + " presentation " + r.presentation + " vs " + e.label);
    }

    std::vector<int> got = r.gen_orders, want = e.orders;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    o.expect(got == want, where + " generator orders " + format_orders(r.gen_orders));
    bool orders_ok = r.generators.size() == r.gen_orders.size();
    for (std::size_t g = 0; orders_ok && g < r.generators.size(); ++g)
      orders_ok = naive_order(parse_expression(r.generators[g], sig)) == r.gen_orders[g];
    o.expect(orders_ok, where + " listed generator orders");
  }
  o.expect(secs < 60.0, "runtime " + std::to_string(secs) + " s");
  std::ostringstream t;
  t.precision(2);
  t << std::fixed << secs << " s";
  return report(1, "table regeneration", o, t.str());
}

// ---- AC2 ------------------------------------------------------------------

bool k_is(const KElement& k, const std::vector<Rational>& want) {
  for (std::size_t a = 0; a < k.dim(); ++a)
    if (k[a] != (a < want.size() ? want[a] : Rational(0))) return false;
  return true;
}

oracle::KMatrix direct(const Multivector& u, const SpinorBasis& s) {
  return oracle::direct_rep(u, s.idempotent().value, s.transversal().reps, s.kbasis()->monomials(),
                            static_cast<int>(s.idempotent().factors.size()));
}

bool ac2() {
  Outcome o;
  Signature sig(2, 2);
  SpinorBasis s = SpinorBasis::build(idempotent_of(sig, "+e13,+e24"));
  const auto& reps = s.transversal().reps;
  std::vector<Blade> want = {Blade{}, blade_from_indices({1}), blade_from_indices({2}), blade_from_indices({1, 2})};
  o.expect(reps == want, "transversal");

  const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sg[4][4] = {{1, 1, 1, -1}, {1, 1, 1, -1}, {1, -1, 1, 1}, {1, -1, 1, 1}};
  std::vector<std::vector<int>> printed(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) printed[i][j] = sg[i][j];
  o.expect(structure_constants(s).matrix() == printed, "structure constant matrix");

  // printed entry (j,k) is c^j_{l,k} for the l with m_l m_k f in K m_j f; checked with naive products
  const Multivector& f = s.idempotent().value;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      int l = idx[j][k];
      Multivector lhs = oracle::naive_product(Multivector(sig, reps[l]), oracle::naive_product(Multivector(sig, reps[k]), f));
      o.expect(lhs == oracle::naive_product(Multivector(sig, reps[j], Rational(printed[j][k])), f),
               "m_l m_k f, j=" + std::to_string(j) + " k=" + std::to_string(k));
    }

  Sampler rng(2);
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> p(4);
    for (auto& x : p) x = rng.dyadic();
    Multivector u(sig);
    for (int i = 0; i < 4; ++i) u.add_term(reps[i], p[i]);
    RepMatrix m = rep_matrix(u, s);
    oracle::KMatrix d = direct(u, s);
    bool ok = true;
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        Rational e = p[idx[j][k]] * sg[j][k];
        ok = ok && k_is(m.at(j, k), {e}) && d[j][k][0] == e;
      }
    o.expect(ok, "[Psi] sample " + std::to_string(t));
  }
  return report(2, "Cl(2,2) structure constants and summed spinor matrix", o);
}

// ---- AC3 ------------------------------------------------------------------

bool ac3() {
  Outcome o;
  Signature sig(3, 0);
  SpinorBasis s = SpinorBasis::build(idempotent_of(sig, "+e1"));
  Multivector e2(sig, blade_from_indices({2}));
  const Multivector& f1 = s.family()[0].value;
  const Multivector& f2 = s.family()[1].value;
  Multivector half(sig, make_rational(1, 2));
  o.expect(f1 == half + Multivector(sig, blade_from_indices({1}), make_rational(1, 2)), "f_1");
  o.expect(f2 == half - Multivector(sig, blade_from_indices({1}), make_rational(1, 2)), "f_2");

  auto unit_ok = [&](const Multivector& x, std::size_t r, std::size_t c) {
    RepMatrix m = rep_matrix(x, s);
    oracle::KMatrix d = direct(x, s);
    bool ok = true;
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        Rational e = (j == r && k == c) ? 1 : 0;
        ok = ok && k_is(m.at(j, k), {e, 0}) && d[j][k] == std::vector<Rational>{e, 0};
      }
    return ok;
  };
  o.expect(unit_ok(f1, 0, 0), "[f_1]");
  o.expect(unit_ok(oracle::naive_product(e2, f1), 1, 0), "[e2 f_1]");
  o.expect(unit_ok(f2, 1, 1), "[f_2]");
  o.expect(unit_ok(oracle::naive_product(e2, f2), 0, 1), "[e2 f_2]");

  // u = u1 + u2 e1 + u3 e2 + u4 e3 + u5 e12 + u6 e13 + u7 e23 + u8 e123
  const std::vector<std::vector<int>> blades = {{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  Sampler rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> u(9);
    for (int i = 1; i <= 8; ++i) u[i] = rng.dyadic();
    Multivector el(sig);
    for (int i = 0; i < 8; ++i) el.add_term(blade_from_indices(blades[i]), u[i + 1]);
    // printed [u], entries as (real, e23) pairs
    std::vector<Rational> a00 = {u[1] + u[2], u[8] + u[7]}, a01 = {u[5] + u[3], -(u[4] + u[6])},
                          a10 = {-u[5] + u[3], u[4] - u[6]}, a11 = {u[1] - u[2], u[8] - u[7]};
    auto conj = [](std::vector<Rational> z) {
      z[1] = -z[1];
      return z;
    };
    std::vector<std::vector<std::vector<Rational>>> pu = {{a00, a01}, {a10, a11}};
    std::vector<std::vector<std::vector<Rational>>> pt = {{conj(a00), conj(a10)}, {conj(a01), conj(a11)}};
    RepMatrix m = rep_matrix(el, s), mt = rep_matrix(transposition(el), s);
    oracle::KMatrix d = direct(el, s), dt = direct(naive_transposition(el), s);
    bool ok = true;
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        ok = ok && k_is(m.at(j, k), pu[j][k]) && k_is(mt.at(j, k), pt[j][k]) && d[j][k] == pu[j][k] &&
             dt[j][k] == pt[j][k];
    o.expect(ok, "generic point " + std::to_string(t));
  }
  return report(3, "Cl(3,0) matrix units, [u] and [T(u)]", o);
}

// ---- AC4 ------------------------------------------------------------------

RingType expected_ring(const Signature& sig) {
  switch (((sig.p - sig.q) % 8 + 8) % 8) {
    case 0:
    case 2: return RingType::Real;
    case 1: return RingType::DoubleReal;
    case 3:
    case 7: return RingType::Complex;
    case 5: return RingType::DoubleQuaternion;
    default: return RingType::Quaternion;
  }
}

// conjugate transpose, K units beyond 1 square to -1
bool is_adjoint(const RepMatrix& a, const RepMatrix& b) {
  if (a.size() != b.size() || a.paired() != b.paired()) return false;
  auto conj_eq = [](const KElement& x, const KElement& y) {
    if (x.dim() != y.dim() || x[0] != y[0]) return false;
    for (std::size_t i = 1; i < x.dim(); ++i)
      if (x[i] != -y[i]) return false;
    return true;
  };
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (!conj_eq(b.at(j, k), a.at(k, j))) return false;
      if (a.paired() && !conj_eq(b.hat(j, k), a.hat(k, j))) return false;
    }
  return true;
}

bool ac4() {
  Outcome o;
  Sampler rng(4);
  for (const auto& sig : all_signatures(9)) {
    Representation rp = Representation::build(sig);
    const SpinorBasis& s = rp.basis();
    o.expect(classify(sig).ring == expected_ring(sig), to_string(sig) + " ring");
    RingType kr = s.kbasis()->ring();
    RingType want = expected_ring(sig);
    if (want == RingType::DoubleReal) want = RingType::Real;
    if (want == RingType::DoubleQuaternion) want = RingType::Quaternion;
    o.expect(kr == want, to_string(sig) + " K type");
    for (std::size_t b = 1; b < s.kbasis()->dim(); ++b) {
      Blade m = s.kbasis()->monomials()[b];
      o.expect(oracle::naive_blade_product(m, m, sig).first == -1, to_string(sig) + " K unit squares to -1");
    }
    o.expect(rp.simple() == !semisimple(sig), to_string(sig) + " simplicity");
    for (int t = 0; t < 100; ++t) {
      Multivector u = rng.multivector(sig);
      o.expect(is_adjoint(rp(u), rp(naive_transposition(u))), to_string(sig) + " u=" + to_string(u));
    }
  }
  return report(4, "rep(T(u)) is the adjoint of rep(u), n <= 9", o);
}

// ---- AC5 ------------------------------------------------------------------

bool ac5() {
  Outcome o;
  Sampler rng(5);
  auto start = std::chrono::steady_clock::now();
  for (const auto& sig : all_signatures(6))
    for (int t = 0; t < 50; ++t) {
      Multivector u = rng.multivector(sig);
      RationalMatrix lu = left_regular_matrix(u);
      RationalMatrix lt = left_regular_matrix(transposition(u));
      o.expect(lu == oracle::naive_left_regular(u) && lt == oracle::naive_left_regular(naive_transposition(u)) &&
                   lt == lu.transpose(),
               to_string(sig) + " u=" + to_string(u));
    }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream t;
  t.precision(2);
  t << std::fixed << secs << " s";
  return report(5, "[L_T(u)] = [L_u]^T, n <= 6", o, t.str());
}

// ---- AC6 / AC7 ------------------------------------------------------------

bool pairwise_annihilating(const std::vector<Multivector>& fs) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < fs.size(); ++j)
      if (i != j && !oracle::naive_product(fs[i], fs[j]).is_zero()) return false;
  return true;
}

Multivector total(const std::vector<Multivector>& fs, const Signature& sig) {
  Multivector s(sig);
  for (const auto& f : fs) s += f;
  return s;
}

// 1/2(1 +- e_{1..n}); the one that absorbs f
Multivector central_part(const Multivector& f) {
  const Signature& sig = f.signature();
  Blade top(static_cast<std::uint32_t>(sig.dimension() - 1));
  for (int s : {1, -1}) {
    Multivector j = Multivector(sig, make_rational(1, 2)) + Multivector(sig, top, make_rational(s, 2));
    if (oracle::naive_product(j, f) == f) return j;
  }
  return Multivector(sig);
}

bool ac6() {
  Outcome o;
  for (const auto& sig : all_signatures(9)) {
    Idempotent f = primitive_idempotent(sig);
    std::size_t k = f.factors.size();
    auto orb = brute_orbit(f.value);
    std::size_t want = semisimple(sig) ? std::size_t{1} << (k - 1) : std::size_t{1} << k;
    std::string w = to_string(sig);
    o.expect(orb.size() == want, w + " orbit size " + std::to_string(orb.size()));

    std::vector<Multivector> lib;
    for (const auto& g : orbit(f)) lib.push_back(g.value);
    o.expect(lib.size() == orb.size() && std::all_of(lib.begin(), lib.end(), [&](const Multivector& x) {
               return std::find(orb.begin(), orb.end(), x) != orb.end();
             }),
             w + " library orbit");

    auto stab = oracle::brute_stabilizer(f.value);
    o.expect(orb.size() * stab.size() == 2 * sig.dimension(), w + " orbit * stabilizer");
    o.expect(stabilizer(f).size() == stab.size(), w + " library stabilizer");
    o.expect(pairwise_annihilating(orb), w + " annihilating");
    Multivector expected_sum = semisimple(sig) ? central_part(f.value) : Multivector(sig, Rational(1));
    o.expect(!expected_sum.is_zero() && total(orb, sig) == expected_sum, w + " orbit sum");
  }
  return report(6, "orbit/stabilizer accounting, n <= 9", o);
}

bool ac7() {
  Outcome o;
  for (auto [p, q] : {std::pair{2, 1}, {0, 3}, {3, 2}}) {
    Signature sig(p, q);
    Idempotent f = primitive_idempotent(sig);
    Multivector fh = naive_grade_involution(f.value);
    std::string w = to_string(sig);
    o.expect(grade_involution(f).value == fh, w + " f hat");
    auto of = brute_orbit(f.value);
    // every g applied to every orbit member, checked against O(f hat)
    auto ofh = brute_orbit(fh);
    for (const auto& x : of)
      for (std::uint32_t m = 0; m < sig.dimension(); ++m) {
        Multivector g = blade_mv(sig, m);
        Multivector y = oracle::naive_product(oracle::naive_product(g, x), naive_transposition(g));
        o.expect(std::find(ofh.begin(), ofh.end(), y) == ofh.end(), w + " g maps O(f) into O(f hat)");
      }
    auto s1 = oracle::brute_stabilizer(f.value), s2 = oracle::brute_stabilizer(fh);
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    o.expect(s1 == s2, w + " stabilizers differ");
    Multivector sum = total(of, sig) + total(ofh, sig);
    o.expect(sum == Multivector(sig, Rational(1)), w + " J+ + J- = 1");
  }
  return report(7, "semisimple orbit separation", o);
}

// ---- AC8 ------------------------------------------------------------------

bool ac8() {
  Outcome o;
  VerifyOptions opt;
  std::size_t checks = 0, cases = 0;
  for (const auto& sig : all_signatures(9)) {
    Report r = verify_props(sig, opt);
    for (const auto& c : r.results()) {
      ++checks;
      cases += c.cases;
      o.expect(c.passed() && c.cases > 0, c.scope + " " + c.name + ": " + c.detail);
    }
  }
  return report(8, "structural property suites, n <= 9", o,
                std::to_string(cases) + " sampled/exhaustive instances");
}

// ---- AC9 ------------------------------------------------------------------

bool ac9() {
  Outcome o;
  {
    Signature sig(2, 2);
    SpinorBasis s = SpinorBasis::build(idempotent_of(sig, "+e13,+e24"));
    PureSpinorWitness w{Multivector(sig, blade_from_indices({1, 2}))};
    const std::string plus = "-psi1*phi4+psi3*phi2+psi4*phi1-psi2*phi3";
    const std::string minus = "-psi1*phi4-psi3*phi2+psi4*phi1+psi2*phi3";
    o.expect(render(component(beta_form(BetaKind::Plus, w, s), 0), 1) == render(parse_bilinear(plus, 1, 4), 1),
             "Cl(2,2) beta+");
    o.expect(render(component(beta_form(BetaKind::Minus, w, s), 0), 1) == render(parse_bilinear(minus, 1, 4), 1),
             "Cl(2,2) beta-");
  }
  {
    Signature sig(3, 0);
    SpinorBasis s = SpinorBasis::build(idempotent_of(sig, "+e1"));
    BilinearForm t = t_inner_form(s);
    auto wp = find_witness(BetaKind::Plus, s);
    o.expect(wp && t == beta_form(BetaKind::Plus, *wp, s), "Cl(3,0) t_inner = beta+");
    BilinearPolynomial m0 = parse_bilinear("psi22*phi12-psi21*phi11-psi12*phi22+psi11*phi21", 2, 4);
    BilinearPolynomial m1 = parse_bilinear("-psi22*phi11-psi21*phi12+psi12*phi21+psi11*phi22", 2, 4);
    o.expect(!(component(t, 0) == m0 && component(t, 1) == m1), "Cl(3,0) t_inner differs from printed beta-");
    BilinearForm bm = beta_form(BetaKind::Minus, PureSpinorWitness{Multivector(sig, blade_from_indices({2}))}, s);
    o.expect(component(bm, 0) == m0 && component(bm, 1) == m1, "Cl(3,0) printed beta- with s = e2");
  }
  for (const auto& sig : all_signatures(5)) {
    if (sig.p != 0 && sig.q != 0) continue;
    BetaKind kind = sig.q == 0 ? BetaKind::Plus : BetaKind::Minus;
    SpinorBasis s = SpinorBasis::build(primitive_idempotent(sig));
    auto w = find_witness(kind, s);
    o.expect(w && t_inner_form(s) == beta_form(kind, *w, s), to_string(sig) + " coincidence");
  }
  return report(9, "bilinear form comparisons", o);
}

}  // namespace

int main() {
  bool ok = true;
  ok &= ac1();
  ok &= ac2();
  ok &= ac3();
  ok &= ac4();
  ok &= ac5();
  ok &= ac6();
  ok &= ac7();
  ok &= ac8();
  ok &= ac9();
  std::cout << (ok ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
  return ok ? 0 : 1;
}
