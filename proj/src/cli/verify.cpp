#include "cliffrep/cli/verify.hpp"

#include "cliffrep/cli/expression.hpp"
#include "cliffrep/cli/formula.hpp"
#include "cliffrep/errors.hpp"
#include "cliffrep/fingerprint.hpp"
#include "cliffrep/left_regular.hpp"
#include "cliffrep/norms.hpp"
#include "cliffrep/rep_matrix.hpp"
#include "cliffrep/sampling.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

namespace cliffrep::cli {

bool CheckResult::expect(bool ok, std::string_view what) {
  ++cases;
  if (!ok) {
    if (failures == 0) detail = std::string(what);
    ++failures;
  }
  return ok;
}


CheckResult& Report::add(std::string scope, std::string name) {
  CheckResult r;
  r.scope = std::move(scope);
  r.name = std::move(name);
  results_.push_back(std::move(r));
  return results_.back();
}

void Report::append(const Report& other) {
  results_.insert(results_.end(), other.results_.begin(), other.results_.end());
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return std::count_if(results_.begin(), results_.end(), [](const CheckResult& r) { return !r.passed(); });
}

void Report::print(std::ostream& out) const {
  std::size_t cases = 0;
  for (const auto& r : results_) {
    cases += r.cases;
    out << (r.passed() ? "PASS " : "FAIL ") << r.scope << "  " << r.name << "  [" << r.cases << " cases";
    if (!r.passed()) out << ", " << r.failures << " failed";
    out << "]";
    if (!r.passed() && !r.detail.empty()) out << "  first: " << r.detail;
    out << "\n";
  }
  out << (passed() ? "OK" : "FAILED") << ": " << results_.size() << " checks, " << failures() << " failing, "
      << cases << " cases\n";
}

std::vector<Signature> signatures_up_to(int max_dim) {
  std::vector<Signature> out;
  for (int n = 1; n <= max_dim; ++n)
    for (int p = 0; p <= n; ++p) out.emplace_back(p, n - p);
  return out;
}

namespace {

Multivector mono(const Signature& sig, Blade b) { return Multivector(sig, b); }
Multivector mono(const Signature& sig, SignedBlade b) { return Multivector(sig, b); }

std::string show(const Multivector& u) { return to_string(u); }

Multivector sum(const std::vector<Idempotent>& fs, const Signature& sig) {
  Multivector s(sig);
  for (const auto& f : fs) s += f.value;
  return s;
}

bool pairwise_annihilating(const std::vector<Idempotent>& fs) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < fs.size(); ++j) {
      Multivector p = fs[i].value * fs[j].value;
      if (i == j ? !(p == fs[i].value) : !p.is_zero()) return false;
    }
  return true;
}

// random element of G^eps: signed blades and rotors 3/5 + 4/5 e_I with e_I^2 = -1
Multivector random_g_epsilon(const Signature& sig, Sampler& rng) {
  Multivector g(sig, Rational(1));
  for (int step = 0; step < 3; ++step) {
    if (rng.coin()) {
      g = mono(sig, rng.group_element(sig)) * g;
      continue;
    }
    SignedBlade b = rng.group_element(sig);
    if (blade_square(b.blade, sig) > 0) continue;
    Multivector r(sig, make_rational(3, 5));
    r.add_term(b.blade, make_rational(4 * b.sign, 5));
    g = r * g;
  }
  return g;
}

// K element with random coordinates
KElement random_k(const std::shared_ptr<const KBasis>& kb, Sampler& rng) {
  std::vector<Rational> c;
  for (std::size_t a = 0; a < kb->dim(); ++a) c.push_back(rng.dyadic());
  return KElement(kb, c);
}

// sum_i m_i f lambda_i with random lambda
Multivector random_spinor(const SpinorBasis& s, Sampler& rng) {
  std::vector<KElement> coords;
  for (std::size_t i = 0; i < s.size(); ++i) coords.push_back(random_k(s.kbasis(), rng));
  return assemble_spinor(coords, s);
}

// u drawn dense for small n and sparse beyond
Multivector sample_element(const Signature& sig, Sampler& rng, const VerifyOptions& opt) {
  return sig.n() <= opt.exhaustive_dim ? rng.multivector(sig) : rng.sparse(sig, 12);
}

RepMatrix diagonal_unit(const RepMatrix& like, bool main, bool hat) {
  RepMatrix m = like.zero_like();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (main) m.at(i, i) = KElement::one(m.at(i, i).basis_ptr());
    if (hat && m.paired()) m.hat(i, i) = KElement::one(m.hat(i, i).basis_ptr());
  }
  return m;
}

// ---- transposition -------------------------------------------------------

void props_transposition(const Idempotent& f, const std::string& scope, Sampler& rng, const VerifyOptions& opt,
                         Report& rep) {
  const Signature& sig = f.signature();
  const VeeGroup group(sig);
  const Multivector one(sig, Rational(1));

  auto& inv = rep.add(scope, "T(g) is the inverse of every vee group element");
  for (SignedBlade g : group.elements()) {
    Multivector tg = transposition(mono(sig, g));
    inv.expect(mono(sig, g) * tg == one && tg * mono(sig, g) == one, format_blade(g, sig.n()));
  }

  auto& sq = rep.add(scope, "T(e_I) = e_I or -e_I according to the sign of e_I^2");
  for (Blade b : blade_order(sig))
    sq.expect(transposition(mono(sig, b)) == Multivector(sig, b, blade_square(b, sig)), format_blade(b, sig.n()));

  auto& anti = rep.add(scope, "T is an involutive anti-automorphism");
  for (std::size_t t = 0; t < opt.samples; ++t) {
    Multivector u = sample_element(sig, rng, opt), v = sample_element(sig, rng, opt);
    anti.expect(transposition(u * v) == transposition(v) * transposition(u) && transposition(transposition(u)) == u,
                show(u));
  }

  if (sig.q == 0 || sig.p == 0) {
    auto& red = rep.add(scope, sig.q == 0 ? "T equals reversion" : "T equals Clifford conjugation");
    for (Blade b : blade_order(sig)) {
      Multivector e = mono(sig, b);
      red.expect(transposition(e) == (sig.q == 0 ? reversion(e) : conjugation(e)), format_blade(b, sig.n()));
    }
    auto& vec = rep.add(scope, "v T(v) = T(v) v = sum v_i^2 and v^-1 = T(v)/(v T(v))");
    for (std::size_t t = 0; t < opt.samples; ++t) {
      Multivector v = rng.vector(sig);
      Rational norm = 0;
      for (const auto& [b, c] : v.terms()) norm += c * c;
      Multivector tv = transposition(v);
      bool ok = v * tv == Multivector(sig, norm) && tv * v == Multivector(sig, norm);
      if (ok && !is_zero(norm)) ok = v * (tv * (Rational(1) / norm)) == one;
      vec.expect(ok, show(v));
    }
  }

  auto& fix = rep.add(scope, "T fixes every primitive idempotent of the family");
  for (const auto& g : idempotent_family(f.factors)) fix.expect(transposition(g.value) == g.value, to_string(g));

  if (sig.n() <= opt.exhaustive_dim) {
    auto& lr = rep.add(scope, "[L_T(u)] = [L_u]^T");
    for (std::size_t t = 0; t < opt.samples; ++t) {
      Multivector u = rng.multivector(sig);
      lr.expect(left_regular_matrix(transposition(u)) == left_regular_matrix(u).transpose(), show(u));
    }
  }
}

// ---- idempotents, stabilizer, orbits --------------------------------------

void props_group(const Idempotent& f, const std::string& scope, const VerifyOptions& opt, Report& rep) {
  const Signature& sig = f.signature();
  const AlgebraStructure st = classify(sig);
  const VeeGroup group(sig);
  const Multivector one(sig, Rational(1));

  auto& idem = rep.add(scope, "f is idempotent with k = q - r_{q-p} factors");
  idem.expect(is_idempotent(f.value) && static_cast<int>(f.factors.size()) == st.k, to_string(f));
  if (sig.n() <= opt.exhaustive_dim) {
    auto& prim = rep.add(scope, "f is primitive (dim Cl f = 2^(n-k))");
    prim.expect(is_primitive(f.value), to_string(f));
  }

  auto family = idempotent_family(f.factors);
  auto& fam = rep.add(scope, "the 2^k sign patterns are pairwise annihilating and sum to 1");
  fam.expect(pairwise_annihilating(family) && sum(family, sig) == one, to_string(f));

  const Subgroup stab = stabilizer(f);
  auto& ord = rep.add(scope, "stabilizer order is 2^(1+p+r) simple / 2^(2+p+r) semisimple");
  ord.expect(stab.size() == expected_stabilizer_order(sig), std::to_string(stab.size()));

  rep.add(scope, "stabilizer is normal").expect(is_normal(stab));

  auto& pw = rep.add(scope, "g stabilizes f iff g commutes with every factor");
  for (SignedBlade g : group.elements()) {
    bool commutes = std::all_of(f.factors.factors().begin(), f.factors.factors().end(),
                                [&](Blade t) { return blades_commute(g.blade, t); });
    pw.expect(stab.contains(g) == commutes, format_blade(g, sig.n()));
  }
  rep.add(scope, "stabilizer fixes every factor pointwise").expect(pointwise_stabilizes(stab, f.factors));

  auto& fp = rep.add(scope, "stabilizer structure is certified");
  GroupFingerprint print = fingerprint(stab);
  fp.expect(print.kind != GroupKind::Unresolved && label_order(print.label) == stab.size(), print.label);

  auto& comm = rep.add(scope, "commutator subgroup is {1,-1}");
  comm.expect(commutator_subgroup(group).size() == (sig.n() >= 2 ? 2u : 1u));

  const auto orb = orbit(f);
  const std::size_t expected_orbit = st.simple ? (std::size_t{1} << st.k) : (std::size_t{1} << (st.k - 1));
  auto& os = rep.add(scope, st.simple ? "|O(f)| = 2^k" : "|O(f)| = 2^(k-1)");
  os.expect(orb.size() == expected_orbit, std::to_string(orb.size()));
  rep.add(scope, "|O(f)| |G(f)| = 2^(n+1)").expect(orb.size() * stab.size() == group.order());

  auto& share = rep.add(scope, "orbit members share the stabilizer");
  for (const auto& g : orb) share.expect(stabilizer(g) == stab, to_string(g));

  auto& ann = rep.add(scope, st.simple ? "orbit is pairwise annihilating and sums to 1"
                                       : "orbit is pairwise annihilating and sums to J+ or J-");
  if (st.simple) {
    ann.expect(pairwise_annihilating(orb) && sum(orb, sig) == one);
  } else {
    auto [jp, jm] = central_idempotents(sig);
    Multivector s = sum(orb, sig);
    ann.expect(pairwise_annihilating(orb) && (s == jp || s == jm), show(s));
  }

  if (!st.simple) {
    const Idempotent fh = grade_involution(f);
    const auto orb_hat = orbit(fh);
    rep.add(scope, "G(f) = G(f^)").expect(stabilizer(fh) == stab);

    auto& sep = rep.add(scope, "no g in G maps O(f) into O(f^)");
    for (SignedBlade g : group.elements())
      for (const auto& h : orb) {
        Multivector c = conjugate(g, h.value);
        bool hit = std::any_of(orb_hat.begin(), orb_hat.end(), [&](const Idempotent& x) { return x.value == c; });
        sep.expect(!hit, format_blade(g, sig.n()) + " on " + to_string(h));
      }

    auto [jp, jm] = central_idempotents(sig);
    Multivector s = sum(orb, sig), sh = sum(orb_hat, sig);
    rep.add(scope, "O(f) and O(f^) sum to complementary central idempotents")
        .expect((s == jp && sh == jm) || (s == jm && sh == jp));
  }
}

// ---- spinor basis identities ---------------------------------------------

void props_spinor(const Idempotent& f, const std::string& scope, Sampler& rng, const VerifyOptions& opt,
                  Report& rep) {
  const Signature& sig = f.signature();
  const VeeGroup group(sig);
  const Representation rp = Representation::build(f);
  const SpinorBasis& s = rp.basis();
  const Idempotent& f1 = s.idempotent();
  const auto& reps = s.transversal().reps;
  const std::size_t n = s.size();
  const bool exhaustive = sig.n() <= opt.exhaustive_dim;

  auto& wd = rep.add(scope, "g f = f implies g in G(f)");
  for (SignedBlade g : group.elements()) {
    bool fixes = mono(sig, g) * f1.value == f1.value;
    wd.expect(!fixes || s.stabilizer().contains(g), format_blade(g, sig.n()));
  }
  if (exhaustive) {
    auto& pairs = rep.add(scope, "m f = m' f implies m^-1 m' in G(f)");
    for (Blade a : blade_order(sig)) {
      Multivector af = mono(sig, a) * f1.value;
      for (Blade b : blade_order(sig)) {
        if (!(af == mono(sig, b) * f1.value)) {
          pairs.expect(true);
          continue;
        }
        SignedBlade g = blade_mul(blade_inverse(SignedBlade(a), sig), SignedBlade(b), sig);
        pairs.expect(s.stabilizer().contains(g), format_blade(a, sig.n()) + "," + format_blade(b, sig.n()));
      }
    }
  }

  StructConstants c(s);
  const auto& family = s.family();

  auto& prod = rep.add(scope, "(m_l f_k)(m_i f_1) = 0 for i != k, c m_j f_1 for i = k");
  {
    auto check = [&](std::size_t l, std::size_t k, std::size_t i) {
      Multivector lhs = (mono(sig, reps[l]) * family[k].value) * s.elements()[i];
      Multivector rhs = i == k ? s.elements()[c.target(l, k)] * Rational(c.sign(l, k)) : Multivector(sig);
      prod.expect(lhs == rhs, std::to_string(l) + "," + std::to_string(k) + "," + std::to_string(i));
    };
    if (exhaustive) {
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t i = 0; i < n; ++i) check(l, k, i);
    } else {
      for (std::size_t t = 0; t < opt.samples * 4; ++t) check(rng.below(n), rng.below(n), rng.below(n));
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k) check(l, k, k);
    }
  }

  auto& cm = rep.add(scope, "c^j_{k,l} c^j_{l,k} = [m_k, m_l] = [m_k^-1, m_l^-1]");
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      SignedBlade ik = blade_inverse(SignedBlade(reps[k]), sig), il = blade_inverse(SignedBlade(reps[l]), sig);
      int commutator = commutation_sign(reps[k], reps[l]);
      cm.expect(c.target(k, l) == c.target(l, k) && c.sign(k, l) * c.sign(l, k) == commutator &&
                    commutation_sign(ik.blade, il.blade) == commutator,
                std::to_string(k) + "," + std::to_string(l));
    }

  auto& alpha = rep.add(scope, "c^k_{i,j} = alpha_i c^j_{i,k} over all stored triples");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t j = c.target(i, k);
      int alpha_i = s.transversal().squares[i];
      alpha.expect(c.target(i, j) == k && c.sign(i, j) == alpha_i * c.sign(i, k),
                   std::to_string(i) + "," + std::to_string(k));
    }

  const auto& kb = s.kbasis();
  auto& lam = rep.add(scope, "m_k^-1 b m_k = m_k b m_k^-1 on K");
  for (std::size_t k = 0; k < n; ++k)
    for (Blade b : kb->monomials()) {
      SignedBlade m(reps[k]);
      SignedBlade mi = blade_inverse(m, sig);
      Multivector left = mi * (mono(sig, b) * m), right = m * (mono(sig, b) * mi);
      lam.expect(left == right, format_blade(reps[k], sig.n()) + " " + format_blade(b, sig.n()));
    }

  if (kb->ring() == RingType::Quaternion) {
    auto& qc = rep.add(scope, "no group element conjugates all three quaternion units");
    for (SignedBlade g : group.elements()) {
      int flips = 0;
      for (std::size_t a = 1; a < kb->dim(); ++a)
        if (!blades_commute(g.blade, kb->monomials()[a])) ++flips;
      qc.expect(flips != 3, format_blade(g, sig.n()));
    }
  }

  // coset action
  auto& perm = rep.add(scope, "G permutes the spinor basis up to K units; kernel lies in G(f)");
  std::vector<CosetAction> actions(group.order());
  for (SignedBlade g : group.elements()) {
    CosetAction a = coset_permutation(g, s.transversal(), f1, s.stabilizer());
    std::vector<std::size_t> sorted = a.perm;
    std::sort(sorted.begin(), sorted.end());
    bool bijective = true;
    for (std::size_t i = 0; i < n; ++i) bijective = bijective && sorted[i] == i;
    bool trivial = true;
    for (std::size_t i = 0; i < n; ++i) trivial = trivial && a.perm[i] == i;
    perm.expect(bijective && (!trivial || s.stabilizer().contains(g)), format_blade(g, sig.n()));
    actions[VeeGroup::index(g)] = std::move(a);
  }

  auto& signed_perm = rep.add(scope, "transversal elements act by signed permutations m_j m_i f = +- m_k f");
  for (std::size_t j = 0; j < n; ++j) {
    const CosetAction& a = actions[VeeGroup::index(SignedBlade(reps[j]))];
    for (std::size_t i = 0; i < n; ++i) {
      Multivector lhs = mono(sig, reps[j]) * s.elements()[i];
      signed_perm.expect(a.residues[i] == Blade{} && lhs == s.elements()[a.perm[i]] * Rational(a.signs[i]),
                         std::to_string(j) + "," + std::to_string(i));
    }
  }

  auto& hom = rep.add(scope, "the coset action is a homomorphism");
  {
    auto check = [&](SignedBlade g, SignedBlade h) {
      const CosetAction& ag = actions[VeeGroup::index(g)];
      const CosetAction& ah = actions[VeeGroup::index(h)];
      const CosetAction& agh = actions[VeeGroup::index(blade_mul(g, h, sig))];
      bool ok = true;
      for (std::size_t i = 0; i < n; ++i) ok = ok && agh.perm[i] == ag.perm[ah.perm[i]];
      hom.expect(ok, format_blade(g, sig.n()) + "*" + format_blade(h, sig.n()));
    };
    for (std::size_t j = 0; j < n; ++j)
      for (SignedBlade h : group.elements()) check(SignedBlade(reps[j]), h);
    for (std::size_t t = 0; t < opt.samples * 4; ++t) check(rng.group_element(sig), rng.group_element(sig));
  }

  // the representation
  auto& id = rep.add(scope, rp.simple() ? "[1] = I and [f] = E_11" : "[1] = (I, I) and [J+] = (I, 0)");
  {
    RepMatrix r1 = rp(Multivector(sig, Rational(1)));
    id.expect(r1 == diagonal_unit(r1, true, true), "[1]");
    if (rp.simple()) {
      RepMatrix e11 = r1.zero_like();
      e11.at(0, 0) = KElement::one(r1.at(0, 0).basis_ptr());
      id.expect(rp(f1.value) == e11, "[f]");
    } else {
      id.expect(rp(central_idempotents(sig).first) == diagonal_unit(r1, true, false), "[J+]");
    }
  }

  auto& homr = rep.add(scope, "[u v] = [u][v]");
  for (std::size_t t = 0; t < opt.samples; ++t) {
    Multivector u = sample_element(sig, rng, opt), v = sample_element(sig, rng, opt);
    homr.expect(rp(u * v) == rp(u) * rp(v), show(u));
  }

  auto& adj = rep.add(scope, "[T(u)] = [u]^* (transpose / Hermitian / quaternionic Hermitian)");
  for (std::size_t t = 0; t < opt.samples; ++t) {
    Multivector u = rng.multivector(sig);
    adj.expect(rp(transposition(u)) == adjoint(rp(u)), show(u));
  }

  if (exhaustive) {
    auto& faithful = rep.add(scope, "the 2^n blade matrices are linearly independent");
    std::vector<Blade> blades = blade_order(sig);
    std::vector<RepMatrix> mats;
    for (Blade b : blades) mats.push_back(rp(mono(sig, b)));
    std::size_t width = 0;
    for (const auto& m : mats) width = m.size() * m.size() * s.kbasis()->dim() * (m.paired() ? 2 : 1);
    RationalMatrix big(blades.size(), width);
    for (std::size_t r = 0; r < mats.size(); ++r) {
      const RepMatrix& m = mats[r];
      std::size_t col = 0;
      for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = 0; b < m.size(); ++b) {
          for (std::size_t d = 0; d < m.at(a, b).dim(); ++d) big.at(r, col++) = m.at(a, b)[d];
          if (m.paired())
            for (std::size_t d = 0; d < m.hat(a, b).dim(); ++d) big.at(r, col++) = m.hat(a, b)[d];
        }
    }
    faithful.expect(big.rank() == blades.size(), std::to_string(big.rank()));
  }

  if (rp.simple()) {
    auto& col = rep.add(scope, "[psi_k] has column k only, entry c^j_{i,k} lambda_{i,k}");
    for (std::size_t t = 0; t < std::max<std::size_t>(1, opt.samples / 4); ++t) {
      std::vector<KElement> lambda;
      for (std::size_t i = 0; i < n; ++i) lambda.push_back(random_k(kb, rng));
      for (std::size_t k = 0; k < n; ++k) {
        // psi_k = sum m_i f_k lambda_i, lambda_i read as sum c_a b_a
        Multivector psi(sig);
        for (std::size_t i = 0; i < n; ++i) {
          Multivector l(sig);
          for (std::size_t a = 0; a < kb->dim(); ++a) l.add_term(kb->monomials()[a], lambda[i][a]);
          psi += mono(sig, reps[i]) * family[k].value * l;
        }
        RepMatrix expected = rp(psi).zero_like();
        for (std::size_t i = 0; i < n; ++i) {
          KElement e(kb);
          for (std::size_t a = 0; a < kb->dim(); ++a)
            e[a] = lambda[i][a] * commutation_sign(reps[k], kb->monomials()[a]) * c.sign(i, k);
          expected.at(c.target(i, k), k) += e;
        }
        col.expect(rp(psi) == expected, "k=" + std::to_string(k));
      }
    }
  }
}

// ---- inner products ------------------------------------------------------

void props_norms(const Idempotent& f, const std::string& scope, Sampler& rng, const VerifyOptions& opt,
                 Report& rep) {
  const Signature& sig = f.signature();
  const VeeGroup group(sig);
  const Representation rp = Representation::build(f);
  const SpinorBasis& s = rp.basis();
  const Multivector& fv = s.idempotent().value;

  auto& ink = rep.add(scope, "T(psi) phi lies in K and is sesquilinear");
  auto& real = rep.add(scope, "T(psi) psi lies in R f");
  for (std::size_t t = 0; t < opt.samples; ++t) {
    Multivector psi = random_spinor(s, rng), phi = random_spinor(s, rng);
    Multivector prod = transposition(psi) * phi;
    bool ok = in_division_ring(prod, *s.kbasis());
    KElement val = t_inner(psi, phi, s);
    ok = ok && to_multivector(val) == prod;
    Rational x = rng.dyadic(), y = rng.dyadic();
    ok = ok && t_inner(psi * x, phi * y, s) == val * (x * y);
    ink.expect(ok, show(psi));

    Multivector pp = transposition(psi) * psi;
    real.expect(pp == fv * pp.coefficient(Blade{}) * (Rational(1) / fv.coefficient(Blade{})), show(psi));
  }

  auto& ge = rep.add(scope, "G is contained in G^eps");
  for (SignedBlade g : group.elements()) ge.expect(in_G_epsilon(mono(sig, g)), format_blade(g, sig.n()));

  auto& inv = rep.add(scope, "T(g psi) g phi = T(psi) phi for sampled g in G^eps");
  for (std::size_t t = 0; t < opt.samples; ++t) {
    Multivector g = random_g_epsilon(sig, rng);
    Multivector psi = random_spinor(s, rng), phi = random_spinor(s, rng);
    inv.expect(in_G_epsilon(g) && t_inner(g * psi, g * phi, s) == t_inner(psi, phi, s), show(g));
  }

  if (sig.n() <= 5 && (sig.p == 0 || sig.q == 0)) {
    BetaKind kind = sig.q == 0 ? BetaKind::Plus : BetaKind::Minus;
    auto& eq = rep.add(scope, sig.q == 0 ? "T(psi) phi coincides with beta+" : "T(psi) phi coincides with beta-");
    auto w = find_witness(kind, s);
    eq.expect(w && t_inner_form(s) == beta_form(kind, *w, s), w ? show(w->s) : "no witness");
  }
}

}  // namespace

Report verify_props(const Idempotent& f, const VerifyOptions& opt) {
  Report rep;
  const Signature& sig = f.signature();
  const std::string scope = to_string(sig);
  Sampler rng(opt.seed * 1000003u + static_cast<std::uint64_t>(sig.p) * 101u + static_cast<std::uint64_t>(sig.q));
  props_transposition(f, scope, rng, opt, rep);
  props_group(f, scope, opt, rep);
  props_spinor(f, scope, rng, opt, rep);
  props_norms(f, scope, rng, opt, rep);
  return rep;
}

Report verify_props(const Signature& sig, const VerifyOptions& opt) {
  return verify_props(primitive_idempotent(sig), opt);
}

// ---- tables ----------------------------------------------------------------

Report verify_tables(const std::optional<Signature>& sig, bool search) {
  Report rep;
  for (const auto& e : table_catalog()) {
    if (sig && (sig->p != e.p || sig->q != e.q)) continue;
    Signature s(e.p, e.q);
    std::string scope = "table " + std::to_string(e.table) + " " + to_string(s);
    TableRow row = build_row(e, search);
    rep.add(scope, "stabilizer order").expect(row.stab_order == expected_stabilizer_order(s),
                                               std::to_string(row.stab_order));

    bool consistent = label_order(e.label) == row.stab_order;
    if (consistent)
      rep.add(scope, "structure label").expect(row.label == e.label, row.label + " vs " + e.label);
    else
      rep.add(scope, "structure label (printed label is a generator presentation)")
          .expect(row.presentation == e.label, row.presentation + " vs " + e.label);

    std::vector<int> got = row.gen_orders, want = e.orders;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    rep.add(scope, "generator orders").expect(got == want, format_orders(row.gen_orders));
  }
  return rep;
}

// ---- worked examples -----------------------------------------------------

namespace {

Idempotent idempotent_of(const Signature& sig, std::string_view factors) {
  FactorList fl = parse_factor_list(factors, sig);
  return primitive_idempotent(CommutingSet(sig, fl.blades), fl.signs);
}

std::string blades_text(const std::vector<Blade>& bs, int n) {
  std::string out;
  for (Blade b : bs) out += (out.empty() ? "" : ",") + format_blade(b, n);
  return out;
}

bool k_equals(const KElement& k, Rational re, Rational im = 0) {
  return k[0] == re && (k.dim() < 2 ? is_zero(im) : k[1] == im);
}

// u = u1 + u2 e1 + u3 e2 + u4 e3 + u5 e12 + u6 e13 + u7 e23 + u8 e123
Multivector cl30_element(const Signature& sig, const std::vector<Rational>& u) {
  Multivector m(sig);
  const char* names[] = {"1", "e1", "e2", "e3", "e12", "e13", "e23", "e123"};
  for (int i = 0; i < 8; ++i) m.add_term(parse_blade(names[i], sig), u[i]);
  return m;
}

void example_cl22(Report& rep, Sampler& rng) {
  const Signature sig(2, 2);
  const std::string scope = "Cl(2,2)";
  Idempotent f = idempotent_of(sig, "+e13,+e24");
  SpinorBasis s = SpinorBasis::build(f);
  rep.add(scope, "transversal is [1,e1,e2,e12]")
      .expect(blades_text(s.transversal().reps, 4) == "1,e1,e2,e12", blades_text(s.transversal().reps, 4));

  const std::vector<std::vector<int>> printed = {{1, 1, 1, -1}, {1, 1, 1, -1}, {1, -1, 1, 1}, {1, -1, 1, 1}};
  rep.add(scope, "structure constant matrix C").expect(structure_constants(s).matrix() == printed);

  auto& sum = rep.add(scope, "[Psi] = [psi_1] + ... + [psi_4] entry pattern");
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> p(4);
    for (auto& x : p) x = rng.dyadic();
    Multivector u(sig);
    for (std::size_t i = 0; i < 4; ++i) u.add_term(s.transversal().reps[i], p[i]);
    RepMatrix m = rep_matrix(u, s);
    // rows of the printed matrix as (index, sign)
    const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int sgn[4][4] = {{1, 1, 1, -1}, {1, 1, 1, -1}, {1, -1, 1, 1}, {1, -1, 1, 1}};
    bool ok = true;
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) ok = ok && k_equals(m.at(j, k), p[idx[j][k]] * sgn[j][k]);
    sum.expect(ok);
  }

  auto& perm = rep.add(scope, "e1 swaps f<->e1 f and e2 f<->e12 f with signs +");
  CosetAction a = coset_permutation(SignedBlade(parse_blade("e1", sig)), s.transversal(), f);
  perm.expect(a.perm == std::vector<std::size_t>{1, 0, 3, 2} && a.signs == std::vector<int>{1, 1, 1, 1});

  const std::size_t kd = 1, dim = 4;
  auto& t = rep.add(scope, "T(psi) phi = psi1 phi1 + ... + psi4 phi4");
  std::string tin = render(component(t_inner_form(s), 0), kd);
  t.expect(tin == render(parse_bilinear("psi1*phi1+psi2*phi2+psi3*phi3+psi4*phi4", kd, dim), kd), tin);

  PureSpinorWitness w{Multivector(sig, parse_blade("e12", sig))};
  std::string bp = render(component(beta_form(BetaKind::Plus, w, s), 0), kd);
  std::string bm = render(component(beta_form(BetaKind::Minus, w, s), 0), kd);
  rep.add(scope, "beta+ with s = e12")
      .expect(bp == render(parse_bilinear("-psi1*phi4+psi3*phi2+psi4*phi1-psi2*phi3", kd, dim), kd), bp);
  rep.add(scope, "beta- with s = e12")
      .expect(bm == render(parse_bilinear("-psi1*phi4-psi3*phi2+psi4*phi1+psi2*phi3", kd, dim), kd), bm);
  rep.add(scope, "T(psi) phi differs from beta+ and beta-").expect(tin != bp && tin != bm);

  auto wp = find_witness(BetaKind::Plus, s);
  rep.add(scope, "searched pure spinor witness is e12")
      .expect(wp && wp->s == w.s, wp ? to_string(wp->s) : "none");
}

void example_cl30(Report& rep, Sampler& rng) {
  const Signature sig(3, 0);
  const std::string scope = "Cl(3,0)";
  Idempotent f = idempotent_of(sig, "+e1");
  SpinorBasis s = SpinorBasis::build(f);
  const auto& kb = s.kbasis();
  rep.add(scope, "K = span{f, e23 f}, transversal [1,e2]")
      .expect(blades_text(kb->monomials(), 3) == "1,e23" && blades_text(s.transversal().reps, 3) == "1,e2");
  rep.add(scope, "f_2 = e2 f e2^-1 = 1/2(1-e1)").expect(to_string(s.family()[1]) == "1/2(1-e1)",
                                                        to_string(s.family()[1]));

  auto unit = [&](std::size_t j, std::size_t k) {
    RepMatrix m = rep_matrix(Multivector(sig, Rational(1)), s).zero_like();
    m.at(j, k) = KElement::one(kb);
    return m;
  };
  Multivector e2(sig, parse_blade("e2", sig));
  auto& units = rep.add(scope, "[f_1], [e2 f_1], [f_2], [e2 f_2] are matrix units");
  units.expect(rep_matrix(s.family()[0].value, s) == unit(0, 0), "[f_1]");
  units.expect(rep_matrix(e2 * s.family()[0].value, s) == unit(1, 0), "[e2 f_1]");
  units.expect(rep_matrix(s.family()[1].value, s) == unit(1, 1), "[f_2]");
  units.expect(rep_matrix(e2 * s.family()[1].value, s) == unit(0, 1), "[e2 f_2]");

  auto& gen = rep.add(scope, "generic [u] and [T(u)] match the printed entries");
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> u(8);
    for (auto& x : u) x = rng.dyadic();
    Multivector el = cl30_element(sig, u);
    RepMatrix m = rep_matrix(el, s), mt = rep_matrix(transposition(el), s);
    // u_1..u_8 -> u[0..7]
    bool ok = k_equals(m.at(0, 0), u[0] + u[1], u[7] + u[6]) && k_equals(m.at(0, 1), u[4] + u[2], -(u[3] + u[5])) &&
              k_equals(m.at(1, 0), -u[4] + u[2], u[3] - u[5]) && k_equals(m.at(1, 1), u[0] - u[1], u[7] - u[6]);
    bool okt = k_equals(mt.at(0, 0), u[0] + u[1], -(u[7] + u[6])) &&
               k_equals(mt.at(0, 1), -u[4] + u[2], -(u[3] - u[5])) &&
               k_equals(mt.at(1, 0), u[4] + u[2], u[3] + u[5]) && k_equals(mt.at(1, 1), u[0] - u[1], -(u[7] - u[6]));
    gen.expect(ok && okt);
  }

  auto& psi = rep.add(scope, "[psi_1] + [psi_2] with conjugated components");
  for (int t = 0; t < 20; ++t) {
    Rational p11 = rng.dyadic(), p12 = rng.dyadic(), p21 = rng.dyadic(), p22 = rng.dyadic();
    Multivector total(sig);
    for (std::size_t k = 0; k < 2; ++k) {
      // psi_k = f_k lambda_1 + e2 f_k lambda_2, the same lambdas for every k
      Multivector l1(sig, Rational(p11)), l2(sig, Rational(p21));
      l1.add_term(parse_blade("e23", sig), p12);
      l2.add_term(parse_blade("e23", sig), p22);
      total += s.family()[k].value * l1 + e2 * s.family()[k].value * l2;
    }
    RepMatrix m = rep_matrix(total, s);
    psi.expect(k_equals(m.at(0, 0), p11, p12) && k_equals(m.at(0, 1), p21, -p22) && k_equals(m.at(1, 0), p21, p22) &&
               k_equals(m.at(1, 1), p11, -p12));
  }

  const std::size_t kd = 2, dim = 4;
  std::string t0 = render(component(t_inner_form(s), 0), kd), t1 = render(component(t_inner_form(s), 1), kd);
  rep.add(scope, "T(psi) phi printed formula")
      .expect(t0 == render(parse_bilinear("psi11*phi11+psi22*phi22+psi21*phi21+psi12*phi12", kd, dim), kd) &&
                  t1 == render(parse_bilinear("-psi22*phi21-psi12*phi11+psi21*phi22+psi11*phi12", kd, dim), kd),
              t0 + " | " + t1);

  auto wp = find_witness(BetaKind::Plus, s);
  rep.add(scope, "T(psi) phi coincides with beta+").expect(wp && t_inner_form(s) == beta_form(BetaKind::Plus, *wp, s));

  PureSpinorWitness w{Multivector(sig, parse_blade("e2", sig))};
  BilinearForm bm = beta_form(BetaKind::Minus, w, s);
  std::string b0 = render(component(bm, 0), kd), b1 = render(component(bm, 1), kd);
  rep.add(scope, "beta- with s = e2 printed formula")
      .expect(b0 == render(parse_bilinear("psi22*phi12-psi21*phi11-psi12*phi22+psi11*phi21", kd, dim), kd) &&
                  b1 == render(parse_bilinear("-psi22*phi11-psi21*phi12+psi12*phi21+psi11*phi22", kd, dim), kd),
              b0 + " | " + b1);
  rep.add(scope, "T(psi) phi differs from beta-").expect(!(t_inner_form(s) == bm));
}

void example_cl24(Report& rep, Sampler& rng) {
  const Signature sig(2, 4);
  const std::string scope = "Cl(2,4)";
  Idempotent f = idempotent_of(sig, "+e15,+e26");
  SpinorBasis s = SpinorBasis::build(f);
  rep.add(scope, "Mat(4,H)").expect(describe(classify(sig)) == "Mat(4,H)", describe(classify(sig)));
  rep.add(scope, "K spanned by 1,e3,e4,e34; transversal [1,e1,e2,e12]")
      .expect(blades_text(s.kbasis()->monomials(), 6) == "1,e3,e4,e34" &&
                  blades_text(s.transversal().reps, 6) == "1,e1,e2,e12",
              blades_text(s.kbasis()->monomials(), 6) + " / " + blades_text(s.transversal().reps, 6));

  auto& col = rep.add(scope, "spinor in Cl f_k fills column k; [T(psi)] is its quaternionic adjoint");
  for (std::size_t k = 0; k < s.size(); ++k) {
    Multivector psi = rng.multivector(sig) * s.family()[k].value;
    RepMatrix m = rep_matrix(psi, s);
    bool ok = true;
    for (std::size_t j = 0; j < s.size(); ++j)
      for (std::size_t c = 0; c < s.size(); ++c) ok = ok && (c == k || m.at(j, c).is_zero());
    col.expect(ok && rep_matrix(transposition(psi), s) == adjoint(m), "k=" + std::to_string(k));
  }
}

void example_cl21(Report& rep, Sampler& rng) {
  const Signature sig(2, 1);
  const std::string scope = "Cl(2,1)";
  Idempotent f = idempotent_of(sig, "+e1,+e23");
  SpinorBasis s = SpinorBasis::build(f);
  std::vector<std::string> members;
  for (SignedBlade g : s.stabilizer().members()) members.push_back(format_blade(g, 3));
  std::string got;
  for (const auto& m : members) got += (got.empty() ? "" : ",") + m;
  rep.add(scope, "G(f) = {+-1, +-e1, +-e23, +-e123}")
      .expect(got == "+1,-1,+e1,-e1,+e23,-e23,+e123,-e123", got);
  rep.add(scope, "transversal [1,e2], f_2 = 1/4(1-e1)(1-e23)")
      .expect(blades_text(s.transversal().reps, 3) == "1,e2" && to_string(s.family()[1]) == "1/4(1-e1)(1-e23)",
              to_string(s.family()[1]));

  const auto orb = orbit(f), orb_hat = orbit(grade_involution(f));
  rep.add(scope, "two orbits of size 2").expect(orb.size() == 2 && orb_hat.size() == 2);

  DoubleSpinorBasis d = DoubleSpinorBasis::build(f);
  auto& pair = rep.add(scope, "[psi, psi^] and [T(psi), T(psi^)] printed pair matrices");
  for (int t = 0; t < 20; ++t) {
    Rational p1 = rng.dyadic(), p2 = rng.dyadic();
    Multivector psi = f.value * p1 + Multivector(sig, parse_blade("e2", sig)) * f.value * p2;
    // the pair [psi, psi^] is the image of psi + psi^: psi acts on S only, psi^ on S^ only
    Multivector both = psi + grade_involution(psi);
    RepMatrix m = semisimple_rep_matrix(both, d), mt = semisimple_rep_matrix(transposition(both), d);
    auto entry = [](const RepMatrix& x, std::size_t j, std::size_t k, Rational a, Rational b) {
      return k_equals(x.at(j, k), a) && k_equals(x.hat(j, k), b);
    };
    bool ok = entry(m, 0, 0, p1, p1) && entry(m, 0, 1, 0, 0) && entry(m, 1, 0, p2, -p2) && entry(m, 1, 1, 0, 0);
    bool okt = entry(mt, 0, 0, p1, p1) && entry(mt, 0, 1, p2, -p2) && entry(mt, 1, 0, 0, 0) && entry(mt, 1, 1, 0, 0);
    pair.expect(ok && okt, to_string(psi));
  }

  const SpinorBasis& s1 = d.first();
  std::string tin = render(component(t_inner_form(s1), 0), 1);
  rep.add(scope, "T(psi) phi = psi1 phi1 + psi2 phi2")
      .expect(tin == render(parse_bilinear("psi1*phi1+psi2*phi2", 1, 2), 1), tin);
}

}  // namespace

Report verify_examples(const std::optional<Signature>& sig, const VerifyOptions& opt) {
  Report rep;
  Sampler rng(opt.seed * 7919u + 17u);
  auto want = [&](int p, int q) { return !sig || (sig->p == p && sig->q == q); };
  if (want(2, 2)) example_cl22(rep, rng);
  if (want(3, 0)) example_cl30(rep, rng);
  if (want(2, 4)) example_cl24(rep, rng);
  if (want(2, 1)) example_cl21(rep, rng);
  return rep;
}

}  // namespace cliffrep::cli
