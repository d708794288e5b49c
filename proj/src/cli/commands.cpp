#include "cliffrep/cli/commands.hpp"

#include "cliffrep/cli/expression.hpp"
#include "cliffrep/cli/verify.hpp"
#include "cliffrep/rep_matrix.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>

namespace cliffrep::cli {

int cmd_tables(std::ostream& out, int table, Format fmt, bool search) {
  std::vector<TableRow> rows;
  for (const auto& e : table_catalog())
    if (table == 0 || e.table == table) rows.push_back(build_row(e, search));
  render(out, rows, fmt);
  return kSuccess;
}

namespace {

using Grid = std::vector<std::vector<std::string>>;

// (p - q) mod 8 decides the matrix conjugation realised by T
std::string relation_name(const Signature& sig) {
  int r = ((sig.p - sig.q) % 8 + 8) % 8;
  if (r == 1 || r == 5) return "pairwise " + std::string(r == 1 ? "transpose" : "quaternionic Hermitian conjugate");
  if (r == 0 || r == 2) return "transpose";
  if (r == 3 || r == 7) return "Hermitian complex conjugate";
  return "Hermitian quaternionic conjugate";
}

std::string entry_text(const RepMatrix& m, std::size_t j, std::size_t k) {
  if (!m.paired()) return to_string(m.at(j, k));
  return "[" + to_string(m.at(j, k)) + ", " + to_string(m.hat(j, k)) + "]";
}

Grid numeric_grid(const RepMatrix& m) {
  Grid g(m.size(), std::vector<std::string>(m.size()));
  for (std::size_t j = 0; j < m.size(); ++j)
    for (std::size_t k = 0; k < m.size(); ++k) g[j][k] = entry_text(m, j, k);
  return g;
}

// linear form sum c_i u_{i+1}
std::string linear_form(const std::vector<Rational>& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational& c = coeffs[i];
    if (is_zero(c)) continue;
    if (sgn(c) < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (abs(c) != 1) out += to_string(Rational(abs(c))) + "*";
    out += "u" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

// entry of the generic matrix: components over the K monomials
std::string symbolic_entry(const std::vector<RepMatrix>& mats, std::size_t j, std::size_t k, bool hat, int n) {
  const KElement& probe = hat ? mats.front().hat(j, k) : mats.front().at(j, k);
  const KBasis& kb = probe.basis();
  std::string out;
  for (std::size_t a = 0; a < kb.dim(); ++a) {
    std::vector<Rational> coeffs;
    for (const auto& m : mats) coeffs.push_back((hat ? m.hat(j, k) : m.at(j, k))[a]);
    std::string form = linear_form(coeffs);
    if (form == "0") continue;
    if (!out.empty()) out += " + ";
    if (kb.dim() == 1)
      out += form;
    else
      out += "(" + form + ")" + (a == 0 ? "" : "*" + format_blade(kb.monomials()[a], n));
  }
  return out.empty() ? "0" : out;
}

Grid symbolic_grid(const std::vector<RepMatrix>& mats, int n) {
  std::size_t size = mats.front().size();
  bool paired = mats.front().paired();
  Grid g(size, std::vector<std::string>(size));
  for (std::size_t j = 0; j < size; ++j)
    for (std::size_t k = 0; k < size; ++k) {
      std::string e = symbolic_entry(mats, j, k, false, n);
      if (paired) e = "[" + e + ", " + symbolic_entry(mats, j, k, true, n) + "]";
      g[j][k] = e;
    }
  return g;
}

std::vector<std::string> grid_lines(const Grid& g) {
  std::size_t cols = g.empty() ? 0 : g.front().size();
  std::vector<std::size_t> width(cols, 0);
  for (const auto& row : g)
    for (std::size_t k = 0; k < cols; ++k) width[k] = std::max(width[k], row[k].size());
  std::vector<std::string> lines;
  for (const auto& row : g) {
    std::string line = "| ";
    for (std::size_t k = 0; k < cols; ++k) {
      line += row[k] + std::string(width[k] - row[k].size(), ' ');
      line += k + 1 < cols ? "  " : " |";
    }
    lines.push_back(line);
  }
  return lines;
}

std::string join_blades(const std::vector<Blade>& bs, int n, const std::string& suffix) {
  std::string out;
  for (Blade b : bs) {
    if (!out.empty()) out += ", ";
    out += b.is_scalar() ? suffix.substr(1) : format_blade(b, n) + suffix;
  }
  return out;
}

}  // namespace

int cmd_rep(std::ostream& out, const Signature& sig, const std::string& expression, const RepOptions& opt) {
  Idempotent f = primitive_idempotent(sig);
  if (!opt.idempotent.empty()) {
    FactorList fl = parse_factor_list(opt.idempotent, sig);
    f = primitive_idempotent(CommutingSet(sig, fl.blades), fl.signs);
  }
  const bool generic = expression == "generic";
  Multivector u(sig);
  if (!generic) u = parse_expression(expression, sig);

  Representation rp = Representation::build(f);
  const SpinorBasis& s = rp.basis();
  const int n = sig.n();

  Grid gu, gt;
  bool holds = true;
  if (generic) {
    std::vector<RepMatrix> mu, mt;
    for (Blade b : blade_order(sig)) {
      Multivector e(sig, b);
      mu.push_back(rp(e));
      mt.push_back(rp(transposition(e)));
      holds = holds && mt.back() == adjoint(mu.back());
    }
    gu = symbolic_grid(mu, n);
    gt = symbolic_grid(mt, n);
  } else {
    RepMatrix a = rp(u), b = rp(transposition(u));
    holds = b == adjoint(a);
    gu = numeric_grid(a);
    gt = numeric_grid(b);
  }

  const std::string relation = relation_name(sig);
  const Idempotent& f1 = s.idempotent();
  if (opt.format == Format::Json) {
    nlohmann::json j;
    j["signature"] = to_string(sig);
    j["idempotent"] = factor_list(f1);
    j["division_ring"] = to_string(s.kbasis()->ring());
    std::vector<std::string> kb, tr;
    for (Blade b : s.kbasis()->monomials()) kb.push_back(format_blade(b, n));
    for (Blade b : s.transversal().reps) tr.push_back(format_blade(b, n));
    j["k_basis"] = kb;
    j["transversal"] = tr;
    j["element"] = generic ? std::string("generic") : to_string(u);
    j["u"] = gu;
    j["T(u)"] = gt;
    j["relation"] = relation;
    j["holds"] = holds;
    out << j.dump(2) << "\n";
  } else if (opt.format == Format::Csv) {
    out << "matrix,row,col,entry\n";
    auto dump = [&](const char* name, const Grid& g) {
      for (std::size_t r = 0; r < g.size(); ++r)
        for (std::size_t c = 0; c < g[r].size(); ++c)
          out << name << "," << r + 1 << "," << c + 1 << ",\"" << g[r][c] << "\"\n";
    };
    dump("u", gu);
    dump("T(u)", gt);
  } else {
    out << to_string(sig) << "  " << describe(classify(sig)) << "\n";
    out << "f = " << to_string(f1) << "\n";
    out << "K = span{" << join_blades(s.kbasis()->monomials(), n, " f") << "}\n";
    out << "S = span_K{" << join_blades(s.transversal().reps, n, " f") << "}\n";
    if (!generic) {
      out << "u = " << to_string(u) << "\n";
    } else {
      out << "u = ";
      auto bl = blade_order(sig);
      for (std::size_t i = 0; i < bl.size(); ++i)
        out << (i ? " + " : "") << "u" << i + 1 << (bl[i].is_scalar() ? "" : "*" + format_blade(bl[i], n));
      out << "\n";
    }
    auto lu = grid_lines(gu), lt = grid_lines(gt);
    std::size_t w = 0;
    for (const auto& l : lu) w = std::max(w, l.size());
    w = std::max<std::size_t>(w, 3);
    out << "[u]" << std::string(w - 3 + 4, ' ') << "[T(u)]\n";
    for (std::size_t r = 0; r < lu.size(); ++r) out << lu[r] << std::string(w - lu[r].size() + 4, ' ') << lt[r] << "\n";
    out << "[T(u)] = " << relation << " of [u]: " << (holds ? "holds" : "FAILS") << "\n";
  }
  return holds ? kSuccess : kVerificationFailed;
}

int cmd_verify(std::ostream& out, const VerifyCommand& cmd) {
  VerifyOptions opt;
  opt.seed = cmd.seed;
  opt.samples = cmd.samples;
  Report rep;
  switch (cmd.suite) {
    case Suite::Props: {
      if (cmd.signature && !cmd.idempotent.empty()) {
        FactorList fl = parse_factor_list(cmd.idempotent, *cmd.signature);
        rep = verify_props(primitive_idempotent(CommutingSet(*cmd.signature, fl.blades), fl.signs), opt);
        break;
      }
      std::vector<Signature> sigs = cmd.signature ? std::vector<Signature>{*cmd.signature} : signatures_up_to(cmd.max_dim);
      for (const auto& sig : sigs) {
        if (sig.n() > cmd.max_dim) continue;
        rep.append(verify_props(sig, opt));
      }
      break;
    }
    case Suite::Tables:
      rep = verify_tables(cmd.signature, cmd.search);
      break;
    case Suite::Examples:
      rep = verify_examples(cmd.signature, opt);
      break;
  }
  rep.print(out);
  return rep.passed() ? kSuccess : kVerificationFailed;
}

}  // namespace cliffrep::cli
