#include "cliffrep/cli/tables.hpp"

#include "cliffrep/errors.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace cliffrep::cli {

const std::vector<TableEntry>& table_catalog() {
  static const std::vector<TableEntry> rows = {
      // real simple
      {1, 1, 1, "12", {2, 2}, "(Z2)^2"},
      {1, 2, 0, "1", {2, 2}, "(Z2)^2"},
      {1, 2, 2, "13 24", {2, 2, 2}, "(Z2)^3"},
      {1, 3, 1, "1 34", {2, 2, 2}, "(Z2)^3"},
      {1, 0, 6, "123 146 345", {2, 2, 2, 2}, "(Z2)^4"},
      {1, 3, 3, "14 25 36", {2, 2, 2, 2}, "(Z2)^4"},
      {1, 4, 2, "1 35 46", {2, 2, 2, 2}, "(Z2)^4"},
      {1, 0, 8, "123 146 345 367", {2, 2, 2, 2, 2}, "(Z2)^5"},
      {1, 1, 7, "18 234 257 456", {2, 2, 2, 2, 2}, "(Z2)^5"},
      {1, 4, 4, "15 26 37 48", {2, 2, 2, 2, 2}, "(Z2)^5"},
      {1, 5, 3, "1 36 47 58", {2, 2, 2, 2, 2}, "(Z2)^5"},
      {1, 8, 0, "1 2345 2468 4567", {2, 2, 2, 2, 2}, "(Z2)^5"},
      // complex simple
      {2, 1, 2, "13", {4, 2}, "Z2 x Z4"},
      {2, 3, 0, "1", {2, 4}, "Z2 x Z4"},
      {2, 0, 5, "123 345", {4, 4, 4}, "(Z4)^3"},
      {2, 2, 3, "14 25", {4, 2, 2}, "(Z2)^2 x Z4"},
      {2, 4, 1, "1 45", {2, 4, 2}, "(Z2)^2 x Z4"},
      {2, 1, 6, "17 234 456", {4, 2, 4, 4}, "Z2 x (Z4)^3"},
      {2, 3, 4, "15 26 37", {4, 2, 2, 2}, "(Z2)^3 x Z4"},
      {2, 5, 2, "1 46 57", {2, 4, 2, 2}, "(Z2)^3 x Z4"},
      {2, 7, 0, "1 2345 4567", {2, 4, 4, 4}, "Z2 x (Z4)^3"},
      {2, 0, 9, "123 146 345 367", {4, 2, 2, 2, 2}, "(Z2)^4 x Z4"},
      {2, 2, 7, "18 29 345 567", {4, 2, 2, 4, 4}, "(Z2)^2 x (Z4)^3"},
      {2, 4, 5, "16 27 38 49", {4, 2, 2, 2, 2}, "(Z2)^4 x Z4"},
      {2, 6, 3, "1 47 58 69", {2, 4, 2, 2, 2}, "(Z2)^4 x Z4"},
      {2, 8, 1, "1 89 2345 4567", {2, 4, 4, 4, 2}, "(Z2)^2 x (Z4)^3"},
      // quaternionic simple
      {3, 0, 4, "123", {4, 4, 4}, "F3"},
      {3, 1, 3, "14", {4, 4, 2}, "F2 x Z2"},
      {3, 4, 0, "1", {2, 4, 4}, "F2 x Z2"},
      {3, 1, 5, "16 234", {4, 4, 4, 2}, "F3 x Z2"},
      {3, 2, 4, "15 26", {4, 4, 2, 2}, "F2 x (Z2)^2"},
      {3, 5, 1, "1 56", {2, 4, 4, 2}, "F2 x (Z2)^2"},
      {3, 6, 0, "1 2345", {2, 4, 4, 4}, "F3 x Z2"},
      {3, 2, 6, "17 28 345", {4, 4, 4, 2, 2}, "F3 x (Z2)^2"},
      {3, 3, 5, "16 27 38", {4, 4, 2, 2, 2}, "F2 x (Z2)^3"},
      {3, 6, 2, "1 57 68", {2, 4, 4, 2, 2}, "F2 x (Z2)^3"},
      {3, 7, 1, "1 78 2345", {2, 4, 4, 4, 2}, "F3 x (Z2)^2"},
      // double real
      {4, 2, 1, "1 23", {2, 2, 2}, "(Z2)^3"},
      {4, 3, 2, "1 24 35", {2, 2, 2, 2}, "(Z2)^4"},
      {4, 0, 7, "123 146 345 367", {2, 2, 2, 2, 2}, "(Z2)^5"},
      {4, 4, 3, "1 25 36 47", {2, 2, 2, 2, 2}, "(Z2)^5"},
      {4, 5, 4, "1 26 37 48 59", {2, 2, 2, 2, 2, 2}, "(Z2)^6"},
      {4, 9, 0, "1 2345 2367 2389 2468", {2, 2, 2, 2, 2, 2}, "(Z2)^6"},
      {4, 1, 8, "1 2345 2367 2389 2468", {2, 2, 2, 2, 2, 2}, "(Z2)^6"},
      // double quaternionic
      {5, 0, 3, "123", {4, 4, 4}, "F3"},
      {5, 5, 0, "1 2345", {2, 4, 4, 4}, "F3 x Z2"},
      {5, 1, 4, "15 234", {4, 4, 4, 2}, "F3 x Z2"},
      {5, 2, 5, "16 27 345", {4, 4, 4, 2, 2}, "F3 x (Z2)^2"},
      {5, 6, 1, "1 67 2345", {2, 4, 4, 4, 2}, "F3 x (Z2)^2"},
      {5, 7, 2, "1 28 39 4567", {2, 2, 2, 4, 4, 4}, "F3 x (Z2)^3"},
      {5, 3, 6, "1 24 35 6789", {2, 2, 2, 4, 4, 4}, "F3 x (Z2)^3"},
  };
  return rows;
}

Idempotent entry_idempotent(const TableEntry& e, bool search) {
  Signature sig(e.p, e.q);
  if (search) return primitive_idempotent(sig);
  std::vector<Blade> blades;
  std::istringstream in(e.factors);
  std::string tok;
  while (in >> tok) {
    std::vector<int> idx;
    for (char c : tok) idx.push_back(c - '0');
    blades.push_back(blade_from_indices(idx));
  }
  return primitive_idempotent(CommutingSet(sig, blades));
}

TableRow build_row(int table, const Idempotent& f) {
  const Signature& sig = f.signature();
  GroupFingerprint fp = fingerprint(stabilizer(f));
  TableRow r;
  r.table = table;
  r.p = sig.p;
  r.q = sig.q;
  r.idempotent = factor_list(f);
  r.stab_order = fp.order;
  r.label = fp.label;
  r.gen_orders = fp.generator_orders;
  for (SignedBlade g : fp.generators) r.generators.push_back(format_blade(g, sig.n()));
  r.presentation = fp.presentation;
  return r;
}

TableRow build_row(const TableEntry& e, bool search) { return build_row(e.table, entry_idempotent(e, search)); }

std::size_t expected_stabilizer_order(const Signature& sig) {
  AlgebraStructure st = classify(sig);
  int e = (st.simple ? 1 : 2) + sig.p + radon_hurwitz(sig.q - sig.p);
  return std::size_t{1} << e;
}

std::size_t label_order(const std::string& label) {
  std::size_t total = 1;
  std::istringstream in(label);
  std::string part;
  while (in >> part) {
    if (part == "x") continue;
    std::string base = part;
    int power = 1;
    if (part.front() == '(') {
      auto close = part.find(')');
      if (close == std::string::npos || part.size() < close + 3 || part[close + 1] != '^') return 0;
      base = part.substr(1, close - 1);
      power = std::stoi(part.substr(close + 2));
    }
    std::size_t order = base == "Z2" ? 2 : base == "Z4" ? 4 : base == "F2" ? 8 : base == "F3" ? 16 : 0;
    if (order == 0) return 0;
    for (int i = 0; i < power; ++i) total *= order;
  }
  return total;
}

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string orders_list(const std::vector<int>& v, const std::string& sep) {
  std::vector<std::string> s;
  for (int x : v) s.push_back(std::to_string(x));
  return join(s, sep);
}

const char* table_title(int table) {
  switch (table) {
    case 1: return "simple, Mat(2^k,R)";
    case 2: return "simple, Mat(2^k,C)";
    case 3: return "simple, Mat(2^k,H)";
    case 4: return "semisimple, Mat(2^(k-1),R)+Mat(2^(k-1),R)";
    case 5: return "semisimple, Mat(2^(k-1),H)+Mat(2^(k-1),H)";
  }
  return "";
}

}  // namespace

void render(std::ostream& out, const std::vector<TableRow>& rows, Format fmt) {
  if (fmt == Format::Json) {
    out << nlohmann::json(rows).dump(2) << "\n";
    return;
  }
  if (fmt == Format::Csv) {
    out << "p,q,idempotent,stab_order,label,gen_orders\n";
    for (const auto& r : rows)
      out << r.p << "," << r.q << "," << csv_field(r.idempotent) << "," << r.stab_order << "," << csv_field(r.label)
          << "," << orders_list(r.gen_orders, " ") << "\n";
    return;
  }
  int current = 0;
  for (const auto& r : rows) {
    if (r.table != current) {
      if (current) out << "\n";
      current = r.table;
      out << "Table " << r.table << " (" << table_title(r.table) << ")\n";
      out << std::left << std::setw(9) << "algebra" << std::setw(30) << "idempotent factors" << std::setw(8)
          << "|G(f)|" << std::setw(18) << "structure" << std::setw(32) << "generators" << "|g|\n";
    }
    std::string alg = "Cl(" + std::to_string(r.p) + "," + std::to_string(r.q) + ")";
    out << std::left << std::setw(9) << alg << std::setw(30) << r.idempotent << std::setw(8) << r.stab_order
        << std::setw(18) << r.label << std::setw(32) << ("<" + join(r.generators, ",") + ">")
        << format_orders(r.gen_orders) << "\n";
  }
}

void to_json(nlohmann::json& j, const TableRow& r) {
  j = nlohmann::json{{"table", r.table},         {"p", r.p},
                     {"q", r.q},                 {"idempotent", r.idempotent},
                     {"stab_order", r.stab_order}, {"label", r.label},
                     {"gen_orders", r.gen_orders}, {"generators", r.generators},
                     {"presentation", r.presentation}};
}

void from_json(const nlohmann::json& j, TableRow& r) {
  j.at("table").get_to(r.table);
  j.at("p").get_to(r.p);
  j.at("q").get_to(r.q);
  j.at("idempotent").get_to(r.idempotent);
  j.at("stab_order").get_to(r.stab_order);
  j.at("label").get_to(r.label);
  j.at("gen_orders").get_to(r.gen_orders);
  j.at("generators").get_to(r.generators);
  j.at("presentation").get_to(r.presentation);
}

}  // namespace cliffrep::cli
