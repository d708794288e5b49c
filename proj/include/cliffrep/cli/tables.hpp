#pragma once

#include "cliffrep/fingerprint.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace cliffrep::cli {

// One tabulated stabilizer entry: the idempotent's factors as printed in the
// published tables, with the printed generator orders and structure label.
struct TableEntry {
  int table;
  int p, q;
  std::string factors;     // "13 24": digit strings of blades, all signs +
  std::vector<int> orders; // printed |g| sequence
  std::string label;       // printed structure, ASCII form
};

const std::vector<TableEntry>& table_catalog();

struct TableRow {
  int table = 0;
  int p = 0, q = 0;
  std::string idempotent;  // signed factor list, e.g. "+e13,+e24"
  std::size_t stab_order = 0;
  std::string label;
  std::vector<int> gen_orders;
  std::vector<std::string> generators;
  std::string presentation;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

// Idempotent of a catalog entry, or the searched one when `search` is set.
Idempotent entry_idempotent(const TableEntry& e, bool search);
TableRow build_row(const TableEntry& e, bool search);
TableRow build_row(int table, const Idempotent& f);

// 2^{1+p+r_{q-p}} (simple) or 2^{2+p+r_{q-p}} (semisimple)
std::size_t expected_stabilizer_order(const Signature& sig);
// order implied by an ASCII label ("(Z2)^2 x Z4" -> 16); 0 if unparsable
std::size_t label_order(const std::string& label);

enum class Format { Text, Csv, Json };

void render(std::ostream& out, const std::vector<TableRow>& rows, Format fmt);

void to_json(nlohmann::json& j, const TableRow& r);
void from_json(const nlohmann::json& j, TableRow& r);

}  // namespace cliffrep::cli
