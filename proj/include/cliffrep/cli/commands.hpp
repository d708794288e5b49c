#pragma once

#include "cliffrep/cli/tables.hpp"
#include "cliffrep/signature.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace cliffrep::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

// table: 1..5, or 0 for all
int cmd_tables(std::ostream& out, int table, Format fmt, bool search);

struct RepOptions {
  Format format = Format::Text;
  std::string idempotent;  // factor list; empty means the searched one
};
// expression is a blade expression or "generic"
int cmd_rep(std::ostream& out, const Signature& sig, const std::string& expression, const RepOptions& opt);

enum class Suite { Props, Tables, Examples };

struct VerifyCommand {
  std::optional<Signature> signature;  // empty: every signature up to max_dim
  Suite suite = Suite::Props;
  std::uint64_t seed = 0;
  int max_dim = 9;
  std::size_t samples = 20;
  std::string idempotent;  // props on one signature only
  bool search = false;     // tables suite
};
int cmd_verify(std::ostream& out, const VerifyCommand& cmd);

}  // namespace cliffrep::cli
