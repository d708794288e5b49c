#pragma once

#include "cliffrep/cli/tables.hpp"
#include "cliffrep/idempotent.hpp"

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cliffrep::cli {

struct CheckResult {
  std::string scope;  // "Cl(2,2)", "table 3", ...
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string detail;  // first failure

  bool passed() const { return failures == 0; }
  // counts one case; returns ok
  bool expect(bool ok, std::string_view what = {});
};

class Report {
 public:
  CheckResult& add(std::string scope, std::string name);
  void append(const Report& other);
  bool passed() const;
  std::size_t failures() const;
  const std::deque<CheckResult>& results() const { return results_; }
  // one line per check, then a summary line
  void print(std::ostream& out) const;

 private:
  std::deque<CheckResult> results_;  // add() hands out stable references
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  int exhaustive_dim = 6;   // pairwise/triple sweeps run in full up to this n
  std::size_t samples = 20; // random elements per sampled check
};

// Algebraic identities for one signature, using f (or the searched f).
Report verify_props(const Idempotent& f, const VerifyOptions& opt);
Report verify_props(const Signature& sig, const VerifyOptions& opt);

// Orders, labels and generator orders of catalog rows; all rows when sig is empty.
Report verify_tables(const std::optional<Signature>& sig, bool search);

// Worked examples with printed values: Cl(2,2), Cl(3,0), Cl(2,4), Cl(2,1).
Report verify_examples(const std::optional<Signature>& sig, const VerifyOptions& opt);

// (p,q) with 1 <= p+q <= max_dim, ordered by n then p
std::vector<Signature> signatures_up_to(int max_dim);

}  // namespace cliffrep::cli
