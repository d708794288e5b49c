#pragma once

#include "cliffrep/multivector.hpp"
#include "cliffrep/structure.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace cliffrep {

// Pairwise commuting blades squaring to +1, independent modulo signs.
class CommutingSet {
 public:
  explicit CommutingSet(const Signature& sig) : sig_(sig) {}
  CommutingSet(const Signature& sig, std::vector<Blade> factors);  // validates

  const Signature& signature() const { return sig_; }
  const std::vector<Blade>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }

  // masks of all 2^size products of subsets, indexed by subset bits
  std::vector<std::uint32_t> span_masks() const;
  bool in_span(Blade b) const;

 private:
  Signature sig_;
  std::vector<Blade> factors_;
};

// True iff b could extend `chosen` (squares to +1, commutes, independent).
bool admissible_factor(Blade b, const std::vector<Blade>& chosen, const Signature& sig);

// First admissible set of size k in monomial order (backtracking).
CommutingSet find_commuting_set(const Signature& sig);

struct Idempotent {
  Multivector value;
  CommutingSet factors;
  std::vector<int> signs;

  const Signature& signature() const { return value.signature(); }
};

// Product of 1/2(1 + s_j t_j) over any valid commuting set.
Idempotent product_idempotent(const CommutingSet& factors, const std::vector<int>& signs);
// Same, but the set must have exactly k factors.
Idempotent primitive_idempotent(const CommutingSet& factors, const std::vector<int>& signs);
Idempotent primitive_idempotent(const CommutingSet& factors);  // all signs +
Idempotent primitive_idempotent(const Signature& sig);         // searched factor set

// h f = sigma f for a blade h in the span of the factors.
int absorption_sign(Blade h, const Idempotent& f);
// 1/2(1 + s t) -> 1/2(1 + s t^), factors kept
Idempotent grade_involution(const Idempotent& f);
// all 2^size sign patterns; pattern bit j set means sign_j = -1
std::vector<Idempotent> idempotent_family(const CommutingSet& factors);

bool is_idempotent(const Multivector& f);
std::size_t left_ideal_dimension(const Multivector& f);  // rank of L_f
bool is_primitive(const Multivector& f);                 // throws if f is not idempotent

// 1/2(1 +- e_{1..n}); semisimple algebras only
std::pair<Multivector, Multivector> central_idempotents(const Signature& sig);

// "1/4(1+e13)(1+e24)", "1" for the empty product
std::string to_string(const Idempotent& f);
// "+e13,+e24"
std::string factor_list(const Idempotent& f);

}  // namespace cliffrep
