#pragma once

#include "cliffrep/vee_group.hpp"

#include <map>
#include <string>
#include <vector>

namespace cliffrep {

enum class GroupKind { ElementaryAbelian, Abelian, F2, F3, Unresolved };

struct GroupFingerprint {
  std::size_t order = 0;
  bool abelian = true;
  std::map<int, std::size_t> element_order_histogram;
  std::size_t center_size = 0;
  std::vector<SignedBlade> generators;  // minimal_generators
  std::vector<int> generator_orders;

  GroupKind kind = GroupKind::Unresolved;
  int z2_rank = 0;  // a in (Z2)^a x (Z4)^b, or m in F x (Z2)^m
  int z4_rank = 0;  // b
  // Elementary-divisor label, e.g. "(Z2)^2 x Z4" or "F3 x Z2"; "UNRESOLVED" if uncertified.
  std::string label;
  // Cyclic factors of the generator list itself, e.g. "Z2 x (Z4)^3".
  std::string presentation;
  // Generators realising the label: order-2 then order-4 factors for abelian
  // groups; the F2/F3 generators followed by the central complement otherwise.
  std::vector<SignedBlade> certificate;
};

GroupFingerprint fingerprint(const Subgroup& h);

// "(2,4^3)": runs of equal consecutive orders are collapsed
std::string format_orders(const std::vector<int>& orders);
std::string to_string(GroupKind k);

}  // namespace cliffrep
