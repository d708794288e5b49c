#include "cliffrep/signature.hpp"

#include "cliffrep/errors.hpp"

namespace cliffrep {

Signature::Signature(int p_, int q_) : p(p_), q(q_) {
  if (p < 0 || q < 0) throw InvalidArgument("signature counts must be non-negative");
  if (p + q > kMaxGenerators)
    throw InvalidArgument("at most " + std::to_string(kMaxGenerators) + " generators supported");
}

std::string to_string(const Signature& sig) {
  return "Cl(" + std::to_string(sig.p) + "," + std::to_string(sig.q) + ")";
}

}  // namespace cliffrep
