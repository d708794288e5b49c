#pragma once

#include "cliffrep/signature.hpp"

#include <string>

namespace cliffrep {

// r_0..r_7 = 0,1,2,2,3,3,3,3 and r_{i+8} = r_i + 4, run in both directions.
int radon_hurwitz(int i);

enum class RingType { Real, Complex, Quaternion, DoubleReal, DoubleQuaternion };

struct AlgebraStructure {
  Signature sig;
  bool simple = true;
  int k = 0;           // size of a commuting factor set
  int matrix_dim = 1;  // N
  RingType ring = RingType::Real;

  // real dimension of the division ring of one simple component
  int division_dim() const;
  bool double_ring() const { return !simple; }
};

AlgebraStructure classify(const Signature& sig);

std::string to_string(RingType r);                // "R", "C", "H", "2R", "2H"
std::string describe(const AlgebraStructure& s);  // "Mat(4,R)", "Mat(2,R)+Mat(2,R)"

}  // namespace cliffrep
