#include "cliffrep/structure.hpp"

namespace cliffrep {

namespace {

int floor_mod(int a, int m) { return ((a % m) + m) % m; }
int floor_div(int a, int m) { return (a - floor_mod(a, m)) / m; }

}  // namespace

int radon_hurwitz(int i) {
  static constexpr int base[8] = {0, 1, 2, 2, 3, 3, 3, 3};
  return base[floor_mod(i, 8)] + 4 * floor_div(i, 8);
}

int AlgebraStructure::division_dim() const {
  switch (ring) {
    case RingType::Real:
    case RingType::DoubleReal: return 1;
    case RingType::Complex: return 2;
    case RingType::Quaternion:
    case RingType::DoubleQuaternion: return 4;
  }
  return 1;
}

AlgebraStructure classify(const Signature& sig) {
  AlgebraStructure s;
  s.sig = sig;
  s.k = sig.q - radon_hurwitz(sig.q - sig.p);
  s.simple = floor_mod(sig.p - sig.q, 4) != 1;
  s.matrix_dim = s.simple ? (1 << s.k) : (1 << (s.k - 1));
  switch (floor_mod(sig.p - sig.q, 8)) {
    case 0:
    case 2: s.ring = RingType::Real; break;
    case 1: s.ring = RingType::DoubleReal; break;
    case 3:
    case 7: s.ring = RingType::Complex; break;
    case 4:
    case 6: s.ring = RingType::Quaternion; break;
    case 5: s.ring = RingType::DoubleQuaternion; break;
  }
  return s;
}

std::string to_string(RingType r) {
  switch (r) {
    case RingType::Real: return "R";
    case RingType::Complex: return "C";
    case RingType::Quaternion: return "H";
    case RingType::DoubleReal: return "2R";
    case RingType::DoubleQuaternion: return "2H";
  }
  return "?";
}

std::string describe(const AlgebraStructure& s) {
  std::string n = std::to_string(s.matrix_dim);
  switch (s.ring) {
    case RingType::Real: return "Mat(" + n + ",R)";
    case RingType::Complex: return "Mat(" + n + ",C)";
    case RingType::Quaternion: return "Mat(" + n + ",H)";
    case RingType::DoubleReal: return "Mat(" + n + ",R)+Mat(" + n + ",R)";
    case RingType::DoubleQuaternion: return "Mat(" + n + ",H)+Mat(" + n + ",H)";
  }
  return "?";
}

}  // namespace cliffrep
