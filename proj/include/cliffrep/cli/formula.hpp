#pragma once

#include "cliffrep/norms.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace cliffrep::cli {

// sum c * psi_r * phi_c over real spinor coordinates, one K component at a time
struct BilinearPolynomial {
  std::map<std::pair<std::size_t, std::size_t>, Rational> terms;
  friend bool operator==(const BilinearPolynomial&, const BilinearPolynomial&) = default;
};

// Coordinate r of real_spinor_basis: "3" over R, "21" (i = 2, a = 1) otherwise.
std::string coordinate_name(std::size_t r, std::size_t kdim);

BilinearPolynomial component(const BilinearForm& form, std::size_t a);

// "-psi1*phi4+psi3*phi2"; terms sorted by (psi, phi); "0" when empty
std::string render(const BilinearPolynomial& poly, std::size_t kdim);

// Accepts the rendered syntax plus spaces and underscores ("- psi_1 phi_4").
// Throws ParseError.
BilinearPolynomial parse_bilinear(std::string_view text, std::size_t kdim, std::size_t dim);

}  // namespace cliffrep::cli
