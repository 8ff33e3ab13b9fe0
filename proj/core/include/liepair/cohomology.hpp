#pragma once

#include <liepair/omega.hpp>

namespace liepair {

enum class Complex { ce, h_ext, h0_ext };

std::string to_string(Complex c);

struct CohomologyReport {
  std::string pair;
  Complex complex = Complex::ce;
  std::size_t degree = 0;
  std::size_t dimension = 0;
  std::size_t kernel_dimension = 0;
  std::vector<OmegaElement> representatives;  // cocycles spanning a complement of the image
  std::vector<OmegaElement> image_basis;      // row-reduced basis of the coboundaries
};

/// Matrix of d_ce : Omega^k -> Omega^{k+1} in the stored coordinates.
Matrix d_ce_matrix(const LiePair& pair, std::size_t k);

/// H^k_CE(a, B); throws DegreeMismatch for k > r.
CohomologyReport h_ce(const LiePair& pair, std::size_t k);
/// H^1 of the extended algebra: cocycles modulo d(B) + [Der]_1.
CohomologyReport h1_ext(const LiePair& pair);
/// Same with Der replaced by the inner derivations.
CohomologyReport h1_ext0(const LiePair& pair);

/// True iff x - y lies in the image space of the report (x, y cocycles of its degree).
bool same_class(const CohomologyReport& report, const OmegaElement& x, const OmegaElement& y);

}  // namespace liepair
