#pragma once

#include <stdexcept>

namespace nred {

struct Tolerance {
  double eps_coeff = 1e-9;  // coefficient zero threshold
  double eps_rank = 1e-7;   // singular value / eigenvalue threshold

  void validate() const {
    if (!(eps_coeff > 0.0) || !(eps_rank > 0.0))
      throw std::invalid_argument("tolerances must be strictly positive");
  }
};

}  // namespace nred
