#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nred/lie_algebra.hpp"
#include "nred/linalg.hpp"
#include "nred/tolerance.hpp"

namespace nred {

// K_ij = tr(ad b_i ad b_j)
Eigen::MatrixXd killing_form(const LieAlgebraData& L);

struct Fingerprint {
  int dim = 0;
  Inertia killing;
  // Dimensions of the derived / lower central series, starting with dim; stops at the
  // first repeated value or at 0.
  std::vector<int> derived_dims;
  std::vector<int> lower_central_dims;
  int center_dim = 0;
  bool is_nilpotent = false;
  bool is_solvable = false;
  bool is_semisimple = false;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const LieAlgebraData& L, const Tolerance& tol = {});
std::string identify(const Fingerprint& f);
std::string identify(const LieAlgebraData& L, const Tolerance& tol = {});

// Basis (columns) of the center.
Eigen::MatrixXd center(const LieAlgebraData& L, const Tolerance& tol = {});
// Basis (columns) of [span A, span B].
Eigen::MatrixXd bracket_span(const LieAlgebraData& L, const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                             const Tolerance& tol = {});

struct Ideal {
  Eigen::MatrixXd basis;  // columns in the coordinates of L
  LieAlgebraData algebra;
  std::string name;
};

// Decomposition into indecomposable ideals, read off from the generalized eigenspaces of a
// random element of the centroid. Abelian pieces are split into 1-dimensional ideals.
std::vector<Ideal> ideal_decomposition(const LieAlgebraData& L, unsigned seed = 0, const Tolerance& tol = {});

}  // namespace nred
