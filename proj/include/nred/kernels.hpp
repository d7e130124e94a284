#pragma once

#include <vector>

#include "nred/clifford.hpp"
#include "nred/curvature.hpp"
#include "nred/lie_algebra.hpp"
#include "nred/multivector.hpp"

namespace nred {

// Batch and index-tuple kernels. Each *_serial function is the reference for
// its OpenMP counterpart and both must agree exactly up to summation order.

std::vector<Multivector> sigma_batch_serial(const std::vector<Multivector>& forms);
std::vector<Multivector> sigma_batch_parallel(const std::vector<Multivector>& forms);

std::vector<CliffordElement> clifford_square_batch_serial(const std::vector<Multivector>& forms);
std::vector<CliffordElement> clifford_square_batch_parallel(const std::vector<Multivector>& forms);

// max over i<j<k of |cyclic [[b_i,b_j],b_k]|
double jacobi_residual_serial(const LieAlgebraData& L);
double jacobi_residual_parallel(const LieAlgebraData& L);

// max over (a<b<c, d) of |cyclic_{abc} R(a,b,c,d) - sigma_T(a,b,c,d)|
double bianchi1_residual_serial(const Multivector& T, const CurvatureOperator& R);
double bianchi1_residual_parallel(const Multivector& T, const CurvatureOperator& R);

int kernel_threads();

}  // namespace nred
