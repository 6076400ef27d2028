#pragma once

// Convolution kernels for the three generating-function families.
//
//   gaussian_binomial(n, i)  Gaussian binomial [n choose i] in one variable.
//   weighted_binomial(n, i)  B(n,i) = [n choose i]_q (1+y)^{i(n-i)} with
//                            q = (1+uy)/(1+y), built in the polynomial ring.
//   normalization_F(n)       F(n) = P(1)...P(n), the Eulerian-graphic
//                            denominator, so that B(n,i) = F(n)/(F(i)F(n-i)).
//
// Rows up to binomial_memo_bound() are cached behind a mutex; larger n are
// recomputed on demand. i > n yields the zero polynomial.

#include "census/multipoly.hpp"

namespace census {

MultiPoly gaussian_binomial(unsigned n, unsigned i, Var var = Var::u);

/// n!_q = 1 (1+q) ... (1+q+...+q^{n-1}) in the named variable.
MultiPoly q_factorial(unsigned n, Var var = Var::u);

MultiPoly weighted_binomial(unsigned n, unsigned i);

/// P(i) = sum_{j=0}^{i-1} (1+uy)^j (1+y)^{i-1-j}; P(0) is taken as 1.
MultiPoly normalization_factor(unsigned i);

MultiPoly normalization_F(unsigned n);

/// 1 + u*y and 1 + y, the two edge weights every kernel is built from.
MultiPoly descent_edge_weight();
MultiPoly ascent_edge_weight();

}  // namespace census
