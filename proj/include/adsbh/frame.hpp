#pragma once

// Lifting points of AdS_l to SO(2,n), and the ANK factorization.

#include <Eigen/Dense>

#include "adsbh/orbits.hpp"
#include "adsbh/so2n.hpp"

namespace adsbh {

// g with g * base = p.  Column 0 is p, column 1 is (-t, u, 0, ...)/r, the
// rest come from indefinite Gram-Schmidt on the coordinate axes.
GroupElement<double> frame_completion(const AdSPoint& p);

struct IwasawaFactors {
  Eigen::MatrixXd an;  // in AN
  Eigen::MatrixXd k;   // in K = S(O(2) x O(n)), block diagonal
  double k_angle = 0;  // rotation angle of the (u,t) block of k
};

// g = an * k.  In a basis adapted to the roots AN is triangular, so the
// factorization is a Cholesky factorization of g g^T.
IwasawaFactors ank_decompose(const GroupElement<double>& g);

}  // namespace adsbh
