#pragma once

// Orbits of the Iwasawa subgroups AN and AN-bar on AdS_l, realized as the
// unit hyperboloid u^2 + t^2 - x.x = 1.

#include <Eigen/Dense>

#include <vector>

#include "adsbh/so2n.hpp"

namespace adsbh {

struct AdSPoint {
  Eigen::VectorXd coords;  // (u, t, x, y, x_4, ..., x_l)

  AdSPoint() = default;
  explicit AdSPoint(Eigen::VectorXd c) : coords(std::move(c)) {}

  int dim() const { return int(coords.size()) - 1; }
  double u() const { return coords(kU); }
  double t() const { return coords(kT); }
  double x() const { return coords(kX); }
  double y() const { return coords(kY); }
};

// The base point (1, 0, ..., 0).
AdSPoint base_point(int l);

double eta_inner(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

// u^2 + t^2 - x.x - 1
double hyperboloid_residual(const AdSPoint& p);

// Radial rescaling onto the hyperboloid; needs a positive eta-norm.
AdSPoint normalized(const Eigen::VectorXd& v);

enum class Subgroup { AN, ANbar };
enum class SingularityClass { OnAN, OnANbar, OnBoth, Generic };

const char* to_string(Subgroup s);
const char* to_string(SingularityClass s);

// A then N: {J1, J2, M, L, V_i, W_i}; for AN-bar {J1, J2, N, F, X_i, Y_i}.
std::vector<LieElement<double>> iwasawa_basis(int l, Subgroup which);

// X*_p = -X p
Eigen::VectorXd fundamental_field(const LieElement<double>& X, const AdSPoint& p);

// Columns are the fundamental fields of iwasawa_basis at p.
Eigen::MatrixXd field_matrix(const AdSPoint& p, Subgroup which);

// Singular values above rel_cutoff * sigma_max.
int numerical_rank(const Eigen::MatrixXd& m, double rel_cutoff = 1e-9);

bool orbit_is_open(const AdSPoint& p, Subgroup which, double rank_cutoff = 1e-9);

// Delta_ij = B(q_i, Ad(g^-1) N_j), rows over q0..qn, columns over the
// A + N (or A + N-bar) basis.
Eigen::MatrixXd pairing_matrix(const GroupElement<double>& g, Subgroup which);
Eigen::MatrixXd pairing_matrix(const GroupElement<double>& g, Subgroup which,
                               const MatrixLieAlgebra<double>& algebra);
Eigen::MatrixXd pairing_matrix(const AdSPoint& p, Subgroup which);

SingularityClass classify_singularity(const AdSPoint& p, double tol = 1e-9);

// <J1*, J1*>_eta, equal to t^2 - y^2.
double j1_norm_sq(const AdSPoint& p);

}  // namespace adsbh
