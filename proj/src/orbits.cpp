#include "adsbh/orbits.hpp"

#include <cmath>

#include "adsbh/frame.hpp"

namespace adsbh {

AdSPoint base_point(int l) {
  if (l < 2) throw DomainError("AdS dimension must be at least 2");
  Eigen::VectorXd c = Eigen::VectorXd::Zero(l + 1);
  c(kU) = 1.0;
  return AdSPoint(c);
}

double eta_inner(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return -a(kU) * b(kU) - a(kT) * b(kT) + a.tail(a.size() - 2).dot(b.tail(b.size() - 2));
}

double hyperboloid_residual(const AdSPoint& p) {
  return -eta_inner(p.coords, p.coords) - 1.0;
}

AdSPoint normalized(const Eigen::VectorXd& v) {
  const double n2 = -eta_inner(v, v);
  if (!(n2 > 0)) throw DomainError("vector has no timelike eta-norm; cannot rescale onto AdS");
  return AdSPoint(v / std::sqrt(n2));
}

const char* to_string(Subgroup s) { return s == Subgroup::AN ? "AN" : "ANbar"; }

const char* to_string(SingularityClass s) {
  switch (s) {
    case SingularityClass::OnAN: return "OnAN";
    case SingularityClass::OnANbar: return "OnANbar";
    case SingularityClass::OnBoth: return "OnBoth";
    case SingularityClass::Generic: return "Generic";
  }
  return "?";
}

std::vector<LieElement<double>> iwasawa_basis(int l, Subgroup which) {
  const auto g = generators<double>(l);
  std::vector<LieElement<double>> out{g.J1, g.J2};
  if (which == Subgroup::AN) {
    out.push_back(g.M);
    out.push_back(g.L);
    out.insert(out.end(), g.V.begin(), g.V.end());
    out.insert(out.end(), g.W.begin(), g.W.end());
  } else {
    out.push_back(g.N);
    out.push_back(g.F);
    out.insert(out.end(), g.X.begin(), g.X.end());
    out.insert(out.end(), g.Y.begin(), g.Y.end());
  }
  return out;
}

Eigen::VectorXd fundamental_field(const LieElement<double>& X, const AdSPoint& p) {
  if (X.size() != p.coords.size()) throw DimensionMismatch("generator and point sizes differ");
  return -X.matrix * p.coords;
}

Eigen::MatrixXd field_matrix(const AdSPoint& p, Subgroup which) {
  const auto basis = iwasawa_basis(p.dim(), which);
  Eigen::MatrixXd m(p.coords.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) m.col(j) = fundamental_field(basis[j], p);
  return m;
}

int numerical_rank(const Eigen::MatrixXd& m, double rel_cutoff) {
  const Eigen::VectorXd s = Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_cutoff * s(0)) ++r;
  return r;
}

bool orbit_is_open(const AdSPoint& p, Subgroup which, double rank_cutoff) {
  return numerical_rank(field_matrix(p, which), rank_cutoff) == p.dim();
}

Eigen::MatrixXd pairing_matrix(const GroupElement<double>& g, Subgroup which,
                               const MatrixLieAlgebra<double>& algebra) {
  const int l = g.dim();
  const auto gens = generators<double>(l);
  const auto basis = iwasawa_basis(l, which);
  const GroupElement<double> ginv = inverse(g);
  Eigen::MatrixXd qc(algebra.dimension(), l);
  for (int i = 0; i < l; ++i) qc.col(i) = algebra.coordinates(gens.q[i].matrix);
  Eigen::MatrixXd nc(algebra.dimension(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    nc.col(j) = algebra.coordinates(adjoint_action(ginv, basis[j]).matrix);
  return qc.transpose() * algebra.killing_gram() * nc;
}

Eigen::MatrixXd pairing_matrix(const GroupElement<double>& g, Subgroup which) {
  return pairing_matrix(g, which, so2n_algebra<double>(g.dim()));
}

Eigen::MatrixXd pairing_matrix(const AdSPoint& p, Subgroup which) {
  return pairing_matrix(frame_completion(p), which);
}

SingularityClass classify_singularity(const AdSPoint& p, double tol) {
  const bool an = std::abs(p.y() - p.t()) <= tol;
  const bool anbar = std::abs(p.y() + p.t()) <= tol;
  if (an && anbar) return SingularityClass::OnBoth;
  if (an) return SingularityClass::OnAN;
  if (anbar) return SingularityClass::OnANbar;
  return SingularityClass::Generic;
}

double j1_norm_sq(const AdSPoint& p) {
  const Eigen::VectorXd v = fundamental_field(generators<double>(p.dim()).J1, p);
  return eta_inner(v, v);
}

}  // namespace adsbh
