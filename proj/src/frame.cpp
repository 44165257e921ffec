#include "adsbh/frame.hpp"

#include <cmath>
#include <vector>

namespace adsbh {

GroupElement<double> frame_completion(const AdSPoint& p) {
  const int l = p.dim();
  if (l < 2) throw DomainError("AdS dimension must be at least 2");
  const int N = l + 1;
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(N, N);
  g.col(0) = p.coords;
  // On the hyperboloid u^2 + t^2 = 1 + x.x; this form is exactly 1 when x = 0.
  const double r = std::sqrt(1.0 + p.coords.tail(N - 2).squaredNorm());
  g(kU, 1) = -p.t() / r;
  g(kT, 1) = p.u() / r;

  std::vector<Eigen::VectorXd> candidates;
  for (int i = 2; i < N; ++i) candidates.push_back(Eigen::VectorXd::Unit(N, i));
  candidates.push_back(Eigen::VectorXd::Unit(N, kU));
  candidates.push_back(Eigen::VectorXd::Unit(N, kT));

  const Eigen::VectorXd signs = eta<double>(l).diagonal();
  int filled = 2;
  for (const auto& c : candidates) {
    if (filled == N) break;
    Eigen::VectorXd v = c;
    for (int pass = 0; pass < 2; ++pass)
      for (int j = 0; j < filled; ++j) v -= signs(j) * eta_inner(v, g.col(j)) * g.col(j);
    const double n2 = eta_inner(v, v);
    if (n2 <= 1e-6) continue;  // null or timelike remainder
    g.col(filled++) = v / std::sqrt(n2);
  }
  if (filled != N) throw FrameCompletionError("indefinite Gram-Schmidt ran out of candidate columns");
  if (g.determinant() < 0) g.col(N - 1) *= -1.0;
  return GroupElement<double>(g);
}

namespace {

// Rows: (t+y)/r2, (u+x)/r2, x_4..x_l, (u-x)/r2, (t-y)/r2.  AN is upper
// triangular in this basis.
Eigen::MatrixXd root_basis(int l) {
  const int N = l + 1;
  const double h = std::sqrt(0.5);
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(N, N);
  P(0, kT) = h, P(0, kY) = h;
  P(1, kU) = h, P(1, kX) = h;
  for (int i = kFirstExtra; i < N; ++i) P(i - 2, i) = 1.0;
  P(N - 2, kU) = h, P(N - 2, kX) = -h;
  P(N - 1, kT) = h, P(N - 1, kY) = -h;
  return P;
}

}  // namespace

IwasawaFactors ank_decompose(const GroupElement<double>& g) {
  const int l = g.dim();
  if (l < 3) throw DomainError("ANK factorization needs l >= 3");
  const int N = l + 1;
  const Eigen::MatrixXd P = root_basis(l);
  const Eigen::MatrixXd S = P * g.matrix * g.matrix.transpose() * P.transpose();
  const Eigen::MatrixXd J = Eigen::MatrixXd::Identity(N, N).rowwise().reverse();
  Eigen::LLT<Eigen::MatrixXd> llt(J * S * J);
  if (llt.info() != Eigen::Success) throw FactorizationError("g g^T is not positive definite");
  const Eigen::MatrixXd R = J * Eigen::MatrixXd(llt.matrixL()) * J;  // upper, positive diagonal
  IwasawaFactors out;
  out.an = P.transpose() * R * P;
  out.k = out.an.partialPivLu().solve(g.matrix);
  out.k_angle = std::atan2(out.k(kT, kU), out.k(kU, kU));
  return out;
}

}  // namespace adsbh
