#include "adsbh/sampling.hpp"

#include <cmath>
#include <numbers>

namespace adsbh {

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

// Root of x^(d+1) = x + 1, the generator of the d-dimensional R-sequence.
double phi(int d) {
  double x = 2.0;
  for (int i = 0; i < 64; ++i) x = std::pow(1.0 + x, 1.0 / (d + 1));
  return x;
}

double frac(double x) { return x - std::floor(x); }

}  // namespace

std::vector<Eigen::VectorXd> sphere_directions(int n, int count, std::uint64_t seed) {
  if (n < 1) throw DomainError("sphere dimension must be positive");
  if (count < 1) throw DomainError("sample count must be positive");
  std::vector<Eigen::VectorXd> out;
  out.reserve(count);
  const double offset = frac(0.5 + double(seed % 1000003) * 0.6180339887498949);
  if (n == 1) {
    for (int k = 0; k < count; ++k) out.push_back(Eigen::VectorXd::Constant(1, k % 2 ? -1.0 : 1.0));
    return out;
  }
  if (n == 2) {
    for (int k = 0; k < count; ++k) {
      const double a = 2.0 * std::numbers::pi * (k + offset) / count;
      Eigen::VectorXd w(2);
      w << std::cos(a), std::sin(a);
      out.push_back(w);
    }
    return out;
  }
  const int m = n + (n % 2);  // Box-Muller consumes coordinates in pairs
  const double g = phi(m);
  Eigen::VectorXd alpha(m), start(m);
  for (int j = 0; j < m; ++j) {
    alpha(j) = frac(std::pow(1.0 / g, j + 1));
    start(j) = frac(offset * (j + 1) * 0.7548776662466927);
  }
  for (int k = 1; int(out.size()) < count; ++k) {
    Eigen::VectorXd z(m);
    for (int j = 0; j < m; j += 2) {
      const double u1 = frac(start(j) + k * alpha(j));
      const double u2 = frac(start(j + 1) + k * alpha(j + 1));
      if (u1 <= 0.0) continue;
      const double r = std::sqrt(-2.0 * std::log(u1));
      z(j) = r * std::cos(2.0 * std::numbers::pi * u2);
      z(j + 1) = r * std::sin(2.0 * std::numbers::pi * u2);
    }
    const Eigen::VectorXd w = z.head(n);
    const double nw = w.norm();
    if (nw < 1e-9) continue;
    out.push_back(w / nw);
  }
  return out;
}

AdSPoint random_point(int l, Rng& rng, double spread) {
  Eigen::VectorXd c(l + 1);
  for (int i = 2; i <= l; ++i) c(i) = spread * rng.normal();
  const double r = std::sqrt(1.0 + c.tail(l - 1).squaredNorm());
  const double a = rng.uniform(-std::numbers::pi, std::numbers::pi);
  c(kU) = r * std::cos(a);
  c(kT) = r * std::sin(a);
  return AdSPoint(c);
}

AdSPoint random_singular_point(int l, Subgroup which, Rng& rng, double spread) {
  if (l < 3) throw DomainError("the singular branches need l >= 3");
  // Pick t, x, x_4.. freely, set y = +-t, then u from the hyperboloid.
  Eigen::VectorXd c(l + 1);
  for (int i = 1; i <= l; ++i) c(i) = spread * rng.normal();
  c(kY) = which == Subgroup::AN ? c(kT) : -c(kT);
  const double u2 = 1.0 + c.tail(l - 1).squaredNorm() - c(kT) * c(kT);
  c(kU) = (rng.uniform() < 0.5 ? -1.0 : 1.0) * std::sqrt(u2);
  return AdSPoint(c);
}

Eigen::MatrixXd random_rotation(int n, Rng& rng) {
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i)
    if (r(i, i) < 0) q.col(i) *= -1.0;
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

}  // namespace adsbh
