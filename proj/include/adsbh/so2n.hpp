#pragma once

// so(2,n) and SO(2,n) in the defining (l+1)-dimensional representation.
//
// Coordinates are ordered (u, t, x, y, x_4, ..., x_l) and matrices are
// 0-based, so the E_ij of the docs (1-based) is element (i-1, j-1) here.
// The invariant form is eta = diag(-1, -1, +1, ..., +1).

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "adsbh/errors.hpp"

namespace adsbh {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Slots of the embedding coordinates.
inline constexpr int kU = 0;
inline constexpr int kT = 1;
inline constexpr int kX = 2;
inline constexpr int kY = 3;
inline constexpr int kFirstExtra = 4;

template <typename Scalar>
struct LieElement {
  MatrixX<Scalar> matrix;

  LieElement() = default;
  explicit LieElement(MatrixX<Scalar> m) : matrix(std::move(m)) {}

  int dim() const { return int(matrix.rows()) - 1; }
  int size() const { return int(matrix.rows()); }

  LieElement operator+(const LieElement& o) const { return LieElement(matrix + o.matrix); }
  LieElement operator-(const LieElement& o) const { return LieElement(matrix - o.matrix); }
  LieElement operator-() const { return LieElement(-matrix); }
  LieElement operator*(Scalar s) const { return LieElement(s * matrix); }
  bool operator==(const LieElement& o) const { return matrix == o.matrix; }
};

template <typename Scalar>
LieElement<Scalar> operator*(Scalar s, const LieElement<Scalar>& X) {
  return X * s;
}

template <typename Scalar>
struct GroupElement {
  MatrixX<Scalar> matrix;

  GroupElement() = default;
  explicit GroupElement(MatrixX<Scalar> m) : matrix(std::move(m)) {}

  int dim() const { return int(matrix.rows()) - 1; }
  int size() const { return int(matrix.rows()); }
};

template <typename Scalar = double>
MatrixX<Scalar> eta(int l) {
  if (l < 2) throw DomainError("AdS dimension must be at least 2");
  VectorX<Scalar> d = VectorX<Scalar>::Ones(l + 1);
  d(kU) = Scalar(-1);
  d(kT) = Scalar(-1);
  return d.asDiagonal();
}

namespace detail {

template <typename Scalar>
MatrixX<Scalar> unit(int size, int i, int j) {
  MatrixX<Scalar> m = MatrixX<Scalar>::Zero(size, size);
  m(i, j) = Scalar(1);
  return m;
}

// E_ij with the docs' 1-based indices.
template <typename Scalar>
MatrixX<Scalar> E1(int size, int i, int j) {
  return unit<Scalar>(size, i - 1, j - 1);
}

template <typename Scalar>
MatrixX<Scalar> block4(int size, std::initializer_list<int> entries) {
  MatrixX<Scalar> m = MatrixX<Scalar>::Zero(size, size);
  auto it = entries.begin();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = Scalar(*it++);
  return m;
}

inline void require_same(int a, int b) {
  if (a != b) throw DimensionMismatch("Lie elements of different sizes");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Residual of the defining relation X^T eta + eta X = 0, max entry.
template <typename Scalar>
Scalar algebra_residual(const LieElement<Scalar>& X) {
  const MatrixX<Scalar> e = eta<Scalar>(X.dim());
  return (X.matrix.transpose() * e + e * X.matrix).cwiseAbs().maxCoeff();
}

template <typename Scalar>
bool is_valid(const LieElement<Scalar>& X, double tol = 1e-12) {
  return X.matrix.rows() == X.matrix.cols() && X.dim() >= 2 &&
         double(algebra_residual(X)) <= tol;
}

template <typename Scalar>
Scalar group_residual(const GroupElement<Scalar>& g) {
  const MatrixX<Scalar> e = eta<Scalar>(g.dim());
  return (g.matrix.transpose() * e * g.matrix - e).cwiseAbs().maxCoeff();
}

// g^T eta g = eta, det g = 1, and the (u,t) block keeps its orientation.
template <typename Scalar>
bool is_valid(const GroupElement<Scalar>& g, double tol = 1e-10) {
  if (g.matrix.rows() != g.matrix.cols() || g.dim() < 2) return false;
  if (double(group_residual(g)) > tol) return false;
  if (std::abs(double(g.matrix.determinant()) - 1.0) > tol) return false;
  return double(g.matrix.template topLeftCorner<2, 2>().determinant()) > 0.0;
}

template <typename Scalar>
GroupElement<Scalar> inverse(const GroupElement<Scalar>& g) {
  const MatrixX<Scalar> e = eta<Scalar>(g.dim());
  return GroupElement<Scalar>(e * g.matrix.transpose() * e);
}

template <typename Scalar>
GroupElement<Scalar> operator*(const GroupElement<Scalar>& a, const GroupElement<Scalar>& b) {
  detail::require_same(a.size(), b.size());
  return GroupElement<Scalar>(a.matrix * b.matrix);
}

template <typename Scalar>
LieElement<Scalar> bracket(const LieElement<Scalar>& X, const LieElement<Scalar>& Y) {
  detail::require_same(X.size(), Y.size());
  return LieElement<Scalar>(X.matrix * Y.matrix - Y.matrix * X.matrix);
}

template <typename Scalar>
LieElement<Scalar> adjoint_action(const GroupElement<Scalar>& g, const LieElement<Scalar>& X) {
  detail::require_same(g.size(), X.size());
  return LieElement<Scalar>(g.matrix * X.matrix * inverse(g).matrix);
}

// theta(X) = -X^T; on so(2,n) this is also eta X eta.
template <typename Scalar>
LieElement<Scalar> cartan_theta(const LieElement<Scalar>& X) {
  return LieElement<Scalar>(-X.matrix.transpose());
}

template <typename Scalar>
GroupElement<Scalar> cartan_theta(const GroupElement<Scalar>& g) {
  const MatrixX<Scalar> e = eta<Scalar>(g.dim());
  return GroupElement<Scalar>(e * g.matrix * e);
}

// sigma = conjugation by diag(-1, 1, ..., 1): +1 on the stabilizer H of the
// base point, -1 on its complement Q (first row and column).
template <typename Scalar>
LieElement<Scalar> sigma(const LieElement<Scalar>& X) {
  MatrixX<Scalar> m = X.matrix;
  m.row(kU) *= Scalar(-1);
  m.col(kU) *= Scalar(-1);
  return LieElement<Scalar>(m);
}

template <typename Scalar>
struct SigmaParts {
  LieElement<Scalar> h;
  LieElement<Scalar> q;
};

template <typename Scalar>
SigmaParts<Scalar> sigma_split(const LieElement<Scalar>& X) {
  // Split by support instead of (X +- sigma X)/2 so integer matrices stay exact.
  MatrixX<Scalar> q = MatrixX<Scalar>::Zero(X.size(), X.size());
  q.row(kU) = X.matrix.row(kU);
  q.col(kU) = X.matrix.col(kU);
  return {LieElement<Scalar>(X.matrix - q), LieElement<Scalar>(q)};
}

// ---------------------------------------------------------------------------
// The named generators.  Index ranges follow the docs: the families W, Y, V, X
// and the rotations D live on the extra coordinates x_4..x_l and are empty
// for l = 3.

template <typename Scalar>
struct GeneratorSet {
  int l = 0;
  LieElement<Scalar> J1, J2;      // the abelian pair A
  LieElement<Scalar> M, L, N, F;  // root vectors for (+-1, +-1)
  LieElement<Scalar> E;           // q0 + q2, nilpotent, E^3 = 0
  LieElement<Scalar> k0;          // generator of the SO(2) factor of K (= q0)
  std::vector<LieElement<Scalar>> q;           // q0 .. qn
  std::vector<LieElement<Scalar>> W, Y, V, X;  // one per extra coordinate
  std::vector<LieElement<Scalar>> D;           // rotations among extra coordinates

  // Every generator with a printable name, in a fixed order.
  std::vector<std::pair<std::string, LieElement<Scalar>>> named() const {
    std::vector<std::pair<std::string, LieElement<Scalar>>> out{
        {"J1", J1}, {"J2", J2}, {"M", M}, {"L", L}, {"N", N}, {"F", F}, {"E", E}, {"k0", k0}};
    for (std::size_t i = 0; i < q.size(); ++i) out.emplace_back("q" + std::to_string(i), q[i]);
    // Names use the 1-based matrix index of the extra coordinate: 5 .. n+2.
    for (std::size_t i = 0; i < W.size(); ++i) {
      const std::string idx = std::to_string(i + 5);
      out.emplace_back("W" + idx, W[i]);
      out.emplace_back("Y" + idx, Y[i]);
      out.emplace_back("V" + idx, V[i]);
      out.emplace_back("X" + idx, X[i]);
    }
    for (std::size_t i = 0; i < D.size(); ++i) out.emplace_back("D" + std::to_string(i), D[i]);
    return out;
  }
};

template <typename Scalar = double>
GeneratorSet<Scalar> generators(int l) {
  if (l < 2) throw DomainError("AdS dimension must be at least 2");
  if (l < 3)
    throw DomainError(
        "the rank-two generator set needs l >= 3; AdS_2 is handled by the adjoint-orbit model");
  using detail::E1;
  const int N = l + 1;
  GeneratorSet<Scalar> g;
  g.l = l;
  using LE = LieElement<Scalar>;

  g.q.push_back(LE(E1<Scalar>(N, 1, 2) - E1<Scalar>(N, 2, 1)));
  for (int i = 1; i <= l - 1; ++i)
    g.q.push_back(LE(E1<Scalar>(N, 1, 2 + i) + E1<Scalar>(N, 2 + i, 1)));

  g.J1 = LE(E1<Scalar>(N, 2, 4) + E1<Scalar>(N, 4, 2));
  g.J2 = g.q[1];
  g.k0 = g.q[0];
  g.E = g.q[0] + g.q[2];

  g.M = LE(detail::block4<Scalar>(N, {0, 1, 0, -1, -1, 0, 1, 0, 0, 1, 0, -1, -1, 0, 1, 0}));
  g.L = LE(detail::block4<Scalar>(N, {0, 1, 0, -1, -1, 0, -1, 0, 0, -1, 0, 1, -1, 0, -1, 0}));
  g.N = LE(detail::block4<Scalar>(N, {0, 1, 0, 1, -1, 0, 1, 0, 0, 1, 0, 1, 1, 0, -1, 0}));
  g.F = LE(detail::block4<Scalar>(N, {0, 1, 0, 1, -1, 0, -1, 0, 0, -1, 0, -1, 1, 0, 1, 0}));

  for (int i = 5; i <= N; ++i) {
    g.W.push_back(LE(E1<Scalar>(N, 2, i) + E1<Scalar>(N, 4, i) + E1<Scalar>(N, i, 2) -
                     E1<Scalar>(N, i, 4)));
    g.Y.push_back(LE(-E1<Scalar>(N, 2, i) + E1<Scalar>(N, 4, i) - E1<Scalar>(N, i, 2) -
                     E1<Scalar>(N, i, 4)));
    g.V.push_back(LE(E1<Scalar>(N, 1, i) + E1<Scalar>(N, 3, i) + E1<Scalar>(N, i, 1) -
                     E1<Scalar>(N, i, 3)));
    g.X.push_back(LE(-E1<Scalar>(N, 1, i) + E1<Scalar>(N, 3, i) - E1<Scalar>(N, i, 1) -
                     E1<Scalar>(N, i, 3)));
  }
  for (int i = 5; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      g.D.push_back(LE(E1<Scalar>(N, i, j) - E1<Scalar>(N, j, i)));
  return g;
}

// ---------------------------------------------------------------------------
// Root labels: [A1, X] = a X and [A2, X] = b X with (A1, A2) = (J1, J2).

struct RootLabel {
  int a = 0;
  int b = 0;
  bool operator==(const RootLabel&) const = default;
};

template <typename Scalar>
std::optional<RootLabel> root_label(const LieElement<Scalar>& X, double tol = 1e-9) {
  using Md = MatrixX<double>;
  const Md x = X.matrix.template cast<double>();
  const double nx = x.norm();
  if (nx == 0.0) return std::nullopt;
  const GeneratorSet<double> g = generators<double>(X.dim());
  int label[2];
  const Md* A[2] = {&g.J1.matrix, &g.J2.matrix};
  for (int k = 0; k < 2; ++k) {
    const Md c = (*A[k]) * x - x * (*A[k]);
    const double lambda = (c.array() * x.array()).sum() / (nx * nx);
    if ((c - lambda * x).norm() > tol * nx) return std::nullopt;
    const double r = std::round(lambda);
    if (std::abs(lambda - r) > tol || std::abs(r) > 1) return std::nullopt;
    label[k] = int(r);
  }
  return RootLabel{label[0], label[1]};
}

// ---------------------------------------------------------------------------
// A matrix Lie algebra given by a basis.  Each basis element owns a pivot
// entry where it is +-1 and every other basis element vanishes, so
// coordinates are read off directly and stay exact for integer scalars.

template <typename Scalar>
class MatrixLieAlgebra {
 public:
  MatrixLieAlgebra(std::vector<MatrixX<Scalar>> basis, std::vector<std::pair<int, int>> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {
    const int d = dimension();
    gram_.resize(d, d);
    std::vector<MatrixX<Scalar>> ads;
    ads.reserve(d);
    for (const auto& b : basis_) ads.push_back(adjoint(b));
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) gram_(i, j) = gram_(j, i) = (ads[i] * ads[j]).trace();
  }

  int dimension() const { return int(basis_.size()); }
  int matrix_size() const { return basis_.empty() ? 0 : int(basis_[0].rows()); }
  const std::vector<MatrixX<Scalar>>& basis() const { return basis_; }

  VectorX<Scalar> coordinates(const MatrixX<Scalar>& X) const {
    if (X.rows() != matrix_size()) throw DimensionMismatch("element does not fit the algebra");
    VectorX<Scalar> c(dimension());
    for (int i = 0; i < dimension(); ++i) {
      const auto [r, k] = pivots_[i];
      c(i) = X(r, k) / basis_[i](r, k);
    }
    return c;
  }

  MatrixX<Scalar> element(const VectorX<Scalar>& c) const {
    MatrixX<Scalar> X = MatrixX<Scalar>::Zero(matrix_size(), matrix_size());
    for (int i = 0; i < dimension(); ++i) X += c(i) * basis_[i];
    return X;
  }

  // Column j holds the coordinates of [X, b_j].
  MatrixX<Scalar> adjoint(const MatrixX<Scalar>& X) const {
    MatrixX<Scalar> ad(dimension(), dimension());
    for (int j = 0; j < dimension(); ++j)
      ad.col(j) = coordinates(X * basis_[j] - basis_[j] * X);
    return ad;
  }

  // tr(ad X ad Y), through the cached Gram matrix of the basis.
  Scalar killing(const MatrixX<Scalar>& X, const MatrixX<Scalar>& Y) const {
    return coordinates(X).dot(gram_ * coordinates(Y));
  }

  // The same value traced directly, kept as an independent route.
  Scalar killing_traced(const MatrixX<Scalar>& X, const MatrixX<Scalar>& Y) const {
    return (adjoint(X) * adjoint(Y)).trace();
  }

  const MatrixX<Scalar>& killing_gram() const { return gram_; }

 private:
  std::vector<MatrixX<Scalar>> basis_;
  std::vector<std::pair<int, int>> pivots_;
  MatrixX<Scalar> gram_;
};

// Basis of so(2,n): q0, the Q boosts q1..qn, then H (t-boosts, then
// rotations among the spatial coordinates).
template <typename Scalar = double>
MatrixLieAlgebra<Scalar> so2n_algebra(int l) {
  if (l < 2) throw DomainError("AdS dimension must be at least 2");
  const int N = l + 1;
  using detail::unit;
  std::vector<MatrixX<Scalar>> basis;
  std::vector<std::pair<int, int>> pivots;
  basis.push_back(unit<Scalar>(N, 0, 1) - unit<Scalar>(N, 1, 0));
  pivots.emplace_back(0, 1);
  for (int j = 2; j < N; ++j) {
    basis.push_back(unit<Scalar>(N, 0, j) + unit<Scalar>(N, j, 0));
    pivots.emplace_back(0, j);
  }
  for (int j = 2; j < N; ++j) {
    basis.push_back(unit<Scalar>(N, 1, j) + unit<Scalar>(N, j, 1));
    pivots.emplace_back(1, j);
  }
  for (int i = 2; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      basis.push_back(unit<Scalar>(N, i, j) - unit<Scalar>(N, j, i));
      pivots.emplace_back(i, j);
    }
  return MatrixLieAlgebra<Scalar>(std::move(basis), std::move(pivots));
}

// sl2 generators H, E, F and T = E - F.
template <typename Scalar = double>
struct Sl2Basis {
  Eigen::Matrix<Scalar, 2, 2> H, E, F, T;
};

template <typename Scalar = double>
Sl2Basis<Scalar> sl2_basis() {
  Sl2Basis<Scalar> b;
  b.H << 1, 0, 0, -1;
  b.E << 0, 1, 0, 0;
  b.F << 0, 0, 1, 0;
  b.T = b.E - b.F;
  return b;
}

template <typename Scalar = double>
MatrixLieAlgebra<Scalar> sl2_algebra() {
  const auto b = sl2_basis<Scalar>();
  return MatrixLieAlgebra<Scalar>({b.H, b.E, b.F}, {{0, 0}, {0, 1}, {1, 0}});
}

// Killing form of so(2,n) on two elements of the same size.
template <typename Scalar>
Scalar killing(const LieElement<Scalar>& X, const LieElement<Scalar>& Y) {
  detail::require_same(X.size(), Y.size());
  return so2n_algebra<Scalar>(X.dim()).killing_traced(X.matrix, Y.matrix);
}

// ---------------------------------------------------------------------------
// Exponential.

namespace detail {

// Smallest d with A^d = 0, if any.  Integer-valued matrices are tested
// exactly; otherwise a power counts as zero below 1e-13 (relative).
template <typename Scalar>
std::optional<int> nilpotency_degree(const MatrixX<Scalar>& A) {
  const int n = int(A.rows());
  bool integral = true;
  if constexpr (!std::is_integral_v<Scalar>)
    integral = (A.array() == A.array().round()).all();
  const double scale = std::max(1.0, double(A.cwiseAbs().maxCoeff()));
  MatrixX<Scalar> P = A;
  for (int d = 1; d <= n; ++d) {
    const double m = double(P.cwiseAbs().maxCoeff());
    const bool zero = integral ? m == 0.0 : m < 1e-13 * std::pow(scale, d);
    if (zero) return d;
    P = P * A;
  }
  return std::nullopt;
}

}  // namespace detail

template <typename Scalar>
GroupElement<Scalar> mat_exp(const LieElement<Scalar>& X, Scalar s) {
  static_assert(std::is_floating_point_v<Scalar>, "mat_exp needs a floating-point scalar");
  const int n = X.size();
  if (auto d = detail::nilpotency_degree<Scalar>(X.matrix)) {
    // Finite sum; s is applied per term so integer generators stay exact.
    MatrixX<Scalar> out = MatrixX<Scalar>::Identity(n, n);
    MatrixX<Scalar> term = MatrixX<Scalar>::Identity(n, n);
    for (int k = 1; k < *d; ++k) {
      term = (term * X.matrix) * (s / Scalar(k));
      out += term;
    }
    return GroupElement<Scalar>(out);
  }
  const MatrixX<Scalar> A = s * X.matrix;
  return GroupElement<Scalar>(A.exp());
}

}  // namespace adsbh
