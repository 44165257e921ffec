#include "adsbh/causal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "adsbh/sampling.hpp"

namespace adsbh {

Direction::Direction(Eigen::VectorXd v) : w(std::move(v)) {
  if (w.size() < 1 || std::abs(w.squaredNorm() - 1.0) > 1e-12)
    throw DomainError("direction must be a unit vector");
}

LieElement<double> null_direction_generator(const Direction& w) {
  const int n = int(w.w.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n + 2, n + 2);
  m(0, 1) = 1.0;
  m(1, 0) = -1.0;
  for (int j = 0; j < n; ++j) m(0, 2 + j) = m(2 + j, 0) = w.w(j);
  return LieElement<double>(m);
}

LieElement<double> future_null_generator(const Direction& w) {
  return cartan_theta(null_direction_generator(w));
}

namespace {

// base + s * tangent, tangent = theta(X_w) base = (0, -1, -w).
Eigen::VectorXd ray_tangent(const Direction& w) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(w.w.size() + 2);
  v(kT) = -1.0;
  v.tail(w.w.size()) = -w.w;
  return v;
}

void require_fit(const GroupElement<double>& g, const Direction& w) {
  if (w.w.size() + 2 != g.size()) throw DimensionMismatch("direction does not match the dimension");
}

}  // namespace

AdSPoint ray_point(const GroupElement<double>& g, const Direction& w, double s) {
  require_fit(g, w);
  return AdSPoint(g.matrix * (mat_exp(future_null_generator(w), s).matrix.col(0)));
}

AdSPoint ray_point(const AdSPoint& p, const Direction& w, double s) {
  return ray_point(frame_completion(p), w, s);
}

RayPolynomials ray_polynomials(const GroupElement<double>& g, const Direction& w) {
  require_fit(g, w);
  const Eigen::VectorXd c0 = g.matrix.col(0);
  const Eigen::VectorXd c1 = g.matrix * ray_tangent(w);
  // theta(X_w)^2 base = (|w|^2 - 1) base, zero up to rounding.
  const Eigen::VectorXd c2 = 0.5 * (w.w.squaredNorm() - 1.0) * c0;
  RayPolynomials r;
  r.an << c0(kY) - c0(kT), c1(kY) - c1(kT), c2(kY) - c2(kT);
  r.anbar << c0(kY) + c0(kT), c1(kY) + c1(kT), c2(kY) + c2(kT);
  return r;
}

std::vector<double> real_roots(const Eigen::Vector3d& c) {
  const double scale = c.cwiseAbs().maxCoeff();
  std::vector<double> out;
  if (scale == 0.0) return out;
  const double a0 = c(0), a1 = c(1), a2 = c(2);
  if (std::abs(a2) <= 1e-14 * scale) {
    if (std::abs(a1) > 1e-14 * scale) out.push_back(-a0 / a1);
    return out;
  }
  const double disc = a1 * a1 - 4.0 * a2 * a0;
  if (disc < 0) return out;
  const double q = -0.5 * (a1 + std::copysign(std::sqrt(disc), a1));
  double r1 = q / a2;
  double r2 = q != 0.0 ? a0 / q : r1;
  if (r1 > r2) std::swap(r1, r2);
  out = {r1, r2};
  return out;
}

namespace {

bool identically_zero(const Eigen::Vector3d& c, double scale) {
  return c.cwiseAbs().maxCoeff() <= 1e-12 * scale;
}

bool any_root(const std::vector<double>& r, bool future) {
  return std::any_of(r.begin(), r.end(),
                     [&](double s) { return future ? s > kHitEpsilon : s < -kHitEpsilon; });
}

}  // namespace

bool HitTimes::future_hit_AN() const { return degenerate_AN || any_root(roots_AN, true); }
bool HitTimes::future_hit_ANbar() const { return degenerate_ANbar || any_root(roots_ANbar, true); }
bool HitTimes::past_hit_AN() const { return degenerate_AN || any_root(roots_AN, false); }
bool HitTimes::past_hit_ANbar() const { return degenerate_ANbar || any_root(roots_ANbar, false); }

HitTimes hit_times(const GroupElement<double>& g, const Direction& w) {
  const RayPolynomials r = ray_polynomials(g, w);
  const double scale = std::max(1.0, g.matrix.col(0).cwiseAbs().maxCoeff());
  HitTimes h;
  h.degenerate_AN = identically_zero(r.an, scale);
  h.degenerate_ANbar = identically_zero(r.anbar, scale);
  if (!h.degenerate_AN) h.roots_AN = real_roots(r.an);
  if (!h.degenerate_ANbar) h.roots_ANbar = real_roots(r.anbar);
  h.starts_on_AN = std::abs(r.an(0)) <= 1e-12 * scale;
  h.starts_on_ANbar = std::abs(r.anbar(0)) <= 1e-12 * scale;
  return h;
}

HitTimes hit_times(const AdSPoint& p, const Direction& w) {
  return hit_times(frame_completion(p), w);
}

std::vector<Direction> direction_samples(int l, int n_samples, std::uint64_t seed) {
  if (n_samples < 2) throw DomainError("need at least two direction samples");
  std::vector<Direction> out;
  for (auto& v : sphere_directions(l - 1, n_samples, seed)) out.emplace_back(std::move(v));
  return out;
}

DirectionMask direction_sets(const GroupElement<double>& g, const std::vector<Direction>& samples) {
  DirectionMask m;
  m.samples = samples;
  m.hits_AN.reserve(samples.size());
  m.hits_ANbar.reserve(samples.size());
  for (const auto& w : samples) {
    const HitTimes h = hit_times(g, w);
    m.hits_AN.push_back(h.future_hit_AN());
    m.hits_ANbar.push_back(h.future_hit_ANbar());
  }
  return m;
}

DirectionMask direction_sets(const AdSPoint& p, int n_samples, std::uint64_t seed) {
  return direction_sets(frame_completion(p), direction_samples(p.dim(), n_samples, seed));
}

Direction theta_flip(const Direction& w) { return Direction(-w.w); }

// ---------------------------------------------------------------------------

namespace {

// l(w) = alpha + d.w, positive iff the branch is hit in the future.
struct Linear {
  double alpha;
  Eigen::VectorXd d;
  double operator()(const Eigen::VectorXd& w) const { return alpha + d.dot(w); }
};

Linear branch_linear(const GroupElement<double>& g, double sgn) {
  const int n = g.size() - 2;
  const Eigen::MatrixXd& m = g.matrix;
  const double a0 = m(kY, 0) + sgn * m(kT, 0);
  // Slope of (y + sgn t) along the ray: -(g(.,1) + sum_j w_j g(.,2+j)).
  const double beta = -(m(kY, 1) + sgn * m(kT, 1));
  Eigen::VectorXd c(n);
  for (int j = 0; j < n; ++j) c(j) = -(m(kY, 2 + j) + sgn * m(kT, 2 + j));
  // Hit at s = -a0 / slope > 0  iff  -sign(a0) * slope > 0.
  const double f = a0 > 0 ? -1.0 : 1.0;
  return {f * beta, f * c};
}

Eigen::VectorXd any_unit(int n) { return Eigen::VectorXd::Unit(n, 0); }

// min over |w| = 1 of max(l1(w), l2(w)).
EscapeMargin minmax(const Linear& l1, const Linear& l2) {
  const int n = int(l1.d.size());
  std::vector<Eigen::VectorXd> cands;
  for (const Linear* f : {&l1, &l2}) {
    const double nd = f->d.norm();
    cands.push_back(nd > 0 ? Eigen::VectorXd(-f->d / nd) : any_unit(n));
  }
  // The tie set {l1 = l2} on the sphere: w0 + r v with v unit, v orthogonal to delta.
  const Eigen::VectorXd delta = l1.d - l2.d;
  const double nd2 = delta.squaredNorm();
  if (nd2 > 1e-28) {
    const Eigen::VectorXd w0 = (l2.alpha - l1.alpha) / nd2 * delta;
    const double r2 = 1.0 - w0.squaredNorm();
    if (r2 >= 0) {
      const double r = std::sqrt(r2);
      Eigen::VectorXd u = l1.d - l1.d.dot(delta) / nd2 * delta;
      if (u.norm() < 1e-14) {
        // l1 is constant on the tie set; any perpendicular unit vector works.
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(delta.transpose(), Eigen::ComputeFullV);
        u = n > 1 ? Eigen::VectorXd(svd.matrixV().col(1)) : Eigen::VectorXd::Zero(n);
      }
      if (u.norm() > 0) u.normalize();
      cands.push_back(w0 + r * u);
      cands.push_back(w0 - r * u);
    }
  }
  EscapeMargin best;
  best.value = std::numeric_limits<double>::infinity();
  for (auto& w : cands) {
    const double nw = w.norm();
    if (nw == 0) continue;
    w /= nw;
    const double v = std::max(l1(w), l2(w));
    if (v < best.value) {
      best.value = v;
      best.argmin.w = w;
    }
  }
  return best;
}

Linear negated(const Linear& f) { return {-f.alpha, -f.d}; }

}  // namespace

EscapeMargin future_escape_margin(const GroupElement<double>& g) {
  return minmax(branch_linear(g, -1.0), branch_linear(g, +1.0));
}

EscapeMargin past_escape_margin(const GroupElement<double>& g) {
  return minmax(negated(branch_linear(g, -1.0)), negated(branch_linear(g, +1.0)));
}

const char* to_string(CausalClass c) {
  switch (c) {
    case CausalClass::Singular: return "Singular";
    case CausalClass::InteriorFuture: return "InteriorFuture";
    case CausalClass::InteriorPast: return "InteriorPast";
    case CausalClass::Exterior: return "Exterior";
    case CausalClass::Horizon: return "Horizon";
  }
  return "?";
}

namespace {

bool escapes(const GroupElement<double>& g, const Eigen::VectorXd& w) {
  return !hit_times(g, Direction(w / w.norm())).future_hit();
}

// The witness must keep escaping when nudged along every tangent direction.
bool robust_escape(const GroupElement<double>& g, const Eigen::VectorXd& w, double eps) {
  if (!escapes(g, w)) return false;
  const int n = int(w.size());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(w.transpose(), Eigen::ComputeFullV);
  for (int k = 1; k < n; ++k) {
    const Eigen::VectorXd t = svd.matrixV().col(k);
    for (double sgn : {-1.0, 1.0})
      if (!escapes(g, w + sgn * eps * t)) return false;
  }
  return true;
}

}  // namespace

CausalReport classify(const AdSPoint& p, const ClassifyOptions& opts) {
  CausalReport rep;
  rep.branch = classify_singularity(p, opts.tol_sing);
  if (rep.branch != SingularityClass::Generic) {
    rep.cls = CausalClass::Singular;
    return rep;
  }
  const GroupElement<double> g = frame_completion(p);
  const auto samples = direction_samples(p.dim(), opts.n_samples, opts.seed);
  bool all_past = true;
  std::optional<Eigen::VectorXd> sampled_witness;
  for (const auto& w : samples) {
    const HitTimes h = hit_times(g, w);
    if (!h.future_hit()) {
      ++rep.sampled_future_escapes;
      if (!sampled_witness) sampled_witness = w.w;
    }
    if (!h.past_hit()) all_past = false;
  }
  const EscapeMargin fm = future_escape_margin(g);
  const EscapeMargin pm = past_escape_margin(g);
  rep.future_margin = fm.value;
  rep.past_margin = pm.value;

  if (rep.sampled_future_escapes == 0 && fm.value > 0) {
    rep.cls = CausalClass::InteriorFuture;
    return rep;
  }
  if (all_past && pm.value > 0) {
    rep.cls = CausalClass::InteriorPast;
    return rep;
  }
  rep.cls = CausalClass::Exterior;
  const Eigen::VectorXd w = sampled_witness ? *sampled_witness : fm.argmin.w;
  rep.witness = Direction(w / w.norm());
  rep.witness_robust = robust_escape(g, w, opts.witness_perturbation);
  return rep;
}

// ---------------------------------------------------------------------------

Curve chord_path(const AdSPoint& a, const AdSPoint& b) {
  if (a.coords.size() != b.coords.size()) throw DimensionMismatch("endpoints of different dimension");
  // The eta-norm of (1-s)a + s b is quadratic in s; check its minimum on [0,1].
  const double aa = -eta_inner(a.coords, a.coords);
  const double bb = -eta_inner(b.coords, b.coords);
  const double ab = -eta_inner(a.coords, b.coords);
  const double k2 = aa + bb - 2 * ab, k1 = 2 * (ab - aa);
  double lowest = std::min(aa, bb);
  if (k2 > 0) {
    const double s = -k1 / (2 * k2);
    if (s > 0 && s < 1) lowest = std::min(lowest, aa + k1 * s + k2 * s * s);
  }
  if (!(lowest > 1e-8)) throw DomainError("the chord between the endpoints leaves AdS");
  return [a, b](double s) { return normalized((1.0 - s) * a.coords + s * b.coords); };
}

namespace {

bool same_point(const AdSPoint& a, const AdSPoint& b) {
  return a.coords.size() == b.coords.size() && (a.coords - b.coords).cwiseAbs().maxCoeff() < 1e-15;
}

}  // namespace

HorizonBracket horizon_bracket(const AdSPoint& p_in, const AdSPoint& p_out,
                               const BisectOptions& opts, const Curve& path) {
  HorizonBracket b;
  if (same_point(p_in, p_out)) {
    b.inside = b.outside = b.midpoint = p_in;
    b.s_inside = b.s_outside = 0;
    return b;
  }
  ClassifyOptions reseeded = opts.classify;
  reseeded.seed = opts.classify.seed + 1;
  const CausalClass cin = classify(p_in, opts.classify).cls;
  const CausalClass cout = classify(p_out, opts.classify).cls;
  if (classify(p_in, reseeded).cls != cin || classify(p_out, reseeded).cls != cout) {
    std::ostringstream os;
    os << "endpoint classification changes between seeds " << opts.classify.seed << " and "
       << reseeded.seed;
    throw BisectionError(os.str());
  }
  if (cin != CausalClass::InteriorFuture && cin != CausalClass::InteriorPast)
    throw BisectionError(std::string("inner endpoint is not interior: ") + to_string(cin));
  if (cout == cin || cout == CausalClass::Singular)
    throw BisectionError(std::string("outer endpoint must lie outside that interior, got ") +
                         to_string(cout));
  const Curve curve = path ? path : chord_path(p_in, p_out);
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < opts.steps; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (classify(curve(mid), opts.classify).cls == cin)
      lo = mid;
    else
      hi = mid;
  }
  b.interior_kind = cin;
  b.s_inside = lo;
  b.s_outside = hi;
  b.inside = curve(lo);
  b.outside = curve(hi);
  b.midpoint = curve(0.5 * (lo + hi));
  return b;
}

AdSPoint horizon_bisect(const AdSPoint& p_in, const AdSPoint& p_out, const BisectOptions& opts,
                        const Curve& path) {
  return horizon_bracket(p_in, p_out, opts, path).midpoint;
}

AdSPoint cartan_image(const AdSPoint& p) {
  Eigen::VectorXd c = p.coords;
  c.tail(c.size() - 2) *= -1.0;
  return AdSPoint(c);
}

HorizonAngles horizon_angles(const AdSPoint& p) {
  const GroupElement<double> g = frame_completion(p);
  const IwasawaFactors f = ank_decompose(g);
  const IwasawaFactors fp = ank_decompose(cartan_theta(g));
  const int n = g.size() - 2;
  HorizonAngles h;
  h.mu = f.k_angle;
  h.mu_prime = fp.k_angle;
  h.cos_residual = std::cos(h.mu) + std::cos(h.mu_prime);
  const Eigen::VectorXd a = f.k.bottomRightCorner(n, n).row(kY - 2).transpose();
  const Eigen::VectorXd b = fp.k.bottomRightCorner(n, n).row(kY - 2).transpose();
  h.tangency_residual = a.dot(b) + std::cos(h.mu + h.mu_prime);
  return h;
}

bool horizon_theta_check(const AdSPoint& p, double tol) {
  return std::abs(horizon_angles(p).cos_residual) < tol;
}

}  // namespace adsbh
