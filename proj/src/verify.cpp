#include "adsbh/verify.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "adsbh/ads2.hpp"
#include "adsbh/btz_sl2.hpp"
#include "adsbh/causal.hpp"
#include "adsbh/sampling.hpp"

namespace adsbh {

Suite parse_suite(const std::string& name) {
  static const std::map<std::string, Suite> names{{"algebra", Suite::Algebra},
                                                  {"orbits", Suite::Orbits},
                                                  {"causal", Suite::Causal},
                                                  {"btz", Suite::Btz},
                                                  {"ads2", Suite::Ads2},
                                                  {"all", Suite::All}};
  const auto it = names.find(name);
  if (it == names.end()) throw DomainError("unknown suite: " + name);
  return it->second;
}

const char* to_string(Suite s) {
  switch (s) {
    case Suite::Algebra: return "algebra";
    case Suite::Orbits: return "orbits";
    case Suite::Causal: return "causal";
    case Suite::Btz: return "btz";
    case Suite::Ads2: return "ads2";
    case Suite::All: return "all";
  }
  return "?";
}

int SuiteReport::passed() const {
  int n = 0;
  for (const auto& c : checks) n += c.passed;
  return n;
}

int SuiteReport::failed() const { return int(checks.size()) - passed(); }

namespace {

class Check {
 public:
  explicit Check(std::string name) { r_.name = std::move(name); }

  // `describe` is only called for the first failure.
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++r_.cases;
    if (ok || !r_.passed) {
      if (!ok) r_.passed = false;
      return;
    }
    r_.passed = false;
    r_.counterexample = describe();
  }

  CheckResult result() const { return r_; }

 private:
  CheckResult r_;
};

std::string vec_str(const Eigen::VectorXd& v) {
  std::ostringstream os;
  os.precision(17);
  os << "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
  os << "]";
  return os.str();
}

std::string point_str(int l, const Eigen::VectorXd& p) {
  return "{\"dim\":" + std::to_string(l) + ",\"point\":" + vec_str(p) + "}";
}

// ---------------------------------------------------------------------------

SuiteReport algebra_suite(std::uint64_t seed) {
  Rng rng(seed);
  Check valid("generators satisfy the defining relation");
  Check jacobi("Jacobi identity on generator triples");
  Check labels("root labels match the table");
  Check orth("root spaces are Killing-orthogonal unless labels cancel");
  Check split("[H,H] in H, [H,Q] in Q, [Q,Q] in H");
  Check commute("theta sigma = sigma theta");
  Check nbar("theta maps N onto N-bar");
  Check nil("E^3 = 0 exactly and (Ad(k)E)^3 = 0");
  Check nullgen("Ad(k)E equals the null generator of w = k e_2");

  const std::map<std::string, RootLabel> table{{"M", {1, 1}}, {"L", {1, -1}}, {"N", {-1, 1}},
                                               {"F", {-1, -1}}, {"W", {1, 0}}, {"Y", {-1, 0}},
                                               {"V", {0, 1}},  {"X", {0, -1}}, {"J", {0, 0}},
                                               {"D", {0, 0}}};
  for (int l = 3; l <= 8; ++l) {
    const auto g = generators<double>(l);
    const auto named = g.named();
    for (const auto& [name, X] : named)
      valid.expect(is_valid(X), [&] { return "l=" + std::to_string(l) + " " + name; });

    for (int k = 0; k < 100; ++k) {
      const auto& A = named[std::size_t(rng.uniform() * named.size())].second;
      const auto& B = named[std::size_t(rng.uniform() * named.size())].second;
      const auto& C = named[std::size_t(rng.uniform() * named.size())].second;
      const double r = (bracket(A, bracket(B, C)) + bracket(B, bracket(C, A)) + bracket(C, bracket(A, B)))
                           .matrix.cwiseAbs()
                           .maxCoeff();
      jacobi.expect(r < 1e-12, [&] { return "l=" + std::to_string(l) + " residual " + std::to_string(r); });
    }

    // Labelled generators (q_i, E, k0 are not root vectors).
    std::vector<std::pair<std::string, LieElement<double>>> rooted;
    for (const auto& [name, X] : named) {
      const auto it = table.find(name.substr(0, 1));
      if (it == table.end()) continue;
      rooted.emplace_back(name, X);
      const auto lab = root_label(X);
      labels.expect(lab && *lab == it->second, [&] { return "l=" + std::to_string(l) + " " + name; });
    }
    const auto alg = so2n_algebra<double>(l);
    for (const auto& [n1, X] : rooted)
      for (const auto& [n2, Y] : rooted) {
        const RootLabel a = table.at(n1.substr(0, 1)), b = table.at(n2.substr(0, 1));
        if (a.a + b.a == 0 && a.b + b.b == 0) continue;
        const double k = alg.killing(X.matrix, Y.matrix);
        orth.expect(std::abs(k) < 1e-9, [&] { return "l=" + std::to_string(l) + " " + n1 + "," + n2; });
      }

    for (const auto& b1 : alg.basis())
      for (const auto& b2 : alg.basis()) {
        const auto s1 = sigma_split(LieElement<double>(b1));
        const auto s2 = sigma_split(LieElement<double>(b2));
        const auto hh = sigma_split(bracket(s1.h, s2.h));
        const auto hq = sigma_split(bracket(s1.h, s2.q));
        const auto qq = sigma_split(bracket(s1.q, s2.q));
        const double r = std::max({hh.q.matrix.cwiseAbs().maxCoeff(), hq.h.matrix.cwiseAbs().maxCoeff(),
                                   qq.q.matrix.cwiseAbs().maxCoeff()});
        split.expect(r < 1e-12, [&] { return "l=" + std::to_string(l); });
      }
    for (const auto& b : alg.basis()) {
      const LieElement<double> X(b);
      const double r = (cartan_theta(sigma(X)) - sigma(cartan_theta(X))).matrix.cwiseAbs().maxCoeff();
      commute.expect(r == 0.0, [&] { return "l=" + std::to_string(l); });
    }

    {
      auto stack = [&](const std::vector<LieElement<double>>& xs) {
        Eigen::MatrixXd m(alg.dimension(), xs.size());
        for (std::size_t j = 0; j < xs.size(); ++j) m.col(j) = alg.coordinates(xs[j].matrix);
        return m;
      };
      std::vector<LieElement<double>> thn{cartan_theta(g.M), cartan_theta(g.L)};
      std::vector<LieElement<double>> nb{g.N, g.F};
      for (std::size_t i = 0; i < g.V.size(); ++i) {
        thn.push_back(cartan_theta(g.V[i]));
        thn.push_back(cartan_theta(g.W[i]));
        nb.push_back(g.X[i]);
        nb.push_back(g.Y[i]);
      }
      const Eigen::MatrixXd A = stack(thn), B = stack(nb);
      Eigen::MatrixXd AB(A.rows(), A.cols() + B.cols());
      AB << A, B;
      const int ra = numerical_rank(A), rb = numerical_rank(B), rab = numerical_rank(AB);
      nbar.expect(ra == rb && rab == ra, [&] { return "l=" + std::to_string(l); });
    }

    {
      const auto gi = generators<int>(l);
      const Eigen::MatrixXi e3 = gi.E.matrix * gi.E.matrix * gi.E.matrix;
      nil.expect(e3.isZero(0), [&] { return "E^3 != 0 at l=" + std::to_string(l); });
      for (int k = 0; k < 100; ++k) {
        Eigen::MatrixXd K = Eigen::MatrixXd::Identity(l + 1, l + 1);
        K.bottomRightCorner(l - 1, l - 1) = random_rotation(l - 1, rng);
        const Eigen::MatrixXd AdE = K * g.E.matrix * K.transpose();
        const double c = (AdE * AdE * AdE).cwiseAbs().maxCoeff();
        nil.expect(c < 1e-12, [&] { return "l=" + std::to_string(l) + " cube " + std::to_string(c); });
        const Direction w(Eigen::VectorXd(K.bottomRightCorner(l - 1, l - 1).col(1)));
        const double d = (null_direction_generator(w).matrix - AdE).cwiseAbs().maxCoeff();
        nullgen.expect(d < 1e-12, [&] { return "l=" + std::to_string(l) + " w=" + vec_str(w.w); });
      }
    }
  }
  return {"algebra",
          {valid.result(), jacobi.result(), labels.result(), orth.result(), split.result(),
           commute.result(), nbar.result(), nil.result(), nullgen.result()}};
}

// ---------------------------------------------------------------------------

SuiteReport orbits_suite(std::uint64_t seed) {
  Rng rng(seed);
  Check rank("closed-orbit rank test agrees with |t -+ y| < 1e-9");
  Check gen("fundamental fields match their closed forms");
  Check tangent("fundamental fields are tangent");
  Check pairing("pairing-matrix rank agrees with orbit openness");
  Check j1("|J1*|^2 = t^2 - y^2");

  for (int l = 3; l <= 6; ++l) {
    const auto alg = so2n_algebra<double>(l);
    const auto gens = generators<double>(l);
    for (int i = 0; i < 400; ++i) {
      AdSPoint p = i % 4 == 0   ? random_singular_point(l, Subgroup::AN, rng)
                   : i % 4 == 1 ? random_singular_point(l, Subgroup::ANbar, rng)
                                : random_point(l, rng);
      for (Subgroup s : {Subgroup::AN, Subgroup::ANbar}) {
        const double c = s == Subgroup::AN ? p.y() - p.t() : p.y() + p.t();
        const bool open = orbit_is_open(p, s);
        rank.expect(open == (std::abs(c) >= 1e-9), [&] { return point_str(l, p.coords); });
        if (i < 100) {
          const int r = numerical_rank(pairing_matrix(frame_completion(p), s, alg));
          pairing.expect((r < l) == !open, [&] { return point_str(l, p.coords); });
        }
      }
      const double jj = j1_norm_sq(p) - (p.t() * p.t() - p.y() * p.y());
      j1.expect(std::abs(jj) < 1e-12 * std::max(1.0, p.coords.squaredNorm()),
                [&] { return point_str(l, p.coords); });
      for (const auto& [name, X] : gens.named()) {
        const double tg = eta_inner(fundamental_field(X, p), p.coords);
        tangent.expect(std::abs(tg) < 1e-10 * std::max(1.0, p.coords.squaredNorm()),
                       [&] { return name + " " + point_str(l, p.coords); });
      }
      if (l <= 5) {
        const double u = p.u(), t = p.t(), x = p.x(), y = p.y();
        auto field = [&](const LieElement<double>& X) { return fundamental_field(X, p); };
        auto expect_eq = [&](const std::string& name, const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
          const double e = (a - b).cwiseAbs().maxCoeff();
          gen.expect(e < 1e-12 * std::max(1.0, p.coords.cwiseAbs().maxCoeff()),
                     [&] { return name + " " + point_str(l, p.coords); });
        };
        Eigen::VectorXd v = Eigen::VectorXd::Zero(l + 1);
        v(kT) = -y, v(kY) = -t;
        expect_eq("J1", field(gens.J1), v);
        v.setZero(), v(kU) = -x, v(kX) = -u;
        expect_eq("J2", field(gens.J2), v);
        v.setZero(), v(kU) = y - t, v(kT) = u - x, v(kX) = y - t, v(kY) = u - x;
        expect_eq("M", field(gens.M), v);
        v.setZero(), v(kU) = y - t, v(kT) = u + x, v(kX) = t - y, v(kY) = u + x;
        expect_eq("L", field(gens.L), v);
        for (std::size_t i2 = 0; i2 < gens.W.size(); ++i2) {
          const int j = kFirstExtra + int(i2);
          const double xj = p.coords(j);
          v.setZero(), v(kT) = -xj, v(kY) = -xj, v(j) = y - t;
          expect_eq("W", field(gens.W[i2]), v);
          v.setZero(), v(kU) = -xj, v(kX) = -xj, v(j) = x - u;
          expect_eq("V", field(gens.V[i2]), v);
        }
      }
    }
  }
  return {"orbits", {rank.result(), gen.result(), tangent.result(), pairing.result(), j1.result()}};
}

// ---------------------------------------------------------------------------

AdSPoint k_point(int l, double mu) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(l + 1);
  c(kU) = std::cos(mu);
  c(kT) = std::sin(mu);
  return AdSPoint(c);
}

SuiteReport causal_suite(std::uint64_t seed) {
  Rng rng(seed);
  Check frame("frame completion lifts points into SO(2,n)");
  Check kform("K-point hit times match sin mu / (cos mu -+ w_2)");
  Check hyper("null rays stay on the hyperboloid and are quadratic");
  Check dual("D-bar[g] equals the theta-flip of D[theta g]");
  Check kpart("K-circle: interior future iff cos mu > 0");
  Check robust("exterior witnesses escape");

  for (int l = 3; l <= 5; ++l) {
    for (int i = 0; i < 50; ++i) {
      const AdSPoint p = random_point(l, rng);
      const auto g = frame_completion(p);
      const double e = (g.matrix.col(0) - p.coords).cwiseAbs().maxCoeff();
      frame.expect(is_valid(g) && e < 1e-10, [&] { return point_str(l, p.coords); });

      const auto samples = direction_samples(l, 64, seed + i);
      const auto d1 = direction_sets(g, samples);
      std::vector<Direction> flipped;
      for (const auto& w : samples) flipped.push_back(theta_flip(w));
      const auto d2 = direction_sets(cartan_theta(g), flipped);
      dual.expect(d1.hits_ANbar == d2.hits_AN && d1.hits_AN == d2.hits_ANbar,
                  [&] { return point_str(l, p.coords); });

      const Direction w = samples[i % samples.size()];
      const AdSPoint r0 = ray_point(g, w, 0.0), r1 = ray_point(g, w, 1.0), r2 = ray_point(g, w, 2.0);
      for (double s : {-7.5, 3.25, 40.0}) {
        const AdSPoint r = ray_point(g, w, s);
        const Eigen::VectorXd quad = r0.coords + s * (r1.coords - r0.coords) +
                                     0.5 * s * (s - 1) * (r2.coords - 2 * r1.coords + r0.coords);
        const double sc = std::max(1.0, r.coords.cwiseAbs().maxCoeff());
        hyper.expect(std::abs(hyperboloid_residual(r)) < 1e-10 * sc * sc &&
                         (quad - r.coords).cwiseAbs().maxCoeff() < 1e-11 * sc,
                     [&] { return point_str(l, p.coords) + " s=" + std::to_string(s); });
      }
      const auto rep = classify(p, {128, seed});
      if (rep.cls == CausalClass::Exterior)
        robust.expect(rep.witness && !hit_times(g, *rep.witness).future_hit(),
                      [&] { return point_str(l, p.coords); });
    }
    for (int a = 0; a < 20; ++a) {
      const double mu = 0.1 + a * (3.04 - 0.1) / 19;
      const AdSPoint p = k_point(l, mu);
      const auto g = frame_completion(p);
      for (int b = 0; b < 20; ++b) {
        const double w2 = -0.99 + b * 1.98 / 19;
        Eigen::VectorXd w = Eigen::VectorXd::Zero(l - 1);
        w(0) = std::sqrt(1 - w2 * w2);
        w(1) = w2;
        const HitTimes h = hit_times(g, Direction(w));
        const double an = std::sin(mu) / (std::cos(mu) - w2), abar = std::sin(mu) / (std::cos(mu) + w2);
        const bool ok = h.roots_AN.size() == 1 && h.roots_ANbar.size() == 1 &&
                        std::abs(h.roots_AN[0] - an) < 1e-10 * std::max(1.0, std::abs(an)) &&
                        std::abs(h.roots_ANbar[0] - abar) < 1e-10 * std::max(1.0, std::abs(abar));
        kform.expect(ok, [&] { return "mu=" + std::to_string(mu) + " w2=" + std::to_string(w2); });
      }
      const double c = std::cos(mu);
      if (std::abs(c) > 1e-3) {
        const auto cls = classify(p, {128, seed}).cls;
        kpart.expect((cls == CausalClass::InteriorFuture) == (c > 0),
                     [&] { return "l=" + std::to_string(l) + " mu=" + std::to_string(mu); });
      }
    }
  }
  return {"causal", {frame.result(), kform.result(), hyper.result(), dual.result(), kpart.result(),
                     robust.result()}};
}

// ---------------------------------------------------------------------------

SuiteReport btz_suite(std::uint64_t seed) {
  Rng rng(seed);
  Check horizon("cos tau = +-tanh rho gives u^2 = x^2");
  Check xi("|Xi|^2 = 32 a^2 (t^2 - y^2)");
  Check group("BHTZ action is a one-parameter group; theta shifts by 2a");
  Check roots("quadratic roots satisfy the product and sum identities");
  Check beta("interior_beta_test is true exactly on (pi, 2pi)");
  Check relabel("A-conjugation relabels light rays with the same sign");
  Check bracket("general pipeline horizon brackets the closed form");

  const BHTZParams P(0.7);
  for (int i = 0; i < 200; ++i) {
    const double rho = rng.uniform(-3, 3);
    for (int br : {1, -1}) {
      const AdSPoint p = btz_horizon_point(rho, br);
      horizon.expect(std::abs(p.u() * p.u() - p.x() * p.x()) < 1e-8,
                     [&] { return "rho=" + std::to_string(rho); });
    }
    const AdSPoint p = random_point(3, rng);
    const SL2Element g = embed(p);
    const double r = xi_norm_sq(P, g) - 32 * P.a * P.a * (p.t() * p.t() - p.y() * p.y());
    xi.expect(std::abs(r) < 1e-8 * std::max(1.0, p.coords.squaredNorm()), [&] { return point_str(3, p.coords); });

    const double s1 = rng.uniform(-1, 1), s2 = rng.uniform(-1, 1);
    const double d = (bhtz_apply(P, s1, bhtz_apply(P, s2, g)) - bhtz_apply(P, s1 + s2, g)).cwiseAbs().maxCoeff();
    const GlobalCoords c{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(0.1, 3.0)};
    const double d2 = (global_coords_to_group({c.rho, c.theta + 2 * P.a, c.tau}) -
                       bhtz_apply(P, 1.0, global_coords_to_group(c)))
                          .cwiseAbs()
                          .maxCoeff();
    group.expect(d < 1e-10 * g.squaredNorm() && d2 < 1e-10 * std::exp(2 * std::abs(c.rho) + 4 * P.a),
                 [&] { return point_str(3, p.coords); });

    const double a = rng.uniform(-1, 1), th = rng.uniform(0, std::numbers::pi), s = rng.uniform(-3, 3);
    const Relabeled rl = relabel_light_ray(a, th, s);
    const auto b = sl2_basis<double>();
    const Eigen::Matrix2d A = sl2_exp(-a * b.H);
    const Eigen::Matrix2d lhs = A * light_ray_sl2(Eigen::Matrix2d::Identity(), th, s) * A.inverse();
    const Eigen::Matrix2d rhs = light_ray_sl2(Eigen::Matrix2d::Identity(), rl.k_angle, rl.s);
    relabel.expect((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9 * std::max(1.0, std::abs(rl.s)) &&
                       (rl.s > 0) == (s > 0),
                   [&] { return "a=" + std::to_string(a) + " theta=" + std::to_string(th); });
  }
  for (int i = 1; i < 100; ++i)
    for (int j = 0; j < 100; ++j) {
      const double bt = 2 * std::numbers::pi * i / 100, th = std::numbers::pi * j / 100;
      const double D = std::sin(2 * th) * std::sin(bt + 2 * th);
      if (std::abs(D) < 1e-3) continue;
      const EquRoots r = equ_roots(bt, th);
      if (!r.s1 || !r.s2) continue;
      const bool ok = std::abs(*r.s1 * *r.s2 - equ_root_product(bt, th)) < 1e-9 &&
                      std::abs(*r.s1 + *r.s2 - equ_root_sum(bt, th)) < 1e-9;
      roots.expect(ok, [&] { return "beta=" + std::to_string(bt) + " theta=" + std::to_string(th); });
    }
  for (int i = 1; i < 200; ++i) {
    const double bt = 2 * std::numbers::pi * i / 200;
    if (std::abs(bt - std::numbers::pi) < 1e-6) continue;
    beta.expect(interior_beta_test(bt) == (bt > std::numbers::pi), [&] { return "beta=" + std::to_string(bt); });
  }
  for (int i = 0; i < 10; ++i) {
    const double rho = rng.uniform(0.3, 2.0) * (i % 2 ? 1 : -1);
    const int br = i % 4 < 2 ? 1 : -1;
    const AdSPoint h = btz_horizon_point(rho, br);
    const Eigen::Vector4d grad(2 * h.u(), 0, -2 * h.x(), 0);
    Eigen::Vector4d n = grad - (eta_inner(grad, h.coords) / eta_inner(h.coords, h.coords)) * h.coords;
    n /= n.norm();
    const AdSPoint a = normalized(h.coords + 1e-3 * n), bpt = normalized(h.coords - 1e-3 * n);
    const auto ca = classify(a, {64, seed}).cls, cb = classify(bpt, {64, seed}).cls;
    const bool a_in = ca == CausalClass::InteriorFuture || ca == CausalClass::InteriorPast;
    const bool b_in = cb == CausalClass::InteriorFuture || cb == CausalClass::InteriorPast;
    bool ok = a_in != b_in;
    if (ok) {
      const auto hb = horizon_bracket(a_in ? a : bpt, a_in ? bpt : a, {30, {64, seed}});
      ok = (hb.midpoint.coords - h.coords).cwiseAbs().maxCoeff() < 1e-4;
    }
    bracket.expect(ok, [&] { return "rho=" + std::to_string(rho) + " branch=" + std::to_string(br); });
  }
  return {"btz", {horizon.result(), xi.result(), group.result(), roots.result(), beta.result(),
                  relabel.result(), bracket.result()}};
}

// ---------------------------------------------------------------------------

SuiteReport ads2_suite(std::uint64_t seed) {
  Rng rng(seed);
  Check escapes("every light line meets both singular families");
  Check oracle("light lines match adjoint conjugation");
  Check killing("Killing matrix in {H, E+F, E-F} is diag(8, 8, -8)");
  Check inverse("physical_point inverts");

  for (std::uint64_t s : {seed, seed + 1, seed + 2}) {
    const auto rep = ads2_no_horizon(1000, s);
    escapes.expect(rep.ok(), [&] { return rep.witnesses.front(); });
  }
  const auto b = sl2_basis<double>();
  for (int i = 0; i < 500; ++i) {
    const double a = rng.uniform(-2, 2), k = rng.uniform(-3, 3), s = rng.uniform(-5, 5);
    const Eigen::Matrix2d g = sl2_exp(a * b.H) * sl2_exp(k * b.T);
    for (LightBranch br : {LightBranch::E, LightBranch::F}) {
      const Eigen::Matrix2d X = b.H - 2 * s * (br == LightBranch::E ? b.E : b.F);
      const Eigen::Vector3d want = AdjointPoint::from_matrix(g * X * g.inverse()).vec();
      const double e = (ads2_light_line(a, k, br, s).vec() - want).cwiseAbs().maxCoeff();
      oracle.expect(e < 1e-10 * std::max(1.0, want.cwiseAbs().maxCoeff()),
                    [&] { return "a=" + std::to_string(a) + " k=" + std::to_string(k); });
    }
    const double beta = rng.uniform(0.01, 3.13);
    const PhysicalParams pp = physical_params(physical_point(a, beta));
    inverse.expect(std::abs(pp.a - a) < 1e-9 && std::abs(pp.beta - beta) < 1e-9,
                   [&] { return "a=" + std::to_string(a) + " beta=" + std::to_string(beta); });
  }
  const auto alg = sl2_algebra<int>();
  const auto bi = sl2_basis<int>();
  const Eigen::Matrix2i basis3[3] = {bi.H, bi.E + bi.F, bi.E - bi.F};
  Eigen::Matrix3i K;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) K(i, j) = alg.killing(basis3[i], basis3[j]);
  killing.expect(K == Eigen::Vector3i(8, 8, -8).asDiagonal().toDenseMatrix(), [] { return std::string("sl2"); });
  return {"ads2", {escapes.result(), oracle.result(), killing.result(), inverse.result()}};
}

}  // namespace

std::vector<SuiteReport> run_verification(Suite suite, std::uint64_t seed) {
  std::vector<SuiteReport> out;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Algebra) out.push_back(algebra_suite(seed));
  if (all || suite == Suite::Orbits) out.push_back(orbits_suite(seed));
  if (all || suite == Suite::Causal) out.push_back(causal_suite(seed));
  if (all || suite == Suite::Btz) out.push_back(btz_suite(seed));
  if (all || suite == Suite::Ads2) out.push_back(ads2_suite(seed));
  return out;
}

}  // namespace adsbh
