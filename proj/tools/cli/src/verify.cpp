// Copyright 2026 The slicegeo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "slicegeo/cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <numbers>
#include <stdexcept>

#include "slicegeo/cli/generators.hpp"
#include "slicegeo/hmat.hpp"
#include "slicegeo/lie_structure.hpp"
#include "slicegeo/metrics.hpp"
#include "slicegeo/mobius.hpp"
#include "slicegeo/star_poly.hpp"

namespace slicegeo::cli {

namespace {

constexpr int kPairs = 4;  // tangent pairs per pullback sample

Quaternion m_t(double t, const Quaternion& q) {
  const double tau = std::tanh(t);
  return (1.0 + tau * q).inverse() * (q + tau);
}

// ---- mobius --------------------------------------------------------------

double anti_homomorphism(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const Sp11Element a = random_sp11(rng, 1.0);
    const Sp11Element b = random_sp11(rng, 1.0);
    const BallPoint q = rng.ball(0.7);
    const Quaternion lhs = classical_apply(a * b, q);
    const Quaternion rhs = classical_apply(b, classical_apply(a, q));
    worst = std::max(worst, max_abs_diff(lhs, rhs));
  }
  return worst;
}

double inverse_map(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const Sp11Element a = random_sp11(rng, 1.0);
    const BallPoint q = rng.ball(0.7);
    worst = std::max(worst, max_abs_diff(classical_apply(a.inverse(), classical_apply(a, q)), q));
  }
  return worst;
}

double coincidence(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const double a = rng.uniform(-0.9, 0.9);
    const UnitQuaternion u = rng.sphere3();
    const BallPoint q = rng.ball(0.8);
    const Sp11Element m = f_au_matrix(a, u);
    const Quaternion classical = classical_apply(m, q);
    worst = std::max(worst, max_abs_diff(classical, regular_apply(m, q)));
    worst = std::max(worst, max_abs_diff(classical, f_au(a, u, q)));
  }
  return worst;
}

// Smallest, over maps F_{M(a)} with |Im a| >= 0.1, of the largest
// regularity defect seen at 50 sample points.
double non_regular(Sampler& rng, int trials) {
  double weakest = INFINITY;
  for (int n = 0; n < trials; ++n) {
    const MobiusMap f(mobius_M(BallPoint(random_nonreal(rng, 0.1, 0.6))), MobiusKind::classical);
    double defect = 0.0;
    for (int k = 0; k < 50; ++k) {
      defect = std::max(defect, regularity_residual(f, rng.ball(0.6)));
    }
    weakest = std::min(weakest, defect);
  }
  return weakest;
}

double phi_double_coset(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const Sp11Element a = random_sp11(rng);
    const Sp11Element w = Sp11Element::trusted(QMat2::diag(rng.sphere3(), 1.0));
    const Sp11Element v = Sp11Element::trusted(QMat2::scalar(rng.sphere3()));
    worst = std::max(worst, max_abs_diff(quotient_point(w * a * v), quotient_point(a)));
  }
  return worst;
}

double phi_left_equivariance(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const Sp11Element a = random_sp11(rng);
    const UnitQuaternion u = rng.sphere3();
    const Sign eps = random_sign(rng);
    const Sp11Element left = Sp11Element::trusted(QMat2::diag(to_double(eps), u));
    const Quaternion p = quotient_point(a);
    worst = std::max(worst, max_abs_diff(quotient_point(left * a), u.value() * p * u.value().conj()));
  }
  return worst;
}

double phi_right_equivariance(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const Sp11Element a = random_sp11(rng);
    const double t = rng.uniform(-1.5, 1.5);
    const Sign eps = random_sign(rng);
    const Quaternion p = quotient_point(a);
    const Quaternion lhs = quotient_point(a * hyperbolic_rotation(t) * sign_flip(eps));
    worst = std::max(worst, max_abs_diff(lhs, to_double(eps) * m_t(t, p)));
  }
  return worst;
}

double phi_zero(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const Sp11Element a = random_sp11(rng);
    const BallPoint p = quotient_point(a);
    worst = std::max(worst, regular_apply(a.inverse(), p).value().norm());
    const BallPoint b = rng.ball(0.8);
    worst = std::max(worst, regular_apply(mobius_M(b), b).value().norm());
    worst = std::max(worst, max_abs_diff(quotient_point(mobius_M(b).inverse()), b));
  }
  return worst;
}

double root_finder(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const FactoredQuadratic f = random_factored_quadratic(rng);
    const StarPoly p = f.product();
    const RootReport rep = quadratic_root_in_ball(p);
    double nearest = INFINITY;
    for (const IsolatedZero& z : rep.points) {
      worst = std::max(worst, eval(p, z.point).norm());
      nearest = std::min(nearest, max_abs_diff(z.point, f.zero));
    }
    worst = std::max(worst, nearest);
  }
  return worst;
}

double o11_roundtrip(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    O11Class c;
    c.eps = random_sign(rng);
    c.flip = rng.sign() > 0;
    c.t = rng.uniform(-3.0, 3.0);
    const O11Class back = o11_classify(o11_compose(c));
    const double miss = back.eps != c.eps || back.flip != c.flip ? INFINITY : 0.0;
    worst = std::max({worst, miss, std::abs(back.t - c.t)});
  }
  return worst;
}

// ---- metrics -------------------------------------------------------------

double ghat_classical_pullback(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const MobiusMap f(random_sp11(rng, 1.0), MobiusKind::classical);
    const BallPoint q = rng.ball(0.6);
    worst = std::max(worst, pullback_residual(f, MetricKind::ghat, q, kPairs, rng.fork_seed()));
  }
  return worst;
}

double g_slice_rotation_pullback(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const Quaternion u = rng.sphere3();
    const auto f = [u](const Quaternion& q) { return u.conj() * q * u; };
    const BallPoint q = rng.ball(0.7);
    worst = std::max(worst, pullback_residual(f, MetricKind::g, q, kPairs, rng.fork_seed()));
  }
  return worst;
}

double g_regular_pullback(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const BallPoint q = rng.ball(0.6);
    const MobiusMap f(mobius_M(q), MobiusKind::regular);
    worst = std::max(worst, pullback_residual(f, MetricKind::g, q, kPairs, rng.fork_seed()));
  }
  return worst;
}

double regular_sends_to_zero(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const BallPoint q = rng.ball(0.9);
    worst = std::max(worst, regular_apply(mobius_M(q), q).value().norm());
  }
  return worst;
}

double slice_hyperbolicity(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const Quaternion i = rng.imaginary_unit();
    const auto in_slice = [&](double r) {
      const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
      return r * (Quaternion(std::cos(angle)) + std::sin(angle) * i);
    };
    const BallPoint q(in_slice(rng.uniform(0.0, 0.8)));
    const Quaternion alpha = in_slice(1.0);
    const Quaternion beta = in_slice(1.0);
    const double d = 1.0 - q.value().norm2();
    const double expected = (alpha * beta.conj()).w / (d * d);
    worst = std::max(worst, std::abs(slice_g(q, alpha, beta) - expected));
  }
  return worst;
}

double hermitian_symmetry(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const BallPoint q = rng.ball(0.8);
    const Quaternion alpha = rng.gaussian();
    const Quaternion beta = rng.gaussian();
    worst = std::max(worst, max_abs_diff(slice_h(q, alpha, beta), slice_h(q, beta, alpha).conj()));
  }
  return worst;
}

// Fraction of samples with g_q(a, a) <= 0.
double positive_definite(Sampler& rng, int trials) {
  int bad = 0;
  for (int n = 0; n < trials; ++n) {
    const BallPoint q = rng.ball(0.95);
    const Quaternion alpha = rng.sphere3();
    if (!(slice_g(q, alpha, alpha) > 0.0)) ++bad;
  }
  return static_cast<double>(bad) / trials;
}

double geodesic_reversal(Sampler& rng, int trials) {
  double worst = 0.0;
  const Sp11Element i11 = Sp11Element::trusted(QMat2::i11());
  for (int n = 0; n < trials; ++n) {
    const UnitQuaternion u = rng.sphere3();
    const double t = rng.uniform(-3.0, 3.0);
    const Quaternion lhs = classical_apply(i11, symm_geodesic(u, BallPoint(), t));
    worst = std::max(worst, max_abs_diff(lhs, symm_geodesic(u, BallPoint(), -t)));
  }
  return worst;
}

// |speed - 1| of t -> tanh(t) u under g, velocity by central differences.
double ray_unit_speed(Sampler& rng, int trials) {
  double worst = 0.0;
  constexpr double h = 1e-5;
  for (int n = 0; n < trials; ++n) {
    const UnitQuaternion u = rng.sphere3();
    const double t = rng.uniform(-2.0, 2.0);
    const Quaternion v = (slice_ray(u, t + h).value() - slice_ray(u, t - h).value()) / (2.0 * h);
    const BallPoint q = slice_ray(u, t);
    worst = std::max(worst, std::abs(std::sqrt(slice_g(q, v, v)) - 1.0));
    worst = std::max(worst, std::abs(std::sqrt(poincare_g(q, v, v)) - 1.0));
  }
  return worst;
}

// ---- decompose -----------------------------------------------------------

double exp_closed_form(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const Quaternion x = random_m(rng, 2.0);
    const Sp11Element series = exp_general(Sp11AlgebraElement::m_part(x));
    worst = std::max(worst, max_norm_diff(series, exp_m(x)));
  }
  return worst;
}

double psi_membership(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const Sp11AlgebraElement x{rng.gaussian().im(), rng.gaussian().im(), rng.gaussian()};
    const Sp11Element e = exp_general(x);
    worst = std::max({worst, hat_sp11_residual(rho(psi_embed(e))), sp11_residual(e)});
  }
  return worst;
}

double symm_roundtrip(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const Sp11Element a = random_sp11(rng);
    worst = std::max(worst, max_norm_diff(symm_compose(symm_decompose(a)), a));
  }
  return worst;
}

double slice_roundtrip(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const Sp11Element a = random_sp11(rng);
    worst = std::max(worst, max_norm_diff(slice_compose(slice_decompose(a)), a));
  }
  return worst;
}

double symm_recover(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const SymmFactorization f{rng.sphere3(), rng.sphere3(), random_m(rng, 1.5)};
    const SymmFactorization g = symm_decompose(symm_compose(f));
    worst = std::max({worst, max_abs_diff(f.u, g.u), max_abs_diff(f.v, g.v),
                      max_abs_diff(f.x, g.x)});
  }
  return worst;
}

double slice_recover(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const SliceFactorization f{rng.sphere3(), random_m(rng, 1.5), rng.sphere3()};
    const SliceFactorization g = slice_decompose(slice_compose(f));
    worst = std::max({worst, max_abs_diff(f.u, g.u), max_abs_diff(f.v, g.v),
                      max_abs_diff(f.x, g.x)});
  }
  return worst;
}

// On exp_m(q) both 0 A and Phi(A) equal tanh|q| sgn q.
double quotients_agree(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const Quaternion q = random_m(rng, 1.5);
    const Sp11Element a = exp_m(q);
    const Quaternion expected = std::tanh(q.norm()) * sgn(q);
    worst = std::max(worst, max_abs_diff(classical_apply(a, BallPoint()), expected));
    worst = std::max(worst, max_abs_diff(quotient_point(a), expected));
  }
  return worst;
}

// ---- isometry ------------------------------------------------------------

QuaternionMap act(const IsoGElement& e) {
  return [e](const Quaternion& q) { return iso_g_act(e, BallPoint(q)).value(); };
}

double iso_g_pullback(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    IsoGElement e = random_iso(rng);
    // Alternate the branches so both are always covered.
    e.eps2 = n % 2 == 0 ? Sign::plus : Sign::minus;
    const BallPoint q = rng.ball(0.6);
    worst = std::max(worst, pullback_residual(act(e), MetricKind::g, q, kPairs, rng.fork_seed()));
  }
  return worst;
}

// Fraction of samples whose Jacobian sign differs from eps2.
double iso_orientation(Sampler& rng, int trials) {
  int bad = 0;
  for (int n = 0; n < trials; ++n) {
    const IsoGElement e = random_iso(rng);
    const int sign = differential(act(e), rng.ball(0.6)).orientation();
    if (sign != static_cast<int>(e.eps2)) ++bad;
  }
  return static_cast<double>(bad) / trials;
}

double iso_action_law(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const IsoGElement a = random_iso(rng);
    const IsoGElement b = random_iso(rng);
    const BallPoint q = rng.ball(0.7);
    const Quaternion lhs = iso_g_act(a * b, q);
    const Quaternion rhs = iso_g_act(a, iso_g_act(b, q));
    worst = std::max(worst, max_abs_diff(lhs, rhs));
    worst = std::max(worst, max_abs_diff(iso_g_act(a * iso_g_inverse(a), q), q));
  }
  return worst;
}

double iso_kernel(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    IsoGElement a = random_iso(rng);
    const BallPoint q = rng.ball(0.9);
    const Quaternion lhs = iso_g_act(a, q);
    a.u = -a.u;
    worst = std::max(worst, max_abs_diff(lhs, iso_g_act(a, q)));
  }
  return worst;
}

// Phi(diag(eps', u) A H(t) I(eps)) = (u, eps, t, +1) . Phi(A).
double translation_correspondence(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const Sp11Element a = random_sp11(rng);
    IsoGElement e = random_iso(rng);
    e.eps2 = Sign::plus;
    const Sp11Element left =
        Sp11Element::trusted(QMat2::diag(to_double(random_sign(rng)), e.u));
    const Sp11Element moved = left * a * hyperbolic_rotation(e.t) * sign_flip(e.eps1);
    worst = std::max(worst, max_abs_diff(quotient_point(moved), iso_g_act(e, quotient_point(a))));
  }
  return worst;
}

// Fraction of misclassified samples over the three centralizer predicates.
double centralizers(Sampler& rng, int trials) {
  int bad = 0;
  int total = 0;
  const auto expect = [&](const QMat2& a, Subgroup s, bool member) {
    ++total;
    if (centralizer_check(a, s) != member || in_centralizer(a, s) != member) ++bad;
  };
  for (int n = 0; n < trials; ++n) {
    const double e = to_double(random_sign(rng));
    expect(QMat2::diag(e, rng.sphere3()), Subgroup::sp1x1, true);
    expect(o11_compose({random_sign(rng), rng.sign() > 0, rng.uniform(-2.0, 2.0)}),
           Subgroup::sp1I2, true);
    expect(QMat2::diag(e, to_double(random_sign(rng))), Subgroup::sp1xsp1, true);

    const Sp11Element generic = random_sp11(rng);
    if (generic.matrix().m12.norm() > 1e-6) {
      expect(generic, Subgroup::sp1x1, false);
      expect(generic, Subgroup::sp1I2, false);
      expect(generic, Subgroup::sp1xsp1, false);
    }
    // Block diagonal with a first entry away from +-1.
    const double angle = rng.uniform(0.1, 1.5);
    const Quaternion u = exp(angle * rng.imaginary_unit().value());
    const UnitQuaternion v = rng.sphere3();
    expect(QMat2::diag(u, v), Subgroup::sp1x1, false);
  }
  return static_cast<double>(bad) / total;
}

// ---- orbits --------------------------------------------------------------

double orbit_invariance(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const double y = rng.uniform(0.0, 0.8);
    const BallPoint base(y * rng.imaginary_unit().value());
    const BallPoint q = iso_g_act(random_iso(rng, 3.0), base);
    worst = std::max(worst, std::abs(orbit_invariant(q) - y));
  }
  return worst;
}

// Real points, and their images under the real part of the group, are
// reported as exactly 0.
double orbit_real_exact(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const BallPoint x(rng.uniform(-0.99, 0.99));
    IsoGElement e = random_iso(rng, 3.0);
    e.u = UnitQuaternion();
    worst = std::max(worst, orbit_invariant(x));
    worst = std::max(worst, orbit_invariant(iso_g_act(e, x)));
  }
  return worst;
}

// Brute force: slide q along t -> (1, +1, t, +1) . q over a grid of 10^4
// values of t in [-5, 5] and read |Im| where |Re| is smallest.
double grid_orbit_invariant(const BallPoint& q) {
  constexpr int kGrid = 10000;
  double best_re = INFINITY;
  double y = 0.0;
  for (int k = 0; k < kGrid; ++k) {
    const double t = -5.0 + 10.0 * k / (kGrid - 1);
    const Quaternion p = m_t(t, q.value());
    if (std::abs(p.w) < best_re) {
      best_re = std::abs(p.w);
      y = p.im_norm();
    }
  }
  return y;
}

double orbit_grid_oracle(Sampler& rng, int trials) {
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const double y = rng.uniform(0.0, 0.8);
    const BallPoint base(y * rng.imaginary_unit().value());
    const BallPoint q = iso_g_act(random_iso(rng, 3.0), base);
    worst = std::max(worst, std::abs(orbit_invariant(q) - grid_orbit_invariant(q)));
  }
  return worst;
}

std::vector<CheckSpec> build_registry() {
  const auto up = Bound::upper;
  return {
      {"mobius.anti_homomorphism", "mobius", 1e-10, up, anti_homomorphism},
      {"mobius.inverse_map", "mobius", 1e-10, up, inverse_map},
      {"mobius.coincidence", "mobius", 1e-10, up, coincidence},
      {"mobius.non_regular", "mobius", 1e-3, Bound::lower, non_regular},
      {"mobius.phi_double_coset", "mobius", 1e-9, up, phi_double_coset},
      {"mobius.phi_left_equivariance", "mobius", 1e-9, up, phi_left_equivariance},
      {"mobius.phi_right_equivariance", "mobius", 1e-9, up, phi_right_equivariance},
      {"mobius.phi_zero", "mobius", 1e-9, up, phi_zero},
      {"mobius.root_finder", "mobius", 1e-10, up, root_finder},
      {"mobius.o11_roundtrip", "mobius", 1e-12, up, o11_roundtrip},
      {"metrics.ghat_classical_pullback", "metrics", 1e-5, up, ghat_classical_pullback},
      {"metrics.g_slice_rotation_pullback", "metrics", 1e-5, up, g_slice_rotation_pullback},
      {"metrics.g_regular_pullback", "metrics", 1e-5, up, g_regular_pullback},
      {"metrics.regular_sends_to_zero", "metrics", 1e-9, up, regular_sends_to_zero},
      {"metrics.slice_hyperbolicity", "metrics", 1e-12, up, slice_hyperbolicity},
      {"metrics.hermitian_symmetry", "metrics", 1e-12, up, hermitian_symmetry},
      {"metrics.positive_definite", "metrics", 1e-12, up, positive_definite},
      {"metrics.geodesic_reversal", "metrics", 1e-15, up, geodesic_reversal},
      {"metrics.ray_unit_speed", "metrics", 1e-6, up, ray_unit_speed},
      {"decompose.exp_closed_form", "decompose", 1e-12, up, exp_closed_form},
      {"decompose.psi_membership", "decompose", 1e-10, up, psi_membership},
      {"decompose.symm_roundtrip", "decompose", 1e-9, up, symm_roundtrip},
      {"decompose.slice_roundtrip", "decompose", 1e-9, up, slice_roundtrip},
      {"decompose.symm_recover", "decompose", 1e-9, up, symm_recover},
      {"decompose.slice_recover", "decompose", 1e-9, up, slice_recover},
      {"decompose.quotients_agree", "decompose", 1e-9, up, quotients_agree},
      {"isometry.g_pullback", "isometry", 1e-5, up, iso_g_pullback},
      {"isometry.orientation", "isometry", 1e-12, up, iso_orientation},
      {"isometry.action_law", "isometry", 1e-10, up, iso_action_law},
      {"isometry.kernel", "isometry", 1e-14, up, iso_kernel},
      {"isometry.translation_correspondence", "isometry", 1e-9, up, translation_correspondence},
      {"isometry.centralizers", "isometry", 1e-12, up, centralizers},
      {"orbits.invariance", "orbits", 1e-9, up, orbit_invariance},
      {"orbits.real_exact", "orbits", 1e-300, up, orbit_real_exact},
      {"orbits.grid_oracle", "orbits", 1e-6, up, orbit_grid_oracle},
  };
}

}  // namespace

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> checks = build_registry();
  return checks;
}

bool is_suite(const std::string& name) {
  if (name == "all") return true;
  const auto& r = registry();
  return std::any_of(r.begin(), r.end(), [&](const CheckSpec& c) { return c.suite == name; });
}

bool is_check(const std::string& name) {
  const auto& r = registry();
  return std::any_of(r.begin(), r.end(), [&](const CheckSpec& c) { return c.name == name; });
}

bool passes(double value, double tol, Bound bound) {
  if (!(tol > 0.0) || !std::isfinite(value)) return false;
  return bound == Bound::upper ? value <= tol : value >= tol;
}

std::vector<CheckResult> run_suite(const std::string& suite, const RunConfig& config) {
  if (!is_suite(suite)) throw std::invalid_argument("unknown suite: " + suite);
  std::vector<CheckResult> out;
  const auto& checks = registry();
  for (std::size_t n = 0; n < checks.size(); ++n) {
    const CheckSpec& c = checks[n];
    if (suite != "all" && c.suite != suite) continue;
    CheckResult r;
    r.name = c.name;
    r.bound = c.bound;
    const auto it = config.tol.find(c.name);
    r.tol = it == config.tol.end() ? c.tol : it->second;
    Sampler rng(mix_seed(config.seed, n));
    const auto start = std::chrono::steady_clock::now();
    try {
      r.value = c.run(rng, config.trials);
    } catch (const std::exception& e) {
      r.value = NAN;
      r.error = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.pass = passes(r.value, r.tol, r.bound);
    out.push_back(r);
  }
  return out;
}

}  // namespace slicegeo::cli
