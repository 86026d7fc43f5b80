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

#include "slicegeo/star_poly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <utility>

#include "finite_difference.hpp"
#include "slicegeo/errors.hpp"

namespace slicegeo {

namespace {

constexpr double kUnitSquareTol = 1e-8;  // |I^2 + 1| acceptance
constexpr double kBoundaryTol = 1e-10;
constexpr double kRealRootTol = 1e-6;    // |Im| below this: treat as a real root
constexpr double kDedupTol = 1e-9;

ZeroLocation locate(double radius) {
  if (std::abs(radius - 1.0) <= kBoundaryTol) return ZeroLocation::boundary;
  return radius < 1.0 ? ZeroLocation::interior : ZeroLocation::exterior;
}

double coeff_scale(const StarPoly& f) {
  double s = 0.0;
  for (const Quaternion& c : f.coeffs()) s = std::max(s, c.norm());
  return s;
}

// dP(q)[delta] for P(q) = q^2 a2 + q a1 + a0.
Quaternion quadratic_derivative(const StarPoly& p, const Quaternion& q, const Quaternion& d) {
  return (d * q + q * d) * p.coeff(2) + d * p.coeff(1);
}

// Newton's method on P : R^4 -> R^4. Keeps the best iterate, so it never
// makes a good candidate worse.
Quaternion polish(const StarPoly& p, Quaternion q) {
  double best = eval(p, q).norm();
  for (int iter = 0; iter < 12 && best > 0.0; ++iter) {
    Eigen::Matrix4d jac;
    const std::array<Quaternion, 4> basis{Quaternion(1.0), Quaternion::i(), Quaternion::j(),
                                          Quaternion::k()};
    for (int c = 0; c < 4; ++c) {
      const Quaternion col = quadratic_derivative(p, q, basis[c]);
      jac.col(c) << col.w, col.x, col.y, col.z;
    }
    const Quaternion r = eval(p, q);
    const Eigen::Vector4d rhs(r.w, r.x, r.y, r.z);
    const Eigen::Vector4d step = jac.colPivHouseholderQr().solve(-rhs);
    if (!step.allFinite()) break;
    const Quaternion next = q + Quaternion{step[0], step[1], step[2], step[3]};
    const double res = eval(p, next).norm();
    if (!(res < best)) break;
    q = next;
    best = res;
  }
  return q;
}

// Gauss-Newton along the real axis for P(x) = 0, x real.
double polish_real(const StarPoly& p, double x) {
  double best = eval(p, Quaternion(x)).norm();
  for (int iter = 0; iter < 30 && best > 0.0; ++iter) {
    const Quaternion r = eval(p, Quaternion(x));
    const Quaternion dr = 2.0 * x * p.coeff(2) + p.coeff(1);
    const double d2 = dr.norm2();
    if (d2 == 0.0) break;
    const double next = x - (dr.conj() * r).w / d2;
    const double res = eval(p, Quaternion(next)).norm();
    if (!(res < best)) break;
    x = next;
    best = res;
  }
  return x;
}

// Roots of a real polynomial (ascending coefficients, leading non-zero)
// from the eigenvalues of its companion matrix, each polished by a few
// Newton steps.
std::vector<std::complex<double>> real_poly_roots(const std::vector<double>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return {};
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[i] / c[n];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < n; ++i) {
    std::complex<double> z = es.eigenvalues()[i];
    auto value = [&](std::complex<double> s, std::complex<double>* deriv) {
      std::complex<double> v = c[n];
      std::complex<double> d = 0.0;
      for (int k = n - 1; k >= 0; --k) {
        d = d * s + v;
        v = v * s + c[k];
      }
      *deriv = d;
      return v;
    };
    std::complex<double> d;
    double best = std::abs(value(z, &d));
    for (int iter = 0; iter < 8; ++iter) {
      const std::complex<double> v = value(z, &d);
      if (std::abs(d) == 0.0) break;
      const std::complex<double> next = z - v / d;
      std::complex<double> dn;
      const double res = std::abs(value(next, &dn));
      if (!(res < best)) break;
      z = next;
      best = res;
    }
    roots.push_back(z);
  }
  return roots;
}

struct Sphere {
  double x;
  double y;
};

// Right-multiplying every coefficient by the inverse of the leading one
// keeps the zero set and makes P monic.
StarPoly make_monic(const StarPoly& p) {
  const Quaternion lead_inv = p.coeffs().back().inverse();
  std::vector<Quaternion> c;
  for (const Quaternion& a : p.coeffs()) c.push_back(a * lead_inv);
  c.back() = 1.0;
  return StarPoly(std::move(c));
}

bool has_real_coefficients(const StarPoly& monic) {
  const double tol = 1e-14 * std::max(1.0, coeff_scale(monic));
  return std::all_of(monic.coeffs().begin(), monic.coeffs().end(),
                     [tol](const Quaternion& a) { return a.im_norm() <= tol; });
}

void add_point(RootReport& rep, const Quaternion& q) {
  const ZeroLocation where = locate(q.norm());
  if (where == ZeroLocation::exterior) return;
  for (const IsolatedZero& z : rep.points)
    if (max_abs_diff(z.point, q) <= kDedupTol) return;
  rep.points.push_back({q, where});
}

void add_sphere(RootReport& rep, double x, double y) {
  const ZeroLocation where = locate(std::hypot(x, y));
  if (where == ZeroLocation::exterior) return;
  for (const SphericalZero& s : rep.spheres)
    if (std::abs(s.x - x) <= kDedupTol && std::abs(s.y - y) <= kDedupTol) return;
  rep.spheres.push_back({x, y, where});
}

// Real monic polynomial of degree <= 2.
RootReport solve_real(const StarPoly& monic) {
  RootReport rep;
  if (monic.degree() == 1) {
    add_point(rep, Quaternion(-monic.coeff(0).w));
    return rep;
  }
  const double b = monic.coeff(1).w;
  const double c = monic.coeff(0).w;
  const double disc = b * b - 4.0 * c;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    const double r1 = -0.5 * (b + std::copysign(s, b));
    add_point(rep, Quaternion(r1));
    if (r1 != 0.0) add_point(rep, Quaternion(c / r1));
    else add_point(rep, Quaternion(0.0));
  } else {
    add_sphere(rep, -0.5 * b, 0.5 * std::sqrt(-disc));
  }
  return rep;
}

// Zeros of a monic degree-2 P on the given candidate spheres.
RootReport solve_on_spheres(const StarPoly& monic, const std::vector<Sphere>& spheres) {
  RootReport rep;
  const double scale = std::max(1.0, coeff_scale(monic));
  const Quaternion& a2 = monic.coeff(2);
  const Quaternion& a1 = monic.coeff(1);
  const Quaternion& a0 = monic.coeff(0);
  for (const Sphere& s : spheres) {
    if (s.y <= kRealRootTol) {
      const double x = polish_real(monic, s.x);
      const double res = eval(monic, Quaternion(x)).norm();
      if (res <= 1e-8 * scale) add_point(rep, polish(monic, Quaternion(x)));
      continue;
    }
    const Quaternion c = (s.x * s.x - s.y * s.y) * a2 + s.x * a1 + a0;
    const Quaternion d = 2.0 * s.x * s.y * a2 + s.y * a1;
    if (d.norm() <= 1e-12 * scale) {
      if (c.norm() <= 1e-12 * scale) add_sphere(rep, s.x, s.y);
      continue;
    }
    const Quaternion unit = -(c * d.inverse());
    if ((unit * unit + 1.0).norm() > kUnitSquareTol) continue;
    const ImaginaryUnit projected(sgn(unit.im()));
    add_point(rep, polish(monic, Quaternion(s.x) + s.y * projected.value()));
  }
  return rep;
}

std::vector<Sphere> dedup_spheres(std::vector<Sphere> in) {
  std::vector<Sphere> out;
  for (const Sphere& s : in) {
    const bool dup = std::any_of(out.begin(), out.end(), [&](const Sphere& o) {
      return std::abs(o.x - s.x) <= 1e-7 && std::abs(o.y - s.y) <= 1e-7;
    });
    if (!dup) out.push_back(s);
  }
  return out;
}

void require_root_finder_input(const StarPoly& p) {
  if (p.is_zero()) throw DomainError("root finder: zero polynomial");
  if (p.degree() == 0) throw DomainError("root finder: constant polynomial");
  if (p.degree() > 2) throw DomainError("root finder: degree above 2");
}

}  // namespace

StarPoly::StarPoly(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == Quaternion{}) coeffs_.pop_back();
}

Quaternion StarPoly::coeff(int n) const {
  if (n < 0 || n >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[n];
}

Quaternion StarPoly::operator()(const Quaternion& q) const { return eval(*this, q); }

StarPoly star_mul(const StarPoly& f, const StarPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  std::vector<Quaternion> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) c[i + k] += a[i] * b[k];
  return StarPoly(std::move(c));
}

StarPoly reg_conj(const StarPoly& f) {
  std::vector<Quaternion> c;
  c.reserve(f.coeffs().size());
  for (const Quaternion& a : f.coeffs()) c.push_back(a.conj());
  return StarPoly(std::move(c));
}

StarPoly symmetrize(const StarPoly& f) { return star_mul(f, reg_conj(f)); }

Quaternion eval(const StarPoly& f, const Quaternion& q) {
  const auto& a = f.coeffs();
  if (a.empty()) return {};
  Quaternion r = a.back();
  for (auto it = a.rbegin() + 1; it != a.rend(); ++it) r = q * r + *it;
  return r;
}

Quaternion star_inverse_eval(const StarPoly& f, const Quaternion& q) {
  const StarPoly fs = symmetrize(f);
  // f^s has real coefficients, so only the real part of its value matters.
  const Quaternion s = eval(fs, q);
  double bound = 0.0;
  double qn = 1.0;
  for (const Quaternion& c : fs.coeffs()) {
    bound += c.norm() * qn;
    qn *= std::max(1.0, q.norm());
  }
  if (fs.is_zero() || s.norm() <= 1e-14 * bound) {
    throw PoleError("f^s vanishes at the evaluation point");
  }
  return s.inverse() * eval(reg_conj(f), q);
}

std::vector<Quaternion> RootReport::interior_points() const {
  std::vector<Quaternion> out;
  for (const IsolatedZero& z : points)
    if (z.where == ZeroLocation::interior) out.push_back(z.point);
  return out;
}

RootReport quadratic_root_in_ball(const StarPoly& p) {
  require_root_finder_input(p);
  const StarPoly monic = make_monic(p);
  if (has_real_coefficients(monic)) return solve_real(monic);
  if (monic.degree() == 1) {
    RootReport rep;
    add_point(rep, -monic.coeff(0));
    return rep;
  }
  const StarPoly ps = symmetrize(monic);
  std::vector<double> real_coeffs;
  for (const Quaternion& c : ps.coeffs()) real_coeffs.push_back(c.w);
  std::vector<Sphere> spheres;
  for (const std::complex<double>& r : real_poly_roots(real_coeffs))
    spheres.push_back({r.real(), std::abs(r.imag())});
  return solve_on_spheres(monic, dedup_spheres(std::move(spheres)));
}

RootReport quadratic_root_in_ball(const StarPoly& left, const StarPoly& right) {
  if (left.degree() != 1 || right.degree() != 1) {
    throw DomainError("factored root finder expects two degree-1 factors");
  }
  const StarPoly p = star_mul(left, right);
  const StarPoly monic = make_monic(p);
  if (has_real_coefficients(monic)) return solve_real(monic);
  // Each factor l(q) = q a + b has the single zero -b a^-1, and l^s vanishes
  // exactly on the sphere through it.
  std::vector<Sphere> spheres;
  for (const StarPoly* f : {&left, &right}) {
    const Quaternion z = -(f->coeff(0) * f->coeff(1).inverse());
    spheres.push_back({z.w, z.im_norm()});
  }
  return solve_on_spheres(monic, dedup_spheres(std::move(spheres)));
}

double regularity_residual(const QuaternionMap& f, const Quaternion& q, double h,
                           std::optional<ImaginaryUnit> slice) {
  detail::check_step(h, q);
  const ImaginaryUnit unit = slice ? *slice : slice_split(q).unit;
  const Quaternion& i_unit = unit.value();
  const Quaternion dx = (f(q + h) - f(q - h)) / (2.0 * h);
  const Quaternion dy = (f(q + h * i_unit) - f(q - h * i_unit)) / (2.0 * h);
  return (0.5 * (dx + i_unit * dy)).norm();
}

}  // namespace slicegeo
