#include "uavland/oracles.hpp"

#include <cmath>

namespace uavland {

VecX fd_gradient(const std::function<double(const VecX&)>& f, const VecX& x,
                 double step) {
  VecX grad(x.size());
  VecX probe = x;
  for (int k = 0; k < x.size(); ++k) {
    probe(k) = x(k) + step;
    const double hi = f(probe);
    probe(k) = x(k) - step;
    const double lo = f(probe);
    probe(k) = x(k);
    grad(k) = (hi - lo) / (2.0 * step);
  }
  return grad;
}

double fd_derivative(const std::function<double(double)>& f, double x,
                     double step) {
  return (f(x + step) - f(x - step)) / (2.0 * step);
}

PolyhedronProjection project_polyhedron_reference(const VecX& u_nom,
                                                  const MatX& c, const VecX& d,
                                                  double tol, int max_sweeps) {
  const int m = static_cast<int>(c.rows());
  VecX lambda = VecX::Zero(m);
  VecX row_norm2(m);
  for (int r = 0; r < m; ++r) {
    row_norm2(r) = c.row(r).squaredNorm();
  }

  PolyhedronProjection out;
  out.u = u_nom;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    out.sweeps = sweep + 1;
    for (int r = 0; r < m; ++r) {
      if (row_norm2(r) < 1e-300) {
        continue;
      }
      const double slack = c.row(r).dot(out.u) - d(r);
      const double next = std::max(0.0, lambda(r) - slack / row_norm2(r));
      const double delta = next - lambda(r);
      if (delta != 0.0) {
        lambda(r) = next;
        out.u += delta * c.row(r).transpose();
      }
    }
    double worst_violation = 0.0;
    double worst_comp = 0.0;
    for (int r = 0; r < m; ++r) {
      const double slack = c.row(r).dot(out.u) - d(r);
      worst_violation = std::min(worst_violation, slack);
      worst_comp = std::max(worst_comp, std::abs(lambda(r) * slack));
    }
    if (worst_violation >= -tol && worst_comp <= tol) {
      out.converged = true;
      return out;
    }
  }
  return out;
}

double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

namespace {

double simpson_rule(const std::function<double(double)>& f, double a, double b,
                    double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_recurse(const std::function<double(double)>& f, double a,
                       double b, double fa, double fm, double fb, double whole,
                       double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson_rule(f, a, m, fa, flm, fm);
  const double right = simpson_rule(f, m, b, fm, frm, fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double simpson_integrate(const std::function<double(double)>& f, double a,
                         double b, double tol) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = simpson_rule(f, a, b, fa, fm, fb);
  return simpson_recurse(f, a, b, fa, fm, fb, whole, tol, 50);
}

}  // namespace uavland
