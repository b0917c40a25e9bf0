#pragma once

// Numerical roots of Riley polynomials and the parabolic representations
// they parametrize.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "riley/exact_arith.hpp"
#include "riley/parallel.hpp"
#include "riley/riley.hpp"
#include "riley/two_bridge.hpp"

namespace riley {

inline constexpr double kDefaultRootTolerance = 1e-9;
inline constexpr double kDefaultRepTolerance = 1e-6;

struct AberthOptions {
  int max_iterations = 200;
  double update_threshold = 1e-13;
  int newton_steps = 5;
};

struct Root {
  Complex value;
  int multiplicity = 1;
  /// |f(value)|.
  double residual = 0.0;
  /// |f(value)| / sum |c_k||value|^k, the relative backward error.
  double backward_error = 0.0;
};

struct RootSet {
  std::vector<Root> roots;

  std::size_t count_with_multiplicity() const {
    std::size_t n = 0;
    for (const auto& r : roots) n += static_cast<std::size_t>(r.multiplicity);
    return n;
  }
};

/// Thrown when the simultaneous iteration hits its cap; carries the best iterate.
class RootFindError : public std::runtime_error {
 public:
  RootFindError(const std::string& what, std::vector<Complex> iterate, std::vector<double> residuals)
      : std::runtime_error(what), iterate_(std::move(iterate)), residuals_(std::move(residuals)) {}

  const std::vector<Complex>& iterate() const noexcept { return iterate_; }
  const std::vector<double>& residuals() const noexcept { return residuals_; }

 private:
  std::vector<Complex> iterate_;
  std::vector<double> residuals_;
};

namespace detail {

struct ComplexPoly {
  std::vector<double> c;  // ascending

  explicit ComplexPoly(const IntPoly& f) {
    for (const auto& k : f.coeffs()) c.push_back(k.convert_to<double>());
  }

  // p(z), p'(z) and sum |c_k||z|^k.
  void eval(Complex z, Complex& p, Complex& dp, double& scale) const {
    p = 0.0;
    dp = 0.0;
    scale = 0.0;
    const double r = std::abs(z);
    for (std::size_t k = c.size(); k-- > 0;) {
      dp = dp * z + p;
      p = p * z + c[k];
      scale = scale * r + std::abs(c[k]);
    }
  }
};

inline bool root_order(const Root& a, const Root& b) {
  if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
  return a.value.imag() < b.value.imag();
}

}  // namespace detail

/// All complex roots of f by Aberth-Ehrlich iteration in double precision,
/// Newton-polished. Roots closer than 10*tolerance are merged and reported
/// with multiplicity. Ordered by (real, imaginary).
inline RootSet find_roots(const IntPoly& f, double tolerance = kDefaultRootTolerance,
                          const AberthOptions& opts = {}) {
  if (f.is_zero() || f.degree() < Degree(1)) throw std::invalid_argument("find_roots needs degree >= 1");
  const detail::ComplexPoly poly(f);
  const std::size_t n = poly.c.size() - 1;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  // Start on a circle whose radius is the geometric mean of the root moduli.
  const double radius = std::pow(std::abs(poly.c.front() / poly.c.back()), 1.0 / static_cast<double>(n));
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = std::polar(radius > 0.0 ? radius : 1.0, theta);
  }

  std::vector<bool> done(n, false);
  bool converged = false;
  for (int it = 0; it < opts.max_iterations && !converged; ++it) {
    converged = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      Complex p, dp;
      double scale;
      poly.eval(z[k], p, dp, scale);
      if (std::abs(p) <= 4.0 * eps * scale) {
        done[k] = true;
        continue;
      }
      const Complex ratio = p / dp;
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      const Complex step = ratio / (1.0 - ratio * repulsion);
      z[k] -= step;
      if (std::abs(step) <= opts.update_threshold * std::max(1.0, std::abs(z[k])))
        done[k] = true;
      else
        converged = false;
    }
  }

  auto residual_of = [&](Complex x) {
    Complex p, dp;
    double scale;
    poly.eval(x, p, dp, scale);
    return std::abs(p);
  };

  if (!converged) {
    std::vector<double> res;
    for (auto x : z) res.push_back(residual_of(x));
    throw RootFindError("root finder did not converge in " + std::to_string(opts.max_iterations) + " iterations",
                        z, res);
  }

  for (auto& x : z) {
    for (int s = 0; s < opts.newton_steps; ++s) {
      Complex p, dp;
      double scale;
      poly.eval(x, p, dp, scale);
      if (p == 0.0 || dp == 0.0) break;
      const Complex candidate = x - p / dp;
      if (residual_of(candidate) >= std::abs(p)) break;
      x = candidate;
    }
  }

  // Greedy clustering: each unassigned root absorbs its neighbours.
  RootSet out;
  std::vector<bool> used(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    if (used[k]) continue;
    used[k] = true;
    Complex sum = z[k];
    int mult = 1;
    for (std::size_t j = k + 1; j < n; ++j) {
      if (!used[j] && std::abs(z[j] - z[k]) < 10.0 * tolerance) {
        used[j] = true;
        sum += z[j];
        ++mult;
      }
    }
    Root r;
    r.value = sum / static_cast<double>(mult);
    r.multiplicity = mult;
    Complex p, dp;
    double scale;
    poly.eval(r.value, p, dp, scale);
    r.residual = std::abs(p);
    r.backward_error = scale > 0.0 ? r.residual / scale : r.residual;
    out.roots.push_back(r);
  }
  std::sort(out.roots.begin(), out.roots.end(), detail::root_order);
  return out;
}

/// 2x2 complex matrix [[a, b], [c, d]].
struct Mat2C {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  friend Mat2C operator*(const Mat2C& x, const Mat2C& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  friend Mat2C operator+(const Mat2C& x, const Mat2C& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
  friend Mat2C operator-(const Mat2C& x, const Mat2C& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }

  Complex trace() const { return a + d; }
  Complex det() const { return a * d - b * c; }
  double max_abs() const { return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)}); }
};

struct ParabolicRep {
  Mat2C x;  // rho(x)
  Mat2C y;  // rho(y)
  Mat2C w;  // rho(w)
};

/// rho(x) = [[1,1],[0,1]], rho(y) = [[1,0],[-u0,1]] and the relator word
/// evaluated from the epsilon sequence.
inline ParabolicRep build_parabolic_rep(const TwoBridgePair& p, Complex u0) {
  ParabolicRep rep;
  rep.x = {1.0, 1.0, 0.0, 1.0};
  rep.y = {1.0, 0.0, -u0, 1.0};
  const Mat2C x_inv{1.0, -1.0, 0.0, 1.0};
  const Mat2C y_inv{1.0, 0.0, u0, 1.0};
  const auto eps = epsilon_sequence(p);
  for (std::size_t i = 0; i < eps.size(); i += 2) {
    rep.w = rep.w * (eps[i] > 0 ? rep.x : x_inv);
    rep.w = rep.w * (eps[i + 1] > 0 ? rep.y : y_inv);
  }
  return rep;
}

/// w11(u) and dw11/du evaluated through the word product, carrying the
/// derivative alongside each partial product.
inline std::pair<Complex, Complex> word_entry_with_derivative(const EpsilonSequence& eps, Complex u) {
  Mat2C m;
  Mat2C dm{0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < eps.size(); i += 2) {
    const Mat2C x{1.0, static_cast<double>(eps[i]), 0.0, 1.0};
    m = m * x;
    dm = dm * x;
    const double e = eps[i + 1];
    const Mat2C y{1.0, 0.0, -e * u, 1.0};
    const Mat2C dy{0.0, 0.0, -e, 0.0};
    dm = dm * y + m * dy;
    m = m * y;
  }
  return {m.a, dm.a};
}

/// Newton steps on w11 evaluated through the word product, which is far
/// better conditioned than the expanded coefficients. Steps that do not
/// reduce |w11| are rejected.
inline Complex refine_root(const TwoBridgePair& p, Complex u, int steps = 8) {
  const auto eps = epsilon_sequence(p);
  auto [w, dw] = word_entry_with_derivative(eps, u);
  for (int s = 0; s < steps && w != 0.0 && dw != 0.0; ++s) {
    const Complex candidate = u - w / dw;
    auto [wc, dwc] = word_entry_with_derivative(eps, candidate);
    if (std::abs(wc) >= std::abs(w)) break;
    u = candidate;
    w = wc;
    dw = dwc;
  }
  return u;
}

struct RootCheck {
  Complex u;
  int multiplicity = 1;
  /// |rho(w)_11| at u, i.e. |phi(u)| evaluated through the word product.
  double phi_residual = 0.0;
  double relator_residual = 0.0;
  Complex trace_x, trace_y, det_x, det_y;
  bool nonabelian = false;
  bool passed = false;
};

/// Checks the relator w x = y w at u0: max-norm of rho(w)rho(x) - rho(y)rho(w).
inline RootCheck verify_relation(const TwoBridgePair& p, Complex u0, double tolerance = kDefaultRepTolerance) {
  const auto rep = build_parabolic_rep(p, u0);
  RootCheck out;
  out.u = u0;
  out.relator_residual = (rep.w * rep.x - rep.y * rep.w).max_abs();
  out.phi_residual = std::abs(rep.w.a);
  out.trace_x = rep.x.trace();
  out.trace_y = rep.y.trace();
  out.det_x = rep.x.det();
  out.det_y = rep.y.det();
  out.nonabelian = u0 != Complex(0.0, 0.0);
  out.passed = out.nonabelian && out.relator_residual < tolerance;
  return out;
}

struct RepCheckReport {
  TwoBridgePair pair;
  IntPoly phi;
  std::vector<RootCheck> roots;
  double root_tolerance = kDefaultRootTolerance;
  double rep_tolerance = kDefaultRepTolerance;

  std::size_t root_count() const {
    std::size_t n = 0;
    for (const auto& r : roots) n += static_cast<std::size_t>(r.multiplicity);
    return n;
  }

  bool passed() const {
    if (phi.degree() == Degree::minus_infinity() || root_count() != phi.degree().value()) return false;
    return std::all_of(roots.begin(), roots.end(), [](const RootCheck& r) { return r.passed; });
  }
};

/// Finds every root of phi_p, refines it on the word product and verifies the
/// representation there.
inline RepCheckReport verify_representations(const TwoBridgePair& p, double root_tolerance = kDefaultRootTolerance,
                                             double rep_tolerance = kDefaultRepTolerance, unsigned jobs = 1) {
  RepCheckReport report{p, riley_polynomial(p), {}, root_tolerance, rep_tolerance};
  const auto roots = find_roots(report.phi, root_tolerance);
  report.roots = parallel_map(
      roots.roots,
      [&](const Root& r) {
        auto check = verify_relation(p, refine_root(p, r.value), rep_tolerance);
        check.multiplicity = r.multiplicity;
        return check;
      },
      jobs);
  return report;
}

inline bool all_roots_real(const RootSet& roots, double tolerance) {
  return std::all_of(roots.roots.begin(), roots.roots.end(),
                     [&](const Root& r) { return std::abs(r.value.imag()) < tolerance; });
}

/// True iff every root of phi_{S(q,1)} is real to within tolerance, as the
/// torus knot T(2,q) maps into a Fuchsian triangle group.
inline bool torus_real_root_check(std::int64_t q, double tolerance = kDefaultRootTolerance) {
  if (q < 3 || q % 2 == 0) throw std::invalid_argument("q must be odd and at least 3");
  return all_roots_real(find_roots(riley_polynomial(TwoBridgePair::validate(q, 1)), tolerance), tolerance);
}

}  // namespace riley
