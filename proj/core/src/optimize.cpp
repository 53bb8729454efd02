// Copyright 2026 The trotterbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trotterbench/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace trotterbench {

namespace {

struct Probe {
  double alpha;
  double value;
  double slope;
};

// Minimizer of the cubic through two probes, clamped into the bracket.
double cubic_step(const Probe& lo, const Probe& hi) {
  const double d1 = lo.slope + hi.slope - 3.0 * (lo.value - hi.value) / (lo.alpha - hi.alpha);
  const double disc = d1 * d1 - lo.slope * hi.slope;
  const double a = std::min(lo.alpha, hi.alpha), b = std::max(lo.alpha, hi.alpha);
  double t = 0.5 * (a + b);
  if (disc >= 0.0) {
    const double d2 = std::copysign(std::sqrt(disc), hi.alpha - lo.alpha);
    t = hi.alpha - (hi.alpha - lo.alpha) * (hi.slope + d2 - d1) / (hi.slope - lo.slope + 2.0 * d2);
  }
  const double margin = 0.1 * (b - a);
  if (!std::isfinite(t) || t < a + margin || t > b - margin) t = 0.5 * (a + b);
  return t;
}

class LineSearch {
 public:
  LineSearch(const ObjectiveFn& f, const Vector& x, const Vector& dir, double f0, double slope0,
             const BfgsOptions& opt)
      : f_(f), x_(x), dir_(dir), f0_(f0), slope0_(slope0), opt_(opt), grad_(x.size()) {}

  // Returns true with `alpha`, `value`, `grad` set on success.
  bool run(double alpha_init) {
    Probe prev{0.0, f0_, slope0_};
    double alpha = alpha_init;
    for (int it = 0; it < opt_.max_line_search; ++it) {
      const Probe cur = eval(alpha);
      if (cur.value > f0_ + opt_.c1 * alpha * slope0_ || (it > 0 && cur.value >= prev.value)) {
        return zoom(prev, cur);
      }
      if (std::abs(cur.slope) <= -opt_.c2 * slope0_) return accept(cur);
      if (cur.slope >= 0.0) return zoom(cur, prev);
      prev = cur;
      alpha *= 2.0;
    }
    return false;
  }

  double alpha() const { return best_.alpha; }
  double value() const { return best_.value; }
  const Vector& grad() const { return best_grad_; }
  int evaluations() const { return evaluations_; }

 private:
  Probe eval(double alpha) {
    ++evaluations_;
    const Vector trial = x_ + alpha * dir_;
    const double v = f_(trial, grad_);
    last_grad_ = grad_;
    return {alpha, v, grad_.dot(dir_)};
  }

  bool accept(const Probe& p) {
    best_ = p;
    best_grad_ = last_grad_;
    return true;
  }

  bool zoom(Probe lo, Probe hi) {
    for (int it = 0; it < opt_.max_line_search; ++it) {
      if (std::abs(hi.alpha - lo.alpha) < 1e-16 * std::max(1.0, lo.alpha)) break;
      const Probe cur = eval(cubic_step(lo, hi));
      if (cur.value > f0_ + opt_.c1 * cur.alpha * slope0_ || cur.value >= lo.value) {
        hi = cur;
      } else {
        if (std::abs(cur.slope) <= -opt_.c2 * slope0_) return accept(cur);
        if (cur.slope * (hi.alpha - lo.alpha) >= 0.0) hi = lo;
        lo = cur;
        lo_grad_ = last_grad_;
      }
    }
    // Fall back to the best point that still decreases the function.
    if (lo.alpha > 0.0 && lo.value < f0_) {
      best_ = lo;
      best_grad_ = lo_grad_.size() ? lo_grad_ : eval_grad(lo.alpha);
      return true;
    }
    return false;
  }

  Vector eval_grad(double alpha) {
    eval(alpha);
    return last_grad_;
  }

  const ObjectiveFn& f_;
  const Vector& x_;
  const Vector& dir_;
  double f0_, slope0_;
  const BfgsOptions& opt_;
  Vector grad_, last_grad_, lo_grad_, best_grad_;
  Probe best_{0.0, 0.0, 0.0};
  int evaluations_ = 0;
};

}  // namespace

BfgsResult minimize_bfgs(const ObjectiveFn& f, Vector x0, const BfgsOptions& options, const StopFn& stop) {
  BfgsResult res;
  const Eigen::Index n = x0.size();
  res.x = std::move(x0);
  res.gradient = Vector::Zero(n);
  res.value = f(res.x, res.gradient);
  res.evaluations = 1;
  if (stop && stop(res.x, res.value)) {
    res.converged = true;
    res.status = "stop criterion met";
    return res;
  }
  if (n == 0 || res.gradient.lpNorm<Eigen::Infinity>() <= options.gradient_tolerance) {
    res.converged = true;
    res.status = "gradient below tolerance";
    return res;
  }

  Matrix hinv = Matrix::Identity(n, n);
  bool scaled = false;
  for (res.iterations = 0; res.iterations < options.max_iterations; ++res.iterations) {
    Vector dir = -hinv * res.gradient;
    double slope = res.gradient.dot(dir);
    if (!(slope < 0.0)) {
      hinv.setIdentity();
      scaled = false;
      dir = -res.gradient;
      slope = -res.gradient.squaredNorm();
    }
    const double alpha0 = scaled ? 1.0 : std::min(1.0, 1.0 / std::max(1e-300, res.gradient.lpNorm<1>()));
    LineSearch ls(f, res.x, dir, res.value, slope, options);
    const bool ok = ls.run(alpha0);
    res.evaluations += ls.evaluations();
    if (!ok) {
      if (scaled) {
        // Retry once along steepest descent before giving up.
        hinv.setIdentity();
        scaled = false;
        continue;
      }
      res.status = "line search failed";
      return res;
    }
    const Vector s = ls.alpha() * dir;
    const Vector y = ls.grad() - res.gradient;
    const double previous = res.value;
    res.x += s;
    res.value = ls.value();
    res.gradient = ls.grad();

    if (stop && stop(res.x, res.value)) {
      res.converged = true;
      res.status = "stop criterion met";
      ++res.iterations;
      return res;
    }
    if (res.gradient.lpNorm<Eigen::Infinity>() <= options.gradient_tolerance) {
      res.converged = true;
      res.status = "gradient below tolerance";
      ++res.iterations;
      return res;
    }
    if (previous - res.value <= options.value_tolerance * std::max({1.0, std::abs(previous), std::abs(res.value)})) {
      res.converged = true;
      res.status = "no further decrease";
      ++res.iterations;
      return res;
    }

    const double sy = s.dot(y);
    if (sy > 1e-14 * s.norm() * y.norm()) {
      if (!scaled) {
        hinv *= sy / y.squaredNorm();
        scaled = true;
      }
      const double rho = 1.0 / sy;
      const Vector hy = hinv * y;
      // (I - rho s y^T) H (I - rho y s^T) + rho s s^T, expanded.
      hinv.noalias() += (rho * rho * y.dot(hy) + rho) * (s * s.transpose()) -
                        rho * (hy * s.transpose() + s * hy.transpose());
    }
  }
  res.status = "iteration limit reached";
  return res;
}

}  // namespace trotterbench
