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

#pragma once

#include <functional>
#include <string>

#include "trotterbench/hamiltonian.hpp"

namespace trotterbench {

/// Returns f(x) and writes the gradient into `grad`.
using ObjectiveFn = std::function<double(const Vector& x, Vector& grad)>;

/// Called after each accepted step; returning true stops the run as converged.
using StopFn = std::function<bool(const Vector& x, double value)>;

struct BfgsOptions {
  int max_iterations = 500;
  double gradient_tolerance = 1e-10;  // max-norm of the gradient
  double value_tolerance = 1e-16;     // relative decrease per step
  double c1 = 1e-4;                   // sufficient decrease
  double c2 = 0.9;                    // curvature
  int max_line_search = 40;
};

struct BfgsResult {
  Vector x;
  double value = 0.0;
  Vector gradient;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
  std::string status;
};

/// Dense inverse-Hessian BFGS with a strong Wolfe line search.
BfgsResult minimize_bfgs(const ObjectiveFn& f, Vector x0, const BfgsOptions& options = {},
                         const StopFn& stop = nullptr);

}  // namespace trotterbench
