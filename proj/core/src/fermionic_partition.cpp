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

#include "trotterbench/fermionic_partition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "trotterbench/errors.hpp"
#include "trotterbench/orbital_rotation.hpp"

namespace trotterbench {

std::string to_string(FragmentKind kind) {
  switch (kind) {
    case FragmentKind::OneElectron: return "one-electron";
    case FragmentKind::LowRank: return "lr";
    case FragmentKind::FullRank: return "fr";
    case FragmentKind::LcuReflection: return "lcu-reflection";
  }
  return "unknown";
}

FragmentKind fragment_kind_from_string(const std::string& name) {
  for (auto k : {FragmentKind::OneElectron, FragmentKind::LowRank, FragmentKind::FullRank,
                 FragmentKind::LcuReflection})
    if (to_string(k) == name) return k;
  throw SchemaError("unknown fragment kind '" + name + "'");
}

namespace {

// Row (p*n + q), column i holds U_pi U_qi.
Matrix pair_products(const Matrix& u) {
  const int n = static_cast<int>(u.rows());
  Matrix x(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) x(p * n + q, i) = u(p, i) * u(q, i);
  return x;
}

Tensor4 tensor_from_supermatrix(const RowMatrix& m, int n) {
  Tensor4 t(n);
  std::copy(m.data(), m.data() + m.size(), t.data().begin());
  return t;
}

RowMatrix supermatrix_copy(const Tensor4& g) { return g.supermatrix(); }

double l1(const RowMatrix& m) { return m.cwiseAbs().sum(); }

Matrix frame_one_body(const Matrix& u, const Vector& diag) { return u * diag.asDiagonal() * u.transpose(); }

}  // namespace

int FermionFragment::n_spin() const {
  const auto k = static_cast<double>(angles.size());
  return static_cast<int>(std::lround((1.0 + std::sqrt(1.0 + 8.0 * k)) / 2.0));
}

Matrix FermionFragment::rotation() const { return rotation_matrix(angles, n_spin()); }

MolecularTensors FermionFragment::tensors() const {
  const int n = n_spin();
  MolecularTensors t = MolecularTensors::zeros(n / 2);
  const Matrix u = rotation();
  switch (kind) {
    case FragmentKind::OneElectron:
      t.h = frame_one_body(u, *onebody);
      break;
    case FragmentKind::LowRank:
    case FragmentKind::FullRank: {
      const Matrix x = pair_products(u);
      t.g = tensor_from_supermatrix(x * lambda * x.transpose(), n);
      break;
    }
    case FragmentKind::LcuReflection: {
      // sum l_ij r_i r_j = sum l + 4 sum l_ij n_i n_j - 4 sum_i s_i n_i, s = rowsum(l)
      const Matrix x = pair_products(u);
      t.g = tensor_from_supermatrix(4.0 * x * lambda * x.transpose(), n);
      t.h = frame_one_body(u, -4.0 * lambda.rowwise().sum());
      t.constant = lambda.sum();
      break;
    }
  }
  return t;
}

double FermionFragment::diagonal_energy(std::uint64_t occupation) const {
  const int n = n_spin();
  Vector occ(n);
  for (int i = 0; i < n; ++i) occ(i) = static_cast<double>((occupation >> i) & 1U);
  switch (kind) {
    case FragmentKind::OneElectron: return onebody->dot(occ);
    case FragmentKind::LowRank:
    case FragmentKind::FullRank: return occ.dot(lambda * occ);
    case FragmentKind::LcuReflection: {
      const Vector r = Vector::Ones(n) - 2.0 * occ;
      return r.dot(lambda * r);
    }
  }
  return 0.0;
}

int FermionPartition::two_body_count() const {
  return static_cast<int>(std::count_if(fragments.begin(), fragments.end(),
                                        [](const auto& f) { return f.kind != FragmentKind::OneElectron; }));
}

MolecularTensors reconstruct(const FermionPartition& p) {
  MolecularTensors t = MolecularTensors::zeros(p.n_spin / 2);
  t.constant = p.constant;
  t.n_electrons = p.target.n_electrons;
  for (const auto& f : p.fragments) {
    const auto ft = f.tensors();
    t.constant += ft.constant;
    t.h += ft.h;
    t.g += ft.g;
  }
  return t;
}

FermionFragment one_electron_fragment(const Matrix& h) {
  const auto frame = spin_adapted_eigh(h);
  Matrix w = frame.vectors;
  FermionFragment f;
  f.kind = FragmentKind::OneElectron;
  f.angles = rotation_angles(w);
  f.onebody = frame.values;
  return f;
}

namespace {

FermionPartition start_partition(const std::string& method, const MolecularTensors& t, double threshold) {
  require_valid(t);
  FermionPartition p;
  p.method = method;
  p.n_spin = t.n_spin();
  p.constant = t.constant;
  p.target = t;
  p.threshold = threshold;
  if (t.h.size() > 0 && t.h.cwiseAbs().maxCoeff() > 0.0) p.fragments.push_back(one_electron_fragment(t.h));
  return p;
}

struct Eigenpair {
  double value;
  Vector vector;
  double weight;  // |value| * ||vector||_1^2
};

// Supermatrix eigenpairs ordered by L1 weight (ties: larger eigenvalue first),
// eigenvectors with their first nonzero component positive.
std::vector<Eigenpair> supermatrix_eigenpairs(const RowMatrix& s) {
  const double asym = (s - s.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * std::max(1.0, s.cwiseAbs().maxCoeff())) {
    throw InternalError("two-electron supermatrix is not symmetric (max deviation " + std::to_string(asym) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(0.5 * (s + s.transpose())));
  Matrix vecs = es.eigenvectors();
  canonicalize_signs(vecs);
  std::vector<Eigenpair> out;
  for (Eigen::Index k = 0; k < vecs.cols(); ++k) {
    const double l1v = vecs.col(k).lpNorm<1>();
    out.push_back({es.eigenvalues()(k), vecs.col(k), std::abs(es.eigenvalues()(k)) * l1v * l1v});
  }
  std::stable_sort(out.begin(), out.end(), [](const Eigenpair& a, const Eigenpair& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.value > b.value;
  });
  return out;
}

Matrix reshape_pair_vector(const Vector& v, int n) {
  Matrix l(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) l(p, q) = v(p * n + q);
  return l;
}

}  // namespace

FermionPartition lr_decompose(const MolecularTensors& t, double threshold) {
  FermionPartition p = start_partition("lr", t, threshold);
  const int n = t.n_spin();
  RowMatrix residual = supermatrix_copy(t.g);
  p.residual_history.push_back(l1(residual));
  const auto pairs = supermatrix_eigenpairs(residual);
  double max_abs = 0.0;
  for (const auto& e : pairs) max_abs = std::max(max_abs, std::abs(e.value));
  for (const auto& e : pairs) {
    if (e.weight <= threshold || std::abs(e.value) <= 1e-13 * max_abs) continue;
    Matrix l = reshape_pair_vector(e.vector, n);
    if ((l - l.transpose()).cwiseAbs().maxCoeff() > 1e-8) {
      throw InternalError("supermatrix eigenvector does not reshape to a symmetric matrix");
    }
    l = 0.5 * (l + l.transpose());
    const auto frame = spin_adapted_eigh(l);
    Matrix w = frame.vectors;
    FermionFragment f;
    f.kind = FragmentKind::LowRank;
    f.angles = rotation_angles(w);
    f.rank1_sign = e.value < 0.0 ? -1.0 : 1.0;
    f.epsilon = std::sqrt(std::abs(e.value)) * frame.values;
    f.lambda = f.rank1_sign * (*f.epsilon) * f.epsilon->transpose();
    const Matrix x = pair_products(f.rotation());
    residual -= x * f.lambda * x.transpose();
    p.fragments.push_back(std::move(f));
    p.residual_history.push_back(l1(residual));
  }
  p.residual = tensor_from_supermatrix(residual, n);
  p.residual_l1 = l1(residual);
  return p;
}

namespace {

// Parameter layout for a set of full-rank fragments: per fragment, the free
// Givens angles followed by the upper triangle of lambda (row by row).
class FitModel {
 public:
  FitModel(int n, bool spin_conserving, int n_fragments) : n_(n), n_fragments_(n_fragments) {
    const auto mask = spin_conserving_pairs(n);
    for (int k = 0; k < angle_count(n); ++k)
      if (!spin_conserving || mask[static_cast<std::size_t>(k)]) free_.push_back(k);
    block_ = static_cast<int>(free_.size()) + n * (n + 1) / 2;
  }

  int size() const { return block_ * n_fragments_; }
  int fragments() const { return n_fragments_; }

  void unpack(const Vector& x, int l, std::vector<double>& angles, Matrix& lambda) const {
    const int off = l * block_;
    angles.assign(static_cast<std::size_t>(angle_count(n_)), 0.0);
    for (std::size_t k = 0; k < free_.size(); ++k) angles[static_cast<std::size_t>(free_[k])] = x(off + static_cast<int>(k));
    lambda.resize(n_, n_);
    int idx = off + static_cast<int>(free_.size());
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j) lambda(i, j) = lambda(j, i) = x(idx++);
  }

  void pack(int l, const std::vector<double>& angles, const Matrix& lambda, Vector& x) const {
    const int off = l * block_;
    for (std::size_t k = 0; k < free_.size(); ++k) x(off + static_cast<int>(k)) = angles[static_cast<std::size_t>(free_[k])];
    int idx = off + static_cast<int>(free_.size());
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j) x(idx++) = lambda(i, j);
  }

  void add_angle_noise(int l, Vector& x, std::mt19937_64& rng, double scale) const {
    std::uniform_real_distribution<double> dist(-scale, scale);
    for (std::size_t k = 0; k < free_.size(); ++k) x(l * block_ + static_cast<int>(k)) += dist(rng);
  }

  RowMatrix residual(const RowMatrix& target, const Vector& x) const {
    RowMatrix r = target;
    std::vector<double> angles;
    Matrix lambda;
    for (int l = 0; l < n_fragments_; ++l) {
      unpack(x, l, angles, lambda);
      const Matrix px = pair_products(rotation_matrix(angles, n_));
      r.noalias() -= px * lambda * px.transpose();
    }
    return r;
  }

  // 0.5 * ||target - model||_F^2 and its gradient.
  double evaluate(const RowMatrix& target, const Vector& x, Vector& grad) const {
    std::vector<std::vector<double>> angles(static_cast<std::size_t>(n_fragments_));
    std::vector<Matrix> lambdas(static_cast<std::size_t>(n_fragments_));
    std::vector<Matrix> us(static_cast<std::size_t>(n_fragments_)), xs(static_cast<std::size_t>(n_fragments_));
    RowMatrix r = target;
    for (int l = 0; l < n_fragments_; ++l) {
      const auto li = static_cast<std::size_t>(l);
      unpack(x, l, angles[li], lambdas[li]);
      us[li] = rotation_matrix(angles[li], n_);
      xs[li] = pair_products(us[li]);
      r.noalias() -= xs[li] * lambdas[li] * xs[li].transpose();
    }
    grad.resize(size());
    for (int l = 0; l < n_fragments_; ++l) {
      const auto li = static_cast<std::size_t>(l);
      const Matrix rx = r * xs[li];
      const Matrix m = xs[li].transpose() * rx;
      int idx = l * block_ + static_cast<int>(free_.size());
      for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) grad(idx++) = i == j ? -m(i, i) : -(m(i, j) + m(j, i));
      const Matrix d = -2.0 * rx * lambdas[li];
      Matrix du(n_, n_);
      for (int i = 0; i < n_; ++i) {
        Eigen::Map<const RowMatrix> di(d.col(i).data(), n_, n_);
        du.col(i) = (di + di.transpose()) * us[li].col(i);
      }
      const auto ga = rotation_gradient(angles[li], du);
      for (std::size_t k = 0; k < free_.size(); ++k) grad(l * block_ + static_cast<int>(k)) = ga[static_cast<std::size_t>(free_[k])];
    }
    return 0.5 * r.squaredNorm();
  }

  FermionFragment fragment(const Vector& x, int l) const {
    FermionFragment f;
    f.kind = FragmentKind::FullRank;
    unpack(x, l, f.angles, f.lambda);
    return f;
  }

 private:
  int n_;
  int n_fragments_;
  int block_ = 0;
  std::vector<int> free_;
};

// Frame of the k-th weighted supermatrix eigenpair of `target` with lambda = mu e e^T.
void seed_from_eigenpair(const Eigenpair& e, int n, bool spin_conserving, std::vector<double>& angles,
                         Matrix& lambda) {
  Matrix l = reshape_pair_vector(e.vector, n);
  l = 0.5 * (l + l.transpose());
  if (spin_conserving)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if ((p - q) % 2) l(p, q) = 0.0;
  const auto frame = spin_adapted_eigh(l);
  Matrix w = frame.vectors;
  angles = rotation_angles(w);
  lambda = e.value * frame.values * frame.values.transpose();
}

struct FitResult {
  Vector x;
  double l1 = 0.0;
  bool converged = false;
  std::string status;
};

// Minimizes the squared residual; keeps the iterate with the lowest true L1
// residual and stops once that drops to `stop_l1`.
FitResult fit(const FitModel& model, const RowMatrix& target, Vector x0, double stop_l1, const BfgsOptions& opt) {
  FitResult best;
  best.x = x0;
  best.l1 = l1(model.residual(target, x0));
  const ObjectiveFn f = [&](const Vector& x, Vector& g) { return model.evaluate(target, x, g); };
  const StopFn stop = [&](const Vector& x, double) {
    const double v = l1(model.residual(target, x));
    if (v < best.l1) {
      best.l1 = v;
      best.x = x;
    }
    return best.l1 <= stop_l1;
  };
  const auto res = minimize_bfgs(f, std::move(x0), opt, stop);
  best.converged = res.converged;
  best.status = res.status;
  return best;
}

}  // namespace

FermionPartition gfro_decompose(const MolecularTensors& t, double threshold, int max_fragments,
                                const FitOptions& options) {
  if (!(threshold > 0.0)) throw ValidationError("GFRO threshold must be positive");
  FermionPartition p = start_partition("gfro", t, threshold);
  p.seed = options.seed;
  const int n = t.n_spin();
  RowMatrix residual = supermatrix_copy(t.g);
  double current = l1(residual);
  p.residual_history.push_back(current);
  const FitModel model(n, options.spin_conserving, 1);
  int iteration = 0;
  while (current > threshold && iteration < max_fragments) {
    const auto seeds = supermatrix_eigenpairs(residual);
    FitResult best;
    best.l1 = std::numeric_limits<double>::infinity();
    for (int r = 0; r < std::max(1, options.restarts); ++r) {
      std::mt19937_64 rng(options.seed + 1000003ULL * static_cast<std::uint64_t>(iteration) + static_cast<std::uint64_t>(r));
      std::vector<double> angles;
      Matrix lambda;
      seed_from_eigenpair(seeds[static_cast<std::size_t>(r) % seeds.size()], n, options.spin_conserving, angles, lambda);
      Vector x0 = Vector::Zero(model.size());
      model.pack(0, angles, lambda, x0);
      model.add_angle_noise(0, x0, rng, options.angle_noise);
      auto res = fit(model, residual, std::move(x0), threshold, options.bfgs);
      if (res.l1 < best.l1) best = std::move(res);
    }
    if (!(best.l1 < current - 1e-12)) {
      p.diagnostics.push_back("gfro: iteration " + std::to_string(iteration + 1) +
                              " did not reduce the residual L1 (" + std::to_string(current) + "), stopping");
      break;
    }
    FermionFragment f = model.fragment(best.x, 0);
    const Matrix x = pair_products(f.rotation());
    residual -= x * f.lambda * x.transpose();
    current = l1(residual);
    p.fragments.push_back(std::move(f));
    p.residual_history.push_back(current);
    ++iteration;
  }
  p.converged = current <= threshold;
  p.residual = tensor_from_supermatrix(residual, n);
  p.residual_l1 = current;
  return p;
}

FermionPartition fro_decompose(const MolecularTensors& t, int n_fragments, double threshold,
                               const FitOptions& options, const FermionPartition* warm_start) {
  if (n_fragments < 1) throw ValidationError("FRO needs at least one fragment");
  FermionPartition p = start_partition("fro", t, threshold);
  p.seed = options.seed;
  const int n = t.n_spin();
  const RowMatrix target = supermatrix_copy(t.g);
  p.residual_history.push_back(l1(target));
  const FitModel model(n, options.spin_conserving, n_fragments);
  Vector x0 = Vector::Zero(model.size());
  std::mt19937_64 rng(options.seed);

  int seeded = 0;
  if (warm_start) {
    for (const auto& f : warm_start->fragments) {
      if (f.kind == FragmentKind::OneElectron) continue;
      if (seeded == n_fragments) break;
      if (f.kind != FragmentKind::FullRank && f.kind != FragmentKind::LowRank)
        throw ValidationError("FRO warm start needs LR or FR fragments");
      model.pack(seeded++, f.angles, f.lambda, x0);
    }
  }
  const RowMatrix start_residual = model.residual(target, x0);
  const auto seeds = supermatrix_eigenpairs(start_residual);
  for (int l = seeded, k = 0; l < n_fragments; ++l, ++k) {
    std::vector<double> angles;
    Matrix lambda;
    seed_from_eigenpair(seeds[static_cast<std::size_t>(k) % seeds.size()], n, options.spin_conserving, angles, lambda);
    // New fragments next to a warm start begin with zero weight so the
    // starting objective equals the warm start's.
    if (warm_start) lambda.setZero();
    model.pack(l, angles, lambda, x0);
    model.add_angle_noise(l, x0, rng, options.angle_noise);
  }
  const auto res = fit(model, target, x0, threshold, options.bfgs);
  for (int l = 0; l < n_fragments; ++l) p.fragments.push_back(model.fragment(res.x, l));
  const RowMatrix residual = model.residual(target, res.x);
  p.residual = tensor_from_supermatrix(residual, n);
  p.residual_l1 = l1(residual);
  p.residual_history.push_back(p.residual_l1);
  p.converged = res.converged || p.residual_l1 <= threshold;
  if (!p.converged) p.diagnostics.push_back("fro: optimizer stopped: " + res.status);
  return p;
}

MolecularTensors FoldedHamiltonian::to_original_frame() const {
  MolecularTensors t = rotated;
  t.g = transform(rotated.g, Matrix(rotation.transpose()));
  return t;
}

FoldedHamiltonian fold_one_body(const MolecularTensors& t) {
  require_valid(t);
  const int n = t.n_spin();
  const auto frame = spin_adapted_eigh(t.h);
  Matrix w = frame.vectors;
  FoldedHamiltonian out;
  out.angles = rotation_angles(w);
  out.rotation = rotation_matrix(out.angles, n);
  out.orbital_energies = frame.values;
  out.rotated = MolecularTensors::zeros(t.n_spatial);
  out.rotated.constant = t.constant;
  out.rotated.n_electrons = t.n_electrons;
  out.rotated.g = transform(t.g, out.rotation);
  // eps_p n_p = eps_p n_p n_p
  for (int p = 0; p < n; ++p) out.rotated.g(p, p, p, p) += frame.values(p);
  return out;
}

FermionPartition sd_gfro_decompose(const MolecularTensors& t, double threshold, int max_fragments,
                                   const FitOptions& options) {
  const auto folded = fold_one_body(t);
  FermionPartition p = gfro_decompose(folded.rotated, threshold, max_fragments, options);
  p.method = "sd-gfro";
  p.target = folded.to_original_frame();
  for (auto& f : p.fragments) {
    Matrix u = folded.rotation * f.rotation();
    f.angles = rotation_angles(u);
  }
  p.residual = transform(p.residual, Matrix(folded.rotation.transpose()));
  p.residual_l1 = p.residual.l1_norm();
  return p;
}

FermionPartition lcu_postprocess(const FermionPartition& in) {
  FermionPartition p = in;
  p.method = in.method + "-lcu";
  p.fragments.clear();
  const int n = in.n_spin;
  Matrix h_tilde = Matrix::Zero(n, n);
  std::vector<FermionFragment> reflections;
  for (const auto& f : in.fragments) {
    switch (f.kind) {
      case FragmentKind::OneElectron:
        h_tilde += f.tensors().h;
        break;
      case FragmentKind::LowRank:
      case FragmentKind::FullRank: {
        // sum_k g_pqkk of the fragment is U diag(rowsum lambda) U^T.
        const Matrix u = f.rotation();
        h_tilde += frame_one_body(u, f.lambda.rowwise().sum());
        p.constant -= 0.25 * f.lambda.sum();
        FermionFragment r = f;
        r.kind = FragmentKind::LcuReflection;
        r.lambda = 0.25 * f.lambda;
        if (f.epsilon) r.epsilon = 0.5 * (*f.epsilon);
        reflections.push_back(std::move(r));
        break;
      }
      case FragmentKind::LcuReflection:
        throw ValidationError("partition is already LCU post-processed");
    }
  }
  if (h_tilde.cwiseAbs().maxCoeff() > 0.0) p.fragments.push_back(one_electron_fragment(h_tilde));
  for (auto& r : reflections) p.fragments.push_back(std::move(r));
  return p;
}

RotationCount fermionic_rotation_count(int n_spin, int n_one_electron, int n_two_electron) {
  RotationCount c;
  const long long nn = n_spin;
  c.gamma = n_one_electron + n_two_electron;
  c.degenerate = c.gamma == 0;
  c.bound = std::max(0LL, 2 * nn * nn * c.gamma - nn);
  if (c.degenerate) return c;
  c.orbital_rotations = (c.gamma + 1) * nn * (nn - 1);
  c.two_body = n_two_electron * nn * (nn + 1);
  c.one_body = n_one_electron * nn;
  c.total = c.orbital_rotations + c.two_body + c.one_body;
  return c;
}

RotationCount fermionic_rotation_count(const FermionPartition& p) {
  const int two = p.two_body_count();
  return fermionic_rotation_count(p.n_spin, static_cast<int>(p.fragments.size()) - two, two);
}

std::string partition_to_json(const FermionPartition& p) {
  using nlohmann::json;
  json j;
  j["method"] = p.method;
  j["seed"] = p.seed;
  j["threshold"] = p.threshold;
  j["n_spin"] = p.n_spin;
  j["constant"] = p.constant;
  j["residual_l1"] = p.residual_l1;
  j["converged"] = p.converged;
  j["residual_history"] = p.residual_history;
  j["diagnostics"] = p.diagnostics;
  json frags = json::array();
  for (const auto& f : p.fragments) {
    json jf;
    jf["kind"] = to_string(f.kind);
    jf["angles"] = f.angles;
    if (f.lambda.size() > 0) {
      std::vector<double> flat;
      for (Eigen::Index i = 0; i < f.lambda.rows(); ++i)
        for (Eigen::Index k = 0; k < f.lambda.cols(); ++k) flat.push_back(f.lambda(i, k));
      jf["lambda"] = flat;
    }
    if (f.epsilon) {
      jf["epsilon"] = std::vector<double>(f.epsilon->data(), f.epsilon->data() + f.epsilon->size());
      jf["rank1_sign"] = f.rank1_sign;
    }
    if (f.onebody) jf["onebody"] = std::vector<double>(f.onebody->data(), f.onebody->data() + f.onebody->size());
    frags.push_back(std::move(jf));
  }
  j["fragments"] = std::move(frags);
  return j.dump(1);
}

FermionPartition partition_from_json(const std::string& text) {
  using nlohmann::json;
  FermionPartition p;
  try {
    const json j = json::parse(text);
    p.method = j.at("method").get<std::string>();
    p.seed = j.at("seed").get<std::uint64_t>();
    p.threshold = j.at("threshold").get<double>();
    p.n_spin = j.at("n_spin").get<int>();
    p.constant = j.at("constant").get<double>();
    p.residual_l1 = j.at("residual_l1").get<double>();
    p.converged = j.value("converged", true);
    p.residual_history = j.value("residual_history", std::vector<double>{});
    p.diagnostics = j.value("diagnostics", std::vector<std::string>{});
    for (const auto& jf : j.at("fragments")) {
      FermionFragment f;
      f.kind = fragment_kind_from_string(jf.at("kind").get<std::string>());
      f.angles = jf.at("angles").get<std::vector<double>>();
      if (static_cast<int>(f.angles.size()) != angle_count(p.n_spin)) throw SchemaError("fragment angle count mismatch");
      const int n = p.n_spin;
      if (jf.contains("lambda")) {
        const auto flat = jf.at("lambda").get<std::vector<double>>();
        if (static_cast<int>(flat.size()) != n * n) throw SchemaError("lambda size mismatch");
        f.lambda = Eigen::Map<const RowMatrix>(flat.data(), n, n);
      }
      if (jf.contains("epsilon")) {
        const auto e = jf.at("epsilon").get<std::vector<double>>();
        f.epsilon = Eigen::Map<const Vector>(e.data(), static_cast<Eigen::Index>(e.size()));
        f.rank1_sign = jf.value("rank1_sign", 1.0);
      }
      if (jf.contains("onebody")) {
        const auto e = jf.at("onebody").get<std::vector<double>>();
        f.onebody = Eigen::Map<const Vector>(e.data(), static_cast<Eigen::Index>(e.size()));
      }
      if (f.kind == FragmentKind::OneElectron ? !f.onebody : f.lambda.size() == 0)
        throw SchemaError("fragment is missing its coefficients");
      p.fragments.push_back(std::move(f));
    }
  } catch (const json::exception& e) {
    throw SchemaError(std::string("partition JSON: ") + e.what());
  }
  return p;
}

}  // namespace trotterbench
