#pragma once

// Numerical search for complex matrix solutions of the Sklyanin relations:
// Levenberg-Marquardt on f(X,Y,Z) = sum_k |R_k|_F^2 with |X|^2+|Y|^2+|Z|^2 = 1.

#include "skly3/matrix.hpp"
#include "skly3/ncpoly.hpp"
#include "skly3/reps.hpp"

#include <ceres/ceres.h>
#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

namespace skly3 {

using cplx = std::complex<double>;

/// Packed real parameters: for each of X, Y, Z the d*d entries row-major,
/// real part then imaginary part.  Length 6*d*d.
class RelationSystem {
public:
  RelationSystem(cplx a, cplx b, cplx c, std::size_t d) : d_(d), coef_{a, b, c} {
    if (d == 0) throw PreconditionError("dimension must be positive");
  }

  explicit RelationSystem(const ParameterTriple<ComplexField>& p, std::size_t d) : RelationSystem(p.a(), p.b(), p.c(), d) {}

  std::size_t dimension() const { return d_; }
  std::size_t num_parameters() const { return 6 * d_ * d_; }
  std::size_t num_relation_residuals() const { return 6 * d_ * d_; }

  using CMat = Eigen::MatrixXcd;

  std::array<CMat, 3> unpack(const double* v) const {
    std::array<CMat, 3> m;
    const std::size_t n = d_ * d_;
    for (std::size_t g = 0; g < 3; ++g) {
      m[g].resize(d_, d_);
      for (std::size_t k = 0; k < n; ++k) m[g](k / d_, k % d_) = cplx(v[2 * (g * n + k)], v[2 * (g * n + k) + 1]);
    }
    return m;
  }

  std::vector<double> pack(const std::array<CMat, 3>& m) const {
    const std::size_t n = d_ * d_;
    std::vector<double> v(num_parameters());
    for (std::size_t g = 0; g < 3; ++g)
      for (std::size_t k = 0; k < n; ++k) {
        v[2 * (g * n + k)] = m[g](k / d_, k % d_).real();
        v[2 * (g * n + k) + 1] = m[g](k / d_, k % d_).imag();
      }
    return v;
  }

  /// R_0 = aYZ + bZY + cXX, R_1 = aZX + bXZ + cYY, R_2 = aXY + bYX + cZZ.
  std::array<CMat, 3> relations(const std::array<CMat, 3>& m) const {
    std::array<CMat, 3> r;
    for (std::size_t k = 0; k < 3; ++k) {
      r[k] = CMat::Zero(d_, d_);
      for (const auto& t : terms_[k]) r[k] += coef_[t.coef] * m[t.left] * m[t.right];
    }
    return r;
  }

  double objective(const double* v) const {
    double f = 0.0;
    for (const auto& r : relations(unpack(v))) f += r.squaredNorm();
    return f;
  }

  /// Gradient of the objective in the packed real coordinates.
  std::vector<double> gradient(const double* v) const {
    const auto m = unpack(v);
    const auto r = relations(m);
    std::array<CMat, 3> g;
    for (auto& e : g) e = CMat::Zero(d_, d_);
    for (std::size_t k = 0; k < 3; ++k)
      for (const auto& t : terms_[k]) {
        const cplx cc = std::conj(coef_[t.coef]);
        g[t.left] += cc * r[k] * m[t.right].adjoint();
        g[t.right] += cc * m[t.left].adjoint() * r[k];
      }
    std::vector<double> out(num_parameters());
    const std::size_t n = d_ * d_;
    for (std::size_t gi = 0; gi < 3; ++gi)
      for (std::size_t k = 0; k < n; ++k) {
        out[2 * (gi * n + k)] = 2.0 * g[gi](k / d_, k % d_).real();
        out[2 * (gi * n + k) + 1] = 2.0 * g[gi](k / d_, k % d_).imag();
      }
    return out;
  }

  /// Real residual vector (Re, Im of every relation entry) and, when jac is
  /// non-null, its row-major Jacobian.
  void residuals(const double* v, double* res, double* jac) const {
    const auto m = unpack(v);
    const auto r = relations(m);
    const std::size_t n = d_ * d_;
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t e = 0; e < n; ++e) {
        res[2 * (k * n + e)] = r[k](e / d_, e % d_).real();
        res[2 * (k * n + e) + 1] = r[k](e / d_, e % d_).imag();
      }
    if (!jac) return;
    const std::size_t np = num_parameters();
    std::fill(jac, jac + num_relation_residuals() * np, 0.0);
    // holomorphic derivative w of R_k(i,j) by entry (s,t) of generator G
    auto put = [&](std::size_t k, std::size_t i, std::size_t j, std::size_t gen, std::size_t s, std::size_t t, cplx w) {
      const std::size_t row = 2 * (k * n + i * d_ + j);
      const std::size_t col = 2 * (gen * n + s * d_ + t);
      jac[row * np + col] += w.real();
      jac[row * np + col + 1] -= w.imag();
      jac[(row + 1) * np + col] += w.imag();
      jac[(row + 1) * np + col + 1] += w.real();
    };
    for (std::size_t k = 0; k < 3; ++k)
      for (const auto& term : terms_[k]) {
        const cplx c = coef_[term.coef];
        const CMat& L = m[term.left];
        const CMat& M = m[term.right];
        for (std::size_t i = 0; i < d_; ++i)
          for (std::size_t j = 0; j < d_; ++j)
            for (std::size_t q = 0; q < d_; ++q) {
              // d(L M)_ij / dL_iq = M_qj ; d(L M)_ij / dM_qj = L_iq
              put(k, i, j, term.left, i, q, c * M(q, j));
              put(k, i, j, term.right, q, j, c * L(i, q));
            }
      }
  }

private:
  struct Term {
    std::size_t coef, left, right;
  };

  std::size_t d_;
  std::array<cplx, 3> coef_;
  // generator indices 0 = X, 1 = Y, 2 = Z; coefficient indices 0 = a, 1 = b, 2 = c
  std::array<std::array<Term, 3>, 3> terms_{{{{{0, 1, 2}, {1, 2, 1}, {2, 0, 0}}},
                                             {{{0, 2, 0}, {1, 0, 2}, {2, 1, 1}}},
                                             {{{0, 0, 1}, {1, 1, 0}, {2, 2, 2}}}}};
};

namespace detail {

class RelationCost final : public ceres::CostFunction {
public:
  explicit RelationCost(const RelationSystem& sys) : sys_(sys) {
    set_num_residuals(static_cast<int>(sys.num_relation_residuals() + 1));
    mutable_parameter_block_sizes()->push_back(static_cast<int>(sys.num_parameters()));
  }

  bool Evaluate(double const* const* parameters, double* residuals, double** jacobians) const override {
    const double* v = parameters[0];
    const std::size_t np = sys_.num_parameters();
    const std::size_t nr = sys_.num_relation_residuals();
    double* jac = jacobians ? jacobians[0] : nullptr;
    sys_.residuals(v, residuals, jac);
    double sq = 0.0;
    for (std::size_t i = 0; i < np; ++i) sq += v[i] * v[i];
    residuals[nr] = sq - 1.0;
    if (jac)
      for (std::size_t i = 0; i < np; ++i) jac[nr * np + i] = 2.0 * v[i];
    return true;
  }

private:
  const RelationSystem& sys_;
};

} // namespace detail

struct SearchOptions {
  std::size_t restarts = 50;
  /// accept when sqrt(f) < tolerance
  double tolerance = 1e-10;
  std::uint64_t seed = 1;
  unsigned threads = 0; // 0: hardware concurrency
  int max_iterations = 1000;
};

struct SearchHit {
  std::size_t restart = 0;
  MatRep<ComplexField> rep;
  RepClassification<ComplexField> classification;
  double objective = 0.0;
  bool trivial = false;
  std::vector<cplx> eigen_x, eigen_y, eigen_g;
};

/// Eigenvalues sorted by (real, imag).
inline std::vector<cplx> sorted_eigenvalues(const Matrix<ComplexField>& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(e, false);
  std::vector<cplx> out(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.begin(), out.end(), [](cplx a, cplx b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
  return out;
}

struct RestartOutcome {
  std::vector<double> point;
  double objective = 0.0;
};

/// One restart: complex standard normal start from an mt19937_64 stream keyed
/// by (seed, restart index), then Levenberg-Marquardt.
inline RestartOutcome run_restart(const RelationSystem& sys, std::uint64_t seed, std::size_t restart,
                                  int max_iterations) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart), static_cast<std::uint32_t>(restart >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  std::vector<double> v(sys.num_parameters());
  double sq = 0.0;
  for (auto& e : v) {
    e = normal(rng);
    sq += e * e;
  }
  for (auto& e : v) e /= std::sqrt(sq);

  ceres::Problem::Options popts;
  popts.cost_function_ownership = ceres::TAKE_OWNERSHIP;
  ceres::Problem problem(popts);
  problem.AddResidualBlock(new detail::RelationCost(sys), nullptr, v.data());
  ceres::Solver::Options opts;
  opts.minimizer_type = ceres::TRUST_REGION;
  opts.trust_region_strategy_type = ceres::LEVENBERG_MARQUARDT;
  opts.linear_solver_type = ceres::DENSE_QR;
  opts.max_num_iterations = max_iterations;
  opts.function_tolerance = 1e-20;
  opts.gradient_tolerance = 1e-24;
  opts.parameter_tolerance = 1e-20;
  opts.num_threads = 1;
  opts.logging_type = ceres::SILENT;
  opts.minimizer_progress_to_stdout = false;
  ceres::Solver::Summary summary;
  ceres::Solve(opts, &problem, &summary);
  return {v, sys.objective(v.data())};
}

/// Restarts run independently (optionally in parallel); hits are reported in
/// restart order.
inline std::vector<SearchHit> search_numeric(const ParameterTriple<ComplexField>& params, std::size_t d,
                                             const SearchOptions& opt = {}) {
  const RelationSystem sys(params, d);
  std::vector<RestartOutcome> outcomes(opt.restarts);
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, opt.restarts)));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t r = t; r < opt.restarts; r += threads)
        outcomes[r] = run_restart(sys, opt.seed, r, opt.max_iterations);
    });
  for (auto& th : pool) th.join();

  const ComplexField& f = params.field();
  std::vector<SearchHit> hits;
  for (std::size_t r = 0; r < opt.restarts; ++r) {
    const auto& out = outcomes[r];
    if (!(std::sqrt(out.objective) < opt.tolerance)) continue;
    const auto m = sys.unpack(out.point.data());
    auto to_matrix = [&](const Eigen::MatrixXcd& e) {
      Matrix<ComplexField> mm(f, d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) mm(i, j) = e(i, j);
      return mm;
    };
    MatRep<ComplexField> rep(to_matrix(m[0]), to_matrix(m[1]), to_matrix(m[2]), Provenance::numerical_search);
    auto cls = classify_rep(params, rep);
    const Matrix<ComplexField> g = evaluate(central_g(params), rep);
    SearchHit hit{r, rep, cls, out.objective, false, sorted_eigenvalues(rep.X), sorted_eigenvalues(rep.Y),
                  sorted_eigenvalues(g)};
    double spectral = 0.0;
    for (auto e : sorted_eigenvalues(rep.X + rep.Y + rep.Z)) spectral = std::max(spectral, std::abs(e));
    const double gs = cls.g.scalar ? std::abs(*cls.g.scalar) : 0.0;
    hit.trivial = gs + spectral <= 1e-9;
    hits.push_back(std::move(hit));
  }
  return hits;
}

} // namespace skly3
