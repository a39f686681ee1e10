#include "aec/fit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

#include "aec/errors.hpp"

namespace aec {

namespace {

constexpr double kProbClamp = 1e-12;
constexpr double kConditionLimit = 1e12;
// Beyond this the sigmoid is numerically 0 or 1: the gradient vanishes for
// the wrong reason (separation), so such iterates never count as converged.
constexpr double kEtaSaturation = 30.0;

void check_lengths(Eigen::Index nx, Eigen::Index ny) {
  if (nx != ny) {
    throw InvalidArgument("fit: x has " + std::to_string(nx) + " entries but y has " +
                          std::to_string(ny));
  }
  if (nx < 3) {
    throw InvalidArgument("fit: needs at least 3 samples, got " + std::to_string(nx));
  }
}

void check_binary_labels(const Eigen::Ref<const Eigen::VectorXd>& y) {
  bool saw_zero = false;
  bool saw_one = false;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (y(i) == 0.0) {
      saw_zero = true;
    } else if (y(i) == 1.0) {
      saw_one = true;
    } else {
      throw InvalidArgument("logistic fit: label " + std::to_string(y(i)) +
                            " at row " + std::to_string(i) + " is outside {0, 1}");
    }
  }
  if (!saw_zero || !saw_one) {
    throw InvalidArgument("logistic fit: only one class present in y");
  }
}

// Centered copy of X together with column means; used by both multivariate
// solvers.
struct CenteredDesign {
  Eigen::MatrixXd cols;
  Eigen::VectorXd means;
};

CenteredDesign center_design(const Eigen::Ref<const Eigen::MatrixXd>& X) {
  CenteredDesign d;
  d.means = X.colwise().mean();
  d.cols = X.rowwise() - d.means.transpose();
  return d;
}

std::string format_condition(double cond) {
  if (!std::isfinite(cond)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", cond);
  return buf;
}

// Eigendecomposition-based condition check of the centered Gram matrix.
// Returns the decomposition so OLS can reuse it for the solve.
Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> checked_gram_eigen(
    const Eigen::MatrixXd& centered) {
  const Eigen::MatrixXd gram = centered.transpose() * centered;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  const Eigen::VectorXd& lambda = es.eigenvalues();
  const double lambda_max = lambda(lambda.size() - 1);
  const double lambda_min = lambda(0);
  if (!(lambda_max > 0.0)) {
    throw SingularMatrixError("normal equations singular: all features constant");
  }
  const double cond = lambda_min > 0.0 ? lambda_max / lambda_min
                                       : std::numeric_limits<double>::infinity();
  if (cond > kConditionLimit) {
    throw SingularMatrixError("normal equations singular or ill-conditioned "
                              "(condition estimate " + format_condition(cond) + ")");
  }
  return es;
}

}  // namespace

double sigmoid(double eta) {
  if (eta >= 0.0) {
    return 1.0 / (1.0 + std::exp(-eta));
  }
  const double e = std::exp(eta);
  return e / (1.0 + e);
}

double bernoulli_log_likelihood(const Eigen::Ref<const Eigen::VectorXd>& eta,
                                const Eigen::Ref<const Eigen::VectorXd>& y) {
  double ll = 0.0;
  for (Eigen::Index i = 0; i < eta.size(); ++i) {
    const double e = eta(i);
    // softplus(e) = log(1 + exp(e)) without overflow
    const double softplus = std::max(e, 0.0) + std::log1p(std::exp(-std::abs(e)));
    ll += y(i) * e - softplus;
  }
  return ll;
}

UnivariateFit ols_univariate(const Eigen::Ref<const Eigen::VectorXd>& x,
                             const Eigen::Ref<const Eigen::VectorXd>& y,
                             const std::string& label) {
  check_lengths(x.size(), y.size());
  const double x_mean = x.mean();
  const double y_mean = y.mean();
  const Eigen::ArrayXd xc = x.array() - x_mean;
  const double sxx = (xc * xc).sum();
  if (sxx == 0.0) {
    throw InvalidArgument("zero-variance regressor '" + label + "'");
  }
  const double sxy = (xc * (y.array() - y_mean)).sum();
  UnivariateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = y_mean - fit.slope * x_mean;
  fit.kind = FitKind::Ols;
  fit.converged = true;
  fit.iterations = 0;
  return fit;
}

MultivariateFit ols_multivariate(const Eigen::Ref<const Eigen::MatrixXd>& X,
                                 const Eigen::Ref<const Eigen::VectorXd>& y) {
  check_lengths(X.rows(), y.size());
  if (X.rows() <= X.cols()) {
    throw InvalidArgument("ols_multivariate: needs more samples (" +
                          std::to_string(X.rows()) + ") than features (" +
                          std::to_string(X.cols()) + ")");
  }
  const CenteredDesign d = center_design(X);
  const auto es = checked_gram_eigen(d.cols);

  const double y_mean = y.mean();
  const Eigen::VectorXd rhs = d.cols.transpose() * (y.array() - y_mean).matrix();
  const Eigen::VectorXd beta =
      es.eigenvectors() *
      (es.eigenvectors().transpose() * rhs).cwiseQuotient(es.eigenvalues());

  MultivariateFit fit;
  fit.coefficients = beta;
  fit.intercept = y_mean - d.means.dot(beta);
  fit.kind = FitKind::Ols;
  fit.converged = true;
  fit.iterations = 0;
  return fit;
}

namespace {

struct IrlsResult {
  double intercept = 0.0;
  Eigen::VectorXd coefficients;
  bool converged = false;
  int iterations = 0;
};

// Newton / IRLS on the (intercept, coefficients) parameterization. X is the
// raw design without an intercept column.
IrlsResult irls_logistic(const Eigen::Ref<const Eigen::MatrixXd>& X,
                         const Eigen::Ref<const Eigen::VectorXd>& y,
                         const LogisticOptions& options) {
  const Eigen::Index m = X.rows();
  const Eigen::Index k = X.cols();

  IrlsResult r;
  const double y_mean = std::clamp(y.mean(), 1e-6, 1.0 - 1e-6);
  r.intercept = std::log(y_mean / (1.0 - y_mean));
  r.coefficients = Eigen::VectorXd::Zero(k);

  Eigen::VectorXd eta = Eigen::VectorXd::Constant(m, r.intercept);
  Eigen::VectorXd p(m), residual(m), weights(m);
  Eigen::MatrixXd hessian(k + 1, k + 1);
  Eigen::VectorXd gradient(k + 1);

  for (int iter = 0;; ++iter) {
    for (Eigen::Index i = 0; i < m; ++i) p(i) = sigmoid(eta(i));
    residual = y - p;
    gradient(0) = residual.sum();
    gradient.tail(k) = X.transpose() * residual;
    if (!gradient.allFinite()) {
      throw SolverDivergenceError("logistic fit: non-finite gradient at iteration " +
                                  std::to_string(iter));
    }

    if (gradient.cwiseAbs().maxCoeff() < options.tol) {
      r.converged = eta.cwiseAbs().maxCoeff() < kEtaSaturation;
      r.iterations = iter;
      return r;
    }
    if (iter >= options.max_iter) {
      r.converged = false;
      r.iterations = iter;
      return r;
    }

    for (Eigen::Index i = 0; i < m; ++i) {
      const double pc = std::clamp(p(i), kProbClamp, 1.0 - kProbClamp);
      weights(i) = pc * (1.0 - pc);
    }
    const Eigen::MatrixXd xw = X.array().colwise() * weights.array();
    hessian(0, 0) = weights.sum();
    hessian.block(1, 0, k, 1) = X.transpose() * weights;
    hessian.block(0, 1, 1, k) = hessian.block(1, 0, k, 1).transpose();
    hessian.block(1, 1, k, k) = X.transpose() * xw;

    const Eigen::VectorXd delta = hessian.ldlt().solve(gradient);
    if (!delta.allFinite()) {
      throw SolverDivergenceError("logistic fit: non-finite Newton step at iteration " +
                                  std::to_string(iter));
    }

    // Step halving: accept the first scale whose log-likelihood does not
    // decrease (within slack); bail out if none does.
    const double ll_old = bernoulli_log_likelihood(eta, y);
    const double slack = 1e-10 * (1.0 + std::abs(ll_old));
    double scale = 1.0;
    bool accepted = false;
    double new_intercept = r.intercept;
    Eigen::VectorXd new_coefficients = r.coefficients;
    Eigen::VectorXd new_eta = eta;
    for (int halving = 0; halving < 30; ++halving, scale *= 0.5) {
      new_intercept = r.intercept + scale * delta(0);
      new_coefficients = r.coefficients + scale * delta.tail(k);
      new_eta = ((X * new_coefficients).array() + new_intercept).matrix();
      const double ll_new = bernoulli_log_likelihood(new_eta, y);
      if (std::isfinite(ll_new) && ll_new >= ll_old - slack) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      r.converged = false;
      r.iterations = iter;
      return r;
    }
    r.intercept = new_intercept;
    r.coefficients = std::move(new_coefficients);
    eta = std::move(new_eta);
    if (!std::isfinite(r.intercept) || !r.coefficients.allFinite()) {
      throw SolverDivergenceError("logistic fit: non-finite coefficients at iteration " +
                                  std::to_string(iter));
    }
  }
}

}  // namespace

UnivariateFit logistic_univariate(const Eigen::Ref<const Eigen::VectorXd>& x,
                                  const Eigen::Ref<const Eigen::VectorXd>& y,
                                  const LogisticOptions& options,
                                  const std::string& label) {
  check_lengths(x.size(), y.size());
  check_binary_labels(y);
  if ((x.array() - x.mean()).square().sum() == 0.0) {
    throw InvalidArgument("zero-variance regressor '" + label + "'");
  }
  const IrlsResult r = irls_logistic(x, y, options);
  UnivariateFit fit;
  fit.slope = r.coefficients(0);
  fit.intercept = r.intercept;
  fit.kind = FitKind::Logistic;
  fit.converged = r.converged;
  fit.iterations = r.iterations;
  return fit;
}

MultivariateFit logistic_multivariate(const Eigen::Ref<const Eigen::MatrixXd>& X,
                                      const Eigen::Ref<const Eigen::VectorXd>& y,
                                      const LogisticOptions& options) {
  check_lengths(X.rows(), y.size());
  check_binary_labels(y);
  if (X.rows() <= X.cols()) {
    throw InvalidArgument("logistic_multivariate: needs more samples (" +
                          std::to_string(X.rows()) + ") than features (" +
                          std::to_string(X.cols()) + ")");
  }
  // Rank check up front: a deficient design would make every weighted
  // Hessian singular.
  checked_gram_eigen(center_design(X).cols);

  const IrlsResult r = irls_logistic(X, y, options);
  MultivariateFit fit;
  fit.coefficients = r.coefficients;
  fit.intercept = r.intercept;
  fit.kind = FitKind::Logistic;
  fit.converged = r.converged;
  fit.iterations = r.iterations;
  return fit;
}

double model_quality(const MultivariateFit& fit, const Dataset& d) {
  if (fit.coefficients.size() != d.n_features()) {
    throw InvalidArgument("model_quality: fit has " +
                          std::to_string(fit.coefficients.size()) +
                          " coefficients but dataset has " +
                          std::to_string(d.n_features()) + " features");
  }
  const Eigen::VectorXd eta =
      ((d.features() * fit.coefficients).array() + fit.intercept).matrix();
  if (fit.kind == FitKind::Ols) {
    const double sse = (d.target() - eta).squaredNorm();
    const double sst = (d.target().array() - d.target().mean()).square().sum();
    if (sst == 0.0) {
      return sse == 0.0 ? 1.0 : -std::numeric_limits<double>::infinity();
    }
    return 1.0 - sse / sst;
  }
  Eigen::Index correct = 0;
  for (Eigen::Index i = 0; i < eta.size(); ++i) {
    const double predicted = sigmoid(eta(i)) > 0.5 ? 1.0 : 0.0;
    if (predicted == d.target()(i)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(eta.size());
}

}  // namespace aec
