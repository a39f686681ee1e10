#pragma once

#include <Eigen/Dense>
#include <string>

#include "aec/dataset.hpp"

namespace aec {

enum class FitKind { Ols, Logistic };

/// Settings for the iteratively reweighted least squares solver. `tol` is the
/// max-norm convergence threshold on the log-likelihood gradient.
struct LogisticOptions {
  int max_iter = 100;
  double tol = 1e-8;
};

/// Slope/intercept of one univariate fit. OLS fits always converge with zero
/// iterations. Logistic fits report the IRLS iteration count; converged is
/// true iff the gradient max-norm fell below tol at an iterate whose linear
/// predictor is nowhere saturated (saturation means the data is separated and
/// no finite optimum exists, so the slope cannot be trusted).
struct UnivariateFit {
  double slope = 0.0;
  double intercept = 0.0;
  FitKind kind = FitKind::Ols;
  bool converged = true;
  int iterations = 0;
};

struct MultivariateFit {
  Eigen::VectorXd coefficients;
  double intercept = 0.0;
  FitKind kind = FitKind::Ols;
  bool converged = true;
  int iterations = 0;
};

/// Closed-form simple regression: slope = cov(x, y) / var(x), intercept picked
/// so residuals are centered. `label` names x in error messages.
UnivariateFit ols_univariate(const Eigen::Ref<const Eigen::VectorXd>& x,
                             const Eigen::Ref<const Eigen::VectorXd>& y,
                             const std::string& label = "x");

/// Least-squares fit with intercept via normal equations on centered data.
/// Throws SingularMatrixError when the Gram matrix condition estimate exceeds
/// 1e12 (rank-deficient or numerically meaningless system).
MultivariateFit ols_multivariate(const Eigen::Ref<const Eigen::MatrixXd>& X,
                                 const Eigen::Ref<const Eigen::VectorXd>& y);

/// Maximum-likelihood logistic fit by IRLS (Newton). Probabilities are
/// clamped to [1e-12, 1 - 1e-12] when forming the weights so the Hessian
/// stays positive definite; separated data therefore keeps a finite slope and
/// comes back with converged = false instead of an error.
UnivariateFit logistic_univariate(const Eigen::Ref<const Eigen::VectorXd>& x,
                                  const Eigen::Ref<const Eigen::VectorXd>& y,
                                  const LogisticOptions& options = {},
                                  const std::string& label = "x");

MultivariateFit logistic_multivariate(const Eigen::Ref<const Eigen::MatrixXd>& X,
                                      const Eigen::Ref<const Eigen::VectorXd>& y,
                                      const LogisticOptions& options = {});

/// R-squared for OLS fits; accuracy at the 0.5 probability threshold for
/// logistic fits.
double model_quality(const MultivariateFit& fit, const Dataset& d);

/// Numerically stable sigmoid.
double sigmoid(double eta);

/// Bernoulli log-likelihood of a linear predictor vector against 0/1 labels,
/// computed without overflow.
double bernoulli_log_likelihood(const Eigen::Ref<const Eigen::VectorXd>& eta,
                                const Eigen::Ref<const Eigen::VectorXd>& y);

}  // namespace aec
