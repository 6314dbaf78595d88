#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

namespace lsade {

// Immutable (y, a, Z) sample. Rejects non-finite values at construction.
class Dataset {
 public:
  Dataset(Eigen::VectorXd y, Eigen::VectorXd a, Eigen::MatrixXd z);

  Eigen::Index n() const { return y_.size(); }
  Eigen::Index p() const { return z_.cols(); }
  const Eigen::VectorXd& y() const { return y_; }
  const Eigen::VectorXd& a() const { return a_; }
  const Eigen::MatrixXd& z() const { return z_; }

 private:
  Eigen::VectorXd y_;
  Eigen::VectorXd a_;
  Eigen::MatrixXd z_;
};

// Partition of rows into K folds; K = 1 encodes "no sample splitting".
class FoldAssignment {
 public:
  FoldAssignment(std::vector<int> fold_of, int k);

  int K() const { return k_; }
  Eigen::Index n() const { return static_cast<Eigen::Index>(fold_of_.size()); }
  int fold(Eigen::Index i) const { return fold_of_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& fold_of() const { return fold_of_; }

  std::vector<Eigen::Index> rows_in(int fold) const;
  std::vector<Eigen::Index> rows_not_in(int fold) const;

 private:
  std::vector<int> fold_of_;
  int k_;
};

enum class EstimandKind { Psi, psi };

enum class Algorithm { Alg1A, Alg1B, Alg2A, Alg2B, Alg1, Alg2 };

std::string to_string(EstimandKind e);
std::string to_string(Algorithm a);
std::optional<Algorithm> algorithm_from_string(const std::string& s);

// True when the algorithm carries no (A)/(B) substep, i.e. lambda/beta are
// never produced and only Psi can be inferred.
bool psi_capable(Algorithm a);
bool uses_splitting(Algorithm a);

// Per-observation out-of-fold nuisance values plus bookkeeping on how beta
// was regularized.
struct NuisancePredictions {
  Eigen::VectorXd pi_hat;
  Eigen::VectorXd mu_hat;
  std::optional<Eigen::VectorXd> lambda_hat;
  std::optional<Eigen::VectorXd> beta_hat;

  Algorithm algorithm = Algorithm::Alg1;
  int folds = 1;

  // DirectA without flooring: nonpositive beta values are kept and flow
  // into psi-hat (the estimator substitutes a guard only for exact zeros).
  bool beta_passthrough = false;
  int beta_guarded_rows = 0;  // exact-zero denominators replaced by DBL_MIN
  int beta_clipped_rows = 0;  // rows changed by flooring / inverse clipping
};

struct EstimateReport {
  EstimandKind estimand = EstimandKind::Psi;
  double point = 0.0;
  double variance = 0.0;
  double ci_lower = 0.0;
  double ci_upper = 0.0;
  double p_value = 1.0;
  Eigen::VectorXd ic_values;
  Algorithm algorithm = Algorithm::Alg1;
  Eigen::Index n = 0;
  int folds = 1;

  int beta_clipped_rows = 0;
  int beta_nonpositive_rows = 0;
};

}  // namespace lsade
