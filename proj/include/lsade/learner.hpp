#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lsade {

enum class LearnerKind { PolyRidge, KernelSmoother, Oracle };

std::string to_string(LearnerKind k);
std::optional<LearnerKind> learner_kind_from_string(const std::string& s);

std::vector<double> default_penalty_grid();  // 13 log-spaced in [1e-6, 1e2]

// Configuration for the built-in weighted-regression learners.
//
// PolyRidge: weighted ridge on a standardized polynomial basis (all
// monomials in at most interaction_order distinct features with total
// degree <= degree), penalty chosen by weighted K-fold cross-validation
// over penalty_grid with ties broken toward the larger penalty.
// KernelSmoother: weighted Nadaraya-Watson with a Gaussian product kernel.
// Oracle: wraps a caller-supplied function of the feature row and ignores
// the responses and weights entirely.
struct LearnerSpec {
  LearnerKind kind = LearnerKind::PolyRidge;
  int degree = 3;
  int interaction_order = 2;  // 1 = additive, 2 = pairwise products
  std::vector<double> penalty_grid = default_penalty_grid();
  std::optional<double> bandwidth;  // absolute; default rule-of-thumb per dim
  int cv_folds = 5;
  std::uint64_t seed = 2024;  // drives the CV fold split
  std::function<double(const Eigen::VectorXd&)> oracle_fn;
};

class Model {
 public:
  virtual ~Model() = default;
  virtual Eigen::VectorXd predict_impl(
      const Eigen::Ref<const Eigen::MatrixXd>& x) const = 0;
  virtual Eigen::Index input_dim() const = 0;
};

using FittedModel = std::shared_ptr<const Model>;

// Weighted least-squares fit of v on x. Absent weights mean unit weights;
// weights are normalized internally so scaling them by a positive constant
// does not change the fit.
FittedModel fit(const LearnerSpec& spec,
                const Eigen::Ref<const Eigen::MatrixXd>& x,
                const Eigen::Ref<const Eigen::VectorXd>& v,
                const std::optional<Eigen::VectorXd>& weights = std::nullopt);

Eigen::VectorXd predict(const FittedModel& model,
                        const Eigen::Ref<const Eigen::MatrixXd>& x_new);

}  // namespace lsade
