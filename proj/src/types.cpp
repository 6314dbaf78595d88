#include "lsade/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsade {

Dataset::Dataset(Eigen::VectorXd y, Eigen::VectorXd a, Eigen::MatrixXd z)
    : y_(std::move(y)), a_(std::move(a)), z_(std::move(z)) {
  const Eigen::Index n = y_.size();
  if (n < 2) throw std::invalid_argument("Dataset: need at least 2 rows");
  if (a_.size() != n || z_.rows() != n)
    throw std::invalid_argument("Dataset: y, a, z row counts differ");
  if (z_.cols() < 1)
    throw std::invalid_argument("Dataset: need at least one covariate");
  if (!y_.allFinite() || !a_.allFinite() || !z_.allFinite())
    throw std::invalid_argument("Dataset: non-finite values rejected");
}

FoldAssignment::FoldAssignment(std::vector<int> fold_of, int k)
    : fold_of_(std::move(fold_of)), k_(k) {
  if (k_ < 1) throw std::invalid_argument("FoldAssignment: K must be >= 1");
  const auto n = fold_of_.size();
  if (n == 0) throw std::invalid_argument("FoldAssignment: empty assignment");
  std::vector<std::size_t> counts(static_cast<std::size_t>(k_), 0);
  for (int f : fold_of_) {
    if (f < 0 || f >= k_)
      throw std::invalid_argument("FoldAssignment: fold index out of range");
    ++counts[static_cast<std::size_t>(f)];
  }
  const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  if (k_ > 1 && *lo == 0)
    throw std::invalid_argument("FoldAssignment: empty fold");
  if (*hi - *lo > 1)
    throw std::invalid_argument("FoldAssignment: fold sizes differ by > 1");
}

std::vector<Eigen::Index> FoldAssignment::rows_in(int fold) const {
  std::vector<Eigen::Index> out;
  for (std::size_t i = 0; i < fold_of_.size(); ++i)
    if (fold_of_[i] == fold) out.push_back(static_cast<Eigen::Index>(i));
  return out;
}

std::vector<Eigen::Index> FoldAssignment::rows_not_in(int fold) const {
  std::vector<Eigen::Index> out;
  for (std::size_t i = 0; i < fold_of_.size(); ++i)
    if (fold_of_[i] != fold) out.push_back(static_cast<Eigen::Index>(i));
  return out;
}

std::string to_string(EstimandKind e) {
  return e == EstimandKind::Psi ? "Psi" : "psi";
}

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Alg1A: return "1A";
    case Algorithm::Alg1B: return "1B";
    case Algorithm::Alg2A: return "2A";
    case Algorithm::Alg2B: return "2B";
    case Algorithm::Alg1: return "1";
    case Algorithm::Alg2: return "2";
  }
  return "?";
}

std::optional<Algorithm> algorithm_from_string(const std::string& s) {
  if (s == "1A") return Algorithm::Alg1A;
  if (s == "1B") return Algorithm::Alg1B;
  if (s == "2A") return Algorithm::Alg2A;
  if (s == "2B") return Algorithm::Alg2B;
  if (s == "1") return Algorithm::Alg1;
  if (s == "2") return Algorithm::Alg2;
  return std::nullopt;
}

bool psi_capable(Algorithm a) {
  return a != Algorithm::Alg1 && a != Algorithm::Alg2;
}

bool uses_splitting(Algorithm a) {
  return a == Algorithm::Alg2A || a == Algorithm::Alg2B || a == Algorithm::Alg2;
}

}  // namespace lsade
