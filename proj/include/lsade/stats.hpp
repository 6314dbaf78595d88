#pragma once

#include <Eigen/Core>
#include <cstddef>

namespace lsade {

namespace detail {

// Cascade summation over a contiguous buffer. Fixed evaluation order, so
// results are identical no matter how the surrounding work is threaded.
inline double pairwise_sum(const double* x, Eigen::Index n) {
  if (n <= 32) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const Eigen::Index half = n / 2;
  return pairwise_sum(x, half) + pairwise_sum(x + half, n - half);
}

}  // namespace detail

// Deterministic pairwise sum of any dense Eigen vector expression.
template <typename Derived>
double pairwise_sum(const Eigen::DenseBase<Derived>& v) {
  EIGEN_STATIC_ASSERT_VECTOR_ONLY(Derived)
  decltype(auto) x = v.derived().eval();
  return detail::pairwise_sum(x.data(), x.size());
}

template <typename Derived>
double pairwise_mean(const Eigen::DenseBase<Derived>& v) {
  return pairwise_sum(v) / static_cast<double>(v.size());
}

// Weighted first and second moments; weights need not be normalized.
template <typename DerivedV, typename DerivedW>
double weighted_mean(const Eigen::DenseBase<DerivedV>& v,
                     const Eigen::DenseBase<DerivedW>& w) {
  return pairwise_sum(v.derived().array() * w.derived().array()) /
         pairwise_sum(w);
}

template <typename DerivedV, typename DerivedW>
double weighted_variance(const Eigen::DenseBase<DerivedV>& v,
                         const Eigen::DenseBase<DerivedW>& w) {
  const double m = weighted_mean(v, w);
  return pairwise_sum((v.derived().array() - m).square() *
                      w.derived().array()) /
         pairwise_sum(w);
}

// Standard normal inverse CDF. Acklam's rational approximation polished with
// one Halley step against erfc, accurate to a few ulp over (0, 1).
double normal_quantile(double p);

// Standard normal CDF via erfc.
double normal_cdf(double x);

struct WaldResult {
  double ci_lower = 0.0;
  double ci_upper = 0.0;
  double p_value = 1.0;
};

// Two-sided normal test of point = 0 and the matching confidence interval.
// variance = 0 gives a degenerate interval and p in {0, 1}.
WaldResult wald_inference(double point, double variance, double level);

}  // namespace lsade
