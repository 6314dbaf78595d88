#include "lsade/folds.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "lsade/rng.hpp"

namespace lsade {

FoldAssignment make_folds(Eigen::Index n, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("make_folds: K must be >= 1");
  if (static_cast<Eigen::Index>(k) > n)
    throw std::invalid_argument("make_folds: K exceeds the number of rows");

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  if (k > 1) {
    Rng rng(seed);
    for (Eigen::Index i = n - 1; i > 0; --i) {
      const auto j = static_cast<Eigen::Index>(
          rng.below(static_cast<std::uint64_t>(i + 1)));
      std::swap(order[static_cast<std::size_t>(i)],
                order[static_cast<std::size_t>(j)]);
    }
  }

  std::vector<int> fold_of(static_cast<std::size_t>(n), 0);
  for (Eigen::Index pos = 0; pos < n; ++pos)
    fold_of[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] =
        static_cast<int>(pos % k);
  return FoldAssignment(std::move(fold_of), k);
}

}  // namespace lsade
