#pragma once

#include <cstdint>

#include "lsade/types.hpp"

namespace lsade {

// Balanced K-fold assignment: seeded Fisher-Yates shuffle of row indices,
// then round-robin over shuffled positions. Deterministic in (n, K, seed).
FoldAssignment make_folds(Eigen::Index n, int k, std::uint64_t seed);

}  // namespace lsade
