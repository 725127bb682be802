#pragma once

#include <span>

#include "lrct/expansion.hpp"

namespace lrct {

// Littlewood-Richardson coefficient c^lambda_{mu nu}: the number of
// semistandard fillings of lambda/mu with content nu whose reverse reading
// word is a lattice word.  Results are memoized process-wide (thread-safe).
BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Schur expansion of s_mu * s_nu.  Partitions longer than max_length are
// pruned during generation, never by filtering afterwards.
ExpansionMap schur_product(const Partition& mu, const Partition& nu, int max_length = kNoLimit);

// Multiplication by a one-row shape s_(k): adds a horizontal strip of k boxes.
ExpansionMap pieri_row(const Partition& mu, int k, int max_length = kNoLimit);

// Multiplication by a one-column shape s_(1^k): adds a vertical strip.
ExpansionMap pieri_column(const Partition& mu, int k, int max_length = kNoLimit);

// Multiplicity of s_target in the product of Schur functions of `factors`.
// Intermediate expansions are capped at len(target) rows and pruned to shapes
// contained in target.  Memoized on (target, sorted factors).
BigInt multi_lr(const Partition& target, std::span<const Partition> factors);

// Drops all memoized results; useful in benchmarks and cache tests.
void clear_lr_caches();

}  // namespace lrct
