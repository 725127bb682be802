#pragma once

#include <span>

#include "lrct/bigint.hpp"
#include "lrct/expansion.hpp"
#include "lrct/lr_contingency.hpp"
#include "lrct/orthosymplectic.hpp"

namespace lrct {

// Cross-checks computed along routes independent of the table expansions.

// Invariant multiplicity for GL_n by clearing denominators: every weight is
// twisted by a power of det until polynomial, and the invariant multiplicity
// becomes the coefficient of one rectangular shape in a plain Schur product.
// Works for any n that can hold the weights; no stable-range assumption.
BigInt oracle_gl_invariants(const MarginSpec& margins);
// Same value for every choice of extra nonnegative twists, one per weight.
BigInt oracle_gl_invariants(const MarginSpec& margins, std::span<const int> extra_twists);

// Stable tensor-product expansion for the orthogonal and symplectic groups:
// the coefficient of s_lambda is sum over (alpha, beta, gamma) of
// c^mu_{alpha beta} c^nu_{alpha gamma} c^lambda_{beta gamma}.
ExpansionMap newell_littlewood_product(const Partition& mu, const Partition& nu);
BigInt newell_littlewood_coefficient(const Partition& lambda, const Partition& mu,
                                     const Partition& nu);

// Invariant multiplicity by folding pairwise products across the margins.
// Valid in the stable range only (throws OutsideStableRange below it).
BigInt oracle_osp_invariants(const SymMarginSpec& margins);

// End-to-end identity: in GL_{r+s+1}, the irreducible labelled
// ((r+1)^r, r^s) appears exactly once in the r-th tensor power of the hook
// (r+1, 1^s).  True whenever s >= r^2 + r, which is also what places the
// computation inside the stable range; smaller s is rejected.
bool hook_identity_check(int r, int s);

}  // namespace lrct
