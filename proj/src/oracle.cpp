#include "lrct/oracle.hpp"

#include <algorithm>
#include <vector>

#include "lrct/errors.hpp"
#include "lrct/lr_engine.hpp"

namespace lrct {

BigInt oracle_gl_invariants(const MarginSpec& margins) {
    return oracle_gl_invariants(margins, {});
}

BigInt oracle_gl_invariants(const MarginSpec& margins, std::span<const int> extra_twists) {
    if (!extra_twists.empty() && static_cast<int>(extra_twists.size()) != margins.rank())
        throw DimensionMismatch("need one twist per weight");
    for (int t : extra_twists)
        if (t < 0) throw PreconditionViolated("extra twists must be nonnegative");
    const int n = margins.n();
    long long total_twist = 0;
    std::vector<Partition> factors;
    factors.reserve(static_cast<size_t>(margins.rank()));
    for (int i = 0; i < margins.rank(); ++i) {
        const GlWeight& w = margins.weight(i);
        // The smallest twist clearing the negative entries is the largest
        // part of the minus partition.
        const int k = w.minus().part(1) + (extra_twists.empty() ? 0 : extra_twists[static_cast<size_t>(i)]);
        factors.push_back(w.det_twisted(k).plus());
        total_twist += k;
    }
    // Invariants correspond to copies of det^total inside the product of the
    // twisted factors, i.e. of the n x total_twist rectangle.
    Partition box = total_twist > 0
                        ? Partition(std::vector<int>(static_cast<size_t>(n),
                                                     static_cast<int>(total_twist)))
                        : Partition{};
    return multi_lr(box, factors);
}

ExpansionMap newell_littlewood_product(const Partition& mu, const Partition& nu) {
    ExpansionMap out;
    const long long overlap_max = std::min(mu.size(), nu.size());
    for (long long overlap = 0; overlap <= overlap_max; ++overlap) {
        for (const Partition& alpha :
             partitions_of(overlap, std::min(mu.length(), nu.length()),
                           std::min(mu.part(1), nu.part(1)))) {
            if (!mu.contains(alpha) || !nu.contains(alpha)) continue;
            std::vector<std::pair<Partition, BigInt>> betas, gammas;
            for (const Partition& beta : partitions_of(mu.size() - overlap, mu.length(), mu.part(1))) {
                if (!mu.contains(beta)) continue;
                BigInt c = lr_coefficient(mu, alpha, beta);
                if (c != 0) betas.emplace_back(beta, std::move(c));
            }
            for (const Partition& gamma : partitions_of(nu.size() - overlap, nu.length(), nu.part(1))) {
                if (!nu.contains(gamma)) continue;
                BigInt c = lr_coefficient(nu, alpha, gamma);
                if (c != 0) gammas.emplace_back(gamma, std::move(c));
            }
            for (const auto& [beta, cb] : betas) {
                for (const auto& [gamma, cg] : gammas) {
                    const BigInt weight = cb * cg;
                    for (const auto& [lambda, cl] : schur_product(beta, gamma))
                        out[lambda] += weight * cl;
                }
            }
        }
    }
    return out;
}

BigInt newell_littlewood_coefficient(const Partition& lambda, const Partition& mu,
                                     const Partition& nu) {
    const long long doubled = mu.size() + nu.size() - lambda.size();
    if (doubled < 0 || doubled % 2 != 0) return 0;
    const long long overlap = doubled / 2;
    BigInt total = 0;
    for (const Partition& alpha : partitions_of(overlap, std::min(mu.length(), nu.length()),
                                                std::min(mu.part(1), nu.part(1)))) {
        if (!mu.contains(alpha) || !nu.contains(alpha)) continue;
        for (const Partition& beta : partitions_of(mu.size() - overlap, mu.length(), mu.part(1))) {
            if (!mu.contains(beta)) continue;
            BigInt cb = lr_coefficient(mu, alpha, beta);
            if (cb == 0) continue;
            for (const Partition& gamma : partitions_of(nu.size() - overlap, nu.length(), nu.part(1))) {
                if (!nu.contains(gamma)) continue;
                BigInt cg = lr_coefficient(nu, alpha, gamma);
                if (cg == 0) continue;
                total += cb * cg * lr_coefficient(lambda, beta, gamma);
            }
        }
    }
    return total;
}

BigInt oracle_osp_invariants(const SymMarginSpec& margins) {
    if (!margins.in_stable_range())
        throw OutsideStableRange(
            "outside stable range: n = " + std::to_string(margins.n()) +
                " but the pairwise expansion needs n >= " +
                std::to_string(margins.stable_threshold()),
            margins.stable_threshold(), margins.n());
    ExpansionMap acc{{Partition{}, BigInt(1)}};
    for (const Partition& m : margins.margins()) {
        ExpansionMap next;
        for (const auto& [kappa, mult] : acc) {
            for (const auto& [lambda, ways] : newell_littlewood_product(kappa, m))
                next[lambda] += mult * ways;
        }
        acc = std::move(next);
    }
    return coefficient(acc, Partition{});
}

bool hook_identity_check(int r, int s) {
    if (r < 1) throw PreconditionViolated("r must be positive");
    if (s < r * r + r)
        throw PreconditionViolated("s must be at least r^2 + r = " + std::to_string(r * r + r) +
                                   " to stay inside the stable range");
    const int n = r + s + 1;
    std::vector<int> target_tuple(static_cast<size_t>(n), 0);
    for (int i = 0; i < r; ++i) target_tuple[static_cast<size_t>(i)] = r + 1;
    for (int i = r; i < r + s; ++i) target_tuple[static_cast<size_t>(i)] = r;
    const GlWeight target = split(target_tuple).det_twisted(-r);

    std::vector<int> hook_tuple(static_cast<size_t>(n), 0);
    hook_tuple[0] = r + 1;
    for (int i = 1; i <= s; ++i) hook_tuple[static_cast<size_t>(i)] = 1;
    const GlWeight hook = split(hook_tuple).det_twisted(-1);

    MarginSpec margins(std::vector<GlWeight>(static_cast<size_t>(r), hook));
    return lrc_general(target, margins) == 1;
}

}  // namespace lrct
