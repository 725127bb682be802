#include "lrct/lr_engine.hpp"

#include <algorithm>
#include <climits>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "lrct/errors.hpp"

namespace lrct {

namespace {

// ---------------------------------------------------------------------------
// Littlewood-Richardson coefficient by direct enumeration of semistandard
// fillings of lambda/mu with content nu.  The lattice condition on the
// reverse reading word is equivalent to a per-row prefix inequality: for every
// row i and value v >= 2, the number of v's in rows 1..i never exceeds the
// number of (v-1)'s in rows 1..i-1.  That lets the filler reject a value the
// moment it is placed instead of checking whole words at the leaves.

struct SkewLatticeCounter {
    std::vector<int> lam;      // lambda parts
    std::vector<int> mu;       // mu padded to lambda's length
    std::vector<int> content;  // nu parts; entries take values 1..m
    int rows = 0;
    int m = 0;

    std::vector<int> placed;     // placed[v-1]: v's placed so far
    std::vector<int> row_start;  // snapshot of `placed` at the current row's start
    std::vector<int> col_val;    // col_val[j]: value directly above in column j, else 0
    BigInt total = 0;

    BigInt count() {
        placed.assign(m, 0);
        row_start.assign(m, 0);
        col_val.assign(static_cast<size_t>(rows ? lam[0] + 2 : 2), 0);
        total = 0;
        next_row(1);
        return total;
    }

    void next_row(int i) {
        if (i > rows) {
            total += 1;
            return;
        }
        next_cell(i, mu[i - 1] + 1, 0);
    }

    void next_cell(int i, int j, int left) {
        if (j > lam[i - 1]) {
            std::vector<int> saved = row_start;
            row_start = placed;
            next_row(i + 1);
            row_start = std::move(saved);
            return;
        }
        // Strict increase down columns forces value v into rows >= v, so cap
        // candidates at the row index.
        const int lo = std::max({1, left, col_val[j] + 1});
        const int hi = std::min(m, i);
        for (int v = lo; v <= hi; ++v) {
            if (placed[v - 1] >= content[v - 1]) continue;
            if (v >= 2 && placed[v - 1] + 1 > row_start[v - 2]) continue;
            ++placed[v - 1];
            const int above = col_val[j];
            col_val[j] = v;
            next_cell(i, j + 1, v);
            col_val[j] = above;
            --placed[v - 1];
        }
    }
};

BigInt count_lr_fillings(const Partition& lambda, const Partition& mu, const Partition& nu) {
    SkewLatticeCounter counter;
    counter.lam = lambda.parts();
    counter.mu = mu.parts();
    counter.mu.resize(counter.lam.size(), 0);
    counter.content = nu.parts();
    counter.rows = lambda.length();
    counter.m = nu.length();
    return counter.count();
}

struct TripleKey {
    Partition lambda, first, second;
    bool operator==(const TripleKey&) const = default;
};

struct TripleHash {
    size_t operator()(const TripleKey& k) const {
        PartitionHash h;
        size_t r = h(k.lambda);
        r = r * 1000003u ^ h(k.first);
        r = r * 1000003u ^ h(k.second);
        return r;
    }
};

struct MultiKey {
    Partition target;
    std::vector<Partition> factors;
    bool operator==(const MultiKey&) const = default;
};

struct MultiHash {
    size_t operator()(const MultiKey& k) const {
        PartitionHash h;
        size_t r = h(k.target);
        for (const Partition& p : k.factors) r = r * 1000003u ^ h(p);
        return r;
    }
};

// One logical cache per operation; readers take a shared lock, a missing
// entry is computed outside any lock and inserted afterwards (duplicated work
// on a race is harmless, a torn read would not be).
std::shared_mutex lr_mutex;
std::unordered_map<TripleKey, BigInt, TripleHash> lr_memo;

std::shared_mutex multi_mutex;
std::unordered_map<MultiKey, BigInt, MultiHash> multi_memo;

// ---------------------------------------------------------------------------
// Schur products by iterated strip addition.  Multiplying s_mu by s_nu adds,
// for each value v = 1..len(nu), a horizontal strip of nu_v boxes labelled v,
// subject to the same prefix inequality as above between consecutive strips.

struct StripExpander {
    int cap = kNoLimit;              // maximum number of rows in any result
    const Partition* within = nullptr;  // optional containment bound
    std::vector<int> content;
    int m = 0;
    int R = 0;  // rows available in the work arrays
    ExpansionMap out;

    void run(const Partition& mu, const Partition& nu) {
        if (cap < 0) return;
        if (mu.length() > cap) return;
        if (within && !within->contains(mu)) return;
        content = nu.parts();
        m = nu.length();
        long long max_rows = static_cast<long long>(mu.length()) + nu.size();
        R = static_cast<int>(std::min<long long>(max_rows, cap));
        std::vector<int> shape(static_cast<size_t>(R), 0);
        for (int i = 0; i < mu.length(); ++i) shape[static_cast<size_t>(i)] = mu.part(i + 1);
        std::vector<int> no_prev(static_cast<size_t>(R) + 1, INT_MAX);
        next_value(shape, 1, no_prev);
    }

    void emit(const std::vector<int>& shape) {
        std::vector<int> parts = shape;
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        out[Partition(std::move(parts))] += 1;
    }

    // prev_prefix[i]: boxes of value v-1 added in rows 1..i (INT_MAX = no bound).
    void next_value(std::vector<int>& shape, int v, const std::vector<int>& prev_prefix) {
        if (v > m) {
            emit(shape);
            return;
        }
        std::vector<int> nshape = shape;
        std::vector<int> nprefix(static_cast<size_t>(R) + 1, 0);
        place(shape, nshape, v, 1, content[v - 1], nprefix, prev_prefix);
    }

    void place(const std::vector<int>& shape, std::vector<int>& nshape, int v, int i, int rem,
               std::vector<int>& nprefix, const std::vector<int>& prev_prefix) {
        if (rem == 0) {
            for (int j = i; j <= R; ++j) nprefix[j] = nprefix[i - 1];
            next_value(nshape, v + 1, nprefix);
            return;
        }
        if (i > R) return;
        // Once the pre-strip shape runs out of rows, no later row can take a
        // box (a strip may overhang its shape by at most one row).
        if (i >= 2 && shape[i - 2] == 0) return;
        const int old = shape[i - 1];
        long long hi = static_cast<long long>(old) + rem;
        if (i >= 2) hi = std::min<long long>({hi, shape[i - 2], nshape[i - 2]});
        if (within) hi = std::min<long long>(hi, within->part(i));
        long long amax = hi - old;
        if (prev_prefix[i - 1] != INT_MAX)
            amax = std::min<long long>(amax, prev_prefix[i - 1] - nprefix[i - 1]);
        for (long long a = 0; a <= amax; ++a) {
            nshape[i - 1] = old + static_cast<int>(a);
            nprefix[i] = nprefix[i - 1] + static_cast<int>(a);
            place(shape, nshape, v, i + 1, rem - static_cast<int>(a), nprefix, prev_prefix);
        }
        nshape[i - 1] = old;
    }
};

ExpansionMap expand_product(const Partition& mu, const Partition& nu, int cap,
                            const Partition* within) {
    StripExpander ex;
    ex.cap = cap;
    ex.within = within;
    ex.run(mu, nu);
    return std::move(ex.out);
}

}  // namespace

BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (mu.size() + nu.size() != lambda.size()) return 0;
    if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;
    // The coefficient is symmetric in (mu, nu); cache one orientation and
    // enumerate with the smaller partition as the content.
    const Partition& small = (nu < mu) ? nu : mu;
    const Partition& large = (nu < mu) ? mu : nu;
    TripleKey key{lambda, small, large};
    {
        std::shared_lock lock(lr_mutex);
        auto it = lr_memo.find(key);
        if (it != lr_memo.end()) return it->second;
    }
    BigInt result = count_lr_fillings(lambda, large, small);
    {
        std::unique_lock lock(lr_mutex);
        lr_memo.emplace(std::move(key), result);
    }
    return result;
}

ExpansionMap schur_product(const Partition& mu, const Partition& nu, int max_length) {
    return expand_product(mu, nu, max_length, nullptr);
}

ExpansionMap pieri_row(const Partition& mu, int k, int max_length) {
    if (k < 0) throw PreconditionViolated("strip size must be nonnegative");
    ExpansionMap out;
    if (max_length < 0 || mu.length() > max_length) return out;
    const int rows = std::min(mu.length() + 1, max_length);
    std::vector<int> shape(static_cast<size_t>(std::max(rows, mu.length())), 0);
    for (int i = 0; i < mu.length(); ++i) shape[static_cast<size_t>(i)] = mu.part(i + 1);
    // rec(i, rem): distribute rem boxes over rows i.., at most one strip box
    // run per row, never below the previous row's old length.
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (rem == 0) {
            std::vector<int> parts = shape;
            while (!parts.empty() && parts.back() == 0) parts.pop_back();
            out[Partition(std::move(parts))] += 1;
            return;
        }
        if (i > rows) return;
        const int old = mu.part(i);
        if (i >= 2 && mu.part(i - 1) == 0) return;
        const int amax = (i == 1) ? rem : std::min(rem, mu.part(i - 1) - old);
        for (int a = 0; a <= amax; ++a) {
            shape[static_cast<size_t>(i - 1)] = old + a;
            self(self, i + 1, rem - a);
        }
        shape[static_cast<size_t>(i - 1)] = old;
    };
    rec(rec, 1, k);
    return out;
}

ExpansionMap pieri_column(const Partition& mu, int k, int max_length) {
    if (k < 0) throw PreconditionViolated("strip size must be nonnegative");
    ExpansionMap out;
    if (max_length < 0 || mu.length() > max_length) return out;
    const long long rows_ll = std::min<long long>(static_cast<long long>(mu.length()) + k, max_length);
    const int rows = static_cast<int>(rows_ll);
    std::vector<int> shape(static_cast<size_t>(std::max(rows, mu.length())), 0);
    for (int i = 0; i < mu.length(); ++i) shape[static_cast<size_t>(i)] = mu.part(i + 1);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (rem == 0) {
            std::vector<int> parts = shape;
            while (!parts.empty() && parts.back() == 0) parts.pop_back();
            out[Partition(std::move(parts))] += 1;
            return;
        }
        if (i > rows || rows - i + 1 < rem) return;
        const int old = mu.part(i);
        const int prev_new = (i == 1) ? INT_MAX : shape[static_cast<size_t>(i - 2)];
        for (int b = 0; b <= 1; ++b) {
            if (old + b > prev_new) break;
            shape[static_cast<size_t>(i - 1)] = old + b;
            self(self, i + 1, rem - b);
        }
        shape[static_cast<size_t>(i - 1)] = old;
    };
    rec(rec, 1, k);
    return out;
}

BigInt multi_lr(const Partition& target, std::span<const Partition> factors) {
    long long total = 0;
    for (const Partition& f : factors) total += f.size();
    if (total != target.size()) return 0;

    MultiKey key;
    key.target = target;
    for (const Partition& f : factors)
        if (!f.empty()) key.factors.push_back(f);
    std::sort(key.factors.begin(), key.factors.end());
    if (key.factors.empty()) return target.empty() ? 1 : 0;
    {
        std::shared_lock lock(multi_mutex);
        auto it = multi_memo.find(key);
        if (it != multi_memo.end()) return it->second;
    }

    // Left fold; every intermediate shape must fit inside the target, so the
    // expansion is pruned to its sublattice as it is generated.
    ExpansionMap acc{{Partition{}, BigInt(1)}};
    for (const Partition& f : key.factors) {
        ExpansionMap next;
        for (const auto& [kappa, mult] : acc) {
            ExpansionMap grown = expand_product(kappa, f, target.length(), &target);
            for (const auto& [shape, ways] : grown) next[shape] += mult * ways;
        }
        acc = std::move(next);
        if (acc.empty()) break;
    }
    BigInt result = coefficient(acc, target);
    {
        std::unique_lock lock(multi_mutex);
        multi_memo.emplace(std::move(key), result);
    }
    return result;
}

void clear_lr_caches() {
    {
        std::unique_lock lock(lr_mutex);
        lr_memo.clear();
    }
    {
        std::unique_lock lock(multi_mutex);
        multi_memo.clear();
    }
}

}  // namespace lrct
