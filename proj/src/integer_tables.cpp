#include "lrct/integer_tables.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "lrct/errors.hpp"

namespace lrct {

namespace {

void validate(const TableSpec& spec) {
    for (int v : spec.row_margins)
        if (v < 0) throw PreconditionViolated("row margins must be nonnegative");
    for (int v : spec.col_margins)
        if (v < 0) throw PreconditionViolated("column margins must be nonnegative");
    if (spec.entry_cap && *spec.entry_cap < 0)
        throw PreconditionViolated("entry cap must be nonnegative");
    if (spec.symmetric && spec.row_margins != spec.col_margins)
        throw DimensionMismatch("symmetric tables need equal row and column margins");
}

// Row-major DFS in ascending entry order.  A candidate is skipped when the
// rest of its row cannot absorb the remaining margin (suffix capacity) or
// when it would leave a column unfinishable on the last row.
struct GeneralWalker {
    const std::vector<int>& rows;
    const std::vector<int>& cols;
    const bool hollow;
    const int cap;
    const std::function<void(const IntMatrix&)>* visit;

    int r = 0, s = 0;
    IntMatrix m;
    std::vector<int> row_rem, col_rem;
    std::vector<std::vector<long long>> suffix;  // per row: capacity right of each cell
    BigInt count = 0;

    void run() {
        r = static_cast<int>(rows.size());
        s = static_cast<int>(cols.size());
        if (std::accumulate(rows.begin(), rows.end(), 0LL) !=
            std::accumulate(cols.begin(), cols.end(), 0LL))
            return;
        if (r == 0 || s == 0) {
            m.assign(static_cast<size_t>(r), std::vector<int>(static_cast<size_t>(s), 0));
            emit();
            return;
        }
        m.assign(static_cast<size_t>(r), std::vector<int>(static_cast<size_t>(s), 0));
        row_rem = rows;
        col_rem = cols;
        suffix.assign(static_cast<size_t>(r), std::vector<long long>(static_cast<size_t>(s) + 1, 0));
        cell(0, 0);
    }

    void emit() {
        if (visit) (*visit)(m);
        count += 1;
    }

    int cell_cap(int i, int j) const {
        if (hollow && i == j) return 0;
        return std::min(col_rem[static_cast<size_t>(j)], cap);
    }

    void cell(int i, int j) {
        if (i == r) {
            emit();
            return;
        }
        if (j == 0) {
            auto& suf = suffix[static_cast<size_t>(i)];
            suf[static_cast<size_t>(s)] = 0;
            for (int t = s - 1; t >= 0; --t)
                suf[static_cast<size_t>(t)] = suf[static_cast<size_t>(t) + 1] + cell_cap(i, t);
        }
        const int rr = row_rem[static_cast<size_t>(i)];
        const int cr = col_rem[static_cast<size_t>(j)];
        int hi = std::min({rr, cr, (hollow && i == j) ? 0 : cap});
        const long long room = suffix[static_cast<size_t>(i)][static_cast<size_t>(j) + 1];
        int lo = static_cast<int>(std::max<long long>(0, rr - room));
        if (i == r - 1) {
            // Last row: each entry must finish its column.
            lo = std::max(lo, cr);
            hi = std::min(hi, cr);
        }
        if (lo > hi) return;
        for (int a = lo; a <= hi; ++a) {
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = a;
            row_rem[static_cast<size_t>(i)] -= a;
            col_rem[static_cast<size_t>(j)] -= a;
            if (j == s - 1) {
                if (row_rem[static_cast<size_t>(i)] == 0) cell(i + 1, 0);
            } else {
                cell(i, j + 1);
            }
            row_rem[static_cast<size_t>(i)] += a;
            col_rem[static_cast<size_t>(j)] += a;
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
        }
    }
};

// Symmetric DFS over the upper triangle; an off-diagonal entry consumes both
// of its margins at once.  Filling the triangle row-major with ascending
// candidates yields the full matrices in row-major lexicographic order, since
// every lower-triangle entry mirrors an earlier cell.
struct SymmetricWalker {
    const std::vector<int>& margins;
    const bool hollow;
    const int cap;
    const std::function<void(const IntMatrix&)>* visit;

    int s = 0;
    IntMatrix m;
    std::vector<int> rem;
    BigInt count = 0;

    void run() {
        s = static_cast<int>(margins.size());
        m.assign(static_cast<size_t>(s), std::vector<int>(static_cast<size_t>(s), 0));
        rem = margins;
        if (s == 0) {
            emit();
            return;
        }
        cell(0, 0);
    }

    void emit() {
        if (visit) (*visit)(m);
        count += 1;
    }

    void cell(int i, int j) {
        if (i == s) {
            emit();
            return;
        }
        if (j == s) {
            if (rem[static_cast<size_t>(i)] != 0) return;
            cell(i + 1, i + 1);
            return;
        }
        const bool diagonal = (i == j);
        int hi = std::min(rem[static_cast<size_t>(i)], cap);
        if (!diagonal) hi = std::min(hi, rem[static_cast<size_t>(j)]);
        if (diagonal && hollow) hi = 0;
        long long room = 0;  // capacity of the cells right of (i, j)
        for (int t = j + 1; t < s; ++t) room += std::min(rem[static_cast<size_t>(t)], cap);
        const int lo =
            static_cast<int>(std::max<long long>(0, rem[static_cast<size_t>(i)] - room));
        if (lo > hi) return;
        for (int a = lo; a <= hi; ++a) {
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = a;
            m[static_cast<size_t>(j)][static_cast<size_t>(i)] = a;
            rem[static_cast<size_t>(i)] -= a;
            if (!diagonal) rem[static_cast<size_t>(j)] -= a;
            cell(i, j + 1);
            rem[static_cast<size_t>(i)] += a;
            if (!diagonal) rem[static_cast<size_t>(j)] += a;
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
            m[static_cast<size_t>(j)][static_cast<size_t>(i)] = 0;
        }
    }
};

void walk(const TableSpec& spec, const std::function<void(const IntMatrix&)>* visit,
          BigInt* count) {
    validate(spec);
    const int cap = spec.entry_cap ? *spec.entry_cap : INT_MAX;
    if (spec.symmetric) {
        SymmetricWalker w{spec.row_margins, spec.hollow, cap, visit};
        w.run();
        if (count) *count = w.count;
    } else {
        GeneralWalker w{spec.row_margins, spec.col_margins, spec.hollow, cap, visit};
        w.run();
        if (count) *count = w.count;
    }
}

}  // namespace

BigInt count_tables(const TableSpec& spec) {
    BigInt count;
    walk(spec, nullptr, &count);
    return count;
}

void enumerate_tables(const TableSpec& spec, const std::function<void(const IntMatrix&)>& visit) {
    walk(spec, &visit, nullptr);
}

std::vector<IntMatrix> list_tables(const TableSpec& spec) {
    std::vector<IntMatrix> out;
    enumerate_tables(spec, [&](const IntMatrix& m) { out.push_back(m); });
    return out;
}

BigInt derangement_count(int r) {
    if (r < 0) throw PreconditionViolated("derangement_count needs r >= 0");
    BigInt prev2 = 1, prev1 = 0;  // d(0), d(1)
    if (r == 0) return prev2;
    if (r == 1) return prev1;
    BigInt cur = 0;
    for (int i = 2; i <= r; ++i) {
        cur = BigInt(i - 1) * (prev1 + prev2);
        prev2 = prev1;
        prev1 = cur;
    }
    return cur;
}

BigInt fpf_involution_count(int r) {
    if (r < 0) throw PreconditionViolated("fpf_involution_count needs r >= 0");
    if (r % 2 != 0) return 0;
    BigInt result = 1;
    for (int k = r - 1; k > 1; k -= 2) result *= k;
    return result;
}

}  // namespace lrct
