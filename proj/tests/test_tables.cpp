#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "lrct/errors.hpp"
#include "lrct/integer_tables.hpp"

using namespace lrct;

namespace {

// Plain odometer over all entries; no pruning shared with the library.
std::vector<IntMatrix> odometer_tables(const TableSpec& spec) {
    const size_t r = spec.row_margins.size();
    const size_t s = spec.col_margins.size();
    int max_entry = 0;
    for (int m : spec.row_margins) max_entry = std::max(max_entry, m);
    if (spec.entry_cap) max_entry = std::min(max_entry, *spec.entry_cap);
    std::vector<int> flat(r * s, 0);
    std::vector<IntMatrix> out;
    auto matches = [&]() {
        IntMatrix m(r, std::vector<int>(s, 0));
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < s; ++j) m[i][j] = flat[i * s + j];
        for (size_t i = 0; i < r; ++i)
            if (std::accumulate(m[i].begin(), m[i].end(), 0) != spec.row_margins[i]) return;
        for (size_t j = 0; j < s; ++j) {
            int cs = 0;
            for (size_t i = 0; i < r; ++i) cs += m[i][j];
            if (cs != spec.col_margins[j]) return;
        }
        if (spec.hollow)
            for (size_t i = 0; i < r && i < s; ++i)
                if (m[i][i] != 0) return;
        if (spec.symmetric)
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < i; ++j)
                    if (m[i][j] != m[j][i]) return;
        out.push_back(m);
    };
    if (flat.empty()) {
        matches();
        return out;
    }
    while (true) {
        matches();
        size_t k = flat.size();
        while (k > 0) {
            --k;
            if (flat[k] < max_entry) {
                ++flat[k];
                std::fill(flat.begin() + static_cast<long>(k) + 1, flat.end(), 0);
                break;
            }
            if (k == 0) return out;
        }
    }
}

std::vector<int> flatten(const IntMatrix& m) {
    std::vector<int> flat;
    for (const auto& row : m) flat.insert(flat.end(), row.begin(), row.end());
    return flat;
}

long long brute_derangements(int r) {
    std::vector<int> perm(static_cast<size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
        bool ok = true;
        for (int i = 0; i < r; ++i)
            if (perm[static_cast<size_t>(i)] == i) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

long long brute_fpf_involutions(int r) {
    std::vector<int> perm(static_cast<size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
        bool ok = true;
        for (int i = 0; i < r; ++i) {
            const int p = perm[static_cast<size_t>(i)];
            if (p == i || perm[static_cast<size_t>(p)] != i) ok = false;
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace

TEST_CASE("two-by-two example, exact stream order") {
    TableSpec spec;
    spec.row_margins = {2, 1};
    spec.col_margins = {1, 2};
    CHECK(count_tables(spec) == 2);
    const auto got = list_tables(spec);
    REQUIRE(got.size() == 2);
    CHECK(got[0] == IntMatrix{{0, 2}, {1, 0}});
    CHECK(got[1] == IntMatrix{{1, 1}, {0, 1}});
}

TEST_CASE("streams are ascending in row-major lexicographic order") {
    const std::vector<TableSpec> specs = {
        {{3, 2, 2}, {2, 2, 3}, false, false, {}},
        {{2, 2, 2}, {2, 2, 2}, true, false, {}},
        {{3, 1, 2}, {3, 1, 2}, false, true, {}},
        {{2, 2, 2}, {2, 2, 2}, true, true, {}},
        {{4, 3}, {2, 2, 3}, false, false, 2},
    };
    for (const auto& spec : specs) {
        std::vector<std::vector<int>> seen;
        enumerate_tables(spec, [&](const IntMatrix& m) { seen.push_back(flatten(m)); });
        CHECK(std::is_sorted(seen.begin(), seen.end()));
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
        CHECK(count_tables(spec) == static_cast<long long>(seen.size()));
    }
}

TEST_CASE("exhaustive agreement with an unpruned odometer") {
    // Every margin vector over {0,1,2} up to 3 rows/cols, all flag settings.
    std::vector<std::vector<int>> margin_sets;
    for (int len = 0; len <= 3; ++len) {
        std::vector<int> m(static_cast<size_t>(len), 0);
        while (true) {
            margin_sets.push_back(m);
            int k = len;
            while (k > 0) {
                --k;
                if (m[static_cast<size_t>(k)] < 2) {
                    ++m[static_cast<size_t>(k)];
                    std::fill(m.begin() + k + 1, m.end(), 0);
                    break;
                }
                if (k == 0) goto next_len;
            }
            if (len == 0) break;
        }
    next_len:;
    }
    int checked = 0;
    for (const auto& rows : margin_sets) {
        for (const auto& cols : margin_sets) {
            for (int flags = 0; flags < 4; ++flags) {
                TableSpec spec;
                spec.row_margins = rows;
                spec.col_margins = cols;
                spec.hollow = (flags & 1) != 0;
                spec.symmetric = (flags & 2) != 0;
                if (spec.symmetric && rows != cols) continue;
                const auto want = odometer_tables(spec);
                const auto got = list_tables(spec);
                CAPTURE(flags);
                REQUIRE(got == want);
                CHECK(count_tables(spec) == static_cast<long long>(want.size()));
                ++checked;
            }
        }
    }
    CHECK(checked > 500);
}

TEST_CASE("entry caps agree with the odometer") {
    for (int cap = 0; cap <= 3; ++cap) {
        TableSpec spec;
        spec.row_margins = {3, 2};
        spec.col_margins = {2, 3};
        spec.entry_cap = cap;
        CHECK(list_tables(spec) == odometer_tables(spec));
        TableSpec sym;
        sym.row_margins = {3, 2, 3};
        sym.col_margins = {3, 2, 3};
        sym.symmetric = true;
        sym.entry_cap = cap;
        CHECK(list_tables(sym) == odometer_tables(sym));
    }
}

TEST_CASE("transposing the margins preserves the count") {
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> cases = {
        {{3, 1}, {2, 2}},
        {{4, 2, 1}, {3, 3, 1}},
        {{2, 2, 2, 1}, {4, 3}},
    };
    for (const auto& [rows, cols] : cases) {
        TableSpec a{rows, cols, false, false, {}};
        TableSpec b{cols, rows, false, false, {}};
        CHECK(count_tables(a) == count_tables(b));
    }
}

TEST_CASE("mismatched totals give an empty family") {
    TableSpec spec;
    spec.row_margins = {2, 2};
    spec.col_margins = {1, 1};
    CHECK(count_tables(spec) == 0);
    CHECK(list_tables(spec).empty());
}

TEST_CASE("degenerate shapes") {
    TableSpec empty;  // no rows, no columns: exactly one (empty) table
    CHECK(count_tables(empty) == 1);
    CHECK(list_tables(empty).size() == 1);

    TableSpec zero_rows;  // rows exist but no columns: need all-zero margins
    zero_rows.row_margins = {0, 0};
    CHECK(count_tables(zero_rows) == 1);
    zero_rows.row_margins = {1, 0};
    CHECK(count_tables(zero_rows) == 0);

    TableSpec zeros;
    zeros.row_margins = {0, 0};
    zeros.col_margins = {0};
    const auto got = list_tables(zeros);
    REQUIRE(got.size() == 1);
    CHECK(got[0] == IntMatrix{{0}, {0}});
}

TEST_CASE("hollow all-ones margins count derangements") {
    for (int r = 0; r <= 6; ++r) {
        TableSpec spec;
        spec.row_margins.assign(static_cast<size_t>(r), 1);
        spec.col_margins.assign(static_cast<size_t>(r), 1);
        spec.hollow = true;
        CHECK(count_tables(spec) == derangement_count(r));
    }
}

TEST_CASE("derangement numbers") {
    const long long want[] = {1, 0, 1, 2, 9, 44, 265, 1854};
    for (int r = 0; r <= 7; ++r) {
        CHECK(derangement_count(r) == want[r]);
        if (r <= 7) CHECK(derangement_count(r) == brute_derangements(r));
    }
    CHECK(derangement_count(20) == BigInt("895014631192902121"));
}

TEST_CASE("fixed-point-free involution numbers") {
    const long long want[] = {1, 0, 1, 0, 3, 0, 15, 0, 105};
    for (int r = 0; r <= 8; ++r) {
        CHECK(fpf_involution_count(r) == want[r]);
        CHECK(fpf_involution_count(r) == brute_fpf_involutions(r));
    }
    // symmetric hollow all-ones tables are exactly these
    for (int r = 0; r <= 7; ++r) {
        TableSpec spec;
        spec.row_margins.assign(static_cast<size_t>(r), 1);
        spec.col_margins.assign(static_cast<size_t>(r), 1);
        spec.hollow = true;
        spec.symmetric = true;
        CHECK(count_tables(spec) == fpf_involution_count(r));
    }
}

TEST_CASE("invalid specs are rejected") {
    TableSpec neg;
    neg.row_margins = {2, -1};
    neg.col_margins = {1};
    CHECK_THROWS_AS(count_tables(neg), PreconditionViolated);

    TableSpec negcol;
    negcol.row_margins = {1};
    negcol.col_margins = {-1, 2};
    CHECK_THROWS_AS(count_tables(negcol), PreconditionViolated);

    TableSpec negcap;
    negcap.row_margins = {1};
    negcap.col_margins = {1};
    negcap.entry_cap = -1;
    CHECK_THROWS_AS(count_tables(negcap), PreconditionViolated);

    TableSpec sym;
    sym.row_margins = {1, 2};
    sym.col_margins = {2, 1};
    sym.symmetric = true;
    CHECK_THROWS_AS(count_tables(sym), DimensionMismatch);

    CHECK_THROWS_AS(derangement_count(-1), PreconditionViolated);
    CHECK_THROWS_AS(fpf_involution_count(-2), PreconditionViolated);
}
