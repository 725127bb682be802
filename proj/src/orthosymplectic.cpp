#include "lrct/orthosymplectic.hpp"

#include <algorithm>
#include <thread>

#include "lrct/errors.hpp"
#include "lrct/integer_tables.hpp"
#include "lrct/lr_engine.hpp"

namespace lrct {

SymMarginSpec::SymMarginSpec(std::vector<Partition> margins, int n)
    : margins_(std::move(margins)), n_(n) {
    if (margins_.empty()) throw DimensionMismatch("margin vector must contain at least one partition");
    if (n < 1) throw DimensionMismatch("ambient rank n must be positive, got " + std::to_string(n));
    threshold_ = 0;
    for (const Partition& p : margins_) {
        if (p.length() > n)
            throw LengthOverflow("margin " + p.to_string() + " has " + std::to_string(p.length()) +
                                 " parts but n = " + std::to_string(n));
        threshold_ += 2 * p.length();
    }
}

BigInt sym_table_norm(const PartitionMatrix& table, const SymMarginSpec& margins) {
    if (table.rank() != margins.rank())
        throw DimensionMismatch("table rank " + std::to_string(table.rank()) +
                                " does not match margin rank " + std::to_string(margins.rank()));
    if (!table.symmetric()) throw NotSymmetric("table is not symmetric");
    BigInt norm = 1;
    for (int i = 0; i < table.rank(); ++i) {
        std::vector<Partition> cells = table.row(i);
        norm *= multi_lr(margins.margin(i), cells);
        if (norm == 0) return norm;
    }
    return norm;
}

namespace {

// Same two-phase scheme as the general case, but over the upper triangle:
// cell (i, j) determines cell (j, i), and a row's factor is evaluated once
// its last upper-triangle cell is placed (all mirrored cells are then known).
struct SymTableFiller {
    const SymMarginSpec& margins;
    int r;

    std::vector<std::vector<Partition>> cand;  // upper-triangle candidates, row-major
    PartitionMatrix table;
    std::vector<BigInt> row_factor;

    BigInt sum = 0;
    long long nonzero = 0;
    const std::function<void(const PartitionMatrix&, const BigInt&)>* visit = nullptr;

    explicit SymTableFiller(const SymMarginSpec& m)
        : margins(m), r(m.rank()), table(m.rank()) {
        cand.resize(static_cast<size_t>(r) * static_cast<size_t>(r));
        row_factor.assign(static_cast<size_t>(r), BigInt(0));
    }

    void process(const IntMatrix& sizes) {
        for (int i = 0; i < r; ++i) {
            for (int j = i; j < r; ++j) {
                const Partition& p = margins.margin(i);
                const Partition& q = margins.margin(j);
                std::vector<Partition> options =
                    partitions_of(sizes[static_cast<size_t>(i)][static_cast<size_t>(j)],
                                  std::min(p.length(), q.length()),
                                  std::min(p.part(1), q.part(1)));
                std::erase_if(options, [&](const Partition& x) {
                    return !p.contains(x) || !q.contains(x);
                });
                if (options.empty()) return;
                cand[static_cast<size_t>(i) * static_cast<size_t>(r) + static_cast<size_t>(j)] =
                    std::move(options);
            }
        }
        fill(0, 0);
    }

    void fill(int i, int j) {
        if (i == r) {
            finish();
            return;
        }
        if (j == r) {
            fill(i + 1, i + 1);
            return;
        }
        for (const Partition& choice :
             cand[static_cast<size_t>(i) * static_cast<size_t>(r) + static_cast<size_t>(j)]) {
            table.cell(i, j) = choice;
            table.cell(j, i) = choice;
            if (j == r - 1) {
                std::vector<Partition> row = table.row(i);
                row_factor[static_cast<size_t>(i)] = multi_lr(margins.margin(i), row);
                if (row_factor[static_cast<size_t>(i)] == 0) continue;
            }
            fill(i, j + 1);
        }
    }

    void finish() {
        BigInt norm = 1;
        for (int i = 0; i < r; ++i) norm *= row_factor[static_cast<size_t>(i)];
        if (norm == 0) return;
        sum += norm;
        ++nonzero;
        if (visit) (*visit)(table, norm);
    }
};

TableSpec size_spec(const SymMarginSpec& margins, bool hollow) {
    TableSpec spec;
    spec.hollow = hollow;
    spec.symmetric = true;
    for (const Partition& p : margins.margins())
        spec.row_margins.push_back(static_cast<int>(p.size()));
    spec.col_margins = spec.row_margins;
    return spec;
}

SumResult sum_over_sym_tables(
    const SymMarginSpec& margins, bool hollow, int jobs,
    const std::function<void(const PartitionMatrix&, const BigInt&)>* visit) {
    std::vector<IntMatrix> size_tables = list_tables(size_spec(margins, hollow));
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const size_t workers = std::min<size_t>(
        {static_cast<size_t>(std::max(jobs, 1)), size_tables.size(), static_cast<size_t>(hw)});
    if (visit || workers <= 1) {
        SymTableFiller filler(margins);
        filler.visit = visit;
        for (const IntMatrix& sizes : size_tables) filler.process(sizes);
        return {filler.sum, filler.nonzero};
    }
    std::vector<BigInt> partial(workers, BigInt(0));
    std::vector<long long> counts(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            SymTableFiller filler(margins);
            for (size_t k = t; k < size_tables.size(); k += workers)
                filler.process(size_tables[k]);
            partial[t] = std::move(filler.sum);
            counts[t] = filler.nonzero;
        });
    }
    for (std::thread& th : pool) th.join();
    SumResult result{BigInt(0), 0};
    for (size_t t = 0; t < workers; ++t) {
        result.value += partial[t];
        result.table_count += counts[t];
    }
    return result;
}

}  // namespace

void enumerate_sym_lrct(const SymMarginSpec& margins, bool hollow,
                        const std::function<void(const PartitionMatrix&, const BigInt&)>& visit) {
    sum_over_sym_tables(margins, hollow, 1, &visit);
}

SumResult osp_invariant_dim_detailed(const SymMarginSpec& margins, Group group, int jobs) {
    if (!margins.in_stable_range()) {
        const std::string label =
            group == Group::Orthogonal ? "O_n needs n >= " : "Sp_2n needs n >= ";
        throw OutsideStableRange("outside stable range: n = " + std::to_string(margins.n()) +
                                     " but the symmetric-table formula for " + label +
                                     std::to_string(margins.stable_threshold()),
                                 margins.stable_threshold(), margins.n());
    }
    return sum_over_sym_tables(margins, /*hollow=*/true, jobs, nullptr);
}

BigInt osp_invariant_dim(const SymMarginSpec& margins, Group group, int jobs) {
    return osp_invariant_dim_detailed(margins, group, jobs).value;
}

}  // namespace lrct
