#include "lrct/lr_contingency.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "lrct/errors.hpp"
#include "lrct/integer_tables.hpp"
#include "lrct/lr_engine.hpp"

namespace lrct {

MarginSpec::MarginSpec(std::vector<GlWeight> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw DimensionMismatch("margin vector must contain at least one weight");
    n_ = weights_.front().n();
    threshold_ = 0;
    for (const GlWeight& w : weights_) {
        if (w.n() != n_)
            throw DimensionMismatch("margin weights must share one ambient rank, got " +
                                    std::to_string(w.n()) + " and " + std::to_string(n_));
        threshold_ += w.plus().length() + w.minus().length();
    }
}

PartitionMatrix::PartitionMatrix(int rank) : rank_(rank) {
    if (rank < 0) throw DimensionMismatch("matrix rank must be nonnegative");
    cells_.resize(static_cast<size_t>(rank) * static_cast<size_t>(rank));
}

PartitionMatrix::PartitionMatrix(int rank, std::vector<Partition> cells)
    : rank_(rank), cells_(std::move(cells)) {
    if (rank < 0) throw DimensionMismatch("matrix rank must be nonnegative");
    if (cells_.size() != static_cast<size_t>(rank) * static_cast<size_t>(rank))
        throw DimensionMismatch("expected " + std::to_string(rank * rank) + " cells, got " +
                                std::to_string(cells_.size()));
}

bool PartitionMatrix::hollow() const {
    for (int i = 0; i < rank_; ++i)
        if (!cell(i, i).empty()) return false;
    return true;
}

bool PartitionMatrix::symmetric() const {
    for (int i = 0; i < rank_; ++i)
        for (int j = i + 1; j < rank_; ++j)
            if (cell(i, j) != cell(j, i)) return false;
    return true;
}

std::vector<Partition> PartitionMatrix::row(int i) const {
    std::vector<Partition> out;
    out.reserve(static_cast<size_t>(rank_));
    for (int j = 0; j < rank_; ++j) out.push_back(cell(i, j));
    return out;
}

std::vector<Partition> PartitionMatrix::column(int j) const {
    std::vector<Partition> out;
    out.reserve(static_cast<size_t>(rank_));
    for (int i = 0; i < rank_; ++i) out.push_back(cell(i, j));
    return out;
}

BigInt table_norm(const PartitionMatrix& table, const MarginSpec& margins) {
    if (table.rank() != margins.rank())
        throw DimensionMismatch("table rank " + std::to_string(table.rank()) +
                                " does not match margin rank " + std::to_string(margins.rank()));
    BigInt norm = 1;
    for (int i = 0; i < table.rank(); ++i) {
        std::vector<Partition> cells = table.row(i);
        norm *= multi_lr(margins.weight(i).plus(), cells);
        if (norm == 0) return norm;
    }
    for (int j = 0; j < table.rank(); ++j) {
        std::vector<Partition> cells = table.column(j);
        norm *= multi_lr(margins.weight(j).minus(), cells);
        if (norm == 0) return norm;
    }
    return norm;
}

namespace {

// Enumeration runs in two phases: first the integer matrices of cell sizes
// (the size of cell (i, j) is constrained by |plus_i| row-wise and |minus_j|
// column-wise), then the partition fillings of each size matrix.  Row factors
// are evaluated as soon as a row is complete so a zero prunes the whole
// subtree below it.
struct TableFiller {
    const MarginSpec& margins;
    int r;
    std::vector<Partition> plus, minus;

    std::vector<std::vector<Partition>> cand;  // candidate partitions per cell
    std::vector<Partition> cells;              // chosen fill, row-major
    std::vector<BigInt> row_factor;

    BigInt sum = 0;
    long long nonzero = 0;
    const std::function<void(const PartitionMatrix&, const BigInt&)>* visit = nullptr;

    explicit TableFiller(const MarginSpec& m) : margins(m), r(m.rank()) {
        for (const GlWeight& w : m.weights()) {
            plus.push_back(w.plus());
            minus.push_back(w.minus());
        }
        cand.resize(static_cast<size_t>(r) * static_cast<size_t>(r));
        cells.resize(cand.size());
        row_factor.assign(static_cast<size_t>(r), BigInt(0));
    }

    void process(const IntMatrix& sizes) {
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                const auto& p = plus[static_cast<size_t>(i)];
                const auto& q = minus[static_cast<size_t>(j)];
                // A cell contributes only if it fits inside both of the
                // margins whose factor consumes it.
                std::vector<Partition> options =
                    partitions_of(sizes[static_cast<size_t>(i)][static_cast<size_t>(j)],
                                  std::min(p.length(), q.length()),
                                  std::min(p.part(1), q.part(1)));
                std::erase_if(options, [&](const Partition& x) {
                    return !p.contains(x) || !q.contains(x);
                });
                if (options.empty()) return;  // no filling of this size matrix
                cand[static_cast<size_t>(i) * static_cast<size_t>(r) + static_cast<size_t>(j)] =
                    std::move(options);
            }
        }
        fill(0);
    }

    void fill(size_t idx) {
        if (idx == cells.size()) {
            finish();
            return;
        }
        const int i = static_cast<int>(idx) / r;
        const bool row_end = (static_cast<int>(idx) % r == r - 1);
        for (const Partition& choice : cand[idx]) {
            cells[idx] = choice;
            if (row_end) {
                std::vector<Partition> row(cells.begin() + static_cast<long>(idx) + 1 - r,
                                           cells.begin() + static_cast<long>(idx) + 1);
                row_factor[static_cast<size_t>(i)] = multi_lr(plus[static_cast<size_t>(i)], row);
                if (row_factor[static_cast<size_t>(i)] == 0) continue;
            }
            fill(idx + 1);
        }
    }

    void finish() {
        BigInt norm = 1;
        for (int i = 0; i < r; ++i) norm *= row_factor[static_cast<size_t>(i)];
        for (int j = 0; j < r && norm != 0; ++j) {
            std::vector<Partition> col;
            col.reserve(static_cast<size_t>(r));
            for (int i = 0; i < r; ++i)
                col.push_back(cells[static_cast<size_t>(i) * static_cast<size_t>(r) +
                                    static_cast<size_t>(j)]);
            norm *= multi_lr(minus[static_cast<size_t>(j)], col);
        }
        if (norm == 0) return;
        sum += norm;
        ++nonzero;
        if (visit) (*visit)(PartitionMatrix(r, cells), norm);
    }
};

TableSpec size_spec(const MarginSpec& margins, bool hollow) {
    TableSpec spec;
    spec.hollow = hollow;
    for (const GlWeight& w : margins.weights()) {
        spec.row_margins.push_back(static_cast<int>(w.plus().size()));
        spec.col_margins.push_back(static_cast<int>(w.minus().size()));
    }
    return spec;
}

SumResult sum_over_tables(const MarginSpec& margins, bool hollow, int jobs,
                          const std::function<void(const PartitionMatrix&, const BigInt&)>* visit) {
    std::vector<IntMatrix> size_tables = list_tables(size_spec(margins, hollow));
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const size_t workers = std::min<size_t>(
        {static_cast<size_t>(std::max(jobs, 1)), size_tables.size(), static_cast<size_t>(hw)});
    if (visit || workers <= 1) {
        TableFiller filler(margins);
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
            TableFiller filler(margins);
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

void require_stable(const MarginSpec& margins) {
    if (!margins.in_stable_range())
        throw OutsideStableRange(
            "outside stable range: n = " + std::to_string(margins.n()) +
                " but the table formula needs n >= " + std::to_string(margins.stable_threshold()),
            margins.stable_threshold(), margins.n());
}

}  // namespace

void enumerate_lrct(const MarginSpec& margins, bool hollow,
                    const std::function<void(const PartitionMatrix&, const BigInt&)>& visit) {
    sum_over_tables(margins, hollow, 1, &visit);
}

SumResult lrc_zero_detailed(const MarginSpec& margins, int jobs) {
    require_stable(margins);
    return sum_over_tables(margins, /*hollow=*/true, jobs, nullptr);
}

BigInt lrc_zero(const MarginSpec& margins, int jobs) {
    return lrc_zero_detailed(margins, jobs).value;
}

SumResult lrc_general_detailed(const GlWeight& lambda, const MarginSpec& margins, int jobs) {
    if (lambda.n() != margins.n())
        throw DimensionMismatch("target weight has n = " + std::to_string(lambda.n()) +
                                " but margins have n = " + std::to_string(margins.n()));
    std::vector<GlWeight> extended;
    extended.reserve(static_cast<size_t>(margins.rank()) + 1);
    extended.push_back(lambda.dual());
    for (const GlWeight& w : margins.weights()) extended.push_back(w);
    return lrc_zero_detailed(MarginSpec(std::move(extended)), jobs);
}

BigInt lrc_general(const GlWeight& lambda, const MarginSpec& margins, int jobs) {
    return lrc_general_detailed(lambda, margins, jobs).value;
}

SumResult hom_dimension_detailed(std::span<const Partition> sources,
                                 std::span<const Partition> targets, int n, int jobs) {
    int threshold = 0;
    for (const Partition& p : sources) threshold += p.length();
    for (const Partition& p : targets) threshold += p.length();
    if (sources.empty() && targets.empty())
        throw DimensionMismatch("need at least one source or target");
    if (n < threshold)
        throw OutsideStableRange("outside stable range: n = " + std::to_string(n) +
                                     " but the table formula needs n >= " +
                                     std::to_string(threshold),
                                 threshold, n);
    std::vector<GlWeight> weights;
    weights.reserve(sources.size() + targets.size());
    for (const Partition& p : sources) weights.emplace_back(Partition{}, p, n);
    for (const Partition& p : targets) weights.emplace_back(p, Partition{}, n);
    return lrc_zero_detailed(MarginSpec(std::move(weights)), jobs);
}

BigInt hom_dimension(std::span<const Partition> sources, std::span<const Partition> targets,
                     int n, int jobs) {
    return hom_dimension_detailed(sources, targets, n, jobs).value;
}

}  // namespace lrct
