#pragma once

#include <functional>
#include <span>
#include <vector>

#include "lrct/bigint.hpp"
#include "lrct/gl_weight.hpp"
#include "lrct/partition.hpp"

namespace lrct {

// A vector of GL_n weights sharing one ambient rank; the margin data for the
// partition-table expansion.
class MarginSpec {
  public:
    explicit MarginSpec(std::vector<GlWeight> weights);

    int rank() const { return static_cast<int>(weights_.size()); }
    int n() const { return n_; }
    const std::vector<GlWeight>& weights() const { return weights_; }
    const GlWeight& weight(int i) const { return weights_[static_cast<size_t>(i)]; }

    // Sum over all weights of len(plus) + len(minus); the table formula below
    // is valid exactly when n is at least this.
    int stable_threshold() const { return threshold_; }
    bool in_stable_range() const { return n_ >= threshold_; }

  private:
    std::vector<GlWeight> weights_;
    int n_;
    int threshold_;
};

// A square matrix of partitions, row-major.
class PartitionMatrix {
  public:
    explicit PartitionMatrix(int rank);
    PartitionMatrix(int rank, std::vector<Partition> cells);

    int rank() const { return rank_; }
    const Partition& cell(int i, int j) const {
        return cells_[static_cast<size_t>(i) * static_cast<size_t>(rank_) + static_cast<size_t>(j)];
    }
    Partition& cell(int i, int j) {
        return cells_[static_cast<size_t>(i) * static_cast<size_t>(rank_) + static_cast<size_t>(j)];
    }
    bool hollow() const;     // every diagonal cell is empty
    bool symmetric() const;  // cell(i, j) == cell(j, i)
    std::vector<Partition> row(int i) const;
    std::vector<Partition> column(int j) const;

    bool operator==(const PartitionMatrix&) const = default;

  private:
    int rank_;
    std::vector<Partition> cells_;
};

// Product over i of [multiplicity of plus_i in row i] * [multiplicity of
// minus_i in column i], where rows and columns multiply as Schur functions.
BigInt table_norm(const PartitionMatrix& table, const MarginSpec& margins);

// Streams every partition matrix with nonzero norm (restricted to zero
// diagonal when `hollow`) along with its norm, deterministically.
void enumerate_lrct(const MarginSpec& margins, bool hollow,
                    const std::function<void(const PartitionMatrix&, const BigInt&)>& visit);

struct SumResult {
    BigInt value;
    long long table_count = 0;  // tables with nonzero norm
};

// Multiplicity of the trivial representation in the tensor product of the
// margin weights, computed as the norm sum over hollow tables.  Throws
// OutsideStableRange when n < stable_threshold().
BigInt lrc_zero(const MarginSpec& margins, int jobs = 1);
SumResult lrc_zero_detailed(const MarginSpec& margins, int jobs = 1);

// Multiplicity of the irreducible with highest weight `lambda` in the tensor
// product: prepends the dual of lambda and reduces to the invariant case, so
// the stable range is that of the extended vector.
BigInt lrc_general(const GlWeight& lambda, const MarginSpec& margins, int jobs = 1);
SumResult lrc_general_detailed(const GlWeight& lambda, const MarginSpec& margins, int jobs = 1);

// dim Hom of one tensor product of polynomial representations into another;
// dualizing the sources reduces it to lrc_zero.  Requires n at least the sum
// of all source and target lengths.
BigInt hom_dimension(std::span<const Partition> sources, std::span<const Partition> targets,
                     int n, int jobs = 1);
SumResult hom_dimension_detailed(std::span<const Partition> sources,
                                 std::span<const Partition> targets, int n, int jobs = 1);

}  // namespace lrct
