#pragma once

#include <functional>
#include <vector>

#include "lrct/bigint.hpp"
#include "lrct/lr_contingency.hpp"
#include "lrct/partition.hpp"

namespace lrct {

enum class Group { Orthogonal, Symplectic };

// Margins for the symmetric-table expansion: a vector of partitions labelling
// representations of O_n or Sp_2n.
class SymMarginSpec {
  public:
    SymMarginSpec(std::vector<Partition> margins, int n);

    int rank() const { return static_cast<int>(margins_.size()); }
    int n() const { return n_; }
    const std::vector<Partition>& margins() const { return margins_; }
    const Partition& margin(int i) const { return margins_[static_cast<size_t>(i)]; }

    // Twice the total length; the symmetric-table formula needs n at least
    // this for both groups.
    int stable_threshold() const { return threshold_; }
    bool in_stable_range() const { return n_ >= threshold_; }

  private:
    std::vector<Partition> margins_;
    int n_;
    int threshold_;
};

// Product over i of [multiplicity of margin_i in row i]; symmetric tables
// need no separate column factors.
BigInt sym_table_norm(const PartitionMatrix& table, const SymMarginSpec& margins);

// Streams every symmetric partition matrix with nonzero norm (zero diagonal
// when `hollow`) along with its norm, deterministically.
void enumerate_sym_lrct(const SymMarginSpec& margins, bool hollow,
                        const std::function<void(const PartitionMatrix&, const BigInt&)>& visit);

// Multiplicity of the trivial representation in the tensor product of the
// margin representations, as the norm sum over hollow symmetric tables.  The
// value is the same for both groups; `group` only labels the stable-range
// error message.  Throws OutsideStableRange when n < stable_threshold().
BigInt osp_invariant_dim(const SymMarginSpec& margins, Group group = Group::Orthogonal,
                         int jobs = 1);
SumResult osp_invariant_dim_detailed(const SymMarginSpec& margins,
                                     Group group = Group::Orthogonal, int jobs = 1);

inline BigInt orthogonal_invariant_dim(const SymMarginSpec& margins, int jobs = 1) {
    return osp_invariant_dim(margins, Group::Orthogonal, jobs);
}
inline BigInt symplectic_invariant_dim(const SymMarginSpec& margins, int jobs = 1) {
    return osp_invariant_dim(margins, Group::Symplectic, jobs);
}

}  // namespace lrct
