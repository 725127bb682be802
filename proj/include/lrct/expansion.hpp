#pragma once

#include <map>

#include "lrct/bigint.hpp"
#include "lrct/partition.hpp"

namespace lrct {

// Sparse expansion of a symmetric function in the Schur basis.  Keys iterate
// in canonical partition order, which keeps every downstream output stream
// deterministic.  Absent keys mean coefficient zero; stored values are > 0.
using ExpansionMap = std::map<Partition, BigInt>;

inline void add_term(ExpansionMap& m, const Partition& key, const BigInt& count) {
    if (count == 0) return;
    m[key] += count;
}

inline BigInt coefficient(const ExpansionMap& m, const Partition& key) {
    auto it = m.find(key);
    return it == m.end() ? BigInt(0) : it->second;
}

}  // namespace lrct
