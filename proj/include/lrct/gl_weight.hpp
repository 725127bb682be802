#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lrct/partition.hpp"

namespace lrct {

// A rational highest weight for GL_n, stored as the pair of partitions
// (plus, minus) with len(plus) + len(minus) <= n.  The equivalent n-tuple is
//   (plus_1, ..., plus_a, 0, ..., 0, -minus_b, ..., -minus_1).
class GlWeight {
  public:
    GlWeight(Partition plus, Partition minus, int n);

    static GlWeight trivial(int n) { return GlWeight({}, {}, n); }
    // Builds from a weakly decreasing integer tuple; n is the tuple length.
    static GlWeight from_tuple(std::span<const int> tuple);
    // Parses an n-tuple such as "[3,1,0,0,-2]".
    static GlWeight parse(std::string_view text);

    const Partition& plus() const { return plus_; }
    const Partition& minus() const { return minus_; }
    int n() const { return n_; }
    bool is_trivial() const { return plus_.empty() && minus_.empty(); }

    std::vector<int> to_tuple() const;
    // Highest weight of the dual representation: swaps plus and minus.
    GlWeight dual() const { return GlWeight(minus_, plus_, n_); }
    // Tensoring with det^power adds `power` to every tuple entry.
    GlWeight det_twisted(int power) const;

    std::string to_string() const;  // the n-tuple, e.g. "[3,1,0,0,-2]"

    friend bool operator==(const GlWeight&, const GlWeight&) = default;

  private:
    Partition plus_;
    Partition minus_;
    int n_;
};

// Order by (n, plus, minus); used only to canonicalize collections.
bool operator<(const GlWeight& a, const GlWeight& b);

std::ostream& operator<<(std::ostream& os, const GlWeight& w);

// The n-tuple carrying (alpha, beta) as a GL_n weight.  Throws LengthOverflow
// if the lengths do not fit in n.
std::vector<int> combine(const Partition& alpha, const Partition& beta, int n);

// Inverse of combine: recovers the weight from a weakly decreasing tuple.
GlWeight split(std::span<const int> tuple);

}  // namespace lrct
