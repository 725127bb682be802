#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace lrct {

// Sentinel for "no bound" in length/part-capped operations.
inline constexpr int kNoLimit = std::numeric_limits<int>::max();

// An integer partition: weakly decreasing sequence of positive parts.  The
// canonical form never stores trailing zeros, so two partitions are equal iff
// their stored parts are equal.
class Partition {
  public:
    Partition() = default;
    // Strips trailing zeros; throws NotDecreasing if the sequence is not
    // weakly decreasing or contains a negative entry.
    explicit Partition(std::vector<int> parts);

    // Parses "[3,1]" or "[]" (whitespace between tokens is accepted).
    static Partition parse(std::string_view text);

    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    long long size() const;  // number of boxes

    // 1-based part access; part(i) == 0 beyond the length.
    int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;
    bool contains(const Partition& inner) const;  // diagram containment

    std::string to_string() const;  // "[3,1]", "[]"

    friend bool operator==(const Partition&, const Partition&) = default;

  private:
    std::vector<int> parts_;
};

// Total order: smaller size first, ties broken lexicographically on parts.
bool operator<(const Partition& a, const Partition& b);
inline bool operator>(const Partition& a, const Partition& b) { return b < a; }
inline bool operator<=(const Partition& a, const Partition& b) { return !(b < a); }
inline bool operator>=(const Partition& a, const Partition& b) { return !(a < b); }

std::ostream& operator<<(std::ostream& os, const Partition& p);

struct PartitionHash {
    size_t operator()(const Partition& p) const;
};

// All partitions of `size` with at most `max_length` parts, each part at most
// `max_part`, listed in increasing canonical order.
std::vector<Partition> partitions_of(long long size, int max_length, int max_part = kNoLimit);

}  // namespace lrct
