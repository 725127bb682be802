#include "lrct/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "lrct/errors.hpp"
#include "int_list.hpp"

namespace lrct {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw NotDecreasing("partition parts must be positive, got " +
                                std::to_string(parts_[i]));
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw NotDecreasing("partition parts must be weakly decreasing");
    }
}

long long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> result(static_cast<size_t>(parts_[0]), 0);
    for (int row : parts_)
        for (int col = 0; col < row; ++col) ++result[col];
    return Partition(std::move(result));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (parts_[i] < inner.parts_[i]) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

bool operator<(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.parts().begin(), a.parts().end(),
                                        b.parts().begin(), b.parts().end());
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

size_t PartitionHash::operator()(const Partition& p) const {
    size_t h = 1469598103934665603ull;
    for (int part : p.parts()) {
        h ^= static_cast<size_t>(part) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

namespace detail {

std::vector<int> parse_int_list(std::string_view text) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why) -> std::vector<int> {
        throw ParseError("cannot parse \"" + std::string(text) + "\": " + why);
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '[') return fail("expected '['");
    ++pos;
    std::vector<int> values;
    skip_ws();
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            skip_ws();
            size_t start = pos;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
                return fail("expected integer");
            try {
                values.push_back(std::stoi(std::string(text.substr(start, pos - start))));
            } catch (const std::exception&) {
                return fail("integer out of range");
            }
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ']') {
                ++pos;
                break;
            }
            return fail("expected ',' or ']'");
        }
    }
    skip_ws();
    if (pos != text.size()) return fail("trailing characters");
    return values;
}

}  // namespace detail

Partition Partition::parse(std::string_view text) {
    std::vector<int> values = detail::parse_int_list(text);
    try {
        return Partition(std::move(values));
    } catch (const NotDecreasing& e) {
        throw ParseError("cannot parse \"" + std::string(text) + "\": " + e.what());
    }
}

namespace {

void gen_partitions(long long remaining, int slots, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    if (slots == 0) return;
    // Smallest feasible first part keeps the output in lexicographic order.
    long long lo = (remaining + slots - 1) / slots;
    long long hi = std::min<long long>(remaining, max_part);
    for (long long p = lo; p <= hi; ++p) {
        current.push_back(static_cast<int>(p));
        gen_partitions(remaining - p, slots - 1, static_cast<int>(p), current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(long long size, int max_length, int max_part) {
    std::vector<Partition> out;
    if (size < 0 || max_length < 0 || max_part < 0) return out;
    std::vector<int> current;
    gen_partitions(size, max_length, max_part, current, out);
    return out;
}

}  // namespace lrct
