#include "lrct/gl_weight.hpp"

#include <algorithm>
#include <ostream>

#include "lrct/errors.hpp"
#include "int_list.hpp"

namespace lrct {

GlWeight::GlWeight(Partition plus, Partition minus, int n)
    : plus_(std::move(plus)), minus_(std::move(minus)), n_(n) {
    if (n < 1) throw DimensionMismatch("ambient rank n must be positive, got " + std::to_string(n));
    if (plus_.length() + minus_.length() > n)
        throw LengthOverflow("weight needs " + std::to_string(plus_.length() + minus_.length()) +
                             " nonzero entries but n = " + std::to_string(n));
}

GlWeight GlWeight::from_tuple(std::span<const int> tuple) {
    const int n = static_cast<int>(tuple.size());
    if (n < 1) throw DimensionMismatch("weight tuple must be non-empty");
    for (int i = 1; i < n; ++i)
        if (tuple[i - 1] < tuple[i]) throw NotDecreasing("weight tuple must be weakly decreasing");
    std::vector<int> plus, minus;
    for (int v : tuple) {
        if (v > 0) plus.push_back(v);
        else if (v < 0) minus.push_back(-v);
    }
    std::reverse(minus.begin(), minus.end());
    return GlWeight(Partition(std::move(plus)), Partition(std::move(minus)), n);
}

GlWeight GlWeight::parse(std::string_view text) {
    std::vector<int> values = detail::parse_int_list(text);
    try {
        return from_tuple(values);
    } catch (const NotDecreasing& e) {
        throw ParseError("cannot parse \"" + std::string(text) + "\": " + e.what());
    } catch (const DimensionMismatch& e) {
        throw ParseError("cannot parse \"" + std::string(text) + "\": " + e.what());
    }
}

std::vector<int> GlWeight::to_tuple() const { return combine(plus_, minus_, n_); }

GlWeight GlWeight::det_twisted(int power) const {
    std::vector<int> tuple = to_tuple();
    for (int& v : tuple) v += power;
    return from_tuple(tuple);
}

std::string GlWeight::to_string() const {
    std::vector<int> tuple = to_tuple();
    std::string out = "[";
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(tuple[i]);
    }
    out += ']';
    return out;
}

bool operator<(const GlWeight& a, const GlWeight& b) {
    if (a.n() != b.n()) return a.n() < b.n();
    if (a.plus() != b.plus()) return a.plus() < b.plus();
    return a.minus() < b.minus();
}

std::ostream& operator<<(std::ostream& os, const GlWeight& w) { return os << w.to_string(); }

std::vector<int> combine(const Partition& alpha, const Partition& beta, int n) {
    if (n < 1) throw DimensionMismatch("ambient rank n must be positive, got " + std::to_string(n));
    if (alpha.length() + beta.length() > n)
        throw LengthOverflow("partitions need " + std::to_string(alpha.length() + beta.length()) +
                             " nonzero entries but n = " + std::to_string(n));
    std::vector<int> tuple(static_cast<size_t>(n), 0);
    for (int i = 0; i < alpha.length(); ++i) tuple[static_cast<size_t>(i)] = alpha.part(i + 1);
    for (int i = 0; i < beta.length(); ++i)
        tuple[static_cast<size_t>(n - 1 - i)] = -beta.part(i + 1);
    return tuple;
}

GlWeight split(std::span<const int> tuple) { return GlWeight::from_tuple(tuple); }

}  // namespace lrct
