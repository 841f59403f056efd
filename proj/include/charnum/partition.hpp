// Integer partitions and binomial coefficients.
#pragma once

#include "charnum/rational.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace charnum {

// Non-increasing sequence of positive integers; indexes Chern numbers c_I
// and Pontrjagin numbers p_I. The empty partition has weight 0.
class Partition {
public:
    Partition() = default;
    // Canonicalizes (sorts non-increasing); parts must be positive.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }

    // Multiset union: the partition of the monomial product c_I * c_J.
    Partition merged(const Partition& other) const;

    bool operator==(const Partition&) const = default;
    // Lexicographic on the part lists, so [1,1] < [2] < [2,1] < [3].
    std::strong_ordering operator<=>(const Partition& o) const;

    std::string str() const;  // "[3,1]", "[]" for the empty partition
    // Accepts "[3,1]", "3,1", "[]", or "" (empty).
    static Partition parse(std::string_view text);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All partitions of n in lexicographically descending order:
// [n], ..., [1,1,...,1]. partitions_of(0) is { [] }.
std::vector<Partition> partitions_of(int n);

// C(n, k) for n >= 0; returns 0 when k < 0 or k > n.
Integer binomial(int n, int k);

}  // namespace charnum
