#include "charnum/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace charnum {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) {
            throw std::invalid_argument("Partition: parts must be positive");
        }
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(all));
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(),
                                                  o.parts_.begin(), o.parts_.end());
}

std::string Partition::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ']';
    return s;
}

Partition Partition::parse(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("Partition: cannot parse '" + std::string(text) + "'");
    };
    std::string_view body = text;
    while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
    while (!body.empty() && body.back() == ' ') body.remove_suffix(1);
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') fail();
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < body.size()) {
        while (pos < body.size() && body[pos] == ' ') ++pos;
        std::size_t start = pos;
        while (pos < body.size() && body[pos] != ',') ++pos;
        std::string_view token = body.substr(start, pos - start);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (token.empty()) fail();
        int value = 0;
        for (char c : token) {
            if (c < '0' || c > '9') fail();
            value = value * 10 + (c - '0');
            if (value > 1'000'000) fail();
        }
        parts.push_back(value);
        if (pos < body.size()) ++pos;  // skip comma; trailing comma fails via empty token
    }
    if (!body.empty() && body.back() == ',') fail();
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) {
        throw std::domain_error("partitions_of: n must be non-negative");
    }
    std::vector<Partition> out;
    std::vector<int> current;
    // Descending first parts yield lexicographically descending output.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(Partition(current));
            return;
        }
        for (int first = std::min(remaining, max_part); first >= 1; --first) {
            current.push_back(first);
            rec(remaining - first, first);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Integer binomial(int n, int k) {
    if (n < 0) {
        throw std::domain_error("binomial: n must be non-negative");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    Integer result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: result is always an intermediate binomial
    }
    return result;
}

}  // namespace charnum
