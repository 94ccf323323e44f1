#include "pcs/scheme.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "pcs/error.hpp"

namespace pcs {

bool is_feasible(int n, int m, std::span<const int> removals) noexcept {
    if (m < 1 || n < m) return false;
    if (removals.size() != static_cast<std::size_t>(m)) return false;
    long long total = 0;
    for (int r : removals) {
        if (r < 0) return false;
        total += r;
    }
    return total == static_cast<long long>(n) - m;
}

CensoringScheme::CensoringScheme(int n, int m, std::vector<int> removals)
    : n_(n), m_(m), removals_(std::move(removals)) {
    if (m_ < 1 || n_ < m_) {
        throw InvalidArgument("censoring scheme needs 1 <= m <= n, got n=" + std::to_string(n_) +
                              " m=" + std::to_string(m_));
    }
    if (removals_.size() != static_cast<std::size_t>(m_)) {
        throw InvalidArgument("censoring scheme has " + std::to_string(removals_.size()) +
                              " removals, expected m=" + std::to_string(m_));
    }
    if (!is_feasible(n_, m_, removals_)) {
        throw InvalidArgument("removals must be non-negative and sum to n - m = " +
                              std::to_string(n_ - m_));
    }
}

CensoringScheme CensoringScheme::from_removals(std::vector<int> removals) {
    const int m = static_cast<int>(removals.size());
    long long total = 0;
    for (int r : removals) total += r;
    if (total > std::numeric_limits<int>::max() - m) {
        throw InvalidArgument("censoring scheme too large");
    }
    return CensoringScheme(m + static_cast<int>(total), m, std::move(removals));
}

CensoringScheme CensoringScheme::one_step(int n, int m, int position) {
    if (m < 1 || n < m) {
        throw InvalidArgument("one-step censoring needs 1 <= m <= n");
    }
    if (position < 1 || position > m) {
        throw InvalidArgument("one-step position must be in 1..m");
    }
    std::vector<int> removals(static_cast<std::size_t>(m), 0);
    removals[static_cast<std::size_t>(position - 1)] = n - m;
    return CensoringScheme(n, m, std::move(removals));
}

std::strong_ordering operator<=>(const CensoringScheme& a, const CensoringScheme& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.removals_.begin(), a.removals_.end(),
                                                  b.removals_.begin(), b.removals_.end());
}

std::uint64_t scheme_count(int n, int m) {
    if (m < 1 || n < m) throw InvalidArgument("scheme_count needs 1 <= m <= n");
    // C(n-1, k) with k = min(m-1, n-m); each partial product is itself a binomial
    const std::uint64_t top = static_cast<std::uint64_t>(n - 1);
    const std::uint64_t k = std::min<std::uint64_t>(static_cast<std::uint64_t>(m - 1),
                                                     static_cast<std::uint64_t>(n - m));
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c = c * (top - k + i) / i;
        if (c > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(c);
}

std::size_t SchemeHash::operator()(const CensoringScheme& s) const noexcept {
    std::size_t h = std::hash<int>{}(s.n()) * 1000003u ^ std::hash<int>{}(s.m());
    for (int r : s.removals()) {
        h ^= std::hash<int>{}(r) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace pcs
