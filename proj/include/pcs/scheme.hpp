#ifndef PCS_SCHEME_HPP
#define PCS_SCHEME_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace pcs {

/// A progressive Type-II censoring plan: n units on test, m observed
/// failures, removals[i] surviving units withdrawn at the (i+1)-th failure.
///
/// Always valid once constructed: 1 <= m <= n, every removal >= 0 and
/// the removals sum to n - m.
class CensoringScheme {
public:
    /// Throws InvalidArgument unless the invariants hold.
    CensoringScheme(int n, int m, std::vector<int> removals);

    /// n inferred as m + sum(removals).
    static CensoringScheme from_removals(std::vector<int> removals);

    /// OSC(position): all n - m removals at the given 1-based failure index.
    static CensoringScheme one_step(int n, int m, int position);

    /// Ordinary Type-II censoring, i.e. OSC(m).
    static CensoringScheme type_ii(int n, int m) { return one_step(n, m, m); }

    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    const std::vector<int>& removals() const noexcept { return removals_; }
    int operator[](std::size_t i) const { return removals_[i]; }

    friend bool operator==(const CensoringScheme&, const CensoringScheme&) = default;
    /// Lexicographic on removals for equal (n, m).
    friend std::strong_ordering operator<=>(const CensoringScheme& a, const CensoringScheme& b);

private:
    int n_;
    int m_;
    std::vector<int> removals_;
};

/// True when (n, m, removals) would form a valid scheme.
bool is_feasible(int n, int m, std::span<const int> removals) noexcept;

/// |CS(n, m)| = C(n-1, m-1); saturates at UINT64_MAX.
std::uint64_t scheme_count(int n, int m);

struct SchemeHash {
    std::size_t operator()(const CensoringScheme& s) const noexcept;
};

}  // namespace pcs

#endif  // PCS_SCHEME_HPP
