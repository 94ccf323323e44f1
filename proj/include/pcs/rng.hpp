#ifndef PCS_RNG_HPP
#define PCS_RNG_HPP

#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>

namespace pcs {

/// Anything the stochastic operators can draw from.
template <typename R>
concept UniformSource = requires(R& r, std::size_t k) {
    { r.uniform() } -> std::convertible_to<double>;   // [0, 1)
    { r.index(k) } -> std::convertible_to<std::size_t>;  // [0, k)
};

/// Seeded 64-bit Mersenne Twister with platform-independent conversions.
///
/// std::mt19937_64 and std::seed_seq are fully specified by the standard;
/// the std:: distributions are not, so conversions to doubles and bounded
/// integers are done here. Independent streams come from
/// Rng(seed, stream): the pair is fed through seed_seq.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream),
                          static_cast<std::uint32_t>(stream >> 32)};
        engine_.seed(seq);
    }

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

    std::uint64_t bits() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1).
    double uniform_open() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Unbiased integer in [0, k); k must be positive.
    std::size_t index(std::size_t k) {
        const std::uint64_t bound = static_cast<std::uint64_t>(k);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return static_cast<std::size_t>(x % bound);
    }

    /// Standard exponential, strictly positive.
    double exponential() { return -std::log(uniform_open()); }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
};

}  // namespace pcs

#endif  // PCS_RNG_HPP
