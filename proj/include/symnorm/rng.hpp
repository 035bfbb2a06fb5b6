#ifndef SYMNORM_RNG_HPP
#define SYMNORM_RNG_HPP

#include <complex>
#include <cstdint>

namespace symnorm {

// Counter-based deterministic random stream (splitmix64 finalizer over
// key + counter).  Streams with the same key produce the same sequence on
// every platform, independent of how other streams are consumed, so trial
// results never depend on execution order.
class SeedStream {
public:
    explicit SeedStream(std::uint64_t key) : key_(key) {}

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key() const { return key_; }

    std::uint64_t next_u64() { return mix(key_ + 0x9E3779B97F4A7C15ULL * ++counter_); }

    // child key for an independent sub-stream
    std::uint64_t derive(std::uint64_t salt) { return mix(next_u64() ^ mix(salt)); }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // index in [0, n)
    std::uint64_t index(std::uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

    bool chance(double p) { return uniform() < p; }

    // standard normal via Box-Muller (no libc distribution, keeps draws portable)
    double gaussian();

    // complex standard normal, E|z|^2 = 1
    std::complex<double> cgaussian();

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace symnorm

#endif
