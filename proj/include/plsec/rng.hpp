#ifndef PLSEC_RNG_HPP
#define PLSEC_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace plsec {

// One step of the splitmix64 sequence (Vigna's reference mixer).
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Stateless 64-bit hash of (seed, id); used to derive per-purpose seeds
// so that distinct consumers of the same master seed get unrelated streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t id) {
    std::uint64_t s = seed ^ (id * 0x9E3779B97F4A7C15ULL);
    return splitmix64_next(s);
}

/// Reproducible substream of random numbers, identified by (seed, stream_id).
///
/// Generator: xoshiro256++ whose 256-bit state is filled from a splitmix64
/// sequence keyed on seed XOR (stream_id * 2^64/phi). Identical
/// (seed, stream_id) pairs produce identical sample sequences on every
/// platform; distinct stream_ids under one seed are independent substreams.
/// Gaussians come from a Box-Muller transform on 53-bit uniforms (not
/// std::normal_distribution, whose sequence is implementation-defined).
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_id_(stream_id) {
        std::uint64_t sm = seed ^ (stream_id * 0x9E3779B97F4A7C15ULL);
        for (auto& w : s_) w = splitmix64_next(sm);
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform on [0,1) with 53 random bits.
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal N(0,1).
    double next_gauss() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - next_double();  // (0,1], keeps log finite
        const double u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Circularly symmetric complex Gaussian with E{|h|^2} = 1.
    std::complex<double> next_cgauss() {
        constexpr double half_pow = std::numbers::sqrt2 / 2.0;
        const double re = next_gauss() * half_pow;
        const double im = next_gauss() * half_pow;
        return {re, im};
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace plsec

#endif
