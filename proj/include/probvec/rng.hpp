// Seedable uniform pseudo-random number sources with exact draw accounting.
//
// Every consumer in this library draws through the UniformSource concept, so
// the Mersenne Twister below can be swapped for a fixed replay sequence (in
// tests) or an externally sourced stream without touching the samplers.

#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace probvec {

// A source of uniform variates in [0,1) that counts how many it has produced.
template <typename R>
concept UniformSource = requires(R r, const R& cr) {
    { r.next_uniform() } -> std::same_as<double>;
    { cr.draw_count() } -> std::convertible_to<std::uint64_t>;
};

inline constexpr std::uint32_t kDefaultSeed = 5489u;

// 32-bit Mersenne Twister (MT19937), standard initialization and tempering.
// Uniforms are raw 32-bit words scaled by 2^-32, i.e. half-open [0,1): the
// half-open interval keeps sqrt/arcsin arguments and floor(u*i) index
// arithmetic away from their boundary values.
class Mt19937 {
public:
    explicit Mt19937(std::uint32_t seed = kDefaultSeed) { reseed(seed); }

    void reseed(std::uint32_t seed) {
        seed_ = seed;
        draw_count_ = 0;
        state_[0] = seed;
        for (std::uint32_t i = 1; i < kStateSize; ++i)
            state_[i] = 1812433253u * (state_[i - 1] ^ (state_[i - 1] >> 30)) + i;
        index_ = kStateSize;
    }

    // Raw 32-bit word; not counted as a uniform draw.
    std::uint32_t next_u32() {
        if (index_ >= kStateSize)
            twist();

        std::uint32_t y = state_[index_++];
        y ^= y >> 11;
        y ^= (y << 7) & 0x9d2c5680u;
        y ^= (y << 15) & 0xefc60000u;
        y ^= y >> 18;
        return y;
    }

    // Uniform in [0,1); increments draw_count by exactly one.
    double next_uniform() {
        ++draw_count_;
        return static_cast<double>(next_u32()) * 0x1p-32;
    }

    std::uint64_t draw_count() const { return draw_count_; }
    std::uint32_t seed() const { return seed_; }

private:
    static constexpr std::uint32_t kStateSize = 624;
    static constexpr std::uint32_t kShift = 397;
    static constexpr std::uint32_t kMatrixA = 0x9908b0dfu;
    static constexpr std::uint32_t kUpperMask = 0x80000000u;
    static constexpr std::uint32_t kLowerMask = 0x7fffffffu;

    void twist() {
        for (std::uint32_t i = 0; i < kStateSize; ++i) {
            const std::uint32_t y = (state_[i] & kUpperMask) |
                                    (state_[(i + 1) % kStateSize] & kLowerMask);
            std::uint32_t next = state_[(i + kShift) % kStateSize] ^ (y >> 1);
            if (y & 1u)
                next ^= kMatrixA;
            state_[i] = next;
        }
        index_ = 0;
    }

    std::array<std::uint32_t, kStateSize> state_{};
    std::uint32_t index_ = kStateSize;
    std::uint32_t seed_ = kDefaultSeed;
    std::uint64_t draw_count_ = 0;
};

static_assert(UniformSource<Mt19937>);

// Replays a fixed list of uniforms. Lets tests pin sampler outputs exactly
// and supports externally generated (e.g. true-random) streams.
class SequenceSource {
public:
    explicit SequenceSource(std::vector<double> values) : values_(std::move(values)) {
        for (double v : values_)
            if (!(v >= 0.0 && v < 1.0))
                throw std::invalid_argument("SequenceSource: values must lie in [0,1)");
    }

    double next_uniform() {
        if (position_ >= values_.size())
            throw std::out_of_range("SequenceSource: sequence exhausted after " +
                                    std::to_string(values_.size()) + " draws");
        return values_[position_++];
    }

    std::uint64_t draw_count() const { return position_; }
    std::size_t remaining() const { return values_.size() - position_; }

private:
    std::vector<double> values_;
    std::size_t position_ = 0;
};

static_assert(UniformSource<SequenceSource>);

} // namespace probvec
