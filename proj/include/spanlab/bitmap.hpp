#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace spanlab {

// Fixed-size bitmap over element indices. Word layout is little-endian by
// bit position, so equal contents compare equal via the word vector.
class Bitmap {
public:
    Bitmap() = default;
    explicit Bitmap(std::int64_t size)
        : size_(size), words_(static_cast<std::size_t>((size + 63) / 64), 0) {}

    std::int64_t size() const { return size_; }

    void reset() { std::fill(words_.begin(), words_.end(), 0); }

    void set(std::int64_t i) {
        words_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
    }

    bool test(std::int64_t i) const {
        return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
    }

    std::int64_t count() const {
        std::int64_t total = 0;
        for (std::uint64_t w : words_) total += std::popcount(w);
        return total;
    }

    bool all() const { return count() == size_; }

    // Least index not contained, or size() when full.
    std::int64_t first_missing() const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = ~words_[k];
            if (k + 1 == words_.size() && (size_ & 63) != 0)
                w &= (std::uint64_t{1} << (size_ & 63)) - 1;
            if (w != 0)
                return static_cast<std::int64_t>(k) * 64 + std::countr_zero(w);
        }
        return size_;
    }

    friend bool operator==(const Bitmap&, const Bitmap&) = default;

private:
    std::int64_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace spanlab
