#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cdindex::detail {

/// Dense square boolean matrix, one packed row per element.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    std::size_t size() const { return n_; }
    std::size_t words() const { return words_; }

    bool test(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1U; }
    void set(std::size_t r, std::size_t c) { row(r)[c / 64] |= std::uint64_t{1} << (c % 64); }

    void or_row(std::size_t dst, std::size_t src)
    {
        auto* d = row(dst);
        const auto* s = row(src);
        for (std::size_t w = 0; w < words_; ++w) d[w] |= s[w];
    }

    const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }
    std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }

    template <typename F>
    void for_each_in_row(std::size_t r, F&& f) const
    {
        const auto* p = row(r);
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t word = p[w];
            while (word != 0) {
                const int b = std::countr_zero(word);
                f(w * 64 + static_cast<std::size_t>(b));
                word &= word - 1;
            }
        }
    }

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

} // namespace cdindex::detail
