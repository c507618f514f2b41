#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "antipower/alphabet.hpp"

namespace antipower {

// Polynomial fingerprints of all prefixes, modulo the Mersenne prime 2^61-1,
// with two independent bases: range(i, j) yields a 122-bit fingerprint of
// the substring [i, j) in O(1). Fingerprints only accelerate comparisons;
// every equality decision is confirmed letterwise by the callers.
class PrefixHashes {
public:
    using Fingerprint = std::pair<std::uint64_t, std::uint64_t>;

    explicit PrefixHashes(std::span<const Letter> text) {
        const std::size_t n = text.size();
        h1_.resize(n + 1);
        h2_.resize(n + 1);
        p1_.resize(n + 1);
        p2_.resize(n + 1);
        h1_[0] = h2_[0] = 0;
        p1_[0] = p2_[0] = 1;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t c = static_cast<std::uint64_t>(text[i]) + 1;
            h1_[i + 1] = mod_add(mod_mul(h1_[i], kBase1), c);
            h2_[i + 1] = mod_add(mod_mul(h2_[i], kBase2), c);
            p1_[i + 1] = mod_mul(p1_[i], kBase1);
            p2_[i + 1] = mod_mul(p2_[i], kBase2);
        }
    }

    Fingerprint range(std::size_t i, std::size_t j) const {
        std::uint64_t a = mod_sub(h1_[j], mod_mul(h1_[i], p1_[j - i]));
        std::uint64_t b = mod_sub(h2_[j], mod_mul(h2_[i], p2_[j - i]));
        return {a, b};
    }

    std::size_t text_length() const { return h1_.size() - 1; }

private:
    static constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
    static constexpr std::uint64_t kBase1 = 1'000'000'007;
    static constexpr std::uint64_t kBase2 = 998'244'353;

    static std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
        unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
        std::uint64_t lo = static_cast<std::uint64_t>(t & kMod);
        std::uint64_t hi = static_cast<std::uint64_t>(t >> 61);
        std::uint64_t s = lo + hi;
        if (s >= kMod) s -= kMod;
        return s;
    }
    static std::uint64_t mod_add(std::uint64_t a, std::uint64_t b) {
        std::uint64_t s = a + b;
        if (s >= kMod) s -= kMod;
        return s;
    }
    static std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b) {
        return a >= b ? a - b : a + kMod - b;
    }

    std::vector<std::uint64_t> h1_, h2_, p1_, p2_;
};

}  // namespace antipower
