#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "antipower/hashing.hpp"
#include "antipower/morphic_word.hpp"
#include "antipower/word.hpp"

namespace antipower {

struct AntipowerQuery {
    std::uint64_t index = 0;
    std::uint32_t k = 0;
    std::uint64_t block_length = 0;
};

// Block indices p < q of two letterwise-equal blocks.
struct ViolatingPair {
    std::uint32_t first = 0;
    std::uint32_t second = 0;
    friend bool operator==(const ViolatingPair&, const ViolatingPair&) = default;
};

struct AntipowerReport {
    AntipowerQuery query;
    bool is_antipower = false;
    std::optional<ViolatingPair> violating_pair;
};

enum class Strategy { naive, accelerated };

namespace detail {

inline bool blocks_equal(std::span<const Letter> w, std::uint64_t base, std::uint64_t m,
                         std::uint32_t p, std::uint32_t q) {
    const Letter* x = w.data() + base + p * m;
    const Letter* y = w.data() + base + q * m;
    for (std::uint64_t t = 0; t < m; ++t)
        if (x[t] != y[t]) return false;
    return true;
}

// Lexicographically smallest (p, q), p < q, with equal blocks; pairwise scan.
inline std::optional<ViolatingPair> first_equal_pair_naive(std::span<const Letter> w,
                                                           std::uint64_t base, std::uint64_t m,
                                                           std::uint32_t k) {
    for (std::uint32_t p = 0; p + 1 < k; ++p)
        for (std::uint32_t q = p + 1; q < k; ++q)
            if (blocks_equal(w, base, m, p, q)) return ViolatingPair{p, q};
    return std::nullopt;
}

// Same answer via fingerprint buckets; letterwise verification on every
// fingerprint match keeps the result exact under collisions.
inline std::optional<ViolatingPair> first_equal_pair_hashed(std::span<const Letter> w,
                                                            const PrefixHashes& hashes,
                                                            std::uint64_t base, std::uint64_t m,
                                                            std::uint32_t k) {
    struct Hash {
        std::size_t operator()(const PrefixHashes::Fingerprint& f) const {
            return static_cast<std::size_t>(f.first * 0x9e3779b97f4a7c15ULL ^ f.second);
        }
    };
    std::unordered_map<PrefixHashes::Fingerprint, std::vector<std::uint32_t>, Hash> buckets;
    buckets.reserve(k * 2);
    std::optional<ViolatingPair> best;
    for (std::uint32_t q = 0; q < k; ++q) {
        auto fp = hashes.range(base + q * m, base + (q + 1) * m);
        auto& bucket = buckets[fp];
        for (std::uint32_t p : bucket) {
            if (best && p >= best->first) break;  // bucket is ascending
            if (blocks_equal(w, base, m, p, q)) {
                best = ViolatingPair{p, q};
                break;
            }
        }
        bucket.push_back(q);
    }
    return best;
}

}  // namespace detail

// Report on whether w[i, i+k*m) splits into k pairwise distinct blocks of
// length m. The violating pair, when present, is the lexicographically
// smallest (p, q) whatever the strategy.
inline AntipowerReport blocks_distinct(std::span<const Letter> w, const PrefixHashes* hashes,
                                       std::uint64_t i, std::uint64_t m, std::uint32_t k,
                                       Strategy strategy = Strategy::accelerated) {
    if (m == 0) throw std::invalid_argument("block length must be positive");
    if (i + k * m > w.size()) throw std::out_of_range("antipower window exceeds word length");
    std::optional<ViolatingPair> pair;
    if (strategy == Strategy::accelerated && hashes != nullptr)
        pair = detail::first_equal_pair_hashed(w, *hashes, i, m, k);
    else
        pair = detail::first_equal_pair_naive(w, i, m, k);
    return AntipowerReport{AntipowerQuery{i, k, m}, !pair.has_value(), pair};
}

// k = 1 is trivially an antipower; k must divide |w|.
inline bool is_antipower(const FiniteWord& w, std::uint32_t k) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    if (w.size() % k != 0) throw std::invalid_argument("word length not divisible by k");
    if (k == 1) return true;
    std::uint64_t m = w.size() / k;
    return !detail::first_equal_pair_naive(w.view(), 0, m, k).has_value();
}

inline AntipowerReport blocks_distinct(MorphicWord& source, std::uint64_t i, std::uint64_t m,
                                       std::uint32_t k,
                                       Strategy strategy = Strategy::accelerated) {
    auto snap = source.snapshot(i + k * m);
    std::span<const Letter> w(*snap);
    if (strategy == Strategy::accelerated) {
        PrefixHashes hashes(w.first(i + k * m));
        return blocks_distinct(w, &hashes, i, m, k, strategy);
    }
    return blocks_distinct(w, nullptr, i, m, k, strategy);
}

// Smallest block length m <= cap starting a k-antipower at index i, over a
// prefix already in hand.
inline std::optional<std::uint64_t> gamma_scan(std::span<const Letter> w,
                                               const PrefixHashes* hashes, std::uint64_t i,
                                               std::uint32_t k, std::uint64_t cap,
                                               Strategy strategy = Strategy::accelerated) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    if (k == 1) return 1;
    for (std::uint64_t m = 1; m <= cap; ++m) {
        if (i + k * m > w.size()) return std::nullopt;
        if (blocks_distinct(w, hashes, i, m, k, strategy).is_antipower) return m;
    }
    return std::nullopt;
}

struct SweepFailure {
    std::uint64_t index = 0;
    ViolatingPair pair;
};

// Result of checking one (k, block) window at every index of a range.
struct SweepReport {
    std::uint64_t first_index = 0;
    std::uint64_t last_index = 0;  // inclusive; empty range when last < first
    std::uint64_t checked = 0;
    std::vector<SweepFailure> failures;
    bool pass() const { return failures.empty(); }
};

inline SweepReport sweep_block_windows(MorphicWord& source, std::uint64_t first_index,
                                       std::uint64_t last_index, std::uint64_t block,
                                       std::uint32_t k) {
    SweepReport report;
    report.first_index = first_index;
    report.last_index = last_index;
    if (last_index < first_index) return report;  // vacuous pass

    const std::uint64_t need = last_index + static_cast<std::uint64_t>(k) * block;
    auto snap = source.snapshot(need);
    std::span<const Letter> w(snap->data(), need);
    PrefixHashes hashes(w);
    for (std::uint64_t a = first_index; a <= last_index; ++a) {
        AntipowerReport r = blocks_distinct(w, &hashes, a, block, k);
        ++report.checked;
        if (!r.is_antipower) report.failures.push_back({a, *r.violating_pair});
    }
    return report;
}

// Searches block lengths 1..cap, materializing the word in doubling chunks
// so small answers never force a large prefix. Throws only when the word's
// own materialization cap cuts the search short of `cap`.
inline std::optional<std::uint64_t> gamma(MorphicWord& source, std::uint64_t i, std::uint32_t k,
                                          std::uint64_t cap,
                                          Strategy strategy = Strategy::accelerated) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    if (k == 1) return 1;
    const std::uint64_t max_affordable =
        source.cap() > i ? (source.cap() - i) / k : 0;
    std::uint64_t m = 1;
    std::uint64_t m_avail = std::min<std::uint64_t>(cap, 64);
    while (m <= cap) {
        if (m > max_affordable)
            throw CapExceeded("gamma search needs more than the materialization cap allows");
        m_avail = std::min(m_avail, max_affordable);
        const std::uint64_t need = i + static_cast<std::uint64_t>(k) * m_avail;
        auto snap = source.snapshot(need);
        std::span<const Letter> w(snap->data(), need);
        std::optional<PrefixHashes> hashes;
        if (strategy == Strategy::accelerated) hashes.emplace(w);
        for (; m <= m_avail; ++m)
            if (blocks_distinct(w, hashes ? &*hashes : nullptr, i, m, k, strategy).is_antipower)
                return m;
        if (m_avail >= cap) break;
        m_avail = std::min(cap, m_avail * 2);
    }
    return std::nullopt;
}

}  // namespace antipower
