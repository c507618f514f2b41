#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "antipower/word.hpp"

namespace antipower {

// Suffix array by prefix doubling, LCP by Kasai. Exact and deterministic;
// fast enough for the desk-scale prefixes this library works with.
struct SuffixArray {
    std::vector<std::uint32_t> sa;    // suffix start indices, sorted
    std::vector<std::uint32_t> rank;  // inverse permutation
    std::vector<std::uint32_t> lcp;   // lcp[i] = lcp(sa[i-1], sa[i]), lcp[0] = 0

    static SuffixArray build(std::span<const Letter> w) {
        const std::uint32_t n = static_cast<std::uint32_t>(w.size());
        SuffixArray out;
        out.sa.resize(n);
        out.rank.resize(n);
        out.lcp.assign(n, 0);
        if (n == 0) return out;

        std::iota(out.sa.begin(), out.sa.end(), 0u);
        for (std::uint32_t i = 0; i < n; ++i) out.rank[i] = w[i];
        std::vector<std::uint32_t> tmp(n);
        for (std::uint32_t len = 1;; len *= 2) {
            auto key = [&](std::uint32_t i) {
                std::int64_t second = (i + len < n) ? static_cast<std::int64_t>(out.rank[i + len]) : -1;
                return std::pair<std::uint32_t, std::int64_t>(out.rank[i], second);
            };
            std::sort(out.sa.begin(), out.sa.end(),
                      [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });
            tmp[out.sa[0]] = 0;
            for (std::uint32_t i = 1; i < n; ++i)
                tmp[out.sa[i]] = tmp[out.sa[i - 1]] + (key(out.sa[i - 1]) < key(out.sa[i]) ? 1 : 0);
            out.rank = tmp;
            if (out.rank[out.sa[n - 1]] == n - 1) break;
        }

        std::uint32_t h = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (out.rank[i] == 0) {
                h = 0;
                continue;
            }
            std::uint32_t j = out.sa[out.rank[i] - 1];
            if (h > 0) --h;
            while (i + h < n && j + h < n && w[i + h] == w[j + h]) ++h;
            out.lcp[out.rank[i]] = h;
        }
        return out;
    }

    // Number of distinct length-n factors, given this array was built over the word.
    std::size_t distinct_factors(std::size_t n) const {
        const std::size_t len = sa.size();
        if (n == 0 || n > len) throw std::invalid_argument("factor length out of range");
        std::size_t count = len - n + 1;
        for (std::size_t i = 1; i < len; ++i)
            if (lcp[i] >= n) --count;
        return count;
    }
};

// Exact count of distinct contiguous length-n factors of w.
inline std::size_t factor_count(std::span<const Letter> w, std::size_t n) {
    return SuffixArray::build(w).distinct_factors(n);
}

inline std::size_t factor_count(const FiniteWord& w, std::size_t n) {
    return factor_count(w.view(), n);
}

// Failure function: border[i] = length of the longest proper border of w[0, i].
inline std::vector<std::uint32_t> border_array(std::span<const Letter> w) {
    std::vector<std::uint32_t> border(w.size(), 0);
    for (std::size_t i = 1, j = 0; i < w.size();) {
        if (w[i] == w[j]) {
            border[i++] = static_cast<std::uint32_t>(++j);
        } else if (j != 0) {
            j = border[j - 1];
        } else {
            border[i++] = 0;
        }
    }
    return border;
}

// Smallest p >= 1 with w[i] == w[i+p] for all valid i.
inline std::size_t minimal_period(std::span<const Letter> w) {
    if (w.empty()) throw std::invalid_argument("minimal_period of empty word");
    return w.size() - border_array(w).back();
}

inline std::size_t minimal_period(const FiniteWord& w) { return minimal_period(w.view()); }

// A word is primitive iff it equals none of its nontrivial cyclic rotations,
// equivalently iff it is not a proper power.
inline bool is_primitive(std::span<const Letter> w) {
    std::size_t p = minimal_period(w);
    return p == w.size() || w.size() % p != 0;
}

inline bool is_primitive(const FiniteWord& w) { return is_primitive(w.view()); }

// All occurrence start positions of `pattern` in `text` (KMP).
inline std::vector<std::uint64_t> find_occurrences(std::span<const Letter> text,
                                                   std::span<const Letter> pattern) {
    std::vector<std::uint64_t> hits;
    if (pattern.empty() || pattern.size() > text.size()) return hits;
    std::vector<std::uint32_t> border = border_array(pattern);
    for (std::size_t i = 0, j = 0; i < text.size();) {
        if (text[i] == pattern[j]) {
            ++i;
            ++j;
            if (j == pattern.size()) {
                hits.push_back(i - pattern.size());
                j = border[j - 1];
            }
        } else if (j != 0) {
            j = border[j - 1];
        } else {
            ++i;
        }
    }
    return hits;
}

}  // namespace antipower
