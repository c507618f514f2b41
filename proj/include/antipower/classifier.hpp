#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "antipower/factors.hpp"
#include "antipower/morphic_word.hpp"
#include "antipower/morphism.hpp"

namespace antipower {

enum class Trivalent { yes, no, unknown };

struct PeriodicityVerdict {
    enum class Kind { periodic, aperiodic, unknown };
    Kind kind = Kind::unknown;
    std::optional<FiniteWord> unit;  // present iff periodic
};

struct ClassificationVerdict {
    bool prolongable = false;
    std::vector<Letter> reachable;  // ascending letter ids
    Trivalent uniformly_recurrent = Trivalent::unknown;
    PeriodicityVerdict periodicity;
    bool injective_on_letters = false;
};

// Letters occurring in mu^omega(seed): closure of {seed} under
// "letters occurring in the image of".
inline std::vector<Letter> reachable_letters(const Morphism& mu, Letter seed) {
    if (seed >= mu.alphabet()->size()) throw std::invalid_argument("seed letter outside alphabet");
    std::vector<bool> seen(mu.alphabet()->size(), false);
    std::vector<Letter> stack = {seed};
    seen[seed] = true;
    while (!stack.empty()) {
        Letter a = stack.back();
        stack.pop_back();
        for (Letter b : mu.image(a).letters()) {
            if (!seen[b]) {
                seen[b] = true;
                stack.push_back(b);
            }
        }
    }
    std::vector<Letter> out;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i]) out.push_back(static_cast<Letter>(i));
    return out;
}

// True iff every image is distinct from every other. For uniform morphisms
// this is equivalent to injectivity on equal-length words.
inline bool is_injective_on_letters(const Morphism& mu) {
    const std::size_t m = mu.alphabet()->size();
    for (std::size_t a = 0; a + 1 < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (mu.image(static_cast<Letter>(a)) == mu.image(static_cast<Letter>(b))) return false;
    return true;
}

// Uniform-recurrence criterion for uniform morphic words: with m' the number
// of reachable letters, the word is uniformly recurrent iff the (m'-1)-fold
// image of every reachable letter contains the seed. Unreachable letters are
// excluded first since they cannot occur in the word.
inline bool is_uniformly_recurrent(const Morphism& mu, Letter seed,
                                   std::uint64_t cap = kDefaultCap) {
    mu.require_radius();
    if (!mu.prolongable_on(seed))
        throw std::invalid_argument("morphism is not prolongable on the seed letter");
    std::vector<Letter> reachable = reachable_letters(mu, seed);
    const std::uint32_t exponent = static_cast<std::uint32_t>(reachable.size()) - 1;
    for (Letter a : reachable) {
        FiniteWord img = iterate(mu, a, exponent, cap);
        if (std::find(img.letters().begin(), img.letters().end(), seed) == img.letters().end())
            return false;
    }
    return true;
}

// Exact periodicity classification for words generated by an injective
// uniform morphism. A candidate period ell must satisfy: the first ell
// letters of the word are pairwise distinct (the minimal repeating unit of
// such a word has no duplicate letter), gcd(ell, r) = 1, and the unit must
// reproduce itself under the morphism: the image of unit[i] equals the
// periodic extension of the unit read from position i*r mod ell. That last
// condition makes the word a fixed point of the morphism with period ell, so
// a verdict of periodic is a proof, not a heuristic. Noninjective uniform
// morphisms are reported unknown.
inline PeriodicityVerdict classify_periodicity(const Morphism& mu, Letter seed,
                                               std::uint64_t prefix_check_length = 4096) {
    const std::uint32_t r = mu.require_radius();
    if (!mu.prolongable_on(seed))
        throw std::invalid_argument("morphism is not prolongable on the seed letter");
    if (!is_injective_on_letters(mu)) return {PeriodicityVerdict::Kind::unknown, std::nullopt};

    std::vector<Letter> reachable = reachable_letters(mu, seed);
    const std::uint32_t max_ell = static_cast<std::uint32_t>(reachable.size());

    MorphicWord word(mu, seed);
    FiniteWord head = word.prefix(std::max<std::uint64_t>(max_ell, 1));
    for (std::uint32_t ell = 1; ell <= max_ell; ++ell) {
        if (std::gcd(ell, r) != 1) continue;
        bool distinct = true;
        for (std::uint32_t i = 0; i < ell && distinct; ++i)
            for (std::uint32_t j = i + 1; j < ell; ++j)
                if (head[i] == head[j]) {
                    distinct = false;
                    break;
                }
        if (!distinct) continue;

        bool consistent = true;
        for (std::uint32_t i = 0; i < ell && consistent; ++i) {
            const FiniteWord& img = mu.image(head[i]);
            for (std::uint32_t j = 0; j < r; ++j) {
                if (img[j] != head[(static_cast<std::uint64_t>(i) * r + j) % ell]) {
                    consistent = false;
                    break;
                }
            }
        }
        if (!consistent) continue;

        FiniteWord unit = head.slice(0, ell);
        // Self-certification against the materialized prefix.
        FiniteWord check = word.prefix(std::max<std::uint64_t>(prefix_check_length, ell));
        for (std::size_t i = 0; i < check.size(); ++i)
            if (check[i] != unit[i % ell])
                throw std::logic_error("periodicity certificate contradicts materialized prefix");
        return {PeriodicityVerdict::Kind::periodic, unit};
    }
    return {PeriodicityVerdict::Kind::aperiodic, std::nullopt};
}

// Full verdict. Non-uniform morphisms get unknowns where the uniform-word
// criteria do not apply.
inline ClassificationVerdict classify(const Morphism& mu, Letter seed,
                                      std::uint64_t prefix_check_length = 4096) {
    ClassificationVerdict v;
    v.prolongable = mu.prolongable_on(seed);
    v.reachable = reachable_letters(mu, seed);
    v.injective_on_letters = is_injective_on_letters(mu);
    if (v.prolongable && mu.uniform_radius()) {
        v.uniformly_recurrent = is_uniformly_recurrent(mu, seed) ? Trivalent::yes : Trivalent::no;
        v.periodicity = classify_periodicity(mu, seed, prefix_check_length);
    } else {
        v.uniformly_recurrent = Trivalent::unknown;
        v.periodicity = {PeriodicityVerdict::Kind::unknown, std::nullopt};
    }
    return v;
}

struct RecurrenceEstimate {
    FiniteWord s;
    std::uint64_t y = 0;            // minimal window length
    std::uint64_t prefix_length = 0;
    bool stabilized = false;
};

namespace detail {

// Minimal y such that every length-y window of w contains s.
inline std::uint64_t min_window_containing(std::span<const Letter> w, std::span<const Letter> s) {
    std::vector<std::uint64_t> occ = find_occurrences(w, s);
    if (occ.empty()) throw std::invalid_argument("factor does not occur in the prefix");
    std::uint64_t y = std::max<std::uint64_t>(occ.front() + s.size(), w.size() - occ.back());
    for (std::size_t i = 0; i + 1 < occ.size(); ++i)
        y = std::max<std::uint64_t>(y, occ[i + 1] - occ[i] - 1 + s.size());
    return y;
}

}  // namespace detail

// Empirical recurrence constant: minimal y such that every length-y window
// of the prefix contains s, re-measured over doubling prefixes until the
// value agrees twice in a row.
inline RecurrenceEstimate recurrence_constant(MorphicWord& source, const FiniteWord& s,
                                              std::uint64_t start_length) {
    if (s.empty()) throw std::invalid_argument("factor must be nonempty");
    std::uint64_t len = std::max<std::uint64_t>(start_length, s.size() * 2);
    std::uint64_t prev = 0;
    int agreements = 0;
    RecurrenceEstimate est{s, 0, 0, false};
    while (true) {
        len = std::min(len, source.cap());
        auto snap = source.snapshot(len);
        std::uint64_t y = detail::min_window_containing(
            std::span<const Letter>(snap->data(), len), s.view());
        agreements = (est.prefix_length > 0 && y == prev) ? agreements + 1 : 0;
        prev = y;
        est.y = y;
        est.prefix_length = len;
        if (agreements >= 2) {
            est.stabilized = true;
            return est;
        }
        if (len >= source.cap()) return est;  // ran out of room, not stabilized
        len *= 2;
    }
}

// Factor count measured over doubling prefixes until it repeats twice.
// Returns the stabilized count and the prefix length that produced it.
inline std::pair<std::uint64_t, std::uint64_t> stabilized_factor_complexity(MorphicWord& source,
                                                                            std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factor length must be positive");
    std::uint64_t len = std::max<std::uint64_t>(n * 2, 64);
    std::uint64_t prev = 0;
    int agreements = 0;
    bool first = true;
    while (true) {
        if (len > source.cap())
            throw CapExceeded("factor complexity did not stabilize within the cap");
        auto snap = source.snapshot(len);
        std::uint64_t count = factor_count(std::span<const Letter>(snap->data(), len), n);
        agreements = (!first && count == prev) ? agreements + 1 : 0;
        first = false;
        prev = count;
        if (agreements >= 2) return {count, len};
        len *= 2;
    }
}

}  // namespace antipower
