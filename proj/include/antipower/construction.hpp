#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "antipower/antipower.hpp"
#include "antipower/classifier.hpp"
#include "antipower/factors.hpp"
#include "antipower/morphic_word.hpp"

namespace antipower {

// A shortest factor t of the prefix containing every observed length-2
// factor, plus an occurrence of t extended by one letter on each side.
struct SpanningFactor {
    FiniteWord t;
    FiniteWord s;             // f t g
    std::uint64_t t_position; // leftmost start of the minimal window
    std::uint64_t s_position; // start of the extended occurrence
};

inline SpanningFactor find_spanning_factor(MorphicWord& source, std::uint64_t prefix_length) {
    if (prefix_length < 2) throw std::invalid_argument("prefix too short to hold a 2-factor");
    auto snap = source.snapshot(prefix_length);
    std::span<const Letter> w(snap->data(), prefix_length);
    const std::size_t m = source.morphism().alphabet()->size();

    // Distinct 2-factors of the prefix, coded a*m + b.
    std::vector<int> needed(m * m, 0);
    std::size_t distinct = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        std::size_t code = static_cast<std::size_t>(w[i]) * m + w[i + 1];
        if (needed[code]++ == 0) ++distinct;
    }

    // Leftmost shortest window covering all of them (two pointers).
    std::vector<int> have(m * m, 0);
    std::size_t covered = 0;
    std::size_t best_lo = 0, best_len = w.size() + 1;
    std::size_t lo = 0;
    for (std::size_t hi = 2; hi <= w.size(); ++hi) {
        std::size_t code = static_cast<std::size_t>(w[hi - 2]) * m + w[hi - 1];
        if (needed[code] > 0 && have[code]++ == 0) ++covered;
        while (covered == distinct) {
            std::size_t len = hi - lo;
            if (len < best_len) {
                best_len = len;
                best_lo = lo;
            }
            std::size_t drop = static_cast<std::size_t>(w[lo]) * m + w[lo + 1];
            if (needed[drop] > 0 && --have[drop] == 0) --covered;
            ++lo;
        }
    }
    if (best_len > w.size()) throw std::logic_error("no covering window found");

    FiniteWord t(source.morphism().alphabet(),
                 std::vector<Letter>(w.begin() + best_lo, w.begin() + best_lo + best_len));

    // Leftmost occurrence of t with one letter of margin on each side.
    std::optional<std::uint64_t> s_pos;
    for (std::uint64_t p : find_occurrences(w, t.view())) {
        if (p >= 1 && p + t.size() + 1 <= w.size()) {
            s_pos = p - 1;
            break;
        }
    }
    if (!s_pos)
        throw std::invalid_argument(
            "no occurrence of the spanning factor has both one-letter extensions in the prefix");
    FiniteWord s(source.morphism().alphabet(),
                 std::vector<Letter>(w.begin() + *s_pos, w.begin() + *s_pos + t.size() + 2));
    return SpanningFactor{std::move(t), std::move(s), best_lo, *s_pos};
}

// Residue check over all occurrences of the n-fold image of s in a prefix:
// each occurrence position gamma must satisfy gcd(gamma mod r^n, r^n) > r^n/m'^2,
// with m' the number of letters occurring in the word and gcd(0, x) = x.
// A violation would indicate a bug or bad inputs, so it is reported, not proved.
struct ResidueScanReport {
    std::uint32_t r = 0;
    std::uint32_t n = 0;
    std::uint64_t r_pow_n = 0;
    std::uint32_t letters_in_word = 0;  // m'
    std::uint64_t prefix_length = 0;
    std::uint64_t pattern_length = 0;
    std::vector<std::uint64_t> occurrences;  // gamma values
    std::vector<std::uint64_t> residues;     // distinct residues, ascending
    std::vector<std::uint64_t> violations;   // offending gamma values
    bool vacuous = false;                    // r^n <= m'^2: inequality cannot discriminate
    bool found_any = false;
};

inline ResidueScanReport residue_scan(MorphicWord& source, std::uint32_t n, const FiniteWord& s,
                                      std::uint64_t prefix_length) {
    const Morphism& mu = source.morphism();
    const std::uint32_t r = mu.require_radius();

    ResidueScanReport report;
    report.r = r;
    report.n = n;
    report.prefix_length = prefix_length;
    report.letters_in_word =
        static_cast<std::uint32_t>(reachable_letters(mu, source.seed()).size());

    std::uint64_t r_pow = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (r_pow > prefix_length) throw CapExceeded("r^n exceeds the prefix length");
        r_pow *= r;
    }
    report.r_pow_n = r_pow;
    const std::uint64_t m2 =
        static_cast<std::uint64_t>(report.letters_in_word) * report.letters_in_word;
    report.vacuous = r_pow <= m2;

    FiniteWord pattern = s;
    for (std::uint32_t i = 0; i < n; ++i) pattern = apply(mu, pattern);
    report.pattern_length = pattern.size();
    if (pattern.size() > prefix_length)
        throw std::invalid_argument("image of s is longer than the requested prefix");

    auto snap = source.snapshot(prefix_length);
    std::span<const Letter> w(snap->data(), prefix_length);
    report.occurrences = find_occurrences(w, pattern.view());
    report.found_any = !report.occurrences.empty();

    for (std::uint64_t gamma_pos : report.occurrences) {
        std::uint64_t residue = gamma_pos % r_pow;
        report.residues.push_back(residue);
        std::uint64_t g = std::gcd(residue, r_pow);  // gcd(0, x) = x
        if (g * m2 <= r_pow) report.violations.push_back(gamma_pos);
    }
    std::sort(report.residues.begin(), report.residues.end());
    report.residues.erase(std::unique(report.residues.begin(), report.residues.end()),
                          report.residues.end());
    return report;
}

// Construction plan for k-antipowers at every index of an aperiodic,
// uniformly recurrent uniform morphic word: a window of k blocks of size
// r^n*y + 2r^n - 1 (with r^n >= k*m'^2) always contains, in each block, an
// aligned copy of the n-fold image of the spanning factor s, which pins
// down the block alignment and forbids equal blocks.
struct UniformPlan {
    std::uint32_t r = 0;
    std::uint32_t m = 0;  // reachable letters
    std::uint32_t k = 0;
    std::uint32_t n = 0;
    std::uint64_t r_pow_n = 1;
    FiniteWord s;
    std::uint64_t y = 0;
    std::uint64_t block_size = 1;
    std::uint64_t prefix_length = 0;
};

inline UniformPlan make_uniform_plan(MorphicWord& source, std::uint32_t k,
                                     std::uint64_t prefix_length) {
    const Morphism& mu = source.morphism();
    UniformPlan plan;
    plan.r = mu.require_radius();
    plan.k = k;
    plan.prefix_length = prefix_length;
    plan.m = static_cast<std::uint32_t>(reachable_letters(mu, source.seed()).size());

    if (k <= 1) {
        // Any single block is a 1-antipower.
        plan.block_size = 1;
        plan.s = FiniteWord(mu.alphabet(), {source.seed()});
        return plan;
    }

    if (!is_uniformly_recurrent(mu, source.seed()))
        throw std::invalid_argument("word is not uniformly recurrent; no plan exists");
    PeriodicityVerdict verdict = classify_periodicity(mu, source.seed());
    if (verdict.kind != PeriodicityVerdict::Kind::aperiodic)
        throw std::invalid_argument("word is not certified aperiodic; no plan exists");

    const std::uint64_t target = static_cast<std::uint64_t>(k) * plan.m * plan.m;
    while (plan.r_pow_n < target) {
        plan.r_pow_n *= plan.r;
        ++plan.n;
    }

    SpanningFactor span_factor = find_spanning_factor(source, prefix_length);
    plan.s = span_factor.s;
    RecurrenceEstimate est = recurrence_constant(source, plan.s, prefix_length);
    if (!est.stabilized)
        throw std::invalid_argument("recurrence constant did not stabilize within the cap");
    plan.y = est.y;
    plan.prefix_length = est.prefix_length;
    plan.block_size = plan.r_pow_n * plan.y + 2 * plan.r_pow_n - 1;
    return plan;
}

// Checks the plan's antipower window at every index of [first, last].
inline SweepReport verify_uniform_plan(MorphicWord& source, const UniformPlan& plan,
                                       std::uint64_t first_index, std::uint64_t last_index) {
    return sweep_block_windows(source, first_index, last_index, plan.block_size, plan.k);
}

}  // namespace antipower
