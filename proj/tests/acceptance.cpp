// Acceptance suite: runs every top-level requirement at its stated scale
// and prints one PASS/FAIL line per criterion. Exit code 0 iff every hard
// criterion holds (criterion 11 is informational by contract: it must
// complete and report, but its verdict does not gate).

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "antipower/classifier.hpp"
#include "antipower/construction.hpp"
#include "antipower/golden.hpp"
#include "antipower/morphism.hpp"

using namespace antipower;

namespace {

using BigFloat = boost::multiprecision::number<
    boost::multiprecision::backends::cpp_bin_float<256, boost::multiprecision::backends::digit_base_2>>;

struct Criterion {
    int id;
    std::string name;
    std::function<bool(std::string&)> run;
    bool informational = false;
};

std::optional<ViolatingPair> pairwise_oracle(const std::vector<Letter>& w, std::uint64_t i,
                                             std::uint64_t m, std::uint32_t k) {
    for (std::uint32_t p = 0; p < k; ++p)
        for (std::uint32_t q = p + 1; q < k; ++q) {
            bool eq = true;
            for (std::uint64_t t = 0; t < m && eq; ++t)
                eq = w[i + p * m + t] == w[i + q * m + t];
            if (eq) return ViolatingPair{p, q};
        }
    return std::nullopt;
}

bool criterion1(std::string& detail) {
    auto ab = Alphabet::make("01");
    FiniteWord w = FiniteWord::from_display(ab, "011000");
    bool ok = is_antipower(w, 3);
    ok = ok && w.slice(0, 2).display() == "01" && w.slice(2, 4).display() == "10" &&
         w.slice(4, 6).display() == "00";
    detail = "blocks 01, 10, 00 pairwise distinct";
    return ok;
}

bool criterion2(std::string& detail) {
    constexpr std::uint64_t kLimit = 1'000'000;
    Morphism mu = fibonacci_morphism();
    MorphicWord word(mu, 0, kLimit + 16);
    auto snap = word.snapshot(kLimit);
    std::vector<Letter> formula = fib_digits(kLimit);
    for (std::uint64_t i = 0; i < kLimit; ++i) {
        if (formula[i] != (*snap)[i]) {
            detail = "first mismatch at n = " + std::to_string(i);
            return false;
        }
    }
    detail = "digit formula agrees with morphic expansion for n < 10^6";
    return true;
}

bool criterion3(std::string& detail) {
    Morphism mu = fibonacci_morphism();
    MorphicWord word(mu, 0);
    for (std::uint64_t n = 1; n <= 100; ++n) {
        auto [count, used] = stabilized_factor_complexity(word, n);
        if (count != n + 1) {
            detail = "p(" + std::to_string(n) + ") = " + std::to_string(count);
            return false;
        }
    }
    detail = "stabilized factor count is n + 1 for n = 1..100";
    return true;
}

bool criterion4(std::string& detail) {
    Morphism mu = fibonacci_morphism();
    MorphicWord word(mu, 0);
    for (std::uint32_t n = 3; n <= 14; ++n) {
        SweepReport sweep = verify_block_antipowers(word, n, 0, 2000);
        if (!sweep.pass()) {
            detail = "failure at n = " + std::to_string(n) +
                     ", index = " + std::to_string(sweep.failures.front().index);
            return false;
        }
    }
    detail = "antipower windows verified for n = 3..14 at indices 0..2000";
    return true;
}

bool criterion5(std::string& detail) {
    double max_ratio = 0;
    for (std::uint64_t k = 1; k <= 500; ++k) {
        LinearBound bound = linear_block_bound(BigInt(k));
        if (!bound.ratio_ok) {
            detail = "exact ratio check failed at k = " + std::to_string(k);
            return false;
        }
        max_ratio = std::max(max_ratio, bound.block.convert_to<double>() / static_cast<double>(k));
    }
    std::ostringstream ss;
    ss << "max observed ratio " << std::setprecision(6) << max_ratio << " <= 2.8945";
    detail = ss.str();
    return max_ratio <= 2.8945;
}

bool criterion6(std::string& detail) {
    Morphism mu = fibonacci_morphism();
    MorphicWord word(mu, 0);
    for (std::uint64_t i = 0; i <= 100; ++i) {
        for (std::uint32_t k = 2; k <= 30; ++k) {
            GammaRow row = gamma_bounds_row(word, i, k);
            if (!row.lower_ok || !row.upper_ok) {
                detail = "bounds failed at i = " + std::to_string(i) + ", k = " + std::to_string(k) +
                         ", gamma = " + std::to_string(row.gamma_value);
                return false;
            }
        }
    }
    detail = "k - 1 <= gamma_i(k) <= linear-bound block for i <= 100, k <= 30";
    return true;
}

bool criterion7(std::string& detail) {
    Morphism mu = thue_morse_morphism();
    MorphicWord word(mu, 0);
    SpanningFactor sf = find_spanning_factor(word, 1 << 12);
    for (std::uint32_t n = 3; n <= 8; ++n) {
        ResidueScanReport scan = residue_scan(word, n, sf.s, std::uint64_t{1} << 20);
        if (!scan.found_any) {
            detail = "no occurrences at n = " + std::to_string(n);
            return false;
        }
        if (!scan.violations.empty()) {
            detail = std::to_string(scan.violations.size()) + " violations at n = " +
                     std::to_string(n);
            return false;
        }
    }
    detail = "all occurrence residues satisfy gcd(i, 2^n) > 2^n/4 for n = 3..8";
    return true;
}

bool criterion8(std::string& detail) {
    Morphism mu = thue_morse_morphism();
    MorphicWord word(mu, 0);
    for (std::uint32_t k = 2; k <= 8; ++k) {
        UniformPlan plan = make_uniform_plan(word, k, 4096);
        SweepReport sweep = verify_uniform_plan(word, plan, 0, 500);
        if (!sweep.pass()) {
            detail = "failure at k = " + std::to_string(k) +
                     ", index = " + std::to_string(sweep.failures.front().index);
            return false;
        }
    }
    detail = "constructed windows are k-antipowers for k = 2..8 at indices 0..500";
    return true;
}

bool criterion9(std::string& detail) {
    ClassificationVerdict tm = classify(thue_morse_morphism(), 0);
    if (tm.periodicity.kind != PeriodicityVerdict::Kind::aperiodic ||
        tm.uniformly_recurrent != Trivalent::yes) {
        detail = "Thue-Morse misclassified";
        return false;
    }
    Morphism rot = parse_morphism("0 -> 01230 ; 1 -> 12301 ; 2 -> 23012 ; 3 -> 30123");
    ClassificationVerdict rv = classify(rot, 0);
    if (rv.periodicity.kind != PeriodicityVerdict::Kind::periodic ||
        rv.periodicity.unit->display() != "0123") {
        detail = "rotation word misclassified";
        return false;
    }
    std::set<Letter> letters(rv.periodicity.unit->letters().begin(),
                             rv.periodicity.unit->letters().end());
    if (letters.size() != rv.periodicity.unit->size() || !is_primitive(*rv.periodicity.unit)) {
        detail = "periodic unit is not distinct-lettered and primitive";
        return false;
    }
    if (is_uniformly_recurrent(parse_morphism("0 -> 01 ; 1 -> 11"), 0)) {
        detail = "0111... wrongly marked uniformly recurrent";
        return false;
    }
    ClassificationVerdict ni = classify(parse_morphism("0 -> 01 ; 1 -> 01"), 0);
    if (ni.periodicity.kind != PeriodicityVerdict::Kind::unknown) {
        detail = "noninjective morphism not reported unknown";
        return false;
    }
    detail = "all four regression verdicts correct";
    return true;
}

bool criterion10(std::string& detail) {
    for (std::uint32_t n = 1; n <= 64; ++n) {
        if (!(fib_phi_residue(n) == GoldenNumber{-fib(n + 1), fib(n)})) {
            detail = "residue identity failed at n = " + std::to_string(n);
            return false;
        }
    }
    for (std::uint32_t n = 2; n <= 64; ++n) antipower_block_count(n);  // throws on mismatch

    static const BigFloat phi = (1 + sqrt(BigFloat(5))) / 2;
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 10000; ++trial) {
        BigInt a = BigInt(rng());
        BigInt b = BigInt(rng());
        if (rng() & 1) a = -a;
        if (rng() & 1) b = -b;
        BigFloat value = BigFloat(a) + BigFloat(b) * phi;
        int expected = value == 0 ? 0 : (value > 0 ? 1 : -1);
        if (sign(GoldenNumber{a, b}) != expected) {
            detail = "sign mismatch at a = " + a.str() + ", b = " + b.str();
            return false;
        }
    }
    detail = "residue identity (n <= 64), dual-route floors (n <= 64), 10^4 sign oracle checks";
    return true;
}

bool criterion11(std::string& detail) {
    Morphism mu = fibonacci_morphism();
    MorphicWord word(mu, 0);
    std::ostringstream ss;
    for (std::uint32_t n : {6u, 9u, 12u}) {
        EvenFibPrefixReport r = even_fib_prefix_report(word, n);
        ss << "n=" << n << " k=" << r.k << " block=" << r.block << " -> "
           << (r.pass ? "PASS" : "FAIL") << "; ";
    }
    detail = ss.str();
    return true;  // reporting suffices; the verdicts are informational
}

bool criterion12(std::string& detail) {
    std::mt19937 rng(97);
    for (int trial = 0; trial < 10000; ++trial) {
        int sigma = 2 + static_cast<int>(rng() % 3);  // alphabets of 2..4 letters
        std::uint32_t k = 2 + rng() % 6;
        std::uint64_t m = 1 + rng() % 8;
        std::uint64_t i = rng() % 5;
        std::vector<Letter> w(i + k * m + rng() % 4);
        for (auto& l : w) l = static_cast<Letter>(rng() % sigma);
        std::span<const Letter> span(w);
        PrefixHashes hashes(span);
        auto expected = pairwise_oracle(w, i, m, k);
        AntipowerReport naive = blocks_distinct(span, nullptr, i, m, k, Strategy::naive);
        AntipowerReport accel = blocks_distinct(span, &hashes, i, m, k, Strategy::accelerated);
        if (naive.violating_pair != expected || accel.violating_pair != expected ||
            naive.is_antipower != accel.is_antipower) {
            detail = "strategy divergence at trial " + std::to_string(trial);
            return false;
        }
    }
    detail = "naive and accelerated agree on 10^4 randomized cases";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "antipower ground truth (011000 split into 3)", criterion1},
        {2, "digit formula vs morphic expansion, n < 10^6", criterion2},
        {3, "Fibonacci factor complexity n + 1, n <= 100", criterion3},
        {4, "block antipowers at every index, n = 3..14, x <= 2000", criterion4},
        {5, "linear bound ratio below (4/sqrt 5) phi, k <= 500", criterion5},
        {6, "gamma within [k - 1, linear-bound block], i <= 100, k <= 30", criterion6},
        {7, "occurrence residue gcd check, n = 3..8, 2^20 prefix", criterion7},
        {8, "constructed k-antipowers, k = 2..8, indices 0..500", criterion8},
        {9, "classifier regression corpus", criterion9},
        {10, "exact kernel: residues, dual-route floors, sign oracle", criterion10},
        {11, "even-Fibonacci prefix reports, n = 6, 9, 12", criterion11, true},
        {12, "strategy equivalence on 10^4 randomized cases", criterion12},
    };

    int hard_failures = 0;
    for (auto& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!ok && !criterion.informational) ++hard_failures;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << criterion.id
                  << "  " << criterion.name << "  [" << std::fixed << std::setprecision(2)
                  << seconds << "s]\n      " << detail << "\n";
    }
    std::cout << (hard_failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << "\n";
    return hard_failures == 0 ? 0 : 1;
}
