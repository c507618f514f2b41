#pragma once

#include <bit>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "antipower/antipower.hpp"
#include "antipower/morphic_word.hpp"

namespace antipower {

using BigInt = boost::multiprecision::cpp_int;

// Exact element a + b*phi of Z[phi], phi = (1+sqrt(5))/2, closed under
// multiplication via phi^2 = phi + 1. Every comparison in this header is
// decided by integer arithmetic; floating point never enters a decision.
struct GoldenNumber {
    BigInt a;
    BigInt b;

    GoldenNumber() = default;
    GoldenNumber(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}

    friend GoldenNumber operator+(const GoldenNumber& x, const GoldenNumber& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend GoldenNumber operator-(const GoldenNumber& x, const GoldenNumber& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend GoldenNumber operator-(const GoldenNumber& x) { return {-x.a, -x.b}; }
    friend GoldenNumber operator*(const GoldenNumber& x, const GoldenNumber& y) {
        // (a+b phi)(c+d phi) = ac + bd + (ad + bc + bd) phi
        return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
    }
    friend GoldenNumber operator*(const GoldenNumber& x, const BigInt& c) {
        return {x.a * c, x.b * c};
    }
    friend bool operator==(const GoldenNumber& x, const GoldenNumber& y) {
        return x.a == y.a && x.b == y.b;
    }
};

inline GoldenNumber golden_phi() { return {0, 1}; }
inline GoldenNumber golden_one() { return {1, 0}; }
inline GoldenNumber golden_phi_inverse() { return {-1, 1}; }  // phi^{-1} = phi - 1

inline GoldenNumber golden_pow(GoldenNumber base, std::uint32_t e) {
    GoldenNumber acc = golden_one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// Exact sign of a + b*phi as a real number. With b > 0 and a < 0 the value
// is positive iff b*sqrt(5) > -(2a + b), settled by comparing squares (the
// pre-squared sides are both positive there, so squaring preserves order).
inline int sign(const GoldenNumber& x) {
    if (x.b == 0) return x.a.sign();
    if (x.b < 0) return -sign(-x);
    if (x.a >= 0) return 1;
    BigInt rhs = -2 * x.a - x.b;
    if (rhs <= 0) return 1;
    BigInt lhs2 = 5 * x.b * x.b;
    BigInt rhs2 = rhs * rhs;
    if (lhs2 > rhs2) return 1;
    if (lhs2 < rhs2) return -1;
    return 0;  // unreachable: sqrt(5) is irrational
}

// Display-only approximation for report columns.
inline double approx(const GoldenNumber& x) {
    static const double phi = 1.6180339887498948482;
    return x.a.convert_to<double>() + x.b.convert_to<double>() * phi;
}

// F_1 = F_2 = 1, F_n = F_{n-1} + F_{n-2}; F_0 = 0 for convenience.
inline BigInt fib(std::uint32_t n) {
    static std::vector<BigInt> cache = {0, 1, 1};
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    while (cache.size() <= n) cache.push_back(cache[cache.size() - 1] + cache[cache.size() - 2]);
    return cache[n];
}

inline BigInt isqrt(const BigInt& x) {
    if (x < 0) throw std::invalid_argument("isqrt of negative value");
    return boost::multiprecision::sqrt(x);
}

inline std::uint64_t isqrt_u64(std::uint64_t x) {
    if (x < 2) return x;
    std::uint64_t r = std::uint64_t{1} << ((std::bit_width(x) + 1) / 2);
    while (true) {
        std::uint64_t next = (r + x / r) / 2;
        if (next >= r) break;
        r = next;
    }
    while (static_cast<unsigned __int128>(r) * r > x) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= x) ++r;
    return r;
}

inline BigInt floor_div(const BigInt& x, const BigInt& d) {
    if (d <= 0) throw std::invalid_argument("floor_div requires a positive divisor");
    if (x >= 0) return x / d;
    return BigInt(-((-x + d - 1) / d));
}

// Exact floor of k*phi. For k > 0, floor(k*phi) = (k + floor(k*sqrt(5))) div 2
// = (k + isqrt(5k^2)) div 2; k*sqrt(5) is irrational for k != 0, so the
// parity case analysis makes the halving exact. Negative k uses
// floor(k*phi) = -floor(-k*phi) - 1.
inline BigInt floor_phi(const BigInt& k) {
    if (k == 0) return 0;
    if (k < 0) return -floor_phi(-k) - 1;
    return (k + isqrt(5 * k * k)) / 2;
}

// u64 fast path; valid while 5k^2 fits, i.e. k <= 1'900'000'000.
inline std::uint64_t floor_phi_u64(std::uint64_t k) {
    if (k > 1'900'000'000ULL) throw std::invalid_argument("floor_phi_u64 range exceeded");
    return (k + isqrt_u64(5 * k * k)) / 2;
}

inline BigInt floor_golden(const GoldenNumber& x) { return x.a + floor_phi(x.b); }

// Fractional part x - floor(x), always in [0, 1).
inline GoldenNumber frac(const GoldenNumber& x) { return {-floor_phi(x.b), x.b}; }

// n-th letter of the Fibonacci word from the Beatty-difference formula
// 2 - (floor((n+2)phi) - floor((n+1)phi)).
inline int fib_digit(std::uint64_t n) {
    BigInt hi = floor_phi(BigInt(n) + 2);
    BigInt lo = floor_phi(BigInt(n) + 1);
    return 2 - static_cast<int>(hi - lo);
}

// First `count` letters, reusing each floor once across the sweep.
inline std::vector<Letter> fib_digits(std::uint64_t count) {
    std::vector<Letter> out;
    out.reserve(count);
    std::uint64_t prev = floor_phi_u64(1);
    for (std::uint64_t n = 0; n < count; ++n) {
        std::uint64_t next = floor_phi_u64(n + 2);
        out.push_back(static_cast<Letter>(2 - (next - prev)));
        prev = next;
    }
    return out;
}

// Exact value of F_n*phi - F_{n+1}, which equals -(-phi)^{-n}: the
// fractional residue of F_n*phi up to an integer. Computed by powering
// (-phi)^{-1} = 1 - phi and cross-checked against the Fibonacci route.
inline GoldenNumber fib_phi_residue(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    GoldenNumber residue = -golden_pow(GoldenNumber{1, -1}, n);
    if (!(residue == GoldenNumber{-fib(n + 1), fib(n)}))
        throw std::logic_error("phi-power route disagrees with the Fibonacci route");
    return residue;
}

// Exact decision of the block-shift criterion: blocks of length 2F_n at
// distance ell*2F_n are pairwise unequal at every index of the Fibonacci
// word whenever phi^{1-n} <= min({ell*2F_n*phi}, 1 - {ell*2F_n*phi}).
struct ShiftCertificate {
    std::uint32_t n = 0;
    BigInt ell;
    GoldenNumber frac_part;  // {ell * 2F_n * phi}, exact
    bool holds = false;
};

inline ShiftCertificate shift_certificate(std::uint32_t n, const BigInt& ell) {
    if (n == 0 || ell <= 0) throw std::invalid_argument("need n >= 1 and ell >= 1");
    ShiftCertificate cert;
    cert.n = n;
    cert.ell = ell;
    cert.frac_part = frac(GoldenNumber{0, 2 * ell * fib(n)});
    GoldenNumber threshold = golden_pow(golden_phi_inverse(), n - 1);  // phi^{1-n}
    cert.holds = sign(cert.frac_part - threshold) >= 0 &&
                 sign(golden_one() - cert.frac_part - threshold) >= 0;
    return cert;
}

// floor(F_n * sqrt(5) / 2): the number of pairwise distinct blocks of
// length 2F_n guaranteed from every index of the Fibonacci word. Computed
// in Z[phi] via sqrt(5) = 2phi - 1 and cross-checked against floor(phi^n/2).
inline BigInt antipower_block_count(std::uint32_t n) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    BigInt f_n = fib(n);
    BigInt via_sqrt5 = floor_div(-f_n + floor_phi(2 * f_n), 2);
    BigInt via_phi_pow = floor_div(fib(n - 1) + floor_phi(f_n), 2);
    if (via_sqrt5 != via_phi_pow)
        throw std::logic_error("sqrt(5) route disagrees with the phi-power route");
    return via_sqrt5;
}

// Smallest scale n whose guaranteed block count reaches k, the resulting
// block length 2F_n, and the exact check 2F_n < (4/sqrt(5)) * phi * k
// (multiplied through by sqrt(5) = 2phi - 1 to stay inside the ring).
struct LinearBound {
    std::uint32_t n = 0;
    BigInt block;
    bool ratio_ok = false;
};

inline LinearBound linear_block_bound(const BigInt& k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    LinearBound out;
    out.n = 2;
    while (antipower_block_count(out.n) < k) ++out.n;
    BigInt f_n = fib(out.n);
    out.block = 2 * f_n;
    out.ratio_ok = sign(GoldenNumber{2 * f_n, 4 * k - 4 * f_n}) > 0;
    return out;
}

// Sweeps indices [first, last] of the Fibonacci word, checking the
// antipower of antipower_block_count(n) blocks of length 2F_n at each.
inline SweepReport verify_block_antipowers(MorphicWord& fibonacci_word, std::uint32_t n,
                                           std::uint64_t first_index, std::uint64_t last_index) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    BigInt count = antipower_block_count(n);
    if (count > 1'000'000'000)
        throw CapExceeded("block count too large to sweep");
    std::uint32_t k = count.convert_to<std::uint32_t>();
    std::uint64_t block = (2 * fib(n)).convert_to<std::uint64_t>();
    return sweep_block_windows(fibonacci_word, first_index, last_index, block, k);
}

// For even F_n (equivalently 3 | n): is the prefix of (F_n - 1) blocks of
// length F_n/2 + F_{n-1} an antipower? Reported, never asserted.
struct EvenFibPrefixReport {
    std::uint32_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t block = 0;
    std::uint64_t prefix_length = 0;
    bool pass = false;
    std::optional<ViolatingPair> violating_pair;
};

inline EvenFibPrefixReport even_fib_prefix_report(MorphicWord& fibonacci_word, std::uint32_t n) {
    if (n < 3 || n % 3 != 0)
        throw std::invalid_argument("F_n is even only when 3 divides n");
    BigInt f_n = fib(n);
    if (f_n % 2 != 0) throw std::logic_error("expected an even Fibonacci number");
    EvenFibPrefixReport report;
    report.n = n;
    report.k = (f_n - 1).convert_to<std::uint64_t>();
    report.block = (f_n / 2 + fib(n - 1)).convert_to<std::uint64_t>();
    report.prefix_length = report.k * report.block;
    if (report.k > 0xffffffffULL) throw CapExceeded("block count too large to check");
    AntipowerReport check = blocks_distinct(fibonacci_word, 0, report.block,
                                            static_cast<std::uint32_t>(report.k));
    report.pass = check.is_antipower;
    report.violating_pair = check.violating_pair;
    return report;
}

// One row of the gamma table: the smallest block length starting a
// k-antipower at index i of the Fibonacci word, against its exact bounds
// k - 1 <= gamma <= 2F_n from the linear bound.
struct GammaRow {
    std::uint64_t index = 0;
    std::uint32_t k = 0;
    bool found = true;         // false only for capped searches on arbitrary words
    std::uint64_t gamma_value = 0;
    std::uint64_t upper_block = 0;
    bool lower_ok = false;
    bool upper_ok = false;
};

inline GammaRow gamma_bounds_row(MorphicWord& fibonacci_word, std::uint64_t index,
                                 std::uint32_t k) {
    LinearBound bound = linear_block_bound(k);
    std::uint64_t cap = bound.block.convert_to<std::uint64_t>();
    std::optional<std::uint64_t> g = gamma(fibonacci_word, index, k, cap);
    if (!g) throw std::logic_error("gamma not found within its guaranteed bound");
    GammaRow row;
    row.index = index;
    row.k = k;
    row.gamma_value = *g;
    row.upper_block = cap;
    row.lower_ok = k < 2 || *g >= k - 1;
    row.upper_ok = *g <= cap;
    return row;
}

}  // namespace antipower
