#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "antipower/morphic_word.hpp"
#include "antipower/morphism.hpp"

using namespace antipower;

TEST_CASE("alphabet invariants") {
    Alphabet ab("01ab");
    REQUIRE(ab.size() == 4);
    REQUIRE(ab.display(2) == 'a');
    REQUIRE(ab.id_of('b') == Letter{3});
    REQUIRE_FALSE(ab.id_of('z').has_value());
    REQUIRE_THROWS_AS(Alphabet(""), std::invalid_argument);
    REQUIRE_THROWS_AS(Alphabet("011"), std::invalid_argument);
    REQUIRE_THROWS_AS(Alphabet("0\t1"), std::invalid_argument);
}

TEST_CASE("finite word basics") {
    auto ab = Alphabet::make("01");
    FiniteWord w = FiniteWord::from_display(ab, "0110");
    REQUIRE(w.size() == 4);
    REQUIRE(w.display() == "0110");
    REQUIRE(w.slice(1, 3).display() == "11");
    REQUIRE(w.slice(2, 2).empty());
    REQUIRE_THROWS_AS(w.slice(3, 2), std::out_of_range);
    REQUIRE_THROWS_AS(FiniteWord(ab, {0, 2}), std::invalid_argument);
    // letterwise equality ignores the alphabet object
    auto ab2 = Alphabet::make("01");
    REQUIRE(w == FiniteWord::from_display(ab2, "0110"));
    REQUIRE(w != FiniteWord::from_display(ab2, "0111"));
}

TEST_CASE("morphism DSL parses the canonical words") {
    Morphism tm = parse_morphism("0 -> 01 ; 1 -> 10");
    REQUIRE(tm.alphabet()->size() == 2);
    REQUIRE(tm.uniform_radius() == 2u);
    REQUIRE(tm.image(0).display() == "01");
    REQUIRE(tm.image(1).display() == "10");

    Morphism fib = parse_morphism("0 -> 01 ; 1 -> 0");
    REQUIRE_FALSE(fib.uniform_radius().has_value());
    REQUIRE_FALSE(fib.common_image_length().has_value());

    Morphism identity = parse_morphism("0 -> 0");
    REQUIRE(identity.common_image_length() == 1u);
    REQUIRE_FALSE(identity.uniform_radius().has_value());
    REQUIRE_THROWS_WITH(identity.require_radius(),
                        Catch::Matchers::ContainsSubstring("requires radius r >= 2"));
    REQUIRE_THROWS_WITH(fib.require_radius(),
                        Catch::Matchers::ContainsSubstring("not uniform"));
}

TEST_CASE("morphism DSL comments, newlines, whitespace") {
    Morphism mu = parse_morphism("# the 0123 word\n0 -> 01230\n1->12301 ; 2 ->23012\n3-> 30123 # tail");
    REQUIRE(mu.alphabet()->size() == 4);
    REQUIRE(mu.uniform_radius() == 5u);
    REQUIRE(mu.image(3).display() == "30123");
}

TEST_CASE("morphism DSL error paths") {
    REQUIRE_THROWS_AS(parse_morphism("0 -> 01 ; 0 -> 10"), ParseError);   // duplicate rule
    REQUIRE_THROWS_AS(parse_morphism("0 -> 012"), ParseError);            // undeclared letters
    REQUIRE_THROWS_AS(parse_morphism("0 -> "), ParseError);               // empty image
    REQUIRE_THROWS_AS(parse_morphism("0 -> 0 1 ; 1 -> 0"), ParseError);   // space in image
    REQUIRE_THROWS_AS(parse_morphism("01 -> 0"), ParseError);             // multi-char head
    REQUIRE_THROWS_AS(parse_morphism("  # nothing here"), ParseError);    // no rules
    REQUIRE_THROWS_AS(parse_morphism("0 = 01"), ParseError);              // missing arrow
}

TEST_CASE("apply concatenates images") {
    Morphism tm = thue_morse_morphism();
    auto ab = tm.alphabet();
    REQUIRE(apply(tm, FiniteWord::from_display(ab, "01")).display() == "0110");
    REQUIRE(apply(tm, FiniteWord(ab, {})).empty());

    Morphism fib = fibonacci_morphism();
    REQUIRE(apply(fib, FiniteWord::from_display(fib.alphabet(), "010")).display() == "01001");
}

TEST_CASE("apply respects concatenation on random splits") {
    Morphism fib = fibonacci_morphism();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t len = rng() % 40;
        std::vector<Letter> letters(len);
        for (auto& l : letters) l = rng() % 2;
        FiniteWord w(fib.alphabet(), letters);
        std::size_t cut = len ? rng() % (len + 1) : 0;
        FiniteWord u = w.slice(0, cut), v = w.slice(cut, len);
        FiniteWord lhs = apply(fib, w);
        FiniteWord rhs_u = apply(fib, u), rhs_v = apply(fib, v);
        std::vector<Letter> joined = rhs_u.letters();
        joined.insert(joined.end(), rhs_v.letters().begin(), rhs_v.letters().end());
        REQUIRE(lhs.letters() == joined);
    }
}

TEST_CASE("iterate reproduces the canonical prefixes") {
    Morphism tm = thue_morse_morphism();
    REQUIRE(iterate(tm, 0, 4).display() == "0110100110010110");
    REQUIRE(iterate(tm, 0, 0).display() == "0");

    Morphism fib = fibonacci_morphism();
    FiniteWord f5 = iterate(fib, 0, 5);
    REQUIRE(f5.display() == "0100101001001");
    REQUIRE(f5.size() == 13);  // F_7
}

TEST_CASE("iterate length laws") {
    Morphism tm = thue_morse_morphism();
    for (std::uint32_t n = 0; n <= 12; ++n)
        REQUIRE(iterate(tm, 0, n).size() == (std::size_t{1} << n));  // r^n for r = 2

    // |phi^n(0)| = F_{n+2} with F_1 = F_2 = 1
    Morphism fib = fibonacci_morphism();
    std::vector<std::size_t> f = {0, 1, 1};
    while (f.size() < 20) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    for (std::uint32_t n = 0; n <= 15; ++n)
        REQUIRE(iterate(fib, 0, n).size() == f[n + 2]);
}

TEST_CASE("iterate cap guard") {
    Morphism tm = thue_morse_morphism();
    REQUIRE_THROWS_AS(iterate(tm, 0, 40, 1 << 16), CapExceeded);
}

TEST_CASE("morphic word prefixes") {
    Morphism fib = fibonacci_morphism();
    MorphicWord w(fib, 0);
    REQUIRE(w.prefix(8).display() == "01001010");
    REQUIRE(w.prefix(0).empty());

    Morphism tm = thue_morse_morphism();
    MorphicWord t(tm, 0);
    REQUIRE(t.prefix(6).display() == "011010");
}

TEST_CASE("prefix monotonicity") {
    Morphism fib = fibonacci_morphism();
    MorphicWord w(fib, 0);
    FiniteWord longer = w.prefix(4000);
    // requesting shorter prefixes afterwards, and longer ones, never changes letters
    for (std::size_t len : std::vector<std::size_t>{0, 1, 13, 233, 4000, 10000}) {
        FiniteWord p = w.prefix(len);
        for (std::size_t i = 0; i < std::min(p.size(), longer.size()); ++i)
            REQUIRE(p[i] == longer[i]);
    }
}

TEST_CASE("morphic word rejects bad seeds and fakes") {
    Morphism mu = parse_morphism("0 -> 10 ; 1 -> 01");  // not prolongable on 0
    REQUIRE_THROWS_AS(MorphicWord(mu, 0), std::invalid_argument);

    Morphism identity = parse_morphism("0 -> 0");
    MorphicWord w(identity, 0);
    REQUIRE(w.prefix(1).display() == "0");
    REQUIRE_THROWS_AS(w.prefix(2), std::invalid_argument);  // the word is finite
}

TEST_CASE("morphic word cap") {
    Morphism tm = thue_morse_morphism();
    MorphicWord w(tm, 0, 1024);
    REQUIRE(w.prefix(1024).size() == 1024);
    REQUIRE_THROWS_AS(w.prefix(1025), CapExceeded);
}

TEST_CASE("concurrent readers see consistent prefixes") {
    Morphism tm = thue_morse_morphism();
    MorphicWord w(tm, 0);
    FiniteWord expected = w.prefix(1 << 14);
    MorphicWord fresh(tm, 0);
    std::vector<std::thread> threads;
    std::atomic<bool> ok{true};
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&, t] {
            std::mt19937 rng(t);
            for (int round = 0; round < 50; ++round) {
                std::uint64_t len = 1 + rng() % (1 << 14);
                auto snap = fresh.snapshot(len);
                for (std::uint64_t i = 0; i < len; i += 97)
                    if ((*snap)[i] != expected[i]) ok = false;
            }
        });
    }
    for (auto& t : threads) t.join();
    REQUIRE(ok);
}

TEST_CASE("prefix cache round trip") {
    Morphism tm = thue_morse_morphism();
    MorphicWord w(tm, 0);
    FiniteWord prefix = w.prefix(100);
    auto path = std::filesystem::temp_directory_path() / "antipower_cache_test.mwpf";
    write_prefix_cache(path, prefix);
    FiniteWord back = read_prefix_cache(path);
    REQUIRE(back == prefix);
    REQUIRE(back.alphabet()->size() == 2);
    std::filesystem::remove(path);
}

TEST_CASE("prefix cache rejects unknown versions and garbage") {
    auto path = std::filesystem::temp_directory_path() / "antipower_cache_bad.mwpf";
    {
        std::ofstream out(path, std::ios::binary);
        out.write("MWPF", 4);
        out.put(static_cast<char>(9));  // unknown version byte
        out.put(static_cast<char>(2));
        for (int i = 0; i < 8; ++i) out.put(0);
    }
    REQUIRE_THROWS_WITH(read_prefix_cache(path), Catch::Matchers::ContainsSubstring("version"));
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out.write("NOPE", 4);
    }
    REQUIRE_THROWS_AS(read_prefix_cache(path), ParseError);
    std::filesystem::remove(path);
}
