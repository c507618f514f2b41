#pragma once

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "antipower/errors.hpp"
#include "antipower/morphism.hpp"

namespace antipower {

// Lazily materialized prefix of the pure morphic word mu^omega(seed).
//
// Growth applies mu to the current prefix in rounds until the requested
// length is reached (sound because mu is prolongable on the seed, so the
// image of a prefix is again a prefix). The materialized buffer is published
// as an immutable snapshot: readers holding a snapshot are unaffected by
// later growth, and growers serialize on a mutex, so concurrent callers
// never observe a partially written extension.
class MorphicWord {
public:
    MorphicWord(Morphism mu, Letter seed, std::uint64_t cap = kDefaultCap)
        : mu_(std::move(mu)), seed_(seed), cap_(cap),
          data_(std::make_shared<const std::vector<Letter>>(std::vector<Letter>{seed})) {
        if (seed >= mu_.alphabet()->size())
            throw std::invalid_argument("seed letter outside alphabet");
        if (!mu_.prolongable_on(seed))
            throw std::invalid_argument("morphism is not prolongable on the seed letter");
    }

    MorphicWord(const MorphicWord&) = delete;
    MorphicWord& operator=(const MorphicWord&) = delete;

    const Morphism& morphism() const { return mu_; }
    Letter seed() const { return seed_; }
    std::uint64_t cap() const { return cap_; }

    std::uint64_t materialized_length() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return data_->size();
    }

    // Stable immutable buffer holding at least `len` letters of the word.
    std::shared_ptr<const std::vector<Letter>> snapshot(std::uint64_t len) {
        if (len > cap_)
            throw CapExceeded("prefix length " + std::to_string(len) + " exceeds cap of " +
                              std::to_string(cap_));
        std::lock_guard<std::mutex> lock(mutex_);
        if (data_->size() >= len) return data_;
        std::vector<Letter> cur = *data_;
        while (cur.size() < len) {
            std::vector<Letter> next = grow_once(cur, len);
            if (next.size() == cur.size())
                throw std::invalid_argument(
                    "word generated from this seed is finite; cannot materialize " +
                    std::to_string(len) + " letters");
            cur = std::move(next);
        }
        data_ = std::make_shared<const std::vector<Letter>>(std::move(cur));
        return data_;
    }

    // First `len` letters of the word, as a fresh FiniteWord.
    FiniteWord prefix(std::uint64_t len) {
        auto snap = snapshot(len);
        return FiniteWord(mu_.alphabet(),
                          std::vector<Letter>(snap->begin(), snap->begin() + len));
    }

private:
    // One application round, truncated at `limit` letters.
    std::vector<Letter> grow_once(const std::vector<Letter>& cur, std::uint64_t limit) const {
        std::vector<Letter> out;
        out.reserve(std::min<std::uint64_t>(limit, cur.size() * 2));
        for (Letter a : cur) {
            const auto& img = mu_.image(a).letters();
            for (Letter l : img) {
                out.push_back(l);
                if (out.size() >= limit) return out;
            }
        }
        return out;
    }

    Morphism mu_;
    Letter seed_;
    std::uint64_t cap_;
    mutable std::mutex mutex_;
    std::shared_ptr<const std::vector<Letter>> data_;
};

// --- Prefix cache files ------------------------------------------------
//
// Layout: magic "MWPF", 1-byte version (= 1), 1-byte alphabet size,
// 8-byte little-endian length N, then N letter-id bytes.

inline constexpr char kCacheMagic[4] = {'M', 'W', 'P', 'F'};
inline constexpr std::uint8_t kCacheVersion = 1;

inline void write_prefix_cache(const std::filesystem::path& path, const FiniteWord& w) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out.write(kCacheMagic, 4);
    auto put_byte = [&](std::uint8_t b) { out.put(static_cast<char>(b)); };
    put_byte(kCacheVersion);
    put_byte(static_cast<std::uint8_t>(w.alphabet()->size()));
    std::uint64_t n = w.size();
    for (int i = 0; i < 8; ++i) put_byte(static_cast<std::uint8_t>((n >> (8 * i)) & 0xff));
    out.write(reinterpret_cast<const char*>(w.letters().data()),
              static_cast<std::streamsize>(w.size()));
    if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

inline FiniteWord read_prefix_cache(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kCacheMagic, 4) != 0)
        throw ParseError("'" + path.string() + "' is not a prefix cache file");
    int version = in.get();
    if (version != kCacheVersion)
        throw ParseError("unsupported prefix cache version " + std::to_string(version));
    int alphabet_size = in.get();
    if (alphabet_size < 1) throw ParseError("invalid alphabet size in prefix cache");
    std::uint64_t n = 0;
    for (int i = 0; i < 8; ++i) {
        int byte = in.get();
        if (byte < 0) throw ParseError("truncated prefix cache header");
        n |= static_cast<std::uint64_t>(byte) << (8 * i);
    }
    if (n > (std::uint64_t{1} << 33))
        throw ParseError("implausible prefix cache length " + std::to_string(n));
    std::vector<Letter> letters(n);
    in.read(reinterpret_cast<char*>(letters.data()), static_cast<std::streamsize>(n));
    if (static_cast<std::uint64_t>(in.gcount()) != n)
        throw ParseError("truncated prefix cache body");
    auto alphabet = Alphabet::generic(static_cast<std::size_t>(alphabet_size));
    for (Letter l : letters)
        if (l >= alphabet->size()) throw ParseError("letter id outside declared alphabet");
    return FiniteWord(std::move(alphabet), std::move(letters));
}

}  // namespace antipower
