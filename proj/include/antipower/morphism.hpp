#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "antipower/errors.hpp"
#include "antipower/word.hpp"

namespace antipower {

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 28;

// A non-erasing morphism, determined by one nonempty image word per letter.
class Morphism {
public:
    Morphism(std::shared_ptr<const Alphabet> alphabet, std::vector<FiniteWord> images)
        : alphabet_(std::move(alphabet)), images_(std::move(images)) {
        if (!alphabet_ || images_.size() != alphabet_->size())
            throw std::invalid_argument("one image per letter required");
        for (const auto& img : images_)
            if (img.empty()) throw std::invalid_argument("erasing morphisms are not supported");
        std::size_t len = images_[0].size();
        bool all_equal = true;
        for (const auto& img : images_) all_equal = all_equal && img.size() == len;
        if (all_equal) common_image_length_ = static_cast<std::uint32_t>(len);
    }

    const std::shared_ptr<const Alphabet>& alphabet() const { return alphabet_; }
    const FiniteWord& image(Letter a) const { return images_.at(a); }

    // Common image length when every image has the same length (includes r = 1).
    std::optional<std::uint32_t> common_image_length() const { return common_image_length_; }

    // Uniformity radius in the r >= 2 sense required by most downstream operations.
    std::optional<std::uint32_t> uniform_radius() const {
        if (common_image_length_ && *common_image_length_ >= 2) return common_image_length_;
        return std::nullopt;
    }

    bool prolongable_on(Letter a) const {
        return a < images_.size() && images_[a][0] == a;
    }

    // Throws with a distinct message for r = 1 versus genuinely non-uniform maps.
    std::uint32_t require_radius() const {
        if (common_image_length_) {
            if (*common_image_length_ >= 2) return *common_image_length_;
            throw std::invalid_argument("morphism is 1-uniform; this operation requires radius r >= 2");
        }
        throw std::invalid_argument("morphism is not uniform");
    }

private:
    std::shared_ptr<const Alphabet> alphabet_;
    std::vector<FiniteWord> images_;
    std::optional<std::uint32_t> common_image_length_;
};

// Image of a finite word: concatenation of letter images, in order.
inline FiniteWord apply(const Morphism& mu, const FiniteWord& w) {
    std::size_t total = 0;
    for (Letter a : w.letters()) total += mu.image(a).size();
    std::vector<Letter> out;
    out.reserve(total);
    for (Letter a : w.letters()) {
        const auto& img = mu.image(a).letters();
        out.insert(out.end(), img.begin(), img.end());
    }
    return FiniteWord(mu.alphabet(), std::move(out));
}

// mu^n(a), guarded against exponential blowup by `cap`.
inline FiniteWord iterate(const Morphism& mu, Letter a, std::uint32_t n,
                          std::uint64_t cap = kDefaultCap) {
    if (a >= mu.alphabet()->size()) throw std::invalid_argument("seed letter outside alphabet");
    FiniteWord w(mu.alphabet(), {a});
    for (std::uint32_t step = 0; step < n; ++step) {
        std::uint64_t next_len = 0;
        for (Letter l : w.letters()) {
            next_len += mu.image(l).size();
            if (next_len > cap)
                throw CapExceeded("iterate: image length exceeds cap of " + std::to_string(cap));
        }
        w = apply(mu, w);
    }
    return w;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Split DSL text into rule fragments: '#' comments run to end of line,
// rules separate on newlines and semicolons.
inline std::vector<std::string> rule_fragments(std::string_view text) {
    std::vector<std::string> fragments;
    std::string current;
    bool in_comment = false;
    for (char c : text) {
        if (c == '\n') {
            in_comment = false;
            fragments.emplace_back(std::move(current));
            current.clear();
        } else if (in_comment) {
            continue;
        } else if (c == '#') {
            in_comment = true;
        } else if (c == ';') {
            fragments.emplace_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fragments.emplace_back(std::move(current));
    return fragments;
}

}  // namespace detail

// Parses the rule DSL: one `<char> -> <string>` per line or semicolon-separated,
// '#' comments, whitespace insignificant around tokens. The alphabet is the
// set of rule heads, in order of appearance.
inline Morphism parse_morphism(std::string_view text) {
    struct RawRule {
        char head;
        std::string body;
    };
    std::vector<RawRule> rules;
    for (const std::string& fragment : detail::rule_fragments(text)) {
        std::string_view rule = detail::trim(fragment);
        if (rule.empty()) continue;
        std::size_t arrow = rule.find("->");
        if (arrow == std::string_view::npos)
            throw ParseError("rule '" + std::string(rule) + "' has no '->'");
        std::string_view head = detail::trim(rule.substr(0, arrow));
        std::string_view body = detail::trim(rule.substr(arrow + 2));
        if (head.size() != 1)
            throw ParseError("rule head must be a single character, got '" + std::string(head) + "'");
        if (body.empty())
            throw ParseError(std::string("empty image for letter '") + head[0] + "'");
        for (char c : body)
            if (std::isspace(static_cast<unsigned char>(c)))
                throw ParseError("image may not contain whitespace: '" + std::string(body) + "'");
        rules.push_back({head[0], std::string(body)});
    }
    if (rules.empty()) throw ParseError("no rules found");

    std::string heads;
    for (const auto& r : rules) {
        if (heads.find(r.head) != std::string::npos)
            throw ParseError(std::string("duplicate rule for letter '") + r.head + "'");
        heads.push_back(r.head);
    }
    auto alphabet = Alphabet::make(heads);

    std::vector<FiniteWord> images;
    images.reserve(rules.size());
    for (const auto& r : rules) {
        std::vector<Letter> letters;
        letters.reserve(r.body.size());
        for (char c : r.body) {
            auto id = alphabet->id_of(c);
            if (!id)
                throw ParseError(std::string("image of '") + r.head + "' uses undeclared letter '" + c + "'");
            letters.push_back(*id);
        }
        images.emplace_back(alphabet, std::move(letters));
    }
    return Morphism(alphabet, std::move(images));
}

// Canonical words used throughout the test corpus and CLI defaults.
inline Morphism thue_morse_morphism() { return parse_morphism("0 -> 01 ; 1 -> 10"); }
inline Morphism fibonacci_morphism() { return parse_morphism("0 -> 01 ; 1 -> 0"); }

}  // namespace antipower
