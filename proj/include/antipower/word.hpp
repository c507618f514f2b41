#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "antipower/alphabet.hpp"

namespace antipower {

// An immutable finite word over an Alphabet. Equality is letterwise;
// the alphabet only supplies display characters.
class FiniteWord {
public:
    FiniteWord() : alphabet_(Alphabet::generic(1)) {}

    FiniteWord(std::shared_ptr<const Alphabet> alphabet, std::vector<Letter> letters)
        : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
        if (!alphabet_) throw std::invalid_argument("null alphabet");
        for (Letter l : letters_)
            if (l >= alphabet_->size()) throw std::invalid_argument("letter id outside alphabet");
    }

    static FiniteWord from_display(std::shared_ptr<const Alphabet> alphabet, std::string_view text) {
        std::vector<Letter> letters;
        letters.reserve(text.size());
        for (char c : text) {
            auto id = alphabet->id_of(c);
            if (!id) throw std::invalid_argument(std::string("character '") + c + "' not in alphabet");
            letters.push_back(*id);
        }
        return FiniteWord(std::move(alphabet), std::move(letters));
    }

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::span<const Letter> view() const { return letters_; }
    const std::shared_ptr<const Alphabet>& alphabet() const { return alphabet_; }

    // Half-open substring [i, j).
    FiniteWord slice(std::size_t i, std::size_t j) const {
        if (i > j || j > letters_.size()) throw std::out_of_range("slice out of range");
        return FiniteWord(alphabet_, std::vector<Letter>(letters_.begin() + i, letters_.begin() + j));
    }

    std::string display() const {
        std::string out;
        out.reserve(letters_.size());
        for (Letter l : letters_) out.push_back(alphabet_->display(l));
        return out;
    }

    friend bool operator==(const FiniteWord& x, const FiniteWord& y) {
        return x.letters_ == y.letters_;
    }
    friend bool operator!=(const FiniteWord& x, const FiniteWord& y) { return !(x == y); }

private:
    std::shared_ptr<const Alphabet> alphabet_;
    std::vector<Letter> letters_;
};

}  // namespace antipower
