#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace antipower {

using Letter = std::uint8_t;

// A finite alphabet of m letters, identified as 0..m-1, each with a distinct
// printable display character. Immutable once built; share via shared_ptr.
class Alphabet {
public:
    explicit Alphabet(std::string_view display_chars) {
        if (display_chars.empty() || display_chars.size() > 255)
            throw std::invalid_argument("alphabet size must be in 1..255");
        to_id_.fill(-1);
        for (char c : display_chars) {
            unsigned char uc = static_cast<unsigned char>(c);
            if (!std::isprint(uc))
                throw std::invalid_argument("alphabet display characters must be printable");
            if (to_id_[uc] != -1)
                throw std::invalid_argument(std::string("duplicate display character '") + c + "'");
            to_id_[uc] = static_cast<int>(display_.size());
            display_.push_back(c);
        }
    }

    static std::shared_ptr<const Alphabet> make(std::string_view display_chars) {
        return std::make_shared<const Alphabet>(display_chars);
    }

    // Default display palette for alphabets read from binary caches:
    // digits, then lower/upper case letters, then remaining printable ASCII.
    static std::shared_ptr<const Alphabet> generic(std::size_t m) {
        static const std::string palette = [] {
            std::string p = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
            for (int c = 33; c < 127; ++c)
                if (p.find(static_cast<char>(c)) == std::string::npos) p.push_back(static_cast<char>(c));
            return p;
        }();
        if (m == 0 || m > palette.size())
            throw std::invalid_argument("no default display for alphabet of size " + std::to_string(m));
        return make(std::string_view(palette).substr(0, m));
    }

    std::size_t size() const { return display_.size(); }

    char display(Letter id) const {
        if (id >= display_.size()) throw std::out_of_range("letter id out of range");
        return display_[id];
    }

    std::optional<Letter> id_of(char c) const {
        int id = to_id_[static_cast<unsigned char>(c)];
        if (id < 0) return std::nullopt;
        return static_cast<Letter>(id);
    }

    const std::string& display_chars() const { return display_; }

private:
    std::string display_;
    std::array<int, 256> to_id_;
};

}  // namespace antipower
