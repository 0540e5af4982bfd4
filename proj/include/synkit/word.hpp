#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace synkit {

/// One of the two input letters. Encoded a = 0, b = 1 throughout.
enum class Letter : std::uint8_t { a = 0, b = 1 };

constexpr Letter complement(Letter x) noexcept {
    return x == Letter::a ? Letter::b : Letter::a;
}

constexpr int index_of(Letter x) noexcept { return static_cast<int>(x); }

constexpr char to_char(Letter x) noexcept { return x == Letter::a ? 'a' : 'b'; }

inline Letter letter_from_char(char c) {
    switch (c) {
    case 'a': return Letter::a;
    case 'b': return Letter::b;
    default:
        throw std::invalid_argument(std::string("invalid letter '") + c +
                                    "': expected 'a' or 'b'");
    }
}

/// A possibly-empty sequence of letters.
using Letters = std::vector<Letter>;

inline Letters parse_letters(std::string_view text) {
    Letters out;
    out.reserve(text.size());
    for (char c : text) out.push_back(letter_from_char(c));
    return out;
}

inline std::string letters_to_string(std::span<const Letter> u) {
    std::string out;
    out.reserve(u.size());
    for (Letter x : u) out.push_back(to_char(x));
    return out;
}

/// A nonempty word over {a, b}; the generator of a principal ideal.
class Word {
public:
    explicit Word(std::string_view text) : letters_(parse_letters(text)) {
        if (letters_.empty()) throw std::invalid_argument("word must be nonempty");
    }

    explicit Word(Letters letters) : letters_(std::move(letters)) {
        if (letters_.empty()) throw std::invalid_argument("word must be nonempty");
    }

    int size() const noexcept { return static_cast<int>(letters_.size()); }

    /// 0-based letter access.
    Letter operator[](int i) const { return letters_.at(static_cast<std::size_t>(i)); }

    const Letters& letters() const noexcept { return letters_; }

    operator std::span<const Letter>() const noexcept { return letters_; }

    std::string str() const { return letters_to_string(letters_); }

    /// The word with every letter replaced by its complement.
    Word swapped() const {
        Letters out;
        out.reserve(letters_.size());
        for (Letter x : letters_) out.push_back(complement(x));
        return Word(std::move(out));
    }

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    Letters letters_;
};

} // namespace synkit
