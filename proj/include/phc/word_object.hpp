#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace phc {

// Shared storage for species objects whose canonical representative is an
// integer word on positions 1..n. Classes are ordered by (size, word).
template <class Derived>
class WordObject {
public:
    const std::vector<int>& word() const { return word_; }
    int size() const { return static_cast<int>(word_.size()); }
    bool empty() const { return word_.empty(); }
    int letter(int position) const { return word_[static_cast<std::size_t>(position - 1)]; }

    std::string to_string() const;

    friend bool operator==(const WordObject& a, const WordObject& b) { return a.word_ == b.word_; }
    friend std::strong_ordering operator<=>(const WordObject& a, const WordObject& b) {
        if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
        return a.word_ <=> b.word_;
    }

protected:
    WordObject() = default;
    explicit WordObject(std::vector<int> word) : word_(std::move(word)) {
        if (word_.size() > static_cast<std::size_t>(PositionSet::max_ground))
            throw std::length_error("object size exceeds " + std::to_string(PositionSet::max_ground));
    }

    void check_subset(const PositionSet& s) const {
        if (s.ground() != size())
            throw std::invalid_argument("invalid subset: ground set of size " + std::to_string(s.ground()) +
                                        " for an object of size " + std::to_string(size()));
    }

    // Letters at the positions of s, in position order.
    std::vector<int> subsequence(const PositionSet& s) const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(s.size()));
        for (std::uint64_t m = s.mask(); m != 0; m &= m - 1) out.push_back(word_[static_cast<std::size_t>(std::countr_zero(m))]);
        return out;
    }

    std::vector<int> word_;
};

// Replace every letter by its rank among the distinct letters present;
// equal letters stay equal.
inline std::vector<int> dense_rank(std::vector<int> letters) {
    std::vector<int> sorted = letters;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int& l : letters) l = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), l) - sorted.begin()) + 1;
    return letters;
}

// Digit string when every letter fits in one digit and n <= 9, otherwise the
// bracketed form "[10,2,3]". The empty word is "".
inline std::string format_word(const std::vector<int>& word) {
    const bool short_form = word.size() <= 9 && std::all_of(word.begin(), word.end(), [](int l) { return l >= 1 && l <= 9; });
    std::string s;
    if (short_form) {
        for (int l : word) s += static_cast<char>('0' + l);
        return s;
    }
    s = "[";
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(word[i]);
    }
    return s + "]";
}

// Accepts "", "[]", "∅", a digit string "2314", a bracketed list "[10,2,3]"
// or a bare comma list "10,2,3".
inline std::vector<int> parse_word(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty() || text == "[]" || text == "\xE2\x88\x85") return {};
    auto parse_list = [&](std::string_view body) {
        std::vector<int> out;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = body.find(',', start);
            const std::string_view tok = trim(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start));
            if (tok.empty() || tok.size() > 9 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw std::invalid_argument("malformed object notation: bad letter '" + std::string(tok) + "'");
            out.push_back(std::stoi(std::string(tok)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return out;
    };
    if (text.front() == '[') {
        if (text.back() != ']') throw std::invalid_argument("malformed object notation: missing ']'");
        return parse_list(text.substr(1, text.size() - 2));
    }
    if (text.find(',') != std::string_view::npos) return parse_list(text);
    std::vector<int> out;
    for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument("malformed object notation: unexpected character '" + std::string(1, c) + "'");
        out.push_back(c - '0');
    }
    return out;
}

template <class Derived>
std::string WordObject<Derived>::to_string() const {
    return format_word(word_);
}

} // namespace phc
