#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "word_object.hpp"

namespace phc {

// A permutation in one-line notation sigma(1)...sigma(n). Position order is
// the natural order on {1..n}; the value order is read off the letters.
class Permutation : public WordObject<Permutation> {
public:
    static constexpr std::string_view tag = "per";

    Permutation() = default;

    explicit Permutation(std::vector<int> word) : WordObject(std::move(word)) {
        const int n = size();
        std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
        for (int l : word_) {
            if (l < 1 || l > n)
                throw std::invalid_argument("not a bijection of [" + std::to_string(n) + "]: letter " + std::to_string(l) +
                                            " out of range");
            if (seen[static_cast<std::size_t>(l)])
                throw std::invalid_argument("not a bijection of [" + std::to_string(n) + "]: letter " + std::to_string(l) +
                                            " repeated");
            seen[static_cast<std::size_t>(l)] = true;
        }
    }

    Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

    static Permutation parse(std::string_view text) { return Permutation(parse_word(text)); }

    static Permutation identity(int n) {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    // Standardization of the subsequence at s.
    Permutation restrict(const PositionSet& s) const {
        check_subset(s);
        return Permutation(dense_rank(subsequence(s)));
    }

    static Permutation oplus(const Permutation& a, const Permutation& b) {
        std::vector<int> w = a.word_;
        w.reserve(a.word_.size() + b.word_.size());
        for (int l : b.word_) w.push_back(l + a.size());
        return Permutation(std::move(w));
    }

    // Split after k whenever the prefix of length k is an order ideal of the
    // values, i.e. sigma({1..k}) = {1..k}.
    std::vector<Permutation> decompose() const {
        std::vector<Permutation> out;
        int start = 0;
        int prefix_max = 0;
        for (int k = 1; k <= size(); ++k) {
            prefix_max = std::max(prefix_max, word_[static_cast<std::size_t>(k - 1)]);
            if (prefix_max == k) {
                std::vector<int> block(word_.begin() + start, word_.begin() + k);
                for (int& l : block) l -= start;
                out.emplace_back(std::move(block));
                start = k;
            }
        }
        return out;
    }

    // All n! permutations in lexicographic order.
    static std::vector<Permutation> enumerate(int n) {
        if (n < 0) throw std::invalid_argument("enumerate: negative size");
        std::vector<Permutation> out;
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        do {
            out.push_back(Permutation(w));
        } while (std::next_permutation(w.begin(), w.end()));
        return out;
    }
};

} // namespace phc
