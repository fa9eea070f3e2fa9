#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "permutation.hpp"
#include "word_object.hpp"

namespace phc {

// A word over {1..m} using every letter at least once. Positions are totally
// ordered; equal letters are incomparable in the value order.
class PackedWord : public WordObject<PackedWord> {
public:
    static constexpr std::string_view tag = "pw";

    PackedWord() = default;

    explicit PackedWord(std::vector<int> word) : WordObject(std::move(word)) {
        const int n = size();
        std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
        for (int l : word_) {
            if (l < 1 || l > n)
                throw std::invalid_argument("not surjective onto [m]: letter " + std::to_string(l) +
                                            " exceeds the word length");
            seen[static_cast<std::size_t>(l)] = true;
            rank_ = std::max(rank_, l);
        }
        for (int l = 1; l <= rank_; ++l)
            if (!seen[static_cast<std::size_t>(l)])
                throw std::invalid_argument("not surjective onto [m]: letter " + std::to_string(l) + " missing below m = " +
                                            std::to_string(rank_));
    }

    PackedWord(std::initializer_list<int> word) : PackedWord(std::vector<int>(word)) {}

    explicit PackedWord(const Permutation& p) : PackedWord(p.word()) {}

    static PackedWord parse(std::string_view text) { return PackedWord(parse_word(text)); }

    int rank() const { return rank_; }

    bool is_permutation() const { return rank_ == size(); }

    Permutation to_permutation() const {
        if (!is_permutation()) throw std::invalid_argument("packed word " + to_string() + " has a repeated letter");
        return Permutation(word_);
    }

    PackedWord restrict(const PositionSet& s) const {
        check_subset(s);
        return PackedWord(dense_rank(subsequence(s)));
    }

    static PackedWord oplus(const PackedWord& a, const PackedWord& b) {
        std::vector<int> w = a.word_;
        w.reserve(a.word_.size() + b.word_.size());
        for (int l : b.word_) w.push_back(l + a.rank_);
        return PackedWord(std::move(w));
    }

    // Split after k whenever every letter of the prefix is below every letter
    // of the suffix.
    std::vector<PackedWord> decompose() const {
        const int n = size();
        std::vector<int> suffix_min(static_cast<std::size_t>(n + 1), rank_ + 1);
        for (int k = n - 1; k >= 0; --k)
            suffix_min[static_cast<std::size_t>(k)] = std::min(suffix_min[static_cast<std::size_t>(k + 1)], word_[static_cast<std::size_t>(k)]);
        std::vector<PackedWord> out;
        int start = 0;
        int offset = 0;
        int prefix_max = 0;
        for (int k = 1; k <= n; ++k) {
            prefix_max = std::max(prefix_max, word_[static_cast<std::size_t>(k - 1)]);
            if (prefix_max < suffix_min[static_cast<std::size_t>(k)]) {
                std::vector<int> block(word_.begin() + start, word_.begin() + k);
                for (int& l : block) l -= offset;
                out.emplace_back(std::move(block));
                start = k;
                offset = prefix_max;
            }
        }
        return out;
    }

    // All packed words of length n (ordered Bell many), lexicographic.
    static std::vector<PackedWord> enumerate(int n) {
        if (n < 0) throw std::invalid_argument("enumerate: negative size");
        std::vector<PackedWord> out;
        if (n == 0) {
            out.emplace_back();
            return out;
        }
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int m = 1; m <= n; ++m) {
            std::vector<int> count(static_cast<std::size_t>(m + 1), 0);
            int missing = m;
            fill(w, count, missing, 0, m, out);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static void fill(std::vector<int>& w, std::vector<int>& count, int& missing, int pos, int m, std::vector<PackedWord>& out) {
        const int n = static_cast<int>(w.size());
        if (pos == n) {
            if (missing == 0) out.emplace_back(w);
            return;
        }
        if (missing > n - pos) return;
        for (int l = 1; l <= m; ++l) {
            w[static_cast<std::size_t>(pos)] = l;
            if (count[static_cast<std::size_t>(l)]++ == 0) --missing;
            fill(w, count, missing, pos + 1, m, out);
            if (--count[static_cast<std::size_t>(l)] == 0) ++missing;
        }
    }

    int rank_ = 0;
};

} // namespace phc
