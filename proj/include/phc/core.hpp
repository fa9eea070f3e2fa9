#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace phc {

// A subset of the canonical ground set {1..n}, stored as a bitmask
// (position i lives in bit i-1). Ground sets are limited to 64 points.
class PositionSet {
public:
    static constexpr int max_ground = 64;

    PositionSet() = default;

    explicit PositionSet(int ground) : ground_(ground) { check_ground(ground); }

    static PositionSet from_mask(int ground, std::uint64_t mask) {
        PositionSet s(ground);
        if (mask & ~full_mask(ground)) throw std::invalid_argument("invalid subset: mask exceeds ground set");
        s.mask_ = mask;
        return s;
    }

    static PositionSet from_members(int ground, std::span<const int> members) {
        PositionSet s(ground);
        for (int m : members) {
            if (m < 1 || m > ground)
                throw std::invalid_argument("invalid subset: position " + std::to_string(m) + " outside 1.." +
                                            std::to_string(ground));
            const std::uint64_t bit = std::uint64_t{1} << (m - 1);
            if (s.mask_ & bit) throw std::invalid_argument("invalid subset: duplicate position " + std::to_string(m));
            s.mask_ |= bit;
        }
        return s;
    }

    static PositionSet from_members(int ground, std::initializer_list<int> members) {
        return from_members(ground, std::span<const int>(members.begin(), members.size()));
    }

    static PositionSet full(int ground) { return from_mask(ground, full_mask(ground)); }

    static constexpr std::uint64_t full_mask(int ground) {
        return ground >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ground) - 1;
    }

    int ground() const { return ground_; }
    std::uint64_t mask() const { return mask_; }
    int size() const { return std::popcount(mask_); }
    bool empty() const { return mask_ == 0; }
    bool contains(int position) const {
        return position >= 1 && position <= ground_ && ((mask_ >> (position - 1)) & 1U);
    }
    bool is_full() const { return mask_ == full_mask(ground_); }

    // Smallest / largest member; undefined on the empty set.
    int front() const { return std::countr_zero(mask_) + 1; }
    int back() const { return 64 - std::countl_zero(mask_); }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
        return out;
    }

    friend bool operator==(const PositionSet&, const PositionSet&) = default;

private:
    static void check_ground(int ground) {
        if (ground < 0 || ground > max_ground)
            throw std::length_error("ground set size " + std::to_string(ground) + " outside 0.." +
                                    std::to_string(max_ground));
    }

    std::uint64_t mask_ = 0;
    int ground_ = 0;
};

// All size-k subsets of {1..n} as masks, in lexicographic order of their
// sorted member lists.
inline std::vector<std::uint64_t> subsets_of_size(int n, int k) {
    std::vector<std::uint64_t> out;
    if (k < 0 || k > n) return out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::uint64_t m = 0;
        for (int i : idx) m |= std::uint64_t{1} << i;
        out.push_back(m);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

// A composition of n: positive parts summing to n. The empty composition is
// the unique composition of 0.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_) {
            if (p < 1) throw std::invalid_argument("composition part " + std::to_string(p) + " is not positive");
            n_ += p;
        }
    }

    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    static Composition ones(int n) { return Composition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    std::size_t length() const { return parts_.size(); }

    // f_1..f_l, the right end of every block; f_l = n.
    std::vector<int> block_ends() const {
        std::vector<int> ends;
        ends.reserve(parts_.size());
        int acc = 0;
        for (int p : parts_) ends.push_back(acc += p);
        return ends;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

namespace detail {
inline void compositions_rec(int remaining, std::vector<int>& prefix, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int first = 1; first <= remaining; ++first) {
        prefix.push_back(first);
        compositions_rec(remaining - first, prefix, out);
        prefix.pop_back();
    }
}
} // namespace detail

// Lexicographic in the parts, which is the same as descending lexicographic
// order of the characteristic vector of the cumulative-sum set.
inline std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("compositions_of: negative size");
    std::vector<Composition> out;
    std::vector<int> prefix;
    detail::compositions_rec(n, prefix, out);
    return out;
}

// {f_1, ..., f_{l-1}} as a subset of {1..n-1}.
inline PositionSet cumulative_sum_set(const Composition& alpha) {
    if (alpha.n() == 0) throw std::invalid_argument("cumulative sum set undefined for empty composition");
    std::vector<int> ends = alpha.block_ends();
    ends.pop_back();
    return PositionSet::from_members(alpha.n() - 1, ends);
}

inline Composition composition_from_splits(std::span<const int> splits, int n) {
    if (n < 0) throw std::invalid_argument("composition_from_splits: negative size");
    std::vector<bool> is_split(static_cast<std::size_t>(n + 1), false);
    for (int s : splits) {
        if (s < 1 || s > n - 1) throw std::invalid_argument("invalid split point " + std::to_string(s));
        is_split[static_cast<std::size_t>(s)] = true;
    }
    std::vector<int> parts;
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        if (i == n || is_split[static_cast<std::size_t>(i)]) {
            parts.push_back(i - start);
            start = i;
        }
    }
    return Composition(std::move(parts));
}

inline Composition composition_from_splits(const PositionSet& splits, int n) {
    const std::vector<int> members = splits.members();
    return composition_from_splits(std::span<const int>(members), n);
}

// alpha <= beta iff CS(alpha) is contained in CS(beta): alpha is obtained by
// merging consecutive parts of beta.
inline bool composition_leq(const Composition& alpha, const Composition& beta) {
    if (alpha.n() != beta.n()) throw std::invalid_argument("incomparable sizes");
    if (alpha.n() == 0) return true;
    const std::uint64_t a = cumulative_sum_set(alpha).mask();
    const std::uint64_t b = cumulative_sum_set(beta).mask();
    return (a & ~b) == 0;
}

// True iff some block of alpha contains both i and j (1-based, i < j).
inline bool merges(const Composition& alpha, int i, int j) {
    if (i >= j) throw std::invalid_argument("indices not ordered");
    if (i < 1 || j > alpha.n()) throw std::invalid_argument("index out of range");
    int lo = 0;
    for (int end : alpha.block_ends()) {
        if (lo < i && j <= end) return true;
        if (i <= end) return false;
        lo = end;
    }
    return false;
}

// An ordered tuple of subsets of {1..n} whose union is {1..n}.
class Qss {
public:
    Qss() = default;

    Qss(int ground, std::vector<PositionSet> blocks) : blocks_(std::move(blocks)), ground_(ground) {
        std::uint64_t u = 0;
        for (const auto& b : blocks_) {
            if (b.ground() != ground) throw std::invalid_argument("QSS block over a different ground set");
            u |= b.mask();
        }
        if (u != PositionSet::full_mask(ground)) throw std::invalid_argument("QSS blocks do not cover the ground set");
    }

    static Qss from_lists(int ground, std::initializer_list<std::initializer_list<int>> blocks) {
        std::vector<PositionSet> bs;
        for (auto b : blocks) bs.push_back(PositionSet::from_members(ground, b));
        return Qss(ground, std::move(bs));
    }

    static Qss from_masks(int ground, std::span<const std::uint64_t> masks) {
        std::vector<PositionSet> bs;
        bs.reserve(masks.size());
        for (auto m : masks) bs.push_back(PositionSet::from_mask(ground, m));
        return Qss(ground, std::move(bs));
    }

    int ground() const { return ground_; }
    std::size_t size() const { return blocks_.size(); }
    const std::vector<PositionSet>& blocks() const { return blocks_; }
    const PositionSet& operator[](std::size_t i) const { return blocks_[i]; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (i) s += ",";
            s += "{";
            bool first = true;
            for (int m : blocks_[i].members()) {
                if (!first) s += " ";
                s += std::to_string(m);
                first = false;
            }
            s += "}";
        }
        return s + ")";
    }

    friend bool operator==(const Qss&, const Qss&) = default;

private:
    std::vector<PositionSet> blocks_;
    int ground_ = 0;
};

// Lazy stream of covers (B_1, ..., B_k) of {1..n} where each B_i is drawn
// from its own candidate list. Tuples come out in lexicographic order of the
// candidate lists. Single consumer.
class CoverStream {
public:
    CoverStream(int n, std::vector<std::vector<std::uint64_t>> candidates)
        : n_(n), full_(PositionSet::full_mask(n)), candidates_(std::move(candidates)) {
        const std::size_t k = candidates_.size();
        suffix_union_.assign(k + 1, 0);
        for (std::size_t i = k; i-- > 0;) {
            std::uint64_t u = 0;
            for (auto m : candidates_[i]) u |= m;
            suffix_union_[i] = suffix_union_[i + 1] | u;
        }
        index_.assign(k, 0);
        prefix_.assign(k, 0);
        current_.assign(k, 0);
    }

    int ground() const { return n_; }

    // Next cover as raw masks, or nullptr once exhausted.
    const std::vector<std::uint64_t>* next_masks() {
        if (done_) return nullptr;
        const int k = static_cast<int>(candidates_.size());
        if (k == 0) {
            done_ = true;
            return full_ == 0 ? &current_ : nullptr;
        }
        int level;
        if (!started_) {
            started_ = true;
            level = 0;
            index_[0] = 0;
        } else {
            level = k - 1;
            ++index_[static_cast<std::size_t>(level)];
        }
        while (level >= 0) {
            const auto l = static_cast<std::size_t>(level);
            if (index_[l] >= candidates_[l].size()) {
                if (--level >= 0) ++index_[static_cast<std::size_t>(level)];
                continue;
            }
            const std::uint64_t pick = candidates_[l][index_[l]];
            const std::uint64_t cur = (level == 0 ? 0 : prefix_[l - 1]) | pick;
            if ((cur | suffix_union_[l + 1]) != full_) {
                ++index_[l];
                continue;
            }
            prefix_[l] = cur;
            current_[l] = pick;
            if (level == k - 1) return &current_;
            ++level;
            index_[static_cast<std::size_t>(level)] = 0;
        }
        done_ = true;
        return nullptr;
    }

    std::optional<Qss> next() {
        const auto* masks = next_masks();
        if (!masks) return std::nullopt;
        return Qss::from_masks(n_, *masks);
    }

    std::size_t count_remaining() {
        std::size_t c = 0;
        while (next_masks()) ++c;
        return c;
    }

private:
    int n_;
    std::uint64_t full_;
    std::vector<std::vector<std::uint64_t>> candidates_;
    std::vector<std::uint64_t> suffix_union_;
    std::vector<std::size_t> index_;
    std::vector<std::uint64_t> prefix_;
    std::vector<std::uint64_t> current_;
    bool started_ = false;
    bool done_ = false;
};

// Every tuple (I_1..I_k) with |I_i| = sizes[i] covering {1..n}.
inline CoverStream enumerate_covers(int n, std::span<const int> sizes) {
    if (n < 0) throw std::invalid_argument("enumerate_covers: negative ground size");
    std::vector<std::vector<std::uint64_t>> candidates;
    candidates.reserve(sizes.size());
    for (int s : sizes) candidates.push_back(subsets_of_size(n, s));
    return CoverStream(n, std::move(candidates));
}

inline CoverStream enumerate_covers(int n, std::initializer_list<int> sizes) {
    return enumerate_covers(n, std::span<const int>(sizes.begin(), sizes.size()));
}

} // namespace phc
