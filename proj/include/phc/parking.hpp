#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "word_object.hpp"

namespace phc {

enum class Step : char { Up = 'U', Down = 'D' };

// A lattice path of U and D steps that never goes below its starting height
// and ends at it.
class DyckPath {
public:
    DyckPath() = default;

    explicit DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
        int height = 0;
        for (std::size_t i = 0; i < steps_.size(); ++i) {
            height += steps_[i] == Step::Up ? 1 : -1;
            if (height < 0) throw std::invalid_argument("not a Dyck path: prefix of length " + std::to_string(i + 1) + " dips below the diagonal");
        }
        if (height != 0) throw std::invalid_argument("not a Dyck path: unequal numbers of U and D steps");
    }

    static DyckPath parse(std::string_view text) {
        std::vector<Step> steps;
        for (char c : text) {
            if (c == 'U') steps.push_back(Step::Up);
            else if (c == 'D') steps.push_back(Step::Down);
            else throw std::invalid_argument("not a Dyck path: unexpected step '" + std::string(1, c) + "'");
        }
        return DyckPath(std::move(steps));
    }

    const std::vector<Step>& steps() const { return steps_; }
    int semilength() const { return static_cast<int>(steps_.size() / 2); }

    // For every step index, the index of its tunnel partner: an up step is
    // paired with the first later step that returns the path to the height
    // the up step started from.
    std::vector<std::size_t> tunnels() const {
        std::vector<std::size_t> partner(steps_.size());
        std::vector<std::size_t> open;
        for (std::size_t i = 0; i < steps_.size(); ++i) {
            if (steps_[i] == Step::Up) {
                open.push_back(i);
            } else {
                partner[i] = open.back();
                partner[open.back()] = i;
                open.pop_back();
            }
        }
        return partner;
    }

    std::string to_string() const {
        std::string s;
        for (Step st : steps_) s += static_cast<char>(st);
        return s;
    }

    friend bool operator==(const DyckPath&, const DyckPath&) = default;

private:
    std::vector<Step> steps_;
};

// A Dyck path whose up steps carry the labels 1..n, increasing along every
// maximal run of consecutive up steps. Labels are ordered naturally.
class LabelledDyckPath {
public:
    LabelledDyckPath() = default;

    LabelledDyckPath(DyckPath path, std::vector<int> labels) : path_(std::move(path)), labels_(std::move(labels)) {
        const int n = path_.semilength();
        if (static_cast<int>(labels_.size()) != n)
            throw std::invalid_argument("labelling has " + std::to_string(labels_.size()) + " labels for " + std::to_string(n) + " up steps");
        std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
        for (int l : labels_) {
            if (l < 1 || l > n || seen[static_cast<std::size_t>(l)])
                throw std::invalid_argument("labels are not a bijection onto the up steps");
            seen[static_cast<std::size_t>(l)] = true;
        }
        std::size_t u = 0;
        bool previous_up = false;
        for (Step st : path_.steps()) {
            if (st == Step::Up) {
                if (previous_up && labels_[u - 1] > labels_[u])
                    throw std::invalid_argument("increasing-run violation: label " + std::to_string(labels_[u]) + " follows " +
                                                std::to_string(labels_[u - 1]) + " on an up run");
                ++u;
            }
            previous_up = st == Step::Up;
        }
    }

    // Debug format "UUDDUD|1,2,3".
    static LabelledDyckPath parse(std::string_view text) {
        const auto bar = text.find('|');
        if (bar == std::string_view::npos) throw std::invalid_argument("labelled Dyck path needs 'steps|labels'");
        std::vector<int> labels = parse_word(text.substr(bar + 1));
        return LabelledDyckPath(DyckPath::parse(text.substr(0, bar)), std::move(labels));
    }

    const DyckPath& path() const { return path_; }
    const std::vector<int>& labels() const { return labels_; }
    int size() const { return path_.semilength(); }

    // Column (1-based vertical line) of every label, indexed by label.
    std::vector<int> columns() const {
        std::vector<int> col(labels_.size() + 1, 0);
        int downs = 0;
        std::size_t u = 0;
        for (Step st : path_.steps()) {
            if (st == Step::Up) col[static_cast<std::size_t>(labels_[u++])] = downs + 1;
            else ++downs;
        }
        return col;
    }

    std::string to_string() const {
        std::string s = path_.to_string() + "|";
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(labels_[i]);
        }
        return s;
    }

    friend bool operator==(const LabelledDyckPath&, const LabelledDyckPath&) = default;

private:
    DyckPath path_;
    std::vector<int> labels_;
};

class ParkingFunction;
ParkingFunction pf_from_labelled_dyck(const LabelledDyckPath& path);
LabelledDyckPath labelled_dyck_from_pf(const ParkingFunction& p);

// A parking function p_1...p_n: its sorted rearrangement satisfies
// a_(i) <= i. Canonical representative of a labelled Dyck path class.
class ParkingFunction : public WordObject<ParkingFunction> {
public:
    static constexpr std::string_view tag = "pf";

    ParkingFunction() = default;

    explicit ParkingFunction(std::vector<int> word) : WordObject(std::move(word)) {
        std::vector<int> sorted = word_;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] < 1)
                throw std::invalid_argument("not a parking function: letter " + std::to_string(sorted[i]) + " below 1");
            if (sorted[i] > static_cast<int>(i) + 1)
                throw std::invalid_argument("not a parking function: sorted letter " + std::to_string(i + 1) + " is " +
                                            std::to_string(sorted[i]) + " > " + std::to_string(i + 1));
        }
    }

    ParkingFunction(std::initializer_list<int> word) : ParkingFunction(std::vector<int>(word)) {}

    static ParkingFunction parse(std::string_view text) { return ParkingFunction(parse_word(text)); }

    ParkingFunction restrict(const PositionSet& s) const;

    static ParkingFunction oplus(const ParkingFunction& a, const ParkingFunction& b) {
        std::vector<int> w = a.word_;
        w.reserve(a.word_.size() + b.word_.size());
        for (int l : b.word_) w.push_back(l + a.size());
        return ParkingFunction(std::move(w));
    }

    // Split after k whenever the cars preferring spots <= k are exactly
    // cars 1..k.
    std::vector<ParkingFunction> decompose() const {
        const int n = size();
        std::vector<ParkingFunction> out;
        int start = 0;
        int prefix_max = 0;
        for (int k = 1; k <= n; ++k) {
            prefix_max = std::max(prefix_max, word_[static_cast<std::size_t>(k - 1)]);
            if (prefix_max > k) continue;
            bool split = true;
            for (int j = k; j < n && split; ++j) split = word_[static_cast<std::size_t>(j)] > k;
            if (!split) continue;
            std::vector<int> block(word_.begin() + start, word_.begin() + k);
            for (int& l : block) l -= start;
            out.emplace_back(std::move(block));
            start = k;
        }
        return out;
    }

    // All (n+1)^(n-1) parking functions of length n, lexicographic.
    static std::vector<ParkingFunction> enumerate(int n) {
        if (n < 0) throw std::invalid_argument("enumerate: negative size");
        std::vector<ParkingFunction> out;
        std::vector<int> w(static_cast<std::size_t>(n), 1);
        std::vector<int> count(static_cast<std::size_t>(n + 2), 0);
        fill(w, count, 0, out);
        return out;
    }

private:
    // Parking condition in counting form: #{letters >= k} <= n-k+1.
    static void fill(std::vector<int>& w, std::vector<int>& count, int pos, std::vector<ParkingFunction>& out) {
        const int n = static_cast<int>(w.size());
        if (pos == n) {
            int at_least = 0;
            for (int k = n; k >= 1; --k) {
                at_least += count[static_cast<std::size_t>(k)];
                if (at_least > n - k + 1) return;
            }
            out.push_back(ParkingFunction(w));
            return;
        }
        for (int l = 1; l <= n; ++l) {
            w[static_cast<std::size_t>(pos)] = l;
            ++count[static_cast<std::size_t>(l)];
            fill(w, count, pos + 1, out);
            --count[static_cast<std::size_t>(l)];
        }
    }
};

// Step one groups labels by the column of their up step; step two records,
// for each label, the index of its group.
inline ParkingFunction pf_from_labelled_dyck(const LabelledDyckPath& path) {
    const std::vector<int> col = path.columns();
    return ParkingFunction(std::vector<int>(col.begin() + 1, col.end()));
}

inline LabelledDyckPath labelled_dyck_from_pf(const ParkingFunction& p) {
    const int n = p.size();
    std::vector<Step> steps;
    std::vector<int> labels;
    steps.reserve(static_cast<std::size_t>(2 * n));
    for (int column = 1; column <= n; ++column) {
        for (int j = 1; j <= n; ++j) {
            if (p.letter(j) == column) {
                steps.push_back(Step::Up);
                labels.push_back(j);
            }
        }
        steps.push_back(Step::Down);
    }
    return LabelledDyckPath(DyckPath(std::move(steps)), std::move(labels));
}

// Keep the tunnels whose up step carries a label in s, sort labels inside
// every merged up run and standardize them to 1..|s|.
inline LabelledDyckPath restrict_labelled_dyck(const LabelledDyckPath& path, const PositionSet& s) {
    if (s.ground() != path.size()) throw std::invalid_argument("invalid subset: ground set size mismatch");
    const auto& steps = path.path().steps();
    const std::vector<std::size_t> partner = path.path().tunnels();
    std::vector<bool> keep(steps.size(), false);
    std::size_t u = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] != Step::Up) continue;
        if (s.contains(path.labels()[u++])) keep[i] = keep[partner[i]] = true;
    }
    std::vector<int> rank(static_cast<std::size_t>(path.size() + 1), 0);
    int r = 0;
    for (int m : s.members()) rank[static_cast<std::size_t>(m)] = ++r;

    std::vector<Step> kept;
    std::vector<int> labels;
    u = 0;
    std::size_t run_start = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] == Step::Up) {
            const int label = path.labels()[u++];
            if (!keep[i]) continue;
            if (kept.empty() || kept.back() != Step::Up) run_start = labels.size();
            kept.push_back(Step::Up);
            labels.push_back(rank[static_cast<std::size_t>(label)]);
            std::sort(labels.begin() + static_cast<std::ptrdiff_t>(run_start), labels.end());
        } else if (keep[i]) {
            kept.push_back(Step::Down);
        }
    }
    return LabelledDyckPath(DyckPath(std::move(kept)), std::move(labels));
}

inline ParkingFunction ParkingFunction::restrict(const PositionSet& s) const {
    check_subset(s);
    return pf_from_labelled_dyck(restrict_labelled_dyck(labelled_dyck_from_pf(*this), s));
}

} // namespace phc
