#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coefficient.hpp"
#include "core.hpp"
#include "species.hpp"

namespace phc {

// Masks J with |J| = |a| and b|_J = a, in lexicographic order.
template <Species S>
std::vector<std::uint64_t> occurrences(const S& b, const S& a) {
    std::vector<std::uint64_t> out;
    const int n = b.size();
    for (std::uint64_t m : subsets_of_size(n, a.size()))
        if (b.restrict(PositionSet::from_mask(n, m)) == a) out.push_back(m);
    return out;
}

// Number of subsets J of positions of b whose restriction is a.
template <Species S>
Coeff pattern_coefficient(const S& b, const S& a) {
    if (a.size() > b.size()) return 0;
    return static_cast<Coeff>(occurrences(b, a).size());
}

// Covers (I_1..I_k) of the positions of c with c|_{I_i} = factors[i].
template <Species S>
CoverStream enumerate_qss(const S& c, std::span<const S> factors) {
    std::vector<std::vector<std::uint64_t>> candidates;
    candidates.reserve(factors.size());
    for (const S& f : factors) candidates.push_back(occurrences(c, f));
    return CoverStream(c.size(), std::move(candidates));
}

template <Species S>
Coeff qss_coefficient(const S& c, std::span<const S> factors) {
    auto stream = enumerate_qss(c, factors);
    return static_cast<Coeff>(stream.count_remaining());
}

template <Species S>
Coeff qss_coefficient(const S& c, std::initializer_list<S> factors) {
    return qss_coefficient(c, std::span<const S>(factors.begin(), factors.size()));
}

// A finite integer combination of pattern functions pat_a. Zero
// coefficients are never stored; terms iterate in (size, word) order.
template <Species S>
class PatternExpr {
public:
    using species_type = S;

    PatternExpr() = default;

    static PatternExpr pat(const S& a, Coeff coeff = 1) {
        PatternExpr e;
        e.add(a, coeff);
        return e;
    }

    static PatternExpr unit() { return pat(S{}); }

    void add(const S& a, Coeff coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(a, coeff);
        if (!inserted) {
            it->second = checked_add(it->second, coeff);
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<S, Coeff>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Coeff coefficient(const S& a) const {
        auto it = terms_.find(a);
        return it == terms_.end() ? 0 : it->second;
    }

    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.size(); }

    // Value of the function at the object b.
    Coeff evaluate(const S& b) const {
        Coeff v = 0;
        for (const auto& [a, c] : terms_) v = checked_add(v, checked_mul(c, pattern_coefficient(b, a)));
        return v;
    }

    PatternExpr& operator+=(const PatternExpr& o) {
        for (const auto& [a, c] : o.terms_) add(a, c);
        return *this;
    }
    PatternExpr& operator-=(const PatternExpr& o) {
        for (const auto& [a, c] : o.terms_) add(a, checked_mul(c, -1));
        return *this;
    }
    PatternExpr& operator*=(Coeff k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [a, c] : terms_) c = checked_mul(c, k);
        return *this;
    }

    friend PatternExpr operator+(PatternExpr x, const PatternExpr& y) { return x += y; }
    friend PatternExpr operator-(PatternExpr x, const PatternExpr& y) { return x -= y; }
    friend PatternExpr operator*(Coeff k, PatternExpr x) { return x *= k; }
    friend PatternExpr operator-(PatternExpr x) { return x *= -1; }
    friend bool operator==(const PatternExpr&, const PatternExpr&) = default;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [a, c] : terms_) {
            if (!s.empty()) s += c < 0 ? " - " : " + ";
            else if (c < 0) s += "-";
            const Coeff mag = c < 0 ? -c : c;
            if (mag != 1) s += std::to_string(mag);
            s += "pat_" + (a.empty() ? std::string("{}") : a.to_string());
        }
        return s;
    }

private:
    std::map<S, Coeff> terms_;
};

// pat_a * pat_b as a combination: classes c with max(|a|,|b|) <= |c| <= |a|+|b|
// weighted by the number of quasi-shuffles of a and b giving c.
template <Species S>
PatternExpr<S> product(const S& a, const S& b) {
    if (a.empty()) return PatternExpr<S>::pat(b);
    if (b.empty()) return PatternExpr<S>::pat(a);
    PatternExpr<S> out;
    const std::array<S, 2> factors{a, b};
    for (int k = std::max(a.size(), b.size()); k <= a.size() + b.size(); ++k)
        for (const S& c : classes_of_size<S>(k)) out.add(c, qss_coefficient(c, std::span<const S>(factors)));
    return out;
}

template <Species S>
PatternExpr<S> product(const PatternExpr<S>& x, const PatternExpr<S>& y) {
    PatternExpr<S> out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            const Coeff k = checked_mul(ca, cb);
            const PatternExpr<S> ab = product(a, b);
            for (const auto& [c, q] : ab.terms()) out.add(c, checked_mul(k, q));
        }
    return out;
}

// pat_{f_1} * ... * pat_{f_k}; the empty product is the unit.
template <Species S>
PatternExpr<S> product_of_patterns(std::span<const S> factors) {
    PatternExpr<S> acc = PatternExpr<S>::unit();
    for (const S& f : factors) acc = product(acc, PatternExpr<S>::pat(f));
    return acc;
}

// Deconcatenations of the factorization a = a_1 + ... + a_k, from (empty, a)
// to (a, empty).
template <Species S>
std::vector<std::pair<S, S>> coproduct(const S& a) {
    const std::vector<S> factors = a.decompose();
    std::vector<std::pair<S, S>> out;
    out.reserve(factors.size() + 1);
    const std::span<const S> all(factors);
    for (std::size_t j = 0; j <= factors.size(); ++j)
        out.emplace_back(oplus_all<S>(all.first(j)), oplus_all<S>(all.subspan(j)));
    return out;
}

// Element of A(R) (x) A(R), keyed by pairs of classes.
template <Species S>
class TensorExpr {
public:
    void add(const S& left, const S& right, Coeff coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::pair{left, right}, coeff);
        if (!inserted) {
            it->second = checked_add(it->second, coeff);
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<std::pair<S, S>, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    friend bool operator==(const TensorExpr&, const TensorExpr&) = default;

private:
    std::map<std::pair<S, S>, Coeff> terms_;
};

template <Species S>
TensorExpr<S> coproduct(const PatternExpr<S>& x) {
    TensorExpr<S> out;
    for (const auto& [a, c] : x.terms())
        for (const auto& [l, r] : coproduct(a)) out.add(l, r, c);
    return out;
}

// Componentwise product (a (x) b)(c (x) d) = ac (x) bd, expanded.
template <Species S>
TensorExpr<S> product(const TensorExpr<S>& x, const TensorExpr<S>& y) {
    TensorExpr<S> out;
    for (const auto& [ab, c1] : x.terms())
        for (const auto& [cd, c2] : y.terms()) {
            const Coeff k = checked_mul(c1, c2);
            const PatternExpr<S> left = product(ab.first, cd.first);
            const PatternExpr<S> right = product(ab.second, cd.second);
            for (const auto& [l, cl] : left.terms())
                for (const auto& [r, cr] : right.terms()) out.add(l, r, checked_mul(k, checked_mul(cl, cr)));
        }
    return out;
}

// Evaluation at the empty object: the coefficient of pat_{}.
template <Species S>
Coeff counit(const PatternExpr<S>& x) {
    return x.coefficient(S{});
}

// A[inc]: A(PW) -> A(Per); keeps only terms indexed by permutations.
inline PatternExpr<Permutation> apply_inc(const PatternExpr<PackedWord>& x) {
    PatternExpr<Permutation> out;
    for (const auto& [w, c] : x.terms())
        if (w.is_permutation()) out.add(w.to_permutation(), c);
    return out;
}

inline PatternExpr<PackedWord> include_permutations(const PatternExpr<Permutation>& x) {
    PatternExpr<PackedWord> out;
    for (const auto& [p, c] : x.terms()) out.add(PackedWord(p), c);
    return out;
}

} // namespace phc
