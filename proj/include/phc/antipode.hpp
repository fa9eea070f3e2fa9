#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "coefficient.hpp"
#include "core.hpp"
#include "pattern_algebra.hpp"
#include "species.hpp"

namespace phc {

enum class AntipodeMethod { interlacing, takeuchi };

// Opt-in for evaluating the interlacing count on species where it is not
// known to give the antipode.
enum class Experimental { off, on };

namespace detail {

// A and B disjoint and every position of A before every position of B.
inline bool before_in_position(std::uint64_t a, std::uint64_t b) {
    if (a & b) return false;
    if (a == 0 || b == 0) return true;
    return (63 - std::countl_zero(a)) < std::countr_zero(b);
}

// A and B disjoint and every letter on A strictly below every letter on B.
// Equal letters are incomparable.
template <Species S>
bool before_in_value(const S& y, std::uint64_t a, std::uint64_t b) {
    if (a & b) return false;
    if (a == 0 || b == 0) return true;
    int max_a = 0;
    for (std::uint64_t m = a; m; m &= m - 1) max_a = std::max(max_a, y.word()[static_cast<std::size_t>(std::countr_zero(m))]);
    for (std::uint64_t m = b; m; m &= m - 1)
        if (y.word()[static_cast<std::size_t>(std::countr_zero(m))] <= max_a) return false;
    return true;
}

template <Species S>
void require_interlacing_species(Experimental flag) {
    if (!has_interlacing_antipode<S> && flag == Experimental::off)
        throw std::domain_error("cancellation-free formula unproven for this species");
}

template <Species S>
bool interlacing_masks(const S& y, std::span<const std::uint64_t> blocks) {
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
        if (before_in_position(blocks[i], blocks[i + 1]) && before_in_value(y, blocks[i], blocks[i + 1])) return false;
    return true;
}

} // namespace detail

template <Species S>
bool is_qss(const S& y, const Qss& q, std::span<const S> factors) {
    if (q.ground() != y.size() || q.size() != factors.size()) return false;
    for (std::size_t i = 0; i < q.size(); ++i)
        if (y.restrict(q[i]) != factors[i]) return false;
    return true;
}

template <Species S>
void require_qss(const S& y, const Qss& q, std::span<const S> factors) {
    if (!is_qss(y, q, factors)) throw std::invalid_argument("not a QSS of " + y.to_string() + " from the given factors");
}

// False iff some consecutive pair of blocks is separated in both the
// position order and the value order.
template <Species S>
bool is_interlacing(const S& y, const Qss& q, Experimental flag = Experimental::off) {
    detail::require_interlacing_species<S>(flag);
    if (q.ground() != y.size()) throw std::invalid_argument("not a QSS: ground set size differs from the object");
    std::vector<std::uint64_t> masks;
    for (const auto& b : q.blocks()) masks.push_back(b.mask());
    return detail::interlacing_masks(y, std::span<const std::uint64_t>(masks));
}

template <Species S>
bool is_interlacing(const S& y, const Qss& q, std::span<const S> factors, Experimental flag = Experimental::off) {
    require_qss(y, q, factors);
    return is_interlacing(y, q, flag);
}

// Number of interlacing QSS of y from the factors.
template <Species S>
Coeff interlacing_coefficient(const S& y, std::span<const S> factors, Experimental flag = Experimental::off) {
    detail::require_interlacing_species<S>(flag);
    auto stream = enumerate_qss(y, factors);
    Coeff count = 0;
    while (const auto* masks = stream.next_masks())
        if (detail::interlacing_masks(y, std::span<const std::uint64_t>(*masks))) ++count;
    return count;
}

template <Species S>
Coeff interlacing_coefficient(const S& y, std::initializer_list<S> factors, Experimental flag = Experimental::off) {
    return interlacing_coefficient(y, std::span<const S>(factors.begin(), factors.size()), flag);
}

// The QSS stays a QSS after merging blocks along alpha, and merged blocks with
// isomorphic factors come in position order.
template <Species S>
bool is_alpha_stable(const S& y, const Qss& q, std::span<const S> factors, const Composition& alpha) {
    if (q.size() != factors.size() || static_cast<std::size_t>(alpha.n()) != factors.size())
        throw std::invalid_argument("length mismatch between QSS, factors and composition");
    require_qss(y, q, factors);
    std::size_t lo = 0;
    for (int end : alpha.block_ends()) {
        const auto hi = static_cast<std::size_t>(end);
        std::uint64_t merged = 0;
        for (std::size_t i = lo; i < hi; ++i) merged |= q[i].mask();
        const S merged_factor = oplus_all<S>(factors.subspan(lo, hi - lo));
        if (y.restrict(PositionSet::from_mask(y.size(), merged)) != merged_factor) return false;
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = i + 1; j < hi; ++j)
                if (factors[i] == factors[j] && !detail::before_in_position(q[i].mask(), q[j].mask())) return false;
        lo = hi;
    }
    return true;
}

// The compositions alpha of n for which a QSS is alpha-stable.
class StabilitySet {
public:
    StabilitySet(int n, std::vector<Composition> members) : n_(n), members_(std::move(members)) {}

    int n() const { return n_; }
    const std::vector<Composition>& members() const { return members_; }
    bool contains(const Composition& alpha) const {
        return std::find(members_.begin(), members_.end(), alpha) != members_.end();
    }

    bool is_upward_closed() const {
        for (const auto& alpha : members_)
            for (const auto& beta : compositions_of(n_))
                if (composition_leq(alpha, beta) && !contains(beta)) return false;
        return true;
    }

    // The unique minimal element, if there is exactly one.
    std::optional<Composition> minimum() const {
        std::optional<Composition> found;
        for (const auto& alpha : members_) {
            const bool minimal = std::none_of(members_.begin(), members_.end(), [&](const Composition& b) {
                return b != alpha && composition_leq(b, alpha);
            });
            if (!minimal) continue;
            if (found) return std::nullopt;
            found = alpha;
        }
        return found;
    }

    // Sum of (-1)^length over the members.
    Coeff alternating_sum() const {
        Coeff s = 0;
        for (const auto& alpha : members_) s += sign_of_length(alpha.length());
        return s;
    }

    friend bool operator==(const StabilitySet&, const StabilitySet&) = default;

private:
    int n_;
    std::vector<Composition> members_;
};

template <Species S>
StabilitySet stability_set(const S& y, const Qss& q, std::span<const S> factors) {
    require_qss(y, q, factors);
    const int n = static_cast<int>(factors.size());
    std::vector<Composition> members;
    for (const auto& alpha : compositions_of(n))
        if (is_alpha_stable(y, q, factors, alpha)) members.push_back(alpha);
    return StabilitySet(n, std::move(members));
}

// Indices i whose blocks I_i, I_{i+1} are separated in both orders.
template <Species S>
std::vector<int> separated_indices(const S& y, const Qss& q) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < q.size(); ++i)
        if (detail::before_in_position(q[i].mask(), q[i + 1].mask()) && detail::before_in_value(y, q[i].mask(), q[i + 1].mask()))
            out.push_back(static_cast<int>(i) + 1);
    return out;
}

// The composition that merges exactly the separated consecutive pairs, i.e.
// whose split points are the complement of the separated indices.
template <Species S>
Composition minimal_stable_composition(const S& y, const Qss& q, std::span<const S> factors) {
    detail::require_interlacing_species<S>(Experimental::off);
    require_qss(y, q, factors);
    const int n = static_cast<int>(factors.size());
    const std::vector<int> merged = separated_indices(y, q);
    std::vector<int> splits;
    for (int i = 1; i < n; ++i)
        if (!std::binary_search(merged.begin(), merged.end(), i)) splits.push_back(i);
    return composition_from_splits(std::span<const int>(splits), n);
}

// Signed sum over compositions alpha of the factorization of
// pat_{x^alpha_1} * ... * pat_{x^alpha_l}.
template <Species S>
PatternExpr<S> antipode_takeuchi(const S& a) {
    const std::vector<S> factors = a.decompose();
    const std::span<const S> all(factors);
    const int n = static_cast<int>(factors.size());
    PatternExpr<S> result;
    for (const auto& alpha : compositions_of(n)) {
        std::vector<S> merged;
        std::size_t lo = 0;
        for (int end : alpha.block_ends()) {
            merged.push_back(oplus_all<S>(all.subspan(lo, static_cast<std::size_t>(end) - lo)));
            lo = static_cast<std::size_t>(end);
        }
        PatternExpr<S> term = product_of_patterns<S>(std::span<const S>(merged));
        term *= sign_of_length(alpha.length());
        result += term;
    }
    return result;
}

// (-1)^n times the number of interlacing QSS of each candidate class from the
// n factors of a. Every contribution carries the same sign.
template <Species S>
PatternExpr<S> antipode_interlacing(const S& a, Experimental flag = Experimental::off) {
    detail::require_interlacing_species<S>(flag);
    const std::vector<S> factors = a.decompose();
    const std::span<const S> all(factors);
    const Coeff sign = sign_of_length(factors.size());
    int lo = 0;
    for (const S& f : factors) lo = std::max(lo, f.size());
    PatternExpr<S> result;
    for (int k = lo; k <= a.size(); ++k)
        for (const S& sigma : classes_of_size<S>(k))
            if (const Coeff c = interlacing_coefficient(sigma, all, flag); c != 0) result.add(sigma, sign * c);
    return result;
}

template <Species S>
PatternExpr<S> antipode(const S& a, AntipodeMethod method, Experimental flag = Experimental::off) {
    return method == AntipodeMethod::takeuchi ? antipode_takeuchi(a) : antipode_interlacing(a, flag);
}

template <Species S>
PatternExpr<S> antipode(const PatternExpr<S>& x, AntipodeMethod method, Experimental flag = Experimental::off) {
    PatternExpr<S> out;
    for (const auto& [a, c] : x.terms()) {
        PatternExpr<S> t = antipode(a, method, flag);
        t *= c;
        out += t;
    }
    return out;
}

// sum over Delta(pat_a) = sum b (x) c of S(pat_b) pat_c, which must equal
// counit(pat_a) pat_{}.
template <Species S>
PatternExpr<S> antipode_axiom_residual(const S& a, AntipodeMethod method) {
    PatternExpr<S> sum;
    for (const auto& [b, c] : coproduct(a)) sum += product(antipode(b, method), PatternExpr<S>::pat(c));
    return sum;
}

template <Species S>
bool verify_antipode_axiom(const S& a, AntipodeMethod method) {
    const Coeff eps = a.empty() ? 1 : 0;
    return antipode_axiom_residual(a, method) == PatternExpr<S>::pat(S{}, eps);
}

// The alternating sum over the stability set is (-1)^n for an interlacing QSS
// and 0 otherwise.
template <Species S>
bool verify_alternating_sum(const S& y, const Qss& q, std::span<const S> factors) {
    detail::require_interlacing_species<S>(Experimental::off);
    const StabilitySet set = stability_set(y, q, factors);
    const Coeff expected = is_interlacing(y, q) ? sign_of_length(factors.size()) : 0;
    return set.alternating_sum() == expected;
}

} // namespace phc
