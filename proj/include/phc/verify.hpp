#pragma once

#include <array>
#include <atomic>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "antipode.hpp"
#include "pattern_algebra.hpp"
#include "species.hpp"

namespace phc {

struct VerifyReport {
    std::string check;
    std::string species;
    std::size_t instances = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

// Calls task(i) for i in [0, count) on a pool of workers. Failures are
// gathered per index so the report does not depend on scheduling.
inline std::vector<std::string> run_indexed(std::size_t count, unsigned threads,
                                            const std::function<std::vector<std::string>(std::size_t)>& task) {
    std::vector<std::vector<std::string>> per_index(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                per_index[i] = task(i);
            } catch (const std::exception& e) {
                per_index[i] = {std::string("exception: ") + e.what()};
            }
        }
    };
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    std::vector<std::string> out;
    for (auto& f : per_index) out.insert(out.end(), f.begin(), f.end());
    return out;
}

template <Species S>
std::vector<S> classes_up_to(int max_size) {
    std::vector<S> out;
    for (int n = 0; n <= max_size; ++n) {
        const auto& c = classes_of_size<S>(n);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

namespace oracle {

inline Coeff factorial(int n) {
    Coeff f = 1;
    for (int i = 2; i <= n; ++i) f = checked_mul(f, i);
    return f;
}

// sum over m of the number of surjections [n] -> [m], via Stirling numbers of
// the second kind.
inline Coeff ordered_bell(int n) {
    std::vector<std::vector<Coeff>> s(static_cast<std::size_t>(n + 1), std::vector<Coeff>(static_cast<std::size_t>(n + 1), 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= i; ++k)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                checked_add(checked_mul(k, s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)]),
                            s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)]);
    Coeff total = 0;
    for (int m = 0; m <= n; ++m) total = checked_add(total, checked_mul(factorial(m), s[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)]));
    return total;
}

inline Coeff parking_count(int n) {
    Coeff c = 1;
    for (int i = 1; i < n; ++i) c = checked_mul(c, n + 1);
    return c;
}

template <Species S>
Coeff class_count(int n) {
    if constexpr (std::is_same_v<S, Permutation>) return factorial(n);
    else if constexpr (std::is_same_v<S, PackedWord>) return ordered_bell(n);
    else return parking_count(n);
}

} // namespace oracle

template <Species S>
VerifyReport check_counts(int max_size) {
    VerifyReport r{"counts", std::string(S::tag), 0, {}};
    for (int n = 0; n <= max_size; ++n) {
        ++r.instances;
        const auto got = static_cast<Coeff>(S::enumerate(n).size());
        const Coeff want = oracle::class_count<S>(n);
        if (got != want)
            r.failures.push_back("size " + std::to_string(n) + ": enumerated " + std::to_string(got) + ", expected " + std::to_string(want));
    }
    return r;
}

// Both antipode engines agree termwise; the interlacing result has uniform sign.
template <Species S>
VerifyReport check_agreement(int max_size, unsigned threads = 0) {
    const std::vector<S> objects = classes_up_to<S>(max_size);
    VerifyReport r{"agreement", std::string(S::tag), objects.size(), {}};
    r.failures = run_indexed(objects.size(), threads, [&](std::size_t i) {
        std::vector<std::string> f;
        const S& a = objects[i];
        const PatternExpr<S> t = antipode_takeuchi(a);
        const PatternExpr<S> c = antipode_interlacing(a);
        if (t != c) f.push_back(a.to_string() + ": takeuchi " + t.to_string() + " vs interlacing " + c.to_string());
        const Coeff sign = sign_of_length(a.decompose().size());
        for (const auto& [sigma, coeff] : c.terms())
            if ((coeff > 0) != (sign > 0)) f.push_back(a.to_string() + ": term " + sigma.to_string() + " has the wrong sign");
        return f;
    });
    return r;
}

template <Species S>
VerifyReport check_antipode_axiom(int max_size, AntipodeMethod method, unsigned threads = 0) {
    const std::vector<S> objects = classes_up_to<S>(max_size);
    VerifyReport r{"antipode-axiom", std::string(S::tag), objects.size(), {}};
    r.failures = run_indexed(objects.size(), threads, [&](std::size_t i) {
        std::vector<std::string> f;
        const S& a = objects[i];
        if (!verify_antipode_axiom(a, method))
            f.push_back(a.to_string() + ": residual " + antipode_axiom_residual(a, method).to_string());
        return f;
    });
    return r;
}

// For every QSS from the factors of every object: the stability set contains
// the all-ones composition, is the interval above the minimal stable
// composition, satisfies the mu_i characterization, and has the alternating
// sum predicted by interlacing.
template <Species S>
std::vector<std::string> filter_failures(const S& y, const Qss& q, std::span<const S> factors) {
    std::vector<std::string> f;
    const std::string where = y.to_string() + " " + q.to_string();
    const int n = static_cast<int>(factors.size());
    const StabilitySet set = stability_set(y, q, factors);
    if (!set.contains(Composition::ones(n))) f.push_back(where + ": all-ones composition missing");
    if (!set.is_upward_closed()) f.push_back(where + ": stability set not upward closed");
    const Composition beta = minimal_stable_composition(y, q, factors);
    const auto minimum = set.minimum();
    if (!minimum || *minimum != beta)
        f.push_back(where + ": minimum " + (minimum ? minimum->to_string() : std::string("none")) + " vs " + beta.to_string());
    for (const auto& alpha : compositions_of(n))
        if (set.contains(alpha) != composition_leq(beta, alpha)) f.push_back(where + ": not the interval above " + beta.to_string());
    const std::vector<int> separated = separated_indices(y, q);
    for (int i = 1; i < n; ++i) {
        std::vector<int> parts(static_cast<std::size_t>(n - 1), 1);
        parts[static_cast<std::size_t>(i - 1)] = 2;
        const bool stable = is_alpha_stable(y, q, factors, Composition(parts));
        const bool sep = std::binary_search(separated.begin(), separated.end(), i);
        if (stable != sep) f.push_back(where + ": mu_" + std::to_string(i) + " stability disagrees with separation");
    }
    if (!verify_alternating_sum(y, q, factors)) f.push_back(where + ": alternating sum mismatch");
    return f;
}

template <Species S>
VerifyReport check_filter(int max_size, unsigned threads = 0) {
    const std::vector<S> objects = classes_up_to<S>(max_size);
    VerifyReport r{"filter", std::string(S::tag), 0, {}};
    std::vector<std::size_t> qss_counts(objects.size(), 0);
    r.failures = run_indexed(objects.size(), threads, [&](std::size_t i) {
        std::vector<std::string> f;
        const std::vector<S> factors = objects[i].decompose();
        const std::span<const S> fs(factors);
        int lo = 0;
        for (const S& x : factors) lo = std::max(lo, x.size());
        for (int k = lo; k <= objects[i].size(); ++k) {
            for (const S& y : classes_of_size<S>(k)) {
                auto stream = enumerate_qss(y, fs);
                while (auto q = stream.next()) {
                    ++qss_counts[i];
                    auto g = filter_failures(y, *q, fs);
                    f.insert(f.end(), g.begin(), g.end());
                }
            }
        }
        return f;
    });
    for (auto c : qss_counts) r.instances += c;
    return r;
}

// Applying A[inc] to the packed-word antipode of a permutation gives the
// permutation antipode, for both engines.
inline VerifyReport check_morphism(int max_size, unsigned threads = 0) {
    const std::vector<Permutation> objects = classes_up_to<Permutation>(max_size);
    VerifyReport r{"morphism", "per", objects.size(), {}};
    r.failures = run_indexed(objects.size(), threads, [&](std::size_t i) {
        std::vector<std::string> f;
        const Permutation& a = objects[i];
        const PackedWord w(a);
        for (auto method : {AntipodeMethod::interlacing, AntipodeMethod::takeuchi}) {
            const auto lhs = apply_inc(antipode(w, method));
            const auto rhs = antipode(a, method);
            if (lhs != rhs)
                f.push_back(a.to_string() + (method == AntipodeMethod::takeuchi ? " takeuchi" : " interlacing") + ": " +
                            lhs.to_string() + " vs " + rhs.to_string());
        }
        return f;
    });
    return r;
}

// Values of pat_11, pat_12, pat_21 on the sixteen parking functions of size
// three, in the published column order.
struct TablePf3 {
    static constexpr std::array<const char*, 16> columns = {"111", "112", "121", "211", "113", "131", "311", "122",
                                                            "212", "221", "123", "132", "213", "312", "231", "321"};
    static constexpr std::array<const char*, 3> rows = {"11", "12", "21"};
    static constexpr std::array<std::array<int, 16>, 3> values = {{
        {3, 2, 2, 2, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
        {0, 1, 0, 0, 2, 1, 0, 2, 1, 0, 3, 2, 2, 1, 1, 0},
        {0, 0, 1, 1, 0, 1, 2, 0, 1, 2, 0, 1, 1, 2, 2, 3},
    }};
};

// Compares the 48 tabulated values; also requires pat_{} = 1 and pat_1 = 3 on
// every column and that the columns are exactly the parking functions of
// size three.
inline VerifyReport check_table_pf3() {
    VerifyReport r{"table-pf3", "pf", 0, {}};
    const ParkingFunction empty;
    const ParkingFunction one{1};
    std::vector<ParkingFunction> listed;
    for (std::size_t c = 0; c < TablePf3::columns.size(); ++c) {
        const auto p = ParkingFunction::parse(TablePf3::columns[c]);
        listed.push_back(p);
        for (std::size_t row = 0; row < TablePf3::rows.size(); ++row) {
            ++r.instances;
            const Coeff got = pattern_coefficient(p, ParkingFunction::parse(TablePf3::rows[row]));
            if (got != TablePf3::values[row][c])
                r.failures.push_back(std::string("pat_") + TablePf3::rows[row] + "(" + TablePf3::columns[c] + ") = " + std::to_string(got) +
                                     ", table says " + std::to_string(TablePf3::values[row][c]));
        }
        if (pattern_coefficient(p, empty) != 1) r.failures.push_back(std::string("pat_{}(") + TablePf3::columns[c] + ") != 1");
        if (pattern_coefficient(p, one) != 3) r.failures.push_back(std::string("pat_1(") + TablePf3::columns[c] + ") != 3");
    }
    std::sort(listed.begin(), listed.end());
    if (listed != ParkingFunction::enumerate(3)) r.failures.push_back("table columns are not the parking functions of size 3");
    return r;
}

} // namespace phc
