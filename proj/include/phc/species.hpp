#pragma once

#include <concepts>
#include <map>
#include <memory>
#include <mutex>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "packed_word.hpp"
#include "parking.hpp"
#include "permutation.hpp"

namespace phc {

// An associative species with restrictions and non-commuting factorization,
// evaluated on canonical representatives.
template <class S>
concept Species = std::regular<S> && std::totally_ordered<S> && requires(const S& s, const PositionSet& p, int n) {
    { S::tag } -> std::convertible_to<std::string_view>;
    { s.size() } -> std::convertible_to<int>;
    { s.word() } -> std::convertible_to<const std::vector<int>&>;
    { s.restrict(p) } -> std::same_as<S>;
    { S::oplus(s, s) } -> std::same_as<S>;
    { s.decompose() } -> std::same_as<std::vector<S>>;
    { S::enumerate(n) } -> std::same_as<std::vector<S>>;
    { s.to_string() } -> std::convertible_to<std::string>;
};

static_assert(Species<Permutation>);
static_assert(Species<PackedWord>);
static_assert(Species<ParkingFunction>);

// Species for which the interlacing antipode formula is proven.
template <class S>
inline constexpr bool has_interlacing_antipode = false;
template <>
inline constexpr bool has_interlacing_antipode<Permutation> = true;
template <>
inline constexpr bool has_interlacing_antipode<PackedWord> = true;

template <Species S>
S oplus_all(std::span<const S> factors) {
    S acc{};
    for (const S& f : factors) acc = S::oplus(acc, f);
    return acc;
}

// Thread-safe memo of enumerate(n). References stay valid for the process
// lifetime.
template <Species S>
const std::vector<S>& classes_of_size(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const std::vector<S>>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<const std::vector<S>>(S::enumerate(n));
    return *slot;
}

} // namespace phc
