#ifndef POWSEM_POWER_WINDOW_HPP
#define POWSEM_POWER_WINDOW_HPP

#include "powsem/natural_set.hpp"
#include "powsem/numerical_semigroup.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

namespace powsem {

// The involution X -> max(X) - X + min(X). Preserves min, max and gap; on
// sets containing 0 it is the reduced form X -> max(X) - X.
NaturalSet sigma(const NaturalSet& x);

// Translation equivalence: Y is an integer shift of X.
bool equivalent(const NaturalSet& x, const NaturalSet& y);

// Representative of a translation class: the unique member with min = 0.
struct EquivClassRep {
    explicit EquivClassRep(NaturalSet r);
    NaturalSet rep;

    friend bool operator==(const EquivClassRep&, const EquivClassRep&) = default;
};

EquivClassRep phi(const NaturalSet& x);                          // class of X -> X - min(X)
NaturalSet phi_inv(const EquivClassRep& rep, std::uint64_t k);   // canonical member k + rep

// One in-window sum: member[lhs] + member[rhs] == member[sum], lhs <= rhs.
struct SumTriple {
    std::uint32_t lhs, rhs, sum;
};

// All X in P(S) with max(X) <= bound (and 0 in X when reduced), in canonical
// order: ascending (max, min, lexicographic elements). Immutable once built;
// the addition table is materialized on first use.
class WindowCarrier {
public:
    static constexpr std::uint64_t kDefaultCap = 1'000'000;

    WindowCarrier(const WindowCarrier&) = delete;
    WindowCarrier& operator=(const WindowCarrier&) = delete;
    WindowCarrier(WindowCarrier&&) = default;
    WindowCarrier& operator=(WindowCarrier&&) = default;

    const NumericalSemigroup& semigroup() const noexcept { return semigroup_; }
    std::uint64_t bound() const noexcept { return bound_; }
    bool reduced() const noexcept { return reduced_; }

    std::size_t size() const noexcept { return members_.size(); }
    const NaturalSet& member(std::size_t i) const { return members_[i]; }
    const std::vector<NaturalSet>& members() const noexcept { return members_; }

    std::optional<std::uint32_t> index_of(const NaturalSet& x) const;

    // Every (lhs <= rhs) pair whose sum stays in the window.
    const std::vector<SumTriple>& addition_table() const;
    std::optional<std::uint32_t> sum_index(std::uint32_t i, std::uint32_t j) const;

private:
    friend WindowCarrier enumerate_window(const NumericalSemigroup&, std::uint64_t, bool,
                                          std::uint64_t);
    WindowCarrier() = default;

    NumericalSemigroup semigroup_;
    std::uint64_t bound_ = 0;
    bool reduced_ = false;
    std::vector<NaturalSet> members_;

    struct TableCache {
        std::once_flag once;
        std::vector<SumTriple> triples;
        std::unordered_map<std::uint64_t, std::uint32_t> lookup;
    };
    std::unique_ptr<TableCache> table_ = std::make_unique<TableCache>();
};

// Enumerates the window. Preconditions: bound >= min_element(S); 0 in S when
// reduced. Throws ResourceLimitError when the member count would exceed cap.
WindowCarrier enumerate_window(const NumericalSemigroup& s, std::uint64_t bound, bool reduced,
                               std::uint64_t cap = WindowCarrier::kDefaultCap);

} // namespace powsem

#endif
