#ifndef POWSEM_NUMERICAL_SEMIGROUP_HPP
#define POWSEM_NUMERICAL_SEMIGROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace powsem {

// Co-finite additive subsemigroup S of the non-negative integers, stored by
// its finite complement. The positive excluded values live in gaps(); whether
// 0 belongs to S is a separate flag, so both semigroups and monoids fit.
class NumericalSemigroup {
public:
    // All of N; the value from_complement({}, true) would produce.
    NumericalSemigroup() = default;

    // S generated by positive integers under addition (sums of one or more
    // generators); with monoid=true, 0 is adjoined. Throws
    // InfiniteComplementError unless gcd(gens) == 1.
    static NumericalSemigroup from_generators(std::vector<std::uint64_t> gens, bool monoid);

    // S = N minus the given positive gaps (minus 0 when contains_zero is
    // false). Validates additive closure; throws ClosureError with the
    // violating pair otherwise.
    static NumericalSemigroup from_complement(std::vector<std::uint64_t> gaps,
                                              bool contains_zero);

    // The discrete interval [[k, oo)).
    static NumericalSemigroup tail_interval(std::uint64_t k);

    bool contains(std::uint64_t n) const;

    // Largest excluded integer; empty when S is all of N.
    std::optional<std::uint64_t> frobenius() const noexcept { return frobenius_; }
    // Least k with [[k, oo)) inside S; frobenius + 1, or 0 when S = N.
    std::uint64_t critical() const noexcept { return critical_; }
    std::uint64_t min_element() const noexcept { return min_element_; }
    bool contains_zero() const noexcept { return contains_zero_; }

    // Positive excluded values, ascending (0 is tracked by contains_zero).
    const std::vector<std::uint64_t>& gaps() const noexcept { return gaps_; }

    // Minimal generating set, present when built by from_generators.
    const std::optional<std::vector<std::uint64_t>>& generators() const noexcept {
        return generators_;
    }

    // True iff S = [[min_element, oo)).
    bool is_interval_tail() const noexcept { return min_element_ == critical_; }

    // Largest m with m in S, m+1 not in S and m <= critical-2; empty when S
    // is a discrete interval (no such obstruction exists).
    std::optional<std::uint64_t> interval_obstruction_witness() const;

    // Members of S in [[0, bound]], ascending.
    std::vector<std::uint64_t> elements_up_to(std::uint64_t bound) const;

    std::string describe() const;

    friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&);

private:
    void finalize();

    std::vector<std::uint64_t> gaps_;
    bool contains_zero_ = true;
    std::optional<std::uint64_t> frobenius_;
    std::uint64_t critical_ = 0;
    std::uint64_t min_element_ = 0;
    std::optional<std::vector<std::uint64_t>> generators_;
};

bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b);

} // namespace powsem

#endif
