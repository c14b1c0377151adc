#ifndef POWSEM_NATURAL_SET_HPP
#define POWSEM_NATURAL_SET_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace powsem {

// Finite nonempty set of non-negative integers, stored as a strictly
// increasing sequence. Values are immutable after construction; every
// operation returns a fresh set.
class NaturalSet {
public:
    // Validates: nonempty and strictly increasing.
    explicit NaturalSet(std::vector<std::uint64_t> elements);

    static NaturalSet singleton(std::uint64_t x);
    static NaturalSet interval(std::uint64_t lo, std::uint64_t hi);

    // Text form: comma-separated ascending decimals ("0,5,8,10"); a token
    // "i..j" expands to the interval [[i,j]].
    static NaturalSet parse(std::string_view text);
    std::string to_string() const;

    const std::vector<std::uint64_t>& elements() const noexcept { return elems_; }
    std::size_t size() const noexcept { return elems_.size(); }
    std::uint64_t min() const noexcept { return elems_.front(); }   // alpha
    std::uint64_t max() const noexcept { return elems_.back(); }    // beta
    bool contains(std::uint64_t x) const;

    // True iff the set is the full interval [[min, max]].
    bool is_interval() const noexcept { return max() - min() + 1 == size(); }

    // Distinct differences between consecutive elements, ascending.
    std::vector<std::uint64_t> gap_set() const;
    // Largest consecutive difference; 0 for singletons.
    std::uint64_t gap() const noexcept;

    NaturalSet translated(std::uint64_t m) const;            // m + X
    NaturalSet reflected(std::uint64_t l) const;             // l - X, needs l >= max
    NaturalSet dilated(std::uint64_t l) const;               // l-fold sumset, l >= 1
    NaturalSet normalized() const;                           // X - min(X)

    friend bool operator==(const NaturalSet&, const NaturalSet&) = default;

private:
    struct unchecked_tag {};
    NaturalSet(std::vector<std::uint64_t> elements, unchecked_tag)
        : elems_(std::move(elements)) {}

    std::vector<std::uint64_t> elems_;

    friend NaturalSet operator+(const NaturalSet& x, const NaturalSet& y);
    friend NaturalSet from_sorted_unchecked(std::vector<std::uint64_t> elems);
};

// Sumset {x + y}. Uses the word-parallel shifted-OR kernel when the result
// span is modest, pairwise enumeration otherwise. Overflow throws.
NaturalSet operator+(const NaturalSet& x, const NaturalSet& y);

// Order used everywhere a deterministic listing is needed:
// ascending (max, min, lexicographic elements).
bool canonical_less(const NaturalSet& a, const NaturalSet& b);

// Internal fast path for callers that already hold a valid sequence.
NaturalSet from_sorted_unchecked(std::vector<std::uint64_t> elems);

} // namespace powsem

#endif
