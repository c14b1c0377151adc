#include "powsem/power_window.hpp"

#include "powsem/checked.hpp"
#include "powsem/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace powsem {

NaturalSet sigma(const NaturalSet& x) {
    return x.reflected(checked_add(x.min(), x.max()));
}

bool equivalent(const NaturalSet& x, const NaturalSet& y) {
    return x.normalized() == y.normalized();
}

EquivClassRep::EquivClassRep(NaturalSet r) : rep(std::move(r)) {
    if (rep.min() != 0) throw std::invalid_argument("class representative must contain 0");
}

EquivClassRep phi(const NaturalSet& x) {
    return EquivClassRep(x.normalized());
}

NaturalSet phi_inv(const EquivClassRep& rep, std::uint64_t k) {
    return rep.rep.translated(k);
}

WindowCarrier enumerate_window(const NumericalSemigroup& s, std::uint64_t bound, bool reduced,
                               std::uint64_t cap) {
    if (bound < s.min_element()) {
        throw std::invalid_argument("bound " + std::to_string(bound) +
                                    " is below the least member " +
                                    std::to_string(s.min_element()));
    }
    if (reduced && !s.contains_zero()) {
        throw std::invalid_argument("reduced window needs 0 in the semigroup");
    }
    // Everything past the critical element is a member, so the member count
    // can be bounded before walking [0, bound].
    if (bound >= s.critical() && bound - s.critical() + 1 >= 63) {
        throw ResourceLimitError("window would exceed the carrier cap");
    }

    const std::vector<std::uint64_t> elems = s.elements_up_to(bound);
    const std::size_t n = elems.size();
    const std::size_t free_bits = reduced ? n - 1 : n;
    if (free_bits >= 63) throw ResourceLimitError("window would exceed the carrier cap");
    const std::uint64_t count =
        reduced ? (std::uint64_t{1} << free_bits) : (std::uint64_t{1} << free_bits) - 1;
    if (count > cap) {
        throw ResourceLimitError("window has " + std::to_string(count) +
                                 " members, above the cap of " + std::to_string(cap));
    }

    WindowCarrier w;
    w.semigroup_ = s;
    w.bound_ = bound;
    w.reduced_ = reduced;
    w.members_.reserve(static_cast<std::size_t>(count));

    // In the reduced case elems[0] == 0 and every member keeps that bit set.
    const std::size_t first_free = reduced ? 1 : 0;
    const std::uint64_t mask_end = std::uint64_t{1} << free_bits;
    for (std::uint64_t mask = reduced ? 0 : 1; mask < mask_end; ++mask) {
        std::vector<std::uint64_t> v;
        v.reserve(static_cast<std::size_t>(__builtin_popcountll(mask)) + first_free);
        if (reduced) v.push_back(0);
        for (std::size_t b = 0; b < free_bits; ++b) {
            if (mask & (std::uint64_t{1} << b)) v.push_back(elems[first_free + b]);
        }
        w.members_.push_back(from_sorted_unchecked(std::move(v)));
        if (mask == mask_end - 1) break;
    }
    std::sort(w.members_.begin(), w.members_.end(), canonical_less);
    return w;
}

std::optional<std::uint32_t> WindowCarrier::index_of(const NaturalSet& x) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), x, canonical_less);
    if (it == members_.end() || !(*it == x)) return std::nullopt;
    return static_cast<std::uint32_t>(it - members_.begin());
}

const std::vector<SumTriple>& WindowCarrier::addition_table() const {
    std::call_once(table_->once, [this] {
        auto& cache = *table_;
        const std::uint32_t n = static_cast<std::uint32_t>(members_.size());
        for (std::uint32_t i = 0; i < n; ++i) {
            const std::uint64_t bi = members_[i].max();
            if (bi > bound_) break;
            for (std::uint32_t j = i; j < n; ++j) {
                const std::uint64_t bj = members_[j].max();
                if (bi + bj > bound_) break; // members are sorted by max
                const NaturalSet sum = members_[i] + members_[j];
                const auto k = index_of(sum);
                if (!k) {
                    throw std::logic_error("window is not closed under in-bound addition");
                }
                cache.triples.push_back({i, j, *k});
                cache.lookup.emplace((std::uint64_t{i} << 32) | j, *k);
            }
        }
    });
    return table_->triples;
}

std::optional<std::uint32_t> WindowCarrier::sum_index(std::uint32_t i, std::uint32_t j) const {
    addition_table();
    if (i > j) std::swap(i, j);
    const auto it = table_->lookup.find((std::uint64_t{i} << 32) | j);
    if (it == table_->lookup.end()) return std::nullopt;
    return it->second;
}

} // namespace powsem
