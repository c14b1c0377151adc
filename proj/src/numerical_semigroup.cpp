#include "powsem/numerical_semigroup.hpp"

#include "powsem/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace powsem {

namespace {

// Hard stop for the representability sieve; desk-scale inputs stay far below.
constexpr std::uint64_t kSieveLimit = std::uint64_t{1} << 24;

} // namespace

void NumericalSemigroup::finalize() {
    if (!gaps_.empty()) {
        frobenius_ = gaps_.back();
    } else if (!contains_zero_) {
        frobenius_ = 0;
    } else {
        frobenius_.reset();
    }
    critical_ = frobenius_ ? *frobenius_ + 1 : 0;

    if (contains_zero_) {
        min_element_ = 0;
    } else {
        std::uint64_t m = 1;
        auto it = gaps_.begin();
        while (it != gaps_.end() && *it == m) {
            ++m;
            ++it;
        }
        min_element_ = m;
    }
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<std::uint64_t> gens,
                                                       bool monoid) {
    if (gens.empty()) throw std::invalid_argument("need at least one generator");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.front() == 0) throw std::invalid_argument("generators must be positive");

    std::uint64_t g = 0;
    for (std::uint64_t x : gens) g = std::gcd(g, x);
    if (g != 1) throw InfiniteComplementError(g);

    // Sieve representable sums of one or more generators until a run of
    // min(gens) consecutive members shows up; everything past it is in S.
    const std::uint64_t g0 = gens.front();
    std::vector<char> reach(1, 0); // index 0 unused as a sum of >= 1 generators
    std::uint64_t run = 0;
    std::uint64_t tail_start = 0;
    for (std::uint64_t n = 1;; ++n) {
        if (n >= kSieveLimit) {
            throw ResourceLimitError("sieve limit exceeded while computing the complement");
        }
        bool ok = false;
        for (std::uint64_t gen : gens) {
            if (gen > n) break;
            if (gen == n || reach[static_cast<std::size_t>(n - gen)]) {
                ok = true;
                break;
            }
        }
        reach.push_back(ok ? 1 : 0);
        run = ok ? run + 1 : 0;
        if (run == g0) {
            tail_start = n - g0 + 1;
            break;
        }
    }

    NumericalSemigroup s;
    s.contains_zero_ = monoid;
    for (std::uint64_t n = 1; n < tail_start; ++n) {
        if (!reach[static_cast<std::size_t>(n)]) s.gaps_.push_back(n);
    }
    s.finalize();

    // Minimal generating set: the nonzero members that are not a sum of two
    // nonzero members. Any member past twice the critical element splits off
    // a critical-element summand, so the scan is bounded.
    std::vector<std::uint64_t> minimal;
    const std::uint64_t scan_top = std::max<std::uint64_t>(2 * s.critical_, 2);
    for (std::uint64_t m = 1; m <= scan_top; ++m) {
        if (!s.contains(m)) continue;
        bool redundant = false;
        for (std::uint64_t a = 1; 2 * a <= m && !redundant; ++a) {
            if (s.contains(a) && s.contains(m - a)) redundant = true;
        }
        if (!redundant) minimal.push_back(m);
    }
    s.generators_ = std::move(minimal);
    return s;
}

NumericalSemigroup NumericalSemigroup::from_complement(std::vector<std::uint64_t> gaps,
                                                       bool contains_zero) {
    std::sort(gaps.begin(), gaps.end());
    gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
    if (!gaps.empty() && gaps.front() == 0) {
        throw std::invalid_argument("gaps must be positive; use contains_zero for 0");
    }

    NumericalSemigroup s;
    s.gaps_ = std::move(gaps);
    s.contains_zero_ = contains_zero;
    s.finalize();

    if (s.frobenius_) {
        // Sums landing above the largest gap are members automatically, so
        // closure only needs the pairs that stay at or below it.
        const std::uint64_t f = *s.frobenius_;
        std::vector<std::uint64_t> small;
        for (std::uint64_t n = s.min_element_; n <= f; ++n) {
            if (s.contains(n)) small.push_back(n);
        }
        for (std::size_t i = 0; i < small.size(); ++i) {
            for (std::size_t j = i; j < small.size(); ++j) {
                const std::uint64_t sum = small[i] + small[j];
                if (sum > f) break;
                if (!s.contains(sum)) throw ClosureError(small[i], small[j]);
            }
        }
    }
    return s;
}

NumericalSemigroup NumericalSemigroup::tail_interval(std::uint64_t k) {
    NumericalSemigroup s;
    s.contains_zero_ = (k == 0);
    for (std::uint64_t n = 1; n < k; ++n) s.gaps_.push_back(n);
    s.finalize();
    return s;
}

bool NumericalSemigroup::contains(std::uint64_t n) const {
    if (n == 0) return contains_zero_;
    if (n >= critical_) return true;
    return !std::binary_search(gaps_.begin(), gaps_.end(), n);
}

std::optional<std::uint64_t> NumericalSemigroup::interval_obstruction_witness() const {
    if (is_interval_tail()) return std::nullopt;
    // critical >= 2 here: a non-interval S excludes critical-1 >= min_element+1.
    for (std::uint64_t m = critical_ - 2;; --m) {
        if (contains(m) && !contains(m + 1)) return m;
        if (m == min_element_) break;
    }
    return std::nullopt; // unreachable: min_element is in S and critical-1 is not
}

std::vector<std::uint64_t> NumericalSemigroup::elements_up_to(std::uint64_t bound) const {
    std::vector<std::uint64_t> v;
    for (std::uint64_t n = 0; n <= bound; ++n) {
        if (contains(n)) v.push_back(n);
        if (n == bound) break;
    }
    return v;
}

std::string NumericalSemigroup::describe() const {
    std::string s;
    if (generators_) {
        s = "<";
        for (std::size_t i = 0; i < generators_->size(); ++i) {
            if (i) s += ',';
            s += std::to_string((*generators_)[i]);
        }
        s += ">";
        s += contains_zero_ ? " (monoid)" : " (semigroup)";
    } else if (gaps_.empty() && contains_zero_) {
        s = "N";
    } else {
        s = "N minus {";
        bool first = true;
        if (!contains_zero_) {
            s += "0";
            first = false;
        }
        for (std::uint64_t gp : gaps_) {
            if (!first) s += ',';
            s += std::to_string(gp);
            first = false;
        }
        s += "}";
    }
    return s;
}

bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gaps_ == b.gaps_ && a.contains_zero_ == b.contains_zero_;
}

} // namespace powsem
