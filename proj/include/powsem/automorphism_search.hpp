#ifndef POWSEM_AUTOMORPHISM_SEARCH_HPP
#define POWSEM_AUTOMORPHISM_SEARCH_HPP

#include "powsem/natural_set.hpp"
#include "powsem/numerical_semigroup.hpp"
#include "powsem/power_window.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace powsem {

// Partial or total assignment member -> member on a window carrier,
// injective where defined.
class CandidateMap {
public:
    explicit CandidateMap(const WindowCarrier& carrier);

    static CandidateMap identity(const WindowCarrier& carrier);
    // Images computed by fn; members whose image leaves the carrier stay
    // unassigned, or throw when require_total.
    static CandidateMap from_function(const WindowCarrier& carrier,
                                      const std::function<NaturalSet(const NaturalSet&)>& fn,
                                      bool require_total);
    static CandidateMap sigma_map(const WindowCarrier& carrier); // total or throws

    const WindowCarrier& carrier() const noexcept { return *carrier_; }
    void set(std::uint32_t from, std::uint32_t to); // enforces injectivity
    std::optional<std::uint32_t> image_index(std::uint32_t from) const;
    const NaturalSet* image(std::uint32_t from) const; // null when unassigned
    bool total() const;

private:
    const WindowCarrier* carrier_;
    std::vector<std::optional<std::uint32_t>> images_;
    std::vector<char> used_;
};

// "identity", "sigma", or "unclassified"; identity wins ties.
std::string classify_map(const CandidateMap& f);

// ---- additivity -----------------------------------------------------------

struct AdditivityViolation {
    std::uint32_t lhs, rhs, sum;     // carrier indices with lhs + rhs = sum
    NaturalSet expected;             // f(lhs) + f(rhs)
    NaturalSet actual;               // f(sum)
};

struct AdditivityReport {
    std::vector<AdditivityViolation> violations;
    std::uint64_t constraints_checked = 0;
    bool ok() const noexcept { return violations.empty(); }
};

// Recomputes f(X) + f(Y) as honest sumsets over the whole addition table;
// independent of any bookkeeping the search keeps.
AdditivityReport check_additivity(const CandidateMap& f);

// ---- measured parameters and the growth formula ---------------------------

struct MeasuredParams {
    std::uint64_t s, t; // min/max of the image of {k}, k the critical element
    std::uint64_t a, b; // min/max of the image of [[k, k+1]]
};

// Reads (s, t, a, b) off the images of {k} and [[k, k+1]]. Throws when the
// carrier misses them or f is undefined there.
MeasuredParams measure_params(const CandidateMap& f);

enum class GrowthStatus { pass, fail, not_applicable };

struct GrowthReport {
    GrowthStatus status = GrowthStatus::pass;
    std::uint64_t checked = 0;
    std::vector<std::string> witnesses;
};

// Checks k | s and k | t, then for every assigned X that
//   min(f(X)) = (a-s)(max(X)-min(X)) + (s/k) min(X)
//   max(f(X)) = (b-t)(max(X)-min(X)) + (t/k) min(X).
// Returns not_applicable when the critical element is 0.
GrowthReport verify_growth_formula(const CandidateMap& f, const MeasuredParams& p);

// ---- translation equivariance and the induced quotient map ----------------

struct EquivarianceWitness {
    std::uint64_t shift;
    std::uint32_t member;
};

struct EquivarianceReport {
    bool passed = true;
    std::uint64_t checked = 0;
    std::optional<EquivarianceWitness> witness;
};

// f(m + X) == m + f(X) for every member X with min(X) >= critical and every
// shift m >= 1 keeping m + X in the window. Non-reduced carriers only.
EquivarianceReport translation_equivariance_check(const CandidateMap& f);

// The map rep -> normalize(f(k + rep)) on every class whose canonical member
// k + rep lies in the carrier. Requires equivariance; throws
// IllDefinedQuotientError with a witness otherwise.
std::vector<std::pair<NaturalSet, NaturalSet>> induced_quotient_map(const CandidateMap& f);

// ---- search ----------------------------------------------------------------

enum class SearchMode { filtered, raw };

struct SearchConfig {
    SearchMode mode = SearchMode::filtered;
    // Pointwise restrictions applied to raw-mode domains. Filtered mode
    // verifies all four on its candidates regardless.
    bool filter_alpha_beta = false;
    bool filter_gap = false;
    bool filter_small_sets = false;
    bool filter_intervals = false;

    std::uint64_t max_carrier = WindowCarrier::kDefaultCap;
    std::uint64_t max_nodes = 10'000'000;
    std::uint64_t max_survivors = 10'000;

    static SearchConfig filtered();
    static SearchConfig raw();

    std::vector<std::string> filter_names() const;
    std::string mode_name() const;
};

struct SurvivorRecord {
    std::string classification; // "identity" | "sigma" | "unclassified"
    std::vector<std::pair<NaturalSet, NaturalSet>> table;
};

struct SearchReport {
    NumericalSemigroup semigroup;
    std::uint64_t bound = 0;
    bool reduced = false;
    std::string mode;
    std::vector<std::string> filters;
    std::vector<SurvivorRecord> survivors;
    std::uint64_t constraints_checked = 0;
    std::uint64_t nodes_explored = 0;
    std::uint64_t branches_rejected = 0;
    std::vector<std::string> rejection_witnesses; // first few, for diagnosis
    std::optional<std::string> note;

    bool has_survivor(const std::string& classification) const;
};

// Finds every bijection of the carrier compatible with the mode's candidate
// space and all in-window sum constraints.
//
// filtered: candidate space = the two globally coherent forms, identity and
//   the involution (the latter only where it maps the carrier onto itself);
//   each is verified against every filter predicate and the full addition
//   table. Window-local hybrids are excluded by construction, which is what
//   makes the survivor list match the classification at modest bounds.
// raw: exhaustive backtracking over all carrier bijections with eager
//   constraint propagation, domains cut only by the filters enabled in the
//   config. Survivors that are neither identity nor the involution are real
//   features of the truncated window; they are labeled "unclassified" and the
//   report never claims they extend beyond the bound.
SearchReport search_automorphisms(const WindowCarrier& carrier, const SearchConfig& config);

// Element-level search: bijections of S intersect [[k, bound]] preserving
// addition whenever the sum stays at or below the bound. S must be a
// discrete interval [[k, oo)) and bound >= 2k + 2.
SearchReport element_automorphism_search(const NumericalSemigroup& s, std::uint64_t bound);

// ---- the restriction obstruction -------------------------------------------

struct ObstructionWitness {
    std::uint64_t m;        // m in S, m+1 not in S, m <= critical-2
    NaturalSet set;         // {m, k, k+1}
    NaturalSet sigma_image; // {m, m+1, k+1}
    std::uint64_t missing;  // m+1, the element outside S
};

// For non-interval S: the witness showing the involution cannot extend from
// the tail to all of P(S). Empty for discrete intervals.
std::optional<ObstructionWitness> sigma_restriction_obstruction(const NumericalSemigroup& s);

// ---- property battery -------------------------------------------------------

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::uint64_t checked = 0;
    std::string witness; // empty when passed
};

PropertyResult check_alpha_beta_preserved(const CandidateMap& f);
PropertyResult check_gap_preserved(const CandidateMap& f);
PropertyResult check_small_sets_fixed(const CandidateMap& f);
PropertyResult check_intervals_fixed(const CandidateMap& f);
PropertyResult check_tail_window_closure(const CandidateMap& f);
PropertyResult check_translation_equivariance(const CandidateMap& f);
PropertyResult check_quotient_well_defined(const CandidateMap& f);

struct PropertySuiteReport {
    SearchReport search;
    std::vector<PropertyResult> properties;
    bool all_passed = true;
};

// Runs the search on the non-reduced window, then the full property battery
// on every survivor. Pass/fail is aggregated per property with the first
// witness kept.
PropertySuiteReport property_suite(const NumericalSemigroup& s, std::uint64_t bound,
                             const SearchConfig& config = SearchConfig::filtered());

} // namespace powsem

#endif
