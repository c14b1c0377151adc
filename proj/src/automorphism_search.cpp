#include "powsem/automorphism_search.hpp"

#include "powsem/checked.hpp"
#include "powsem/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace powsem {

namespace {

bool is_all_naturals(const NumericalSemigroup& s) {
    return s.gaps().empty() && s.contains_zero();
}

std::string set_str(const NaturalSet& x) { return "{" + x.to_string() + "}"; }

} // namespace

// ---- CandidateMap -----------------------------------------------------------

CandidateMap::CandidateMap(const WindowCarrier& carrier)
    : carrier_(&carrier), images_(carrier.size()), used_(carrier.size(), 0) {}

CandidateMap CandidateMap::identity(const WindowCarrier& carrier) {
    CandidateMap f(carrier);
    for (std::uint32_t i = 0; i < carrier.size(); ++i) f.set(i, i);
    return f;
}

CandidateMap CandidateMap::from_function(const WindowCarrier& carrier,
                                         const std::function<NaturalSet(const NaturalSet&)>& fn,
                                         bool require_total) {
    CandidateMap f(carrier);
    for (std::uint32_t i = 0; i < carrier.size(); ++i) {
        const NaturalSet image = fn(carrier.member(i));
        const auto j = carrier.index_of(image);
        if (j) {
            f.set(i, *j);
        } else if (require_total) {
            throw std::domain_error("image of " + set_str(carrier.member(i)) + " is " +
                                    set_str(image) + ", which leaves the window");
        }
    }
    return f;
}

CandidateMap CandidateMap::sigma_map(const WindowCarrier& carrier) {
    return from_function(carrier, [](const NaturalSet& x) { return sigma(x); }, true);
}

void CandidateMap::set(std::uint32_t from, std::uint32_t to) {
    if (from >= images_.size() || to >= images_.size()) {
        throw std::out_of_range("member index outside the carrier");
    }
    if (images_[from]) {
        if (*images_[from] == to) return;
        used_[*images_[from]] = 0;
    }
    if (used_[to]) throw std::invalid_argument("image already taken; map must be injective");
    images_[from] = to;
    used_[to] = 1;
}

std::optional<std::uint32_t> CandidateMap::image_index(std::uint32_t from) const {
    return images_[from];
}

const NaturalSet* CandidateMap::image(std::uint32_t from) const {
    if (!images_[from]) return nullptr;
    return &carrier_->member(*images_[from]);
}

bool CandidateMap::total() const {
    for (const auto& v : images_) {
        if (!v) return false;
    }
    return true;
}

std::string classify_map(const CandidateMap& f) {
    const WindowCarrier& w = f.carrier();
    bool is_id = true, is_sigma = true;
    for (std::uint32_t i = 0; i < w.size(); ++i) {
        const NaturalSet* img = f.image(i);
        if (!img) return "unclassified"; // partial maps stay unclassified
        if (!(*img == w.member(i))) is_id = false;
        if (!(*img == sigma(w.member(i)))) is_sigma = false;
        if (!is_id && !is_sigma) return "unclassified";
    }
    if (is_id) return "identity";
    return is_sigma ? "sigma" : "unclassified";
}

// ---- additivity -------------------------------------------------------------

AdditivityReport check_additivity(const CandidateMap& f) {
    AdditivityReport report;
    const WindowCarrier& w = f.carrier();
    for (const SumTriple& t : w.addition_table()) {
        const NaturalSet* fa = f.image(t.lhs);
        const NaturalSet* fb = f.image(t.rhs);
        const NaturalSet* fc = f.image(t.sum);
        if (!fa || !fb || !fc) continue;
        ++report.constraints_checked;
        NaturalSet expected = *fa + *fb;
        if (!(expected == *fc)) {
            report.violations.push_back({t.lhs, t.rhs, t.sum, std::move(expected), *fc});
        }
    }
    return report;
}

// ---- measured parameters ----------------------------------------------------

MeasuredParams measure_params(const CandidateMap& f) {
    const WindowCarrier& w = f.carrier();
    const std::uint64_t k = w.semigroup().critical();
    const auto si = w.index_of(NaturalSet::singleton(k));
    const auto pi = w.index_of(NaturalSet::interval(k, checked_add(k, 1)));
    if (!si || !pi || !f.image(*si) || !f.image(*pi)) {
        throw std::domain_error(
            "carrier lacks the critical singleton or step pair (or the map is "
            "undefined there); raise the bound");
    }
    const NaturalSet& fs = *f.image(*si);
    const NaturalSet& fp = *f.image(*pi);
    return MeasuredParams{fs.min(), fs.max(), fp.min(), fp.max()};
}

GrowthReport verify_growth_formula(const CandidateMap& f, const MeasuredParams& p) {
    GrowthReport report;
    const WindowCarrier& w = f.carrier();
    const std::uint64_t k = w.semigroup().critical();
    if (k == 0) {
        report.status = GrowthStatus::not_applicable;
        return report;
    }
    if (p.s % k != 0 || p.t % k != 0) {
        report.status = GrowthStatus::fail;
        if (p.s % k != 0) {
            report.witnesses.push_back("k=" + std::to_string(k) + " does not divide s=" +
                                       std::to_string(p.s));
        }
        if (p.t % k != 0) {
            report.witnesses.push_back("k=" + std::to_string(k) + " does not divide t=" +
                                       std::to_string(p.t));
        }
        return report;
    }
    using Wide = __int128;
    const Wide sk = static_cast<Wide>(p.s / k);
    const Wide tk = static_cast<Wide>(p.t / k);
    const Wide da = static_cast<Wide>(p.a) - static_cast<Wide>(p.s);
    const Wide db = static_cast<Wide>(p.b) - static_cast<Wide>(p.t);
    for (std::uint32_t i = 0; i < w.size(); ++i) {
        const NaturalSet* img = f.image(i);
        if (!img) continue;
        const NaturalSet& x = w.member(i);
        ++report.checked;
        const Wide spread = static_cast<Wide>(x.max() - x.min());
        const Wide want_min = da * spread + sk * static_cast<Wide>(x.min());
        const Wide want_max = db * spread + tk * static_cast<Wide>(x.min());
        const bool ok_min = want_min == static_cast<Wide>(img->min());
        const bool ok_max = want_max == static_cast<Wide>(img->max());
        if (!ok_min || !ok_max) {
            report.status = GrowthStatus::fail;
            if (report.witnesses.size() < 8) {
                report.witnesses.push_back("X=" + set_str(x) + ": image extrema " +
                                           std::to_string(img->min()) + ".." +
                                           std::to_string(img->max()) +
                                           " disagree with the formula");
            }
        }
    }
    return report;
}

// ---- translation equivariance ------------------------------------------------

EquivarianceReport translation_equivariance_check(const CandidateMap& f) {
    const WindowCarrier& w = f.carrier();
    if (w.reduced()) {
        throw std::invalid_argument("translation equivariance needs a non-reduced window");
    }
    EquivarianceReport report;
    const std::uint64_t theta = w.semigroup().critical();
    const std::uint64_t bound = w.bound();
    for (std::uint32_t i = 0; i < w.size(); ++i) {
        const NaturalSet& x = w.member(i);
        if (x.min() < theta) continue; // shifts may leave S below the tail
        const NaturalSet* fx = f.image(i);
        if (!fx) continue;
        for (std::uint64_t m = 1; x.max() + m <= bound; ++m) {
            const auto yi = w.index_of(x.translated(m));
            if (!yi) break; // cannot happen on tail members; defensive for partial S
            const NaturalSet* fy = f.image(*yi);
            if (!fy) continue;
            ++report.checked;
            if (!(*fy == fx->translated(m))) {
                report.passed = false;
                report.witness = EquivarianceWitness{m, i};
                return report;
            }
        }
    }
    return report;
}

std::vector<std::pair<NaturalSet, NaturalSet>> induced_quotient_map(const CandidateMap& f) {
    const WindowCarrier& w = f.carrier();
    const EquivarianceReport eq = translation_equivariance_check(f);
    if (!eq.passed) {
        throw IllDefinedQuotientError(eq.witness->shift,
                                      set_str(w.member(eq.witness->member)));
    }
    const std::uint64_t k = w.semigroup().critical();
    std::vector<std::pair<NaturalSet, NaturalSet>> table;
    for (std::uint32_t i = 0; i < w.size(); ++i) {
        const NaturalSet& x = w.member(i);
        if (x.min() != k) continue; // canonical class members sit at the tail base
        const NaturalSet* fx = f.image(i);
        if (!fx) continue;
        table.emplace_back(x.normalized(), fx->normalized());
    }
    std::sort(table.begin(), table.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return table;
}

// ---- search: shared backtracking engine --------------------------------------

namespace {

// Exhaustive, deterministic DFS over injective total assignments var -> value
// with constraints value(a) (+) value(b) = value(c). Values and variables both
// index the same ground set; sum_of reports the value index of a sum or
// nothing when it leaves the structure.
struct Engine {
    std::uint32_t n = 0;
    std::function<std::optional<std::uint32_t>(std::uint32_t, std::uint32_t)> sum_of;
    std::function<std::string(std::uint32_t)> name;
    std::vector<SumTriple> constraints;
    std::uint64_t max_nodes = 0;
    std::uint64_t max_survivors = 0;

    std::vector<std::vector<std::uint32_t>> dom;
    std::vector<std::uint32_t> dsize;
    std::vector<char> processed;          // singleton handled (owner claimed)
    std::vector<std::int32_t> owner;      // value -> var or -1
    std::vector<std::vector<std::uint32_t>> occ;         // value -> vars seeing it
    std::vector<std::vector<std::uint32_t>> cons_of;     // var -> constraint ids

    struct TrailOp {
        enum : std::uint8_t { remove, own, process } tag;
        std::uint32_t x;
    };
    std::vector<TrailOp> trail;

    std::vector<std::uint32_t> queue;
    std::vector<char> in_queue;

    std::uint64_t constraints_checked = 0;
    std::uint64_t nodes = 0;
    std::uint64_t rejected = 0;
    std::vector<std::string> rejection_witnesses;
    std::vector<std::vector<std::uint32_t>> survivors;

    void init(std::vector<std::vector<std::uint32_t>> domains) {
        dom = std::move(domains);
        dsize.resize(n);
        for (std::uint32_t v = 0; v < n; ++v) dsize[v] = static_cast<std::uint32_t>(dom[v].size());
        processed.assign(n, 0);
        owner.assign(n, -1);
        occ.assign(n, {});
        for (std::uint32_t v = 0; v < n; ++v) {
            for (std::uint32_t val : dom[v]) occ[val].push_back(v);
        }
        cons_of.assign(n, {});
        for (std::uint32_t c = 0; c < constraints.size(); ++c) {
            const SumTriple& t = constraints[c];
            cons_of[t.lhs].push_back(c);
            if (t.rhs != t.lhs) cons_of[t.rhs].push_back(c);
            if (t.sum != t.lhs && t.sum != t.rhs) cons_of[t.sum].push_back(c);
        }
        in_queue.assign(constraints.size(), 0);
    }

    bool active_contains(std::uint32_t v, std::uint32_t val, std::uint32_t* pos = nullptr) const {
        for (std::uint32_t p = 0; p < dsize[v]; ++p) {
            if (dom[v][p] == val) {
                if (pos) *pos = p;
                return true;
            }
        }
        return false;
    }

    void remove_at(std::uint32_t v, std::uint32_t pos) {
        std::swap(dom[v][pos], dom[v][dsize[v] - 1]);
        --dsize[v];
        trail.push_back({TrailOp::remove, v});
    }

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            const TrailOp op = trail.back();
            trail.pop_back();
            switch (op.tag) {
                case TrailOp::remove: ++dsize[op.x]; break;
                case TrailOp::own: owner[op.x] = -1; break;
                case TrailOp::process: processed[op.x] = 0; break;
            }
        }
    }

    void push_cons(std::uint32_t v) {
        for (std::uint32_t c : cons_of[v]) {
            if (!in_queue[c]) {
                in_queue[c] = 1;
                queue.push_back(c);
            }
        }
    }

    // Claims the single remaining value of v and sweeps it from other domains.
    bool settle_singleton(std::uint32_t v) {
        std::vector<std::uint32_t> pending{v};
        while (!pending.empty()) {
            const std::uint32_t u = pending.back();
            pending.pop_back();
            if (processed[u]) continue;
            const std::uint32_t val = dom[u][0];
            if (owner[val] != -1 && owner[val] != static_cast<std::int32_t>(u)) return false;
            owner[val] = static_cast<std::int32_t>(u);
            trail.push_back({TrailOp::own, val});
            processed[u] = 1;
            trail.push_back({TrailOp::process, u});
            push_cons(u);
            for (std::uint32_t other : occ[val]) {
                if (other == u || processed[other]) continue;
                std::uint32_t pos;
                if (!active_contains(other, val, &pos)) continue;
                remove_at(other, pos);
                if (dsize[other] == 0) return false;
                if (dsize[other] == 1) pending.push_back(other);
                push_cons(other);
            }
        }
        return true;
    }

    // Shrinks dom[v] to exactly {val}; val must be active.
    bool assign(std::uint32_t v, std::uint32_t val) {
        for (std::uint32_t p = 0; p < dsize[v];) {
            if (dom[v][p] != val) {
                remove_at(v, p);
            } else {
                ++p;
            }
        }
        if (dsize[v] != 1) return false;
        return settle_singleton(v);
    }

    bool prune_keep(std::uint32_t v, std::uint32_t fixed, std::uint32_t target, bool fixed_left) {
        bool changed = false;
        for (std::uint32_t p = 0; p < dsize[v];) {
            const std::uint32_t cand = dom[v][p];
            const auto s = fixed_left ? sum_of(fixed, cand) : sum_of(cand, fixed);
            if (!s || *s != target) {
                remove_at(v, p);
                changed = true;
            } else {
                ++p;
            }
        }
        if (dsize[v] == 0) return false;
        if (changed) {
            push_cons(v);
            if (dsize[v] == 1 && !processed[v] && !settle_singleton(v)) return false;
        }
        return true;
    }

    bool propagate(const SumTriple** failed) {
        while (!queue.empty()) {
            const std::uint32_t c = queue.back();
            queue.pop_back();
            in_queue[c] = 0;
            const SumTriple& t = constraints[c];
            ++constraints_checked;
            const bool sa = dsize[t.lhs] == 1;
            const bool sb = dsize[t.rhs] == 1;
            const bool sc = dsize[t.sum] == 1;
            if (sa && sb) {
                const auto s = sum_of(dom[t.lhs][0], dom[t.rhs][0]);
                if (!s) { *failed = &t; return false; }
                if (sc) {
                    if (dom[t.sum][0] != *s) { *failed = &t; return false; }
                } else {
                    std::uint32_t pos;
                    if (!active_contains(t.sum, *s, &pos)) { *failed = &t; return false; }
                    if (!assign(t.sum, *s)) { *failed = &t; return false; }
                }
            } else if (sa && sc) {
                if (!prune_keep(t.rhs, dom[t.lhs][0], dom[t.sum][0], true)) {
                    *failed = &t;
                    return false;
                }
            } else if (sb && sc) {
                if (!prune_keep(t.lhs, dom[t.rhs][0], dom[t.sum][0], false)) {
                    *failed = &t;
                    return false;
                }
            }
        }
        return true;
    }

    void reset_queue() {
        for (std::uint32_t c : queue) in_queue[c] = 0;
        queue.clear();
    }

    void record_rejection(std::uint32_t var, std::uint32_t val, const SumTriple* t) {
        ++rejected;
        if (rejection_witnesses.size() >= 8 || !t) return;
        rejection_witnesses.push_back("f(" + name(var) + ")=" + name(val) +
                                      " contradicts " + name(t->lhs) + " + " + name(t->rhs) +
                                      " -> " + name(t->sum));
    }

    void search() {
        // Seed: claim pre-fixed singletons, then run every constraint once.
        for (std::uint32_t v = 0; v < n; ++v) {
            if (dsize[v] == 0) return;
            if (dsize[v] == 1 && !processed[v] && !settle_singleton(v)) return;
        }
        // Seed in reverse so the stack pops constraints in ascending order of
        // the summands' maxima (the table is built in canonical member order).
        for (std::uint32_t c = static_cast<std::uint32_t>(constraints.size()); c-- > 0;) {
            in_queue[c] = 1;
            queue.push_back(c);
        }
        const SumTriple* failed = nullptr;
        if (!propagate(&failed)) {
            reset_queue();
            return;
        }
        dfs();
    }

    void dfs() {
        std::uint32_t best = n;
        std::uint32_t best_size = 0;
        for (std::uint32_t v = 0; v < n; ++v) {
            if (dsize[v] > 1 && (best == n || dsize[v] < best_size)) {
                best = v;
                best_size = dsize[v];
            }
        }
        if (best == n) {
            if (survivors.size() >= max_survivors) {
                throw ResourceLimitError("survivor cap of " + std::to_string(max_survivors) +
                                         " exceeded; the window keeps too little structure");
            }
            std::vector<std::uint32_t> table(n);
            for (std::uint32_t v = 0; v < n; ++v) table[v] = dom[v][0];
            survivors.push_back(std::move(table));
            return;
        }
        std::vector<std::uint32_t> cands(dom[best].begin(), dom[best].begin() + dsize[best]);
        std::sort(cands.begin(), cands.end());
        for (std::uint32_t val : cands) {
            if (++nodes > max_nodes) {
                throw ResourceLimitError("search node budget of " + std::to_string(max_nodes) +
                                         " exceeded");
            }
            const std::size_t mark = trail.size();
            const SumTriple* failed = nullptr;
            bool ok = assign(best, val);
            if (ok) ok = propagate(&failed);
            if (ok) {
                dfs();
            } else {
                record_rejection(best, val, failed);
            }
            reset_queue();
            undo_to(mark);
        }
    }
};

std::vector<std::vector<std::uint32_t>> raw_domains(const WindowCarrier& w,
                                                    const SearchConfig& config) {
    const std::uint32_t n = static_cast<std::uint32_t>(w.size());
    std::vector<std::vector<std::uint32_t>> dom(n);

    // Bucket members by the enabled pointwise invariants.
    std::vector<std::vector<std::uint32_t>> buckets;
    std::vector<std::uint32_t> bucket_of(n);
    {
        std::vector<std::pair<std::vector<std::uint64_t>, std::uint32_t>> keys;
        keys.reserve(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            const NaturalSet& x = w.member(i);
            std::vector<std::uint64_t> key;
            if (config.filter_alpha_beta) {
                key.push_back(x.min());
                key.push_back(x.max());
            }
            if (config.filter_gap) key.push_back(x.gap());
            keys.emplace_back(std::move(key), i);
        }
        std::sort(keys.begin(), keys.end());
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (i == 0 || keys[i].first != keys[i - 1].first) buckets.emplace_back();
            buckets.back().push_back(keys[i].second);
            bucket_of[keys[i].second] = static_cast<std::uint32_t>(buckets.size() - 1);
        }
        for (auto& b : buckets) std::sort(b.begin(), b.end());
    }

    for (std::uint32_t i = 0; i < n; ++i) {
        const NaturalSet& x = w.member(i);
        const bool pinned = (config.filter_small_sets && x.size() <= 2) ||
                            (config.filter_intervals && x.is_interval());
        if (pinned) {
            dom[i] = {i};
        } else {
            dom[i] = buckets[bucket_of[i]];
        }
    }
    return dom;
}

SurvivorRecord make_record(const CandidateMap& f) {
    SurvivorRecord rec;
    rec.classification = classify_map(f);
    const WindowCarrier& w = f.carrier();
    rec.table.reserve(w.size());
    for (std::uint32_t i = 0; i < w.size(); ++i) {
        rec.table.emplace_back(w.member(i), *f.image(i));
    }
    return rec;
}

void attach_notes(SearchReport& report) {
    std::string note;
    if (report.reduced && !is_all_naturals(report.semigroup)) {
        note = "bounded window finding: survivors describe the window max(X) <= " +
               std::to_string(report.bound) + " only; nothing is claimed beyond it";
    }
    bool any_unclassified = false;
    for (const auto& s : report.survivors) {
        if (s.classification == "unclassified") any_unclassified = true;
    }
    if (any_unclassified) {
        if (!note.empty()) note += "; ";
        note += "unclassified survivors satisfy every in-window constraint but are "
                "not asserted to extend beyond the bound";
    }
    if (!note.empty()) report.note = note;
}

void run_filtered(const WindowCarrier& w, SearchReport& report) {
    // Candidate space: the two globally coherent forms. Each is verified
    // against the pointwise filter predicates and the complete addition
    // table; the involution also has to map the carrier onto itself.
    std::vector<CandidateMap> candidates;
    candidates.push_back(CandidateMap::identity(w));
    bool sigma_valid = true;
    for (std::uint32_t i = 0; i < w.size() && sigma_valid; ++i) {
        const NaturalSet image = sigma(w.member(i));
        if (!w.index_of(image)) {
            sigma_valid = false;
            ++report.branches_rejected;
            report.rejection_witnesses.push_back(
                "involution image of " + set_str(w.member(i)) + " is " + set_str(image) +
                ", which leaves the window");
        }
    }
    if (sigma_valid) {
        CandidateMap sg = CandidateMap::sigma_map(w);
        if (!(classify_map(sg) == "identity")) candidates.push_back(std::move(sg));
    }

    for (CandidateMap& f : candidates) {
        bool ok = f.total();
        for (std::uint32_t i = 0; ok && i < w.size(); ++i) {
            const NaturalSet& x = w.member(i);
            const NaturalSet& y = *f.image(i);
            if (x.min() != y.min() || x.max() != y.max() || x.gap() != y.gap()) ok = false;
            if ((x.size() <= 2 || x.is_interval()) && !(x == y)) ok = false;
        }
        if (!ok) {
            ++report.branches_rejected;
            report.rejection_witnesses.push_back("candidate form fails a filter predicate");
            continue;
        }
        const AdditivityReport add = check_additivity(f);
        report.constraints_checked += add.constraints_checked;
        if (!add.ok()) {
            ++report.branches_rejected;
            const auto& v = add.violations.front();
            report.rejection_witnesses.push_back(
                "candidate form breaks " + set_str(w.member(v.lhs)) + " + " +
                set_str(w.member(v.rhs)) + " -> " + set_str(w.member(v.sum)));
            continue;
        }
        report.survivors.push_back(make_record(f));
    }
}

void run_raw(const WindowCarrier& w, const SearchConfig& config, SearchReport& report) {
    Engine engine;
    engine.n = static_cast<std::uint32_t>(w.size());
    engine.sum_of = [&w](std::uint32_t i, std::uint32_t j) { return w.sum_index(i, j); };
    engine.name = [&w](std::uint32_t i) { return set_str(w.member(i)); };
    engine.constraints = w.addition_table();
    engine.max_nodes = config.max_nodes;
    engine.max_survivors = config.max_survivors;
    engine.init(raw_domains(w, config));
    engine.search();

    std::sort(engine.survivors.begin(), engine.survivors.end());
    for (const auto& table : engine.survivors) {
        CandidateMap f(w);
        for (std::uint32_t i = 0; i < engine.n; ++i) f.set(i, table[i]);
        // Post-hoc re-verification, independent of the propagation bookkeeping.
        const AdditivityReport add = check_additivity(f);
        report.constraints_checked += add.constraints_checked;
        if (!add.ok()) {
            throw std::logic_error("search produced a map violating additivity");
        }
        report.survivors.push_back(make_record(f));
    }
    report.constraints_checked += engine.constraints_checked;
    report.nodes_explored = engine.nodes;
    report.branches_rejected = engine.rejected;
    report.rejection_witnesses = std::move(engine.rejection_witnesses);
}

} // namespace

SearchConfig SearchConfig::filtered() {
    SearchConfig c;
    c.mode = SearchMode::filtered;
    c.filter_alpha_beta = c.filter_gap = c.filter_small_sets = c.filter_intervals = true;
    return c;
}

SearchConfig SearchConfig::raw() {
    SearchConfig c;
    c.mode = SearchMode::raw;
    return c;
}

std::vector<std::string> SearchConfig::filter_names() const {
    std::vector<std::string> names;
    if (mode == SearchMode::filtered) {
        return {"alpha-beta", "gap", "small-sets", "intervals", "global-form"};
    }
    if (filter_alpha_beta) names.push_back("alpha-beta");
    if (filter_gap) names.push_back("gap");
    if (filter_small_sets) names.push_back("small-sets");
    if (filter_intervals) names.push_back("intervals");
    return names;
}

std::string SearchConfig::mode_name() const {
    return mode == SearchMode::filtered ? "filtered" : "raw";
}

bool SearchReport::has_survivor(const std::string& classification) const {
    for (const auto& s : survivors) {
        if (s.classification == classification) return true;
    }
    return false;
}

SearchReport search_automorphisms(const WindowCarrier& carrier, const SearchConfig& config) {
    if (carrier.size() > config.max_carrier) {
        throw ResourceLimitError("carrier has " + std::to_string(carrier.size()) +
                                 " members, above the configured cap");
    }
    SearchReport report;
    report.semigroup = carrier.semigroup();
    report.bound = carrier.bound();
    report.reduced = carrier.reduced();
    report.mode = config.mode_name();
    report.filters = config.filter_names();

    if (config.mode == SearchMode::filtered) {
        run_filtered(carrier, report);
    } else {
        run_raw(carrier, config, report);
    }
    attach_notes(report);
    return report;
}

SearchReport element_automorphism_search(const NumericalSemigroup& s, std::uint64_t bound) {
    if (!s.is_interval_tail()) {
        throw std::invalid_argument("element search needs a discrete interval semigroup");
    }
    const std::uint64_t k = s.critical();
    if (bound < checked_add(checked_mul(2, k), 2)) {
        throw std::invalid_argument("element search needs bound >= 2k + 2");
    }
    const std::uint32_t n = static_cast<std::uint32_t>(bound - k + 1);

    Engine engine;
    engine.n = n;
    engine.sum_of = [k, bound](std::uint32_t i, std::uint32_t j) -> std::optional<std::uint32_t> {
        const std::uint64_t sum = 2 * k + i + j;
        if (sum > bound) return std::nullopt;
        return static_cast<std::uint32_t>(sum - k);
    };
    engine.name = [k](std::uint32_t i) { return std::to_string(k + i); };
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i; j < n; ++j) {
            if (2 * k + i + j > bound) break;
            engine.constraints.push_back({i, j, static_cast<std::uint32_t>(k + i + j)});
        }
    }
    SearchConfig defaults = SearchConfig::raw();
    engine.max_nodes = defaults.max_nodes;
    engine.max_survivors = defaults.max_survivors;
    std::vector<std::vector<std::uint32_t>> dom(n);
    for (std::uint32_t v = 0; v < n; ++v) {
        dom[v].resize(n);
        for (std::uint32_t x = 0; x < n; ++x) dom[v][x] = x;
    }
    engine.init(std::move(dom));
    engine.search();
    std::sort(engine.survivors.begin(), engine.survivors.end());

    SearchReport report;
    report.semigroup = s;
    report.bound = bound;
    report.reduced = false;
    report.mode = "element";
    report.constraints_checked = engine.constraints_checked;
    report.nodes_explored = engine.nodes;
    report.branches_rejected = engine.rejected;
    report.rejection_witnesses = std::move(engine.rejection_witnesses);
    for (const auto& table : engine.survivors) {
        SurvivorRecord rec;
        bool is_id = true;
        for (std::uint32_t v = 0; v < n; ++v) {
            if (table[v] != v) is_id = false;
            rec.table.emplace_back(NaturalSet::singleton(k + v), NaturalSet::singleton(k + table[v]));
        }
        rec.classification = is_id ? "identity" : "unclassified";
        report.survivors.push_back(std::move(rec));
    }
    return report;
}

std::optional<ObstructionWitness> sigma_restriction_obstruction(const NumericalSemigroup& s) {
    const auto m = s.interval_obstruction_witness();
    if (!m) return std::nullopt;
    const std::uint64_t k = s.critical();
    NaturalSet x({*m, k, checked_add(k, 1)});
    NaturalSet image = sigma(x); // {m, m+1, k+1}
    return ObstructionWitness{*m, std::move(x), std::move(image), *m + 1};
}

// ---- property battery ---------------------------------------------------------

namespace {

PropertyResult pointwise_check(const CandidateMap& f, std::string name,
                               const std::function<bool(const NaturalSet&, const NaturalSet&)>& ok,
                               const std::function<bool(const NaturalSet&)>& applies) {
    PropertyResult r;
    r.name = std::move(name);
    const WindowCarrier& w = f.carrier();
    for (std::uint32_t i = 0; i < w.size(); ++i) {
        const NaturalSet* img = f.image(i);
        if (!img) continue;
        const NaturalSet& x = w.member(i);
        if (!applies(x)) continue;
        ++r.checked;
        if (!ok(x, *img)) {
            r.passed = false;
            r.witness = "X=" + set_str(x) + " -> " + set_str(*img);
            return r;
        }
    }
    return r;
}

const auto kAlways = [](const NaturalSet&) { return true; };

} // namespace

PropertyResult check_alpha_beta_preserved(const CandidateMap& f) {
    return pointwise_check(
        f, "alpha-beta-preserved",
        [](const NaturalSet& x, const NaturalSet& y) {
            return x.min() == y.min() && x.max() == y.max();
        },
        kAlways);
}

PropertyResult check_gap_preserved(const CandidateMap& f) {
    return pointwise_check(
        f, "gap-preserved",
        [](const NaturalSet& x, const NaturalSet& y) { return x.gap() == y.gap(); }, kAlways);
}

PropertyResult check_small_sets_fixed(const CandidateMap& f) {
    return pointwise_check(
        f, "small-sets-fixed", [](const NaturalSet& x, const NaturalSet& y) { return x == y; },
        [](const NaturalSet& x) { return x.size() <= 2; });
}

PropertyResult check_intervals_fixed(const CandidateMap& f) {
    return pointwise_check(
        f, "intervals-fixed", [](const NaturalSet& x, const NaturalSet& y) { return x == y; },
        [](const NaturalSet& x) { return x.is_interval(); });
}

PropertyResult check_tail_window_closure(const CandidateMap& f) {
    const std::uint64_t theta = f.carrier().semigroup().critical();
    return pointwise_check(
        f, "tail-window-closure",
        [theta](const NaturalSet&, const NaturalSet& y) { return y.min() >= theta; },
        [theta](const NaturalSet& x) { return x.min() >= theta; });
}

PropertyResult check_translation_equivariance(const CandidateMap& f) {
    PropertyResult r;
    r.name = "translation-equivariance";
    const EquivarianceReport eq = translation_equivariance_check(f);
    r.checked = eq.checked;
    r.passed = eq.passed;
    if (!eq.passed) {
        r.witness = "m=" + std::to_string(eq.witness->shift) + ", X=" +
                    set_str(f.carrier().member(eq.witness->member));
    }
    return r;
}

PropertyResult check_quotient_well_defined(const CandidateMap& f) {
    PropertyResult r;
    r.name = "quotient-well-defined";
    std::vector<std::pair<NaturalSet, NaturalSet>> table;
    try {
        table = induced_quotient_map(f);
    } catch (const IllDefinedQuotientError& e) {
        r.passed = false;
        r.witness = e.what();
        return r;
    }
    // The induced map must be injective and additive where class sums stay
    // representable in the window.
    const WindowCarrier& w = f.carrier();
    const std::uint64_t k = w.semigroup().critical();
    const std::uint64_t rep_bound = w.bound() >= k ? w.bound() - k : 0;

    auto find = [&table](const NaturalSet& rep) -> const NaturalSet* {
        auto it = std::lower_bound(
            table.begin(), table.end(), rep,
            [](const auto& row, const NaturalSet& key) { return canonical_less(row.first, key); });
        if (it == table.end() || !(it->first == rep)) return nullptr;
        return &it->second;
    };

    for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = i + 1; j < table.size(); ++j) {
            if (table[i].second == table[j].second) {
                r.passed = false;
                r.witness = "classes of " + set_str(table[i].first) + " and " +
                            set_str(table[j].first) + " share an image";
                return r;
            }
        }
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = i; j < table.size(); ++j) {
            if (table[i].first.max() + table[j].first.max() > rep_bound) continue;
            ++r.checked;
            const NaturalSet sum_rep = table[i].first + table[j].first;
            const NaturalSet* image = find(sum_rep);
            if (!image || !(*image == table[i].second + table[j].second)) {
                r.passed = false;
                r.witness = "class sum " + set_str(table[i].first) + " + " +
                            set_str(table[j].first) + " is not respected";
                return r;
            }
        }
    }
    return r;
}

PropertySuiteReport property_suite(const NumericalSemigroup& s, std::uint64_t bound,
                             const SearchConfig& config) {
    PropertySuiteReport suite;
    const WindowCarrier w = enumerate_window(s, bound, false, config.max_carrier);
    suite.search = search_automorphisms(w, config);

    using Check = PropertyResult (*)(const CandidateMap&);
    constexpr Check checks[] = {
        &check_alpha_beta_preserved,  &check_gap_preserved,
        &check_small_sets_fixed,      &check_intervals_fixed,
        &check_tail_window_closure,   &check_translation_equivariance,
        &check_quotient_well_defined,
    };

    std::vector<CandidateMap> maps;
    for (const SurvivorRecord& rec : suite.search.survivors) {
        CandidateMap f(w);
        for (const auto& [src, dst] : rec.table) {
            f.set(*w.index_of(src), *w.index_of(dst));
        }
        maps.push_back(std::move(f));
    }

    for (Check check : checks) {
        PropertyResult agg;
        for (std::size_t i = 0; i < maps.size(); ++i) {
            PropertyResult r = check(maps[i]);
            agg.name = r.name;
            agg.checked += r.checked;
            if (!r.passed && agg.passed) {
                agg.passed = false;
                agg.witness = "survivor #" + std::to_string(i) + " (" +
                              suite.search.survivors[i].classification + "): " + r.witness;
            }
        }
        if (maps.empty()) {
            // keep the row visible even when nothing survived
            CandidateMap id = CandidateMap::identity(w);
            agg = check(id);
            agg.checked = 0;
        }
        suite.properties.push_back(std::move(agg));
        if (!suite.properties.back().passed) suite.all_passed = false;
    }
    return suite;
}

} // namespace powsem
