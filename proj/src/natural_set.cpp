#include "powsem/natural_set.hpp"

#include "powsem/checked.hpp"
#include "powsem/kernels.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace powsem {

namespace {

// Above this result span (in bits) the sumset falls back to enumeration.
constexpr std::uint64_t kBitsetSpanLimit = std::uint64_t{1} << 25;

std::uint64_t parse_number(std::string_view token) {
    std::uint64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("malformed number in set literal: '" +
                                    std::string(token) + "'");
    }
    return value;
}

} // namespace

NaturalSet::NaturalSet(std::vector<std::uint64_t> elements) : elems_(std::move(elements)) {
    if (elems_.empty()) throw std::invalid_argument("set must be nonempty");
    for (std::size_t i = 1; i < elems_.size(); ++i) {
        if (elems_[i] <= elems_[i - 1]) {
            throw std::invalid_argument("set elements must be strictly increasing");
        }
    }
}

NaturalSet from_sorted_unchecked(std::vector<std::uint64_t> elems) {
    return NaturalSet(std::move(elems), NaturalSet::unchecked_tag{});
}

NaturalSet NaturalSet::singleton(std::uint64_t x) {
    return from_sorted_unchecked({x});
}

NaturalSet NaturalSet::interval(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw std::invalid_argument("interval needs lo <= hi");
    std::vector<std::uint64_t> v;
    v.reserve(hi - lo + 1);
    for (std::uint64_t x = lo;; ++x) {
        v.push_back(x);
        if (x == hi) break;
    }
    return from_sorted_unchecked(std::move(v));
}

NaturalSet NaturalSet::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty set literal");
    std::vector<std::uint64_t> v;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view token = text.substr(pos, comma - pos);
        if (token.empty()) throw std::invalid_argument("empty token in set literal");
        const std::size_t dots = token.find("..");
        if (dots != std::string_view::npos) {
            const std::uint64_t lo = parse_number(token.substr(0, dots));
            const std::uint64_t hi = parse_number(token.substr(dots + 2));
            if (lo > hi) throw std::invalid_argument("interval token needs lo <= hi");
            for (std::uint64_t x = lo;; ++x) {
                v.push_back(x);
                if (x == hi) break;
            }
        } else {
            v.push_back(parse_number(token));
        }
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] <= v[i - 1]) {
            throw std::invalid_argument("set literal must be strictly ascending");
        }
    }
    return from_sorted_unchecked(std::move(v));
}

std::string NaturalSet::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(elems_[i]);
    }
    return s;
}

bool NaturalSet::contains(std::uint64_t x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::vector<std::uint64_t> NaturalSet::gap_set() const {
    std::vector<std::uint64_t> diffs;
    diffs.reserve(elems_.size());
    for (std::size_t i = 1; i < elems_.size(); ++i) {
        diffs.push_back(elems_[i] - elems_[i - 1]);
    }
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    return diffs;
}

std::uint64_t NaturalSet::gap() const noexcept {
    std::uint64_t g = 0;
    for (std::size_t i = 1; i < elems_.size(); ++i) {
        g = std::max(g, elems_[i] - elems_[i - 1]);
    }
    return g;
}

NaturalSet NaturalSet::translated(std::uint64_t m) const {
    checked_add(max(), m);
    std::vector<std::uint64_t> v;
    v.reserve(size());
    for (std::uint64_t x : elems_) v.push_back(x + m);
    return from_sorted_unchecked(std::move(v));
}

NaturalSet NaturalSet::reflected(std::uint64_t l) const {
    if (l < max()) {
        throw std::domain_error("cannot reflect about " + std::to_string(l) +
                                ": set reaches " + std::to_string(max()));
    }
    std::vector<std::uint64_t> v;
    v.reserve(size());
    for (auto it = elems_.rbegin(); it != elems_.rend(); ++it) v.push_back(l - *it);
    return from_sorted_unchecked(std::move(v));
}

NaturalSet NaturalSet::dilated(std::uint64_t l) const {
    if (l == 0) throw std::invalid_argument("dilation factor must be >= 1");
    NaturalSet acc = *this;
    for (std::uint64_t i = 1; i < l; ++i) acc = acc + *this;
    return acc;
}

NaturalSet NaturalSet::normalized() const {
    const std::uint64_t a = min();
    std::vector<std::uint64_t> v;
    v.reserve(size());
    for (std::uint64_t x : elems_) v.push_back(x - a);
    return from_sorted_unchecked(std::move(v));
}

namespace {

NaturalSet sumset_bitset(const NaturalSet& x, const NaturalSet& y, std::uint64_t alpha,
                         std::uint64_t span_bits) {
    // Shift the mask of the larger set once per element of the smaller one.
    const NaturalSet& base = (x.size() >= y.size()) ? x : y;
    const NaturalSet& loop = (x.size() >= y.size()) ? y : x;

    const std::uint64_t base_span = base.max() - base.min() + 1;
    const std::size_t base_words = static_cast<std::size_t>((base_span + 63) / 64);
    std::vector<std::uint64_t> base_bits(base_words, 0);
    for (std::uint64_t e : base.elements()) {
        const std::uint64_t off = e - base.min();
        base_bits[off >> 6] |= std::uint64_t{1} << (off & 63);
    }

    const std::size_t out_words = static_cast<std::size_t>((span_bits + 63) / 64) + 1;
    std::vector<std::uint64_t> out_bits(out_words, 0);

    const auto shift_or = kernels::active_shift_or();
    for (std::uint64_t e : loop.elements()) {
        shift_or(out_bits.data(), base_bits.data(), base_words, e - loop.min());
    }

    std::vector<std::uint64_t> result;
    result.reserve(std::min<std::uint64_t>(span_bits, x.size() * y.size()));
    for (std::size_t w = 0; w < out_words; ++w) {
        std::uint64_t word = out_bits[w];
        while (word) {
            const unsigned bit = static_cast<unsigned>(__builtin_ctzll(word));
            result.push_back(alpha + (static_cast<std::uint64_t>(w) << 6) + bit);
            word &= word - 1;
        }
    }
    return from_sorted_unchecked(std::move(result));
}

NaturalSet sumset_enumeration(const NaturalSet& x, const NaturalSet& y) {
    std::vector<std::uint64_t> all;
    all.reserve(x.size() * y.size());
    for (std::uint64_t a : x.elements()) {
        for (std::uint64_t b : y.elements()) all.push_back(a + b);
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return from_sorted_unchecked(std::move(all));
}

} // namespace

NaturalSet operator+(const NaturalSet& x, const NaturalSet& y) {
    const std::uint64_t beta = checked_add(x.max(), y.max());
    const std::uint64_t alpha = x.min() + y.min();
    const std::uint64_t span_bits = beta - alpha + 1;
    if (span_bits <= kBitsetSpanLimit) return sumset_bitset(x, y, alpha, span_bits);
    return sumset_enumeration(x, y);
}

bool canonical_less(const NaturalSet& a, const NaturalSet& b) {
    if (a.max() != b.max()) return a.max() < b.max();
    if (a.min() != b.min()) return a.min() < b.min();
    return a.elements() < b.elements();
}

} // namespace powsem
