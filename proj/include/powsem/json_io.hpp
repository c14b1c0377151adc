#ifndef POWSEM_JSON_IO_HPP
#define POWSEM_JSON_IO_HPP

#include "powsem/automorphism_search.hpp"
#include "powsem/natural_set.hpp"
#include "powsem/numerical_semigroup.hpp"
#include "powsem/power_window.hpp"

#include <json.hpp>

namespace powsem {

// Sets serialize as ascending integer arrays; a semigroup serializes as
// {"generators":[...],"monoid":bool} when built from generators and as
// {"gaps":[...],"contains_zero":bool} otherwise.
nlohmann::json to_json(const NaturalSet& x);
nlohmann::json to_json(const NumericalSemigroup& s);
nlohmann::json to_json(const WindowCarrier& w); // descriptor only; members stay on demand
nlohmann::json to_json(const MeasuredParams& p);
nlohmann::json to_json(const SearchReport& r);
nlohmann::json to_json(const ObstructionWitness& w);
nlohmann::json to_json(const PropertyResult& p);
nlohmann::json to_json(const PropertySuiteReport& r);

} // namespace powsem

#endif
