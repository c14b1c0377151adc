// powsem: sumset arithmetic and automorphism searches for power semigroups
// over numerical semigroups.
//
// Exit codes: 0 success, 1 domain error (bad values, caps, failed verify),
// 2 usage error.

#include "powsem/automorphism_search.hpp"
#include "powsem/errors.hpp"
#include "powsem/json_io.hpp"
#include "powsem/kernels.hpp"
#include "powsem/natural_set.hpp"
#include "powsem/numerical_semigroup.hpp"
#include "powsem/power_window.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using powsem::NaturalSet;
using powsem::NumericalSemigroup;
using nlohmann::json;

struct SemigroupArgs {
    std::string gens;
    std::string gaps;
    bool monoid = false;
    bool contains_zero = false;
    bool gaps_given = false;

    void attach(CLI::App* cmd) {
        auto* g = cmd->add_option("--gens", gens, "generators, e.g. 3,5");
        auto* c = cmd->add_option("--gaps", gaps, "positive excluded values, e.g. 1,2,4,7")
                      ->expected(0, 1);
        cmd->add_flag("--monoid", monoid, "adjoin 0 to the generated semigroup");
        cmd->add_flag("--contains-zero", contains_zero, "0 belongs to the semigroup");
        g->excludes(c);
        cmd->callback([this, c] { gaps_given = c->count() > 0; });
    }

    std::vector<std::uint64_t> parse_list(const std::string& text) const {
        if (text.empty()) return {};
        return NaturalSet::parse(text).elements();
    }

    NumericalSemigroup build() const {
        if (!gens.empty()) {
            return NumericalSemigroup::from_generators(parse_list(gens), monoid);
        }
        if (gaps_given) {
            return NumericalSemigroup::from_complement(parse_list(gaps), contains_zero);
        }
        throw std::domain_error("describe the semigroup with --gens or --gaps");
    }
};

void emit(const json& j) { std::cout << j.dump() << "\n"; }

std::string join(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

void print_search_text(const powsem::SearchReport& r) {
    std::cout << "semigroup: " << r.semigroup.describe() << "\n";
    std::cout << "mode: " << r.mode << "  bound: " << r.bound
              << "  reduced: " << (r.reduced ? "yes" : "no") << "\n";
    std::cout << "survivors: " << r.survivors.size() << "\n";
    for (const auto& s : r.survivors) {
        std::cout << "  " << s.classification << " (table of " << s.table.size()
                  << " members)\n";
    }
    std::cout << "constraints checked: " << r.constraints_checked << "\n";
    if (r.note) std::cout << "note: " << *r.note << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"power semigroup laboratory for numerical semigroups"};
    app.require_subcommand(1);
    // let --json appear before or after the verb
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    // info
    auto* info = app.add_subcommand("info", "semigroup invariants");
    SemigroupArgs info_sg;
    info_sg.attach(info);

    // set-valued verbs
    std::vector<std::string> set_args;
    std::vector<std::string> interval_args;
    auto add_set_opts = [&](CLI::App* cmd) {
        cmd->add_option("--set", set_args, "set literal, ascending, e.g. 0,5,8,10 or 2..5");
        cmd->add_option("--interval", interval_args, "interval i:j, shorthand for i..j");
    };
    auto* sumset = app.add_subcommand("sumset", "sum of the given sets");
    add_set_opts(sumset);
    auto* gap = app.add_subcommand("gap", "gap set and gap of a set");
    add_set_opts(gap);
    auto* sigma_cmd = app.add_subcommand("sigma", "involution image of a set");
    add_set_opts(sigma_cmd);
    auto* phi_cmd = app.add_subcommand("phi", "translation class representative");
    add_set_opts(phi_cmd);

    // search / element-search / obstruction / verify
    std::uint64_t bound = 0;
    bool reduced = false;
    std::string mode = "filtered";
    std::uint64_t max_carrier = powsem::WindowCarrier::kDefaultCap;

    auto* search = app.add_subcommand("search", "automorphism search on a window");
    SemigroupArgs search_sg;
    search_sg.attach(search);
    search->add_option("--bound", bound, "window bound on max(X)")->required();
    search->add_flag("--reduced", reduced, "restrict to sets containing 0");
    search->add_option("--mode", mode, "filtered or raw")
        ->check(CLI::IsMember({"filtered", "raw"}));
    search->add_option("--max-carrier", max_carrier, "carrier size cap");

    auto* element = app.add_subcommand("element-search",
                                       "element-level search on an interval semigroup");
    SemigroupArgs element_sg;
    element_sg.attach(element);
    element->add_option("--bound", bound, "largest element considered")->required();

    auto* obstruction = app.add_subcommand("obstruction",
                                           "involution restriction obstruction witness");
    SemigroupArgs obstruction_sg;
    obstruction_sg.attach(obstruction);

    auto* verify = app.add_subcommand("verify", "search plus the full property battery");
    SemigroupArgs verify_sg;
    verify_sg.attach(verify);
    verify->add_option("--bound", bound, "window bound on max(X)")->required();
    verify->add_option("--mode", mode, "filtered or raw")
        ->check(CLI::IsMember({"filtered", "raw"}));
    verify->add_option("--max-carrier", max_carrier, "carrier size cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    auto parse_sets = [&]() {
        std::vector<NaturalSet> sets;
        for (const auto& text : set_args) sets.push_back(NaturalSet::parse(text));
        for (const auto& text : interval_args) {
            const auto colon = text.find(':');
            if (colon == std::string::npos) {
                throw std::invalid_argument("interval must be written i:j");
            }
            sets.push_back(NaturalSet::parse(text.substr(0, colon) + ".." +
                                             text.substr(colon + 1)));
        }
        if (sets.empty()) throw std::invalid_argument("provide at least one --set");
        return sets;
    };

    auto make_config = [&]() {
        powsem::SearchConfig cfg = mode == "raw" ? powsem::SearchConfig::raw()
                                                 : powsem::SearchConfig::filtered();
        cfg.max_carrier = max_carrier;
        return cfg;
    };

    try {
        if (info->parsed()) {
            const NumericalSemigroup s = info_sg.build();
            if (as_json) {
                json j;
                j["semigroup"] = powsem::to_json(s);
                j["gaps"] = s.gaps();
                j["frobenius"] = s.frobenius() ? json(*s.frobenius()) : json(nullptr);
                j["critical"] = s.critical();
                j["min_element"] = s.min_element();
                j["interval"] = s.is_interval_tail();
                emit(j);
            } else {
                std::cout << "semigroup: " << s.describe() << "\n";
                std::cout << "gaps: " << (s.gaps().empty() ? "none" : join(s.gaps())) << "\n";
                std::cout << "frobenius: "
                          << (s.frobenius() ? std::to_string(*s.frobenius()) : "none") << "\n";
                std::cout << "critical: " << s.critical() << "\n";
                std::cout << "min element: " << s.min_element() << "\n";
                std::cout << "interval: " << (s.is_interval_tail() ? "yes" : "no") << "\n";
            }
        } else if (sumset->parsed()) {
            const auto sets = parse_sets();
            NaturalSet acc = sets.front();
            for (std::size_t i = 1; i < sets.size(); ++i) acc = acc + sets[i];
            if (as_json) {
                json operands = json::array();
                for (const auto& s : sets) operands.push_back(powsem::to_json(s));
                emit(json{{"op", "sumset"},
                          {"operands", std::move(operands)},
                          {"result", powsem::to_json(acc)}});
            } else {
                std::cout << acc.to_string() << "\n";
            }
        } else if (gap->parsed()) {
            const auto sets = parse_sets();
            if (sets.size() != 1) throw std::invalid_argument("gap takes exactly one set");
            const NaturalSet& x = sets.front();
            if (as_json) {
                emit(json{{"op", "gap"},
                          {"set", powsem::to_json(x)},
                          {"gap_set", x.gap_set()},
                          {"gap", x.gap()}});
            } else {
                const auto d = x.gap_set();
                std::cout << "gap set: " << (d.empty() ? "empty" : join(d)) << "\n";
                std::cout << "gap: " << x.gap() << "\n";
            }
        } else if (sigma_cmd->parsed()) {
            const auto sets = parse_sets();
            if (sets.size() != 1) throw std::invalid_argument("sigma takes exactly one set");
            const NaturalSet image = powsem::sigma(sets.front());
            if (as_json) {
                emit(json{{"op", "sigma"},
                          {"set", powsem::to_json(sets.front())},
                          {"result", powsem::to_json(image)}});
            } else {
                std::cout << image.to_string() << "\n";
            }
        } else if (phi_cmd->parsed()) {
            const auto sets = parse_sets();
            if (sets.size() != 1) throw std::invalid_argument("phi takes exactly one set");
            const NaturalSet rep = powsem::phi(sets.front()).rep;
            if (as_json) {
                emit(json{{"op", "phi"},
                          {"set", powsem::to_json(sets.front())},
                          {"rep", powsem::to_json(rep)}});
            } else {
                std::cout << rep.to_string() << "\n";
            }
        } else if (search->parsed()) {
            const NumericalSemigroup s = search_sg.build();
            const auto cfg = make_config();
            const auto carrier = powsem::enumerate_window(s, bound, reduced, cfg.max_carrier);
            const auto report = powsem::search_automorphisms(carrier, cfg);
            if (as_json) {
                emit(powsem::to_json(report));
            } else {
                print_search_text(report);
            }
        } else if (element->parsed()) {
            const NumericalSemigroup s = element_sg.build();
            const auto report = powsem::element_automorphism_search(s, bound);
            if (as_json) {
                emit(powsem::to_json(report));
            } else {
                print_search_text(report);
            }
        } else if (obstruction->parsed()) {
            const NumericalSemigroup s = obstruction_sg.build();
            const auto witness = powsem::sigma_restriction_obstruction(s);
            if (as_json) {
                json j;
                j["semigroup"] = powsem::to_json(s);
                j["witness"] = witness ? powsem::to_json(*witness) : json(nullptr);
                emit(j);
            } else if (witness) {
                std::cout << "m: " << witness->m << "\n";
                std::cout << "set: " << witness->set.to_string() << "\n";
                std::cout << "sigma image: " << witness->sigma_image.to_string() << "\n";
                std::cout << "missing from semigroup: " << witness->missing << "\n";
            } else {
                std::cout << "none (discrete interval)\n";
            }
        } else if (verify->parsed()) {
            const NumericalSemigroup s = verify_sg.build();
            const auto suite = powsem::property_suite(s, bound, make_config());
            if (as_json) {
                emit(powsem::to_json(suite));
            } else {
                print_search_text(suite.search);
                for (const auto& p : suite.properties) {
                    std::printf("%-26s %s (checked %llu)%s%s\n", p.name.c_str(),
                                p.passed ? "PASS" : "FAIL",
                                static_cast<unsigned long long>(p.checked),
                                p.passed ? "" : " witness: ", p.passed ? "" : p.witness.c_str());
                }
                std::cout << (suite.all_passed ? "all properties passed\n"
                                               : "some properties failed\n");
            }
            return suite.all_passed ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
