#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ifam/compress.hpp"
#include "ifam/constructions.hpp"
#include "ifam/family.hpp"
#include "ifam/layer2.hpp"
#include "ifam/numeric.hpp"
#include "ifam/profile.hpp"
#include "ifam/search.hpp"
#include "ifam/verify.hpp"

namespace {

constexpr const char* kVersion = "ifam 1.0.0";

using nlohmann::json;
using namespace ifam;

std::string g_argv_echo;

json envelope() {
    json j;
    j["tool"] = kVersion;
    j["argv"] = g_argv_echo;
    return j;
}

std::string file_header() {
    return "# " + std::string(kVersion) + "\n# argv: " + g_argv_echo + "\n";
}

SetFamily load_family(const std::string& path, bool allow_empty) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return parse_family(in, ParseOptions{allow_empty});
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) out.push_back(static_cast<std::size_t>(std::stoull(tok)));
    if (out.empty()) throw InputError("empty size list");
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    if (out.empty()) throw InputError("empty list");
    return out;
}

json profile_json(const IntersectingProfile& p) {
    json j = envelope();
    j["n"] = p.n;
    j["N"] = p.N;
    json arr = json::array();
    for (const BigInt& c : p.counts) arr.push_back(c.str());
    j["profile"] = arr;
    return j;
}

json report_json(const VerifyReport& rep) {
    json j = envelope();
    j["suite"] = rep.suite;
    json cells = json::array();
    for (const VerifyCell& cell : rep.cells) {
        json c;
        c["params"] = cell.params;
        c["status"] = cell.pass ? "pass" : "fail";
        if (!cell.witness.empty()) c["witness"] = cell.witness;
        cells.push_back(c);
    }
    j["cells"] = cells;
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    j["overall"] = rep.overall ? "pass" : "fail";
    return j;
}

void print_report(const VerifyReport& rep, bool as_json) {
    if (as_json) {
        std::cout << report_json(rep).dump(2) << "\n";
        return;
    }
    std::cout << "suite " << rep.suite << "\n";
    for (const VerifyCell& cell : rep.cells)
        std::cout << "  [" << (cell.pass ? "pass" : "FAIL") << "] " << cell.params
                  << (cell.witness.empty() ? "" : "  (" + cell.witness + ")") << "\n";
    for (const std::string& note : rep.notes) std::cout << "  note: " << note << "\n";
    std::cout << "overall: " << (rep.overall ? "pass" : "fail") << "\n";
}

json search_json(const SearchReport& rep) {
    json j = envelope();
    j["n"] = rep.n;
    j["N"] = rep.N;
    j["s"] = rep.s;
    j["max"] = rep.max_count.str();
    json optima = json::array();
    for (const SetFamily& f : rep.optima) optima.push_back(serialize_family(f));
    j["optima"] = optima;
    j["scanned"] = rep.families_scanned;
    j["restriction"] = rep.restriction.str();
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"intersecting-family counting, compression and search toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();  // allow --jobs / --allow-empty after the subcommand

    bool allow_empty = false;
    int jobs = 1;
    app.add_flag("--allow-empty", allow_empty, "accept the empty set in family files");
    app.add_option("--jobs", jobs, "worker threads for searches")->check(CLI::PositiveNumber);

    // profile
    auto* c_profile = app.add_subcommand("profile", "exact intersecting profile of a family");
    std::string profile_file;
    std::string profile_s;
    bool profile_json_out = false;
    c_profile->add_option("file", profile_file)->required();
    c_profile->add_option("--s", profile_s, "report only these sizes (comma list)");
    c_profile->add_flag("--json", profile_json_out);

    // prob
    auto* c_prob = app.add_subcommand("prob", "probability the random subfamily is intersecting");
    std::string prob_file, prob_p;
    std::uint64_t prob_trials = 0, prob_seed = 0;
    c_prob->add_option("file", prob_file)->required();
    c_prob->add_option("--p", prob_p, "selection probability (rational a/b or decimal)")->required();
    c_prob->add_option("--mc", prob_trials, "Monte Carlo trials (switches to estimation)");
    c_prob->add_option("--seed", prob_seed);

    // compress
    auto* c_compress = app.add_subcommand("compress", "apply one compression");
    std::string compress_file, compress_op;
    bool check_monotone = false, compress_json_out = false;
    c_compress->add_option("file", compress_file)->required();
    c_compress->add_option("--op", compress_op, "ij:i,j | up:src=..;tgt=.. | uvf:U=..;v=..;f=..")
        ->required();
    c_compress->add_flag("--check-monotone", check_monotone,
                         "report profile deltas instead of the family");
    c_compress->add_flag("--json", compress_json_out);

    // search
    auto* c_search = app.add_subcommand("search", "exhaustive c_s maximisation");
    int search_n = 0;
    std::size_t search_N = 0, search_s = 2;
    std::string search_restrict = "none";
    bool search_json_out = false;
    c_search->add_option("--n", search_n)->required();
    c_search->add_option("--N", search_N, "family size")->required();
    c_search->add_option("--s", search_s)->required();
    c_search->add_option("--restrict", search_restrict, "none | layers:R");
    c_search->add_flag("--json", search_json_out);

    // layer2
    auto* c_layer2 = app.add_subcommand("layer2", "graphs inside the 2-layer");
    int l2_n = 0;
    std::uint64_t l2_i = 0;
    bool l2_have_i = false;
    std::string l2_kind, l2_census_file;
    bool l2_max = false, l2_crossover = false, l2_bound = false, l2_json_out = false;
    c_layer2->add_option("--n", l2_n)->required();
    c_layer2->add_option("--i", l2_i)->each([&](const std::string&) { l2_have_i = true; });
    c_layer2->add_option("--kind", l2_kind, "star | complete");
    c_layer2->add_option("--census", l2_census_file, "family file of 2-sets");
    c_layer2->add_flag("--max", l2_max, "exhaustive adjacent-pair maximum at --i edges");
    c_layer2->add_flag("--crossover", l2_crossover, "CSV of the two quasi constructions");
    c_layer2->add_flag("--bound", l2_bound, "closing bound value at n");
    c_layer2->add_flag("--json", l2_json_out);

    // construct
    auto* c_construct = app.add_subcommand("construct", "named extremal families");
    std::string construct_name;
    int construct_n = 0;
    std::string construct_N;
    c_construct->add_option("--name", construct_name)->required();
    c_construct->add_option("--n", construct_n)->required();
    c_construct->add_option("--N", construct_N, "target size where the name allows one");

    // verify
    auto* c_verify = app.add_subcommand("verify", "theorem and lemma verification suites");
    std::string verify_suite, verify_ns, verify_s;
    int verify_r = -1, verify_l = -1;
    std::uint64_t verify_trials = 0, verify_cases = 0, verify_seed = 20260811;
    bool verify_json_out = false;
    c_verify->add_option("--suite", verify_suite)->required();
    c_verify->add_option("--n", verify_ns, "ground size or comma list");
    c_verify->add_option("--s", verify_s, "size or comma list");
    c_verify->add_option("--r", verify_r);
    c_verify->add_option("--l", verify_l);
    c_verify->add_option("--trials", verify_trials);
    c_verify->add_option("--cases", verify_cases);
    c_verify->add_option("--seed", verify_seed);
    c_verify->add_flag("--json", verify_json_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // --help/--version leave 0; usage errors map to 2
    }

    if (c_profile->parsed()) {
        SetFamily f = load_family(profile_file, allow_empty);
        IntersectingProfile p = intersecting_profile(f, 128);
        auto checked_sizes = [&] {
            auto sizes = parse_size_list(profile_s);
            for (std::size_t s : sizes)
                if (s > p.N)
                    throw InputError("subfamily size " + std::to_string(s) +
                                     " exceeds the family size " + std::to_string(p.N));
            return sizes;
        };
        if (profile_json_out) {
            json j = profile_json(p);
            if (!profile_s.empty()) {
                json sel = json::array();
                for (std::size_t s : checked_sizes()) sel.push_back(p.counts[s].str());
                j["selected"] = sel;
            }
            std::cout << j.dump(2) << "\n";
        } else if (!profile_s.empty()) {
            for (std::size_t s : checked_sizes())
                std::cout << "c_" << s << " = " << p.counts[s].str() << "\n";
        } else {
            std::cout << "n " << p.n << " N " << p.N << "\n";
            for (std::size_t s = 0; s <= p.N; ++s)
                std::cout << "c_" << s << " = " << p.counts[s].str() << "\n";
        }
        return 0;
    }

    if (c_prob->parsed()) {
        SetFamily f = load_family(prob_file, allow_empty);
        json j = envelope();
        if (prob_trials > 0) {
            double p = parse_rational(prob_p).convert_to<double>();
            McEstimate est = mc_estimate(f, p, prob_trials, prob_seed);
            j["p"] = p;
            j["estimate"] = est.estimate;
            j["stderr"] = est.stderr_value;
            j["trials"] = est.trials;
            j["seed"] = est.seed;
        } else {
            BigRat p = parse_rational(prob_p);
            j["p"] = rational_to_string(p);
            j["exact"] = rational_to_string(probability_eval(f, p, 128));
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (c_compress->parsed()) {
        SetFamily f = load_family(compress_file, allow_empty);
        CompressionDescriptor d = parse_descriptor(compress_op, f.n());
        if (check_monotone) {
            MonotoneReport rep = monotone_check(f, d, 0, f.size());
            if (compress_json_out) {
                json j = envelope();
                j["op"] = descriptor_to_string(d);
                json deltas = json::array();
                for (const BigInt& delta : rep.deltas) deltas.push_back(delta.str());
                j["deltas"] = deltas;
                j["falsification"] = rep.falsification;
                std::cout << j.dump(2) << "\n";
            } else {
                for (std::size_t k = 0; k < rep.deltas.size(); ++k)
                    std::cout << "delta c_" << (rep.s_lo + k) << " = " << rep.deltas[k].str()
                              << "\n";
                std::cout << (rep.falsification ? "FALSIFICATION: some count decreased"
                                                : "all deltas non-negative")
                          << "\n";
            }
            return rep.falsification ? 1 : 0;
        }
        std::cout << file_header() << serialize_family(apply_compression(f, d));
        return 0;
    }

    if (c_search->parsed()) {
        Restriction restriction = Restriction::none();
        if (search_restrict.rfind("layers:", 0) == 0)
            restriction = Restriction::fixed_top_layers(std::stoi(search_restrict.substr(7)));
        else if (search_restrict == "upset-only")
            restriction = Restriction::upset_only();
        else if (search_restrict != "none")
            throw InputError("unknown restriction '" + search_restrict + "'");
        SearchReport rep = exhaustive_max_single(search_n, search_N, search_s, restriction, jobs);
        if (search_json_out) {
            std::cout << search_json(rep).dump(2) << "\n";
        } else {
            std::cout << "max c_" << rep.s << " = " << rep.max_count.str() << " over "
                      << rep.families_scanned << " families (restriction " << rep.restriction.str()
                      << ")\n";
            std::cout << rep.optima.size() << " optimum class(es) up to relabeling\n";
            for (const SetFamily& opt : rep.optima) std::cout << serialize_family(opt);
        }
        return 0;
    }

    if (c_layer2->parsed()) {
        if (l2_bound) {
            BigRat value = layer2_bound_value(l2_n);
            json j = envelope();
            j["n"] = l2_n;
            j["value"] = rational_to_string(value);
            j["approx"] = value.convert_to<double>();
            j["below_one"] = value < 1;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (l2_crossover) {
            std::cout << "i,p2_quasi_star,p2_quasi_complete,winner\n";
            for (const CrossoverRow& row : crossover_table(l2_n))
                std::cout << row.i << "," << row.p2_quasi_star << "," << row.p2_quasi_complete
                          << "," << row.winner << "\n";
            return 0;
        }
        if (!l2_census_file.empty()) {
            Layer2Graph g = Layer2Graph::from_family(load_family(l2_census_file, false));
            Census census = star_triangle_census(g);
            json j = envelope();
            json a = json::array();
            for (const BigInt& v : census.a) a.push_back(v.str());
            j["a"] = a;
            j["b"] = census.b.str();
            j["p2"] = p2_count(g);
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (l2_max) {
            if (!l2_have_i) throw InputError("--max needs --i");
            P2MaxReport rep = max_p2(l2_n, l2_i);
            json j = envelope();
            j["n"] = l2_n;
            j["i"] = l2_i;
            j["value"] = rep.value;
            j["scanned"] = rep.scanned;
            json optima = json::array();
            for (const Layer2Graph& g : rep.optima) optima.push_back(serialize_family(g.as_family()));
            j["optima"] = optima;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (l2_have_i) {
            QuasiKind kind;
            if (l2_kind == "star")
                kind = QuasiKind::kStar;
            else if (l2_kind == "complete")
                kind = QuasiKind::kComplete;
            else
                throw InputError("--kind must be star or complete");
            std::cout << file_header()
                      << serialize_family(quasi_graph(l2_n, l2_i, kind).as_family());
            return 0;
        }
        throw InputError("layer2 needs one of --i/--kind, --census, --max, --crossover, --bound");
    }

    if (c_construct->parsed()) {
        std::optional<BigInt> N;
        if (!construct_N.empty()) N = BigInt(construct_N);
        std::cout << file_header() << serialize_family(named_family(construct_name, construct_n, N));
        return 0;
    }

    if (c_verify->parsed()) {
        VerifyReport rep;
        auto ns = [&](std::vector<int> fallback) {
            return verify_ns.empty() ? fallback : parse_int_list(verify_ns);
        };
        auto slist = [&](std::vector<std::size_t> fallback) {
            return verify_s.empty() ? fallback : parse_size_list(verify_s);
        };
        if (verify_suite == "t-unique") {
            rep = verify_t_unique(ns({4}).front(), slist({2, 3, 5, 8}), jobs);
        } else if (verify_suite == "l-strict") {
            int n = ns({6}).front();
            rep = verify_l_strict(n, verify_l >= 0 ? verify_l : 1, slist({2, 3, 4}),
                                  verify_trials ? verify_trials : 100, verify_seed,
                                  StrictVariant::kBase);
        } else if (verify_suite == "l-strict-mid") {
            int n = ns({6}).front();
            StrictVariant variant =
                n % 2 == 0 ? StrictVariant::kMidEven : StrictVariant::kMidOdd;
            int ell = n % 2 == 0 ? n / 2 - 1 : (n - 1) / 2;
            rep = verify_l_strict(n, verify_l >= 0 ? verify_l : ell, slist({2, 3}),
                                  verify_trials ? verify_trials : 50, verify_seed, variant);
        } else if (verify_suite == "l-stars") {
            rep = verify_l_stars(ns({7}).front(), verify_r >= 0 ? verify_r : 4,
                                 slist({5}).front());
        } else if (verify_suite == "triangle") {
            auto ss = slist({3, 8});
            rep = verify_triangle(ns({4, 5}), ss.front(), ss.back());
        } else if (verify_suite == "phi") {
            rep = verify_phi(ns({7}).front(), verify_r >= 0 ? verify_r : 4, slist({5}).front());
        } else if (verify_suite == "construct") {
            rep = verify_construct(jobs);
        } else if (verify_suite == "minimal") {
            rep = verify_minimal(ns({4, 5, 6, 7}));
        } else if (verify_suite == "duality") {
            rep = verify_duality(ns({5, 6}));
        } else if (verify_suite == "not-nested") {
            rep = verify_not_nested(ns({4, 5, 6}));
        } else if (verify_suite == "monotone") {
            rep = verify_monotone(verify_cases ? verify_cases : 1000, verify_seed);
        } else if (verify_suite == "oracle") {
            rep = verify_oracle(verify_cases ? verify_cases : 500, verify_seed);
        } else if (verify_suite == "decomposition") {
            rep = verify_decomposition(verify_cases ? verify_cases : 50, verify_seed);
        } else if (verify_suite == "bound") {
            auto bounds = ns({4, 40});
            rep = verify_bound(bounds.front(), bounds.back());
        } else {
            throw InputError("unknown suite '" + verify_suite + "'");
        }
        print_report(rep, verify_json_out);
        return rep.overall ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    std::ostringstream echo;
    for (int i = 0; i < argc; ++i) echo << (i ? " " : "") << argv[i];
    g_argv_echo = echo.str();
    auto start = std::chrono::steady_clock::now();
    int code = 2;
    try {
        code = run(argc, argv);
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        code = 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        code = 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 2;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "wall_ms=" << ms << "\n";
    return code;
}
