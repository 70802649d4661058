#include "CLI11.hpp"

#include "wd/conjugacy.hpp"
#include "wd/error.hpp"
#include "wd/fixtures.hpp"
#include "wd/isocrystal.hpp"
#include "wd/monodromy.hpp"
#include "wd/serialize.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace wd;

/* exit taxonomy: 0 definitive verdict, 1 internal failure, 2 honest unknown,
   3 input problem, 4 usage problem */
constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_unknown = 2;
constexpr int exit_input = 3;
constexpr int exit_usage = 4;

struct Settings {
    int degree = 3;
    int order = 8;
    unsigned long seed = 1;
    std::string convention = "arithmetic";
    int attempts = 200;
    int trial_radius = 2;
    long grid_cap = 2000000;
    long candidate_cap = 4096;
};

Settings g_settings;
int g_exit = exit_ok;
std::chrono::steady_clock::time_point g_start;

bool geometric() { return g_settings.convention == "geometric"; }

Budget make_budget() {
    Budget b;
    b.degree = g_settings.degree;
    b.trial_radius = g_settings.trial_radius;
    b.attempts = g_settings.attempts;
    b.grid_cap = g_settings.grid_cap;
    b.seed = static_cast<unsigned>(g_settings.seed);
    return b;
}

void apply_config_file(Settings& s, const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw ParseError("cannot open config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    Json j;
    try {
        j = parse_document(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError(path + ": config must be an object");
    for (const auto& [key, value] : j.items()) {
        if (key == "degree") s.degree = value.get<int>();
        else if (key == "order") s.order = value.get<int>();
        else if (key == "seed") s.seed = value.get<unsigned long>();
        else if (key == "convention") s.convention = value.get<std::string>();
        else if (key == "attempts") s.attempts = value.get<int>();
        else if (key == "trial_radius") s.trial_radius = value.get<int>();
        else if (key == "grid_cap") s.grid_cap = value.get<long>();
        else if (key == "candidate_cap") s.candidate_cap = value.get<long>();
        else throw ParseError(path + ": unknown config key '" + key + "'");
    }
    if (s.degree < 1 || s.order < 1 || s.attempts < 1 || s.trial_radius < 1 ||
        s.grid_cap < 1 || s.candidate_cap < 1)
        throw ParseError(path + ": bounds must be positive");
    if (s.convention != "arithmetic" && s.convention != "geometric")
        throw ParseError(path + ": convention must be arithmetic or geometric");
}

Json load_doc(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in.good()) throw ParseError("cannot open '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return parse_document(text);
    } catch (const ParseError& e) {
        std::string msg = e.what();
        const std::string prefix = "ParseError: ";
        if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
        throw ParseError(path + ": " + msg);
    }
}

/* files hold s in the chosen convention; internally s is always the
   arithmetic Frobenius image */
WDPair read_pair_doc(const Json& doc) {
    WDPair p = pair_from_json(doc);
    if (geometric()) p.s = p.s.inverse();
    return p;
}

WDPair read_pair(const std::string& path) { return read_pair_doc(load_doc(path)); }

Json emit_pair(WDPair p) {
    if (geometric()) p.s = p.s.inverse();
    return pair_json(p);
}

void report(const std::string& command, Json result, const std::string& summary) {
    Json out;
    out["command"] = command;
    out["convention"] = g_settings.convention;
    out["result"] = std::move(result);
    std::cout << out.dump(2) << "\n";
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - g_start)
                  .count();
    std::cerr << summary << " [" << ms << " ms]" << "\n";
}

Json useries_json(const USeries& s) {
    Json out = Json::array();
    int n = s.front().rows();
    for (int i = 0; i < n; ++i) {
        Json row = Json::array();
        for (int j = 0; j < n; ++j) {
            Json coeffs = Json::array();
            for (const auto& c : s) coeffs.push_back(element_json(c.at(i, j)));
            row.push_back(std::move(coeffs));
        }
        out.push_back(std::move(row));
    }
    return out;
}

void run_validate(const std::string& path) {
    Json doc = load_doc(path);
    Json result;
    std::string what;
    bool ok = false;
    if (doc.contains("sigma")) {
        auto r = validate_presentation(presentation_from_json(doc));
        result["type"] = "presentation";
        result["report"] = {{"sizes_ok", r.sizes_ok},
                            {"q_ok", r.q_ok},
                            {"sigma_in_group", r.sigma_in_group},
                            {"gamma_in_group", r.gamma_in_group},
                            {"gamma_unipotent", r.gamma_unipotent},
                            {"relation_ok", r.relation_ok}};
        ok = r.ok();
        what = "presentation";
    } else if (doc.contains("generators")) {
        auto r = validate_finite_image(finite_image_from_json(doc));
        result["type"] = "finite-image";
        result["report"] = {{"sizes_ok", r.sizes_ok},
                            {"generators_in_group", r.generators_in_group},
                            {"relations_hold", r.relations_hold}};
        ok = r.ok();
        what = "finite image";
    } else if (doc.contains("order")) {
        auto r = validate_log_module(log_module_from_json(doc));
        result["type"] = "log-module";
        result["report"] = {{"sizes_ok", r.sizes_ok},
                            {"p_prime", r.p_prime},
                            {"residue_nilpotent", r.residue_nilpotent},
                            {"frobenius_invertible", r.frobenius_invertible},
                            {"compatible", r.compatible},
                            {"first_bad_power", r.first_bad_power}};
        ok = r.ok();
        what = "log module";
    } else if (doc.contains("phi0")) {
        auto r = validate_phi_n(phi_n_from_json(doc));
        result["type"] = "phi-n-module";
        result["report"] = {{"sizes_ok", r.sizes_ok},
                            {"p_prime", r.p_prime},
                            {"phi0_invertible", r.phi0_invertible},
                            {"n_nilpotent", r.n_nilpotent},
                            {"relation_ok", r.relation_ok}};
        ok = r.ok();
        what = "phi-n module";
    } else {
        WDPair p = read_pair_doc(doc);
        auto r = validate_pair(p);
        bool urfs = is_urfs(p);
        result["type"] = "pair";
        result["report"] = {{"sizes_ok", r.sizes_ok},
                            {"q_ok", r.q_ok},
                            {"s_in_group", r.s_in_group},
                            {"n_in_lie", r.n_in_lie},
                            {"twist_ok", r.twist_ok},
                            {"n_nilpotent", r.n_nilpotent},
                            {"frobenius_semisimple", urfs}};
        ok = r.ok();
        result["urfs"] = urfs;
        what = "pair";
    }
    result["ok"] = ok;
    report("validate", result, what + (ok ? ": valid" : ": INVALID"));
}

void run_check_equiv(const std::string& a, const std::string& b) {
    WDPair p1 = read_pair(a);
    WDPair p2 = read_pair(b);
    Verdict v = g_equivalent(p1, p2, make_budget());
    Json result;
    result["verdict"] = verdict_json(v);
    if (v.unknown()) g_exit = exit_unknown;
    report("check-equiv", result, v.str());
}

void run_canonical_form(const std::string& a) {
    WDPair p = read_pair(a);
    ChainInvariant inv = chain_invariant(p);
    Json result;
    result["invariant"] = invariant_json(inv);
    result["model"] = emit_pair(canonical_model(inv, p.q, p.group.field()));
    result["basis"] = matrix_json(adapted_basis(p, inv));
    report("canonical-form", result, "canonical form: " + inv.str());
}

void run_semisimplify(const std::string& a) {
    WDPair p = read_pair(a);
    Json result;
    result["pair"] = emit_pair(semisimplify(p));
    report("semisimplify", result, "semisimplified");
}

void run_pushforward(const std::string& a, int rep_index) {
    WDPair p = read_pair(a);
    auto family = rep_family(p.group, g_settings.degree);
    if (rep_index < 0 || rep_index >= static_cast<int>(family.size()))
        throw ParseError("rep index " + std::to_string(rep_index) + " out of range, family has " +
                         std::to_string(family.size()) + " entries at degree " +
                         std::to_string(g_settings.degree));
    const Rep& r = family[static_cast<std::size_t>(rep_index)];
    Json result;
    result["rep"] = r.str();
    result["pair"] = emit_pair(pushforward(p, r));
    report("pushforward", result, "pushed through " + r.str());
}

void run_element_conj(const std::string& a, const std::string& b) {
    WDPair p1 = read_pair(a);
    WDPair p2 = read_pair(b);
    auto ec = element_conjugate(p1, p2, g_settings.degree);
    Json result;
    result["conjugate"] = ec.conjugate;
    if (ec.separating) result["separating"] = ec.separating->str();
    report("element-conj", result,
           ec.conjugate ? "element-conjugate across the family"
                        : "separated by " + ec.separating->str());
}

void run_rationality(const std::string& a) {
    WDPair p = read_pair(a);
    auto auts = field_automorphisms(p.group.field());
    auto stable = class_defined_over(p, auts, make_budget());
    Json result;
    result["automorphisms"] = static_cast<int>(auts.size());
    result["defined_over_rationals"] = stable ? Json(*stable) : Json(nullptr);
    std::string word = stable ? (*stable ? "defined over the rationals"
                                         : "not defined over the rationals")
                              : "undecided at this budget";
    if (!stable) g_exit = exit_unknown;
    report("rationality", result, word);
}

void run_extract(const std::string& a) {
    TamePresentation t = presentation_from_json(load_doc(a));
    Json result;
    result["pair"] = emit_pair(extract_wd(t));
    report("extract", result, "extracted pair");
}

void run_restrict_ram(const std::string& a, int e, bool renormalize) {
    WDPair p = read_pair(a);
    Json result;
    result["pair"] = emit_pair(restrict_totally_ramified(p, e, renormalize));
    report("restrict-ram", result,
           "restricted to a degree " + std::to_string(e) + " totally ramified extension");
}

void run_isoc_validate(const std::string& a) {
    auto r = validate_log_module(log_module_from_json(load_doc(a)));
    Json result;
    result["report"] = {{"sizes_ok", r.sizes_ok},
                        {"p_prime", r.p_prime},
                        {"residue_nilpotent", r.residue_nilpotent},
                        {"frobenius_invertible", r.frobenius_invertible},
                        {"compatible", r.compatible},
                        {"first_bad_power", r.first_bad_power}};
    result["ok"] = r.ok();
    report("isoc validate", result, r.ok() ? "log module: valid" : "log module: INVALID");
}

void run_isoc_fiber(const std::string& a) {
    PhiNModule f = special_fiber(log_module_from_json(load_doc(a)));
    Json result;
    result["module"] = phi_n_json(f);
    result["ok"] = validate_phi_n(f).ok();
    report("isoc fiber", result, "special fiber computed");
}

void run_isoc_gauge(const std::string& a) {
    LogModule m = log_module_from_json(load_doc(a));
    GaugeData g = gauge_to_constant(m);
    FiberComparison cmp = check_fiber_comparison(m);
    Json result;
    result["gauge"] = useries_json(g.gauge);
    result["constant"] = log_module_json(g.constant);
    result["fiber_comparison"] = {{"pass", cmp.pass}};
    report("isoc gauge", result,
           std::string("gauged to constant form, fiber comparison ") +
               (cmp.pass ? "passed" : "FAILED"));
}

void run_isoc_to_wd(const std::string& a, int power) {
    Json doc = load_doc(a);
    PhiNModule d = doc.contains("order") ? special_fiber(log_module_from_json(doc))
                                         : phi_n_from_json(doc);
    Json result;
    result["pair"] = emit_pair(wd_from_phin(d, power));
    report("isoc to-wd", result, "functor applied at power " + std::to_string(power));
}

void run_fixture_tate(long q) {
    Json result;
    result["pair"] = emit_pair(tate_pair(rat(q)));
    report("fixture tate", result, "tate pair at q = " + std::to_string(q));
}

void run_fixture_so6() {
    So6Counterexample ce = so6_counterexample_search(g_settings.candidate_cap);
    Json result;
    result["rho1"] = finite_image_json(ce.rho1);
    result["rho2"] = finite_image_json(ce.rho2);
    result["element_certificate"] = ce.element_certificate;
    result["group_certificate"] = ce.group_certificate;
    report("fixture so6", result, "counterexample found and certified");
}

}  // namespace

int main(int argc, char** argv) {
    g_start = std::chrono::steady_clock::now();

    CLI::App app{"exact classification toolkit for unipotently ramified Frobenius-semisimple "
                 "representation pairs"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<int> opt_degree, opt_order;
    std::optional<unsigned long> opt_seed;
    std::optional<std::string> opt_convention;
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--degree", opt_degree, "representation degree bound")
        ->check(CLI::PositiveNumber);
    app.add_option("--order", opt_order, "series truncation order")->check(CLI::PositiveNumber);
    app.add_option("--seed", opt_seed, "random seed for witness searches");
    app.add_option("--convention", opt_convention, "frobenius convention for pair files")
        ->check(CLI::IsMember({"arithmetic", "geometric"}));

    std::string in_a, in_b;
    int rep_index = 0, ram_index = 1, power = 1;
    long tate_q = 2;
    bool renormalize = false;

    auto* c_validate = app.add_subcommand("validate", "check a document against its invariants");
    c_validate->add_option("input", in_a, "JSON document or -")->required();

    auto* c_equiv = app.add_subcommand("check-equiv", "decide conjugacy of two pairs");
    c_equiv->add_option("first", in_a, "JSON pair or -")->required();
    c_equiv->add_option("second", in_b, "JSON pair")->required();

    auto* c_canon = app.add_subcommand("canonical-form",
                                       "chain invariant, model pair and adapted basis");
    c_canon->add_option("input", in_a, "JSON pair or -")->required();

    auto* c_ss = app.add_subcommand("semisimplify", "replace s by its semisimple factor");
    c_ss->add_option("input", in_a, "JSON pair or -")->required();

    auto* c_push = app.add_subcommand("pushforward", "push a pair through a family representation");
    c_push->add_option("input", in_a, "JSON pair or -")->required();
    c_push->add_option("--rep", rep_index, "index into the representation family");

    auto* c_elem = app.add_subcommand("element-conj",
                                      "compare pairs representation by representation");
    c_elem->add_option("first", in_a, "JSON pair or -")->required();
    c_elem->add_option("second", in_b, "JSON pair")->required();

    auto* c_rat = app.add_subcommand("rationality",
                                     "stability of the class under coefficient automorphisms");
    c_rat->add_option("input", in_a, "JSON pair or -")->required();

    auto* c_mono = app.add_subcommand("monodromy", "tame two-generator data");
    c_mono->require_subcommand(1);
    auto* c_extract = c_mono->add_subcommand("extract", "pair of a tame presentation");
    c_extract->add_option("input", in_a, "JSON presentation or -")->required();

    auto* c_ram = app.add_subcommand("restrict-ram",
                                     "view from a totally ramified extension");
    c_ram->add_option("input", in_a, "JSON pair or -")->required();
    c_ram->add_option("--ram-index", ram_index, "degree of the extension")->required();
    c_ram->add_flag("--renormalize", renormalize, "divide the inertia factor back out");

    auto* c_isoc = app.add_subcommand("isoc", "log connections with frobenius structure");
    c_isoc->require_subcommand(1);
    auto* c_iv = c_isoc->add_subcommand("validate", "compatibility and shape checks");
    c_iv->add_option("input", in_a, "JSON log module or -")->required();
    auto* c_if = c_isoc->add_subcommand("fiber", "special fiber (Phi(0), -A(0))");
    c_if->add_option("input", in_a, "JSON log module or -")->required();
    auto* c_ig = c_isoc->add_subcommand("gauge", "transport to constant form");
    c_ig->add_option("input", in_a, "JSON log module or -")->required();
    auto* c_iw = c_isoc->add_subcommand("to-wd", "pair of a phi-n module");
    c_iw->add_option("input", in_a, "JSON phi-n or log module, or -")->required();
    c_iw->add_option("--power", power, "s is phi0 to the minus this power, q = p^power");

    auto* c_fix = app.add_subcommand("fixture", "built-in reference objects");
    c_fix->require_subcommand(1);
    auto* c_tate = c_fix->add_subcommand("tate", "rank two semistable pair");
    c_tate->add_option("--q", tate_q, "residue size, a prime power");
    auto* c_so6 = c_fix->add_subcommand("so6", "element-conjugate but not conjugate pair");

    /* global flags remain usable after a subcommand name */
    for (CLI::App* s : {c_validate, c_equiv, c_canon, c_ss, c_push, c_elem, c_rat, c_mono,
                        c_extract, c_ram, c_isoc, c_iv, c_if, c_ig, c_iw, c_fix, c_tate, c_so6})
        s->fallthrough();

    /* config file first, then flags on top */
    auto resolve = [&] {
        Settings s;
        if (!config_path.empty()) apply_config_file(s, config_path);
        if (opt_degree) s.degree = *opt_degree;
        if (opt_order) s.order = *opt_order;
        if (opt_seed) s.seed = *opt_seed;
        if (opt_convention) s.convention = *opt_convention;
        g_settings = s;
    };

    c_validate->callback([&] { resolve(); run_validate(in_a); });
    c_equiv->callback([&] { resolve(); run_check_equiv(in_a, in_b); });
    c_canon->callback([&] { resolve(); run_canonical_form(in_a); });
    c_ss->callback([&] { resolve(); run_semisimplify(in_a); });
    c_push->callback([&] { resolve(); run_pushforward(in_a, rep_index); });
    c_elem->callback([&] { resolve(); run_element_conj(in_a, in_b); });
    c_rat->callback([&] { resolve(); run_rationality(in_a); });
    c_extract->callback([&] { resolve(); run_extract(in_a); });
    c_ram->callback([&] { resolve(); run_restrict_ram(in_a, ram_index, renormalize); });
    c_iv->callback([&] { resolve(); run_isoc_validate(in_a); });
    c_if->callback([&] { resolve(); run_isoc_fiber(in_a); });
    c_ig->callback([&] { resolve(); run_isoc_gauge(in_a); });
    c_iw->callback([&] { resolve(); run_isoc_to_wd(in_a, power); });
    c_tate->callback([&] { resolve(); run_fixture_tate(tate_q); });
    c_so6->callback([&] { resolve(); run_fixture_so6(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    } catch (const BudgetExhausted& e) {
        std::cerr << e.what() << "\n";
        return exit_unknown;
    } catch (const NotFound& e) {
        std::cerr << e.what() << "\n";
        return exit_unknown;
    } catch (const DegreeBudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return exit_unknown;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return exit_input;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "internal failure: " << e.what() << "\n";
        return exit_internal;
    }
    return g_exit;
}
