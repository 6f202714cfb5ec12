// Copyright 2026 The Holder Arcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "holder/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "holder/arc_io.hpp"
#include "holder/classify.hpp"
#include "holder/error.hpp"
#include "holder/maps.hpp"
#include "holder/reparam.hpp"
#include "holder/spiral.hpp"
#include "holder/variation.hpp"

namespace holder::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    double sandwich_slack = 0.05;
    double seminorm_ratio_floor = 0.9;
    double rel_eps = 1e-12;
    unsigned jobs = 1;
    std::uint64_t seed = 0x5eed'2026ULL;
};

struct SpiralFlags {
    std::string kind = "poly";
    double p = 0.5;
    double q = 0.0;
    std::size_t turns = 10;
    std::size_t samples_per_turn = SpiralSpec::default_samples_per_turn;
    std::string table;
};

void add_spiral_flags(CLI::App* cmd, SpiralFlags& f)
{
    cmd->add_option("--kind", f.kind, "spiral family")->check(CLI::IsMember({"poly", "ell", "tab"}));
    cmd->add_option("--p", f.p, "radial decay exponent p");
    cmd->add_option("--q", f.q, "minor-axis exponent q (elliptical; defaults to p)");
    cmd->add_option("--turns", f.turns, "number of full turns J");
    cmd->add_option("--samples-per-turn", f.samples_per_turn, "samples per turn m");
    cmd->add_option("--table", f.table, "CSV with header t,phi (tabulated kind)");
}

TabulatedKind read_table(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open table file '" + path + "'");
    }
    std::string line;
    std::size_t lineno = 1;
    if (!std::getline(in, line) || line.rfind("t,phi", 0) != 0) {
        throw ParseError("table line 1: expected header \"t,phi\"");
    }
    TabulatedKind table;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") {
            continue;
        }
        std::istringstream row(line);
        std::string a;
        std::string b;
        if (!std::getline(row, a, ',') || !std::getline(row, b)) {
            throw ParseError("table line " + std::to_string(lineno) + ": expected two fields");
        }
        try {
            std::size_t used_a = 0;
            std::size_t used_b = 0;
            table.t.push_back(std::stod(a, &used_a));
            table.phi.push_back(std::stod(b, &used_b));
        } catch (const std::exception&) {
            throw ParseError("table line " + std::to_string(lineno) + ": field \"t\" or \"phi\" is not a number");
        }
    }
    return table;
}

SpiralSpec make_spec(const SpiralFlags& f)
{
    if (f.kind == "poly") {
        return SpiralSpec::polynomial(f.p, f.turns, f.samples_per_turn);
    }
    if (f.kind == "ell") {
        return SpiralSpec::elliptical(f.p, f.q > 0.0 ? f.q : f.p, f.turns, f.samples_per_turn);
    }
    if (f.table.empty()) {
        throw UsageError("--kind tab requires --table");
    }
    auto table = read_table(f.table);
    return SpiralSpec::tabulated(std::move(table.t), std::move(table.phi), f.turns, f.samples_per_turn);
}

json spiral_json(const SpiralFlags& f)
{
    json j{{"kind", f.kind}, {"turns", f.turns}, {"samples_per_turn", f.samples_per_turn}};
    if (f.kind == "tab") {
        j["table"] = f.table;
    } else {
        j["p"] = f.p;
        if (f.kind == "ell") {
            j["q"] = f.q > 0.0 ? f.q : f.p;
        }
    }
    return j;
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write '" + path + "'");
    }
    return out;
}

void write_rings_csv(const std::string& path, const RingDecomposition& rings)
{
    auto out = open_output(path);
    out << "j,phi_j,length_j,diam_j\n";
    for (const auto& r : rings.rings) {
        out << r.j << ',' << io::format_number(r.phi_j) << ',' << io::format_number(r.length_j) << ','
            << io::format_number(r.diam_j) << '\n';
    }
}

json sandwich_json(const SandwichReport& r)
{
    json rings = json::array();
    for (const auto& v : r.per_ring) {
        rings.push_back({{"j", v.j}, {"phi_j", v.phi_j}, {"V_j", v.variation}, {"length_j", v.length_j},
                         {"diam_j", v.diam_j}});
    }
    json j{{"s", r.s},
           {"slack", r.slack},
           {"c_phi", r.c_phi},
           {"sum_rings", r.sum_rings},
           {"total", r.total ? json(*r.total) : json(nullptr)},
           {"lower_ok", r.lower_ok},
           {"upper_ok", r.upper_ok},
           {"ring_bounds_ok", r.ring_bounds_ok},
           {"phi_decreasing", r.phi_decreasing},
           {"diam_nonincreasing", r.diam_nonincreasing ? json(*r.diam_nonincreasing) : json(nullptr)},
           {"notes", r.notes},
           {"per_ring", rings}};
    return j;
}

json bounds_json(const BoundsReport& b)
{
    return {{"p", b.p},
            {"q", b.q},
            {"r", b.r},
            {"s_e", b.s_e},
            {"bound_41", b.bound_41 ? json(*b.bound_41) : json("n/a")},
            {"bound_42", b.bound_42 ? json(*b.bound_42) : json("n/a")},
            {"bound_43", b.bound_43},
            {"qc_threshold", b.qc_threshold},
            {"tightest", b.tightest},
            {"narrative", b.narrative}};
}

void print_bounds_table(std::ostream& err, const BoundsReport& b)
{
    auto cell = [](const std::optional<double>& v) { return v ? io::format_number(*v) : std::string("n/a"); };
    err << std::left << std::setw(34) << "bound" << std::setw(24) << "value" << "applies\n"
        << std::setw(34) << "(1+s)/(2+s-r)" << std::setw(24) << cell(b.bound_41) << "p > 1\n"
        << std::setw(34) << "(p+q+r+s-pr+qs)/((2+s-r)(p+q))" << std::setw(24) << cell(b.bound_42)
        << "p <= 1\n"
        << std::setw(34) << "r/p" << std::setw(24) << io::format_number(b.bound_43) << "p <= 1\n"
        << std::setw(34) << "quasiconformal K >= p/r" << std::setw(24) << io::format_number(b.qc_threshold)
        << "\n"
        << "tightest: " << b.tightest << '\n';
    for (const auto& line : b.narrative) {
        err << line << '\n';
    }
}

std::vector<std::size_t> parse_list(const std::string& text)
{
    std::vector<std::size_t> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size() || v <= 0) {
                throw std::invalid_argument(item);
            }
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw UsageError("--Jlist: '" + item + "' is not a positive integer");
        }
    }
    return out;
}

// The `report` pipeline: the exponent-bound comparisons, the radial stretch
// identity, the empirical exponent of the stretch correspondence, the
// convergence verdicts and one sandwich check, all at small scale.
json run_report(const Globals& g)
{
    json doc;
    json bounds = json::array();
    for (const double q : {0.6, 1.0, 2.0}) {
        bounds.push_back(bounds_json(exponent_bounds(0.6, q, 0.5, 0.5)));
    }
    doc["bounds"] = bounds;

    const auto s1 = generate(SpiralSpec::polynomial(1.0, 100, 64));
    const auto s_half = generate(SpiralSpec::polynomial(0.5, 100, 64));
    const auto mapped = apply_stretch(StretchMap{0.5}, s1);
    double worst = 0.0;
    for (std::size_t i = 0; i < mapped.size(); ++i) {
        worst = std::max(worst, distance(mapped.point(i), s_half.point(i))
                                    / std::hypot(s_half.point(i).x, s_half.point(i).y));
    }
    doc["stretch"] = {{"beta", 0.5}, {"max_relative_deviation", worst}, {"samples", mapped.size()}};

    HolderEstimateOptions hopts;
    hopts.seed = g.seed;
    const auto grid = alpha_grid(0.01);
    const auto fwd = empirical_holder(s1, s_half, grid, hopts);
    const auto back = empirical_holder(s_half, s1, grid, hopts);
    doc["holder_estimate"] = {{"forward_best_alpha", fwd.best_alpha},
                              {"expected", 0.5},
                              {"inverse_seminorm_alpha_1", back.seminorms.back()},
                              {"pairs", fwd.pairs_used}};

    json verdicts = json::array();
    for (const double s : {2.0, 3.0}) {
        const auto v = classify_spiral(SpiralSpec::polynomial(0.5, 100), s);
        verdicts.push_back({{"p", 0.5}, {"s", s}, {"verdict", to_string(v.verdict)}, {"rationale", v.rationale}});
    }
    doc["classify"] = verdicts;

    SandwichOptions sopts;
    sopts.slack = g.sandwich_slack;
    sopts.jobs = g.jobs;
    const auto sw = sandwich_check(SpiralSpec::polynomial(0.5, 20, 64), 3.0, 20, sopts);
    doc["sandwich"] = {{"p", 0.5},     {"s", 3.0},           {"turns", 20},
                       {"sum_rings", sw.sum_rings}, {"total", *sw.total},
                       {"lower_ok", sw.lower_ok}, {"upper_ok", sw.upper_ok},
                       {"ring_bounds_ok", sw.ring_bounds_ok}};
    return doc;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hölder regularity of sampled planar arcs and spirals", "holder"};
    app.require_subcommand(1);
    app.set_config("--config", "", "INI/TOML file with default flag values");
    app.set_version_flag("--version", version);

    Globals g;
    app.add_option("--jobs", g.jobs, "worker threads (0 = hardware concurrency)")->envname("HOLDER_JOBS");
    app.add_option("--seed", g.seed, "seed for pair sampling");
    app.add_option("--sandwich-slack", g.sandwich_slack, "relative slack on sandwich upper bounds");
    app.add_option("--seminorm-ratio-floor", g.seminorm_ratio_floor,
                   "required seminorm^s / variation ratio for `param`");
    app.add_option("--rel-eps", g.rel_eps, "relative tolerance for floating-point comparisons");

    // gen
    SpiralFlags gen_spiral;
    std::string gen_out;
    std::string gen_rings;
    bool gen_validate = false;
    auto* gen = app.add_subcommand("gen", "sample a spiral into an arc file");
    add_spiral_flags(gen, gen_spiral);
    gen->add_option("--out", gen_out, "arc file (.json or .csv)")->required();
    gen->add_option("--rings-out", gen_rings, "ring decomposition CSV");
    gen->add_flag("--validate", gen_validate, "check injectivity (O(n^2) worst case)");

    // variation
    double var_s = 1.0;
    std::string var_arc;
    std::string var_profile;
    auto* var = app.add_subcommand("variation", "s-variation of an arc");
    var->add_option("--s", var_s, "variation exponent s >= 1")->required();
    var->add_option("--arc", var_arc, "arc file")->required();
    var->add_option("--profile-out", var_profile, "prefix profile CSV (i,t,V)");

    // param
    double par_s = 1.0;
    std::string par_arc;
    std::string par_out;
    auto* par = app.add_subcommand("param", "optimal (1/s)-Hölder parametrization");
    par->add_option("--s", par_s, "variation exponent s >= 1")->required();
    par->add_option("--arc", par_arc, "arc file")->required();
    par->add_option("--out", par_out, "parametrized arc file (column u)")->required();

    // seminorm
    double sem_alpha = 1.0;
    std::string sem_arc;
    auto* sem = app.add_subcommand("seminorm", "discrete Hölder seminorm of an arc against its parameter");
    sem->add_option("--alpha", sem_alpha, "exponent in (0, 1]")->required();
    sem->add_option("--arc", sem_arc, "arc file; its parameter column is used as u")->required();

    // classify
    SpiralFlags cls_spiral;
    cls_spiral.turns = 1000;
    double cls_s = 2.0;
    double cls_margin = 0.05;
    auto* cls = app.add_subcommand("classify", "is sum phi_n^s finite?");
    add_spiral_flags(cls, cls_spiral);
    cls->add_option("--s", cls_s, "variation exponent s > 1")->required();
    cls->add_option("--margin", cls_margin, "inconclusive band around p_hat*s = 1 (tabulated)");

    // rings
    double rng_s = 2.0;
    std::string rng_arc;
    std::string rng_csv;
    bool rng_per_ring_only = false;
    auto* rng = app.add_subcommand("rings", "per-ring variations and the sandwich check");
    rng->add_option("--s", rng_s, "variation exponent s >= 1")->required();
    rng->add_option("--arc", rng_arc, "ring-aligned arc file")->required();
    rng->add_option("--rings-out", rng_csv, "per-ring CSV");
    rng->add_flag("--per-ring-only", rng_per_ring_only, "skip the variation of the whole arc");

    // growth
    double gro_s = 2.0;
    double gro_p = 0.5;
    std::string gro_list;
    std::size_t gro_m = 64;
    std::string gro_out;
    auto* gro = app.add_subcommand("growth", "growth of the truncated variation with the number of turns");
    gro->add_option("--s", gro_s, "variation exponent s >= 1")->required();
    gro->add_option("--p", gro_p, "polynomial decay exponent");
    gro->add_option("--Jlist", gro_list, "comma-separated increasing truncation depths")->required();
    gro->add_option("--samples-per-turn", gro_m, "samples per ring");
    gro->add_option("--out", gro_out, "CSV J,value");

    // stretch
    double str_beta = 1.0;
    std::string str_in;
    std::string str_out;
    auto* str = app.add_subcommand("stretch", "apply z -> |z|^(beta-1) z to an arc");
    str->add_option("--beta", str_beta, "stretch exponent")->required();
    str->add_option("--arc", str_in, "input arc file")->required();
    str->add_option("--out", str_out, "output arc file")->required();

    // holder-est
    std::string est_src;
    std::string est_dst;
    double est_step = 0.01;
    HolderEstimateOptions est_opts;
    auto* est = app.add_subcommand("holder-est", "empirical Hölder exponent of src[i] -> dst[i]");
    est->add_option("--src", est_src, "source arc")->required();
    est->add_option("--dst", est_dst, "target arc (same parameter grid)")->required();
    est->add_option("--alpha-step", est_step, "alpha grid step");
    est->add_option("--blowup", est_opts.blowup_factor, "blow-up factor");
    est->add_option("--max-pairs", est_opts.max_pairs, "pair budget");

    // bounds
    double bnd_p = 0.0;
    double bnd_q = 0.0;
    double bnd_r = 0.0;
    double bnd_se = 0.0;
    auto* bnd = app.add_subcommand("bounds", "exponent bounds for maps S_{p,q} -> S_{r,se}");
    bnd->add_option("--p", bnd_p)->required();
    bnd->add_option("--q", bnd_q)->required();
    bnd->add_option("--r", bnd_r)->required();
    bnd->add_option("--se", bnd_se)->required();

    // report
    std::string rep_out;
    auto* rep = app.add_subcommand("report", "run the exponent-comparison reproduction pipeline");
    rep->add_option("--out", rep_out, "summary JSON file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << version << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    auto snapshot = [&](const std::string& command, json flags) {
        return json{{"command", command},
                    {"flags", std::move(flags)},
                    {"tolerances",
                     {{"sandwich_slack", g.sandwich_slack},
                      {"seminorm_ratio_floor", g.seminorm_ratio_floor},
                      {"rel_eps", g.rel_eps}}},
                    {"seed", g.seed},
                    {"jobs", g.jobs}};
    };
    auto emit = [&](json doc, const std::string& command, json flags) {
        doc["config"] = snapshot(command, std::move(flags));
        doc["version"] = version;
        out << doc.dump(2) << '\n';
    };

    try {
        if (!(g.sandwich_slack > 0.0) || !(g.seminorm_ratio_floor > 0.0) || !(g.rel_eps > 0.0)) {
            throw UsageError("tolerances must be positive");
        }

        if (*gen) {
            const auto spec = make_spec(gen_spiral);
            const auto arc = generate(spec);
            io::write_arc(gen_out, arc);
            json doc{{"samples", arc.size()}, {"out", gen_out}};
            if (!gen_rings.empty()) {
                write_rings_csv(gen_rings, decompose_rings(arc));
                doc["rings_out"] = gen_rings;
            }
            if (gen_validate) {
                const auto hit = find_self_intersection(arc);
                doc["injective"] = !hit.has_value();
                if (hit) {
                    doc["intersecting_segments"] = {hit->first, hit->second};
                }
            }
            emit(doc, "gen", spiral_json(gen_spiral));
        } else if (*var) {
            const auto arc = io::read_arc(var_arc);
            const auto vr = s_variation(arc, var_s);
            if (!var_profile.empty()) {
                auto csv = open_output(var_profile);
                csv << "i,t,V\n";
                for (std::size_t i = 0; i < arc.size(); ++i) {
                    csv << i << ',' << io::format_number(arc.param(i)) << ','
                        << io::format_number(vr.prefix[i]) << '\n';
                }
            }
            emit({{"s", vr.s}, {"value", vr.value}, {"breakpoints", vr.breakpoints}}, "variation",
                 {{"s", var_s}, {"arc", var_arc}});
        } else if (*par) {
            const auto arc = io::read_arc(par_arc);
            const auto vr = s_variation(arc, par_s);
            const auto hp = build_param(arc, vr);
            io::write_arc(par_out, param_as_arc(hp, arc.meta()), "u");
            const auto cert = certify(hp, g.rel_eps, g.jobs);
            SeminormOptions sopts;
            sopts.jobs = g.jobs;
            sopts.tie_rel = g.rel_eps;
            const auto sn = discrete_seminorm(hp, 1.0 / par_s, sopts);
            const double ratio = std::pow(sn.seminorm, par_s) / vr.value;
            emit({{"s", par_s},
                  {"variation_value", vr.value},
                  {"out", par_out},
                  {"certificate",
                   {{"pairs_checked", cert.pairs_checked},
                    {"prefix_violations", cert.prefix_violations},
                    {"normalized_violations", cert.normalized_violations},
                    {"max_ratio", cert.max_ratio},
                    {"ok", cert.ok()}}},
                  {"seminorm", sn.seminorm},
                  {"seminorm_ratio", ratio},
                  {"meets_ratio_floor", ratio >= g.seminorm_ratio_floor}},
                 "param", {{"s", par_s}, {"arc", par_arc}});
        } else if (*sem) {
            const auto arc = io::read_arc(sem_arc);
            SeminormOptions sopts;
            sopts.jobs = g.jobs;
            sopts.tie_rel = g.rel_eps;
            const auto sn = discrete_seminorm(arc.params(), arc.points(), sem_alpha, sopts);
            emit({{"alpha", sn.exponent},
                  {"seminorm", sn.seminorm},
                  {"witness", {sn.witness.first, sn.witness.second}},
                  {"samples_used", sn.samples_used},
                  {"subsampled", sn.subsampled}},
                 "seminorm", {{"alpha", sem_alpha}, {"arc", sem_arc}});
        } else if (*cls) {
            const auto spec = make_spec(cls_spiral);
            ClassifyOptions copts;
            copts.margin = cls_margin;
            const auto v = classify_spiral(spec, cls_s, copts);
            json sums = json::array();
            for (const auto& [j, value] : v.partial_sums) {
                sums.push_back({j, value});
            }
            emit({{"s", v.s},
                  {"verdict", to_string(v.verdict)},
                  {"analytic", v.analytic},
                  {"empirical", !v.analytic},
                  {"decay_exponent_fit", v.decay_exponent_fit},
                  {"partial_sums", sums},
                  {"rationale", v.rationale}},
                 "classify", [&] {
                     auto f = spiral_json(cls_spiral);
                     f["s"] = cls_s;
                     f["margin"] = cls_margin;
                     return f;
                 }());
        } else if (*rng) {
            const auto arc = io::read_arc(rng_arc);
            SandwichOptions sopts;
            sopts.slack = g.sandwich_slack;
            sopts.jobs = g.jobs;
            sopts.full_arc = !rng_per_ring_only;
            const auto report = sandwich_check(arc, rng_s, sopts);
            if (!rng_csv.empty()) {
                auto csv = open_output(rng_csv);
                csv << "j,phi_j,length_j,diam_j,V_j\n";
                for (const auto& r : report.per_ring) {
                    csv << r.j << ',' << io::format_number(r.phi_j) << ','
                        << io::format_number(r.length_j) << ',' << io::format_number(r.diam_j) << ','
                        << io::format_number(r.variation) << '\n';
                }
            }
            emit(sandwich_json(report), "rings",
                 {{"s", rng_s}, {"arc", rng_arc}, {"per_ring_only", rng_per_ring_only}});
        } else if (*gro) {
            const auto list = parse_list(gro_list);
            const auto report = growth_rate(SpiralSpec::polynomial(gro_p, 1, gro_m), gro_s, list, g.jobs);
            if (!gro_out.empty()) {
                auto csv = open_output(gro_out);
                csv << "J,value\n";
                for (std::size_t k = 0; k < list.size(); ++k) {
                    csv << list[k] << ',' << io::format_number(report.values[k]) << '\n';
                }
            }
            emit({{"s", gro_s},
                  {"J", report.turns},
                  {"values", report.values},
                  {"slope", report.slope},
                  {"log_slope", report.log_slope}},
                 "growth", {{"s", gro_s}, {"p", gro_p}, {"Jlist", gro_list}, {"samples_per_turn", gro_m}});
        } else if (*str) {
            const auto arc = io::read_arc(str_in);
            const StretchMap map{str_beta};
            const auto mapped = apply_stretch(map, arc);
            io::write_arc(str_out, mapped);
            emit({{"beta", str_beta}, {"map", map.description()}, {"samples", mapped.size()}, {"out", str_out}},
                 "stretch", {{"beta", str_beta}, {"arc", str_in}});
        } else if (*est) {
            est_opts.seed = g.seed;
            const auto src = io::read_arc(est_src);
            const auto dst = io::read_arc(est_dst);
            const auto e = empirical_holder(src, dst, alpha_grid(est_step), est_opts);
            emit({{"best_alpha", e.best_alpha},
                  {"alphas", e.alphas},
                  {"seminorms", e.seminorms},
                  {"reference_seminorms", e.reference_seminorms},
                  {"blowup", e.blowup},
                  {"pairs_used", e.pairs_used},
                  {"all_pairs", e.all_pairs},
                  {"blowup_factor", e.blowup_factor},
                  {"seed", e.seed}},
                 "holder-est",
                 {{"src", est_src}, {"dst", est_dst}, {"alpha_step", est_step}, {"max_pairs", est_opts.max_pairs}});
        } else if (*bnd) {
            const auto b = exponent_bounds(bnd_p, bnd_q, bnd_r, bnd_se);
            print_bounds_table(err, b);
            emit(bounds_json(b), "bounds", {{"p", bnd_p}, {"q", bnd_q}, {"r", bnd_r}, {"se", bnd_se}});
        } else if (*rep) {
            auto doc = run_report(g);
            doc["config"] = snapshot("report", {{"out", rep_out}});
            doc["version"] = version;
            if (!rep_out.empty()) {
                auto file = open_output(rep_out);
                file << doc.dump(2) << '\n';
            }
            out << doc.dump(2) << '\n';
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace holder::cli
