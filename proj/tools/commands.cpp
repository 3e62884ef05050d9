#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "lovasz/bounds.hpp"
#include "lovasz/random.hpp"
#include "lovasz/reciprocal.hpp"
#include "lovasz/serialize.hpp"
#include "lovasz/theta.hpp"
#include "lovasz/walkgen.hpp"

namespace lovasz::cli {

namespace {

// Bad input file or flag combination; reported verbatim, exit 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GraphSource {
    std::string named;
    int n = -1;
    int k = -1;
    std::vector<std::string> inputs;
    std::string input_format = "auto";
};

struct Common {
    std::string output;
    std::uint64_t seed = 1;
    int jobs = 1;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_edge_list(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
        return c == '#' || (c >= '0' && c <= '9') || c == '-';
    }
    return false;
}

std::vector<NamedGraph> load_file(const std::string& path, const std::string& format) {
    const std::string text = read_all(path);
    std::string kind = format;
    if (kind == "auto") {
        const bool g6_ext = path.ends_with(".g6") || path.ends_with(".graph6");
        kind = g6_ext || !looks_like_edge_list(text) ? "graph6" : "edges";
    }
    std::vector<NamedGraph> out;
    if (kind == "edges") {
        if (text.find_first_not_of(" \t\r\n") == std::string::npos) return out;
        try {
            out.push_back({path, parse_edge_list(text)});
        } catch (const ParseError& e) {
            throw InputError(path + ":" + std::to_string(e.offset()) + ": " + e.what());
        }
        return out;
    }
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back({path + ":" + std::to_string(lineno), parse_graph6(line)});
        } catch (const ParseError& e) {
            throw InputError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::vector<NamedGraph> load_graphs(const GraphSource& src) {
    std::vector<NamedGraph> out;
    if (!src.named.empty()) {
        std::map<std::string, int> params;
        if (src.n >= 0) params["n"] = src.n;
        if (src.k >= 0) params["k"] = src.k;
        out.push_back({src.named, generate_named(src.named, params)});
    }
    for (const auto& path : src.inputs) {
        auto more = load_file(path, src.input_format);
        std::move(more.begin(), more.end(), std::back_inserter(out));
    }
    return out;
}

void add_source_options(CLI::App* cmd, GraphSource& src) {
    cmd->add_option("inputs", src.inputs, "graph6 files (one graph per line) or edge-list files; - for stdin");
    cmd->add_option("--named", src.named, "generator: golomb, petersen, kneser, empty, complete, cycle, path");
    cmd->add_option("--n", src.n, "order parameter for --named");
    cmd->add_option("--k", src.k, "second parameter for --named kneser");
    cmd->add_option("--input-format", src.input_format, "input format")
        ->check(CLI::IsMember({"auto", "graph6", "edges"}));
}

void add_common_options(CLI::App* cmd, Common& c) {
    cmd->add_option("-o,--output", c.output, "write to this file instead of stdout");
    cmd->add_option("--seed", c.seed, "seed for every randomized choice");
    cmd->add_option("--jobs", c.jobs, "worker threads across graphs")->check(CLI::PositiveNumber);
}

// Runs f(i) for i < count on `jobs` threads; results keep index order.
template <class F>
std::vector<std::string> parallel_map(std::size_t count, int jobs, F f) {
    std::vector<std::string> results(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                results[i] = f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, jobs)), count);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw InputError(path + ": cannot open for writing");
        }
        os_ = path.empty() ? &fallback : &file_;
    }
    std::ostream& operator*() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

// bounds ---------------------------------------------------------------

struct BoundsFlags {
    GraphSource src;
    Common common;
    bool alpha_oracle = false;
    std::string format = "json";
};

std::string csv_opt(const std::optional<double>& v) { return v ? fmt(*v) : ""; }

int cmd_bounds(const BoundsFlags& f, std::ostream& out) {
    const auto graphs = load_graphs(f.src);
    for (const auto& g : graphs)
        if (f.alpha_oracle && g.graph.order() > 20)
            throw InputError(g.label + ": --alpha-oracle is limited to n <= 20");

    std::vector<BoundReport> reports(graphs.size());
    const auto lines = parallel_map(graphs.size(), f.common.jobs, [&](std::size_t i) {
        const auto& g = graphs[i].graph;
        std::optional<int> alpha;
        if (f.alpha_oracle) alpha = independence_number(g);
        reports[i] = report(g, alpha);
        const auto& r = reports[i];
        if (f.format == "json") return to_line(to_json(r));
        std::optional<double> cf, cond;
        if (r.closed_form) {
            cf = r.closed_form->value;
            cond = r.closed_form->condition;
        }
        return graphs[i].label + "," + std::to_string(r.n) + "," + csv_opt(r.hoffman_regular) + "," +
               fmt(r.walkgen_bound) + "," + csv_opt(cf) + "," + csv_opt(cond) + "," + fmt(r.laplacian_bound) +
               "," + (r.dominance_ok ? "true" : "false") + "," +
               (r.independence_witness ? std::to_string(*r.independence_witness) : "");
    });

    Output o(f.common.output, out);
    if (f.format == "csv")
        *o << "label,n,hoffman,walkgen,closed_form,closed_form_condition,laplacian,dominance_ok,alpha_witness\n";
    for (const auto& l : lines) *o << l << '\n';
    const bool ok = std::all_of(reports.begin(), reports.end(),
                                [](const BoundReport& r) { return r.dominance_ok && r.witness_ok; });
    return ok ? kExitOk : kExitVerifyFailed;
}

// theta ----------------------------------------------------------------

struct ThetaFlags {
    GraphSource src;
    Common common;
    ThetaOptions opts;
};

int cmd_theta(const ThetaFlags& f, std::ostream& out) {
    const auto graphs = load_graphs(f.src);
    for (const auto& g : graphs)
        if (f.opts.alpha_oracle && g.graph.order() > 20)
            throw InputError(g.label + ": --alpha-oracle is limited to n <= 20");

    std::vector<char> sound(graphs.size(), 1);
    const auto lines = parallel_map(graphs.size(), f.common.jobs, [&](std::size_t i) {
        const auto est = minimize_theta(graphs[i].graph, f.opts);
        if (est.lower && *est.lower > est.upper + 1e-6) sound[i] = 0;
        return to_line(to_json(est));
    });
    Output o(f.common.output, out);
    for (const auto& l : lines) *o << l << '\n';
    return std::all_of(sound.begin(), sound.end(), [](char s) { return s; }) ? kExitOk : kExitVerifyFailed;
}

// verify ---------------------------------------------------------------

struct VerifyFlags {
    std::string suite;
    GraphSource src;
    Common common;
    int random = -1;
    std::optional<double> tol;
};

struct SuiteResult {
    std::vector<std::string> lines;
    int passed = 0;
    int total = 0;
};

Json check_line(const std::string& suite, const std::string& label, bool pass) {
    Json j = Json::object();
    j["suite"] = suite;
    j["case"] = label;
    j["pass"] = pass;
    return j;
}

void tally(SuiteResult& r, const std::vector<std::string>& lines, const std::vector<char>& pass) {
    r.lines.insert(r.lines.end(), lines.begin(), lines.end());
    for (char p : pass) r.passed += p;
    r.total += static_cast<int>(pass.size());
}

int count_or(int random, int fallback) { return random >= 0 ? random : fallback; }

std::vector<NamedGraph> corpus_for(const VerifyFlags& f) {
    if (!f.src.named.empty() || !f.src.inputs.empty()) return load_graphs(f.src);
    return default_corpus(count_or(f.random, 500), f.common.seed);
}

SuiteResult suite_duality(const VerifyFlags& f) {
    const int k = count_or(f.random, 500);
    const double tol = f.tol.value_or(1e-8);
    Rng rng(f.common.seed);
    std::vector<ReciprocalSum> mixed, spread;
    for (int i = 0; i < k; ++i) mixed.push_back(random_reciprocal(rng, true));
    for (int i = 0; i < k; ++i) spread.push_back(random_reciprocal(rng, i % 2 == 0));

    SuiteResult r;
    std::vector<char> pass(mixed.size());
    auto lines = parallel_map(mixed.size(), f.common.jobs, [&](std::size_t i) {
        const auto rep = verify_duality(mixed[i], tol);
        pass[i] = rep.duality_holds;
        Json j = check_line("duality", "random#" + std::to_string(i), rep.duality_holds);
        j["critical_points"] = rep.critical_points.size();
        j["in_strip"] = rep.critical_points_in_strip;
        j["max_critical"] = rep.maximal ? Json(rep.maximal->value) : Json(nullptr);
        j["strip_min"] = rep.strip_min ? Json(rep.strip_min->second) : Json(nullptr);
        return to_line(j);
    });
    tally(r, lines, pass);

    std::vector<char> iff(spread.size());
    lines = parallel_map(spread.size(), f.common.jobs, [&](std::size_t i) {
        const bool predicted = has_critical_points(spread[i]);
        const bool found = !enumerate_critical_points(spread[i]).empty();
        iff[i] = predicted == found;
        Json j = check_line("duality-iff", "random#" + std::to_string(i), iff[i]);
        j["predicted"] = predicted;
        j["found"] = found;
        return to_line(j);
    });
    tally(r, lines, iff);
    return r;
}

SuiteResult suite_scaling(const VerifyFlags& f) {
    const int k = count_or(f.random, 100);
    const double tol = f.tol.value_or(1e-6);
    Rng rng(f.common.seed);
    std::vector<WeightedAdjacency> as;
    for (int i = 0; i < k; ++i) as.push_back(random_weighted_instance(rng));

    SuiteResult r;
    std::vector<char> pass(as.size());
    const auto lines = parallel_map(as.size(), f.common.jobs, [&](std::size_t i) {
        const auto a = as[i].matrix();
        const double lhs = optimal_scaling(a).value;
        const double rhs = minimize_on_spectral_interval(a).value;
        pass[i] = std::abs(lhs - rhs) <= tol;
        Json j = check_line("scaling", "random#" + std::to_string(i), pass[i]);
        j["n"] = a.dim();
        j["min_t"] = lhs;
        j["min_x"] = rhs;
        return to_line(j);
    });
    tally(r, lines, pass);
    return r;
}

std::vector<std::pair<std::string, std::pair<Graph, Graph>>> product_pairs() {
    auto named = [](const char* name, int n) { return generate_named(name, {{"n", n}}); };
    return {
        {"C5xC5", {named("cycle", 5), named("cycle", 5)}},
        {"K2xK2", {named("complete", 2), named("complete", 2)}},
        {"E2xE3", {named("empty", 2), named("empty", 3)}},
        {"C5xP4", {named("cycle", 5), named("path", 4)}},
        {"PetersenxK2", {generate_named("petersen"), named("complete", 2)}},
        {"C5xK3", {named("cycle", 5), named("complete", 3)}},
        {"P4xP4", {named("path", 4), named("path", 4)}},
        {"C7xK2", {named("cycle", 7), named("complete", 2)}},
        {"K3xE2", {named("complete", 3), named("empty", 2)}},
        {"GolombxK2", {generate_named("golomb"), named("complete", 2)}},
    };
}

SuiteResult suite_product(const VerifyFlags& f) {
    const double tol = f.tol.value_or(1e-8);
    const auto pairs = product_pairs();
    SuiteResult r;
    std::vector<char> pass(pairs.size());
    const auto lines = parallel_map(pairs.size(), f.common.jobs, [&](std::size_t i) {
        const auto& [g, h] = pairs[i].second;
        const auto rep = submultiplicativity_check(g, h, f.common.seed);
        pass[i] = rep.ok && rep.factorization_max_rel_error <= tol;
        Json j = check_line("product", pairs[i].first, pass[i]);
        j["lhs"] = rep.lhs;
        j["rhs"] = rep.rhs;
        j["factorization_checks"] = rep.factorization_checks;
        j["factorization_max_rel_error"] = rep.factorization_max_rel_error;
        return to_line(j);
    });
    tally(r, lines, pass);
    return r;
}

SuiteResult suite_dominance(const VerifyFlags& f) {
    const auto corpus = corpus_for(f);
    const double tol = f.tol.value_or(kDominanceTol);
    SuiteResult r;
    std::vector<char> pass(corpus.size());
    const auto lines = parallel_map(corpus.size(), f.common.jobs, [&](std::size_t i) {
        const auto& g = corpus[i].graph;
        const double w = walkgen_bound(g), l = laplacian_bound(g);
        pass[i] = w <= l + tol;
        Json j = check_line("dominance", corpus[i].label, pass[i]);
        j["walkgen"] = w;
        j["laplacian"] = l;
        return to_line(j);
    });
    tally(r, lines, pass);
    return r;
}

SuiteResult suite_optimizer(const VerifyFlags& f) {
    const double tol = f.tol.value_or(1e-7);
    std::vector<std::pair<std::string, DenseSymMatrix>> cases;
    for (auto& g : corpus_for(f)) cases.emplace_back(g.label, adjacency(g.graph));
    Rng rng(f.common.seed + 1);
    for (int i = 0; i < count_or(f.random, 100); ++i)
        cases.emplace_back("weighted#" + std::to_string(i), random_weighted_instance(rng).matrix());

    SuiteResult r;
    std::vector<char> pass(cases.size());
    const auto lines = parallel_map(cases.size(), f.common.jobs, [&](std::size_t i) {
        const auto& a = cases[i].second;
        Json j = check_line("optimizer", cases[i].first, false);
        try {
            const auto ov = extract_optimizer(a);
            const double target = a.frobenius_norm() <= kZeroMatrixNorm
                                      ? static_cast<double>(a.dim())
                                      : minimize_on_spectral_interval(a).value;
            const double scale = std::max(1.0, ov.norm_sq);
            const double orth = ov.residual_orth / (scale * std::max(1.0, a.frobenius_norm()));
            const double sphere = ov.residual_sphere / scale;
            const double gap = std::abs(ov.norm_sq - target);
            pass[i] = orth <= tol && sphere <= tol && gap <= 1e-6;
            j["pass"] = static_cast<bool>(pass[i]);
            j["residual_orth"] = orth;
            j["residual_sphere"] = sphere;
            j["norm_sq"] = ov.norm_sq;
            j["interval_min"] = target;
        } catch (const std::exception& e) {
            j["error"] = e.what();
        }
        return to_line(j);
    });
    tally(r, lines, pass);
    return r;
}

int cmd_verify(const VerifyFlags& f, std::ostream& out) {
    std::vector<std::pair<std::string, SuiteResult (*)(const VerifyFlags&)>> suites{
        {"duality", suite_duality},     {"scaling", suite_scaling},     {"product", suite_product},
        {"dominance", suite_dominance}, {"optimizer", suite_optimizer},
    };
    Output o(f.common.output, out);
    int passed = 0, total = 0;
    for (const auto& [name, run_suite] : suites) {
        if (f.suite != "all" && f.suite != name) continue;
        const auto r = run_suite(f);
        for (const auto& l : r.lines) *o << l << '\n';
        Json summary = Json::object();
        summary["suite"] = name;
        summary["passed"] = r.passed;
        summary["total"] = r.total;
        *o << to_line(summary) << '\n';
        passed += r.passed;
        total += r.total;
    }
    if (f.suite == "all") {
        Json summary = Json::object();
        summary["suite"] = "all";
        summary["passed"] = passed;
        summary["total"] = total;
        *o << to_line(summary) << '\n';
    }
    return passed == total ? kExitOk : kExitVerifyFailed;
}

// plot -----------------------------------------------------------------

struct PlotFlags {
    GraphSource src;
    Common common;
    int samples = 1000;
    std::optional<double> from, to;
};

int cmd_plot(const PlotFlags& f, std::ostream& out) {
    const auto graphs = load_graphs(f.src);
    if (graphs.size() != 1)
        throw InputError("plot: expected exactly one graph, got " + std::to_string(graphs.size()));
    const auto& g = graphs.front().graph;
    const auto a = adjacency(g);
    const auto s = eig_sym(a);
    const auto w = build(s);

    double lo = -1.0, hi = 1.0;
    std::optional<double> inv_n, inv_1;
    if (g.size() > 0) {
        inv_n = 1.0 / s.lambda_min();
        inv_1 = 1.0 / s.lambda_max();
        const double span = *inv_1 - *inv_n;
        lo = *inv_n - 0.5 * span;
        hi = *inv_1 + 0.5 * span;
    }
    lo = f.from.value_or(lo);
    hi = f.to.value_or(hi);
    if (!(lo < hi)) throw InputError("plot: need --from < --to");

    Output o(f.common.output, out);
    *o << "# label," << graphs.front().label << '\n';
    *o << "# n," << g.order() << '\n';
    *o << "# lambda_n_inv," << (inv_n ? fmt(*inv_n) : "") << '\n';
    *o << "# lambda_1_inv," << (inv_1 ? fmt(*inv_1) : "") << '\n';
    if (g.size() > 0) {
        const auto m = minimize_on_subinterval(a, *inv_n, 0.0);
        *o << "# bound_x," << fmt(*m.x_star) << '\n';
        *o << "# bound," << fmt(m.value) << '\n';
    } else {
        *o << "# bound," << fmt(g.order()) << '\n';
    }
    const auto f_rs = ReciprocalSum::from_walkgen(w);
    if (!f_rs.is_constant()) {
        const auto crit = enumerate_critical_points(f_rs);
        for (const auto& c : crit) *o << "# critical," << fmt(c.x) << ',' << fmt(c.value) << '\n';
        if (!crit.empty()) {
            const auto best = std::max_element(crit.begin(), crit.end(), [](const auto& p, const auto& q) {
                return p.value < q.value;
            });
            *o << "# maximal_critical," << fmt(best->x) << ',' << fmt(best->value) << '\n';
        }
    }
    *o << "x,W\n";
    for (const auto& [x, y] : sample(w, lo, hi, f.samples)) *o << fmt(x) << ',' << (y ? fmt(*y) : "") << '\n';
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Independence-number and theta bounds from walk-generating functions", "lovasz"};
    app.require_subcommand(1);

    BoundsFlags bf;
    auto* bounds = app.add_subcommand("bounds", "spectral bounds per graph, as JSON lines");
    add_source_options(bounds, bf.src);
    add_common_options(bounds, bf.common);
    bounds->add_flag("--alpha-oracle", bf.alpha_oracle, "attach the exact independence number (n <= 20)");
    bounds->add_option("--format", bf.format, "output format")->check(CLI::IsMember({"json", "csv"}));

    ThetaFlags tf;
    auto* theta = app.add_subcommand("theta", "subgradient estimate of theta, as JSON lines");
    add_source_options(theta, tf.src);
    add_common_options(theta, tf.common);
    theta->add_flag("--alpha-oracle", tf.opts.alpha_oracle, "attach the exact independence number (n <= 20)");
    theta->add_option("--tol", tf.opts.stall_tol, "stop when the best value improves less than this per window");
    theta->add_option("--window", tf.opts.stall_window, "stall window in iterations")->check(CLI::PositiveNumber);
    theta->add_option("--max-iter", tf.opts.max_iterations, "iteration cap")->check(CLI::NonNegativeNumber);

    VerifyFlags vf;
    auto* verify = app.add_subcommand("verify", "property suites; one JSON line per check plus a summary");
    verify->add_option("suite", vf.suite, "duality, scaling, product, dominance, optimizer or all")
        ->required()
        ->check(CLI::IsMember({"duality", "scaling", "product", "dominance", "optimizer", "all"}));
    add_source_options(verify, vf.src);
    add_common_options(verify, vf.common);
    verify->add_option("--random", vf.random, "number of random instances")->check(CLI::NonNegativeNumber);
    verify->add_option("--tol", vf.tol, "override the suite tolerance");

    PlotFlags pf;
    auto* plot = app.add_subcommand("plot", "CSV samples of the walk-generating function");
    add_source_options(plot, pf.src);
    add_common_options(plot, pf.common);
    plot->add_option("--samples", pf.samples, "number of samples")->check(CLI::PositiveNumber);
    plot->add_option("--from", pf.from, "left end of the plotted range");
    plot->add_option("--to", pf.to, "right end of the plotted range");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*bounds) return cmd_bounds(bf, out);
        if (*theta) return cmd_theta(tf, out);
        if (*verify) return cmd_verify(vf, out);
        return cmd_plot(pf, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
}

}  // namespace lovasz::cli
