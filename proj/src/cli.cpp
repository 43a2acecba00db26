#include "equidist/cli.hpp"

#include "equidist/analysis.hpp"
#include "equidist/discrepancy.hpp"
#include "equidist/experiments.hpp"
#include "equidist/gcdsums.hpp"
#include "equidist/parallel.hpp"
#include "equidist/sequences.hpp"
#include "equidist/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace equidist::cli {

namespace {

using serialize::Json;

Json config_json(const RunConfig& cfg) {
    Json j;
    j["version"] = kVersionTag;
    j["command"] = cfg.command;
    j["kind"] = cfg.kind;
    j["format"] = cfg.format;
    j["seed"] = cfg.seed;
    j["workers"] = cfg.workers;
    Json params;
    params["f"] = cfg.f_name;
    params["op"] = cfg.op;
    params["x"] = cfg.x_text;
    params["points"] = cfg.points_path;
    params["psi"] = cfg.psi_path;
    params["set"] = cfg.set_tokens;
    params["coeffs"] = cfg.coeffs;
    params["Ns"] = cfg.Ns;
    params["m"] = cfg.m_text;
    params["n"] = cfg.n_text;
    params["theta"] = cfg.theta;
    params["N"] = cfg.N;
    params["M"] = cfg.M;
    params["K"] = cfg.K;
    params["J"] = cfg.J;
    params["H"] = cfg.H;
    params["h"] = cfg.h;
    params["alpha"] = cfg.alpha;
    params["eps"] = cfg.eps;
    params["C"] = cfg.C;
    params["base"] = cfg.base;
    params["grid"] = cfg.grid;
    params["exact"] = cfg.exact_mode;
    params["exponent"] = cfg.exponent;
    params["iters"] = cfg.iters;
    params["restarts"] = cfg.restarts;
    params["max_element"] = cfg.max_element;
    j["params"] = std::move(params);
    return j;
}

bool parse_number_token(const std::string& text, HighPrecisionReal& out, std::string& err) {
    try {
        out = HighPrecisionReal::parse(text);
        return true;
    } catch (const std::exception& e) {
        err = std::string("bad number '") + text + "': " + e.what();
        return false;
    }
}

bool parse_set(const std::vector<std::string>& tokens, std::vector<BigInt>& out,
               std::string& err) {
    try {
        for (const auto& t : tokens) out.emplace_back(t);
        return true;
    } catch (const std::exception&) {
        err = "bad --set entry (expect positive integers)";
        return false;
    }
}

analysis::PeriodicBVFunction make_function(const std::string& name) {
    if (name == "sawtooth") return analysis::PeriodicBVFunction::sawtooth();
    if (name == "zero") return analysis::PeriodicBVFunction::zero();
    if (name.rfind("indicator:", 0) == 0) {
        std::string rest = name.substr(10);
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("indicator needs 'indicator:a,b'");
        BigRational a = HighPrecisionReal::parse(rest.substr(0, comma)).value();
        BigRational b = HighPrecisionReal::parse(rest.substr(comma + 1)).value();
        return analysis::PeriodicBVFunction::centered_indicator(a, b);
    }
    throw std::invalid_argument("unknown function '" + name + "' (sawtooth | indicator:a,b | zero)");
}

sequences::DilationSequence make_dilation(const RunConfig& cfg, std::size_t needed) {
    if (!cfg.set_tokens.empty()) {
        std::vector<BigInt> terms;
        std::string err;
        if (!parse_set(cfg.set_tokens, terms, err)) throw std::invalid_argument(err);
        return sequences::DilationSequence(std::move(terms));
    }
    return sequences::DilationSequence::geometric(BigInt(cfg.theta), needed);
}

sequences::PointSet load_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read points file: " + path);
    return serialize::parse_points_csv(in);
}

// -- per-command handlers (payload JSON + optional CSV body) --------------------

struct Emission {
    Json payload;
    std::string csv;  // used when --format csv
};

Emission run_gen(const RunConfig& cfg) {
    HighPrecisionReal x;
    std::string err;
    auto need_x = [&]() {
        if (!parse_number_token(cfg.x_text, x, err)) throw std::invalid_argument(err);
    };
    if (cfg.kind == "kronecker") {
        need_x();
        auto P = sequences::kronecker_sequence(x, cfg.N);
        return {serialize::points_to_json(P), serialize::points_to_csv(P)};
    }
    if (cfg.kind == "dilated") {
        need_x();
        auto D = make_dilation(cfg, cfg.N);
        std::size_t n = cfg.N ? cfg.N : D.size();
        auto P = sequences::dilated_sequence(D, x, n);
        return {serialize::points_to_json(P), serialize::points_to_csv(P)};
    }
    if (cfg.kind == "power") {
        need_x();
        auto P = sequences::power_sequence(x, cfg.N);
        return {serialize::points_to_json(P), serialize::points_to_csv(P)};
    }
    if (cfg.kind == "geometric") {
        auto D = sequences::geometric_dilation(BigInt(cfg.theta), cfg.K);
        return {serialize::dilation_to_json(D), serialize::dilation_to_csv(D)};
    }
    if (cfg.kind == "champernowne") {
        auto s = sequences::champernowne(cfg.base, cfg.N);
        return {serialize::digits_to_json(s), serialize::digits_to_csv(s)};
    }
    if (cfg.kind == "copeland-erdos") {
        auto s = sequences::copeland_erdos(cfg.base, cfg.N);
        return {serialize::digits_to_json(s), serialize::digits_to_csv(s)};
    }
    if (cfg.kind == "digits") {
        need_x();
        auto s = sequences::digits_of(x, cfg.base, cfg.N);
        return {serialize::digits_to_json(s), serialize::digits_to_csv(s)};
    }
    throw std::invalid_argument("gen: unknown --kind '" + cfg.kind + "'");
}

Emission run_disc(const RunConfig& cfg) {
    auto P = load_points(cfg.points_path);
    auto d = discrepancy::discrepancies(P);
    Json j;
    j["N"] = d.N;
    j["star"] = d.star;
    j["extreme"] = d.extreme;
    return {j, serialize::scalar_report_csv(j)};
}

Emission run_weyl(const RunConfig& cfg) {
    Json j;
    if (!cfg.points_path.empty()) {
        auto P = load_points(cfg.points_path);
        auto w = discrepancy::weyl_sum(P, cfg.h);
        j["h"] = w.h;
        j["N"] = w.N;
        j["re"] = w.value.real();
        j["im"] = w.value.imag();
        j["abs"] = std::abs(w.value);
    } else {
        HighPrecisionReal x;
        std::string err;
        if (!parse_number_token(cfg.x_text, x, err)) throw std::invalid_argument(err);
        auto P = sequences::kronecker_sequence(x, cfg.N);
        auto direct = discrepancy::weyl_sum(P, cfg.h);
        auto closed = discrepancy::weyl_sum_closed_form(x, cfg.h, cfg.N);
        j["h"] = cfg.h;
        j["N"] = cfg.N;
        j["re_direct"] = direct.value.real();
        j["im_direct"] = direct.value.imag();
        j["re_closed"] = closed.real();
        j["im_closed"] = closed.imag();
    }
    return {j, serialize::scalar_report_csv(j)};
}

Emission run_bound(const RunConfig& cfg) {
    Json j;
    if (cfg.kind == "erdos-turan") {
        auto P = load_points(cfg.points_path);
        double bound = discrepancy::erdos_turan_bound(P, static_cast<unsigned>(cfg.H));
        j["H"] = cfg.H;
        j["bound"] = bound;
        j["star"] = discrepancy::star_discrepancy(P);
    } else if (cfg.kind == "koksma") {
        auto P = load_points(cfg.points_path);
        auto f = make_function(cfg.f_name);
        auto [lhs, rhs] = discrepancy::koksma_bound(f, P);
        j["lhs"] = lhs;
        j["rhs"] = rhs;
        j["variation"] = f.variation();
    } else if (cfg.kind == "schmidt") {
        j["N"] = cfg.N;
        j["value"] = discrepancy::schmidt_reference(cfg.N);
    } else if (cfg.kind == "gal-envelope") {
        j["N"] = cfg.N;
        j["value"] = gcdsums::gal_envelope(cfg.N);
    } else if (cfg.kind == "g-alpha") {
        j["alpha"] = cfg.alpha;
        j["N"] = cfg.N;
        j["value"] = gcdsums::g_alpha(cfg.alpha, cfg.N);
    } else if (cfg.kind == "dyer-harman") {
        j["N"] = cfg.N;
        j["value"] = gcdsums::dyer_harman_bound(cfg.N);
    } else if (cfg.kind == "abs") {
        j["alpha"] = cfg.alpha;
        j["N"] = cfg.N;
        j["eps"] = cfg.eps;
        j["C"] = cfg.C;
        j["value"] = gcdsums::abs_bound(cfg.alpha, cfg.N, cfg.eps, cfg.C);
    } else {
        throw std::invalid_argument("bound: unknown --kind '" + cfg.kind + "'");
    }
    return {j, serialize::scalar_report_csv(j)};
}

Emission run_analyze(const RunConfig& cfg) {
    auto f = make_function(cfg.f_name);
    Json j;
    if (cfg.op == "info") {
        Json breaks = Json::array(), slopes = Json::array(), values = Json::array();
        for (const auto& b : f.breakpoints()) breaks.push_back(to_double(b));
        for (std::size_t i = 0; i < f.piece_count(); ++i) {
            slopes.push_back(to_double(f.slopes()[i]));
            values.push_back(to_double(f.slopes()[i] * f.breakpoints()[i] + f.intercepts()[i]));
        }
        j["breakpoints"] = std::move(breaks);
        j["slopes"] = std::move(slopes);
        j["values"] = std::move(values);
        j["mean"] = f.mean();
        j["variation"] = f.variation();
    } else if (cfg.op == "fourier") {
        std::vector<double> a, b;
        f.fourier_coefficients(cfg.J, a, b);
        j["J"] = cfg.J;
        j["a"] = std::vector<double>(a.begin() + 1, a.end());
        j["b"] = std::vector<double>(b.begin() + 1, b.end());
    } else if (cfg.op == "eval") {
        HighPrecisionReal x;
        std::string err;
        if (!parse_number_token(cfg.x_text, x, err)) throw std::invalid_argument(err);
        j["x"] = x.to_double();
        j["value"] = to_double(f.evaluate_exact(x.value()));
    } else if (cfg.op == "l2max") {
        auto D = make_dilation(cfg, cfg.N);
        std::size_t n = cfg.N ? cfg.N : D.size();
        analysis::CoefficientList c = cfg.coeffs;
        if (c.empty()) c.assign(n, 1.0);
        analysis::QuadratureSpec Q;
        Q.mode = cfg.exact_mode ? analysis::QuadratureSpec::Mode::ExactPiecewise
                                : analysis::QuadratureSpec::Mode::Grid;
        Q.grid = cfg.grid;
        j["N"] = n;
        j["value"] = analysis::l2_maximal_norm(f, D, c, n, Q);
    } else if (cfg.op == "rm-check") {
        auto D = make_dilation(cfg, cfg.N);
        analysis::CoefficientList c = cfg.coeffs;
        if (c.empty()) c.assign(D.size(), 1.0);
        analysis::QuadratureSpec Q;
        Q.grid = cfg.grid;
        auto [lhs, rhs] = analysis::rm_check(D, c, Q);
        j["lhs"] = lhs;
        j["rhs"] = rhs;
    } else {
        throw std::invalid_argument("analyze: unknown --op '" + cfg.op + "'");
    }
    return {j, serialize::scalar_report_csv(j)};
}

Emission run_gcdsum(const RunConfig& cfg) {
    Json j;
    if (cfg.kind == "sum") {
        std::vector<BigInt> elems;
        std::string err;
        if (!parse_set(cfg.set_tokens, elems, err)) throw std::invalid_argument(err);
        gcdsums::IntegerSet S(std::move(elems));
        auto v = gcdsums::gcd_sum_alpha(S, cfg.alpha);
        if (v.exact) {
            j["value"] = serialize::rational_to_decimal_string(*v.exact);
            j["exact"] = true;
        } else {
            j["value"] = v.value;
            j["exact"] = false;
        }
    } else if (cfg.kind == "franel") {
        BigRational v = gcdsums::franel_landau(BigInt(cfg.m_text), BigInt(cfg.n_text));
        j["value"] = serialize::rational_to_decimal_string(v);
        j["exact"] = true;
    } else if (cfg.kind == "sawtooth-l2") {
        auto D = make_dilation(cfg, cfg.N);
        std::size_t n = cfg.N ? cfg.N : D.size();
        BigRational v = gcdsums::sawtooth_sum_l2(D, n);
        j["value"] = serialize::rational_to_decimal_string(v);
        j["exact"] = true;
    } else if (cfg.kind == "pair-correlation") {
        auto f = make_function(cfg.f_name);
        BigRational v = gcdsums::pair_correlation_exact(f, BigInt(cfg.m_text), BigInt(cfg.n_text));
        j["value"] = serialize::rational_to_decimal_string(v);
        j["exact"] = true;
    } else if (cfg.kind == "duffin") {
        std::ifstream in(cfg.psi_path);
        if (!in) throw std::runtime_error("cannot read psi table: " + cfg.psi_path);
        std::vector<double> psi{0.0};
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) psi.push_back(std::stod(line));
        std::size_t n = cfg.N ? cfg.N : psi.size() - 1;
        j["N"] = n;
        j["value"] = gcdsums::duffin_schaeffer_partial(psi, n);
        j["exact"] = false;
    } else {
        throw std::invalid_argument("gcdsum: unknown --kind '" + cfg.kind + "'");
    }
    return {j, serialize::scalar_report_csv(j)};
}

Emission run_search(const RunConfig& cfg) {
    gcdsums::SearchConfig sc;
    sc.seed = cfg.seed;
    sc.restarts = cfg.restarts;
    sc.max_iterations = cfg.iters;
    sc.max_element = cfg.max_element;
    auto r = gcdsums::extremal_search(cfg.N, cfg.alpha, sc);
    Json j;
    Json set = Json::array();
    for (const auto& e : r.best.elements()) set.push_back(e.str());
    j["set"] = std::move(set);
    j["value"] = r.value;
    if (r.exact) j["exact_value"] = serialize::rational_to_decimal_string(*r.exact);
    j["iterations"] = r.iterations;
    return {j, serialize::scalar_report_csv(j)};
}

Emission run_experiment(const RunConfig& cfg) {
    if (cfg.kind == "clt") {
        auto D = make_dilation(cfg, cfg.N);
        experiments::RngSpec rng{cfg.seed, 0};
        auto r = experiments::clt_experiment(D, cfg.N, cfg.M, rng);
        Json j;
        j["N"] = cfg.N;
        j["M"] = cfg.M;
        j["ks"] = r.ks;
        j["lacunary_warning"] = r.lacunary_warning;
        j["seed"] = cfg.seed;
        return {j, serialize::scalar_report_csv(j)};
    }

    std::size_t maxN = cfg.Ns.empty() ? 0 : cfg.Ns.back();
    auto D = make_dilation(cfg, maxN);
    HighPrecisionReal x;
    if (!cfg.x_text.empty()) {
        std::string err;
        if (!parse_number_token(cfg.x_text, x, err)) throw std::invalid_argument(err);
    } else {
        experiments::RngSpec rng{cfg.seed, 0};
        auto engine = rng.engine();
        x = experiments::sample_fixed_point(engine,
                                            experiments::required_fractional_bits(D, maxN));
    }
    experiments::TrajectoryReport report;
    if (cfg.kind == "lil-sum") {
        report = experiments::lil_sum_trajectory(D, x, cfg.Ns);
    } else if (cfg.kind == "lil-disc") {
        report = experiments::lil_discrepancy_trajectory(D, x, cfg.Ns);
    } else if (cfg.kind == "baker") {
        auto exp = cfg.exponent == "1/2" ? experiments::BakerExponent::Half
                                         : experiments::BakerExponent::ThreeHalves;
        report = experiments::baker_ratio(D, x, cfg.Ns, cfg.eps, exp);
    } else {
        throw std::invalid_argument("experiment: unknown --kind '" + cfg.kind + "'");
    }
    return {serialize::trajectory_to_json(report, cfg.seed),
            serialize::trajectory_to_csv(report)};
}

void emit(const RunConfig& cfg, const Emission& e) {
    std::string body;
    if (cfg.format == "csv") {
        body = e.csv;
    } else {
        Json out;
        out["config"] = config_json(cfg);
        for (auto it = e.payload.begin(); it != e.payload.end(); ++it) out[it.key()] = *it;
        body = out.dump();
        body += '\n';
    }
    if (cfg.out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write output file: " + cfg.out_path);
        f << body;
    }
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--set", cfg.set_tokens)->delimiter(',');
    sub->add_option("--points", cfg.points_path);
    sub->add_option("--psi", cfg.psi_path);
    sub->add_option("--alpha", cfg.alpha);
    sub->add_option("--eps", cfg.eps);
    sub->add_option("--C", cfg.C);
    sub->add_option("--theta", cfg.theta);
    sub->add_option("--seed", cfg.seed);
    sub->add_option("--Ns", cfg.Ns)->delimiter(',');
    sub->add_option("--H", cfg.H);
    sub->add_option("--N", cfg.N);
    sub->add_option("--M", cfg.M);
    sub->add_option("--K", cfg.K);
    sub->add_option("--J", cfg.J);
    sub->add_option("--h", cfg.h);
    sub->add_option("--m", cfg.m_text);
    sub->add_option("--n", cfg.n_text);
    sub->add_option("--x", cfg.x_text);
    sub->add_option("--f", cfg.f_name);
    sub->add_option("--op", cfg.op);
    sub->add_option("--kind", cfg.kind);
    sub->add_option("--base", cfg.base);
    sub->add_option("--grid", cfg.grid);
    sub->add_flag("--exact", cfg.exact_mode);
    sub->add_option("--coeffs", cfg.coeffs)->delimiter(',');
    sub->add_option("--exponent", cfg.exponent);
    sub->add_option("--iters", cfg.iters);
    sub->add_option("--restarts", cfg.restarts);
    sub->add_option("--max-element", cfg.max_element);
    sub->add_option("--format", cfg.format);
    sub->add_option("--out", cfg.out_path);
    sub->add_option("--workers", cfg.workers);
}

}  // namespace

std::vector<std::string> validate(const RunConfig& cfg) {
    std::vector<std::string> errors;
    auto need = [&](bool ok, const std::string& msg) {
        if (!ok) errors.push_back(msg);
    };

    need(cfg.format == "json" || cfg.format == "csv", "format must be json or csv");

    const std::string& c = cfg.command;
    if (c == "gen") {
        need(!cfg.kind.empty(), "gen requires --kind");
        if (cfg.kind == "kronecker" || cfg.kind == "power" || cfg.kind == "digits" ||
            cfg.kind == "champernowne" || cfg.kind == "copeland-erdos")
            need(cfg.N >= 1, "N must be >= 1");
        if (cfg.kind == "geometric") {
            need(cfg.theta >= 2, "theta must be >= 2");
            need(cfg.K >= 1, "K must be >= 1");
        }
        if (cfg.kind == "champernowne" || cfg.kind == "copeland-erdos" || cfg.kind == "digits")
            need(cfg.base >= 2, "base must be >= 2");
        if (cfg.kind == "kronecker" || cfg.kind == "dilated" || cfg.kind == "power" ||
            cfg.kind == "digits")
            need(!cfg.x_text.empty(), "missing --x");
        if (cfg.kind == "dilated")
            need(!cfg.set_tokens.empty() || cfg.theta >= 2,
                 "dilated needs --set or --theta >= 2");
    } else if (c == "disc") {
        need(!cfg.points_path.empty(), "disc requires --points");
    } else if (c == "weyl") {
        need(cfg.h != 0, "h must be nonzero");
        need(!cfg.points_path.empty() || (!cfg.x_text.empty() && cfg.N >= 1),
             "weyl requires --points, or --x with --N");
    } else if (c == "bound") {
        if (cfg.kind == "erdos-turan") {
            need(cfg.H >= 1, "H must be >= 1");
            need(!cfg.points_path.empty(), "erdos-turan requires --points");
        } else if (cfg.kind == "koksma") {
            need(!cfg.points_path.empty(), "koksma requires --points");
        } else if (cfg.kind == "schmidt") {
            need(cfg.N >= 2, "N must be >= 2");
        } else if (cfg.kind == "gal-envelope" || cfg.kind == "dyer-harman") {
            need(cfg.N >= 16, "N >= 16 required");
        } else if (cfg.kind == "g-alpha" || cfg.kind == "abs") {
            need(cfg.N >= 16, "N >= 16 required");
            need(cfg.alpha >= 0.5 && cfg.alpha < 1.0, "alpha must lie in [1/2,1)");
            if (cfg.kind == "abs") {
                need(cfg.eps > 0.0, "eps must be > 0");
                need(cfg.C > 0.0, "C must be > 0");
            }
        } else {
            errors.push_back("bound: unknown --kind '" + cfg.kind + "'");
        }
    } else if (c == "analyze") {
        if (cfg.op == "fourier") need(cfg.J >= 1, "J must be >= 1");
        if (cfg.op == "eval") need(!cfg.x_text.empty(), "missing --x");
        if (cfg.op == "l2max" || cfg.op == "rm-check")
            need(cfg.grid >= (std::size_t(1) << 10), "grid must be >= 2^10");
    } else if (c == "gcdsum") {
        if (cfg.kind == "sum") {
            need(!cfg.set_tokens.empty(), "gcdsum requires --set");
            need(cfg.alpha >= 0.5 && cfg.alpha <= 1.0, "alpha must lie in [1/2,1]");
        } else if (cfg.kind == "duffin") {
            need(!cfg.psi_path.empty(), "duffin requires --psi");
        }
    } else if (c == "search") {
        need(cfg.N >= 2, "N must be >= 2");
        need(cfg.alpha >= 0.5 && cfg.alpha <= 1.0, "alpha must lie in [1/2,1]");
        need(cfg.iters >= 1 && cfg.restarts >= 1, "iteration budget must be >= 1");
    } else if (c == "experiment") {
        if (cfg.kind == "clt") {
            need(cfg.N >= 1, "N must be >= 1");
            need(cfg.M >= 1, "M must be >= 1");
        } else if (cfg.kind == "lil-sum" || cfg.kind == "lil-disc" || cfg.kind == "baker") {
            need(!cfg.Ns.empty(), "missing --Ns");
            for (std::size_t n : cfg.Ns)
                if (n < 16) {
                    errors.push_back("N >= 16 required for log log normalizers");
                    break;
                }
            for (std::size_t i = 1; i < cfg.Ns.size(); ++i)
                if (cfg.Ns[i] <= cfg.Ns[i - 1]) {
                    errors.push_back("Ns must be strictly increasing");
                    break;
                }
            if (cfg.kind == "baker") {
                need(cfg.eps > 0.0, "eps must be > 0");
                need(cfg.exponent == "3/2" || cfg.exponent == "1/2",
                     "exponent must be 3/2 or 1/2");
            }
        } else {
            errors.push_back("experiment: unknown --kind '" + cfg.kind + "'");
        }
    }
    return errors;
}

int dispatch(const std::vector<std::string>& argv) {
    RunConfig cfg;
    CLI::App app{"equidist: uniform distribution, discrepancy and GCD-sum toolkit"};
    app.require_subcommand(0, 1);

    struct SubDef {
        const char* name;
        const char* help;
        const char* default_kind;
    };
    static constexpr SubDef defs[] = {
        {"gen", "generate point sets and digit streams", "kronecker"},
        {"disc", "exact star/extreme discrepancy of a point set", ""},
        {"weyl", "direct and closed-form Weyl sums", ""},
        {"bound", "discrepancy and GCD-sum bounds (erdos-turan, koksma, schmidt, "
                  "gal-envelope, g-alpha, dyer-harman, abs)", "erdos-turan"},
        {"analyze", "periodic BV functions: info, fourier, eval, l2max, rm-check", ""},
        {"gcdsum", "GCD sums and exact identities (sum, franel, sawtooth-l2, "
                   "pair-correlation, duffin)", "sum"},
        {"search", "local search for extremal GCD-sum sets", ""},
        {"experiment", "limit-theorem experiments (clt, lil-sum, lil-disc, baker)", "clt"},
    };
    for (const auto& d : defs) {
        CLI::App* sub = app.add_subcommand(d.name, d.help);
        add_common(sub, cfg);
    }

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());  // CLI11 takes reversed
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    auto subs = app.get_subcommands();
    if (subs.empty()) {
        std::cout << app.help();
        return 0;
    }
    cfg.command = subs.front()->get_name();
    if (cfg.kind.empty())
        for (const auto& d : defs)
            if (cfg.command == d.name) cfg.kind = d.default_kind;

    if (const char* env = std::getenv("EQUIDIST_WORKERS")) {
        cfg.workers = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    }
    set_worker_count(cfg.workers);

    auto errors = validate(cfg);
    if (!errors.empty()) {
        Json err;
        err["errors"] = errors;
        std::cerr << err.dump() << "\n";
        return 1;
    }

    try {
        Emission e;
        if (cfg.command == "gen") e = run_gen(cfg);
        else if (cfg.command == "disc") e = run_disc(cfg);
        else if (cfg.command == "weyl") e = run_weyl(cfg);
        else if (cfg.command == "bound") e = run_bound(cfg);
        else if (cfg.command == "analyze") e = run_analyze(cfg);
        else if (cfg.command == "gcdsum") e = run_gcdsum(cfg);
        else if (cfg.command == "search") e = run_search(cfg);
        else if (cfg.command == "experiment") e = run_experiment(cfg);
        emit(cfg, e);
        return 0;
    } catch (const std::exception& ex) {
        Json err;
        err["errors"] = Json::array({ex.what()});
        std::cerr << err.dump() << "\n";
        return 1;
    }
}

}  // namespace equidist::cli
