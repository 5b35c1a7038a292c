// Copyright 2026 The qperm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qperm/cli.h"

#include <CLI11.hpp>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "qperm/laws.h"
#include "qperm/s4.h"
#include "qperm/verify.h"
#include "qperm/weingarten.h"

namespace qperm {

namespace {

using Json = nlohmann::ordered_json;

/// Thrown for flag values that parse but make no sense.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr double kStandardErrorFloor = 1e-12;

struct RunConfig {
    std::string variable = "m4";
    std::string t;
    unsigned order = 4;
    unsigned cap = 0;
    size_t max_k = 3;
    uint64_t samples = 1000000;
    uint64_t seed = 42;
    std::string grid = "0.01:0.99:99";
    std::string eps;
    std::string atom;
    std::string format = "csv";
    unsigned threads = 0;
    std::string output;
    std::string suite = "all";
    std::string weights = "1/4,1/4,1/4,1/4";
    size_t k = 2;
    unsigned bins = 50;
};

/// Shortest representation that reads back to the same double.
std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

Rational parse_rational_flag(const std::string &flag, const std::string &text) {
    try {
        return parse_rational(text);
    } catch (const std::exception &e) {
        throw UsageError(flag + ": cannot parse '" + text + "' as a rational");
    }
}

double parse_double_flag(const std::string &flag, const std::string &text) {
    try {
        size_t used = 0;
        double x = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return x;
    } catch (const std::exception &) {
        throw UsageError(flag + ": cannot parse '" + text + "' as a number");
    }
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) {
        parts.push_back(cur);
    }
    if (!text.empty() && text.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

VariableSpec variable_from(const RunConfig &cfg, bool require_t) {
    std::optional<Rational> t;
    if (!cfg.t.empty()) {
        t = parse_rational_flag("--t", cfg.t);
    }
    VariableSpec v;
    try {
        v = VariableSpec::parse(cfg.variable, t);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    if (!v.has_parameter() && t) {
        throw UsageError("--t only applies to wt and vt");
    }
    if (require_t && v.has_parameter() && !v.t) {
        throw UsageError("--t is required for " + v.name());
    }
    return v;
}

Json t_json(const VariableSpec &v) {
    return v.t ? Json(to_string(*v.t)) : Json(nullptr);
}

void emit_json(std::ostream &out, const Json &j) {
    out << j.dump(2) << "\n";
}

std::string csv_quote(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') {
            q += '"';
        }
        q += c;
    }
    return q + "\"";
}

// ---------------------------------------------------------------- commands

int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    Suite suite;
    try {
        suite = parse_suite(cfg.suite);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    VerifyOptions options;
    options.max_k = cfg.max_k;
    options.threads = cfg.threads;
    options.progress = &err;
    auto results = run_suite(suite, options);
    bool all = true;
    for (const auto &r : results) {
        all = all && r.passed;
    }
    if (cfg.format == "json") {
        Json j;
        j["schema"] = "1";
        j["suite"] = suite_name(suite);
        j["max_k"] = cfg.max_k;
        j["passed"] = all;
        j["checks"] = Json::array();
        for (const auto &r : results) {
            j["checks"].push_back({{"suite", r.suite},
                                   {"check", r.name},
                                   {"passed", r.passed},
                                   {"seconds", r.seconds},
                                   {"detail", r.detail}});
        }
        emit_json(out, j);
    } else {
        out << "suite,check,result,seconds,detail\n";
        for (const auto &r : results) {
            char secs[32];
            std::snprintf(secs, sizeof(secs), "%.3f", r.seconds);
            out << r.suite << "," << csv_quote(r.name) << "," << (r.passed ? "pass" : "FAIL")
                << "," << secs << "," << csv_quote(r.detail) << "\n";
        }
    }
    err << (all ? "all checks passed" : "some checks FAILED") << " (" << results.size()
        << " checks)\n";
    return all ? kExitPass : kExitFailure;
}

int cmd_moments(const RunConfig &cfg, std::ostream &out) {
    VariableSpec v = variable_from(cfg, false);
    if (cfg.order == 0) {
        throw UsageError("--order must be at least 1");
    }
    std::vector<Polynomial> moments;
    try {
        moments = exact_moments(v, cfg.order, cfg.cap);
    } catch (const std::out_of_range &e) {
        throw UsageError(std::string(e.what()) + "; raise it with --cap");
    }
    auto value = [](const Polynomial &p) {
        return p.is_constant() ? to_string(p.constant_value()) : p.to_string();
    };
    if (cfg.format == "json") {
        Json j;
        j["schema"] = "1";
        j["variable"] = v.name();
        if (v.has_parameter()) {
            j["t"] = t_json(v);
        }
        j["moments"] = Json::array();
        for (size_t k = 0; k < moments.size(); ++k) {
            j["moments"].push_back({{"k", k + 1}, {"value", value(moments[k])}});
        }
        emit_json(out, j);
    } else {
        out << "k,value\n";
        for (size_t k = 0; k < moments.size(); ++k) {
            out << k + 1 << "," << csv_quote(value(moments[k])) << "\n";
        }
    }
    return kExitPass;
}

DensityOptions density_options(const RunConfig &cfg) {
    DensityOptions options;
    if (!cfg.eps.empty()) {
        options.eps.clear();
        for (const auto &part : split(cfg.eps, ',')) {
            double e = parse_double_flag("--eps", part);
            if (!(e > 0)) {
                throw UsageError("--eps values must be positive");
            }
            options.eps.push_back(e);
        }
    }
    return options;
}

int cmd_density(const RunConfig &cfg, std::ostream &out) {
    VariableSpec v = variable_from(cfg, true);
    if (v.kind == VariableKind::M3 || v.kind == VariableKind::N3) {
        throw UsageError("no Cauchy transform is available for " + v.name());
    }
    DensityOptions options = density_options(cfg);
    std::vector<DensityPoint> points;
    std::string kind = "density";
    if (!cfg.atom.empty()) {
        kind = "atom_mass";
        points.push_back(atom_mass(v, parse_double_flag("--atom", cfg.atom), options));
    } else {
        auto parts = split(cfg.grid, ':');
        if (parts.size() != 3) {
            throw UsageError("--grid must look like a:b:n");
        }
        double lo = parse_double_flag("--grid", parts[0]);
        double hi = parse_double_flag("--grid", parts[1]);
        double n = parse_double_flag("--grid", parts[2]);
        if (n < 1 || n != std::floor(n) || !(lo > 0) || !(hi < 1) || !(lo <= hi) ||
            (n > 1 && lo == hi)) {
            throw UsageError("--grid needs 0 < a < b < 1 and a positive integer n");
        }
        points = stieltjes_density(v, lo, n == 1 ? std::nextafter(lo, 1.0) : hi,
                                   static_cast<unsigned>(n), options);
    }
    if (cfg.format == "json") {
        Json j;
        j["schema"] = "1";
        j["variable"] = v.name();
        if (v.has_parameter()) {
            j["t"] = t_json(v);
        }
        j["eps"] = options.eps;
        j["kind"] = kind;
        j["points"] = Json::array();
        for (const auto &p : points) {
            j["points"].push_back({{"x", p.x},
                                   {kind == "atom_mass" ? "mass" : "density", p.density},
                                   {"converged", p.converged},
                                   {"error_estimate", p.error_estimate}});
        }
        emit_json(out, j);
    } else {
        out << "x," << (kind == "atom_mass" ? "mass" : "density") << ",converged,error_estimate\n";
        for (const auto &p : points) {
            out << format_double(p.x) << "," << format_double(p.density) << ","
                << (p.converged ? "true" : "false") << "," << format_double(p.error_estimate)
                << "\n";
        }
    }
    return kExitPass;
}

int cmd_mc(const RunConfig &cfg, std::ostream &out) {
    VariableSpec v = variable_from(cfg, true);
    if (cfg.samples < 2) {
        throw UsageError("--samples must be at least 2");
    }
    McLawOptions options;
    options.samples = cfg.samples;
    options.seed = cfg.seed;
    options.threads = cfg.threads;
    options.max_moment = cfg.order;
    options.bins = cfg.bins;
    McLawResult r = mc_law(v, options);
    std::vector<std::optional<Rational>> exact(cfg.order);
    if (cfg.order <= default_moment_cap(v.kind)) {
        auto m = exact_moments(v, cfg.order);
        for (size_t k = 0; k < m.size(); ++k) {
            exact[k] = m[k].constant_value();
        }
    }
    auto z_score = [&](size_t k) -> std::optional<double> {
        if (!exact[k]) {
            return std::nullopt;
        }
        // Moments that are constant on the sphere have a zero standard
        // error; the floor keeps rounding noise from showing up as a huge z.
        double se = std::max(r.moments[k].standard_error(), kStandardErrorFloor);
        return (r.moments[k].mean - to_double(*exact[k])) / se;
    };
    if (cfg.format == "json") {
        Json j;
        j["schema"] = "1";
        j["variable"] = v.name();
        if (v.has_parameter()) {
            j["t"] = t_json(v);
        }
        j["seed"] = r.seed;
        j["samples"] = r.samples;
        j["rejected"] = r.rejected;
        j["zero_fraction"] = r.zero_fraction;
        j["moments"] = Json::array();
        for (size_t k = 0; k < r.moments.size(); ++k) {
            auto z = z_score(k);
            j["moments"].push_back({{"k", k + 1},
                                    {"mean", r.moments[k].mean},
                                    {"standard_error", r.moments[k].standard_error()},
                                    {"exact", exact[k] ? Json(to_string(*exact[k])) : Json(nullptr)},
                                    {"z", z ? Json(*z) : Json(nullptr)}});
        }
        j["histogram"] = {{"min", r.hist_min},
                          {"max", r.hist_max},
                          {"counts", r.histogram},
                          {"below_range", r.eigenvalues_below_range},
                          {"above_range", r.eigenvalues_above_range}};
        emit_json(out, j);
    } else {
        out << "variable,seed,samples,rejected,k,mean,standard_error,exact,z\n";
        for (size_t k = 0; k < r.moments.size(); ++k) {
            auto z = z_score(k);
            out << v.name() << "," << r.seed << "," << r.samples << "," << r.rejected << ","
                << k + 1 << "," << format_double(r.moments[k].mean) << ","
                << format_double(r.moments[k].standard_error()) << ","
                << (exact[k] ? to_string(*exact[k]) : "") << "," << (z ? format_double(*z) : "")
                << "\n";
        }
    }
    return kExitPass;
}

int cmd_s4(const RunConfig &cfg, std::ostream &out) {
    auto parts = split(cfg.weights, ',');
    if (parts.size() != 4) {
        throw UsageError("--weights needs four comma-separated rationals");
    }
    std::array<Rational, 4> t;
    for (size_t i = 0; i < 4; ++i) {
        t[i] = parse_rational_flag("--weights", parts[i]);
    }
    AtomicLaw law;
    try {
        law = classical_law(t);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    if (cfg.format == "json") {
        Json j;
        j["schema"] = "1";
        j["weights"] = Json::array();
        for (const auto &x : t) {
            j["weights"].push_back(to_string(x));
        }
        j["atoms"] = Json::array();
        for (const auto &a : law.atoms()) {
            j["atoms"].push_back({{"location", to_string(a.location)}, {"weight", to_string(a.weight)}});
        }
        j["moments"] = Json::array();
        for (unsigned k = 1; k <= cfg.order; ++k) {
            j["moments"].push_back({{"k", k}, {"value", to_string(classical_moment(law, k))}});
        }
        emit_json(out, j);
    } else {
        out << "location,weight\n";
        for (const auto &a : law.atoms()) {
            out << to_string(a.location) << "," << to_string(a.weight) << "\n";
        }
    }
    return kExitPass;
}

int cmd_weingarten(const RunConfig &cfg, std::ostream &out) {
    if (cfg.k < 1 || cfg.k > kDefaultNcCap) {
        throw UsageError("--k must be between 1 and " + std::to_string(kDefaultNcCap));
    }
    GramMatrix g = gram(cfg.k);
    RationalMatrix w = inverse(g.entries);
    const size_t n = g.partitions.size();
    if (cfg.format == "json") {
        auto matrix_json = [n](const RationalMatrix &m) {
            Json rows = Json::array();
            for (size_t r = 0; r < n; ++r) {
                Json row = Json::array();
                for (size_t c = 0; c < n; ++c) {
                    row.push_back(to_string(m(r, c)));
                }
                rows.push_back(row);
            }
            return rows;
        };
        Json j;
        j["schema"] = "1";
        j["k"] = cfg.k;
        j["partitions"] = Json::array();
        for (const auto &p : g.partitions) {
            j["partitions"].push_back(p.to_string());
        }
        j["gram"] = matrix_json(g.entries);
        j["weingarten"] = matrix_json(w);
        emit_json(out, j);
    } else {
        out << "matrix,row,column,row_partition,column_partition,value\n";
        for (const auto &[name, m] : {std::pair<const char *, const RationalMatrix *>{"gram", &g.entries},
                                      {"weingarten", &w}}) {
            for (size_t r = 0; r < n; ++r) {
                for (size_t c = 0; c < n; ++c) {
                    out << name << "," << r + 1 << "," << c + 1 << ","
                        << csv_quote(g.partitions[r].to_string()) << ","
                        << csv_quote(g.partitions[c].to_string()) << "," << to_string((*m)(r, c))
                        << "\n";
                }
            }
        }
    }
    return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact and numerical computations for the quantum permutation group on 4 points",
                 "qperm"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--output", cfg.output, "Write data to this file instead of stdout");
    };
    auto add_variable = [&](CLI::App *sub) {
        sub->add_option("--variable", cfg.variable, "m1, m2, m3, m4, n3, wt or vt");
        sub->add_option("--t", cfg.t, "Parameter t of wt/vt, as a rational");
    };
    auto add_threads = [&](CLI::App *sub) {
        sub->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
    };

    auto *verify = app.add_subcommand("verify", "Run the exact verification suites");
    verify->add_option("--suite", cfg.suite, "algebra, faithfulness, laws, identities or all");
    verify->add_option("--max-k", cfg.max_k, "Largest tensor order for algebra/faithfulness")
        ->check(CLI::Range(1, 8));
    add_threads(verify);
    add_format(verify);

    auto *moments = app.add_subcommand("moments", "Exact moments of a diagonal variable");
    add_variable(moments);
    moments->add_option("--order", cfg.order, "Highest moment order");
    moments->add_option("--cap", cfg.cap, "Override the moment order cap");
    add_format(moments);

    auto *density = app.add_subcommand("density", "Density by Stieltjes inversion");
    add_variable(density);
    density->add_option("--grid", cfg.grid, "Grid a:b:n inside (0,1)");
    density->add_option("--eps", cfg.eps, "Comma-separated imaginary offsets");
    density->add_option("--atom", cfg.atom, "Report the atom mass at this point instead");
    add_format(density);

    auto *mc = app.add_subcommand("mc", "Monte Carlo moments and eigenvalue histogram");
    add_variable(mc);
    mc->add_option("--samples", cfg.samples, "Number of sphere samples");
    mc->add_option("--seed", cfg.seed, "Random seed");
    mc->add_option("--order", cfg.order, "Highest moment order")->check(CLI::Range(1, 32));
    mc->add_option("--bins", cfg.bins, "Histogram bins on [0,1]")->check(CLI::Range(1, 100000));
    add_threads(mc);
    add_format(mc);

    auto *s4 = app.add_subcommand("s4", "Law of a weighted diagonal sum over S4");
    s4->add_option("--weights", cfg.weights, "Four rationals t1,t2,t3,t4 summing to 1");
    s4->add_option("--order", cfg.order, "Moments reported in JSON output");
    add_format(s4);

    auto *wg = app.add_subcommand("weingarten", "Gram and Weingarten matrices over NC(k)");
    wg->add_option("--k", cfg.k, "Order k");
    add_format(wg);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    if (cfg.threads == 0) {
        cfg.threads = default_threads();
    }

    std::ofstream file;
    std::ostream *data = &out;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            err << "error: cannot open " << cfg.output << " for writing\n";
            return kExitFailure;
        }
        data = &file;
    }

    try {
        if (verify->parsed()) return cmd_verify(cfg, *data, err);
        if (moments->parsed()) return cmd_moments(cfg, *data);
        if (density->parsed()) return cmd_density(cfg, *data);
        if (mc->parsed()) return cmd_mc(cfg, *data);
        if (s4->parsed()) return cmd_s4(cfg, *data);
        if (wg->parsed()) return cmd_weingarten(cfg, *data);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace qperm
