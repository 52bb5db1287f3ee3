// Copyright 2026 The sfwitness Authors
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

#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "report.hpp"
#include "sfw/bisep.hpp"
#include "sfw/correl.hpp"
#include "sfw/errors.hpp"
#include "sfw/noise.hpp"
#include "sfw/sampling.hpp"
#include "sfw/serialize.hpp"

namespace sfw::cli {

namespace {

using nlohmann::json;

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

int parse_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InputError("expected an integer, got '" + std::string(s) + "'");
    }
    return v;
}

BranchSign parse_sign(std::string_view s) {
    if (s == "+" || s == "plus") {
        return BranchSign::plus;
    }
    if (s == "-" || s == "minus") {
        return BranchSign::minus;
    }
    throw InputError("branch sign must be + or -, got '" + std::string(s) + "'");
}

std::pair<int, int> parse_pair(std::string_view args, std::string_view name) {
    const auto parts = split(args, ',');
    if (parts.size() != 2) {
        throw InputError(std::string(name) + " expects N,l");
    }
    return {parse_int(parts[0]), parse_int(parts[1])};
}

int state_qubits(const AnyState &state) {
    return std::visit([](const auto &s) { return s.n_qubits(); }, state);
}

const StateVector &require_pure(const AnyState &state, std::string_view command) {
    if (const auto *pure = std::get_if<StateVector>(&state)) {
        return *pure;
    }
    throw InputError(std::string(command) + " needs a pure state");
}

AnyState load_state(const RunConfig &config) {
    if (config.state_file) {
        return read_state_file(*config.state_file);
    }
    if (config.state_token.empty()) {
        throw InputError("a state is required (--state or --state-file)");
    }
    return build_state(config.state_token);
}

bool has_state(const RunConfig &config) {
    return config.state_file.has_value() || !config.state_token.empty();
}

WitnessSpec load_spec(const RunConfig &config, int n_qubits) {
    if (config.spec_file) {
        WitnessSpec spec = read_spec_file(*config.spec_file);
        if (n_qubits > 0 && spec.n_qubits() != n_qubits) {
            throw InputError("spec file is for " + std::to_string(spec.n_qubits()) +
                             " qubits, state has " + std::to_string(n_qubits));
        }
        return spec;
    }
    if (!config.c) {
        throw InputError("witness coefficients are required (--c cx,cy,cz or --spec-file)");
    }
    const auto c = parse_reals(*config.c);
    if (c.size() != 3) {
        throw InputError("--c needs three comma-separated values");
    }
    const Angle k = Angle::parse(config.k);
    if (config.positions) {
        return WitnessSpec(n_qubits, k, {c[0], c[1], c[2]},
                           SiteLayout(parse_reals(*config.positions)));
    }
    return WitnessSpec(n_qubits, k, {c[0], c[1], c[2]});
}

std::string spec_label(const WitnessSpec &spec) {
    std::ostringstream s;
    const auto &c = spec.coefficients();
    s << "k=" << spec.k().to_string() << " c=(" << c.x << " " << c.y << " " << c.z << ")";
    return s.str();
}

std::vector<Angle> k_grid(const RunConfig &config) {
    std::vector<Angle> grid;
    for (const auto &tok : config.k_grid) {
        for (auto part : split(tok, ',')) {
            grid.push_back(Angle::parse(part));
        }
    }
    if (config.k_linspace) {
        const auto parts = split(*config.k_linspace, ':');
        if (parts.size() != 3) {
            throw InputError("--k-linspace expects start:stop:count");
        }
        const Angle start = Angle::parse(parts[0]);
        const Angle stop = Angle::parse(parts[1]);
        const int count = parse_int(parts[2]);
        if (count < 1) {
            throw InputError("--k-linspace count must be positive");
        }
        for (int i = 0; i < count; ++i) {
            if (count == 1) {
                grid.push_back(start);
            } else if (start.is_pi_multiple() && stop.is_pi_multiple()) {
                // start + (stop - start) i / (count - 1), kept as an exact pi multiple
                const std::int64_t den = start.pi_denominator() * stop.pi_denominator() * (count - 1);
                const std::int64_t num =
                    start.pi_numerator() * stop.pi_denominator() * (count - 1) +
                    (stop.pi_numerator() * start.pi_denominator() -
                     start.pi_numerator() * stop.pi_denominator()) *
                        i;
                grid.push_back(Angle::pi_times(num, den));
            } else {
                grid.push_back(Angle::radians(start.value() + (stop.value() - start.value()) * i /
                                                                  (count - 1)));
            }
        }
    }
    if (grid.empty()) {
        grid.push_back(Angle::parse(config.k));
    }
    return grid;
}

struct Precision {
    explicit Precision(std::ostream &os, Format f) : os_(os), old_(os.precision()) {
        os_ << std::setprecision(f == Format::text ? 12 : 17);
    }
    ~Precision() { os_.precision(old_); }
    std::ostream &os_;
    std::streamsize old_;
};

int cmd_eval(const RunConfig &config, std::ostream &out) {
    const AnyState state = load_state(config);
    const WitnessSpec spec = load_spec(config, state_qubits(state));
    const double sigma = std::visit([&](const auto &s) { return sigma_value(s, spec); }, state);
    const double w = std::visit([&](const auto &s) { return witness_value(s, spec); }, state);
    const bool det = std::visit([&](const auto &s) { return detects(s, spec); }, state);
    Precision p(out, config.format);
    switch (config.format) {
    case Format::json:
        out << json{{"spec", spec_to_json(spec)}, {"sigma", sigma}, {"witness", w},
                    {"detected", det}}
                   .dump(2)
            << "\n";
        break;
    case Format::csv:
        out << "sigma,witness,detected\n" << sigma << "," << w << "," << (det ? 1 : 0) << "\n";
        break;
    case Format::text:
        out << "sigma    " << sigma << "\nwitness  " << w << "\ndetected " << (det ? "yes" : "no")
            << "\n";
        break;
    }
    return kExitOk;
}

int cmd_scan(const RunConfig &config, std::ostream &out) {
    const AnyState state = load_state(config);
    const WitnessSpec spec = load_spec(config, state_qubits(state));
    const auto grid = k_grid(config);
    const auto records = std::visit(
        [&](const auto &s) { return scan_k(s, spec.coefficients(), grid, spec.layout()); },
        state);
    Precision p(out, config.format);
    if (config.format == Format::json) {
        json arr = json::array();
        for (const auto &r : records) {
            arr.push_back({{"k", r.k.value()}, {"sigma", r.sigma}, {"witness", r.witness}});
        }
        out << arr.dump(2) << "\n";
        return kExitOk;
    }
    out << "k,sigma,witness\n";
    for (const auto &r : records) {
        out << r.k.value() << "," << r.sigma << "," << r.witness << "\n";
    }
    return kExitOk;
}

int cmd_robustness(const RunConfig &config, std::ostream &out) {
    const AnyState any = load_state(config);
    const StateVector &state = require_pure(any, "robustness");
    const WitnessSpec spec = load_spec(config, state.n_qubits());
    const double sigma = sigma_value(state, spec);
    const double p_star = collective_threshold(state, spec);
    const double q_star = individual_threshold(state, spec);
    const std::string id = config.state_file ? *config.state_file : config.state_token;
    Precision p(out, config.format);
    switch (config.format) {
    case Format::json:
        out << json{{"state_id", id}, {"spec", spec_to_json(spec)}, {"sigma", sigma},
                    {"p_star", p_star}, {"q_star", q_star}}
                   .dump(2)
            << "\n";
        break;
    case Format::csv:
        out << "state_id,spec,p_star,q_star\n"
            << id << ",\"" << spec_label(spec) << "\"," << p_star << "," << q_star << "\n";
        break;
    case Format::text:
        out << "state    " << id << "\nspec     " << spec_label(spec) << "\nsigma    " << sigma
            << "\np_star   " << p_star << "\nq_star   " << q_star << "\n";
        break;
    }
    return kExitOk;
}

int cmd_bisep(const RunConfig &config, std::ostream &out) {
    std::optional<AnyState> state;
    int n = config.n_qubits.value_or(0);
    if (has_state(config)) {
        state = load_state(config);
        n = state_qubits(*state);
    }
    if (config.spec_file && n == 0) {
        n = read_spec_file(*config.spec_file).n_qubits();
    }
    if (n == 0) {
        throw InputError("bisep-bound needs --n, --state or --spec-file");
    }
    const WitnessSpec spec = load_spec(config, n);
    const SeesawOptions options{config.restarts, config.tol, config.max_iter, config.seed};
    BisepResult result = [&] {
        if (config.cut) {
            std::vector<int> part_a;
            for (double s : parse_reals(*config.cut)) {
                part_a.push_back(static_cast<int>(s) - 1);
            }
            return seesaw_max(spec, Bipartition::from_part_a(n, part_a), options);
        }
        return bisep_bound(spec, options);
    }();
    json j = bisep_to_json(result);
    if (config.with_product) {
        j["product_bound"] = product_bound(spec, options);
    }
    if (state) {
        const StateVector &pure = require_pure(*state, "bisep-bound with --state");
        j["state_sigma"] = sigma_value(pure, spec);
        j["gme_detected"] = gme_detected(pure, spec, result);
    }
    Precision p(out, config.format);
    if (config.format == Format::json) {
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    if (config.format == Format::csv) {
        throw InputError("bisep-bound emits text or json");
    }
    out << "bound        " << result.bound << "\nbest cut     " << result.best_cut.to_string()
        << "\nrestarts     " << result.restarts_used << "\niterations   " << result.iterations
        << "\nconverged    " << (result.converged ? "yes" : "no") << "\n";
    if (j.contains("product_bound")) {
        out << "product      " << j["product_bound"].get<double>() << "\n";
    }
    if (state) {
        out << "state sigma  " << j["state_sigma"].get<double>() << "\ngme          "
            << (j["gme_detected"].get<bool>() ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_sample(const RunConfig &config, std::ostream &out) {
    const AnyState any = load_state(config);
    const StateVector &state = require_pure(any, "sample");
    const WitnessSpec spec = load_spec(config, state.n_qubits());
    const auto curve = convergence_curve(state, spec, config.shots_grid, config.seed);
    Precision p(out, config.format);
    if (config.format == Format::json) {
        json arr = json::array();
        for (const auto &c : curve) {
            arr.push_back({{"shots", c.shots}, {"estimate", c.estimate}, {"std_error", c.std_error}});
        }
        out << arr.dump(2) << "\n";
        return kExitOk;
    }
    out << "shots,estimate,std_error\n";
    for (const auto &c : curve) {
        out << c.shots << "," << c.estimate << "," << c.std_error << "\n";
    }
    return kExitOk;
}

int cmd_correlators(const RunConfig &config, std::ostream &out) {
    const AnyState state = load_state(config);
    const auto rows = std::visit([](const auto &s) { return correlator_table(s); }, state);
    Precision p(out, config.format);
    if (config.format == Format::json) {
        json arr = json::array();
        for (const auto &r : rows) {
            arr.push_back({{"i", r.site_i + 1},
                           {"j", r.site_j + 1},
                           {"alpha", std::string(1, axis_name(r.a))},
                           {"beta", std::string(1, axis_name(r.b))},
                           {"value", r.value}});
        }
        out << arr.dump(2) << "\n";
        return kExitOk;
    }
    out << "i,j,alpha,beta,value\n";
    for (const auto &r : rows) {
        out << r.site_i + 1 << "," << r.site_j + 1 << "," << axis_name(r.a) << ","
            << axis_name(r.b) << "," << r.value << "\n";
    }
    return kExitOk;
}

int cmd_reproduce(const RunConfig &config, std::ostream &out) {
    const auto checks = report::reproduce_paper({config.seed, config.restarts});
    bool all = true;
    for (const auto &c : checks) {
        all = all && c.passed;
    }
    if (config.format == Format::json) {
        json arr = json::array();
        for (const auto &c : checks) {
            arr.push_back(
                {{"id", c.id}, {"name", c.name}, {"detail", c.detail}, {"passed", c.passed}});
        }
        out << json{{"checks", arr}, {"all_passed", all}}.dump(2) << "\n";
    } else {
        for (const auto &c : checks) {
            out << (c.passed ? "[PASS] " : "[FAIL] ") << std::setw(3) << c.id << "  " << c.name
                << ": " << c.detail << "\n";
        }
        out << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    }
    return all ? kExitOk : kExitCheckFailure;
}

}  // namespace

std::vector<double> parse_reals(std::string_view list) {
    std::vector<double> values;
    for (auto part : split(list, ',')) {
        while (!part.empty() && part.front() == ' ') {
            part.remove_prefix(1);
        }
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
            throw InputError("expected a number, got '" + std::string(part) + "'");
        }
        values.push_back(v);
    }
    return values;
}

AnyState build_state(std::string_view token) {
    const auto colon = token.find(':');
    const std::string_view name = token.substr(0, colon);
    const std::string_view args = colon == token.npos ? std::string_view{} : token.substr(colon + 1);
    if (name == "dicke") {
        const auto [n, l] = parse_pair(args, name);
        return make_dicke(n, l);
    }
    if (name == "phased-dicke") {
        const auto [n, l] = parse_pair(args, name);
        return make_phased_dicke(n, l);
    }
    if (name == "ghz-superposition" || name == "dicke-ghz-superposition") {
        const auto parts = split(args, ',');
        if (parts.size() != 2) {
            throw InputError(std::string(name) + " expects THETA,SIGN");
        }
        const double theta = Angle::parse(parts[0]).value();
        const BranchSign sign = parse_sign(parts[1]);
        return name == "ghz-superposition" ? make_ghz_superposition(theta, sign)
                                           : make_dicke_ghz_superposition(theta, sign);
    }
    if (name == "basis") {
        return make_basis_state(static_cast<int>(args.size()), args);
    }
    if (name == "product") {
        std::vector<BlochVector> blochs;
        for (auto q : split(args, ';')) {
            const auto v = parse_reals(q);
            if (v.size() != 3) {
                throw InputError("product expects x,y,z triples separated by ';'");
            }
            blochs.push_back({v[0], v[1], v[2]});
        }
        return make_product_density(blochs);
    }
    throw InputError("unknown state '" + std::string(name) +
                     "' (known: dicke, phased-dicke, ghz-superposition, dicke-ghz-superposition, "
                     "basis, product)");
}

int execute(const RunConfig &config, std::ostream &out) {
    switch (config.command) {
    case Command::eval:
        return cmd_eval(config, out);
    case Command::scan:
        return cmd_scan(config, out);
    case Command::robustness:
        return cmd_robustness(config, out);
    case Command::bisep_bound:
        return cmd_bisep(config, out);
    case Command::sample:
        return cmd_sample(config, out);
    case Command::correlators:
        return cmd_correlators(config, out);
    case Command::reproduce_paper:
        return cmd_reproduce(config, out);
    }
    return kExitInput;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig config;
    if (const char *env = std::getenv(kSeedEnv)) {
        std::uint64_t s = 0;
        const std::string_view v(env);
        auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), s);
        if (ec != std::errc{} || ptr != v.data() + v.size()) {
            err << "error: " << kSeedEnv << " must be a non-negative integer\n";
            return kExitInput;
        }
        config.seed = s;
    }

    CLI::App app{"Structure-factor entanglement witnesses for qubit registers", "sfwitness"};
    app.require_subcommand(1);
    std::string format = "text";

    auto add_common = [&](CLI::App *sub, bool needs_spec) {
        sub->add_option("--state", config.state_token,
                        "dicke:N,l | phased-dicke:N,l | ghz-superposition:THETA,+|- | "
                        "dicke-ghz-superposition:THETA,+|- | basis:BITS | product:x,y,z;...");
        sub->add_option("--state-file", config.state_file, "serialized state (JSON)");
        if (needs_spec) {
            sub->add_option("--spec-file", config.spec_file, "witness spec (JSON)");
            sub->add_option("--k", config.k, "wave number, e.g. 0, pi, pi/2, 0.3");
            sub->add_option("--c", config.c, "coefficients cx,cy,cz");
            sub->add_option("--positions", config.positions, "site positions r1,...,rN");
        }
        sub->add_option("--format", format, "text | json | csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--output,-o", config.output_path, "write the artifact to this file");
        sub->add_option("--seed", config.seed, std::string("RNG seed (default from ") + kSeedEnv + ")");
    };

    auto *eval = app.add_subcommand("eval", "sigma and witness values for one state");
    add_common(eval, true);
    auto *scan = app.add_subcommand("scan", "sigma and witness over a k grid (CSV)");
    add_common(scan, true);
    scan->add_option("--k-grid", config.k_grid, "comma-separated k values");
    scan->add_option("--k-linspace", config.k_linspace, "start:stop:count");
    auto *robust = app.add_subcommand("robustness", "collective and individual noise thresholds");
    add_common(robust, true);
    auto *bisep = app.add_subcommand("bisep-bound", "see-saw maximum over biseparable states");
    add_common(bisep, true);
    bisep->add_option("--n", config.n_qubits, "number of qubits when no state is given");
    bisep->add_option("--restarts", config.restarts, "random restarts per cut");
    bisep->add_option("--tol", config.tol, "convergence tolerance");
    bisep->add_option("--max-iter", config.max_iter, "maximum sweeps per restart");
    bisep->add_option("--cut", config.cut, "optimize one cut: 1-based sites of one side");
    bisep->add_flag("--product", config.with_product, "also report the product-state bound");
    auto *sample = app.add_subcommand("sample", "finite-shot witness estimates (CSV)");
    add_common(sample, true);
    sample->add_option("--shots", config.shots_grid, "shots per setting (several allowed)")
        ->delimiter(',');
    auto *correl = app.add_subcommand("correlators", "two-point correlator table (CSV)");
    add_common(correl, false);
    auto *repro = app.add_subcommand("reproduce-paper", "recompute every published value");
    repro->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    repro->add_option("--output,-o", config.output_path, "write the report to this file");
    repro->add_option("--seed", config.seed, "RNG seed");
    repro->add_option("--restarts", config.restarts, "see-saw restarts per cut");

    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    config.format = format == "json" ? Format::json : (format == "csv" ? Format::csv : Format::text);
    if (app.got_subcommand(eval)) {
        config.command = Command::eval;
    } else if (app.got_subcommand(scan)) {
        config.command = Command::scan;
    } else if (app.got_subcommand(robust)) {
        config.command = Command::robustness;
    } else if (app.got_subcommand(bisep)) {
        config.command = Command::bisep_bound;
    } else if (app.got_subcommand(sample)) {
        config.command = Command::sample;
    } else if (app.got_subcommand(correl)) {
        config.command = Command::correlators;
    } else {
        config.command = Command::reproduce_paper;
    }

    try {
        if (config.output_path) {
            std::ofstream file(*config.output_path);
            if (!file) {
                throw InputError("cannot write '" + *config.output_path + "'");
            }
            return execute(config, file);
        }
        return execute(config, out);
    } catch (const InputError &e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ResourceError &e) {
        err << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const UnsupportedCaseError &e) {
        err << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::exception &e) {
        err << "check failure: " << e.what() << "\n";
        return kExitCheckFailure;
    }
}

}  // namespace sfw::cli
