#include "umbral/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "umbral/io.hpp"
#include "umbral/parking.hpp"
#include "umbral/sequence.hpp"
#include "umbral/series.hpp"
#include "umbral/suites.hpp"
#include "umbral/transforms.hpp"

namespace umbral {

namespace {

using io::Json;

inline constexpr std::size_t kMaxMatrix = 12;

// Raised for anything that should end in exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string theory;
    std::string direction;
    std::optional<std::string> g_spec;
    std::optional<std::size_t> order;
    std::optional<unsigned> n;
    std::vector<std::string> inputs;
    std::string output = "-";
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::string series_op;
    std::string suite;
};

std::string read_all(std::istream& s) { return {std::istreambuf_iterator<char>(s), std::istreambuf_iterator<char>()}; }

// "-" is stdin, an existing path is a file, a bare sequence name stands for itself.
Json load_input(const std::string& spec, std::istream& in) {
    std::string text;
    if (spec == "-") {
        text = read_all(in);
    } else if (std::filesystem::is_regular_file(spec)) {
        std::ifstream file(spec);
        if (!file) throw UsageError("cannot open input file '" + spec + "'");
        text = read_all(file);
    } else {
        const auto names = sequence_names();
        if (std::find(names.begin(), names.end(), spec) != names.end()) return Json(spec);
        throw UsageError("input '" + spec + "' is neither a readable file nor a sequence name");
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw UsageError(std::string("malformed JSON input: ") + e.what());
    }
}

// Either one --input per sequence, or a single input holding a JSON array.
std::vector<Json> load_inputs(const Options& opt, std::istream& in) {
    const auto specs = opt.inputs.empty() ? std::vector<std::string>{"-"} : opt.inputs;
    std::vector<Json> out;
    for (const auto& spec : specs) {
        Json j = load_input(spec, in);
        if (j.is_array() && specs.size() == 1) {
            for (auto& item : j) out.push_back(std::move(item));
        } else {
            out.push_back(std::move(j));
        }
    }
    return out;
}

MomentSequence to_moments(const Json& j, std::optional<std::size_t> order) {
    auto a = io::moments_from_json(j, order);
    if (a.order() == 0) throw UsageError("sequence has order 0");
    return a;
}

MultiplierSequence parse_g(const std::string& spec, std::size_t order) {
    if (spec == "n") return identity_multiplier(order);
    std::vector<Rational> values;
    std::string body = spec;
    if (!body.empty() && body.front() == '[') {
        const Json j = Json::parse(body);
        if (!j.is_array()) throw UsageError("--g list must be a JSON array");
        for (const auto& x : j) values.push_back(io::rational_from_json(x));
    } else {
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) values.push_back(Rational::parse(item));
    }
    if (values.size() == 1 && spec.find(',') == std::string::npos && spec.front() != '[') {
        return constant_multiplier(values.front(), order);
    }
    if (values.size() < order) {
        throw UsageError("--g list has " + std::to_string(values.size()) + " entries, order " + std::to_string(order) +
                         " needs at least that many");
    }
    values.resize(order);
    return MultiplierSequence(std::move(values));
}

void check_g_for_theory(const Options& opt) {
    if (opt.theory == "abel" && !opt.g_spec) throw UsageError("theory 'abel' requires --g");
    if (opt.theory != "abel" && opt.g_spec) throw UsageError("--g only applies to theory 'abel'");
}

Json cmd_transform(const Options& opt, std::istream& in) {
    check_g_for_theory(opt);
    const auto inputs = load_inputs(opt, in);
    if (inputs.size() != 1) throw UsageError("transform takes exactly one input sequence");
    const auto a = to_moments(inputs.front(), opt.order);
    const bool m2c = opt.direction == "m2c";
    if (opt.theory == "classical") return io::to_json(m2c ? classical_from_moments(a) : moments_from_classical(a));
    if (opt.theory == "boolean") return io::to_json(m2c ? boolean_from_moments(a) : moments_from_boolean(a));
    if (opt.theory == "free") return io::to_json(m2c ? free_from_moments(a) : moments_from_free(a));
    const auto g = parse_g(*opt.g_spec, a.order());
    return io::to_json(m2c ? generalized_cumulants(a, g) : moments_from_generalized(a, g));
}

Json cmd_convolve(const Options& opt, std::istream& in) {
    check_g_for_theory(opt);
    const auto inputs = load_inputs(opt, in);
    if (inputs.size() != 2) throw UsageError("convolve takes exactly two input sequences");
    const auto a = to_moments(inputs[0], opt.order);
    const auto b = to_moments(inputs[1], opt.order);
    if (a.order() != b.order()) {
        throw UsageError("order mismatch: " + std::to_string(a.order()) + " vs " + std::to_string(b.order()));
    }
    if (opt.theory == "classical") return io::to_json(classical_convolve(a, b));
    if (opt.theory == "boolean") return io::to_json(boolean_convolve(a, b));
    if (opt.theory == "free") return io::to_json(free_convolve(a, b));
    return io::to_json(gamma_convolve(a, b, parse_g(*opt.g_spec, a.order())));
}

Json cmd_matrix(const Options& opt, std::istream& in) {
    const auto inputs = load_inputs(opt, in);
    if (inputs.size() != 1) throw UsageError("matrix takes exactly one input sequence");
    const auto a = to_moments(inputs.front(), opt.order);
    const std::size_t rows = opt.rows == 0 ? std::min(a.order(), kMaxMatrix) : opt.rows;
    const std::size_t cols = opt.cols == 0 ? rows : opt.cols;
    if (rows > kMaxMatrix || cols > kMaxMatrix) throw UsageError("matrix dimensions are limited to 12 x 12");
    if (rows > a.order()) throw UsageError("rows exceed the input order " + std::to_string(a.order()));
    return io::to_json(cumulant_matrix(a, rows, cols));
}

Json cmd_series(const Options& opt, std::istream& in) {
    const auto inputs = load_inputs(opt, in);
    std::vector<TruncatedSeries> fs;
    for (const auto& j : inputs) fs.push_back(io::series_from_json(j));
    const std::string& op = opt.series_op;
    const bool binary = op == "add" || op == "mul" || op == "compose";
    if (fs.size() != (binary ? 2u : 1u)) {
        throw UsageError("series " + op + " takes " + (binary ? "two inputs" : "one input"));
    }
    if (binary && fs[0].order() != fs[1].order()) throw UsageError("order mismatch between series inputs");
    if (op == "add") return io::to_json(series_add(fs[0], fs[1]));
    if (op == "mul") return io::to_json(series_mul(fs[0], fs[1]));
    if (op == "compose") return io::to_json(delta_compose(fs[0], fs[1]));
    if (op == "reciprocal") return io::to_json(series_reciprocal(fs[0]));
    if (op == "revert") return io::to_json(series_reversion(fs[0]));
    if (op == "log") return io::to_json(series_log(fs[0]));
    return io::to_json(series_exp(fs[0]));
}

Json cmd_volume(const Options& opt, std::istream& in) {
    const auto inputs = load_inputs(opt, in);
    if (inputs.size() != 1) throw UsageError("volume takes exactly one input sequence");
    const auto a = to_moments(inputs.front(), opt.order);
    std::vector<Rational> volume, orbit;
    for (unsigned k = 1; k <= a.order(); ++k) {
        volume.push_back(volume_shape_eval(a, k));
        orbit.push_back(orbit_moment_eval(a, k));
    }
    Json j = Json::object();
    j["order"] = a.order();
    j["volume"] = io::to_json(volume);
    j["orbit"] = io::to_json(orbit);
    return j;
}

Json cmd_verify(const Options& opt, bool& all_pass, std::ostream& err) {
    const auto suite = parse_suite(opt.suite);
    if (!suite) throw UsageError("unknown suite '" + opt.suite + "'");
    const unsigned n = opt.n.value_or(suite_max_n(*suite) < 4 ? suite_max_n(*suite) : 4);
    std::vector<VerificationReport> reports;
    try {
        reports = run_suite(*suite, n);
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
    Json j = Json::object();
    j["suite"] = std::string(suite_name(*suite));
    j["n"] = n;
    all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
    j["pass"] = all_pass;
    if (*suite == Suite::Volume) j["volume_at_ones"] = volume_at_ones(n).str();
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(io::to_json(r));
    j["reports"] = std::move(list);
    if (!all_pass) {
        const auto bad = std::find_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; });
        err << "verification failed: " << bad->theorem << " (n = " << bad->n << "): " << bad->detail << '\n';
    }
    return j;
}

void add_sequence_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--order", opt.order, "Truncation order N (required for named inputs)");
    cmd->add_option("--input", opt.inputs, "FILE, '-' for stdin, or a sequence name")->allow_extra_args(false);
    cmd->add_option("--output", opt.output, "FILE or '-'");
}

void add_theory_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--theory", opt.theory)->required()->check(CLI::IsMember({"classical", "boolean", "free", "abel"}));
    cmd->add_option("--g", opt.g_spec, "Multiplier for theory abel: k, n, or a list");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact moment and cumulant calculus", "umbral"};
    app.require_subcommand(1);
    Options opt;

    auto* transform = app.add_subcommand("transform", "Moments <-> cumulants");
    add_theory_flags(transform, opt);
    transform->add_option("--direction", opt.direction)->required()->check(CLI::IsMember({"m2c", "c2m"}));
    add_sequence_flags(transform, opt);

    auto* convolve = app.add_subcommand("convolve", "Convolution of two moment sequences");
    add_theory_flags(convolve, opt);
    add_sequence_flags(convolve, opt);

    auto* matrix = app.add_subcommand("matrix", "Cumulant matrix c_{n,k}");
    matrix->add_option("--rows", opt.rows, "Degrees 1..rows (<= 12)");
    matrix->add_option("--cols", opt.cols, "Multipliers k = 1..cols (<= 12)");
    add_sequence_flags(matrix, opt);

    auto* series = app.add_subcommand("series", "Truncated power series utilities");
    series->add_option("op", opt.series_op)
        ->required()
        ->check(CLI::IsMember({"add", "mul", "reciprocal", "compose", "revert", "log", "exp"}));
    series->add_option("--input", opt.inputs, "FILE or '-'")->allow_extra_args(false);
    series->add_option("--output", opt.output, "FILE or '-'");

    auto* volume = app.add_subcommand("volume", "Volume and orbit polynomials at a sequence");
    add_sequence_flags(volume, opt);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", opt.suite)
        ->required()
        ->check(CLI::IsMember({"lattice", "abel", "volume", "transport", "parametrization"}));
    verify->add_option("--n", opt.n, "Largest degree checked");
    verify->add_option("--output", opt.output, "FILE or '-'");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Json result;
    int code = kExitOk;
    try {
        if (*transform) {
            result = cmd_transform(opt, in);
        } else if (*convolve) {
            result = cmd_convolve(opt, in);
        } else if (*matrix) {
            result = cmd_matrix(opt, in);
        } else if (*series) {
            result = cmd_series(opt, in);
        } else if (*volume) {
            result = cmd_volume(opt, in);
        } else {
            bool pass = true;
            result = cmd_verify(opt, pass, err);
            code = pass ? kExitOk : kExitVerificationFailed;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const std::string text = io::dump(result) + "\n";
    if (opt.output == "-") {
        out << text;
    } else {
        std::ofstream file(opt.output);
        if (!file || !(file << text)) {
            err << "error: cannot write '" << opt.output << "'\n";
            return kExitUsage;
        }
    }
    return code;
}

}  // namespace umbral
