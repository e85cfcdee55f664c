#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "ideallab/atoms.hpp"
#include "ideallab/bounds.hpp"
#include "ideallab/json_io.hpp"
#include "ideallab/ops.hpp"
#include "ideallab/semigroup.hpp"
#include "ideallab/verify.hpp"
#include "ideallab/witnesses.hpp"

namespace {

using namespace ideallab;
using nlohmann::ordered_json;

constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot open output file \"" + out_path + "\"");
    out << text;
}

std::pair<int, int> parse_range(const std::string& text, const char* flag) {
    const auto sep = text.find("..");
    try {
        if (sep == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 2))};
    } catch (const std::exception&) {
        throw UsageError(std::string(flag) + " expects N or LO..HI, got \"" + text + "\"");
    }
}

std::uint64_t resolve_cap(std::uint64_t flag_value) {
    if (flag_value) return flag_value;
    if (const char* env = std::getenv("IDEAL_LAB_CAP")) {
        try {
            const unsigned long long v = std::stoull(env);
            return v;
        } catch (const std::exception&) {
            throw UsageError("IDEAL_LAB_CAP must be an integer, got \"" + std::string(env) +
                             "\"");
        }
    }
    return 0;
}

Corruption parse_corruption(const std::string& text) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) parts.push_back(token);
    if (parts.size() != 3)
        throw UsageError("--corrupt expects LETTER,STATE,IMAGE, got \"" + text + "\"");
    Corruption c;
    c.letter = parts[0];
    try {
        c.state = std::stoi(parts[1]);
        c.image = std::stoi(parts[2]);
    } catch (const std::exception&) {
        throw UsageError("--corrupt expects integer state and image, got \"" + text + "\"");
    }
    return c;
}

Dfa load_dfa(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open \"" + path + "\"");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return dfa_from_json_string(buffer.str());
    } catch (const std::exception& e) {
        throw UsageError("\"" + path + "\": " + e.what());
    }
}

Dfa build_witness(const std::string& cls, int n) {
    if (cls == "regular") return regular_witness(n);
    return ideal_witness(ideal_kind_from_string(cls), n);
}

int cmd_witness(const std::string& cls, int n, const std::string& dialect,
                const std::string& out_path) {
    Dfa dfa = build_witness(cls, n);
    if (!dialect.empty()) dfa = apply_dialect(dfa, PartialPermutation::parse(dialect));
    write_output(dfa_to_json_string(dfa), out_path);
    return 0;
}

bool is_binary_measure(Measure measure) {
    switch (measure) {
        case Measure::Product:
        case Measure::Union:
        case Measure::Intersection:
        case Measure::Difference:
        case Measure::SymmetricDifference: return true;
        default: return false;
    }
}

ordered_json measure_unary(Measure measure, const Dfa& dfa, std::uint64_t cap) {
    switch (measure) {
        case Measure::Semigroup: return syntactic_semigroup_size(dfa, cap);
        case Measure::QuotientProfile: return quotient_complexities(dfa);
        case Measure::AtomCount: return atom_count(dfa);
        case Measure::Reversal: return complexity(reverse(dfa));
        case Measure::Star: return complexity(star(dfa));
        default: throw UsageError("measure " + to_string(measure) + " needs two operands");
    }
}

ordered_json measure_binary(Measure measure, const Dfa& d1, const Dfa& d2) {
    switch (measure) {
        case Measure::Product: return concat_epsilon(d1, d2).state_count();
        case Measure::Union: return boolean_product(d1, d2, SetOp::Union).state_count();
        case Measure::Intersection:
            return boolean_product(d1, d2, SetOp::Intersection).state_count();
        case Measure::Difference:
            return boolean_product(d1, d2, SetOp::Difference).state_count();
        case Measure::SymmetricDifference:
            return boolean_product(d1, d2, SetOp::SymmetricDifference).state_count();
        default: throw UsageError("measure " + to_string(measure) + " takes one operand");
    }
}

int cmd_measure(const std::string& measure_name, const std::vector<std::string>& files,
                const std::string& cls, int m, int n, const std::string& dialect,
                bool same_stream, std::uint64_t cap_flag, const std::string& out_path) {
    const Measure measure = measure_from_string(measure_name);
    if (measure == Measure::AtomComplexity)
        throw UsageError("atom complexities are reported by the verify grid, not measure");
    const std::uint64_t cap = resolve_cap(cap_flag);
    const bool binary = is_binary_measure(measure);
    ordered_json params = ordered_json::object();
    ordered_json value;

    if (!files.empty()) {
        if (!cls.empty() || n || m)
            throw UsageError("give either DFA files or a witness spec, not both");
        if (files.size() != (binary ? 2u : 1u))
            throw UsageError("measure " + to_string(measure) + " takes " +
                             (binary ? std::string("two DFA files") : std::string("one DFA file")));
        params["inputs"] = files;
        if (binary) {
            value = measure_binary(measure, load_dfa(files[0]), load_dfa(files[1]));
        } else {
            value = measure_unary(measure, load_dfa(files[0]), cap);
        }
    } else {
        if (cls.empty() || n == 0)
            throw UsageError("measure needs DFA files or --class and --n");
        const IdealKind kind = ideal_kind_from_string(cls);
        params["class"] = to_string(kind);
        if (binary) {
            if (m == 0) throw UsageError("measure " + to_string(measure) + " needs --m");
            params["m"] = m;
            params["n"] = n;
            Dfa d1 = universal_dfa({"a"});
            Dfa d2 = d1;
            if (!dialect.empty()) {
                const auto pi = PartialPermutation::parse(dialect);
                d1 = sort_alphabet(apply_dialect(ideal_witness(kind, m), pi));
                d2 = sort_alphabet(apply_dialect(ideal_witness(kind, n), pi));
                params["dialect"] = dialect;
            } else if (measure == Measure::Product) {
                std::tie(d1, d2) = product_witness_pair(kind, m, n);
            } else {
                std::tie(d1, d2) = boolean_witness_pair(kind, m, n, same_stream);
                if (same_stream) params["operands"] = "same_stream";
            }
            value = measure_binary(measure, d1, d2);
        } else {
            params["n"] = n;
            Dfa dfa = ideal_witness(kind, n);
            std::string used_dialect = dialect;
            if (used_dialect.empty()) {
                const auto standard = measurement_dialect(kind, measure);
                if (standard) used_dialect = *standard;
            }
            if (!used_dialect.empty()) {
                dfa = apply_dialect(dfa, PartialPermutation::parse(used_dialect));
                params["dialect"] = used_dialect;
            }
            value = measure_unary(measure, dfa, cap);
        }
    }

    const ordered_json record = {
        {"measure", to_string(measure)}, {"params", params}, {"value", value}};
    write_output(record.dump(2) + "\n", out_path);
    return 0;
}

int cmd_verify(const std::string& cls, const std::string& n_range, const std::string& mn_range,
               const std::string& format, std::uint64_t cap_flag, int jobs,
               const std::string& corrupt, const std::string& out_path) {
    VerifyOptions options;
    options.kind = ideal_kind_from_string(cls);
    if (!n_range.empty()) std::tie(options.n_lo, options.n_hi) = parse_range(n_range, "--n");
    if (!mn_range.empty())
        std::tie(options.mn_lo, options.mn_hi) = parse_range(mn_range, "--mn");
    options.cap = resolve_cap(cap_flag);
    options.jobs = jobs;
    if (!corrupt.empty()) options.corrupt = parse_corruption(corrupt);

    const VerificationReport report = run_verification(options);
    std::string rendered;
    if (format == "json")
        rendered = report.to_json().dump(2) + "\n";
    else if (format == "csv")
        rendered = report.to_csv();
    else if (format == "markdown")
        rendered = report.to_markdown();
    else
        throw UsageError("unknown format \"" + format + "\" (expected json, csv or markdown)");
    write_output(rendered, out_path);

    if (report.any_cap_overflow) return kExitCap;
    return report.all_passed() ? 0 : kExitChecksFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complexity laboratory for regular right, left and two-sided ideals"};
    app.require_subcommand(1);

    auto* witness_cmd =
        app.add_subcommand("witness", "Print a witness DFA as interchange JSON");
    std::string w_class, w_dialect, w_out;
    int w_n = 0;
    witness_cmd->add_option("class", w_class, "regular, right, left or two_sided")->required();
    witness_cmd->add_option("n", w_n, "number of states")->required();
    witness_cmd->add_option("dialect", w_dialect,
                            "partial permutation like a,b,-,d (default: full alphabet)");
    witness_cmd->add_option("--out", w_out, "write to file instead of stdout");

    auto* measure_cmd = app.add_subcommand(
        "measure", "Measure one complexity quantity of DFA files or a witness");
    std::string m_measure, m_class, m_dialect, m_out;
    std::vector<std::string> m_files;
    int m_m = 0, m_n = 0;
    std::uint64_t m_cap = 0;
    bool m_same_stream = false;
    measure_cmd
        ->add_option("measure", m_measure,
                     "semigroup, quotients, atoms, reversal, star, product, union, "
                     "intersection, difference or symmetric_difference")
        ->required();
    measure_cmd->add_option("files", m_files, "one or two DFA JSON files")->expected(0, 2);
    measure_cmd->add_option("--class", m_class, "witness class: right, left or two_sided");
    measure_cmd->add_option("--n", m_n, "witness size (second operand for binary measures)");
    measure_cmd->add_option("--m", m_m, "first operand witness size for binary measures");
    measure_cmd->add_option("--dialect", m_dialect,
                            "override the published measurement dialect");
    measure_cmd->add_flag("--same-stream", m_same_stream,
                          "use the same dialect for both boolean operands (needs m != n)");
    measure_cmd->add_option("--cap", m_cap, "semigroup enumeration cap (overrides IDEAL_LAB_CAP)");
    measure_cmd->add_option("--out", m_out, "write to file instead of stdout");

    auto* verify_cmd = app.add_subcommand(
        "verify", "Run the full bound-verification grid for one ideal class");
    std::string v_class, v_n, v_mn, v_format = "json", v_corrupt, v_out;
    std::uint64_t v_cap = 0;
    int v_jobs = 1;
    verify_cmd->add_option("class", v_class, "right, left or two_sided")->required();
    verify_cmd->add_option("--n", v_n, "witness sizes, N or LO..HI (default: class min..7)");
    verify_cmd->add_option("--mn", v_mn,
                           "operand sizes for product/boolean checks, N or LO..HI");
    verify_cmd->add_option("--format", v_format, "json (default), csv or markdown");
    verify_cmd->add_option("--cap", v_cap, "semigroup enumeration cap (overrides IDEAL_LAB_CAP)");
    verify_cmd->add_option("--jobs", v_jobs, "worker threads (default 1)");
    verify_cmd->add_option("--corrupt", v_corrupt,
                           "LETTER,STATE,IMAGE: mutate one witness transition (negative control)");
    verify_cmd->add_option("--out", v_out, "write report to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (witness_cmd->parsed()) return cmd_witness(w_class, w_n, w_dialect, w_out);
        if (measure_cmd->parsed())
            return cmd_measure(m_measure, m_files, m_class, m_m, m_n, m_dialect, m_same_stream,
                               m_cap, m_out);
        return cmd_verify(v_class, v_n, v_mn, v_format, v_cap, v_jobs, v_corrupt, v_out);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
