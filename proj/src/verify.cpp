#include "ideallab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <thread>
#include <utility>

#include "ideallab/atoms.hpp"
#include "ideallab/ops.hpp"
#include "ideallab/semigroup.hpp"

namespace ideallab {

namespace {

using nlohmann::ordered_json;

struct Ranges {
    int n_lo, n_hi, mn_lo, mn_hi;
};

Ranges resolve_ranges(const VerifyOptions& options) {
    const int lo = min_witness_size(options.kind);
    Ranges r;
    r.n_lo = options.n_lo ? options.n_lo : lo;
    r.n_hi = options.n_hi ? options.n_hi : 7;
    r.mn_lo = options.mn_lo ? options.mn_lo : lo;
    r.mn_hi = options.mn_hi ? options.mn_hi : (options.kind == IdealKind::TwoSided ? 7 : 6);
    auto check = [&](int value, const char* name) {
        if (value < lo)
            throw std::invalid_argument(std::string(name) + " range start " +
                                        std::to_string(value) + " below " +
                                        to_string(options.kind) + " ideal minimum " +
                                        std::to_string(lo));
    };
    check(r.n_lo, "--n");
    check(r.mn_lo, "--mn");
    if (r.n_hi < r.n_lo) throw std::invalid_argument("--n range is empty");
    if (r.mn_hi < r.mn_lo) throw std::invalid_argument("--mn range is empty");
    return r;
}

// A task computes one or more records; tasks run independently and the
// report keeps task order, so the output is identical for any job count.
using Task = std::function<std::vector<CheckRecord>()>;

class GridBuilder {
public:
    explicit GridBuilder(const VerifyOptions& options)
        : options_(options), kind_(options.kind), ranges_(resolve_ranges(options)) {
        if (options_.corrupt) {
            const Dfa probe = ideal_witness(kind_, min_witness_size(kind_));
            if (probe.letter_index(options_.corrupt->letter) < 0)
                throw std::invalid_argument("corruption letter \"" + options_.corrupt->letter +
                                            "\" is not in the " + to_string(kind_) +
                                            " witness alphabet");
            if (options_.corrupt->state < 1 || options_.corrupt->image < 1)
                throw std::invalid_argument("corruption state and image must be >= 1");
        }
    }

    std::vector<Task> build() {
        std::vector<Task> tasks;
        for (int n = ranges_.n_lo; n <= ranges_.n_hi; ++n) add_semigroup(tasks, n);
        for (int n = ranges_.n_lo; n <= ranges_.n_hi; ++n) add_quotient_profile(tasks, n);
        for (int n = ranges_.n_lo; n <= ranges_.n_hi; ++n) add_atom_count(tasks, n);
        for (int n = ranges_.n_lo; n <= ranges_.n_hi; ++n) add_atom_complexities(tasks, n);
        for (int n = ranges_.n_lo; n <= ranges_.n_hi; ++n) add_reversal(tasks, n);
        for (int n = ranges_.n_lo; n <= ranges_.n_hi; ++n) add_star(tasks, n);
        for (int m = ranges_.mn_lo; m <= ranges_.mn_hi; ++m)
            for (int n = ranges_.mn_lo; n <= ranges_.mn_hi; ++n) add_product(tasks, m, n);
        for (Measure op : {Measure::Union, Measure::Intersection, Measure::Difference,
                           Measure::SymmetricDifference})
            for (int m = ranges_.mn_lo; m <= ranges_.mn_hi; ++m)
                for (int n = ranges_.mn_lo; n <= ranges_.mn_hi; ++n) add_boolean(tasks, op, m, n);
        return tasks;
    }

private:
    Dfa make_witness(int n) const {
        Dfa w = ideal_witness(kind_, n);
        if (!options_.corrupt) return w;
        const auto& c = *options_.corrupt;
        const int letter = w.letter_index(c.letter);
        if (c.state > n || c.image > n) return w;  // inapplicable at this size
        std::vector<Transformation> delta = w.transitions();
        std::vector<int> images = delta[static_cast<std::size_t>(letter)].images();
        images[static_cast<std::size_t>(c.state) - 1] = c.image;
        delta[static_cast<std::size_t>(letter)] = Transformation(std::move(images));
        return Dfa(n, w.alphabet(), std::move(delta), w.initial_state(), w.final_states());
    }

    Dfa dialect_witness(int n, Measure measure) const {
        const Dfa w = make_witness(n);
        const auto dialect = measurement_dialect(kind_, measure);
        if (!dialect) return w;
        return apply_dialect(w, PartialPermutation::parse(*dialect));
    }

    std::uint64_t cap_for(int n) const {
        return options_.cap ? options_.cap : default_semigroup_cap(n);
    }

    // Runs `measure_fn`, compares against `expected`, fills timing and error
    // handling.  Everything a record needs besides its identity fields.
    static CheckRecord run_check(std::string cls, std::string measure, ordered_json params,
                                 ordered_json expected,
                                 const std::function<ordered_json()>& measure_fn) {
        CheckRecord record;
        record.cls = std::move(cls);
        record.measure = std::move(measure);
        record.params = std::move(params);
        record.expected = std::move(expected);
        const auto start = std::chrono::steady_clock::now();
        try {
            record.measured = measure_fn();
            record.pass = record.measured == record.expected;
        } catch (const CapExceeded& e) {
            record.measured = std::string("error: ") + e.what();
            record.pass = false;
            record.cap_overflow = true;
        } catch (const std::exception& e) {
            record.measured = std::string("error: ") + e.what();
            record.pass = false;
        }
        record.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        return record;
    }

    void add_semigroup(std::vector<Task>& tasks, int n) {
        tasks.push_back([this, n] {
            return std::vector<CheckRecord>{run_check(
                to_string(kind_), to_string(Measure::Semigroup), {{"n", n}},
                expected_syntactic_semigroup(kind_, n),
                [&] { return syntactic_semigroup_size(dialect_witness(n, Measure::Semigroup),
                                                      cap_for(n)); })};
        });
    }

    void add_quotient_profile(std::vector<Task>& tasks, int n) {
        tasks.push_back([this, n] {
            return std::vector<CheckRecord>{run_check(
                to_string(kind_), to_string(Measure::QuotientProfile), {{"n", n}},
                expected_quotient_profile(kind_, n), [&] {
                    return quotient_complexities(dialect_witness(n, Measure::QuotientProfile));
                })};
        });
    }

    void add_atom_count(std::vector<Task>& tasks, int n) {
        tasks.push_back([this, n] {
            return std::vector<CheckRecord>{run_check(
                to_string(kind_), to_string(Measure::AtomCount), {{"n", n}},
                expected_atom_count(kind_, n), [&] {
                    return enumerate_atoms(dialect_witness(n, Measure::AtomCount)).size();
                })};
        });
    }

    void add_atom_complexities(std::vector<Task>& tasks, int n) {
        tasks.push_back([this, n] {
            std::vector<CheckRecord> records;
            const Dfa witness = dialect_witness(n, Measure::AtomComplexity);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                std::vector<int> s;
                for (int q = 1; q <= n; ++q)
                    if (mask & (std::uint64_t{1} << (q - 1))) s.push_back(q);
                // Only realized (non-empty) atoms carry a bound to check.
                int measured_states = 0;
                bool empty_atom = false;
                CheckRecord record = run_check(
                    to_string(kind_), to_string(Measure::AtomComplexity),
                    {{"n", n}, {"s", s}},
                    nullptr, [&]() -> ordered_json {
                        const Dfa atom = atom_dfa(witness, s);
                        empty_atom = atom.final_states().empty();
                        measured_states = atom.state_count();
                        return measured_states;
                    });
                if (empty_atom) continue;
                const auto expected = expected_atom_complexity(kind_, n, s);
                record.expected = expected ? ordered_json(*expected) : ordered_json(nullptr);
                record.pass = !record.measured.is_string() && expected &&
                              record.measured == record.expected;
                records.push_back(std::move(record));
            }
            return records;
        });
    }

    void add_reversal(std::vector<Task>& tasks, int n) {
        tasks.push_back([this, n] {
            return std::vector<CheckRecord>{run_check(
                to_string(kind_), to_string(Measure::Reversal), {{"n", n}},
                expected_reversal(kind_, n),
                [&] { return complexity(reverse(dialect_witness(n, Measure::Reversal))); })};
        });
    }

    void add_star(std::vector<Task>& tasks, int n) {
        tasks.push_back([this, n] {
            return std::vector<CheckRecord>{run_check(
                to_string(kind_), to_string(Measure::Star), {{"n", n}},
                expected_star(kind_, n),
                [&] { return complexity(star(dialect_witness(n, Measure::Star))); })};
        });
    }

    std::pair<Dfa, Dfa> dialect_pair(int m, int n, const std::string& first,
                                     const std::string& second) const {
        return {sort_alphabet(apply_dialect(make_witness(m), PartialPermutation::parse(first))),
                sort_alphabet(apply_dialect(make_witness(n), PartialPermutation::parse(second)))};
    }

    void add_product(std::vector<Task>& tasks, int m, int n) {
        const std::string dialect = product_dialect(kind_);
        tasks.push_back([this, m, n, dialect] {
            std::vector<CheckRecord> records;
            const ordered_json expected = expected_product(kind_, m, n);
            const bool both_routes = kind_ != IdealKind::Right;
            ordered_json params = {{"m", m}, {"n", n}};
            if (both_routes) params["route"] = "epsilon";
            records.push_back(run_check(
                to_string(kind_), to_string(Measure::Product), params, expected, [&] {
                    auto [d1, d2] = dialect_pair(m, n, dialect, dialect);
                    return concat_epsilon(d1, d2).state_count();
                }));
            if (both_routes) {
                records.push_back(run_check(
                    to_string(kind_), to_string(Measure::Product),
                    {{"m", m}, {"n", n}, {"route", "redirect"}}, expected, [&] {
                        auto [d1, d2] = dialect_pair(m, n, dialect, dialect);
                        return complexity(concat_ideal_redirect(d1, d2));
                    }));
            }
            return records;
        });
    }

    void add_boolean(std::vector<Task>& tasks, Measure op, int m, int n) {
        const SetOp set_op = op == Measure::Union          ? SetOp::Union
                             : op == Measure::Intersection ? SetOp::Intersection
                             : op == Measure::Difference   ? SetOp::Difference
                                                           : SetOp::SymmetricDifference;
        const auto [first, second] = boolean_dialect_pair(kind_);
        tasks.push_back([this, op, set_op, m, n, first, second] {
            std::vector<CheckRecord> records;
            const ordered_json expected = expected_boolean(kind_, set_op, m, n);
            records.push_back(run_check(
                to_string(kind_), to_string(op),
                {{"m", m}, {"n", n}, {"operands", "dialect"}}, expected, [&] {
                    auto [d1, d2] = dialect_pair(m, n, first, second);
                    return boolean_product(d1, d2, set_op).state_count();
                }));
            if (kind_ != IdealKind::Left && m != n) {
                records.push_back(run_check(
                    to_string(kind_), to_string(op),
                    {{"m", m}, {"n", n}, {"operands", "same_stream"}}, expected, [&] {
                        auto [d1, d2] = dialect_pair(m, n, first, first);
                        return boolean_product(d1, d2, set_op).state_count();
                    }));
            }
            return records;
        });
    }

    const VerifyOptions& options_;
    IdealKind kind_;
    Ranges ranges_;
};

}  // namespace

std::string to_string(Measure measure) {
    switch (measure) {
        case Measure::Semigroup: return "semigroup";
        case Measure::QuotientProfile: return "quotient_profile";
        case Measure::AtomCount: return "atom_count";
        case Measure::AtomComplexity: return "atom_complexity";
        case Measure::Reversal: return "reversal";
        case Measure::Star: return "star";
        case Measure::Product: return "product";
        case Measure::Union: return "union";
        case Measure::Intersection: return "intersection";
        case Measure::Difference: return "difference";
        case Measure::SymmetricDifference: return "symmetric_difference";
    }
    throw std::invalid_argument("unknown measure");
}

Measure measure_from_string(const std::string& name) {
    if (name == "semigroup") return Measure::Semigroup;
    if (name == "quotient_profile" || name == "quotients") return Measure::QuotientProfile;
    if (name == "atom_count" || name == "atoms") return Measure::AtomCount;
    if (name == "atom_complexity") return Measure::AtomComplexity;
    if (name == "reversal") return Measure::Reversal;
    if (name == "star") return Measure::Star;
    if (name == "product") return Measure::Product;
    if (name == "union") return Measure::Union;
    if (name == "intersection") return Measure::Intersection;
    if (name == "difference") return Measure::Difference;
    if (name == "symmetric_difference") return Measure::SymmetricDifference;
    throw std::invalid_argument("unknown measure \"" + name + "\"");
}

std::optional<std::string> measurement_dialect(IdealKind kind, Measure measure) {
    switch (measure) {
        case Measure::Semigroup:
        case Measure::AtomComplexity:
            return std::nullopt;  // full alphabet
        case Measure::QuotientProfile:
            switch (kind) {
                case IdealKind::Right: return "a,-,-,d";
                case IdealKind::Left: return "a,-,-,d,e";
                case IdealKind::TwoSided: return "a,-,-,d,e,f";
            }
            break;
        case Measure::AtomCount:
        case Measure::Reversal:
            switch (kind) {
                case IdealKind::Right: return "a,-,-,d";
                case IdealKind::Left: return "a,-,c,d,e";
                case IdealKind::TwoSided: return "a,-,-,d,e,f";
            }
            break;
        case Measure::Star:
            switch (kind) {
                case IdealKind::Right: return "a,-,-,d";
                case IdealKind::Left: return "a,-,-,-,e";
                case IdealKind::TwoSided: return "a,-,-,-,e,f";
            }
            break;
        default: break;
    }
    throw std::invalid_argument("no measurement dialect for " + to_string(measure));
}

VerificationReport run_verification(const VerifyOptions& options) {
    GridBuilder builder(options);
    std::vector<Task> tasks = builder.build();
    std::vector<std::vector<CheckRecord>> results(tasks.size());

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const int jobs = std::clamp(options.jobs, 1, static_cast<int>(hw));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < tasks.size(); i = next++)
                    results[i] = tasks[i]();
            });
        for (auto& worker : workers) worker.join();
    }

    VerificationReport report;
    for (auto& batch : results)
        for (auto& record : batch) {
            (record.pass ? report.passed : report.failed) += 1;
            report.any_cap_overflow = report.any_cap_overflow || record.cap_overflow;
            report.checks.push_back(std::move(record));
        }
    return report;
}

nlohmann::ordered_json VerificationReport::to_json() const {
    ordered_json checks_json = ordered_json::array();
    for (const auto& record : checks)
        checks_json.push_back({{"class", record.cls},
                               {"measure", record.measure},
                               {"params", record.params},
                               {"expected", record.expected},
                               {"measured", record.measured},
                               {"pass", record.pass},
                               {"ms", record.ms}});
    return {{"checks", std::move(checks_json)},
            {"summary", {{"pass", passed}, {"fail", failed}}}};
}

std::string VerificationReport::to_csv() const {
    auto quote = [](const std::string& field) {
        if (field.find_first_of(",\"\n") == std::string::npos) return field;
        std::string out = "\"";
        for (char ch : field) {
            if (ch == '"') out += '"';
            out += ch;
        }
        return out + "\"";
    };
    std::string out = "class,measure,params,expected,measured,pass,ms\n";
    for (const auto& record : checks) {
        out += quote(record.cls) + "," + quote(record.measure) + "," +
               quote(record.params.dump()) + "," + quote(record.expected.dump()) + "," +
               quote(record.measured.dump()) + "," + (record.pass ? "true" : "false") + "," +
               std::to_string(record.ms) + "\n";
    }
    return out;
}

std::string VerificationReport::to_markdown() const {
    std::string out = "| class | measure | params | expected | measured | pass | ms |\n";
    out += "|---|---|---|---|---|---|---|\n";
    for (const auto& record : checks) {
        out += "| " + record.cls + " | " + record.measure + " | `" + record.params.dump() +
               "` | " + record.expected.dump() + " | " + record.measured.dump() + " | " +
               (record.pass ? "pass" : "**fail**") + " | " + std::to_string(record.ms) + " |\n";
    }
    out += "\n" + std::to_string(passed) + " passed, " + std::to_string(failed) + " failed\n";
    return out;
}

}  // namespace ideallab
