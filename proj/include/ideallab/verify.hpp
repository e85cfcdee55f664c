#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ideallab/bounds.hpp"
#include "ideallab/witnesses.hpp"

namespace ideallab {

/// The complexity measures of the verification grid, in canonical report
/// order.
enum class Measure {
    Semigroup,
    QuotientProfile,
    AtomCount,
    AtomComplexity,
    Reversal,
    Star,
    Product,
    Union,
    Intersection,
    Difference,
    SymmetricDifference,
};

std::string to_string(Measure measure);
/// Accepts the canonical names plus the shorthands "atoms" and "quotients".
Measure measure_from_string(const std::string& name);

/// The published restricted alphabet used to measure a unary bound on the
/// witness stream; nullopt means the full alphabet.
std::optional<std::string> measurement_dialect(IdealKind kind, Measure measure);

/// One transition of the full witness rewritten before anything is derived
/// from it; a deliberate fault injector for negative controls.  Ignored for
/// witnesses too small to contain the named state or image.
struct Corruption {
    std::string letter;
    int state = 0;
    int image = 0;
};

struct CheckRecord {
    std::string cls;
    std::string measure;
    nlohmann::ordered_json params;
    nlohmann::ordered_json expected;
    nlohmann::ordered_json measured;
    bool pass = false;
    std::int64_t ms = 0;
    /// Not part of the report schema; drives the resource-cap exit code.
    bool cap_overflow = false;
};

struct VerifyOptions {
    IdealKind kind = IdealKind::Right;
    /// 0 keeps the class default: n in min..7; m,n in min..6 for right and
    /// left, 5..7 for two-sided.
    int n_lo = 0;
    int n_hi = 0;
    int mn_lo = 0;
    int mn_hi = 0;
    std::uint64_t cap = 0;  // 0 = default semigroup cap per witness size
    int jobs = 1;
    std::optional<Corruption> corrupt;
};

struct VerificationReport {
    std::vector<CheckRecord> checks;
    int passed = 0;
    int failed = 0;
    bool any_cap_overflow = false;

    bool all_passed() const { return failed == 0; }
    nlohmann::ordered_json to_json() const;
    std::string to_csv() const;
    std::string to_markdown() const;
};

/// Runs every check of the class over the requested ranges: per n the
/// semigroup size, quotient profile, atom count, per-atom complexities,
/// reversal and star; per (m,n) the product (for left and two-sided by both
/// the epsilon and the redirect route) and the four boolean operations with
/// the published dialect pair, plus same-stream boolean checks for m != n
/// where the class has them.  Expected values come from the bound tables,
/// measured values from actual constructions.  A check that throws is
/// recorded as failing and the run continues.  Record order is canonical
/// and independent of `jobs`.
VerificationReport run_verification(const VerifyOptions& options);

}  // namespace ideallab
