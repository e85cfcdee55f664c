#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ideallab/bounds.hpp"
#include "ideallab/dfa.hpp"

namespace ideallab {

/// A partial permutation of a source alphabet, one slot per source letter
/// position; an undefined slot deletes that letter.  Defined images must be
/// pairwise distinct.
class PartialPermutation {
public:
    explicit PartialPermutation(std::vector<std::optional<std::string>> slots);

    /// Parses "a,b,-,d": comma-separated letters with "-" for an undefined
    /// slot.  Surrounding spaces are ignored.
    static PartialPermutation parse(const std::string& text);

    int size() const { return static_cast<int>(slots_.size()); }
    const std::optional<std::string>& slot(int i) const {
        return slots_[static_cast<std::size_t>(i)];
    }
    std::string to_string() const;

private:
    std::vector<std::optional<std::string>> slots_;
};

/// The four witness streams.  Every witness has states 1..n, initial state 1
/// and the single accepting state n; each constructor rejects n below the
/// defining range.
Dfa regular_witness(int n);          // n >= 3: a:(1..n), b:(1,2), c:(n->1)
Dfa right_ideal_witness(int n);      // n >= 3: a:(1..n-1), b:(2..n-1), c:(n-1->1), d:(n-1->n)
Dfa left_ideal_witness(int n);       // n >= 4: a:(2..n), b:(2,3), c:(n->2), d:(n->1), e:(Q->2)
Dfa two_sided_witness(int n);        // n >= 5: adds f:(2->n) over states 1..n-1 plus sink n

Dfa ideal_witness(IdealKind kind, int n);

/// Restriction/re-lettering: the i-th slot's image becomes a letter carrying
/// the source's i-th transformation; undefined slots drop their letter.  The
/// output alphabet keeps the source's positional order.  Defined images must
/// belong to the source alphabet and the slot count must match its size.
Dfa apply_dialect(const Dfa& dfa, const PartialPermutation& pi);

/// Does L(dfa) satisfy the defining equation of the class (L = L Sigma*,
/// Sigma* L, or Sigma* L Sigma*)?  The empty language is not an ideal.
bool check_ideal(const Dfa& dfa, IdealKind kind);

/// Dialect applied to both product operands: right (a,b,-,d), left
/// (a,-,-,-,e), two-sided (a,-,-,-,e,f).
std::string product_dialect(IdealKind kind);

/// Dialects of the two boolean operands (see boolean_witness_pair).
std::pair<std::string, std::string> boolean_dialect_pair(IdealKind kind);

/// Operand pair meeting the product bound of the class (product_dialect
/// applied to witnesses of sizes m and n, alphabets re-sorted).
std::pair<Dfa, Dfa> product_witness_pair(IdealKind kind, int m, int n);

/// Operand pair for the boolean bounds, alphabets re-sorted so both agree:
/// right (a,b,-,d)/(b,a,-,d); left (a,-,c,-,e)/(a,-,e,-,c); two-sided
/// (a,b,-,d,e,f)/(b,a,-,d,e,f).  With same_stream both operands take the
/// first dialect, which meets the bounds only for m != n (and has no
/// published counterpart for left ideals); violating either throws.
std::pair<Dfa, Dfa> boolean_witness_pair(IdealKind kind, int m, int n,
                                         bool same_stream = false);

}  // namespace ideallab
