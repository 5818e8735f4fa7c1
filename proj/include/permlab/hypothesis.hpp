#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permlab/group.hpp"
#include "permlab/structure.hpp"

namespace permlab {

/// One conjugacy class of maximal subgroups, with the two facts the
/// maximal-subgroup condition cares about: index primality and p-nilpotency.
struct MaximalRow {
    unsigned __int128 index = 0;
    unsigned __int128 order = 0;
    std::uint64_t class_length = 0;   ///< 0 when not computed (catalog rows)
    bool prime_index = false;
    /// nullopt when the class was accepted without a nilpotency test
    /// (prime-index catalog descriptors).
    std::optional<bool> p_nilpotent;
    std::string type;                 ///< identified or declared type, "-" if unknown

    bool passes() const { return prime_index || (p_nilpotent.has_value() && *p_nilpotent); }
};

/// Result of checking "every maximal subgroup is p-nilpotent or has prime
/// index" for one group and one prime.
struct MaximalAnalysis {
    std::string group;                 ///< display name
    unsigned __int128 group_order = 0;
    std::uint64_t p = 0;
    bool p_divides_order = true;
    std::string note;                  ///< e.g. the vacuous case, or catalog provenance
    std::vector<MaximalRow> rows;      ///< sorted by (index, order)
    bool verdict = false;              ///< conjunction of row verdicts

    /// The failing rows, in row order.
    std::vector<MaximalRow> witnesses() const;
    /// Versioned structured-text report; a non-negative time_ms appends a
    /// trailing timing comment (kept out of byte-stable stdout paths).
    std::string to_text(std::int64_t time_ms = -1) const;
};

/// Enumerate the maximal subgroup classes of g and test each for prime index
/// and p-nilpotency.  Every failing row is re-verified through independent
/// routes (composite index by factorization, non-p-nilpotency through the
/// largest-normal-coprime-subgroup route) before it is reported.
/// Throws CutoffExceeded when the subgroup lattice is out of reach - large
/// groups go through the catalog path instead.
MaximalAnalysis analyze_maximals(const PermGroup& g, std::uint64_t p,
                                 const std::string& name = "");

/// How one catalog row of a large group's maximal-subgroup list is checked.
enum class DescriptorKind {
    prime_index,    ///< accepted because the index is a verified prime
    constructible,  ///< built as a permutation group and p-nilpotency-tested
    coprime_order,  ///< accepted because the order is coprime to p
};

struct MaximalDescriptor {
    DescriptorKind kind = DescriptorKind::prime_index;
    unsigned __int128 index = 0;
    unsigned __int128 order = 0;
    std::string label;            ///< display type
    PermGroup (*build)() = nullptr;  ///< constructible rows only
};

/// Fixture data for a group whose lattice is out of enumeration reach: its
/// order and complete maximal-subgroup class list, with the literature source
/// recorded in `provenance`.
struct LargeGroupEntry {
    std::string name;
    unsigned __int128 order = 0;
    std::string provenance;
    std::vector<MaximalDescriptor> descriptors;
};

const std::vector<LargeGroupEntry>& large_group_catalog();
/// Entry with the given name, or nullptr.
const LargeGroupEntry* find_catalog_entry(const std::string& name);

/// Check the maximal-subgroup condition against a catalog entry: prime-index
/// descriptors must have verifiably prime index, constructible descriptors
/// are built and tested, coprime-order descriptors must have order coprime
/// to p.  Malformed entries (no descriptors, index*order mismatch, failed
/// construction, coprime claim false for this p) throw InvalidArgument.
MaximalAnalysis analyze_maximals_catalog(const LargeGroupEntry& entry, std::uint64_t p);

/// Which shape the quotient by the solvable radical takes, for a
/// non-solvable group whose maximal subgroups are all 2-nilpotent or of
/// prime index.
enum class QuotientFamily {
    simple_quotient,        ///< G/S(G) is Alt(5), PSL(2,7), or PSL(2,11)
    almost_simple_quotient, ///< G/S(G) is Sym(5) or PGL(2,7)
    psl2_power_section,     ///< the odd-residual section is a direct power of
                            ///< a PSL(2,q) with q in the recognized family
    unrecognized,           ///< reported explicitly, never guessed
};

std::string to_string(QuotientFamily f);

struct RadicalQuotientResult {
    std::string group;
    std::uint64_t group_order = 0;
    QuotientFamily family = QuotientFamily::unrecognized;
    std::string quotient_type;           ///< identified name of G/S(G), or "-"
    std::uint64_t radical_order = 0;
    /// True iff the solvable radical equals the second upper-series term
    /// O_{2',2}(G); a mismatch is flagged here, not thrown.
    bool radical_matches_series = false;
    /// psl2_power_section only: whether the even-order residual O^2(G) is a
    /// proper subgroup (false marks the boundary case, e.g. a simple group).
    bool residual_proper = false;
    int section_power = 0;               ///< k with section isomorphic to S^k
    std::string section_type;            ///< the PSL(2,q) member name
    std::string detail;                  ///< set when unrecognized
    std::string to_text(std::int64_t time_ms = -1) const;
};

/// Classify a non-solvable group by its quotient over the solvable radical.
/// Precondition (not re-checked here): the maximal-subgroup condition holds
/// at p = 2.  Throws InvalidArgument for solvable input.
RadicalQuotientResult classify_radical_quotient(const PermGroup& g,
                                                const std::string& name = "");

/// Verdict on the bounded upper series claim: the alternating series reaches
/// the whole group within `term_limit` steps and the p-length is at most 2.
struct SeriesBoundCheck {
    std::string group;
    std::uint64_t group_order = 0;
    std::uint64_t p = 0;
    PSeries series;
    std::size_t term_limit = 0;   ///< max step index: 4 (p=2) or 5 (p odd)
    bool reaches = false;         ///< reaches the group within the limit
    bool length_ok = false;       ///< p_length <= 2
    bool pass = false;
    std::string to_text(std::int64_t time_ms = -1) const;
};

/// For solvable g satisfying the condition at p = 2, the series
/// 1 <= O_{2'} <= O_{2',2} <= O_{2',2,2'} <= O_{2',2,2',2} ends at g.
/// Throws InvalidArgument for non-solvable input.
SeriesBoundCheck verify_two_length_bound(const PermGroup& g, const std::string& name = "");

/// For p odd and g p-solvable satisfying the condition at p, the series
/// with steps p',p,p',p,p' ends at g; in particular the p-length is at
/// most 2.  Throws InvalidArgument unless p is an odd prime and g is
/// p-solvable.
SeriesBoundCheck verify_p_length_bound(const PermGroup& g, std::uint64_t p,
                                       const std::string& name = "");

/// Shape of one Sylow normalizer of PSL(2,q).
enum class SylowNormalizerShape {
    defining,     ///< r = the defining characteristic: N = R x| C_{(q-1)/d}
    torus_plus,   ///< odd r | (q+1)/d: N = C_{(q+1)/d} x| C2
    torus_minus,  ///< odd r | (q-1)/d: N = C_{(q-1)/d} x| C2
    sylow2_self,  ///< r = 2, q = +-1 mod 8: N = R
    alt4,         ///< r = 2, q = +-3 mod 8: N isomorphic to Alt(4)
};

std::string to_string(SylowNormalizerShape s);

struct SylowNormalizerCase {
    std::uint64_t r = 0;
    std::uint64_t normalizer_order = 0;
    std::uint64_t expected_order = 0;
    SylowNormalizerShape shape = SylowNormalizerShape::defining;
    bool ok = false;   ///< order and structural shape both verified
};

struct SylowNormalizerGrid {
    std::uint64_t q = 0;
    std::string group;
    std::uint64_t group_order = 0;
    std::vector<SylowNormalizerCase> cases;  ///< ascending r
    bool pass = false;
    std::string to_text(std::int64_t time_ms = -1) const;
};

/// For every prime r dividing |PSL(2,q)|, compute the normalizer of a Sylow
/// r-subgroup and verify it has the predicted order and shape.  Accepts
/// prime powers 4 <= q <= 19.
SylowNormalizerGrid verify_sylow_normalizers_psl2(std::uint64_t q);

/// A minimal normal subgroup outside the p-solvable class, together with a
/// maximal subgroup that avoids it and is not p-nilpotent.
struct MinimalNormalWitness {
    std::uint64_t normal_order = 0;
    std::uint64_t maximal_index = 0;
    std::uint64_t maximal_order = 0;
    std::string maximal_type;
    bool found = false;
};

struct WitnessSearch {
    std::string group;
    std::uint64_t group_order = 0;
    std::uint64_t p = 0;
    std::vector<MinimalNormalWitness> witnesses;  ///< one per qualifying subgroup
    bool pass = false;                            ///< every witness was found
    std::string to_text(std::int64_t time_ms = -1) const;
};

/// For p odd: every minimal normal subgroup of g that is not p-solvable must
/// be avoided by some non-p-nilpotent maximal subgroup.  Throws
/// InvalidArgument when p is not an odd prime or no minimal normal subgroup
/// qualifies.
WitnessSearch verify_minimal_normal_witnesses(const PermGroup& g, std::uint64_t p,
                                              const std::string& name = "");

}  // namespace permlab
