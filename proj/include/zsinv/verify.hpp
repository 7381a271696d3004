#pragma once

#include "zsinv/search.hpp"
#include "zsinv/witness.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zsinv {

enum class Provenance { computed_exhaustive, witness_only, property_sample };
std::string_view provenance_name(Provenance p);

/// How computed is compared with predicted.
enum class Relation { equal, at_least, at_most };
std::string_view relation_name(Relation r);

struct VerifyRow {
    std::string group;
    std::string invariant;
    std::vector<int> params;
    std::optional<long long> predicted;
    /// Exact value, or the cap + 1 lower bound when undetermined. For
    /// witness-only rows this is the witness length + 1.
    std::optional<long long> computed;
    Relation relation = Relation::equal;
    Provenance provenance = Provenance::computed_exhaustive;
    SearchStatus status = SearchStatus::exact;
    bool match = false;
    /// Known discrepancy in the stated result; reported, not a failure.
    bool flagged = false;
    std::optional<Sequence> witness;
    bool witness_free = false;
    SearchStats stats;
    std::string note;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyRow> rows;

    bool all_match() const;
    bool any_undetermined() const;
};

/// Formula families with a closed form for s_dN.
enum class FormulaFamily { cyclic, rank2, dihedral_odd, dihedral_coprime, metacyclic, abelian_dstar };
std::string_view formula_family_name(FormulaFamily f);
FormulaFamily parse_formula_family(std::string_view s);

/// One row per instance. Parameters per family:
///   cyclic (n, d); rank2 (m, n, d); dihedral_odd / dihedral_coprime (n, d);
///   metacyclic (p, q, s, k), witness-only; abelian_dstar (n_1, ..., n_r, d),
///   compares s_dN(G) against D*(G + C_d).
VerifyReport verify_formula(FormulaFamily family, const std::vector<std::vector<int>>& instances,
                            const SearchOptions& opts = {});

/// Runs the search and compares its value with the prediction; the witness
/// is re-checked from scratch.
VerifyRow verify_instance(const GroupPtr& g, InvariantKind kind, int param, std::optional<long long> predicted,
                          Relation relation, const SearchOptions& opts);
/// Witness-only row: the witness must be free and have length predicted - 1.
VerifyRow verify_witness(const Witness& w, const GroupPtr& g, InvariantKind kind, int param, long long predicted);

struct SuiteArgs {
    int max_n = 5;
    std::vector<std::pair<int, int>> pairs;  ///< (n, d)
    int p = 3, q = 7, s = 2, k = 1;
    int samples = 0;
    std::uint64_t seed = 1;
    bool witness_only = false;
    SearchOptions search;
};

std::vector<std::string_view> suite_names();
/// Throws std::invalid_argument for an unknown suite.
VerifyReport run_suite(std::string_view suite, const SuiteArgs& args);

/// Counts random length-`length` sequences over g (uniform terms, seeded)
/// that contain a subsequence matching q. Returns the number of misses.
struct SampleResult {
    std::size_t samples = 0;
    std::size_t misses = 0;
    std::optional<Sequence> first_miss;
};
SampleResult sample_forced(const GroupPtr& g, const ProductQuery& q, int length, std::size_t samples,
                           std::uint64_t seed);

/// The free length-n sequences of the inverse family (y^t)^[n-1] xy^s.
std::vector<Sequence> inverse_family_members(int n);

}  // namespace zsinv
