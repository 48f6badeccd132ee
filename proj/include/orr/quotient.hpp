// Quotients X = (P^1 x Y)/G of a K3 surface Y by a finite group G acting
// diagonally. S = Y/G has Du Val singularities of type A; each A_n point on S
// sits under two cyclic quotient points of index n+1 on X, and
// c1.c2(X) = 48/|G|.
//
// When the minimal resolution of S is an Enriques surface, the symplectic
// subgroup G_s has index 2 and Y/G_s -> S is an etale double cover, so the
// Enriques rows are the K3 rows whose singularities come in couples, halved.

#pragma once

#include "orr/riemann_roch.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace orr {

/// Multiset of Du Val A_n points, stored as (n, multiplicity) in ascending n.
class SingularityProfile {
public:
    using Entry = std::pair<std::int64_t, std::int64_t>;

    SingularityProfile() = default;
    explicit SingularityProfile(std::vector<Entry> entries);

    /// `kA_n` or `A_n` terms, comma separated, e.g. "2A_3,9A_1".
    static SingularityProfile parse(std::string_view text);
    /// Canonical form, ascending n, e.g. "9A_1,2A_3".
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }

    friend bool operator==(const SingularityProfile&, const SingularityProfile&) = default;
    friend auto operator<=>(const SingularityProfile&, const SingularityProfile&) = default;

private:
    std::vector<Entry> entries_;
};

enum class CoverType { K3, Enriques };

std::string_view to_string(CoverType cover);
/// chi(O_X): 2 over K3, 1 over Enriques.
std::int64_t expected_chi(CoverType cover);

struct QuotientScenario {
    std::string id;     // row number in the source table, e.g. "55" or "16'"
    std::string label;  // group name, carried as-is
    std::int64_t group_order = 1;
    SingularityProfile profile;
    CoverType cover = CoverType::K3;
    IndexMultiset expected_indices;
    Rational expected_c1c2;

    /// Arithmetic content only: (order, profile, cover). Labels and ids are ignored.
    [[nodiscard]] bool same_content(const QuotientScenario& other) const;
};

IndexMultiset indices_from_profile(const SingularityProfile& profile);

/// 48/|G|. Throws std::invalid_argument for order < 1.
Rational quotient_c1c2(std::int64_t order);

/// c1.c2 for quotients of P^1-bundles over abelian surfaces.
inline Rational abelian_cover_c1c2() { return Rational(0); }

struct ScenarioCheck {
    char id;  // 'a' indices, 'b' c1c2, 'c' Euler identity
    bool passed;
    std::string detail;
};

struct ScenarioReport {
    std::string row_id;
    std::vector<ScenarioCheck> checks;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] std::string failed_ids() const;
    [[nodiscard]] std::string describe() const;
};

/// (a) R_X from the profile matches; (b) 48/|G| matches c1c2;
/// (c) (c1c2 + weight(R_X)) / 24 equals 2 (K3) or 1 (Enriques).
ScenarioReport check_scenario(const QuotientScenario& scenario);

/// Keeps the K3 rows whose profile has every multiplicity even and halves
/// them. Throws std::invalid_argument on non-K3 input, or when a row's own
/// R_X does not halve to the R_X of the halved profile.
std::vector<QuotientScenario> derive_enriques(const std::vector<QuotientScenario>& k3_rows);

/// Embedded fixtures: 4 (groups for K3) and 5 (G_s for Enriques).
std::string_view quotient_fixture(int table);

/// CSV lines `id,label,order,profile,R_X,c1c2`; '#' lines ignored.
std::vector<QuotientScenario> parse_quotient_fixture(std::string_view text, CoverType cover);

struct ScenarioSetDiff {
    std::vector<QuotientScenario> missing;     // expected, not derived
    std::vector<QuotientScenario> unexpected;  // derived, not expected
    std::vector<std::pair<QuotientScenario, QuotientScenario>> mismatched;  // same content, other columns differ

    [[nodiscard]] bool ok() const { return missing.empty() && unexpected.empty() && mismatched.empty(); }
    [[nodiscard]] std::string describe() const;
};

/// Set comparison keyed by same_content; R_X and c1c2 must agree too.
ScenarioSetDiff compare_scenarios(const std::vector<QuotientScenario>& expected,
                                  const std::vector<QuotientScenario>& actual);

}  // namespace orr
