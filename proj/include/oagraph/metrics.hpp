#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oagraph/store.hpp"

namespace oagraph {

// Relation names the queries match, byte-exact.
inline constexpr std::string_view kIsCitedBy = "IsCitedBy";
inline constexpr std::string_view kIsAuthorInstitutionOf = "isAuthorInstitutionOf";
inline constexpr std::string_view kIsParticipant = "isParticipant";

struct CitationCount {
    EntityId product_id;
    std::optional<Pid> canonical_pid;  // the product's first pid
    std::uint64_t count = 0;           // >= 1: uncited publications never appear

    bool operator==(const CitationCount&) const = default;
};

struct CountryAccessRow {
    std::string country;
    std::uint64_t total = 0;
    std::uint64_t open = 0;
    std::uint64_t embargo = 0;
    std::uint64_t closed = 0;
    std::uint64_t other = 0;  // non-canonical labels; absent labels count in total only

    bool operator==(const CountryAccessRow&) const = default;
};

struct OrgYearAccessRow {
    std::optional<std::string> organization;  // display name; absent groups under null
    std::optional<int> year;                  // absent publication dates group under null
    std::uint64_t total = 0;
    std::uint64_t open = 0;
    std::uint64_t embargo = 0;
    std::uint64_t closed = 0;
    std::uint64_t other = 0;

    bool operator==(const OrgYearAccessRow&) const = default;
};

struct CoParticipationEdge {
    std::string left;   // left <= right lexicographically
    std::string right;
    std::uint64_t weight = 0;

    bool operator==(const CoParticipationEdge&) const = default;
};

struct NormalizedEdge {
    std::string left;
    std::string right;
    std::uint64_t weight = 0;
    double normalized_weight = 0.0;  // weight / max weight, in (0, 1]

    bool operator==(const NormalizedEdge&) const = default;
};

enum class CoParticipationMode : std::uint8_t {
    // One count per project and unordered country pair, self-pairs excluded.
    Distinct,
    // Bag self-join over per-project country rows, keeping self-pairs and
    // same-country multiplicity, exactly as the SQL formulation produces.
    PaperCompat,
};

// Citations accrued per publication: relations with the publication as
// SOURCE of IsCitedBy, bag-counted. Descending by count, ties by id.
std::vector<CitationCount> citation_counts(const GraphStore& store);

// Access-right breakdown of results joined to organizations over
// isAuthorInstitutionOf, grouped by organization country. Organizations
// without a country are excluded. One counted row per matching relation, so
// a product affiliated with two same-country orgs counts twice. Descending
// by total, ties by country.
std::vector<CountryAccessRow> access_breakdown_by_country(const GraphStore& store);

// Same join grouped by (display name, publication year); absent names and
// dates group under null keys. Ordered by organization (nulls first), then
// total descending, then year (nulls first).
std::vector<OrgYearAccessRow> oa_breakdown_by_org_year(const GraphStore& store);

// Country co-participation network over isParticipant relations. Projects
// are identified by relation target id; only organizations with a country
// contribute. Descending by weight, ties by (left, right).
std::vector<CoParticipationEdge> co_participation_edges(const GraphStore& store,
                                                        CoParticipationMode mode);

// Edges touching the given country, input order preserved.
std::vector<CoParticipationEdge> focus_country(const std::vector<CoParticipationEdge>& edges,
                                               std::string_view country);

// Scales weights by the maximum; the max edge maps to exactly 1.0 and the
// input order is preserved. Throws std::invalid_argument on empty input.
std::vector<NormalizedEdge> normalize_weights(const std::vector<CoParticipationEdge>& edges);

}  // namespace oagraph
