#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oagraph {

// Opaque OpenAIRE identifier. Unique per entity kind within a store.
using EntityId = std::string;

// The four research product kinds; their union forms the `results` table.
enum class ProductKind : std::uint8_t { Publication, Dataset, Software, Other };

std::string_view to_string(ProductKind kind);

// Calendar date with day/month granularity. Comparison is lexicographic
// (year, month, day); valid() checks the Gregorian calendar incl. leap years.
struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    auto operator<=>(const Date&) const = default;

    bool valid() const;

    // Accepts YYYY, YYYY-MM, YYYY-MM-DD; missing month/day default to 01.
    // Returns nullopt for anything else or for invalid calendar dates.
    static std::optional<Date> parse(std::string_view text);

    std::string to_string() const;  // always YYYY-MM-DD
};

// Persistent identifier (e.g. DOI). Scheme is stored lowercase.
struct Pid {
    std::string scheme;
    std::string value;

    bool operator==(const Pid&) const = default;
};

// Access regime label, preserved verbatim from the dump. Canonical labels
// are OPEN, EMBARGO, CLOSED; everything else is an open-vocabulary value.
struct AccessRight {
    std::string label;

    bool operator==(const AccessRight&) const = default;
};

enum class AccessClass : std::uint8_t { Open, Embargo, Closed, Other, Missing };

// Byte-exact mapping of the three canonical labels; any other present
// label classifies as Other, an absent access right as Missing.
AccessClass classify_access(const std::optional<AccessRight>& access);

struct ResearchProduct {
    EntityId id;
    ProductKind kind = ProductKind::Publication;
    std::vector<Pid> pids;  // input order preserved; first entry is canonical
    std::optional<Date> publication_date;
    std::optional<AccessRight> best_access_right;
    std::optional<std::string> title;

    bool operator==(const ResearchProduct&) const = default;
};

struct Organization {
    EntityId id;
    std::optional<std::string> legal_name;
    std::optional<std::string> legal_short_name;
    std::optional<std::string> country_code;  // 2-letter code, non-empty when present

    bool operator==(const Organization&) const = default;
};

// Shared shape for projects, datasources and communities: the queries only
// ever touch their ids, so a name is all we keep.
struct NamedEntity {
    EntityId id;
    std::optional<std::string> name;

    bool operator==(const NamedEntity&) const = default;
};

// Typed directed edge. rel_name is matched byte-exact everywhere; the
// source data mixes casings ("IsCitedBy" vs "isParticipant") and we do
// not guess a normalization.
struct Relation {
    EntityId source;
    EntityId target;
    std::string rel_name;

    bool operator==(const Relation&) const = default;
    auto operator<=>(const Relation&) const = default;
};

// legal_short_name if present, else legal_name, else absent. Mirrors
// COALESCE(legalshortname, legalname); never fabricates a name.
std::optional<std::string> display_name(const Organization& org);

}  // namespace oagraph
