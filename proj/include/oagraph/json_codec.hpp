#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "oagraph/model.hpp"
#include "oagraph/store.hpp"

namespace oagraph {

// The nine record kinds a dump directory can hold, named after their
// subdirectories.
enum class RecordKind : std::uint8_t {
    Publication,
    Dataset,
    Software,
    OtherResearchProduct,
    Datasource,
    Organization,
    Project,
    Community,
    Relation,
};

inline constexpr std::size_t kRecordKindCount = 9;

std::string_view dir_name(RecordKind kind);
std::optional<RecordKind> record_kind_from_dir(std::string_view name);

// Field paths follow the published OpenAIRE schema identifiers: pid[].scheme,
// pid[].value, publicationdate, bestaccessright.label, country.code,
// legalname, legalshortname, reltype.name. Unknown fields are ignored;
// missing optional fields become absences. On rejection the reason explains
// which constraint failed.

std::optional<ResearchProduct> parse_product_record(ProductKind kind, std::string_view line,
                                                    std::string& reason);
std::optional<Organization> parse_organization_record(std::string_view line,
                                                      std::string& reason);
std::optional<NamedEntity> parse_named_record(std::string_view line, std::string& reason);
std::optional<Relation> parse_relation_record(std::string_view line, std::string& reason);

// One-line JSON serializations; parsing them back reproduces the same value.
nlohmann::json to_json(const ResearchProduct& product);
nlohmann::json to_json(const Organization& organization);
nlohmann::json to_json(const NamedEntity& entity);
nlohmann::json to_json(const RelationView& relation);

}  // namespace oagraph
