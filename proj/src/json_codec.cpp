#include "oagraph/json_codec.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace oagraph {

namespace {

constexpr std::array<std::string_view, kRecordKindCount> kDirNames = {
    "publication", "dataset",      "software", "otherresearchproduct", "datasource",
    "organization", "project",     "community", "relation",
};

using nlohmann::json;

json parse_json_line(std::string_view line, std::string& reason) {
    json doc = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) {
        reason = "malformed JSON";
        return json();
    }
    if (!doc.is_object()) {
        reason = "not a JSON object";
        return json();
    }
    return doc;
}

// Non-empty string at key, else absent. Empty strings are treated as
// absences so optional fields never carry empty-string sentinels.
std::optional<std::string> opt_string(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string()) return std::nullopt;
    auto value = it->get<std::string>();
    if (value.empty()) return std::nullopt;
    return value;
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::optional<EntityId> required_id(const json& obj, std::string& reason) {
    auto it = obj.find("id");
    if (it == obj.end() || it->is_null()) {
        reason = "missing id";
        return std::nullopt;
    }
    if (!it->is_string() || it->get_ref<const std::string&>().empty()) {
        reason = "empty or non-string id";
        return std::nullopt;
    }
    return it->get<std::string>();
}

}  // namespace

std::string_view dir_name(RecordKind kind) {
    return kDirNames[static_cast<std::size_t>(kind)];
}

std::optional<RecordKind> record_kind_from_dir(std::string_view name) {
    for (std::size_t i = 0; i < kDirNames.size(); ++i) {
        if (kDirNames[i] == name) return static_cast<RecordKind>(i);
    }
    return std::nullopt;
}

std::optional<ResearchProduct> parse_product_record(ProductKind kind, std::string_view line,
                                                    std::string& reason) {
    json doc = parse_json_line(line, reason);
    if (doc.is_null()) return std::nullopt;

    ResearchProduct product;
    product.kind = kind;
    auto id = required_id(doc, reason);
    if (!id) return std::nullopt;
    product.id = std::move(*id);

    if (auto it = doc.find("publicationdate"); it != doc.end() && !it->is_null()) {
        if (!it->is_string()) {
            reason = "unparseable publicationdate";
            return std::nullopt;
        }
        auto date = Date::parse(it->get_ref<const std::string&>());
        if (!date) {
            reason = "unparseable publicationdate: " + it->get<std::string>();
            return std::nullopt;
        }
        product.publication_date = *date;
    }

    if (auto it = doc.find("bestaccessright"); it != doc.end() && it->is_object()) {
        if (auto label = opt_string(*it, "label")) {
            product.best_access_right = AccessRight{std::move(*label)};
        }
    }

    if (auto it = doc.find("pid"); it != doc.end() && it->is_array()) {
        for (const auto& entry : *it) {
            if (!entry.is_object()) continue;
            auto value = opt_string(entry, "value");
            if (!value) continue;  // a pid without a value carries nothing
            Pid pid;
            pid.value = std::move(*value);
            if (auto scheme = opt_string(entry, "scheme")) {
                pid.scheme = lowercase(std::move(*scheme));
            }
            product.pids.push_back(std::move(pid));
        }
    }

    product.title = opt_string(doc, "title");
    return product;
}

std::optional<Organization> parse_organization_record(std::string_view line,
                                                      std::string& reason) {
    json doc = parse_json_line(line, reason);
    if (doc.is_null()) return std::nullopt;

    Organization org;
    auto id = required_id(doc, reason);
    if (!id) return std::nullopt;
    org.id = std::move(*id);

    org.legal_name = opt_string(doc, "legalname");
    org.legal_short_name = opt_string(doc, "legalshortname");
    if (auto it = doc.find("country"); it != doc.end() && it->is_object()) {
        org.country_code = opt_string(*it, "code");
    }
    return org;
}

std::optional<NamedEntity> parse_named_record(std::string_view line, std::string& reason) {
    json doc = parse_json_line(line, reason);
    if (doc.is_null()) return std::nullopt;

    NamedEntity entity;
    auto id = required_id(doc, reason);
    if (!id) return std::nullopt;
    entity.id = std::move(*id);
    entity.name = opt_string(doc, "name");
    return entity;
}

std::optional<Relation> parse_relation_record(std::string_view line, std::string& reason) {
    json doc = parse_json_line(line, reason);
    if (doc.is_null()) return std::nullopt;

    Relation rel;
    if (auto source = opt_string(doc, "source")) {
        rel.source = std::move(*source);
    } else {
        reason = "missing source";
        return std::nullopt;
    }
    if (auto target = opt_string(doc, "target")) {
        rel.target = std::move(*target);
    } else {
        reason = "missing target";
        return std::nullopt;
    }
    auto reltype = doc.find("reltype");
    if (reltype == doc.end() || !reltype->is_object()) {
        reason = "missing reltype.name";
        return std::nullopt;
    }
    if (auto name = opt_string(*reltype, "name")) {
        rel.rel_name = std::move(*name);
    } else {
        reason = "missing reltype.name";
        return std::nullopt;
    }
    return rel;
}

nlohmann::json to_json(const ResearchProduct& product) {
    json doc;
    doc["id"] = product.id;
    if (product.publication_date) doc["publicationdate"] = product.publication_date->to_string();
    if (product.best_access_right) {
        doc["bestaccessright"] = json{{"label", product.best_access_right->label}};
    }
    if (!product.pids.empty()) {
        json pids = json::array();
        for (const auto& pid : product.pids) {
            pids.push_back(json{{"scheme", pid.scheme}, {"value", pid.value}});
        }
        doc["pid"] = std::move(pids);
    }
    if (product.title) doc["title"] = *product.title;
    return doc;
}

nlohmann::json to_json(const Organization& organization) {
    json doc;
    doc["id"] = organization.id;
    if (organization.legal_name) doc["legalname"] = *organization.legal_name;
    if (organization.legal_short_name) doc["legalshortname"] = *organization.legal_short_name;
    if (organization.country_code) {
        doc["country"] = json{{"code", *organization.country_code}};
    }
    return doc;
}

nlohmann::json to_json(const NamedEntity& entity) {
    json doc;
    doc["id"] = entity.id;
    if (entity.name) doc["name"] = *entity.name;
    return doc;
}

nlohmann::json to_json(const RelationView& relation) {
    json doc;
    doc["source"] = relation.source;
    doc["target"] = relation.target;
    doc["reltype"] = json{{"name", relation.rel_name}};
    return doc;
}

}  // namespace oagraph
