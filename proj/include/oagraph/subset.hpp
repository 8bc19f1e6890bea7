#pragma once

#include <filesystem>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "oagraph/store.hpp"

namespace oagraph {

// Inclusive date window on both ends.
struct DateWindow {
    Date from;
    Date to;

    bool contains(const Date& d) const { return from <= d && d <= to; }
};

class WindowError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Throws WindowError unless from <= to.
DateWindow make_window(Date from, Date to);

struct SubsetManifest {
    DateWindow window;
    // Selected ids, sorted ascending within each kind.
    std::vector<EntityId> publications;
    std::vector<EntityId> datasets;
    std::vector<EntityId> softwares;
    std::vector<EntityId> others;
    std::vector<EntityId> organizations;
    std::vector<EntityId> projects;
    std::vector<EntityId> datasources;
    std::vector<EntityId> communities;
    std::size_t relation_count = 0;

    std::size_t entity_count() const;
    nlohmann::json to_json() const;  // window + counts
};

struct SubsetResult {
    GraphStore store;
    SubsetManifest manifest;
};

// Phase one: products (all four kinds) whose publication date is present
// and inside the window. Dateless products are never seeds. Sorted ids.
std::vector<EntityId> select_seed_products(const GraphStore& store, const DateWindow& window);

// Phase two: non-product entities connected to a seed product by one
// relation hop in either direction. Products are never added here. Sorted.
std::vector<EntityId> expand_entities(const GraphStore& store,
                                      const std::vector<EntityId>& seeds);

// Phase three: relations whose both endpoints are selected, in store order.
std::vector<Relation> induce_relations(const GraphStore& store,
                                       const std::vector<EntityId>& selected);

// All three phases; the output store holds only selected entities and
// induced relations, so it never contains dangling edges.
SubsetResult extract_subset(const GraphStore& store, const DateWindow& window);

// Writes the store back as a dump directory readable by build_store:
// per-kind subdirectories with one part-00000.json each (empty kinds get an
// empty subdirectory). Throws std::runtime_error on I/O failure.
void write_dump_layout(const GraphStore& store, const std::filesystem::path& out_dir);

}  // namespace oagraph
