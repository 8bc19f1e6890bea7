#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "oagraph/model.hpp"

namespace oagraph {

// Interned string reference. Dense, 0-based, valid within one GraphStore.
using StrRef = std::uint32_t;
inline constexpr StrRef kNoRef = std::numeric_limits<StrRef>::max();

// Bidirectional string <-> dense index mapping. Strings live in a deque so
// views handed out (and used as hash keys) stay stable as the pool grows.
class StringPool {
public:
    StrRef intern(std::string_view s);
    StrRef find(std::string_view s) const;  // kNoRef when unseen
    std::string_view at(StrRef ref) const { return pool_[ref]; }
    std::size_t size() const { return pool_.size(); }

private:
    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const noexcept {
            return std::hash<std::string_view>{}(s);
        }
    };
    struct Eq {
        using is_transparent = void;
        bool operator()(std::string_view a, std::string_view b) const noexcept {
            return a == b;
        }
    };

    std::deque<std::string> pool_;
    std::unordered_map<std::string_view, StrRef, Hash, Eq> index_;
};

enum class EntityClass : std::uint8_t {
    None,
    Product,
    Organization,
    Project,
    Datasource,
    Community,
};

// Non-owning view over one relation; string_views point into the store.
struct RelationView {
    std::string_view source;
    std::string_view target;
    std::string_view rel_name;
};

struct RelationRefs {
    StrRef source;
    StrRef target;
    StrRef name;  // index into the rel-name pool, not the id pool
};

struct StoreStats {
    std::size_t publications = 0;
    std::size_t datasets = 0;
    std::size_t softwares = 0;
    std::size_t others = 0;
    std::size_t datasources = 0;
    std::size_t organizations = 0;
    std::size_t projects = 0;
    std::size_t communities = 0;
    std::size_t relations = 0;
    std::size_t distinct_relation_names = 0;
    std::size_t dangling_relations = 0;

    std::size_t products() const { return publications + datasets + softwares + others; }
    std::size_t entities() const {
        return products() + datasources + organizations + projects + communities;
    }
    bool operator==(const StoreStats&) const = default;
};

// Immutable indexed collection of entities plus relation adjacency.
//
// Entity records are stored in insertion order in per-kind columns; entity
// ids and relation endpoints share one interned id pool. Relations are kept
// columnar (source/target/name refs) with three CSR permutations so that
// the same relation list can be walked by source, by target, or by name.
// Relations whose endpoints never appear as entities (dangling) are kept
// and counted; subsetting needs them to decide inclusion.
class GraphStore {
public:
    class Builder;

    GraphStore() = default;
    GraphStore(GraphStore&&) = default;
    GraphStore& operator=(GraphStore&&) = default;

    // --- entity access -----------------------------------------------------
    const std::vector<ResearchProduct>& products() const { return products_; }
    const std::vector<Organization>& organizations() const { return organizations_; }
    const std::vector<NamedEntity>& projects() const { return projects_; }
    const std::vector<NamedEntity>& datasources() const { return datasources_; }
    const std::vector<NamedEntity>& communities() const { return communities_; }

    const ResearchProduct* find_product(std::string_view id) const;
    const Organization* find_organization(std::string_view id) const;
    const NamedEntity* find_project(std::string_view id) const;
    const NamedEntity* find_datasource(std::string_view id) const;
    const NamedEntity* find_community(std::string_view id) const;
    bool contains_entity(std::string_view id) const;

    // --- interned access (hot paths: subsetting, metrics) -------------------
    std::size_t id_pool_size() const { return ids_.size(); }
    StrRef id_ref(std::string_view id) const { return ids_.find(id); }
    std::string_view id_str(StrRef ref) const { return ids_.at(ref); }
    const ResearchProduct* product_by_ref(StrRef ref) const;
    const Organization* organization_by_ref(StrRef ref) const;
    EntityClass classify_ref(StrRef ref) const;
    bool entity_present(StrRef ref) const { return classify_ref(ref) != EntityClass::None; }

    // --- relations ----------------------------------------------------------
    std::size_t relation_count() const { return rel_source_.size(); }
    RelationView relation(std::size_t index) const;
    RelationRefs relation_refs(std::size_t index) const {
        return {rel_source_[index], rel_target_[index], rel_name_[index]};
    }
    Relation relation_value(std::size_t index) const;

    // Relation indices (positions in the master list), grouped by key.
    std::span<const std::uint32_t> relations_named(std::string_view rel_name) const;
    std::span<const std::uint32_t> relations_from(std::string_view source_id) const;
    std::span<const std::uint32_t> relations_into(std::string_view target_id) const;
    std::span<const std::uint32_t> relations_from_ref(StrRef source) const;
    std::span<const std::uint32_t> relations_into_ref(StrRef target) const;

    std::size_t distinct_relation_name_count() const { return rel_names_.size(); }
    std::size_t dangling_relation_count() const { return dangling_relations_; }

    StoreStats stats() const;

private:
    friend class Builder;
    friend struct StoreCodec;  // binary persistence (store_format.cpp)

    void build_indexes();

    StringPool ids_;
    StringPool rel_names_;

    std::vector<ResearchProduct> products_;
    std::vector<Organization> organizations_;
    std::vector<NamedEntity> projects_;
    std::vector<NamedEntity> datasources_;
    std::vector<NamedEntity> communities_;

    // id ref -> slot in the matching entity column
    std::unordered_map<StrRef, std::uint32_t> product_slots_;
    std::unordered_map<StrRef, std::uint32_t> organization_slots_;
    std::unordered_map<StrRef, std::uint32_t> project_slots_;
    std::unordered_map<StrRef, std::uint32_t> datasource_slots_;
    std::unordered_map<StrRef, std::uint32_t> community_slots_;

    std::vector<StrRef> rel_source_;
    std::vector<StrRef> rel_target_;
    std::vector<StrRef> rel_name_;

    // CSR permutations over the master relation list
    std::vector<std::uint32_t> by_source_perm_;
    std::vector<std::uint32_t> by_source_offsets_;
    std::vector<std::uint32_t> by_target_perm_;
    std::vector<std::uint32_t> by_target_offsets_;
    std::vector<std::uint32_t> by_name_perm_;
    std::vector<std::uint32_t> by_name_offsets_;

    std::size_t dangling_relations_ = 0;
};

// Single-writer accumulator. add_* calls replace an existing record with
// the same id (last write wins) and report the replacement so ingest can
// surface duplicate-id warnings.
class GraphStore::Builder {
public:
    Builder() = default;

    bool add_product(ResearchProduct product);
    bool add_organization(Organization organization);
    bool add_project(NamedEntity project);
    bool add_datasource(NamedEntity datasource);
    bool add_community(NamedEntity community);
    void add_relation(const Relation& relation);
    void add_relation(std::string_view source, std::string_view target,
                      std::string_view rel_name);

    std::size_t relation_count() const { return store_.rel_source_.size(); }

    // Finalizes indexes and the dangling count; the builder is spent afterwards.
    GraphStore finish() &&;

private:
    template <typename T>
    bool add_entity(T record, std::vector<T>& column,
                    std::unordered_map<StrRef, std::uint32_t>& slots);

    GraphStore store_;
};

}  // namespace oagraph
