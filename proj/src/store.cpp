#include "oagraph/store.hpp"

#include <algorithm>
#include <cassert>

namespace oagraph {

StrRef StringPool::intern(std::string_view s) {
    if (auto it = index_.find(s); it != index_.end()) return it->second;
    pool_.emplace_back(s);
    auto ref = static_cast<StrRef>(pool_.size() - 1);
    index_.emplace(pool_.back(), ref);
    return ref;
}

StrRef StringPool::find(std::string_view s) const {
    auto it = index_.find(s);
    return it == index_.end() ? kNoRef : it->second;
}

namespace {

template <typename T>
const T* lookup(const std::vector<T>& column,
                const std::unordered_map<StrRef, std::uint32_t>& slots, StrRef ref) {
    if (ref == kNoRef) return nullptr;
    auto it = slots.find(ref);
    return it == slots.end() ? nullptr : &column[it->second];
}

// Stable counting sort of relation indices by key; offsets gets pool_size+1
// entries so that [offsets[k], offsets[k+1]) is the bucket for key k.
void build_csr(const std::vector<StrRef>& keys, std::size_t pool_size,
               std::vector<std::uint32_t>& perm, std::vector<std::uint32_t>& offsets) {
    offsets.assign(pool_size + 1, 0);
    for (StrRef key : keys) offsets[key + 1]++;
    for (std::size_t i = 1; i <= pool_size; ++i) offsets[i] += offsets[i - 1];
    perm.resize(keys.size());
    std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (std::uint32_t i = 0; i < keys.size(); ++i) perm[cursor[keys[i]]++] = i;
}

std::span<const std::uint32_t> csr_bucket(const std::vector<std::uint32_t>& perm,
                                          const std::vector<std::uint32_t>& offsets,
                                          StrRef key) {
    if (key == kNoRef || key + 1 >= offsets.size()) return {};
    return {perm.data() + offsets[key], offsets[key + 1] - offsets[key]};
}

}  // namespace

const ResearchProduct* GraphStore::find_product(std::string_view id) const {
    return lookup(products_, product_slots_, ids_.find(id));
}

const Organization* GraphStore::find_organization(std::string_view id) const {
    return lookup(organizations_, organization_slots_, ids_.find(id));
}

const NamedEntity* GraphStore::find_project(std::string_view id) const {
    return lookup(projects_, project_slots_, ids_.find(id));
}

const NamedEntity* GraphStore::find_datasource(std::string_view id) const {
    return lookup(datasources_, datasource_slots_, ids_.find(id));
}

const NamedEntity* GraphStore::find_community(std::string_view id) const {
    return lookup(communities_, community_slots_, ids_.find(id));
}

bool GraphStore::contains_entity(std::string_view id) const {
    return entity_present(ids_.find(id));
}

const ResearchProduct* GraphStore::product_by_ref(StrRef ref) const {
    return lookup(products_, product_slots_, ref);
}

const Organization* GraphStore::organization_by_ref(StrRef ref) const {
    return lookup(organizations_, organization_slots_, ref);
}

EntityClass GraphStore::classify_ref(StrRef ref) const {
    if (ref == kNoRef) return EntityClass::None;
    if (product_slots_.contains(ref)) return EntityClass::Product;
    if (organization_slots_.contains(ref)) return EntityClass::Organization;
    if (project_slots_.contains(ref)) return EntityClass::Project;
    if (datasource_slots_.contains(ref)) return EntityClass::Datasource;
    if (community_slots_.contains(ref)) return EntityClass::Community;
    return EntityClass::None;
}

RelationView GraphStore::relation(std::size_t index) const {
    return {ids_.at(rel_source_[index]), ids_.at(rel_target_[index]),
            rel_names_.at(rel_name_[index])};
}

Relation GraphStore::relation_value(std::size_t index) const {
    auto view = relation(index);
    return {std::string(view.source), std::string(view.target), std::string(view.rel_name)};
}

std::span<const std::uint32_t> GraphStore::relations_named(std::string_view rel_name) const {
    return csr_bucket(by_name_perm_, by_name_offsets_, rel_names_.find(rel_name));
}

std::span<const std::uint32_t> GraphStore::relations_from(std::string_view source_id) const {
    return csr_bucket(by_source_perm_, by_source_offsets_, ids_.find(source_id));
}

std::span<const std::uint32_t> GraphStore::relations_into(std::string_view target_id) const {
    return csr_bucket(by_target_perm_, by_target_offsets_, ids_.find(target_id));
}

std::span<const std::uint32_t> GraphStore::relations_from_ref(StrRef source) const {
    return csr_bucket(by_source_perm_, by_source_offsets_, source);
}

std::span<const std::uint32_t> GraphStore::relations_into_ref(StrRef target) const {
    return csr_bucket(by_target_perm_, by_target_offsets_, target);
}

StoreStats GraphStore::stats() const {
    StoreStats s;
    for (const auto& product : products_) {
        switch (product.kind) {
            case ProductKind::Publication: s.publications++; break;
            case ProductKind::Dataset: s.datasets++; break;
            case ProductKind::Software: s.softwares++; break;
            case ProductKind::Other: s.others++; break;
        }
    }
    s.datasources = datasources_.size();
    s.organizations = organizations_.size();
    s.projects = projects_.size();
    s.communities = communities_.size();
    s.relations = relation_count();
    s.distinct_relation_names = rel_names_.size();
    s.dangling_relations = dangling_relations_;
    return s;
}

void GraphStore::build_indexes() {
    build_csr(rel_source_, ids_.size(), by_source_perm_, by_source_offsets_);
    build_csr(rel_target_, ids_.size(), by_target_perm_, by_target_offsets_);
    build_csr(rel_name_, rel_names_.size(), by_name_perm_, by_name_offsets_);

    dangling_relations_ = 0;
    for (std::size_t i = 0; i < rel_source_.size(); ++i) {
        if (!entity_present(rel_source_[i]) || !entity_present(rel_target_[i])) {
            dangling_relations_++;
        }
    }
}

template <typename T>
bool GraphStore::Builder::add_entity(T record, std::vector<T>& column,
                                     std::unordered_map<StrRef, std::uint32_t>& slots) {
    assert(!record.id.empty());
    StrRef ref = store_.ids_.intern(record.id);
    auto [it, inserted] = slots.try_emplace(ref, static_cast<std::uint32_t>(column.size()));
    if (inserted) {
        column.push_back(std::move(record));
    } else {
        column[it->second] = std::move(record);  // last write wins
    }
    return inserted;
}

bool GraphStore::Builder::add_product(ResearchProduct product) {
    return add_entity(std::move(product), store_.products_, store_.product_slots_);
}

bool GraphStore::Builder::add_organization(Organization organization) {
    return add_entity(std::move(organization), store_.organizations_,
                      store_.organization_slots_);
}

bool GraphStore::Builder::add_project(NamedEntity project) {
    return add_entity(std::move(project), store_.projects_, store_.project_slots_);
}

bool GraphStore::Builder::add_datasource(NamedEntity datasource) {
    return add_entity(std::move(datasource), store_.datasources_, store_.datasource_slots_);
}

bool GraphStore::Builder::add_community(NamedEntity community) {
    return add_entity(std::move(community), store_.communities_, store_.community_slots_);
}

void GraphStore::Builder::add_relation(const Relation& relation) {
    add_relation(relation.source, relation.target, relation.rel_name);
}

void GraphStore::Builder::add_relation(std::string_view source, std::string_view target,
                                       std::string_view rel_name) {
    assert(!source.empty() && !target.empty());
    store_.rel_source_.push_back(store_.ids_.intern(source));
    store_.rel_target_.push_back(store_.ids_.intern(target));
    store_.rel_name_.push_back(store_.rel_names_.intern(rel_name));
}

GraphStore GraphStore::Builder::finish() && {
    store_.build_indexes();
    return std::move(store_);
}

}  // namespace oagraph
