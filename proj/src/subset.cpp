#include "oagraph/subset.hpp"

#include <algorithm>
#include <fstream>

#include "oagraph/json_codec.hpp"

namespace oagraph {

namespace {

// Pool-indexed membership bitmap.
struct RefSet {
    std::vector<bool> bits;

    explicit RefSet(std::size_t pool_size) : bits(pool_size, false) {}
    void insert(StrRef ref) { bits[ref] = true; }
    bool contains(StrRef ref) const { return ref != kNoRef && ref < bits.size() && bits[ref]; }
};

std::vector<StrRef> seed_refs(const GraphStore& store, const DateWindow& window) {
    std::vector<StrRef> seeds;
    for (const auto& product : store.products()) {
        if (product.publication_date && window.contains(*product.publication_date)) {
            seeds.push_back(store.id_ref(product.id));
        }
    }
    return seeds;
}

bool is_non_product_entity(EntityClass cls) {
    return cls == EntityClass::Organization || cls == EntityClass::Project ||
           cls == EntityClass::Datasource || cls == EntityClass::Community;
}

// Non-product entities one hop away from any seed, in either direction.
std::vector<StrRef> expand_refs(const GraphStore& store, const std::vector<StrRef>& seeds) {
    RefSet found(store.id_pool_size());
    std::vector<StrRef> expanded;
    auto consider = [&](StrRef ref) {
        if (found.contains(ref)) return;
        if (!is_non_product_entity(store.classify_ref(ref))) return;
        found.insert(ref);
        expanded.push_back(ref);
    };
    for (StrRef seed : seeds) {
        for (std::uint32_t idx : store.relations_from_ref(seed)) {
            consider(store.relation_refs(idx).target);
        }
        for (std::uint32_t idx : store.relations_into_ref(seed)) {
            consider(store.relation_refs(idx).source);
        }
    }
    return expanded;
}

std::vector<std::uint32_t> induced_indices(const GraphStore& store, const RefSet& selected) {
    std::vector<std::uint32_t> indices;
    for (std::uint32_t i = 0; i < store.relation_count(); ++i) {
        auto refs = store.relation_refs(i);
        if (selected.contains(refs.source) && selected.contains(refs.target)) {
            indices.push_back(i);
        }
    }
    return indices;
}

std::vector<EntityId> refs_to_sorted_ids(const GraphStore& store,
                                         const std::vector<StrRef>& refs) {
    std::vector<EntityId> ids;
    ids.reserve(refs.size());
    for (StrRef ref : refs) ids.emplace_back(store.id_str(ref));
    std::sort(ids.begin(), ids.end());
    return ids;
}

}  // namespace

DateWindow make_window(Date from, Date to) {
    if (to < from) {
        throw WindowError("window start " + from.to_string() + " is after end " +
                          to.to_string());
    }
    return {from, to};
}

std::size_t SubsetManifest::entity_count() const {
    return publications.size() + datasets.size() + softwares.size() + others.size() +
           organizations.size() + projects.size() + datasources.size() + communities.size();
}

nlohmann::json SubsetManifest::to_json() const {
    return {
        {"window", {{"from", window.from.to_string()}, {"to", window.to.to_string()}}},
        {"counts",
         {{"publications", publications.size()},
          {"datasets", datasets.size()},
          {"softwares", softwares.size()},
          {"others", others.size()},
          {"organizations", organizations.size()},
          {"projects", projects.size()},
          {"datasources", datasources.size()},
          {"communities", communities.size()},
          {"relations", relation_count}}},
    };
}

std::vector<EntityId> select_seed_products(const GraphStore& store, const DateWindow& window) {
    return refs_to_sorted_ids(store, seed_refs(store, window));
}

std::vector<EntityId> expand_entities(const GraphStore& store,
                                      const std::vector<EntityId>& seeds) {
    std::vector<StrRef> refs;
    refs.reserve(seeds.size());
    for (const auto& id : seeds) {
        StrRef ref = store.id_ref(id);
        if (ref != kNoRef) refs.push_back(ref);
    }
    return refs_to_sorted_ids(store, expand_refs(store, refs));
}

std::vector<Relation> induce_relations(const GraphStore& store,
                                       const std::vector<EntityId>& selected) {
    RefSet selected_refs(store.id_pool_size());
    for (const auto& id : selected) {
        StrRef ref = store.id_ref(id);
        if (ref != kNoRef) selected_refs.insert(ref);
    }
    std::vector<Relation> relations;
    for (std::uint32_t idx : induced_indices(store, selected_refs)) {
        relations.push_back(store.relation_value(idx));
    }
    return relations;
}

SubsetResult extract_subset(const GraphStore& store, const DateWindow& window) {
    auto seeds = seed_refs(store, window);
    auto expanded = expand_refs(store, seeds);

    RefSet selected(store.id_pool_size());
    for (StrRef ref : seeds) selected.insert(ref);
    for (StrRef ref : expanded) selected.insert(ref);

    SubsetResult result;
    result.manifest.window = window;

    GraphStore::Builder builder;
    for (const auto& product : store.products()) {
        if (!selected.contains(store.id_ref(product.id))) continue;
        switch (product.kind) {
            case ProductKind::Publication:
                result.manifest.publications.push_back(product.id);
                break;
            case ProductKind::Dataset: result.manifest.datasets.push_back(product.id); break;
            case ProductKind::Software: result.manifest.softwares.push_back(product.id); break;
            case ProductKind::Other: result.manifest.others.push_back(product.id); break;
        }
        builder.add_product(product);
    }
    for (const auto& org : store.organizations()) {
        if (!selected.contains(store.id_ref(org.id))) continue;
        result.manifest.organizations.push_back(org.id);
        builder.add_organization(org);
    }
    for (const auto& project : store.projects()) {
        if (!selected.contains(store.id_ref(project.id))) continue;
        result.manifest.projects.push_back(project.id);
        builder.add_project(project);
    }
    for (const auto& datasource : store.datasources()) {
        if (!selected.contains(store.id_ref(datasource.id))) continue;
        result.manifest.datasources.push_back(datasource.id);
        builder.add_datasource(datasource);
    }
    for (const auto& community : store.communities()) {
        if (!selected.contains(store.id_ref(community.id))) continue;
        result.manifest.communities.push_back(community.id);
        builder.add_community(community);
    }

    auto induced = induced_indices(store, selected);
    for (std::uint32_t idx : induced) {
        auto view = store.relation(idx);
        builder.add_relation(view.source, view.target, view.rel_name);
    }
    result.manifest.relation_count = induced.size();

    auto sort_ids = [](std::vector<EntityId>& ids) { std::sort(ids.begin(), ids.end()); };
    sort_ids(result.manifest.publications);
    sort_ids(result.manifest.datasets);
    sort_ids(result.manifest.softwares);
    sort_ids(result.manifest.others);
    sort_ids(result.manifest.organizations);
    sort_ids(result.manifest.projects);
    sort_ids(result.manifest.datasources);
    sort_ids(result.manifest.communities);

    result.store = std::move(builder).finish();
    return result;
}

namespace {

class PartWriter {
public:
    PartWriter(const std::filesystem::path& dir) : dir_(dir) {
        std::filesystem::create_directories(dir_);
    }

    void write_line(const nlohmann::json& doc) {
        if (!out_.is_open()) {
            auto path = dir_ / "part-00000.json";
            out_.open(path, std::ios::binary);
            if (!out_.is_open()) {
                throw std::runtime_error("cannot write " + path.string());
            }
        }
        out_ << doc.dump() << '\n';
    }

    void close() {
        if (out_.is_open()) {
            out_.flush();
            if (!out_) throw std::runtime_error("write failure in " + dir_.string());
            out_.close();
        }
    }

private:
    std::filesystem::path dir_;
    std::ofstream out_;
};

}  // namespace

void write_dump_layout(const GraphStore& store, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);

    std::array<PartWriter, 4> product_writers = {
        PartWriter(out_dir / dir_name(RecordKind::Publication)),
        PartWriter(out_dir / dir_name(RecordKind::Dataset)),
        PartWriter(out_dir / dir_name(RecordKind::Software)),
        PartWriter(out_dir / dir_name(RecordKind::OtherResearchProduct)),
    };
    for (const auto& product : store.products()) {
        product_writers[static_cast<std::size_t>(product.kind)].write_line(to_json(product));
    }
    for (auto& writer : product_writers) writer.close();

    PartWriter org_writer(out_dir / dir_name(RecordKind::Organization));
    for (const auto& org : store.organizations()) org_writer.write_line(to_json(org));
    org_writer.close();

    PartWriter project_writer(out_dir / dir_name(RecordKind::Project));
    for (const auto& project : store.projects()) project_writer.write_line(to_json(project));
    project_writer.close();

    PartWriter datasource_writer(out_dir / dir_name(RecordKind::Datasource));
    for (const auto& ds : store.datasources()) datasource_writer.write_line(to_json(ds));
    datasource_writer.close();

    PartWriter community_writer(out_dir / dir_name(RecordKind::Community));
    for (const auto& community : store.communities()) {
        community_writer.write_line(to_json(community));
    }
    community_writer.close();

    PartWriter relation_writer(out_dir / dir_name(RecordKind::Relation));
    for (std::size_t i = 0; i < store.relation_count(); ++i) {
        auto view = store.relation(i);
        relation_writer.write_line(to_json(view));
    }
    relation_writer.close();
}

}  // namespace oagraph
