#include "oagraph/metrics.hpp"

#include <algorithm>
#include <map>

namespace oagraph {

namespace {

struct AccessTally {
    std::uint64_t total = 0;
    std::uint64_t open = 0;
    std::uint64_t embargo = 0;
    std::uint64_t closed = 0;
    std::uint64_t other = 0;

    void count(const ResearchProduct& product) {
        total++;
        switch (classify_access(product.best_access_right)) {
            case AccessClass::Open: open++; break;
            case AccessClass::Embargo: embargo++; break;
            case AccessClass::Closed: closed++; break;
            case AccessClass::Other: other++; break;
            case AccessClass::Missing: break;  // total only
        }
    }
};

}  // namespace

std::vector<CitationCount> citation_counts(const GraphStore& store) {
    std::map<StrRef, std::uint64_t> tally;  // keyed by interned source id
    for (std::uint32_t idx : store.relations_named(kIsCitedBy)) {
        auto refs = store.relation_refs(idx);
        const ResearchProduct* product = store.product_by_ref(refs.source);
        if (product && product->kind == ProductKind::Publication) tally[refs.source]++;
    }

    std::vector<CitationCount> rows;
    rows.reserve(tally.size());
    for (const auto& [ref, count] : tally) {
        const ResearchProduct* product = store.product_by_ref(ref);
        CitationCount row;
        row.product_id = product->id;
        if (!product->pids.empty()) row.canonical_pid = product->pids.front();
        row.count = count;
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const CitationCount& a, const CitationCount& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.product_id < b.product_id;
    });
    return rows;
}

std::vector<CountryAccessRow> access_breakdown_by_country(const GraphStore& store) {
    std::map<std::string, AccessTally> tally;
    for (std::uint32_t idx : store.relations_named(kIsAuthorInstitutionOf)) {
        auto refs = store.relation_refs(idx);
        const Organization* org = store.organization_by_ref(refs.source);
        if (!org || !org->country_code) continue;
        const ResearchProduct* product = store.product_by_ref(refs.target);
        if (!product) continue;
        tally[*org->country_code].count(*product);
    }

    std::vector<CountryAccessRow> rows;
    rows.reserve(tally.size());
    for (const auto& [country, t] : tally) {
        rows.push_back({country, t.total, t.open, t.embargo, t.closed, t.other});
    }
    std::sort(rows.begin(), rows.end(), [](const CountryAccessRow& a, const CountryAccessRow& b) {
        if (a.total != b.total) return a.total > b.total;
        return a.country < b.country;
    });
    return rows;
}

std::vector<OrgYearAccessRow> oa_breakdown_by_org_year(const GraphStore& store) {
    using Key = std::pair<std::optional<std::string>, std::optional<int>>;
    std::map<Key, AccessTally> tally;
    for (std::uint32_t idx : store.relations_named(kIsAuthorInstitutionOf)) {
        auto refs = store.relation_refs(idx);
        const Organization* org = store.organization_by_ref(refs.source);
        if (!org) continue;
        const ResearchProduct* product = store.product_by_ref(refs.target);
        if (!product) continue;
        Key key{display_name(*org), std::nullopt};
        if (product->publication_date) key.second = product->publication_date->year;
        tally[key].count(*product);
    }

    std::vector<OrgYearAccessRow> rows;
    rows.reserve(tally.size());
    for (const auto& [key, t] : tally) {
        rows.push_back({key.first, key.second, t.total, t.open, t.embargo, t.closed, t.other});
    }
    // Organization ascending with null first, then total descending, then year.
    std::sort(rows.begin(), rows.end(), [](const OrgYearAccessRow& a, const OrgYearAccessRow& b) {
        if (a.organization != b.organization) return a.organization < b.organization;
        if (a.total != b.total) return a.total > b.total;
        return a.year < b.year;
    });
    return rows;
}

std::vector<CoParticipationEdge> co_participation_edges(const GraphStore& store,
                                                        CoParticipationMode mode) {
    // Country rows per project, keyed by the relation target id. Relation
    // index order keeps the row lists deterministic.
    std::map<StrRef, std::vector<std::string_view>> project_countries;
    for (std::uint32_t idx : store.relations_named(kIsParticipant)) {
        auto refs = store.relation_refs(idx);
        const Organization* org = store.organization_by_ref(refs.source);
        if (!org || !org->country_code) continue;
        project_countries[refs.target].push_back(*org->country_code);
    }

    std::map<std::pair<std::string_view, std::string_view>, std::uint64_t> weights;
    for (auto& [project, countries] : project_countries) {
        if (mode == CoParticipationMode::Distinct) {
            std::sort(countries.begin(), countries.end());
            countries.erase(std::unique(countries.begin(), countries.end()), countries.end());
            for (std::size_t i = 0; i < countries.size(); ++i) {
                for (std::size_t j = i + 1; j < countries.size(); ++j) {
                    weights[{countries[i], countries[j]}]++;
                }
            }
        } else {
            for (const auto& l : countries) {
                for (const auto& r : countries) {
                    if (l <= r) weights[{l, r}]++;
                }
            }
        }
    }

    std::vector<CoParticipationEdge> edges;
    edges.reserve(weights.size());
    for (const auto& [pair, weight] : weights) {
        edges.push_back({std::string(pair.first), std::string(pair.second), weight});
    }
    std::sort(edges.begin(), edges.end(),
              [](const CoParticipationEdge& a, const CoParticipationEdge& b) {
                  if (a.weight != b.weight) return a.weight > b.weight;
                  if (a.left != b.left) return a.left < b.left;
                  return a.right < b.right;
              });
    return edges;
}

std::vector<CoParticipationEdge> focus_country(const std::vector<CoParticipationEdge>& edges,
                                               std::string_view country) {
    std::vector<CoParticipationEdge> filtered;
    for (const auto& edge : edges) {
        if (edge.left == country || edge.right == country) filtered.push_back(edge);
    }
    return filtered;
}

std::vector<NormalizedEdge> normalize_weights(const std::vector<CoParticipationEdge>& edges) {
    if (edges.empty()) {
        throw std::invalid_argument("cannot normalize an empty edge list");
    }
    std::uint64_t max_weight = 0;
    for (const auto& edge : edges) max_weight = std::max(max_weight, edge.weight);

    std::vector<NormalizedEdge> normalized;
    normalized.reserve(edges.size());
    for (const auto& edge : edges) {
        double scaled = edge.weight == max_weight
                            ? 1.0
                            : static_cast<double>(edge.weight) / static_cast<double>(max_weight);
        normalized.push_back({edge.left, edge.right, edge.weight, scaled});
    }
    return normalized;
}

}  // namespace oagraph
