#include "oagraph/ingest.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <thread>

#include "oagraph/line_reader.hpp"
#include "oagraph/thread_pool.hpp"

namespace oagraph {

namespace {

namespace fs = std::filesystem;

struct FileTask {
    RecordKind kind;
    fs::path path;
    std::string rel_path;  // relative to root, for the report
};

// One parsed slice of a file. Only the column matching the file's kind is
// populated.
struct ChunkResult {
    std::vector<ResearchProduct> products;
    std::vector<Organization> organizations;
    std::vector<NamedEntity> named;
    std::vector<Relation> relations;
    std::vector<std::pair<std::size_t, std::string>> rejections;  // line, reason
    std::size_t read = 0;
};

constexpr std::size_t kChunkLines = 4096;

bool is_dump_file(const fs::path& path) {
    auto name = path.filename().string();
    return name.ends_with(".json") || name.ends_with(".json.gz");
}

std::optional<ProductKind> product_kind_of(RecordKind kind) {
    switch (kind) {
        case RecordKind::Publication: return ProductKind::Publication;
        case RecordKind::Dataset: return ProductKind::Dataset;
        case RecordKind::Software: return ProductKind::Software;
        case RecordKind::OtherResearchProduct: return ProductKind::Other;
        default: return std::nullopt;
    }
}

bool blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

ChunkResult parse_chunk(RecordKind kind, const std::vector<std::string>& lines,
                        std::size_t first_line) {
    ChunkResult out;
    std::string reason;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (blank(line)) continue;
        out.read++;
        reason.clear();
        bool accepted = false;
        if (auto pk = product_kind_of(kind)) {
            if (auto product = parse_product_record(*pk, line, reason)) {
                out.products.push_back(std::move(*product));
                accepted = true;
            }
        } else if (kind == RecordKind::Organization) {
            if (auto org = parse_organization_record(line, reason)) {
                out.organizations.push_back(std::move(*org));
                accepted = true;
            }
        } else if (kind == RecordKind::Relation) {
            if (auto rel = parse_relation_record(line, reason)) {
                out.relations.push_back(std::move(*rel));
                accepted = true;
            }
        } else {
            if (auto named = parse_named_record(line, reason)) {
                out.named.push_back(std::move(*named));
                accepted = true;
            }
        }
        if (!accepted) out.rejections.emplace_back(first_line + i, reason);
    }
    return out;
}

class StoreAssembler {
public:
    StoreAssembler(IngestReport& report) : report_(report) {}

    void commit(RecordKind kind, const std::string& file, ChunkResult chunk) {
        auto& counts = report_.kinds[std::string(dir_name(kind))];
        counts.read += chunk.read;
        counts.rejected += chunk.rejections.size();
        counts.accepted += chunk.read - chunk.rejections.size();
        for (auto& [line, reason] : chunk.rejections) {
            report_.rejections.push_back({file, line, std::move(reason)});
        }

        for (auto& product : chunk.products) {
            note_duplicate(builder_.add_product(std::move(product)), kind, file);
        }
        for (auto& org : chunk.organizations) {
            note_duplicate(builder_.add_organization(std::move(org)), kind, file);
        }
        for (auto& entity : chunk.named) {
            bool fresh = false;
            switch (kind) {
                case RecordKind::Project: fresh = builder_.add_project(std::move(entity)); break;
                case RecordKind::Datasource:
                    fresh = builder_.add_datasource(std::move(entity));
                    break;
                case RecordKind::Community:
                    fresh = builder_.add_community(std::move(entity));
                    break;
                default: fresh = true; break;
            }
            note_duplicate(fresh, kind, file);
        }
        for (const auto& rel : chunk.relations) builder_.add_relation(rel);
    }

    GraphStore finish() && { return std::move(builder_).finish(); }

private:
    void note_duplicate(bool fresh, RecordKind kind, const std::string& file) {
        if (fresh) return;
        report_.duplicate_ids++;
        report_.warnings.push_back("duplicate id in " + std::string(dir_name(kind)) +
                                   " (" + file + "): last record wins");
    }

    GraphStore::Builder builder_;
    IngestReport& report_;
};

std::vector<FileTask> scan_layout(const DumpLayout& layout, IngestReport& report) {
    std::error_code ec;
    if (!fs::is_directory(layout.root, ec)) {
        throw IngestError("dump root is not a readable directory: " + layout.root.string());
    }

    std::vector<FileTask> tasks;
    std::vector<std::string> unknown_dirs;
    for (const auto& entry : fs::directory_iterator(layout.root)) {
        if (!entry.is_directory()) continue;  // stray files (e.g. manifest.json) are fine
        auto name = entry.path().filename().string();
        auto kind = record_kind_from_dir(name);
        if (!kind) {
            unknown_dirs.push_back(name);
            continue;
        }
        report.kinds.try_emplace(name);  // kind seen, even if it ends up empty
        for (const auto& file : fs::directory_iterator(entry.path())) {
            if (!file.is_regular_file() || !is_dump_file(file.path())) continue;
            tasks.push_back({*kind, file.path(),
                             name + "/" + file.path().filename().string()});
        }
    }

    // Canonical processing order: kind, then file name. This is what makes
    // ingest deterministic under any directory enumeration order.
    std::sort(tasks.begin(), tasks.end(), [](const FileTask& a, const FileTask& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.rel_path < b.rel_path;
    });
    std::sort(unknown_dirs.begin(), unknown_dirs.end());
    for (const auto& name : unknown_dirs) {
        report.warnings.push_back("ignoring unknown subdirectory: " + name);
    }
    return tasks;
}

}  // namespace

const KindCounts& IngestReport::counts(RecordKind kind) const {
    static const KindCounts kZero{};
    auto it = kinds.find(std::string(dir_name(kind)));
    return it == kinds.end() ? kZero : it->second;
}

nlohmann::json IngestReport::to_json() const {
    nlohmann::json doc;
    auto& kinds_doc = doc["kinds"] = nlohmann::json::object();
    for (const auto& [name, counts] : kinds) {
        kinds_doc[name] = {{"read", counts.read},
                           {"accepted", counts.accepted},
                           {"rejected", counts.rejected}};
    }
    auto& rejections_doc = doc["rejections"] = nlohmann::json::array();
    for (const auto& note : rejections) {
        rejections_doc.push_back(
            {{"file", note.file}, {"line", note.line}, {"reason", note.reason}});
    }
    doc["warnings"] = warnings;
    doc["duplicate_ids"] = duplicate_ids;
    doc["dangling_relations"] = dangling_relations;
    return doc;
}

IngestResult build_store(const DumpLayout& layout, const IngestOptions& options) {
    IngestReport report;
    for (std::size_t i = 0; i < kRecordKindCount; ++i) {
        report.kinds.try_emplace(std::string(dir_name(static_cast<RecordKind>(i))));
    }
    auto tasks = scan_layout(layout, report);
    StoreAssembler assembler(report);

    unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;

    if (threads <= 1) {
        // Sequential path: parse and merge chunk by chunk.
        std::vector<std::string> lines;
        for (const auto& task : tasks) {
            LineReader reader(task.path);
            if (!reader.ok()) {
                report.warnings.push_back("cannot read " + task.rel_path + ": " +
                                          reader.error());
                continue;
            }
            std::size_t next_line = 1;
            for (;;) {
                lines.clear();
                std::string line;
                while (lines.size() < kChunkLines && reader.next(line)) {
                    lines.push_back(std::move(line));
                }
                if (lines.empty()) break;
                assembler.commit(task.kind, task.rel_path,
                                 parse_chunk(task.kind, lines, next_line));
                next_line += lines.size();
            }
            if (!reader.ok()) {
                report.warnings.push_back("read error in " + task.rel_path + ": " +
                                          reader.error());
            }
        }
    } else {
        // Parallel path: workers parse chunks, the main thread reads lines and
        // commits results strictly in submission order. The in-flight window
        // bounds memory to a fixed number of chunks beyond the store itself.
        ThreadPool pool(threads);
        const std::size_t max_inflight = static_cast<std::size_t>(threads) * 2;
        std::deque<std::future<ChunkResult>> inflight;
        std::deque<std::pair<RecordKind, std::string>> inflight_meta;

        auto drain_one = [&] {
            ChunkResult chunk = inflight.front().get();
            inflight.pop_front();
            auto [kind, file] = std::move(inflight_meta.front());
            inflight_meta.pop_front();
            assembler.commit(kind, file, std::move(chunk));
        };

        for (const auto& task : tasks) {
            LineReader reader(task.path);
            if (!reader.ok()) {
                while (!inflight.empty()) drain_one();
                report.warnings.push_back("cannot read " + task.rel_path + ": " +
                                          reader.error());
                continue;
            }
            std::size_t next_line = 1;
            for (;;) {
                auto lines = std::make_shared<std::vector<std::string>>();
                std::string line;
                while (lines->size() < kChunkLines && reader.next(line)) {
                    lines->push_back(std::move(line));
                }
                if (lines->empty()) break;
                std::size_t first_line = next_line;
                next_line += lines->size();
                RecordKind kind = task.kind;
                inflight.push_back(pool.submit([kind, lines, first_line] {
                    return parse_chunk(kind, *lines, first_line);
                }));
                inflight_meta.emplace_back(task.kind, task.rel_path);
                if (inflight.size() >= max_inflight) drain_one();
            }
            if (!reader.ok()) {
                while (!inflight.empty()) drain_one();
                report.warnings.push_back("read error in " + task.rel_path + ": " +
                                          reader.error());
            }
        }
        while (!inflight.empty()) drain_one();
    }

    GraphStore store = std::move(assembler).finish();
    report.dangling_relations = store.dangling_relation_count();
    return {std::move(store), std::move(report)};
}

}  // namespace oagraph
