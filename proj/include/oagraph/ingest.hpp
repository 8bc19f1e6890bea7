#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "oagraph/json_codec.hpp"
#include "oagraph/store.hpp"

namespace oagraph {

// A dump directory: one subdirectory per record kind (publication, dataset,
// software, otherresearchproduct, datasource, organization, project,
// community, relation), each holding *.json / *.json.gz files with one JSON
// object per line. Missing subdirectories mean zero records; unknown
// subdirectories are ignored with a warning.
struct DumpLayout {
    std::filesystem::path root;
};

struct RejectionNote {
    std::string file;  // path relative to the dump root
    std::size_t line = 0;
    std::string reason;
};

struct KindCounts {
    std::size_t read = 0;
    std::size_t accepted = 0;
    std::size_t rejected = 0;

    bool operator==(const KindCounts&) const = default;
};

struct IngestReport {
    // Keyed by subdirectory name; read == accepted + rejected for each kind.
    std::map<std::string, KindCounts> kinds;
    std::vector<RejectionNote> rejections;
    std::vector<std::string> warnings;
    std::size_t duplicate_ids = 0;
    std::size_t dangling_relations = 0;

    const KindCounts& counts(RecordKind kind) const;
    nlohmann::json to_json() const;
};

struct IngestOptions {
    unsigned threads = 0;  // 0 = hardware concurrency
};

struct IngestResult {
    GraphStore store;
    IngestReport report;
};

class IngestError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Streams every file of the layout into a GraphStore. Files are parsed in
// parallel chunk-wise but merged in a canonical order (kind, then file name,
// then line), so the resulting store and report are independent of thread
// count and directory enumeration order. Throws IngestError when the root
// is unreadable; per-file read errors become report warnings.
IngestResult build_store(const DumpLayout& layout, const IngestOptions& options = {});

}  // namespace oagraph
