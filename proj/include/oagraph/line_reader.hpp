#pragma once

#include <filesystem>
#include <fstream>
#include <memory>
#include <string>

namespace oagraph {

// Streams one line at a time from a plain or gzip-compressed text file.
// Gzip is detected by the .gz extension. Never buffers more than one
// decompression block plus the current line.
class LineReader {
public:
    explicit LineReader(const std::filesystem::path& path);
    ~LineReader();

    LineReader(const LineReader&) = delete;
    LineReader& operator=(const LineReader&) = delete;

    bool ok() const { return ok_; }
    const std::string& error() const { return error_; }

    // Fills `line` (without the trailing newline) and returns true, or
    // returns false at end of input / on a read error (then ok() is false
    // for errors).
    bool next(std::string& line);

private:
    struct GzState;

    std::ifstream plain_;
    std::unique_ptr<GzState> gz_;
    std::string pending_;
    bool ok_ = true;
    bool eof_ = false;
    std::string error_;
};

}  // namespace oagraph
