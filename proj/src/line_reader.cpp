#include "oagraph/line_reader.hpp"

#include <zlib.h>

#include <array>
#include <cstring>

namespace oagraph {

struct LineReader::GzState {
    gzFile file = nullptr;
    std::array<char, 1 << 16> buf{};
    std::size_t buf_len = 0;
    std::size_t buf_pos = 0;

    ~GzState() {
        if (file) gzclose(file);
    }
};

LineReader::LineReader(const std::filesystem::path& path) {
    if (path.extension() == ".gz") {
        gz_ = std::make_unique<GzState>();
        gz_->file = gzopen(path.string().c_str(), "rb");
        if (!gz_->file) {
            ok_ = false;
            error_ = "cannot open " + path.string();
        }
    } else {
        plain_.open(path, std::ios::binary);
        if (!plain_.is_open()) {
            ok_ = false;
            error_ = "cannot open " + path.string();
        }
    }
}

LineReader::~LineReader() = default;

bool LineReader::next(std::string& line) {
    if (!ok_ || eof_) return false;

    if (!gz_) {
        if (!std::getline(plain_, line)) {
            eof_ = true;
            if (plain_.bad()) {
                ok_ = false;
                error_ = "read error";
            }
            return false;
        }
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    }

    line.clear();
    for (;;) {
        if (gz_->buf_pos == gz_->buf_len) {
            int n = gzread(gz_->file, gz_->buf.data(), gz_->buf.size());
            if (n < 0) {
                int errnum = 0;
                const char* msg = gzerror(gz_->file, &errnum);
                ok_ = false;
                eof_ = true;
                error_ = msg ? msg : "gzip read error";
                return false;
            }
            if (n == 0) {
                eof_ = true;
                return !line.empty();  // last line may lack a newline
            }
            gz_->buf_len = static_cast<std::size_t>(n);
            gz_->buf_pos = 0;
        }
        const char* start = gz_->buf.data() + gz_->buf_pos;
        std::size_t avail = gz_->buf_len - gz_->buf_pos;
        if (const char* nl = static_cast<const char*>(std::memchr(start, '\n', avail))) {
            line.append(start, static_cast<std::size_t>(nl - start));
            gz_->buf_pos += static_cast<std::size_t>(nl - start) + 1;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return true;
        }
        line.append(start, avail);
        gz_->buf_pos = gz_->buf_len;
    }
}

}  // namespace oagraph
