#include <array>
#include <cctype>
#include <charconv>
#include <cstring>
#include <fstream>
#include <utility>

#include "lispace/sequence.hpp"

namespace lispace {
namespace {

class ArraySource final : public SequenceSource {
public:
    explicit ArraySource(std::vector<std::int64_t> values)
        : SequenceSource(values.size()), values_(std::move(values)) {}

protected:
    std::int64_t fetch(std::size_t index) override { return values_[index]; }

private:
    std::vector<std::int64_t> values_;
};

constexpr std::size_t kBlockBytes = 1 << 16;

bool is_sep(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

/// Shared block cache over an open file: byte-level random access backed by
/// aligned 64 KiB reads. Sequential stepping is amortized O(1).
class BlockReader {
public:
    BlockReader(const std::filesystem::path& path, std::uintmax_t file_size)
        : stream_(path, std::ios::binary), file_size_(file_size) {
        if (!stream_) throw IoError("cannot open file: " + path.string());
    }

    std::uintmax_t file_size() const { return file_size_; }

    char byte_at(std::uintmax_t offset) {
        if (offset < block_start_ || offset >= block_start_ + block_len_) load(offset);
        return block_[static_cast<std::size_t>(offset - block_start_)];
    }

    void read_span(std::uintmax_t offset, char* out, std::size_t len) {
        for (std::size_t i = 0; i < len; ++i) out[i] = byte_at(offset + i);
    }

private:
    void load(std::uintmax_t offset) {
        block_start_ = offset - offset % kBlockBytes;
        const std::uintmax_t want =
            std::min<std::uintmax_t>(kBlockBytes, file_size_ - block_start_);
        block_.resize(static_cast<std::size_t>(want));
        stream_.clear();
        stream_.seekg(static_cast<std::streamoff>(block_start_));
        stream_.read(block_.data(), static_cast<std::streamsize>(want));
        if (stream_.gcount() != static_cast<std::streamsize>(want))
            throw IoError("short read from input file");
        block_len_ = want;
    }

    std::ifstream stream_;
    std::uintmax_t file_size_;
    std::vector<char> block_;
    std::uintmax_t block_start_ = 0;
    std::uintmax_t block_len_ = 0;
};

std::int64_t parse_token(const char* first, const char* last, std::size_t token,
                         std::size_t line, std::size_t byte_offset) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError("integer out of 64-bit range", token, line, byte_offset);
    if (ec != std::errc() || ptr != last)
        throw ParseError("expected integer", token, line, byte_offset);
    return value;
}

/// Single streaming validation pass: counts tokens, rejects malformed ones
/// with their location. Constant memory.
std::size_t validate_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path.string());
    std::array<char, kBlockBytes> buf;
    std::string token;
    std::size_t count = 0;
    std::size_t line = 1;
    std::size_t token_line = 1;
    std::uintmax_t offset = 0;
    std::uintmax_t token_start = 0;
    auto flush = [&] {
        if (token.empty()) return;
        ++count;
        parse_token(token.data(), token.data() + token.size(), count, token_line,
                    static_cast<std::size_t>(token_start));
        token.clear();
    };
    while (in) {
        in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i, ++offset) {
            const char c = buf[static_cast<std::size_t>(i)];
            if (is_sep(c)) {
                flush();
                if (c == '\n') ++line;
            } else {
                if (token.empty()) {
                    token_start = offset;
                    token_line = line;
                }
                if (token.size() > 20)
                    throw ParseError("token too long for a 64-bit integer", count + 1,
                                     token_line, static_cast<std::size_t>(token_start));
                token.push_back(c);
            }
        }
        if (got == 0) break;
    }
    flush();
    return count;
}

/// Token-addressed view of a whitespace-separated text file. Keeps only the
/// current token index and its byte offset; fetch() walks token by token
/// through the block cache, so sequential access is O(1) amortized and a
/// jump costs travel proportional to the token distance.
class TextFileSource final : public SequenceSource {
public:
    TextFileSource(const std::filesystem::path& path, std::size_t count)
        : SequenceSource(count), reader_(path, std::filesystem::file_size(path)) {}

protected:
    std::int64_t fetch(std::size_t index) override {
        if (!positioned_) {
            cur_start_ = skip_seps(0);
            cur_token_ = 0;
            positioned_ = true;
        }
        while (cur_token_ < index) step_forward();
        while (cur_token_ > index) step_backward();
        const std::uintmax_t end = token_end(cur_start_);
        char buf[24];
        const std::size_t len = static_cast<std::size_t>(end - cur_start_);
        reader_.read_span(cur_start_, buf, len);
        return parse_token(buf, buf + len, cur_token_ + 1, 0,
                           static_cast<std::size_t>(cur_start_));
    }

private:
    std::uintmax_t skip_seps(std::uintmax_t off) {
        while (off < reader_.file_size() && is_sep(reader_.byte_at(off))) ++off;
        return off;
    }
    std::uintmax_t token_end(std::uintmax_t off) {
        while (off < reader_.file_size() && !is_sep(reader_.byte_at(off))) ++off;
        return off;
    }
    void step_forward() {
        cur_start_ = skip_seps(token_end(cur_start_));
        ++cur_token_;
    }
    void step_backward() {
        std::uintmax_t off = cur_start_;
        while (off > 0 && is_sep(reader_.byte_at(off - 1))) --off;
        while (off > 0 && !is_sep(reader_.byte_at(off - 1))) --off;
        cur_start_ = off;
        --cur_token_;
    }

    BlockReader reader_;
    bool positioned_ = false;
    std::size_t cur_token_ = 0;
    std::uintmax_t cur_start_ = 0;
};

class BinaryFileSource final : public SequenceSource {
public:
    BinaryFileSource(const std::filesystem::path& path, std::uintmax_t file_size)
        : SequenceSource(static_cast<std::size_t>(file_size / 8)),
          reader_(path, file_size) {}

protected:
    std::int64_t fetch(std::size_t index) override {
        char raw[8];
        reader_.read_span(static_cast<std::uintmax_t>(index) * 8, raw, 8);
        std::uint64_t u = 0;
        for (int i = 7; i >= 0; --i) u = (u << 8) | static_cast<unsigned char>(raw[i]);
        std::int64_t v;
        std::memcpy(&v, &u, 8);
        return v;
    }

private:
    BlockReader reader_;
};

}  // namespace

std::unique_ptr<SequenceSource> open_array(std::vector<std::int64_t> values) {
    return std::make_unique<ArraySource>(std::move(values));
}

std::unique_ptr<SequenceSource> open_file(const std::filesystem::path& path,
                                          FileFormat format) {
    std::error_code ec;
    const std::uintmax_t fsize = std::filesystem::file_size(path, ec);
    if (ec) throw IoError("cannot stat file: " + path.string());
    if (format == FileFormat::text) {
        const std::size_t count = validate_text(path);
        return std::make_unique<TextFileSource>(path, count);
    }
    if (fsize % 8 != 0)
        throw ParseError("binary file size is not a multiple of 8 bytes",
                         static_cast<std::size_t>(fsize / 8 + 1), 1,
                         static_cast<std::size_t>(fsize - fsize % 8));
    return std::make_unique<BinaryFileSource>(path, fsize);
}

}  // namespace lispace
