#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "lispace/errors.hpp"
#include "lispace/sequence.hpp"
#include "test_support.hpp"

using namespace lispace;
using namespace lispace::testing;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name) {
        path = std::filesystem::temp_directory_path() / name;
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
    void write_text(const std::string& text) const {
        std::ofstream out(path, std::ios::binary);
        out << text;
    }
    void write_values_le(const std::vector<std::int64_t>& values) const {
        std::ofstream out(path, std::ios::binary);
        for (std::int64_t v : values) {
            std::uint64_t u;
            std::memcpy(&u, &v, 8);
            char raw[8];
            for (int i = 0; i < 8; ++i) raw[i] = static_cast<char>((u >> (8 * i)) & 0xff);
            out.write(raw, 8);
        }
    }
};

std::vector<std::int64_t> drain(SequenceSource& src, Direction dir) {
    std::vector<std::int64_t> out;
    src.scan_all(dir, [&](const Element& e) { out.push_back(e.value); });
    return out;
}

}  // namespace

TEST_CASE("text file parses newline-separated values") {
    TempFile f("lispace_io_basic.txt");
    f.write_text("2\n8\n4\n");
    auto src = open_file(f.path, FileFormat::text);
    REQUIRE(src->size() == 3);
    CHECK(drain(*src, Direction::forward) == std::vector<std::int64_t>{2, 8, 4});
}

TEST_CASE("text file accepts arbitrary whitespace and a leading minus") {
    TempFile f("lispace_io_ws.txt");
    f.write_text("  -3\t7\r\n 0\n\n");
    auto src = open_file(f.path, FileFormat::text);
    REQUIRE(src->size() == 3);
    CHECK(drain(*src, Direction::forward) == std::vector<std::int64_t>{-3, 7, 0});
}

TEST_CASE("a leading plus is not part of the format") {
    TempFile f("lispace_io_plus.txt");
    f.write_text("+3\n");
    CHECK_THROWS_AS(open_file(f.path, FileFormat::text), ParseError);
}

TEST_CASE("empty text file is a length-0 source") {
    TempFile f("lispace_io_empty.txt");
    f.write_text("");
    CHECK(open_file(f.path, FileFormat::text)->size() == 0);
}

TEST_CASE("bad token reports its location") {
    TempFile f("lispace_io_bad.txt");
    f.write_text("abc 4\n");
    try {
        open_file(f.path, FileFormat::text);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.token() == 1);
        CHECK(e.line() == 1);
        CHECK(e.byte_offset() == 0);
    }
}

TEST_CASE("second bad token on a later line") {
    TempFile f("lispace_io_bad2.txt");
    f.write_text("12\n34 5x\n");
    try {
        open_file(f.path, FileFormat::text);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.token() == 3);
        CHECK(e.line() == 2);
        CHECK(e.byte_offset() == 6);
    }
}

TEST_CASE("out-of-range integer is a parse error") {
    TempFile f("lispace_io_range.txt");
    f.write_text("99999999999999999999999\n");
    CHECK_THROWS_AS(open_file(f.path, FileFormat::text), ParseError);
}

TEST_CASE("missing file raises an i/o error") {
    CHECK_THROWS_AS(open_file("/nonexistent/lispace.txt", FileFormat::text), IoError);
}

TEST_CASE("binary round trip, forward and backward") {
    std::mt19937_64 rng(21);
    const auto values = random_values(rng, 257, -1'000'000'000'000, 1'000'000'000'000);
    TempFile f("lispace_io_roundtrip.bin");
    f.write_values_le(values);
    auto src = open_file(f.path, FileFormat::binary);
    REQUIRE(src->size() == values.size());
    CHECK(drain(*src, Direction::forward) == values);
    auto back = drain(*src, Direction::backward);
    std::reverse(back.begin(), back.end());
    CHECK(back == values);
}

TEST_CASE("binary file size must be a multiple of 8") {
    TempFile f("lispace_io_short.bin");
    f.write_text("123456789");  // 9 bytes
    CHECK_THROWS_AS(open_file(f.path, FileFormat::binary), ParseError);
}

TEST_CASE("large text file crosses block boundaries both ways") {
    std::mt19937_64 rng(22);
    const auto values = random_values(rng, 20000, 100000, 999999);
    std::string text;
    for (std::size_t i = 0; i < values.size(); ++i) {
        text += std::to_string(values[i]);
        text += (i % 5 == 4) ? '\n' : ' ';
    }
    TempFile f("lispace_io_blocks.txt");
    f.write_text(text);
    auto src = open_file(f.path, FileFormat::text);
    REQUIRE(src->size() == values.size());
    CHECK(drain(*src, Direction::forward) == values);
    auto back = drain(*src, Direction::backward);
    std::reverse(back.begin(), back.end());
    CHECK(back == values);
}
