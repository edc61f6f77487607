#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "addrep/integer_set.hpp"

namespace addrep::io {

// Set files: one decimal integer per line in strictly increasing order.
// Lines starting with '#' are comments; a comment of the form
// "# bound: N" records a truncation bound above the largest element.
IntegerSet parse_set(std::istream& in);
IntegerSet read_set(const std::filesystem::path& path);
void write_set(std::ostream& out, const IntegerSet& a);

// Series files: TSV with header "n<TAB>value" and consecutive n.
struct Series {
    std::int64_t first_index = 0;
    std::vector<std::int64_t> values;
};

Series parse_series(std::istream& in);
Series read_series(const std::filesystem::path& path);
void write_series(std::ostream& out, std::int64_t first_index, std::span<const std::int64_t> values);
void write_series(std::ostream& out, std::int64_t first_index, std::span<const std::uint64_t> values);

// Comma-separated signed integers, e.g. "1,-1".
std::vector<std::int64_t> parse_int_list(const std::string& text);
std::vector<double> parse_real_list(const std::string& text);

std::string read_file(const std::filesystem::path& path);
// Throws on any write failure.
void write_file(const std::filesystem::path& path, const std::string& contents);

// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

} // namespace addrep::io
