#include "addrep/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "addrep/errors.hpp"

namespace addrep::io {

namespace {

constexpr std::string_view kBoundDirective = "bound:";

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

bool parse_i64(std::string_view s, std::int64_t& out) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size() && !s.empty();
}

std::int64_t require_i64(std::string_view s, std::size_t line) {
    std::int64_t v = 0;
    if (!parse_i64(s, v)) {
        throw ParseError("not a decimal integer: '" + std::string(s) + "'", line);
    }
    return v;
}

} // namespace

IntegerSet parse_set(std::istream& in) {
    std::vector<std::int64_t> elems;
    std::optional<std::int64_t> bound;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto text = trim(raw);
        if (text.empty()) {
            continue;
        }
        if (text.front() == '#') {
            const auto body = trim(text.substr(1));
            if (body.starts_with(kBoundDirective)) {
                bound = require_i64(trim(body.substr(kBoundDirective.size())), line);
            }
            continue;
        }
        const auto v = require_i64(text, line);
        if (v < 0) {
            throw ParseError("negative element " + std::to_string(v), line);
        }
        if (!elems.empty() && v <= elems.back()) {
            throw ParseError("elements must be strictly increasing (" + std::to_string(v) +
                                 " after " + std::to_string(elems.back()) + ")",
                             line);
        }
        elems.push_back(v);
    }
    if (bound && !elems.empty() && *bound < elems.back()) {
        throw ParseError("bound " + std::to_string(*bound) + " is below the largest element", line);
    }
    return IntegerSet(std::move(elems), bound);
}

IntegerSet read_set(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open set file " + path.string(), 0);
    }
    return parse_set(in);
}

void write_set(std::ostream& out, const IntegerSet& a) {
    if (a.empty() || a.bound() != a.max_element()) {
        out << "# bound: " << a.bound() << '\n';
    }
    for (const auto x : a.elements()) {
        out << x << '\n';
    }
}

Series parse_series(std::istream& in) {
    Series s;
    std::string raw;
    std::size_t line = 0;
    bool header = false;
    while (std::getline(in, raw)) {
        ++line;
        const auto text = trim(raw);
        if (text.empty() || text.front() == '#') {
            continue;
        }
        const auto tab = text.find('\t');
        if (tab == std::string_view::npos) {
            throw ParseError("expected two tab-separated columns", line);
        }
        const auto left = trim(text.substr(0, tab));
        const auto right = trim(text.substr(tab + 1));
        if (!header) {
            if (left != "n") {
                throw ParseError("series file must start with the header 'n<TAB>value'", line);
            }
            header = true;
            continue;
        }
        const auto n = require_i64(left, line);
        const auto v = require_i64(right, line);
        if (s.values.empty()) {
            s.first_index = n;
        } else if (n != s.first_index + static_cast<std::int64_t>(s.values.size())) {
            throw ParseError("series indices must be consecutive", line);
        }
        s.values.push_back(v);
    }
    if (!header) {
        throw ParseError("missing series header", line);
    }
    return s;
}

Series read_series(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open series file " + path.string(), 0);
    }
    return parse_series(in);
}

template <typename T>
static void write_series_impl(std::ostream& out, std::int64_t first, std::span<const T> values) {
    out << "n\tvalue\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out << first + static_cast<std::int64_t>(i) << '\t' << values[i] << '\n';
    }
}

void write_series(std::ostream& out, std::int64_t first_index, std::span<const std::int64_t> values) {
    write_series_impl(out, first_index, values);
}

void write_series(std::ostream& out, std::int64_t first_index, std::span<const std::uint64_t> values) {
    write_series_impl(out, first_index, values);
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::int64_t v = 0;
        if (!parse_i64(trim(item), v)) {
            throw ParameterError("not an integer list: '" + text + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw ParameterError("empty integer list");
    }
    return out;
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto t = std::string(trim(item));
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (t.empty() || used != t.size()) {
            throw ParameterError("not a list of reals: '" + text + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw ParameterError("empty list of reals");
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path.string(), 0);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << contents;
    out.flush();
    if (!out) {
        throw Error("cannot write " + path.string());
    }
}

std::string sha256_hex(const std::string& bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 digest failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += kHex[digest[i] >> 4];
        out += kHex[digest[i] & 0xF];
    }
    return out;
}

} // namespace addrep::io
