#pragma once

/**
 * @file io.hpp
 * @brief CSV profiles and key=value manifests.
 *
 * Profile files start with one header line
 *
 *     # degenchem w-profile v1, n=2, R=1, beta=1, m=6.283185307179586
 *
 * followed by "s,w" (or "r,value") rows; readers also accept a column-name row. Numbers are written in the
 * shortest representation that reads back to the same double.
 */

#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "degenchem/domain.hpp"
#include "degenchem/profile.hpp"

namespace degenchem::io {

/// Malformed input; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& file, std::size_t line, const std::string& what)
        : std::runtime_error(file + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + what),
          line_(line) {}

    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline std::optional<double> parse_double(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double value = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
    }
    return value;
}

inline std::optional<long long> parse_integer(std::string_view s) {
    s = trim(s);
    long long value = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
    }
    return value;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

// ---------------------------------------------------------------------------
// Profile CSV

struct ProfileHeader {
    std::string kind;
    std::map<std::string, std::string> fields;
};

inline std::string header_line(const std::string& kind, const Params& p, bool with_mass = true) {
    std::string line = "# degenchem " + kind + "-profile v1, n=" + std::to_string(p.n) +
                       ", R=" + format_double(p.R) + ", beta=" + format_double(p.beta);
    if (with_mass) {
        line += ", m=" + format_double(p.m);
    }
    return line;
}

inline ProfileHeader parse_header(std::string_view line, const std::string& file) {
    constexpr std::string_view prefix = "# degenchem ";
    if (line.substr(0, prefix.size()) != prefix) {
        throw ParseError(file, 1, "missing '# degenchem <kind>-profile v1' header");
    }
    line.remove_prefix(prefix.size());
    auto parts = split(line, ',');
    const auto head = trim(parts.front());
    constexpr std::string_view suffix = "-profile v1";
    if (head.size() <= suffix.size() || head.substr(head.size() - suffix.size()) != suffix) {
        throw ParseError(file, 1, "unsupported header '" + std::string(head) + "'");
    }
    ProfileHeader h;
    h.kind = std::string(head.substr(0, head.size() - suffix.size()));
    for (std::size_t k = 1; k < parts.size(); ++k) {
        const auto item = trim(parts[k]);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(file, 1, "header field '" + std::string(item) + "' is not key=value");
        }
        h.fields[std::string(trim(item.substr(0, eq)))] = std::string(trim(item.substr(eq + 1)));
    }
    return h;
}

struct Table {
    ProfileHeader header;
    std::vector<double> x;
    std::vector<double> y;
};

/// Header line plus two-column numeric rows; blank lines are skipped.
inline Table parse_table(const std::string& text, const std::string& file) {
    if (text.empty()) {
        throw ParseError(file, 1, "empty file");
    }
    Table t;
    std::size_t line_no = 0;
    bool have_header = false;
    for (const auto raw : split(text, '\n')) {
        ++line_no;
        const auto line = trim(raw);
        if (!have_header) {
            t.header = parse_header(line, file);
            have_header = true;
            continue;
        }
        if (line.empty()) {
            continue;
        }
        const auto cols = split(line, ',');
        if (cols.size() != 2) {
            throw ParseError(file, line_no, "expected 2 columns, found " + std::to_string(cols.size()));
        }
        const auto a = parse_double(cols[0]);
        const auto b = parse_double(cols[1]);
        if (!a || !b) {
            throw ParseError(file, line_no, "not a number");
        }
        t.x.push_back(*a);
        t.y.push_back(*b);
    }
    if (t.x.empty()) {
        throw ParseError(file, line_no, "no data rows");
    }
    return t;
}

inline double header_number(const ProfileHeader& h, const std::string& key, const std::string& file) {
    const auto it = h.fields.find(key);
    if (it == h.fields.end()) {
        throw ParseError(file, 1, "header lacks " + key + "=");
    }
    const auto v = parse_double(it->second);
    if (!v) {
        throw ParseError(file, 1, "header field " + key + " is not a number");
    }
    return *v;
}

inline Params header_params(const ProfileHeader& h, const std::string& file, std::optional<double> mass = {}) {
    const double n = header_number(h, "n", file);
    if (n != static_cast<int>(n)) {
        throw ParseError(file, 1, "header field n must be an integer");
    }
    try {
        return make_params(static_cast<int>(n), header_number(h, "R", file), header_number(h, "beta", file),
                           mass ? *mass : header_number(h, "m", file));
    } catch (const DomainError& e) {
        throw ParseError(file, 1, e.what());
    }
}

inline std::string format_table(const std::string& header, std::span<const double> x, std::span<const double> y) {
    std::string out = header + "\n";
    for (std::size_t i = 0; i < x.size(); ++i) {
        out += format_double(x[i]);
        out += ',';
        out += format_double(y[i]);
        out += '\n';
    }
    return out;
}

inline std::string format_w_profile(const WProfile& w, const Params& p) {
    return format_table(header_line("w", p), w.grid.nodes(), w.values);
}

inline void write_w_profile(const std::filesystem::path& path, const WProfile& w, const Params& p) {
    write_file(path, format_w_profile(w, p));
}

struct LoadedW {
    Params params;
    WProfile profile;
};

/// Reads a w-profile; an optional "s,w" column line after the header is allowed.
inline LoadedW parse_w_profile(const std::string& text, const std::string& file, double time = 0.0) {
    std::string body = text;
    // Drop a column-name row if present.
    const auto first_nl = body.find('\n');
    if (first_nl != std::string::npos) {
        const auto second_nl = body.find('\n', first_nl + 1);
        const auto row = trim(std::string_view(body).substr(first_nl + 1, second_nl - first_nl - 1));
        if (row == "s,w") {
            body.replace(first_nl + 1, second_nl - first_nl, "\n");
        }
    }
    auto t = parse_table(body, file);
    if (t.header.kind != "w") {
        throw ParseError(file, 1, "expected a w-profile, found " + t.header.kind + "-profile");
    }
    const Params p = header_params(t.header, file);
    try {
        return {p, WProfile(SGrid(std::move(t.x), GradingSpec{Grading::Uniform, 1.0, 1.0}, 1e6), std::move(t.y), time)};
    } catch (const DomainError& e) {
        throw ParseError(file, 0, e.what());
    }
}

inline LoadedW read_w_profile(const std::filesystem::path& path, double time = 0.0) {
    return parse_w_profile(read_file(path), path.string(), time);
}

/// Reads "# degenchem u-profile v1, n=, R=, beta=" with rows r,u.
inline Table parse_u_profile(const std::string& text, const std::string& file) {
    std::string body = text;
    const auto first_nl = body.find('\n');
    if (first_nl != std::string::npos) {
        const auto second_nl = body.find('\n', first_nl + 1);
        const auto row = trim(std::string_view(body).substr(first_nl + 1, second_nl - first_nl - 1));
        if (row == "r,u") {
            body.replace(first_nl + 1, second_nl - first_nl, "\n");
        }
    }
    auto t = parse_table(body, file);
    if (t.header.kind != "u") {
        throw ParseError(file, 1, "expected a u-profile, found " + t.header.kind + "-profile");
    }
    return t;
}

inline std::string format_radial(const std::string& kind, const RadialProfile& f) {
    return format_table(header_line(kind, f.params), f.r, f.values);
}

// ---------------------------------------------------------------------------
// Manifest: ordered key=value lines

class Manifest {
public:
    void set(const std::string& key, const std::string& value) {
        for (auto& [k, v] : entries_) {
            if (k == key) {
                v = value;
                return;
            }
        }
        entries_.emplace_back(key, value);
    }
    void set(const std::string& key, double value) { set(key, format_double(value)); }
    void set(const std::string& key, int value) { set(key, std::to_string(value)); }
    void set(const std::string& key, std::size_t value) { set(key, std::to_string(value)); }
    void set(const std::string& key, bool value) { set(key, std::string(value ? "true" : "false")); }
    void set(const std::string& key, const char* value) { set(key, std::string(value)); }

    [[nodiscard]] std::optional<std::string> get(const std::string& key) const {
        for (const auto& [k, v] : entries_) {
            if (k == key) {
                return v;
            }
        }
        return std::nullopt;
    }

    [[nodiscard]] std::string require(const std::string& key) const {
        auto v = get(key);
        if (!v) {
            throw IoError("manifest lacks key " + key);
        }
        return *v;
    }

    [[nodiscard]] double require_number(const std::string& key) const {
        const auto v = parse_double(require(key));
        if (!v) {
            throw IoError("manifest key " + key + " is not a number");
        }
        return *v;
    }

    /// Removes every key starting with prefix.
    void erase_prefix(const std::string& prefix) {
        std::erase_if(entries_, [&](const auto& e) { return e.first.rfind(prefix, 0) == 0; });
    }

    [[nodiscard]] std::string str() const {
        std::string out;
        for (const auto& [k, v] : entries_) {
            out += k + "=" + v + "\n";
        }
        return out;
    }

    static Manifest parse(const std::string& text, const std::string& file) {
        Manifest m;
        std::size_t line_no = 0;
        for (const auto raw : split(text, '\n')) {
            ++line_no;
            const auto line = trim(raw);
            if (line.empty() || line.front() == '#') {
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string_view::npos) {
                throw ParseError(file, line_no, "expected key=value");
            }
            m.entries_.emplace_back(std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))));
        }
        return m;
    }

    [[nodiscard]] const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace degenchem::io
