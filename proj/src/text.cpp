#include "scholnet/text.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace scholnet::text {

namespace {

inline bool is_ascii_letter(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool is_letter_byte(unsigned char c) {
    return is_ascii_letter(c) || c >= 0x80;
}

inline bool is_alnum_byte(unsigned char c) {
    return is_letter_byte(c) || (c >= '0' && c <= '9');
}

} // namespace

std::string to_lower(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 0x80) {
            out.push_back(static_cast<char>(std::tolower(c)));
            continue;
        }
        // UTF-8 Latin-1 supplement: 0xC3 0x80..0x9E maps to 0xC3 0xA0..0xBE
        // (except the multiplication sign 0x97).
        if (c == 0xC3 && i + 1 < s.size()) {
            const unsigned char d = static_cast<unsigned char>(s[i + 1]);
            if (d >= 0x80 && d <= 0x9E && d != 0x97) {
                out.push_back(static_cast<char>(0xC3));
                out.push_back(static_cast<char>(d + 0x20));
                ++i;
                continue;
            }
        }
        out.push_back(static_cast<char>(c));
    }
    return out;
}

std::string normalize_title(const std::string& s) {
    const std::string lower = to_lower(s);
    std::string out;
    out.reserve(lower.size());
    bool pending_space = false;
    for (const char ch : lower) {
        const unsigned char c = static_cast<unsigned char>(ch);
        if (is_alnum_byte(c)) {
            if (pending_space && !out.empty()) out.push_back(' ');
            pending_space = false;
            out.push_back(ch);
        } else {
            pending_space = true;
        }
    }
    return out;
}

std::vector<std::string> tokenize(const std::string& s) {
    const std::string lower = to_lower(s);
    std::vector<std::string> tokens;
    std::string current;
    std::size_t letters = 0;
    auto flush = [&] {
        if (letters >= 2) tokens.push_back(current);
        current.clear();
        letters = 0;
    };
    for (const char ch : lower) {
        const unsigned char c = static_cast<unsigned char>(ch);
        if (is_letter_byte(c)) {
            current.push_back(ch);
            // count a letter per ASCII letter or UTF-8 lead byte
            if (c < 0x80 || c >= 0xC0) ++letters;
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out.push_back(sep);
        out += parts[i];
    }
    return out;
}

std::string csv_escape(const std::string& field, char delim) {
    const bool needs_quote = field.find_first_of(std::string("\"\n\r") + delim) != std::string::npos;
    if (!needs_quote) return field;
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string csv_row(const std::vector<std::string>& fields, char delim) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(delim);
        out += csv_escape(fields[i], delim);
    }
    return out;
}

std::vector<std::string> parse_csv_line(const std::string& line, char delim) {
    std::vector<std::string> fields;
    std::string current;
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"' && current.empty()) {
            in_quotes = true;
        } else if (c == delim) {
            fields.push_back(current);
            current.clear();
        } else if (c == '\r' && i + 1 == line.size()) {
            // tolerate CRLF input
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(current);
    return fields;
}

std::string format_double(double v) {
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    return buf;
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace scholnet::text
