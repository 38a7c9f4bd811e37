#include "xxzkink/text_io.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <stdexcept>
#include <vector>

#include <unistd.h>

namespace xxz {

std::string fmt17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string fmt_complex(std::complex<double> z) {
    std::string out = fmt17(z.real());
    if (z.imag() >= 0.0 || std::isnan(z.imag())) out += "+";
    out += fmt17(z.imag());
    out += "i";
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void JsonWriter::separator() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!needs_comma_.empty()) {
        if (needs_comma_.back()) out_ += ",";
        needs_comma_.back() = true;
    }
}

JsonWriter& JsonWriter::begin_object() {
    separator();
    out_ += "{";
    needs_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += "}";
    needs_comma_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separator();
    out_ += "[";
    needs_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += "]";
    needs_comma_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& name) {
    separator();
    out_ += "\"" + json_escape(name) + "\":";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& s) {
    separator();
    out_ += "\"" + json_escape(s) + "\"";
    return *this;
}

JsonWriter& JsonWriter::value(const char* s) { return value(std::string(s)); }

JsonWriter& JsonWriter::value(double v) {
    separator();
    out_ += fmt17(v);
    return *this;
}

JsonWriter& JsonWriter::value(int v) {
    separator();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(long long v) {
    separator();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool b) {
    separator();
    out_ += b ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::null() {
    separator();
    out_ += "null";
    return *this;
}

JsonWriter& JsonWriter::complex_pair(std::complex<double> z) {
    begin_array();
    value(z.real());
    value(z.imag());
    return end_array();
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string::size_type slash = path.find_last_of('/');
    const std::string dir = slash == std::string::npos ? "." : path.substr(0, slash);
    std::string temp = dir + "/.xxzkink_tmp_XXXXXX";
    std::vector<char> buf(temp.begin(), temp.end());
    buf.push_back('\0');
    const int fd = mkstemp(buf.data());
    if (fd < 0) throw std::runtime_error("atomic_write: cannot create temp file in " + dir);
    const std::string temp_path(buf.data());

    std::size_t written = 0;
    while (written < content.size()) {
        const ssize_t n = ::write(fd, content.data() + written, content.size() - written);
        if (n < 0) {
            ::close(fd);
            ::unlink(temp_path.c_str());
            throw std::runtime_error("atomic_write: write failed");
        }
        written += static_cast<std::size_t>(n);
    }
    ::close(fd);
    if (std::rename(temp_path.c_str(), path.c_str()) != 0) {
        ::unlink(temp_path.c_str());
        throw std::runtime_error("atomic_write: cannot rename to " + path);
    }
}

std::complex<double> parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("parse_complex: empty value");

    // Split at the sign that separates real and imaginary parts (skip a
    // leading sign and exponent signs).
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
    }

    const auto parse_real = [](const std::string& t) {
        if (t.empty()) throw std::invalid_argument("parse_complex: malformed number");
        std::size_t used = 0;
        const double v = std::stod(t, &used);
        if (used != t.size()) throw std::invalid_argument("parse_complex: malformed number");
        return v;
    };
    const auto parse_imag_part = [&](const std::string& t) {
        std::string body = t.substr(0, t.size() - 1);  // strip trailing 'i'
        if (body.empty() || body == "+") return 1.0;
        if (body == "-") return -1.0;
        return parse_real(body);
    };

    if (s.back() == 'i' || s.back() == 'I') {
        if (split == std::string::npos) return {0.0, parse_imag_part(s)};
        return {parse_real(s.substr(0, split)), parse_imag_part(s.substr(split))};
    }
    if (split != std::string::npos) {
        // A split without a trailing i is only valid for pure reals like 1e-3.
        throw std::invalid_argument("parse_complex: malformed value '" + text + "'");
    }
    return {parse_real(s), 0.0};
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    const auto flush = [&]() {
        if (token.empty()) return;
        std::size_t used = 0;
        const int v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument("parse_int_list: bad integer");
        out.push_back(v);
        token.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            token += c;
        }
    }
    flush();
    return out;
}

std::pair<int, int> parse_window(const std::string& text) {
    const std::string::size_type colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("parse_window: expected MIN:MAX");
    std::size_t used = 0;
    const int lo = std::stoi(text.substr(0, colon), &used);
    const int hi = std::stoi(text.substr(colon + 1), &used);
    return {lo, hi};
}

}  // namespace xxz
