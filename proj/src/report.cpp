#include "cvclone/report.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace cvclone::report {

Json Json::object() {
    Json j;
    j.kind_ = Kind::Object;
    return j;
}

Json Json::array() {
    Json j;
    j.kind_ = Kind::Array;
    return j;
}

Json Json::number(double v) {
    Json j;
    j.kind_ = Kind::Double;
    j.double_ = v;
    return j;
}

Json Json::integer(std::int64_t v) {
    Json j;
    j.kind_ = Kind::Int;
    j.int_ = v;
    return j;
}

Json Json::boolean(bool v) {
    Json j;
    j.kind_ = Kind::Bool;
    j.bool_ = v;
    return j;
}

Json Json::string(std::string v) {
    Json j;
    j.kind_ = Kind::String;
    j.string_ = std::move(v);
    return j;
}

Json Json::complex_label(ComplexAmplitude v) {
    Json j = object();
    j.set("re", number(v.real()));
    j.set("im", number(v.imag()));
    return j;
}

Json Json::label_list(const std::vector<ComplexAmplitude>& labels) {
    Json j = array();
    for (const auto& l : labels) {
        j.push(complex_label(l));
    }
    return j;
}

Json& Json::set(const std::string& key, Json value) {
    if (kind_ != Kind::Object) {
        throw std::logic_error("Json::set on a non-object");
    }
    for (auto& [k, v] : members_) {
        if (k == key) {
            v = std::move(value);
            return *this;
        }
    }
    members_.emplace_back(key, std::move(value));
    return *this;
}

Json& Json::push(Json value) {
    if (kind_ != Kind::Array) {
        throw std::logic_error("Json::push on a non-array");
    }
    items_.push_back(std::move(value));
    return *this;
}

std::string format_double(double v) {
    if (!std::isfinite(v)) {
        throw std::domain_error("format_double: reports may not contain NaN or infinity");
    }
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_double: conversion failed");
    }
    return std::string(buf, ptr);
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
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
    out += '"';
}

void write_newline_indent(std::string& out, int indent, int depth) {
    out += '\n';
    out.append(static_cast<std::size_t>(indent) * static_cast<std::size_t>(depth), ' ');
}

}  // namespace

void Json::write(std::string& out, int indent, int depth) const {
    switch (kind_) {
        case Kind::Null:
            out += "null";
            break;
        case Kind::Bool:
            out += bool_ ? "true" : "false";
            break;
        case Kind::Int:
            out += std::to_string(int_);
            break;
        case Kind::Double:
            out += format_double(double_);
            break;
        case Kind::String:
            write_escaped(out, string_);
            break;
        case Kind::Array: {
            if (items_.empty()) {
                out += "[]";
                break;
            }
            out += '[';
            for (std::size_t i = 0; i < items_.size(); ++i) {
                if (i > 0) {
                    out += ',';
                }
                write_newline_indent(out, indent, depth + 1);
                items_[i].write(out, indent, depth + 1);
            }
            write_newline_indent(out, indent, depth);
            out += ']';
            break;
        }
        case Kind::Object: {
            if (members_.empty()) {
                out += "{}";
                break;
            }
            out += '{';
            for (std::size_t i = 0; i < members_.size(); ++i) {
                if (i > 0) {
                    out += ',';
                }
                write_newline_indent(out, indent, depth + 1);
                write_escaped(out, members_[i].first);
                out += ": ";
                members_[i].second.write(out, indent, depth + 1);
            }
            write_newline_indent(out, indent, depth);
            out += '}';
            break;
        }
    }
}

std::string Json::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    out += '\n';
    return out;
}

std::string csv_field(const std::string& v) {
    if (v.find_first_of(",\"\r\n") == std::string::npos) {
        return v;
    }
    std::string quoted = "\"";
    for (const char c : v) {
        if (c == '"') {
            quoted += "\"\"";
        } else {
            quoted += c;
        }
    }
    quoted += '"';
    return quoted;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string row;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            row += ',';
        }
        row += csv_field(fields[i]);
    }
    row += "\r\n";
    return row;
}

}  // namespace cvclone::report
