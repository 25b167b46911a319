#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cvclone/states.hpp"

namespace cvclone::report {

/// Insertion-ordered JSON document builder. Reports must serialize the same
/// bytes on every run, so objects keep key order and doubles are printed with
/// 17 significant digits (lossless for IEEE doubles).
class Json {
public:
    static Json object();
    static Json array();
    static Json number(double v);
    static Json integer(std::int64_t v);
    static Json boolean(bool v);
    static Json string(std::string v);
    /// {"re": ..., "im": ...}
    static Json complex_label(ComplexAmplitude v);
    static Json label_list(const std::vector<ComplexAmplitude>& labels);

    /// Adds or replaces a key in an object; keeps first-insertion order.
    Json& set(const std::string& key, Json value);
    /// Appends to an array.
    Json& push(Json value);

    std::string dump(int indent = 2) const;

private:
    enum class Kind { Null, Bool, Int, Double, String, Array, Object };

    Json() = default;
    void write(std::string& out, int indent, int depth) const;

    Kind kind_ = Kind::Null;
    bool bool_ = false;
    std::int64_t int_ = 0;
    double double_ = 0.0;
    std::string string_;
    std::vector<Json> items_;
    std::vector<std::pair<std::string, Json>> members_;
};

/// Locale-independent double formatting with 17 significant digits.
std::string format_double(double v);

/// RFC-4180 field quoting: wraps in quotes when the field contains a comma,
/// quote, or newline, doubling embedded quotes.
std::string csv_field(const std::string& v);

/// Joins fields with commas and appends CRLF.
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace cvclone::report
