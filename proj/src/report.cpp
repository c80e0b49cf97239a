#include "loxo/report.hpp"

namespace loxo {

void JsonWriter::separator() {
    if (first_in_scope_.empty()) return;
    if (pending_key_) return;  // value follows its key, no comma
    if (!first_in_scope_.back()) out_ += ",";
    first_in_scope_.back() = false;
    indent();
}

void JsonWriter::indent() {
    out_ += "\n";
    out_.append(2 * first_in_scope_.size(), ' ');
}

JsonWriter& JsonWriter::begin_object() {
    separator();
    pending_key_ = false;
    out_ += "{";
    first_in_scope_.push_back(true);
    is_array_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    const bool empty = first_in_scope_.back();
    first_in_scope_.pop_back();
    is_array_.pop_back();
    if (!empty) indent();
    out_ += "}";
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separator();
    pending_key_ = false;
    out_ += "[";
    first_in_scope_.push_back(true);
    is_array_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    const bool empty = first_in_scope_.back();
    first_in_scope_.pop_back();
    is_array_.pop_back();
    if (!empty) indent();
    out_ += "]";
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& name) {
    separator();
    out_ += "\"" + name + "\": ";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    separator();
    pending_key_ = false;
    out_ += fmt17(v);
    return *this;
}

JsonWriter& JsonWriter::value(int v) {
    separator();
    pending_key_ = false;
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
    separator();
    pending_key_ = false;
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    separator();
    pending_key_ = false;
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
    separator();
    pending_key_ = false;
    out_ += "\"";
    for (char ch : v) {
        switch (ch) {
            case '"': out_ += "\\\""; break;
            case '\\': out_ += "\\\\"; break;
            case '\n': out_ += "\\n"; break;
            case '\t': out_ += "\\t"; break;
            default: out_ += ch;
        }
    }
    out_ += "\"";
    return *this;
}

JsonWriter& JsonWriter::value(Cx z) {
    begin_object();
    field("re", z.real());
    field("im", z.imag());
    return end_object();
}

}  // namespace loxo
