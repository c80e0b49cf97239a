#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "loxo/complex_ext.hpp"

namespace loxo {

// %.17g: enough digits to round-trip any double; used by every emitter so CSV,
// JSON and SVG agree bit-for-bit on shared values.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Minimal JSON emitter with insertion-ordered keys and fmt17 numbers.
// Output is fully deterministic for identical inputs.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& name);
    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(std::uint64_t v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v) { return value(std::string(v)); }
    JsonWriter& value(Cx z);  // {"re": ..., "im": ...}

    JsonWriter& field(const std::string& name, double v) { return key(name).value(v); }
    JsonWriter& field(const std::string& name, int v) { return key(name).value(v); }
    JsonWriter& field(const std::string& name, std::uint64_t v) { return key(name).value(v); }
    JsonWriter& field(const std::string& name, bool v) { return key(name).value(v); }
    JsonWriter& field(const std::string& name, const std::string& v) {
        return key(name).value(v);
    }
    JsonWriter& field(const std::string& name, const char* v) { return key(name).value(v); }
    JsonWriter& field(const std::string& name, Cx z) { return key(name).value(z); }

    std::string str() const { return out_; }

private:
    void separator();
    void indent();

    std::string out_;
    std::vector<bool> first_in_scope_{};
    std::vector<bool> is_array_{};
    bool pending_key_ = false;
};

}  // namespace loxo
