#include "loxo/config.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "loxo/avoided.hpp"
#include "loxo/stability.hpp"

namespace loxo {

namespace {

std::string scrub(const std::string& raw) {
    std::string s;
    s.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const unsigned char ch = static_cast<unsigned char>(raw[i]);
        if (ch == ' ' || ch == '\t') continue;
        // U+2212 minus sign -> ASCII '-'
        if (ch == 0xE2 && i + 2 < raw.size() &&
            static_cast<unsigned char>(raw[i + 1]) == 0x88 &&
            static_cast<unsigned char>(raw[i + 2]) == 0x92) {
            s.push_back('-');
            i += 2;
            continue;
        }
        s.push_back(raw[i]);
    }
    return s;
}

double parse_real(const std::string& token, const std::string& context) {
    if (token.empty()) fail(ErrorCode::ParseError, "empty number in '" + context + "'");
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || !std::isfinite(v)) {
        fail(ErrorCode::ParseError, "bad number '" + token + "' in '" + context + "'");
    }
    return v;
}

}  // namespace

Cx parse_complex(const std::string& text) {
    const std::string s = scrub(text);
    if (s.empty()) fail(ErrorCode::ParseError, "empty complex literal");

    const auto comma = s.find(',');
    if (comma != std::string::npos) {
        return {parse_real(s.substr(0, comma), text), parse_real(s.substr(comma + 1), text)};
    }
    if (s.back() != 'i' && s.back() != 'I') {
        return {parse_real(s, text), 0.0};
    }
    const std::string body = s.substr(0, s.size() - 1);
    // Split at the last +/- that starts the imaginary part (not an exponent sign).
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < body.size(); ++i) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
        }
    }
    const auto imag_of = [&](const std::string& tok) {
        if (tok.empty() || tok == "+") return 1.0;
        if (tok == "-") return -1.0;
        return parse_real(tok, text);
    };
    if (split == std::string::npos) return {0.0, imag_of(body)};
    return {parse_real(body.substr(0, split), text), imag_of(body.substr(split))};
}

std::string format_complex(Cx z) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g", z.real(), z.imag());
    return buf;
}

void apply_config_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open config file " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        fail(ErrorCode::ParseError, std::string("config file: ") + e.what());
    }
    const auto cxs = [&](const nlohmann::json& v) { return parse_complex(v.get<std::string>()); };
    try {
        if (doc.contains("map")) {
            const auto& m = doc["map"];
            if (!m.is_array() || m.size() != 4) {
                fail(ErrorCode::ParseError, "config 'map' must be 4 complex literals");
            }
            config.a = cxs(m[0]);
            config.b = cxs(m[1]);
            config.c = cxs(m[2]);
            config.d = cxs(m[3]);
        }
        if (doc.contains("epsilon")) config.epsilon = doc["epsilon"].get<double>();
        if (doc.contains("delta0")) config.delta0 = doc["delta0"].get<double>();
        if (doc.contains("t")) config.t = doc["t"].get<double>();
        if (doc.contains("R")) config.R = doc["R"].get<double>();
        if (doc.contains("steps")) config.steps = doc["steps"].get<int>();
        if (doc.contains("trials")) config.trials = doc["trials"].get<int>();
        if (doc.contains("seed")) config.seed = doc["seed"].get<std::uint64_t>();
        if (doc.contains("out")) config.out = doc["out"].get<std::string>();
        if (doc.contains("force")) config.force = doc["force"].get<bool>();
        if (doc.contains("z0")) config.z0 = cxs(doc["z0"]);
        if (doc.contains("rvals")) config.rvals = doc["rvals"].get<std::vector<double>>();
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail(ErrorCode::ParseError, std::string("config file: ") + e.what());
    }
}

void validate_config(const RunConfig& config) {
    if (config.trials < 1) fail(ErrorCode::InvalidConfig, "trials must be >= 1");
    if (config.steps < 1) fail(ErrorCode::InvalidConfig, "steps must be >= 1");
    if (!(config.delta0 > 0.0)) fail(ErrorCode::InvalidConfig, "delta0 must be > 0");
    if (!(config.t > 1.0)) fail(ErrorCode::InvalidConfig, "t must be > 1");
    for (double r : config.rvals) {
        if (!(r > 0.0)) fail(ErrorCode::InvalidConfig, "rvals must be > 0");
    }
}

double resolved_R(const RunConfig& config, double kmod) {
    if (config.R > 0.0) return config.R;
    return 1.01 * min_contraction_R(kmod);
}

double resolved_epsilon(const RunConfig& config, const LoxodromicData& data,
                        const MoebiusMap& g) {
    if (config.epsilon >= 0.0) return config.epsilon;
    const double delta = config.t * config.delta0 / (data.abs_k() - 1.0);
    return 1e-3 * epsilon_max(data, g, delta);
}

std::vector<double> resolved_rvals(const RunConfig& config, double kmod) {
    if (!config.rvals.empty()) return config.rvals;
    return {1.0 / std::sqrt(kmod), 0.5, 1.0, 2.0};
}

}  // namespace loxo
