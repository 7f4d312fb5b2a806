#include "sensorfx/params_json.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string_view>

#include "sensorfx/error.hpp"

namespace sensorfx {

namespace {

void reject_unknown(const Json& obj, std::string_view where,
                    std::initializer_list<std::string_view> allowed) {
    if (!obj.is_object()) {
        throw InvalidArgument(std::string(where) + " must be a JSON object");
    }
    for (const auto& item : obj.items()) {
        bool known = false;
        for (std::string_view k : allowed) {
            known = known || item.key() == k;
        }
        if (!known) {
            throw InvalidArgument("unknown key '" + item.key() + "' in " + std::string(where));
        }
    }
}

double number(const Json& obj, const char* key, std::string_view where, double fallback) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        return fallback;
    }
    if (!it->is_number()) {
        throw InvalidArgument(std::string(where) + "." + key + " must be a number");
    }
    return it->get<double>();
}

bool boolean(const Json& obj, const char* key, std::string_view where, bool fallback) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        return fallback;
    }
    if (!it->is_boolean()) {
        throw InvalidArgument(std::string(where) + "." + key + " must be true or false");
    }
    return it->get<bool>();
}

std::pair<double, double> pair_of(const Json& v, std::string_view name) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw InvalidArgument(std::string(name) + " must be a two-element numeric array");
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

Translation translation(const Json& obj, const char* key, std::string_view where) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        return {};
    }
    const auto [x, y] = pair_of(*it, std::string(where) + "." + key);
    return {x, y};
}

Interval interval(const Json& obj, const char* key, std::string_view where, Interval fallback) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        return fallback;
    }
    const auto [lo, hi] = pair_of(*it, std::string(where) + "." + key);
    return {lo, hi};
}

const Json* section(const Json& j, const char* key) {
    const auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

Json pair_json(double a, double b) { return Json::array({a, b}); }

} // namespace

Json params_to_json(const AugmentationParams& p) {
    Json j;
    j["chromatic_aberration"] = {
        {"S", p.chrom_ab.scale},
        {"t_r", pair_json(p.chrom_ab.red.x, p.chrom_ab.red.y)},
        {"t_g", pair_json(p.chrom_ab.green.x, p.chrom_ab.green.y)},
        {"t_b", pair_json(p.chrom_ab.blue.x, p.chrom_ab.blue.y)},
    };
    j["blur"] = {{"sigma", p.blur.sigma}};
    j["exposure"] = {{"delta_S", p.exposure.delta_s}, {"A", p.exposure.contrast}};
    j["noise"] = {{"a", p.noise.poisson_scale}, {"b", p.noise.gaussian_sigma}};
    j["color_shift"] = {{"dL", p.color.dL}, {"da", p.color.da}, {"db", p.color.db}};
    j["noise_seed"] = p.noise_seed;
    return j;
}

AugmentationParams params_from_json(const Json& j) {
    reject_unknown(j, "params",
                   {"chromatic_aberration", "blur", "exposure", "noise", "color_shift",
                    "noise_seed"});
    AugmentationParams p;
    if (const Json* s = section(j, "chromatic_aberration")) {
        reject_unknown(*s, "chromatic_aberration", {"S", "t_r", "t_g", "t_b"});
        p.chrom_ab.scale = number(*s, "S", "chromatic_aberration", 1.0);
        p.chrom_ab.red = translation(*s, "t_r", "chromatic_aberration");
        p.chrom_ab.green = translation(*s, "t_g", "chromatic_aberration");
        p.chrom_ab.blue = translation(*s, "t_b", "chromatic_aberration");
    }
    if (const Json* s = section(j, "blur")) {
        reject_unknown(*s, "blur", {"sigma"});
        p.blur.sigma = number(*s, "sigma", "blur", 0.0);
    }
    if (const Json* s = section(j, "exposure")) {
        reject_unknown(*s, "exposure", {"delta_S", "A"});
        p.exposure.delta_s = number(*s, "delta_S", "exposure", 0.0);
        p.exposure.contrast = number(*s, "A", "exposure", kDefaultContrast);
    }
    if (const Json* s = section(j, "noise")) {
        reject_unknown(*s, "noise", {"a", "b"});
        p.noise.poisson_scale = number(*s, "a", "noise", 0.0);
        p.noise.gaussian_sigma = number(*s, "b", "noise", 0.0);
    }
    if (const Json* s = section(j, "color_shift")) {
        reject_unknown(*s, "color_shift", {"dL", "da", "db"});
        p.color.dL = number(*s, "dL", "color_shift", 0.0);
        p.color.da = number(*s, "da", "color_shift", 0.0);
        p.color.db = number(*s, "db", "color_shift", 0.0);
    }
    if (const auto it = j.find("noise_seed"); it != j.end()) {
        if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<std::int64_t>() >= 0)) {
            throw InvalidArgument("noise_seed must be a non-negative integer");
        }
        p.noise_seed = it->get<std::uint64_t>();
    }
    validate(p);
    return p;
}

Json ranges_to_json(const ParamRanges& r) {
    const auto iv = [](const Interval& i) { return pair_json(i.lo, i.hi); };
    Json j;
    j["chromatic_aberration"] = {
        {"enabled", r.chrom_ab.enabled},
        {"S", iv(r.chrom_ab.scale)},
        {"t", iv(r.chrom_ab.translation)},
    };
    j["blur"] = {{"enabled", r.blur.enabled}, {"sigma", iv(r.blur.sigma)}};
    Json contrast = r.exposure.contrast.lo == r.exposure.contrast.hi
                        ? Json(r.exposure.contrast.lo)
                        : iv(r.exposure.contrast);
    j["exposure"] = {
        {"enabled", r.exposure.enabled},
        {"delta_S", iv(r.exposure.delta_s)},
        {"A", contrast},
    };
    j["noise"] = {
        {"enabled", r.noise.enabled},
        {"a", iv(r.noise.poisson_scale)},
        {"b", iv(r.noise.gaussian_sigma)},
    };
    j["color_shift"] = {
        {"enabled", r.color.enabled},
        {"dL", iv(r.color.dL)},
        {"da", iv(r.color.da)},
        {"db", iv(r.color.db)},
    };
    return j;
}

ParamRanges ranges_from_json(const Json& j) {
    reject_unknown(j, "config",
                   {"chromatic_aberration", "blur", "exposure", "noise", "color_shift"});
    ParamRanges r;
    if (const Json* s = section(j, "chromatic_aberration")) {
        reject_unknown(*s, "chromatic_aberration", {"enabled", "S", "t"});
        r.chrom_ab.enabled = boolean(*s, "enabled", "chromatic_aberration", true);
        r.chrom_ab.scale = interval(*s, "S", "chromatic_aberration", r.chrom_ab.scale);
        r.chrom_ab.translation = interval(*s, "t", "chromatic_aberration", r.chrom_ab.translation);
    }
    if (const Json* s = section(j, "blur")) {
        reject_unknown(*s, "blur", {"enabled", "sigma"});
        r.blur.enabled = boolean(*s, "enabled", "blur", true);
        r.blur.sigma = interval(*s, "sigma", "blur", r.blur.sigma);
    }
    if (const Json* s = section(j, "exposure")) {
        reject_unknown(*s, "exposure", {"enabled", "delta_S", "A"});
        r.exposure.enabled = boolean(*s, "enabled", "exposure", true);
        r.exposure.delta_s = interval(*s, "delta_S", "exposure", r.exposure.delta_s);
        if (const auto it = s->find("A"); it != s->end()) {
            if (it->is_number()) {
                const double a = it->get<double>();
                r.exposure.contrast = {a, a};
            } else {
                const auto [lo, hi] = pair_of(*it, "exposure.A");
                r.exposure.contrast = {lo, hi};
            }
        }
    }
    if (const Json* s = section(j, "noise")) {
        reject_unknown(*s, "noise", {"enabled", "a", "b"});
        r.noise.enabled = boolean(*s, "enabled", "noise", true);
        r.noise.poisson_scale = interval(*s, "a", "noise", r.noise.poisson_scale);
        r.noise.gaussian_sigma = interval(*s, "b", "noise", r.noise.gaussian_sigma);
    }
    if (const Json* s = section(j, "color_shift")) {
        reject_unknown(*s, "color_shift", {"enabled", "dL", "da", "db"});
        r.color.enabled = boolean(*s, "enabled", "color_shift", true);
        r.color.dL = interval(*s, "dL", "color_shift", r.color.dL);
        r.color.da = interval(*s, "da", "color_shift", r.color.da);
        r.color.db = interval(*s, "db", "color_shift", r.color.db);
    }
    validate(r);
    return r;
}

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument(what + ": " + e.what());
    }
}

ParamRanges load_ranges(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError(IoErrorKind::NotFound, "cannot open config " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return ranges_from_json(parse_json(text.str(), "config " + path));
}

} // namespace sensorfx
