#include "iwa/json_io.hpp"

#include <fstream>

namespace iwa {

namespace {

using nlohmann::json;

long long parse_int(const json& j, const std::string& what) {
    if (j.is_number_integer()) return j.get<long long>();
    if (j.is_string()) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(j.get<std::string>(), &pos);
            if (pos == j.get<std::string>().size()) return v;
        } catch (const std::exception&) {
        }
    }
    throw DataError("expected an integer for \"" + what + "\"");
}

long long field_int(const json& j, const std::string& key) {
    if (!j.contains(key)) throw DataError("missing field \"" + key + "\"");
    return parse_int(j.at(key), key);
}

PadicContext context_from(const json& j) {
    long long p = field_int(j, "p");
    long long m = field_int(j, "M");
    if (p < 3 || m < 1) throw DataError("invalid (p, M)");
    try {
        return PadicContext(static_cast<std::uint64_t>(p), static_cast<unsigned>(m));
    } catch (const Error& e) {
        throw DataError(e.what());
    }
}

std::vector<std::uint64_t> coeff_list(const json& j, const std::string& what) {
    if (!j.is_array()) throw DataError("expected a coefficient array for " + what);
    std::vector<std::uint64_t> out;
    out.reserve(j.size());
    for (const auto& c : j) {
        long long v = parse_int(c, what);
        if (v < 0) throw DataError("negative coefficient in " + what);
        out.push_back(static_cast<std::uint64_t>(v));
    }
    return out;
}

LayerElement element_from(PadicContext ctx, unsigned layer, const json& j, const std::string& what) {
    try {
        return LayerElement(ctx, layer, coeff_list(j, what));
    } catch (const DimensionMismatch&) {
        throw DataError("wrong coefficient count for " + what);
    }
}

json element_coeffs(const LayerElement& a) {
    json out = json::array();
    for (auto c : a.raw()) out.push_back(c);
    return out;
}

} // namespace

nlohmann::json tower_to_json(const ThetaTower& tower, std::optional<std::uint64_t> seed) {
    json j;
    j["p"] = tower.context().prime();
    j["M"] = tower.context().precision();
    j["ap"] = tower.ap().value();
    json levels = json::array();
    for (unsigned n = 0; n <= tower.top_level(); ++n) levels.push_back(element_coeffs(tower.level(n)));
    j["levels"] = levels;
    if (seed) j["seed"] = *seed;
    return j;
}

TowerFile tower_from_json(const nlohmann::json& j) {
    PadicContext ctx = context_from(j);
    if (!j.contains("levels") || !j.at("levels").is_array() || j.at("levels").empty())
        throw DataError("tower needs a nonempty \"levels\" array");

    PadicScalar ap = PadicScalar::from_int(ctx, field_int(j, "ap"));
    if (!ap.is_unit()) throw DataError("tower a_p must be a unit mod p");

    const auto& lv = j.at("levels");
    std::vector<LayerElement> levels;
    for (unsigned n = 0; n < lv.size(); ++n)
        levels.push_back(element_from(ctx, n, lv[n], "level " + std::to_string(n)));

    std::optional<std::uint64_t> seed;
    if (j.contains("seed")) seed = static_cast<std::uint64_t>(field_int(j, "seed"));
    try {
        return TowerFile{ThetaTower(ap, std::move(levels)), seed};
    } catch (const Error& e) {
        throw DataError(e.what());
    }
}

nlohmann::json stabilized_to_json(const StabilizedTower& s) {
    json j;
    j["p"] = s.context().prime();
    j["M"] = s.context().precision();
    j["alpha"] = s.alpha().value();
    json levels = json::array();
    for (unsigned n = 0; n <= s.top_level(); ++n) levels.push_back(element_coeffs(s.level(n)));
    j["levels"] = levels;
    return j;
}

StabilizedTower stabilized_from_json(const nlohmann::json& j) {
    PadicContext ctx = context_from(j);
    if (!j.contains("levels") || !j.at("levels").is_array() || j.at("levels").empty())
        throw DataError("stabilized tower needs a nonempty \"levels\" array");
    PadicScalar alpha = PadicScalar::from_int(ctx, field_int(j, "alpha"));
    const auto& lv = j.at("levels");
    std::vector<LayerElement> levels;
    for (unsigned n = 0; n < lv.size(); ++n)
        levels.push_back(element_from(ctx, n, lv[n], "level " + std::to_string(n)));
    try {
        return StabilizedTower(alpha, std::move(levels));
    } catch (const Error& e) {
        throw DataError(e.what());
    }
}

nlohmann::json presentation_to_json(const PresentationMatrix& m) {
    json j;
    j["p"] = m.context().prime();
    j["M"] = m.context().precision();
    j["n"] = m.layer();
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) {
            json e;
            e["n"] = m.at(i, k).layer();
            e["coeffs"] = element_coeffs(m.at(i, k));
            row.push_back(e);
        }
        entries.push_back(row);
    }
    j["entries"] = entries;
    return j;
}

PresentationMatrix presentation_from_json(const nlohmann::json& j) {
    PadicContext ctx = context_from(j);
    long long layer = field_int(j, "n");
    long long rows = field_int(j, "rows");
    long long cols = field_int(j, "cols");
    if (layer < 0 || rows < 1 || cols < 1) throw DataError("invalid presentation shape");
    if (!j.contains("entries") || !j.at("entries").is_array() ||
        j.at("entries").size() != static_cast<std::size_t>(rows))
        throw DataError("presentation \"entries\" must have one list per row");

    std::vector<LayerElement> entries;
    for (const auto& row : j.at("entries")) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(cols))
            throw DataError("presentation row has the wrong number of entries");
        for (const auto& e : row) {
            if (!e.is_object() || !e.contains("coeffs")) throw DataError("presentation entry needs \"coeffs\"");
            if (e.contains("n") && parse_int(e.at("n"), "entry n") != layer)
                throw DataError("presentation entry layer disagrees with \"n\"");
            entries.push_back(element_from(ctx, static_cast<unsigned>(layer), e.at("coeffs"), "presentation entry"));
        }
    }
    try {
        return PresentationMatrix(ctx, static_cast<unsigned>(layer), static_cast<std::size_t>(rows),
                                  static_cast<std::size_t>(cols), std::move(entries));
    } catch (const Error& e) {
        throw DataError(e.what());
    }
}

nlohmann::json ideal_to_json(const IdealHandle& ideal) {
    json j;
    j["p"] = ideal.context().prime();
    j["M"] = ideal.context().precision();
    j["n"] = ideal.layer();
    json gens = json::array();
    for (const auto& g : ideal.generators()) gens.push_back(element_coeffs(g));
    j["generators"] = gens;
    return j;
}

IdealHandle ideal_from_json(const nlohmann::json& j) {
    PadicContext ctx = context_from(j);
    long long layer = field_int(j, "n");
    if (layer < 0) throw DataError("invalid layer");
    if (!j.contains("generators") || !j.at("generators").is_array())
        throw DataError("ideal needs a \"generators\" array");
    std::vector<LayerElement> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back(element_from(ctx, static_cast<unsigned>(layer), g, "generator"));
    return IdealHandle(ctx, static_cast<unsigned>(layer), std::move(gens));
}

nlohmann::json curve_to_json(const CurveSpec& curve) {
    json j;
    j["a1"] = curve.a1;
    j["a2"] = curve.a2;
    j["a3"] = curve.a3;
    j["a4"] = curve.a4;
    j["a6"] = curve.a6;
    j["N"] = curve.conductor;
    if (!curve.label.empty()) j["label"] = curve.label;
    return j;
}

CurveSpec curve_from_json(const nlohmann::json& j) {
    std::string label;
    if (j.contains("label")) {
        if (!j.at("label").is_string()) throw DataError("curve label must be a string");
        label = j.at("label").get<std::string>();
    }
    try {
        return CurveSpec(field_int(j, "a1"), field_int(j, "a2"), field_int(j, "a3"), field_int(j, "a4"),
                         field_int(j, "a6"), field_int(j, "N"), label);
    } catch (const DataError&) {
        throw;
    } catch (const Error& e) {
        throw DataError(e.what());
    }
}

nlohmann::json field_to_json(const FieldSpec& field) {
    json j;
    j["D_K"] = field.d_k;
    return j;
}

FieldSpec field_from_json(const nlohmann::json& j) {
    try {
        return FieldSpec(field_int(j, "D_K"));
    } catch (const DataError&) {
        throw;
    } catch (const Error& e) {
        throw DataError(e.what());
    }
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw DataError("cannot parse " + path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace iwa
