#include "softrough/io.hpp"

#include <fstream>

#include <json.hpp>

namespace softrough {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::IoFailure, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(Errc::ParseError, path + ": " + e.what());
    }
}

std::vector<std::string> string_list(const json& j, const std::string& field) {
    if (!j.is_array()) fail(Errc::ParseError, "field '" + field + "' must be an array");
    std::vector<std::string> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_string())
            fail(Errc::ParseError, "field '" + field + "' must contain strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

int int_field(const json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        fail(Errc::ParseError, "missing integer field '" + field + "'");
    return j[field].get<int>();
}

} // namespace

std::pair<UniversePtr, Partition> parse_space_file(const std::string& path) {
    json j = load_json(path);
    if (!j.contains("universe")) fail(Errc::ParseError, path + ": missing 'universe'");
    auto u = build_universe(string_list(j["universe"], "universe"));

    if (j.contains("blocks")) {
        const auto& jb = j["blocks"];
        if (!jb.is_array()) fail(Errc::ParseError, path + ": 'blocks' must be an array");
        std::vector<std::vector<std::string>> blocks;
        blocks.reserve(jb.size());
        for (const auto& b : jb) blocks.push_back(string_list(b, "blocks"));
        return {u, partition_from_blocks(u, blocks)};
    }
    if (j.contains("pairs")) {
        const auto& jp = j["pairs"];
        if (!jp.is_array()) fail(Errc::ParseError, path + ": 'pairs' must be an array");
        std::vector<std::pair<std::string, std::string>> pairs;
        pairs.reserve(jp.size());
        for (const auto& pr : jp) {
            auto two = string_list(pr, "pairs");
            if (two.size() != 2)
                fail(Errc::ParseError, path + ": each pair needs exactly two labels");
            pairs.emplace_back(two[0], two[1]);
        }
        return {u, partition_from_pairs(u, pairs)};
    }
    fail(Errc::ParseError, path + ": need either 'blocks' or 'pairs'");
}

SoftSet parse_softset_file(const std::string& path, const UniversePtr& u) {
    json j = load_json(path);
    if (!j.contains("attributes") || !j["attributes"].is_array())
        fail(Errc::ParseError, path + ": missing 'attributes' array");
    std::vector<Attribute> attrs;
    attrs.reserve(j["attributes"].size());
    for (const auto& ja : j["attributes"]) {
        if (!ja.contains("name") || !ja["name"].is_string())
            fail(Errc::ParseError, path + ": attribute needs a string 'name'");
        if (!ja.contains("value"))
            fail(Errc::ParseError, path + ": attribute needs a 'value' array");
        attrs.push_back(
            {ja["name"].get<std::string>(), u->set_of(string_list(ja["value"], "value"))});
    }
    return SoftSet(u, std::move(attrs));
}

GridScene parse_scene_file(const std::string& path) {
    json j = load_json(path);
    GridScene scene;
    scene.width = int_field(j, "width");
    scene.height = int_field(j, "height");
    scene.block = int_field(j, "block");
    if (!j.contains("regions") || !j["regions"].is_array())
        fail(Errc::ParseError, path + ": missing 'regions' array");
    for (const auto& jr : j["regions"]) {
        Region region;
        if (!jr.contains("name") || !jr["name"].is_string())
            fail(Errc::ParseError, path + ": region needs a string 'name'");
        region.name = jr["name"].get<std::string>();
        if (jr.contains("rect")) {
            const auto& v = jr["rect"];
            if (!v.is_array() || v.size() != 4)
                fail(Errc::ParseError, path + ": 'rect' needs [x0,y0,x1,y1]");
            region.shape = RectShape{v[0].get<int>(), v[1].get<int>(), v[2].get<int>(),
                                     v[3].get<int>()};
        } else if (jr.contains("disk")) {
            const auto& v = jr["disk"];
            if (!v.is_array() || v.size() != 3)
                fail(Errc::ParseError, path + ": 'disk' needs [cx,cy,r]");
            region.shape = DiskShape{v[0].get<int>(), v[1].get<int>(), v[2].get<int>()};
        } else {
            fail(Errc::ParseError, path + ": region needs 'rect' or 'disk'");
        }
        scene.regions.push_back(std::move(region));
    }
    return scene;
}

} // namespace softrough
