#include "docaug/annotate.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "docaug/imageops.hpp"

namespace docaug {

int DocumentAnnotation::present_count() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                          [](const auto& e) { return e.has_value(); }));
}

std::vector<std::pair<int, BBox>> filter_absent(const DocumentAnnotation& ann) {
    std::vector<std::pair<int, BBox>> out;
    for (int key = 1; key <= kNumKeys; ++key)
        if (const auto& e = ann.entry(key)) out.emplace_back(key, *e);
    return out;
}

std::optional<BBox> rotate_bbox(const BBox& box, double angle_degrees,
                                int image_width, int image_height) {
    const double cx = (image_width - 1) / 2.0;
    const double cy = (image_height - 1) / 2.0;
    const double xs[4] = {box.x_min, box.x_max, box.x_max, box.x_min};
    const double ys[4] = {box.y_min, box.y_min, box.y_max, box.y_max};

    BBox hull{1e300, 1e300, -1e300, -1e300};
    for (int i = 0; i < 4; ++i) {
        const auto [rx, ry] = rotate_point(xs[i], ys[i], angle_degrees, cx, cy);
        hull.x_min = std::min(hull.x_min, rx);
        hull.y_min = std::min(hull.y_min, ry);
        hull.x_max = std::max(hull.x_max, rx);
        hull.y_max = std::max(hull.y_max, ry);
    }

    BBox clipped{std::max(hull.x_min, 0.0), std::max(hull.y_min, 0.0),
                 std::min(hull.x_max, static_cast<double>(image_width)),
                 std::min(hull.y_max, static_cast<double>(image_height))};
    if (!clipped.valid() || clipped.area() < 1.0) return std::nullopt;
    return clipped;
}

DocumentAnnotation rotate_annotation(const DocumentAnnotation& ann, double angle_degrees) {
    DocumentAnnotation out = ann;
    for (auto& entry : out.entries)
        if (entry)
            entry = rotate_bbox(*entry, angle_degrees, ann.image_width, ann.image_height);
    return out;
}

nlohmann::ordered_json annotation_to_json(const DocumentAnnotation& ann) {
    nlohmann::ordered_json j;
    j["document_id"] = ann.document_id;
    j["width"] = ann.image_width;
    j["height"] = ann.image_height;
    nlohmann::ordered_json keys;
    for (int key = 1; key <= kNumKeys; ++key) {
        const auto& e = ann.entry(key);
        if (e)
            keys[std::to_string(key)] = {e->x_min, e->y_min, e->x_max, e->y_max};
        else
            keys[std::to_string(key)] = -1;
    }
    j["keys"] = std::move(keys);
    return j;
}

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw std::runtime_error("malformed annotation: " + what);
}

} // namespace

DocumentAnnotation annotation_from_json(const nlohmann::json& j) {
    if (!j.is_object()) malformed("expected a JSON object");
    for (const auto& [field, _] : j.items())
        if (field != "document_id" && field != "width" && field != "height" && field != "keys")
            malformed("unknown field '" + field + "'");
    if (!j.contains("document_id") || !j["document_id"].is_string())
        malformed("missing or non-string 'document_id'");
    if (!j.contains("width") || !j["width"].is_number_integer())
        malformed("missing or non-integer 'width'");
    if (!j.contains("height") || !j["height"].is_number_integer())
        malformed("missing or non-integer 'height'");
    if (!j.contains("keys") || !j["keys"].is_object())
        malformed("missing or non-object 'keys'");

    DocumentAnnotation ann;
    ann.document_id = j["document_id"].get<std::string>();
    ann.image_width = j["width"].get<int>();
    ann.image_height = j["height"].get<int>();

    const auto& keys = j["keys"];
    for (const auto& [name, _] : keys.items()) {
        bool known = false;
        for (int key = 1; key <= kNumKeys; ++key)
            if (name == std::to_string(key)) known = true;
        if (!known) malformed("unknown key '" + name + "'");
    }
    for (int key = 1; key <= kNumKeys; ++key) {
        const std::string name = std::to_string(key);
        if (!keys.contains(name)) malformed("missing key " + name);
        const auto& v = keys[name];
        if (v.is_number()) {
            if (v.get<double>() != -1) malformed("key " + name + ": expected -1 or a 4-element box");
            continue;
        }
        if (!v.is_array() || v.size() != 4 || !std::all_of(v.begin(), v.end(), [](const auto& e) {
                return e.is_number();
            }))
            malformed("key " + name + ": expected -1 or a 4-element box");
        ann.entry(key) = BBox{v[0].get<double>(), v[1].get<double>(),
                              v[2].get<double>(), v[3].get<double>()};
    }
    return ann;
}

DocumentAnnotation load_annotation(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path.string() + ": unreadable file");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
    try {
        return annotation_from_json(j);
    } catch (const std::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void save_annotation(const DocumentAnnotation& ann, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
    out << annotation_to_json(ann).dump(2) << "\n";
    if (!out) throw std::runtime_error(path.string() + ": write failed");
}

std::vector<std::string> validate_annotation(const DocumentAnnotation& ann) {
    std::vector<std::string> violations;
    const std::string who = "document '" + ann.document_id + "'";
    if (ann.image_width < 1 || ann.image_height < 1)
        violations.push_back(who + ": non-positive canvas dimensions");
    for (int key = 1; key <= kNumKeys; ++key) {
        const auto& e = ann.entry(key);
        if (!e) continue;
        const std::string where = who + " key " + std::to_string(key);
        if (e->x_min >= e->x_max) violations.push_back(where + ": x_min >= x_max");
        if (e->y_min >= e->y_max) violations.push_back(where + ": y_min >= y_max");
        if (e->x_min < 0 || e->y_min < 0 || e->x_max > ann.image_width ||
            e->y_max > ann.image_height)
            violations.push_back(where + ": box extends beyond the canvas");
    }
    return violations;
}

} // namespace docaug
