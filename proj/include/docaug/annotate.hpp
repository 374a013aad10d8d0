#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace docaug {

// The form vocabulary has twelve keys, numbered 1..12.
inline constexpr int kNumKeys = 12;

// Axis-aligned box, half-open ([x_min, x_max) x [y_min, y_max)), continuous
// pixel coordinates. Valid boxes have strictly positive area.
struct BBox {
    double x_min = 0, y_min = 0, x_max = 0, y_max = 0;

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
    double area() const { return width() * height(); }
    bool valid() const { return x_min < x_max && y_min < y_max; }
};

// Per-document key/value annotation. Every key is present either as a box
// or as absent (serialized as the literal -1).
struct DocumentAnnotation {
    std::string document_id;
    int image_width = 0;
    int image_height = 0;
    std::array<std::optional<BBox>, kNumKeys> entries; // slot k-1 holds key k

    const std::optional<BBox>& entry(int key) const { return entries[key - 1]; }
    std::optional<BBox>& entry(int key) { return entries[key - 1]; }

    int present_count() const;
};

// The present (key, box) pairs in ascending key order; absent keys drop out.
std::vector<std::pair<int, BBox>> filter_absent(const DocumentAnnotation& ann);

// Rotates the box corners with the same forward map and center the image
// rotation uses, takes the axis-aligned hull, and clips it to the canvas.
// Returns nullopt (dropped) when the clipped area falls below 1 px^2.
std::optional<BBox> rotate_bbox(const BBox& box, double angle_degrees,
                                int image_width, int image_height);

// rotate_bbox over every present entry; dropped boxes become absent.
// Canvas dimensions and document_id are unchanged.
DocumentAnnotation rotate_annotation(const DocumentAnnotation& ann, double angle_degrees);

// On-disk form, keys emitted in ascending numeric order:
// {"document_id": str, "width": int, "height": int,
//  "keys": {"1": [x_min,y_min,x_max,y_max] | -1, ..., "12": ...}}
nlohmann::ordered_json annotation_to_json(const DocumentAnnotation& ann);
DocumentAnnotation annotation_from_json(const nlohmann::json& j);

DocumentAnnotation load_annotation(const std::filesystem::path& path);
void save_annotation(const DocumentAnnotation& ann, const std::filesystem::path& path);

// Geometry checks: positive-area boxes staying inside the canvas. Returns
// human-readable violations; empty means valid.
std::vector<std::string> validate_annotation(const DocumentAnnotation& ann);

} // namespace docaug
