#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "docaug/annotate.hpp"
#include "docaug/effects.hpp"
#include "docaug/raster.hpp"

namespace docaug {

struct PipelineConfig {
    int variants_per_document = 5;
    double effect_probability = 0.7;   // per family: text and paper gate independently
    double rotation_probability = 0.5;
    double angle_min_degrees = -5.0;
    double angle_max_degrees = 5.0;
    EffectParams effect_params;
    std::uint64_t master_seed = 0;
    std::vector<std::uint8_t> fill{255}; // rotation background, 1 or 3 samples

    void validate() const; // throws std::invalid_argument
};

// The fully resolved random decisions for one variant. Seeds are pure
// functions of (master_seed, document_id, variant_index, stage), so a plan
// can be re-derived and executed anywhere.
struct VariantPlan {
    std::optional<TextEffectKind> text_effect;
    std::optional<PaperEffectKind> paper_effect;
    std::optional<double> rotation_angle;
    std::uint64_t text_seed = 0;  // meaningful iff text_effect is set
    std::uint64_t paper_seed = 0; // meaningful iff paper_effect is set
    int variant_index = 0;

    bool empty() const { return !text_effect && !paper_effect && !rotation_angle; }
};

// Six uniforms, in this frozen order: text gate, text pick, paper gate,
// paper pick, rotation gate, angle position. All six are always consumed;
// a failed gate never shifts later draws.
VariantPlan plan_variant_from_draws(const PipelineConfig& config,
                                    std::string_view document_id, int variant_index,
                                    const std::array<double, 6>& draws);

VariantPlan plan_variant(const PipelineConfig& config, std::string_view document_id,
                         int variant_index);

// Applies, in order: text effect, paper effect, then rotation of image and
// annotation together. The output document_id is the input id suffixed
// with "#aug<variant_index>". Absent keys are kept, not filtered.
std::pair<Raster, DocumentAnnotation> execute_variant(const Raster& img,
                                                      const DocumentAnnotation& ann,
                                                      const VariantPlan& plan,
                                                      const PipelineConfig& config);

struct ManifestEntry {
    std::string image;
    std::string annotation;
};

// Manifest files are JSON arrays of {"image": path, "annotation": path};
// relative paths resolve against the manifest's directory.
std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path);
void save_manifest(const std::vector<ManifestEntry>& entries,
                   const std::filesystem::path& path);

struct RunReport {
    int documents = 0;      // manifest entries processed
    int failed_documents = 0;
    int variants = 0;       // image+annotation pairs written
    int dropped_boxes = 0;  // boxes annihilated by rotation clipping
    std::array<int, kTextEffectCount> text_effect_counts{};
    std::array<int, kPaperEffectCount> paper_effect_counts{};
    int rotations = 0;
    std::vector<std::pair<std::string, std::string>> failures; // (image, error)

    nlohmann::ordered_json to_json() const;
};

// Generates variants_per_document outputs per manifest entry into out_dir
// plus an output manifest (out_dir/manifest.json). Per-document failures
// are recorded and skipped. The output tree is bit-identical for any
// worker count: every variant depends only on (master_seed, document_id,
// variant_index).
RunReport augment_corpus(const std::vector<ManifestEntry>& manifest,
                         const PipelineConfig& config,
                         const std::filesystem::path& out_dir, int workers);

} // namespace docaug
