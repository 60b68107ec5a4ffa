#pragma once

#include <optional>
#include <string>
#include <vector>

#include "si/image.hpp"

namespace si::core {

// One 2D training image: T modality channels plus brain mask and provenance.
// Immutable by convention after construction; shared freely across workers.
struct MultiModalSlice {
    Image pixels;  // H x W x T
    Mask brain_mask;
    std::string patient_id;
    int slice_index = 0;
};

// Mixing configuration: N pooled sources combined into M mixtures of
// N_per_mixture sources each. Row m of `weights` holds the coefficients of
// mixture m over the pooled sources; the target source (index 0, the paper's
// s1) appears in every row.
struct MixturePlan {
    int n_pool = 0;         // N
    int n_per_mixture = 0;  // N~ (nonzeros per row)
    int m_mixtures = 0;     // M~
    std::vector<std::vector<double>> weights;  // M~ rows of length N
    int target_index = 0;   // fixed to 0 = s1

    double weight(int m, int n) const {
        return weights[static_cast<size_t>(m)][static_cast<size_t>(n)];
    }
};

enum class TaskKind {
    csi,
    wsi,
    dsi,
    inpaint,
    pixel_shuffle,
    super_res,
    intensity_shift,
};

bool is_si_task(TaskKind k);
std::string task_kind_name(TaskKind k);
TaskKind task_kind_from_name(const std::string& name);

// Parameters of the four corruption tasks. Bezier control points are drawn
// per sample, not stored here.
struct CorruptionSpec {
    int grid_h = 8, grid_w = 8;
    double gamma = 0.5;
};

// Provenance of one pooled source. Noise sources (DSI) carry the reserved
// patient id "noise" and slice_index -1.
struct SourceRef {
    std::string patient_id;
    int slice_index = 0;
};

// Proxy-task input/target pair. For SI tasks the input holds M~*T channels
// (mixtures concatenated in row order) and provenance records the realized
// plan; for corruption tasks the input is the corrupted slice and the target
// the original.
struct TrainingSample {
    Image input;
    Image target;  // H x W x T
    std::vector<SourceRef> sources;
    MixturePlan plan;  // realized weights; empty for corruption tasks
};

struct SegmentationSample {
    Image image;                  // H x W x T
    LabelImage labels;            // hard labels, empty when soft
    Image soft_labels;            // H x W x (C+1), empty unless blended
    int n_classes = 0;            // C foreground classes; channel 0 = background
    std::vector<std::string> class_names;  // length C

    bool has_soft_labels() const { return soft_labels.size() > 0; }
};

struct ValidationResult {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string msg) {
        ok = false;
        violations.push_back(std::move(msg));
    }
};

// Checks every MixturePlan invariant; violations are returned, never thrown.
ValidationResult validate_mixture_plan(const MixturePlan& plan);

// Weight-sum tolerance used by plan validation.
inline constexpr double kRowSumTolerance = 1e-9;

}  // namespace si::core
