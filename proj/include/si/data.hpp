#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "si/core.hpp"
#include "si/image.hpp"
#include "si/rng.hpp"

namespace si::data {

// 3D multi-modal volume, float32, storage order [z][y][x][t].
struct Volume {
    int h = 0, w = 0, z = 0, t = 0;
    std::array<float, 3> spacing = {1.0f, 1.0f, 1.0f};
    std::string patient_id;
    std::vector<std::string> modality_names;
    std::vector<float> v;

    Volume() = default;
    Volume(int h_, int w_, int z_, int t_)
        : h(h_), w(w_), z(z_), t(t_),
          v(static_cast<size_t>(h_) * w_ * z_ * t_, 0.0f) {}

    float& at(int y, int x, int zi, int ti) {
        return v[((static_cast<size_t>(zi) * h + y) * w + x) * t + ti];
    }
    float at(int y, int x, int zi, int ti) const {
        return v[((static_cast<size_t>(zi) * h + y) * w + x) * t + ti];
    }
    size_t size() const { return v.size(); }
};

// 3D label grid, [z][y][x], values in 0..C.
struct LabelVolume {
    int h = 0, w = 0, z = 0;
    std::vector<uint8_t> v;

    LabelVolume() = default;
    LabelVolume(int h_, int w_, int z_)
        : h(h_), w(w_), z(z_), v(static_cast<size_t>(h_) * w_ * z_, 0) {}

    uint8_t& at(int y, int x, int zi) {
        return v[(static_cast<size_t>(zi) * h + y) * w + x];
    }
    uint8_t at(int y, int x, int zi) const {
        return v[(static_cast<size_t>(zi) * h + y) * w + x];
    }
    bool empty() const { return v.empty(); }
};

// 3D binary mask, [z][y][x].
struct MaskVolume {
    int h = 0, w = 0, z = 0;
    std::vector<uint8_t> v;

    MaskVolume() = default;
    MaskVolume(int h_, int w_, int z_)
        : h(h_), w(w_), z(z_), v(static_cast<size_t>(h_) * w_ * z_, 0) {}

    uint8_t& at(int y, int x, int zi) {
        return v[(static_cast<size_t>(zi) * h + y) * w + x];
    }
    uint8_t at(int y, int x, int zi) const {
        return v[(static_cast<size_t>(zi) * h + y) * w + x];
    }
    int count() const {
        int n = 0;
        for (uint8_t b : v) n += b != 0;
        return n;
    }
    Mask slice(int zi) const;
};

enum class Split { train, val, test };
std::string split_name(Split s);
Split split_from_name(const std::string& name);

// ---------------------------------------------------------------------------
// Manifest

struct ManifestPatient {
    std::string id;
    Split split = Split::train;
    bool labeled = false;
    // phantom_raw kind
    std::string image_file;
    std::string label_file;
    std::array<int, 4> shape = {0, 0, 0, 0};  // h, w, z, t
    // nifti kind: one file per modality, order matching modality_names
    std::vector<std::string> modality_files;
};

struct DatasetManifest {
    int format_version = 1;
    std::string kind;  // "phantom_raw" | "nifti"
    uint64_t seed = 0;
    std::vector<std::string> modality_names;
    std::vector<std::string> class_names;  // foreground classes,背景 excluded
    std::vector<ManifestPatient> patients;
    std::string root;  // directory of the manifest, set on read
};

DatasetManifest read_manifest(const std::string& path);
void write_manifest(const std::string& path, const DatasetManifest& m);

// ---------------------------------------------------------------------------
// Loading and preprocessing

// Reads one NIfTI file; T>1 when the file is 4D.
Volume load_volume(const std::string& path);

// Stacks the per-modality NIfTI files (or reads the raw blob) declared in the
// manifest. SchemaError when the file count or shape disagrees with the
// manifest.
Volume load_patient_volume(const DatasetManifest& m, const ManifestPatient& p);
LabelVolume load_patient_labels(const DatasetManifest& m,
                                const ManifestPatient& p);

// Centered crop/pad of the spatial dims to size (th, tw); pad value 0.
// The leading side gets the smaller half on odd differences.
Volume crop_or_pad(const Volume& vol, int th, int tw);
LabelVolume crop_or_pad(const LabelVolume& vol, int th, int tw);

// Nonzero-support mask: any channel with |intensity| > tau.
Mask brain_mask_threshold(const Image& pixels, float tau = 1e-6f);
MaskVolume support_mask(const Volume& vol, float tau = 1e-6f);

// Per-channel z-score over foreground voxels (population std); background is
// set to exactly 0. DegenerateInputError on empty masks or zero variance.
Volume foreground_normalize(const Volume& vol, const MaskVolume& mask);

// Per-channel (mean, population std) over the mask.
std::vector<std::pair<double, double>> foreground_stats(const Volume& vol,
                                                        const MaskVolume& mask);
std::vector<std::pair<double, double>> foreground_stats(const Image& pixels,
                                                        const Mask& mask);

// ---------------------------------------------------------------------------
// Synthetic phantom

struct LesionParams {
    int count_min = 1, count_max = 3;
    double radius_min_frac = 0.05, radius_max_frac = 0.12;  // of image size
    double fraction_min = 0.01, fraction_max = 0.10;  // lesion / brain area
    double contrast = 0.8;  // bump height in units of tissue level
    int n_lesion_classes = 1;  // 2 nests a core class inside each lesion
};

struct PhantomParams {
    int n_patients = 30;
    int size = 64;  // H = W
    int z = 6;
    int t = 2;
    LesionParams lesion;
    uint64_t seed = 7;
};

struct PhantomPatient {
    Volume image;       // raw intensities, background exactly 0
    LabelVolume labels; // 0 background, 1 brain, 2 lesion (,3 core)
};

// Deterministic given params.seed; ConfigError on infeasible lesion params.
std::vector<PhantomPatient> generate_phantom_dataset(const PhantomParams& p);

// Label values used by the generator.
inline constexpr uint8_t kLabelBackground = 0;
inline constexpr uint8_t kLabelBrain = 1;
inline constexpr uint8_t kLabelLesion = 2;
inline constexpr uint8_t kLabelLesionCore = 3;

struct SplitCounts {
    int n_train = 20, n_val = 5, n_test = 5;
};

// Writes raw float32 arrays + manifest.json into dir. Split assignment is a
// seeded permutation of the patients.
void save_phantom_dataset(const std::string& dir,
                          const std::vector<PhantomPatient>& patients,
                          const PhantomParams& params, SplitCounts splits,
                          uint64_t split_seed);

// ---------------------------------------------------------------------------
// Augmentation

struct AugmentParams {
    double p_rotate = 0.5;
    double max_rotate_deg = 15.0;
    double p_scale = 0.5;
    double scale_min = 0.9, scale_max = 1.1;
    double p_flip_h = 0.5, p_flip_v = 0.5;
    double p_elastic = 0.2;
    double elastic_alpha = 8.0, elastic_sigma = 4.0;

    static AugmentParams none() {
        AugmentParams a;
        a.p_rotate = a.p_scale = a.p_flip_h = a.p_flip_v = a.p_elastic = 0.0;
        return a;
    }
};

// A realized spatial transform. Empty displacement fields mean no elastic
// component.
struct WarpParams {
    double angle_deg = 0.0;
    double scale = 1.0;
    bool flip_h = false, flip_v = false;
    std::vector<float> disp_x, disp_y;  // h*w each when present
};

WarpParams sample_warp(const AugmentParams& params, int h, int w, Rng& rng);

// Applies one transform to all channels (bilinear), the mask and labels
// (nearest). Output shape equals input shape.
std::pair<core::MultiModalSlice, LabelImage> warp_slice(
    const core::MultiModalSlice& slice, const LabelImage* labels,
    const WarpParams& wp);

std::pair<core::MultiModalSlice, LabelImage> augment(
    const core::MultiModalSlice& slice, const LabelImage* labels,
    const AugmentParams& params, Rng& rng);

// ---------------------------------------------------------------------------
// Slice extraction and dataset assembly

struct SliceRecord {
    core::MultiModalSlice slice;
    LabelImage labels;  // empty when the patient is unlabeled
    bool proxy_eligible = false;
};

// Minimum mask coverage for proxy-task sampling.
inline constexpr double kProxyMaskFraction = 0.01;

// One record per axial slice; masks from `mask` (or recomputed when null).
// Eligibility = mask covers >= 1% of pixels and per-channel foreground stats
// are within mean [-0.1, 0.1] and std [0.9, 1.1].
std::vector<SliceRecord> extract_slices(const Volume& vol,
                                        const MaskVolume* mask,
                                        const LabelVolume* labels);

struct Dataset {
    int height = 0, width = 0, t = 0;
    std::vector<std::string> modality_names;
    std::vector<std::string> class_names;

    struct Patient {
        std::string id;
        Split split = Split::train;
        bool labeled = false;
        std::vector<SliceRecord> slices;
        std::vector<int> eligible;  // slice indices eligible for proxy tasks
    };
    std::vector<Patient> patients;

    int n_classes() const { return static_cast<int>(class_names.size()); }
    std::vector<int> patients_in(Split s) const;
    std::vector<int> labeled_patients_in(Split s) const;
    // Patients in `s` with at least one proxy-eligible slice.
    std::vector<int> proxy_patients_in(Split s) const;
    std::vector<std::pair<int, int>> eligible_slices(Split s) const;
};

// Full pipeline: manifest -> load -> crop/pad -> mask -> normalize -> slices.
Dataset load_dataset(const std::string& manifest_path, int target_h,
                     int target_w);

// Same pipeline over in-memory volumes (used for tests and generated data).
struct RawPatient {
    Volume image;
    LabelVolume labels;
    Split split = Split::train;
    bool labeled = false;
};
Dataset assemble_dataset(std::vector<RawPatient> patients,
                         std::vector<std::string> class_names, int target_h,
                         int target_w);

}  // namespace si::data
