#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rainbench {

/// Axis-aligned box in pixels. Parsing rejects zero-area boxes, so
/// x_min < x_max and y_min < y_max always hold.
struct BBox {
    double x_min, y_min, x_max, y_max;
};

double iou(const BBox& a, const BBox& b);

struct GroundTruth {
    std::string image_id;
    int class_id;
    BBox box;
};

struct Detection {
    std::string image_id;
    int class_id;
    BBox box;
    double confidence;  // [0, 1]
};

/// (recall, precision) points ordered by descending confidence threshold.
struct PRCurve {
    std::vector<std::pair<double, double>> points;
    long total_gt = 0;
};

struct ClassReport {
    int class_id = 0;
    std::optional<double> ap;  // absent iff n_gt == 0
    std::optional<double> f1;
    long tp = 0, fp = 0, fn = 0;  // at the F1 operating point
    long n_gt = 0;
};

/// Greedy VOC-style matching of one class on one image. Detections are
/// processed in descending confidence; ties go to the detection with the
/// higher best-IoU over the image's ground truth, then to input order. A
/// detection is a TP if its best *unmatched* ground truth reaches iou_thr
/// (among equal IoUs, the earlier ground truth record wins); every ground
/// truth matches at most once. Returns one flag per detection, aligned with
/// the input order. Throws MixedClassOrImage.
std::vector<bool> match_detections(std::span<const Detection> dets,
                                   std::span<const GroundTruth> gts, double iou_thr);

struct ScoredFlag {
    double confidence;
    bool is_tp;
};

/// Cumulative precision/recall over all of one class's detections, sorted by
/// descending confidence. Confidence ties order FPs ahead of TPs so the
/// curve (and hence AP) is invariant to input shuffling and agrees with
/// evaluating precision/recall at every distinct confidence threshold.
PRCurve pr_curve(std::vector<ScoredFlag> flags, long total_gt);

/// All-point interpolated AP: area under the monotone precision envelope.
/// Throws NoGroundTruth when curve.total_gt == 0.
double average_precision(const PRCurve& curve);

struct F1Score {
    double f1 = 0.0;
    long tp = 0, fp = 0, fn = 0;
};

/// F1 of one class across all images at a fixed confidence threshold
/// (detections below conf_thr are dropped). f1 = 2tp / (2tp + fp + fn).
/// Throws NoGroundTruth when gts is empty.
F1Score f1_at_threshold(std::span<const Detection> dets, std::span<const GroundTruth> gts,
                        double conf_thr, double iou_thr);

enum class F1Mode { FixedThreshold, MaxOverThresholds };

struct EvalOptions {
    double conf_thr = 0.25;
    double iou_thr = 0.50;
    F1Mode f1_mode = F1Mode::FixedThreshold;
};

/// One ClassReport per requested class id. Classes without ground truth get
/// absent metrics (never zeros). Deterministic and order-independent with
/// respect to input record shuffling.
std::vector<ClassReport> evaluate(std::span<const Detection> dets,
                                  std::span<const GroundTruth> gts,
                                  std::span<const int> classes, const EvalOptions& opts);

// --- record files ----------------------------------------------------------

struct ManifestEntry {
    std::string image_id;
    int width = 0;
    int height = 0;
    std::string gt_path;
    std::string det_path;  // optional fifth column; empty when absent
};

/// Manifest lines: `image_id width height gt_path [det_path]`. Paths are
/// resolved relative to the manifest's directory by the callers.
std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path);

/// Ground-truth label file: one `class_id cx cy w h` line per object,
/// normalized to [0,1]; boxes are denormalized against (width, height).
std::vector<GroundTruth> load_gt_file(const std::filesystem::path& path,
                                      const std::string& image_id, int width, int height);

/// Detection file: `class_id confidence cx cy w h` lines, normalized.
std::vector<Detection> load_det_file(const std::filesystem::path& path,
                                     const std::string& image_id, int width, int height);

} // namespace rainbench
