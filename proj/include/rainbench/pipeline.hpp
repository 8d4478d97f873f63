#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rainbench/calibrate.hpp"
#include "rainbench/config.hpp"
#include "rainbench/deteval.hpp"
#include "rainbench/rainsim.hpp"

namespace rainbench {

struct ClassSpec {
    int id = 0;
    std::string name;  // defaults to the id in decimal
};

/// Validated sweep description. Levels are rainfall rates in mm/h, strictly
/// increasing; the default grid is 0,10,...,100.
struct SweepPlan {
    std::vector<double> levels;
    std::uint64_t global_seed = 0;
    std::filesystem::path dataset_root;
    std::string detector_cmd;  // template with {input_dir} and {output_dir}; empty
                               // means detections are expected to exist already
    RainMapping mapping;
    DropletStyle style;
    EvalOptions eval;
    std::vector<ClassSpec> classes;
    int jobs = 0;

    std::filesystem::path clean_dir() const { return dataset_root / "clean"; }
    std::filesystem::path manifest_path() const { return dataset_root / "manifest.txt"; }
    std::filesystem::path rain_dir(double level) const;
    std::filesystem::path detections_dir(double level) const;
    std::filesystem::path report_dir() const { return dataset_root / "report"; }
};

/// Loads and validates a sweep config. `overrides` (typically CLI flags)
/// win over file keys; RAINBENCH_SEED wins over the file but loses to an
/// explicit seed override. Throws BadConfig / MissingDataset.
SweepPlan plan_sweep(const std::filesystem::path& config_path, const Config& overrides = {});

/// Writes the rainy image set for one level under rain_<level>/. Level 0 (and
/// any level mapping to zero droplets) copies the clean files byte-exactly;
/// other levels composite rainfall_to_droplets(level) droplets seeded by
/// hash64(global_seed, image_id, level). Labels are shared across levels.
/// Returns the output directory.
std::filesystem::path synthesize_level(const SweepPlan& plan, double level);

/// Runs the external detector for one level ({input_dir} -> rain_<level>,
/// {output_dir} -> detections/<level>) and verifies one detection file per
/// manifest image named <image_id>.txt. With an empty detector_cmd only the
/// verification runs. Throws DetectorFailed / MissingDetections.
void run_detector(const SweepPlan& plan, double level);

/// 100 * (normal - degraded) / normal. Throws ZeroBaseline when normal <= 0.
double relative_degradation(double normal, double degraded);

struct ReportCell {
    std::optional<double> ap;
    std::optional<double> f1;
    std::optional<double> degradation_pct;  // of AP, relative to level 0
};

struct SweepReport {
    // key: (level, class id); levels that failed are simply absent
    std::map<std::pair<double, int>, ReportCell> cells;
    std::vector<double> levels;          // evaluated levels, ascending
    std::vector<ClassSpec> classes;
    std::vector<double> failed_levels;
    std::uint64_t seed = 0;
    RainMapping mapping;
    std::uint64_t style_digest = 0;

    /// Disjoint-level merge; associative and commutative.
    void merge(const SweepReport& other);
};

/// Builds the dense (level, class) table from per-level evaluation results
/// and fills in AP degradation against level 0 where defined.
SweepReport aggregate_report(const SweepPlan& plan,
                             const std::map<double, std::vector<ClassReport>>& per_level,
                             const std::vector<double>& failed_levels = {});

/// CSV: header `level_mm_h,class,ap,f1,degradation_pct`, rows sorted by
/// (level, class), absent values as empty fields.
void emit_csv(const SweepReport& report, const std::filesystem::path& path);

enum class Metric { AP, F1 };

/// Deterministic SVG line chart, one polyline per class, gaps where a level
/// is missing. Byte-identical across runs for identical reports.
void emit_svg(const SweepReport& report, Metric metric, const std::filesystem::path& path);

/// Evaluates one already-synthesized, already-detected level.
std::vector<ClassReport> evaluate_level(const SweepPlan& plan, double level);

struct SweepOutcome {
    SweepReport report;
    bool detector_failed = false;
};

/// Full sweep: synthesize, detect and evaluate every level (levels run
/// sequentially; synthesis within a level is parallel across images), then
/// write report/report.csv, report/ap.svg and report/f1.svg. A detector
/// failure at one level records a gap and continues.
SweepOutcome run_sweep(const SweepPlan& plan);

std::uint64_t style_digest(const DropletStyle& style);

/// Canonical text for a level value ("%g"), used for directory names.
std::string level_tag(double level);

} // namespace rainbench
