#pragma once

#include <string>
#include <vector>

#include "fdia/config.hpp"
#include "fdia/dataset.hpp"
#include "fdia/eval.hpp"

namespace fdia::pipeline {

// Output file names inside config.output_dir.
inline constexpr const char* kDatasetFile = "dataset.fdia";
inline constexpr const char* kDatasetManifest = "dataset_manifest.json";
inline constexpr const char* kImagesFile = "images.fimg";
inline constexpr const char* kModelFile = "model.fdnn";
inline constexpr const char* kHistoryFile = "history.csv";
inline constexpr const char* kMetricsFile = "metrics.csv";
inline constexpr const char* kConfusionCsv = "confusion.csv";
inline constexpr const char* kConfusionPgm = "confusion.pgm";
inline constexpr const char* kPipelineManifest = "pipeline_manifest.json";

std::string out_path(const PipelineConfig& config, const char* name);

/// Build load profiles per config (synthetic or CSV import).
LoadProfiles make_profiles(const PipelineConfig& config, const GridCase& grid);

/// Stage 1: simulate and write dataset.fdia + dataset_manifest.json.
Dataset gen_data(const PipelineConfig& config);

/// Stage 2: encode the stored dataset into images.fimg.
void encode(const PipelineConfig& config);

/// Stage 3: train the configured network; writes model.fdnn + history.csv.
/// The test split serves as the validation series in the history.
void train(const PipelineConfig& config);

struct EvalResult {
    double model_macro_f1 = 0.0;
    double knn_macro_f1 = 0.0;
    MetricsReport model_report;
    MetricsReport knn_report;
};

/// Stage 4: evaluate the trained model and the kNN baseline on the same
/// stratified test split; writes metrics.csv, confusion.csv, confusion.pgm.
EvalResult evaluate(const PipelineConfig& config);

/// Export the first stored image of every class as PGM files under
/// <output_dir>/samples/.
void render_samples(const PipelineConfig& config);

/// All stages in order plus pipeline_manifest.json (config hash, artifact
/// list, per-stage wall seconds; timing is the only non-reproducible field).
EvalResult run_all(const PipelineConfig& config);

} // namespace fdia::pipeline
