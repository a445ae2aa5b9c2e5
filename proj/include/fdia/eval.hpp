#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fdia {

struct ConfusionMatrix {
    int k = 0;
    std::vector<std::int64_t> counts; // k*k, rows = true class, cols = predicted

    std::int64_t at(int true_class, int predicted) const {
        return counts[static_cast<std::size_t>(true_class * k + predicted)];
    }
    std::int64_t total() const;
    std::int64_t row_sum(int true_class) const;
};

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

struct MetricsReport {
    std::vector<ClassMetrics> per_class;
    ClassMetrics macro;                 // unweighted mean of per-class values
    std::vector<std::int64_t> support;  // per-class true counts
};

ConfusionMatrix confusion(const std::vector<int>& true_labels,
                          const std::vector<int>& predicted_labels, int k);

/// Per class: P = TP/(TP+FP), R = TP/(TP+FN), F1 = 2PR/(P+R).
/// Zero denominators yield 0 so reports never carry non-numeric entries.
MetricsReport metrics(const ConfusionMatrix& cm);

/// Euclidean majority vote over raw feature vectors. Ties break toward the
/// label of the single nearest neighbour among the tied classes.
std::vector<int> knn_classify(const std::vector<std::vector<double>>& train_features,
                              const std::vector<int>& train_labels,
                              const std::vector<std::vector<double>>& query_features,
                              int k_neighbors);

/// Comparison table: one summary row per approach (macro precision/recall/F1)
/// followed by a per-class F1 appendix. Byte-identical across re-runs.
void compare_report(const std::vector<std::pair<std::string, MetricsReport>>& reports,
                    const std::vector<std::string>& class_names, const std::string& path);

void write_confusion_csv(const ConfusionMatrix& cm, const std::vector<std::string>& class_names,
                         const std::string& path);

/// Grayscale heat image of row-normalized confusion counts (for PGM export).
std::vector<double> confusion_heat(const ConfusionMatrix& cm);

} // namespace fdia
