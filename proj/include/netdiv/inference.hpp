#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "netdiv/catalog.hpp"
#include "netdiv/census.hpp"

namespace netdiv {

enum class ResponseKind { relative_rate, rate };

// One observation per common-neighborhood class with observed pairs.
struct RegressionRow {
    std::uint32_t class_id = 0;
    double response = 0.0;
    double cn = 0.0;          // common-neighborhood size k
    double density = 0.0;
    double components = 0.0;
    std::uint64_t weight = 1;  // pair count, used only by the weighted fit
};

std::vector<RegressionRow> regression_rows(const CensusTable& census,
                                           const GraphClassCatalog& catalog,
                                           unsigned k_min = 2, unsigned k_max = 6,
                                           ResponseKind response = ResponseKind::relative_rate);

struct RegressionResult {
    // keys: intercept, cn, density, components (cn only for the homophily fit)
    std::map<std::string, double> coefficients;
    std::map<std::string, double> std_errors;
    std::map<std::string, double> t_values;
    std::map<std::string, double> p_values;
    double r2 = 0.0;
    double adj_r2 = 0.0;
    std::uint64_t n_obs = 0;
};

// OLS via normal equations (Cholesky); throws SingularDesignError when the
// design is rank-deficient. Weighted = WLS with the row pair counts.
RegressionResult ols_fit(const std::vector<RegressionRow>& rows, bool weighted = false);
// Homophily baseline: response ~ intercept + cn.
RegressionResult ols_fit_homophily(const std::vector<RegressionRow>& rows,
                                   bool weighted = false);

// Per-size Pearson correlation between the response and one feature.
enum class ClassFeature { density, components };
struct FeatureCorrelation {
    unsigned k = 0;
    double r = 0.0;
    bool defined = false;
    std::uint32_t n_classes = 0;
};
// With exactly two defined classes (only possible at k = 2) the correlation
// is reported as the slope sign (+1/-1); zero-variance cases are undefined.
std::vector<FeatureCorrelation> correlation_table(const CensusTable& census,
                                                  const GraphClassCatalog& catalog,
                                                  ClassFeature feature,
                                                  unsigned k_min = 2, unsigned k_max = 6,
                                                  ResponseKind response = ResponseKind::relative_rate);

// Candidate pairs grouped by class (features are class-determined, so the
// grouped form is lossless); labels come from link existence in the same graph.
struct InferenceDataset {
    struct ClassGroup {
        std::uint32_t class_id = 0;
        std::uint32_t cn = 0;
        double density = 0.0;
        std::uint32_t components = 0;
        std::uint64_t positives = 0;
        std::uint64_t negatives = 0;
    };
    std::vector<ClassGroup> groups;
    std::uint64_t instances = 0;
    std::uint64_t positives = 0;
    unsigned cn_min = 2, cn_max = 6;
};

InferenceDataset make_inference_dataset(const CensusTable& census,
                                        const GraphClassCatalog& catalog,
                                        unsigned cn_min = 2, unsigned cn_max = 6);

// Ranking metrics over weighted scored instances. AUROC is tie-aware
// (Mann-Whitney with half credit); AUPR is the area under the
// precision-recall step curve over distinct score thresholds.
struct ScoredGroup {
    double score = 0.0;
    std::uint64_t positives = 0;
    std::uint64_t negatives = 0;
};

struct EvalReport {
    std::string predictor;
    double aupr = 0.0;
    double auroc = 0.0;
    std::vector<std::pair<double, double>> pr_curve;  // (recall, precision)
};

EvalReport evaluate_ranking(std::vector<ScoredGroup> groups, const std::string& name);

// Homophily scores pairs by #CN; diversity scores them with the fitted linear
// combination of (cn, density, components) from the class-level regression.
std::pair<EvalReport, EvalReport> evaluate_predictors(const InferenceDataset& dataset,
                                                      const RegressionResult& diversity_fit);

}  // namespace netdiv
