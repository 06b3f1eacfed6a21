#include "netdiv/inference.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <array>
#include <cmath>

#include "netdiv/cluster.hpp"
#include "netdiv/error.hpp"

namespace netdiv {

std::vector<RegressionRow> regression_rows(const CensusTable& census,
                                           const GraphClassCatalog& catalog,
                                           unsigned k_min, unsigned k_max,
                                           ResponseKind response) {
    if (k_min < 1 || k_max < k_min) throw Error("regression_rows: empty size range");
    if (k_max > census.cap)
        throw Error("regression_rows: census cap below k_max");

    double base_rate = 0.0;
    if (response == ResponseKind::relative_rate) {
        if (census.pair_count[0] == 0)
            throw UndefinedBaselineError("regression_rows: base class has no pairs");
        base_rate = static_cast<double>(census.linked_count[0]) /
                    static_cast<double>(census.pair_count[0]);
        if (base_rate == 0.0)
            throw UndefinedBaselineError("regression_rows: base rate is zero");
    }

    std::vector<RegressionRow> rows;
    for (const auto& c : catalog.classes()) {
        if (c.k < k_min || c.k > k_max) continue;
        std::uint64_t pairs = census.pair_count[c.class_id];
        if (pairs == 0) continue;
        double rate = static_cast<double>(census.linked_count[c.class_id]) /
                      static_cast<double>(pairs);
        RegressionRow r;
        r.class_id = c.class_id;
        r.response = response == ResponseKind::relative_rate ? rate / base_rate : rate;
        r.cn = c.k;
        r.density = c.density;
        r.components = c.component_count;
        r.weight = pairs;
        rows.push_back(r);
    }
    return rows;
}

namespace {

// Dense OLS for a handful of predictors: A = X'WX, b = X'Wy, Cholesky solve,
// covariance from the inverse.
RegressionResult small_ols(const std::vector<RegressionRow>& rows,
                           const std::vector<std::string>& names, bool weighted) {
    const std::size_t p = names.size();  // includes intercept
    const std::size_t n = rows.size();
    if (n <= p)
        throw Error("ols_fit: need more observations than coefficients (" +
                    std::to_string(n) + " rows, " + std::to_string(p) + " coefficients)");

    auto predictor = [&](const RegressionRow& r, std::size_t j) -> double {
        const std::string& name = names[j];
        if (name == "intercept") return 1.0;
        if (name == "cn") return r.cn;
        if (name == "density") return r.density;
        if (name == "components") return r.components;
        throw Error("ols: unknown predictor " + name);
    };

    std::vector<double> A(p * p, 0.0), b(p, 0.0);
    double w_sum = 0.0, wy_sum = 0.0;
    for (const auto& r : rows) {
        double w = weighted ? static_cast<double>(r.weight) : 1.0;
        std::array<double, 8> x{};
        for (std::size_t j = 0; j < p; ++j) x[j] = predictor(r, j);
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = i; j < p; ++j) A[i * p + j] += w * x[i] * x[j];
            b[i] += w * x[i] * r.response;
        }
        w_sum += w;
        wy_sum += w * r.response;
    }
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < i; ++j) A[i * p + j] = A[j * p + i];

    // Cholesky A = LL'
    std::vector<double> L(p * p, 0.0);
    double max_diag = 0.0;
    for (std::size_t i = 0; i < p; ++i) max_diag = std::max(max_diag, A[i * p + i]);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = A[i * p + j];
            for (std::size_t t = 0; t < j; ++t) s -= L[i * p + t] * L[j * p + t];
            if (i == j) {
                if (s <= max_diag * 1e-12)
                    throw SingularDesignError("ols_fit: rank-deficient design matrix");
                L[i * p + i] = std::sqrt(s);
            } else {
                L[i * p + j] = s / L[j * p + j];
            }
        }
    }
    auto solve = [&](const std::vector<double>& rhs) {
        std::vector<double> z(p, 0.0), out(p, 0.0);
        for (std::size_t i = 0; i < p; ++i) {
            double s = rhs[i];
            for (std::size_t t = 0; t < i; ++t) s -= L[i * p + t] * z[t];
            z[i] = s / L[i * p + i];
        }
        for (std::size_t ii = p; ii-- > 0;) {
            double s = z[ii];
            for (std::size_t t = ii + 1; t < p; ++t) s -= L[t * p + ii] * out[t];
            out[ii] = s / L[ii * p + ii];
        }
        return out;
    };

    std::vector<double> beta = solve(b);

    // (X'WX)^-1 column by column
    std::vector<std::vector<double>> inv(p);
    for (std::size_t j = 0; j < p; ++j) {
        std::vector<double> e(p, 0.0);
        e[j] = 1.0;
        inv[j] = solve(e);
    }

    double rss = 0.0, tss = 0.0, y_scale = 0.0;
    double y_mean = wy_sum / w_sum;
    for (const auto& r : rows) {
        double w = weighted ? static_cast<double>(r.weight) : 1.0;
        double fit = 0.0;
        for (std::size_t j = 0; j < p; ++j) fit += beta[j] * predictor(r, j);
        double res = r.response - fit;
        rss += w * res * res;
        tss += w * (r.response - y_mean) * (r.response - y_mean);
        y_scale += w * r.response * r.response;
    }
    // rounding residue on an exactly constant response is still zero variance
    if (tss <= 1e-24 * std::max(y_scale, 1.0)) tss = 0.0;

    auto dof = static_cast<double>(n - p);
    double sigma2 = rss / dof;
    boost::math::students_t_distribution<double> tdist(dof);

    RegressionResult out;
    out.n_obs = n;
    out.r2 = tss > 0.0 ? 1.0 - rss / tss : 0.0;
    out.adj_r2 = 1.0 - (1.0 - out.r2) * (static_cast<double>(n) - 1.0) / dof;
    for (std::size_t j = 0; j < p; ++j) {
        double se = std::sqrt(sigma2 * inv[j][j]);
        double t = se > 0.0 ? beta[j] / se : 0.0;
        out.coefficients[names[j]] = beta[j];
        out.std_errors[names[j]] = se;
        out.t_values[names[j]] = t;
        out.p_values[names[j]] =
            se > 0.0 ? 2.0 * boost::math::cdf(boost::math::complement(tdist, std::fabs(t)))
                     : 0.0;
    }
    return out;
}

}  // namespace

RegressionResult ols_fit(const std::vector<RegressionRow>& rows, bool weighted) {
    return small_ols(rows, {"intercept", "cn", "density", "components"}, weighted);
}

RegressionResult ols_fit_homophily(const std::vector<RegressionRow>& rows, bool weighted) {
    return small_ols(rows, {"intercept", "cn"}, weighted);
}

std::vector<FeatureCorrelation> correlation_table(const CensusTable& census,
                                                  const GraphClassCatalog& catalog,
                                                  ClassFeature feature,
                                                  unsigned k_min, unsigned k_max,
                                                  ResponseKind response) {
    auto rows = regression_rows(census, catalog, k_min, k_max, response);
    std::vector<FeatureCorrelation> out;
    for (unsigned k = k_min; k <= k_max; ++k) {
        std::vector<double> xs, ys;
        for (const auto& r : rows) {
            if (catalog.cls(r.class_id).k != k) continue;
            xs.push_back(feature == ClassFeature::density ? r.density : r.components);
            ys.push_back(r.response);
        }
        FeatureCorrelation fc;
        fc.k = k;
        fc.n_classes = static_cast<std::uint32_t>(xs.size());
        if (xs.size() >= 3) {
            try {
                fc.r = pearson(xs, ys);
                fc.defined = true;
            } catch (const UndefinedCorrelationError&) {
            }
        } else if (xs.size() == 2) {
            // Two points define a perfect line; report the slope sign.
            double dx = xs[1] - xs[0], dy = ys[1] - ys[0];
            if (dx != 0.0 && dy != 0.0) {
                fc.r = dx * dy > 0.0 ? 1.0 : -1.0;
                fc.defined = true;
            }
        }
        out.push_back(fc);
    }
    return out;
}

InferenceDataset make_inference_dataset(const CensusTable& census,
                                        const GraphClassCatalog& catalog,
                                        unsigned cn_min, unsigned cn_max) {
    if (cn_min < 1 || cn_max < cn_min) throw Error("inference dataset: bad range");
    if (cn_max > census.cap) throw Error("inference dataset: census cap below cn_max");
    InferenceDataset ds;
    ds.cn_min = cn_min;
    ds.cn_max = cn_max;
    for (const auto& c : catalog.classes()) {
        if (c.k < cn_min || c.k > cn_max) continue;
        std::uint64_t pairs = census.pair_count[c.class_id];
        if (pairs == 0) continue;
        InferenceDataset::ClassGroup g;
        g.class_id = c.class_id;
        g.cn = c.k;
        g.density = c.density;
        g.components = c.component_count;
        g.positives = census.linked_count[c.class_id];
        g.negatives = pairs - g.positives;
        ds.groups.push_back(g);
        ds.instances += pairs;
        ds.positives += g.positives;
    }
    return ds;
}

EvalReport evaluate_ranking(std::vector<ScoredGroup> groups, const std::string& name) {
    // Merge identical scores so ties are handled once.
    std::sort(groups.begin(), groups.end(),
              [](const ScoredGroup& a, const ScoredGroup& b) { return a.score > b.score; });
    std::vector<ScoredGroup> merged;
    for (const auto& g : groups) {
        if (g.positives == 0 && g.negatives == 0) continue;
        if (!merged.empty() && merged.back().score == g.score) {
            merged.back().positives += g.positives;
            merged.back().negatives += g.negatives;
        } else {
            merged.push_back(g);
        }
    }
    std::uint64_t pos_total = 0, neg_total = 0;
    for (const auto& g : merged) {
        pos_total += g.positives;
        neg_total += g.negatives;
    }
    if (pos_total == 0 || neg_total == 0)
        throw Error("evaluate_ranking: need at least one positive and one negative");

    EvalReport rep;
    rep.predictor = name;

    // Tie-aware AUROC: descending scores, negatives strictly below get full
    // credit, ties get half.
    double auc = 0.0;
    std::uint64_t neg_seen = 0;  // negatives at strictly higher scores
    for (const auto& g : merged) {
        double below = static_cast<double>(neg_total - neg_seen - g.negatives);
        auc += static_cast<double>(g.positives) *
               (below + 0.5 * static_cast<double>(g.negatives));
        neg_seen += g.negatives;
    }
    rep.auroc = auc / (static_cast<double>(pos_total) * static_cast<double>(neg_total));

    // PR step curve over distinct thresholds, descending.
    std::uint64_t tp = 0, fp = 0;
    double prev_recall = 0.0;
    double aupr = 0.0;
    for (const auto& g : merged) {
        tp += g.positives;
        fp += g.negatives;
        double recall = static_cast<double>(tp) / static_cast<double>(pos_total);
        double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
        rep.pr_curve.emplace_back(recall, precision);
        aupr += (recall - prev_recall) * precision;
        prev_recall = recall;
    }
    rep.aupr = aupr;
    return rep;
}

std::pair<EvalReport, EvalReport> evaluate_predictors(const InferenceDataset& dataset,
                                                      const RegressionResult& diversity_fit) {
    if (dataset.groups.empty()) throw Error("evaluate_predictors: empty dataset");
    auto coeff = [&](const char* name) {
        auto it = diversity_fit.coefficients.find(name);
        return it != diversity_fit.coefficients.end() ? it->second : 0.0;
    };
    double c0 = coeff("intercept"), c1 = coeff("cn"), c2 = coeff("density"),
           c3 = coeff("components");

    std::vector<ScoredGroup> homophily, diversity;
    homophily.reserve(dataset.groups.size());
    diversity.reserve(dataset.groups.size());
    for (const auto& g : dataset.groups) {
        homophily.push_back({static_cast<double>(g.cn), g.positives, g.negatives});
        double score = c0 + c1 * g.cn + c2 * g.density + c3 * g.components;
        diversity.push_back({score, g.positives, g.negatives});
    }
    return {evaluate_ranking(std::move(homophily), "homophily"),
            evaluate_ranking(std::move(diversity), "diversity")};
}

}  // namespace netdiv
