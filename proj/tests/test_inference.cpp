#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <Eigen/Dense>

#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "netdiv/error.hpp"
#include "netdiv/inference.hpp"

using namespace netdiv;

namespace {

Graph k4_minus_edge() {
    return testutil::make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

// Independent least-squares route: Jacobi SVD pseudoinverse.
Eigen::VectorXd svd_solve(const std::vector<RegressionRow>& rows) {
    Eigen::MatrixXd X(rows.size(), 4);
    Eigen::VectorXd y(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        X(static_cast<Eigen::Index>(i), 0) = 1.0;
        X(static_cast<Eigen::Index>(i), 1) = rows[i].cn;
        X(static_cast<Eigen::Index>(i), 2) = rows[i].density;
        X(static_cast<Eigen::Index>(i), 3) = rows[i].components;
        y(static_cast<Eigen::Index>(i)) = rows[i].response;
    }
    return X.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(y);
}

RegressionRow row(double response, double cn, double density, double components) {
    RegressionRow r;
    r.response = response;
    r.cn = cn;
    r.density = density;
    r.components = components;
    return r;
}

std::vector<ScoredGroup> to_groups(const std::vector<testutil::Instance>& data) {
    std::vector<ScoredGroup> out;
    for (const auto& p : data)
        out.push_back({p.score, p.label ? 1ull : 0ull, p.label ? 0ull : 1ull});
    return out;
}

}  // namespace

TEST_CASE("regression rows from the K4-minus-edge census") {
    auto catalog = GraphClassCatalog::build(6);
    CensusTable t = run_census(k4_minus_edge(), catalog, CensusMode::exact());
    auto rows = regression_rows(t, catalog, 2, 2);
    REQUIRE(rows.size() == 2);
    // display order: disconnected (density 0, comps 2) then connected
    CHECK(rows[0].cn == 2);
    CHECK(rows[0].density == 0.0);
    CHECK(rows[0].components == 2);
    CHECK(rows[0].response == doctest::Approx(1.0));
    CHECK(rows[1].density == 1.0);
    CHECK(rows[1].components == 1);
    CHECK(rows[1].response == doctest::Approx(0.0));
}

TEST_CASE("full coverage over sizes 2..6 yields 207 rows") {
    auto catalog = GraphClassCatalog::build(6);
    CensusTable t;
    t.pair_count.assign(catalog.size(), 10);
    t.linked_count.assign(catalog.size(), 1);
    t.bag_of_cn.assign(7, 10);
    t.cap = 6;
    t.catalog_version = catalog.version();
    auto rows = regression_rows(t, catalog, 2, 6);
    CHECK(rows.size() == 2 + 4 + 11 + 34 + 156);
    auto rows22 = regression_rows(t, catalog, 2, 2);
    CHECK(rows22.size() == 2);
    CHECK_THROWS_AS(regression_rows(t, catalog, 3, 2), Error);
}

TEST_CASE("ols recovers exact linear data") {
    std::vector<RegressionRow> rows;
    for (int i = 0; i < 10; ++i) {
        double cn = 2 + i % 5, density = 0.1 * i, comps = 1 + i % 3;
        rows.push_back(row(2.0 + 3.0 * cn, cn, density, comps));
    }
    auto fit = ols_fit(rows);
    CHECK(fit.coefficients.at("intercept") == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(fit.coefficients.at("cn") == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(fit.coefficients.at("density") == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(fit.coefficients.at("components") == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(fit.adj_r2 == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("constant response: zero slopes and zero r2") {
    std::vector<RegressionRow> rows;
    for (int i = 0; i < 8; ++i)
        rows.push_back(row(0.7, 2 + i % 4, 0.2 * (i % 5), 1 + i % 3));
    auto fit = ols_fit(rows);
    CHECK(fit.coefficients.at("cn") == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(fit.coefficients.at("density") == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(fit.coefficients.at("components") == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(fit.r2 == 0.0);
}

TEST_CASE("hand-built rows match the svd pseudoinverse oracle") {
    std::vector<RegressionRow> rows = {
        row(0.5, 2, 0.0, 2), row(0.9, 2, 1.0, 1), row(1.4, 3, 0.5, 2),
        row(2.0, 4, 0.25, 3), row(1.1, 3, 1.0, 1),
    };
    auto fit = ols_fit(rows);
    auto oracle = svd_solve(rows);
    CHECK(fit.coefficients.at("intercept") == doctest::Approx(oracle(0)).epsilon(1e-9));
    CHECK(fit.coefficients.at("cn") == doctest::Approx(oracle(1)).epsilon(1e-9));
    CHECK(fit.coefficients.at("density") == doctest::Approx(oracle(2)).epsilon(1e-9));
    CHECK(fit.coefficients.at("components") == doctest::Approx(oracle(3)).epsilon(1e-9));
}

TEST_CASE("standard errors, t, p, and adj r2 against a frozen reference") {
    // statsmodels OLS on these 8 rows
    std::vector<RegressionRow> rows = {
        row(0.5, 2, 0.0, 2),  row(0.9, 2, 1.0, 1), row(1.4, 3, 0.5, 2),
        row(2.0, 4, 0.25, 3), row(1.1, 3, 1.0, 1), row(2.5, 5, 0.6, 2),
        row(0.7, 2, 0.3, 1),  row(3.0, 6, 0.9, 1),
    };
    auto fit = ols_fit(rows);
    CHECK(fit.coefficients.at("intercept") ==
          doctest::Approx(-0.7518614167285764).epsilon(1e-10));
    CHECK(fit.coefficients.at("cn") == doctest::Approx(0.5613577670074643).epsilon(1e-10));
    CHECK(fit.coefficients.at("density") ==
          doctest::Approx(0.25992618011580043).epsilon(1e-10));
    CHECK(fit.coefficients.at("components") ==
          doctest::Approx(0.1365821157769366).epsilon(1e-10));
    CHECK(fit.std_errors.at("intercept") ==
          doctest::Approx(0.2785811964847906).epsilon(1e-9));
    CHECK(fit.std_errors.at("cn") == doctest::Approx(0.04838713225589585).epsilon(1e-9));
    CHECK(fit.std_errors.at("density") ==
          doctest::Approx(0.2493532816100073).epsilon(1e-9));
    CHECK(fit.std_errors.at("components") ==
          doctest::Approx(0.1215807809639267).epsilon(1e-9));
    CHECK(fit.t_values.at("cn") == doctest::Approx(11.601385344324974).epsilon(1e-9));
    CHECK(fit.p_values.at("intercept") ==
          doctest::Approx(5.4156280762611954e-02).epsilon(1e-9));
    CHECK(fit.p_values.at("cn") == doctest::Approx(3.1542834740103646e-04).epsilon(1e-9));
    CHECK(fit.p_values.at("density") ==
          doctest::Approx(3.5608069285559263e-01).epsilon(1e-9));
    CHECK(fit.adj_r2 == doctest::Approx(0.9662297048851916).epsilon(1e-10));
    CHECK(fit.n_obs == 8);
}

TEST_CASE("residuals are orthogonal to every predictor column") {
    Rng rng(606);
    std::vector<RegressionRow> rows;
    for (int i = 0; i < 40; ++i)
        rows.push_back(row(rng.uniform() * 3, 2 + rng.uniform_int(5), rng.uniform(),
                           1 + rng.uniform_int(4)));
    auto fit = ols_fit(rows);
    double dot1 = 0, dot_cn = 0, dot_d = 0, dot_c = 0, scale = 0;
    for (const auto& r : rows) {
        double res = r.response - (fit.coefficients.at("intercept") +
                                   fit.coefficients.at("cn") * r.cn +
                                   fit.coefficients.at("density") * r.density +
                                   fit.coefficients.at("components") * r.components);
        dot1 += res;
        dot_cn += res * r.cn;
        dot_d += res * r.density;
        dot_c += res * r.components;
        scale += std::fabs(r.response);
    }
    CHECK(std::fabs(dot1) <= 1e-8 * scale);
    CHECK(std::fabs(dot_cn) <= 1e-8 * scale * 6);
    CHECK(std::fabs(dot_d) <= 1e-8 * scale);
    CHECK(std::fabs(dot_c) <= 1e-8 * scale * 4);
}

TEST_CASE("rank-deficient design is an explicit error") {
    std::vector<RegressionRow> rows;
    for (int i = 0; i < 10; ++i)
        rows.push_back(row(1.0 * i, 2.0, 0.5, 1 + i % 3));  // cn constant = collinear
    CHECK_THROWS_AS(ols_fit(rows), SingularDesignError);
    std::vector<RegressionRow> tiny = {row(1, 2, 0.1, 1), row(2, 3, 0.2, 2)};
    CHECK_THROWS_AS(ols_fit(tiny), Error);
}

TEST_CASE("correlation table: two points give the slope sign") {
    auto catalog = GraphClassCatalog::build(6);
    CensusTable t = run_census(k4_minus_edge(), catalog, CensusMode::exact());
    auto density_table = correlation_table(t, catalog, ClassFeature::density, 2, 2);
    REQUIRE(density_table.size() == 1);
    CHECK(density_table[0].defined);
    // rate drops as density rises across the two k=2 classes
    CHECK(density_table[0].r == -1.0);
    auto comp_table = correlation_table(t, catalog, ClassFeature::components, 2, 2);
    CHECK(comp_table[0].r == 1.0);
}

TEST_CASE("correlation table: zero variance flagged, positive trend detected") {
    auto catalog = GraphClassCatalog::build(6);
    CensusTable t;
    t.pair_count.assign(catalog.size(), 0);
    t.linked_count.assign(catalog.size(), 0);
    t.bag_of_cn.assign(7, 0);
    t.cap = 6;
    t.catalog_version = catalog.version();
    t.pair_count[0] = 1000;
    t.linked_count[0] = 100;
    // k=4: rate increasing in density
    for (auto id : catalog.class_ids_of_size(4)) {
        t.pair_count[id] = 1000;
        t.linked_count[id] =
            static_cast<std::uint64_t>(100 + 800 * catalog.cls(id).density);
    }
    auto table = correlation_table(t, catalog, ClassFeature::density, 4, 4);
    REQUIRE(table.size() == 1);
    CHECK(table[0].defined);
    CHECK(table[0].r > 0.99);

    // constant rate -> zero variance -> undefined
    for (auto id : catalog.class_ids_of_size(4)) t.linked_count[id] = 100;
    auto flat = correlation_table(t, catalog, ClassFeature::density, 4, 4);
    CHECK_FALSE(flat[0].defined);
}

TEST_CASE("auroc and aupr: spec examples") {
    auto perfect = evaluate_ranking(to_groups({{1, false}, {2, false}, {3, true}, {4, true}}),
                                    "x");
    CHECK(perfect.auroc == doctest::Approx(1.0));
    CHECK(perfect.aupr == doctest::Approx(1.0));

    auto ties = evaluate_ranking(to_groups({{5, true}, {5, false}, {5, false}, {5, false}}),
                                 "x");
    CHECK(ties.auroc == doctest::Approx(0.5));
    CHECK(ties.aupr == doctest::Approx(0.25));  // positive fraction

    auto mixed = evaluate_ranking(
        to_groups({{0.9, true}, {0.8, false}, {0.7, true}, {0.6, false}}), "x");
    CHECK(mixed.auroc == doctest::Approx(0.75));
    CHECK(mixed.aupr == doctest::Approx(testutil::oracle_aupr(
        {{0.9, true}, {0.8, false}, {0.7, true}, {0.6, false}})));
}

TEST_CASE("metrics match the threshold-sweep oracle on random datasets") {
    Rng rng(321);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 2 + rng.uniform_int(19);
        std::vector<testutil::Instance> data;
        bool has_pos = false, has_neg = false;
        for (std::size_t i = 0; i < n; ++i) {
            double score = static_cast<double>(rng.uniform_int(8));  // force ties
            bool label = rng.uniform() < 0.4;
            (label ? has_pos : has_neg) = true;
            data.push_back({score, label});
        }
        if (!has_pos || !has_neg) continue;
        auto rep = evaluate_ranking(to_groups(data), "x");
        CHECK(std::fabs(rep.auroc - testutil::oracle_auroc(data)) <= 1e-12);
        CHECK(std::fabs(rep.aupr - testutil::oracle_aupr(data)) <= 1e-12);
        for (std::size_t i = 1; i < rep.pr_curve.size(); ++i)
            CHECK(rep.pr_curve[i].first >= rep.pr_curve[i - 1].first);

        // monotone transform invariance and complement identity
        std::vector<testutil::Instance> cubed = data;
        for (auto& p : cubed) p.score = p.score * p.score * p.score + 2.0;
        auto rep2 = evaluate_ranking(to_groups(cubed), "x");
        CHECK(rep2.auroc == doctest::Approx(rep.auroc).epsilon(1e-12));

        bool tie_free = [&] {
            std::set<double> s;
            for (auto& p : data)
                if (!s.insert(p.score).second) return false;
            return true;
        }();
        if (tie_free) {
            std::vector<testutil::Instance> neg = data;
            for (auto& p : neg) p.score = -p.score;
            auto rep3 = evaluate_ranking(to_groups(neg), "x");
            CHECK(rep.auroc + rep3.auroc == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("degenerate datasets are rejected") {
    CHECK_THROWS_AS(evaluate_ranking(to_groups({{1, true}, {2, true}}), "x"), Error);
    CHECK_THROWS_AS(evaluate_ranking({}, "x"), Error);
}

TEST_CASE("inference dataset from a census plus predictor evaluation") {
    auto catalog = GraphClassCatalog::build(6);
    Graph g = testutil::random_small_graph(61, 120);
    CensusTable t = run_census(g, catalog, CensusMode::exact());
    auto ds = make_inference_dataset(t, catalog, 2, 6);

    // prevalence check: positives equal the census linked counts in range
    std::uint64_t expect_pos = 0, expect_total = 0;
    for (const auto& c : catalog.classes()) {
        if (c.k < 2 || c.k > 6) continue;
        expect_pos += t.linked_count[c.class_id];
        expect_total += t.pair_count[c.class_id];
    }
    CHECK(ds.positives == expect_pos);
    CHECK(ds.instances == expect_total);
    std::uint64_t group_sum = 0;
    for (const auto& grp : ds.groups) group_sum += grp.positives + grp.negatives;
    CHECK(group_sum == ds.instances);

    auto rows = regression_rows(t, catalog, 2, 6);
    auto fit = ols_fit(rows);
    auto [homophily, diversity] = evaluate_predictors(ds, fit);
    CHECK(homophily.predictor == "homophily");
    CHECK(diversity.predictor == "diversity");
    CHECK(homophily.auroc >= 0.0);
    CHECK(homophily.auroc <= 1.0);
    CHECK(diversity.auroc >= 0.0);
    CHECK(diversity.auroc <= 1.0);

    // homophily scores are the cn sizes: oracle via expanded instances
    std::vector<testutil::Instance> expanded;
    for (const auto& grp : ds.groups) {
        for (std::uint64_t i = 0; i < grp.positives; ++i)
            expanded.push_back({static_cast<double>(grp.cn), true});
        for (std::uint64_t i = 0; i < grp.negatives; ++i)
            expanded.push_back({static_cast<double>(grp.cn), false});
    }
    CHECK(homophily.auroc == doctest::Approx(testutil::oracle_auroc(expanded)).epsilon(1e-12));
    CHECK(homophily.aupr == doctest::Approx(testutil::oracle_aupr(expanded)).epsilon(1e-12));
}
