#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netdiv/catalog.hpp"
#include "netdiv/census.hpp"

namespace netdiv {

// Wilson score interval for a binomial proportion.
struct Interval {
    double low = 0.0;
    double high = 0.0;
};
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                         double confidence = 0.95);

struct RateEntry {
    std::uint32_t class_id = 0;
    std::uint8_t k = 0;
    std::uint64_t pair_count = 0;
    std::uint64_t linked_count = 0;
    double rate = 0.0;           // linked / pairs
    double ci_low = 0.0;         // Wilson bounds on rate
    double ci_high = 0.0;
    double relative_rate = 0.0;  // rate / base_rate
    bool defined = false;        // pair_count > 0
};

// Relative link existence rates over the catalog display order for sizes
// k_min..k_max, normalized by the single-common-neighbor base rate from the
// same census.
struct SignatureVector {
    unsigned k_min = 2;
    unsigned k_max = 4;
    double base_rate = 0.0;
    Interval base_ci;
    std::uint64_t base_pairs = 0;
    std::uint64_t base_linked = 0;
    std::vector<RateEntry> entries;

    // Entry values with undefined cells as NaN, for correlation input.
    std::vector<double> relative_rates_or_nan() const;
};

SignatureVector build_signature(const CensusTable& census,
                                const GraphClassCatalog& catalog,
                                unsigned k_min = 2, unsigned k_max = 4);

// Relative-rate interval propagated by interval ratio:
// [rate.low / base.high, rate.high / base.low].
Interval relative_rate_interval(const RateEntry& e, const SignatureVector& sig);

void write_signature_csv(const SignatureVector& sig, const std::string& path);
std::string signature_to_json(const SignatureVector& sig);

// Reads relative_rate column (+ defined flags) from a signature CSV.
struct LoadedSignature {
    unsigned k_min = 0, k_max = 0;
    std::vector<double> relative_rates;  // NaN where undefined
};
LoadedSignature load_signature_csv(const std::string& path);

}  // namespace netdiv
