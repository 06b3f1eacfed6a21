#include "netdiv/signature.hpp"

#include <boost/math/distributions/normal.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "netdiv/error.hpp"

namespace netdiv {

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                         double confidence) {
    if (trials == 0) throw Error("wilson_interval: trials == 0");
    if (successes > trials) throw Error("wilson_interval: successes > trials");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw Error("wilson_interval: confidence outside (0,1)");
    boost::math::normal_distribution<double> norm;
    double z = boost::math::quantile(norm, 0.5 + confidence / 2.0);
    double nt = static_cast<double>(trials);
    double phat = static_cast<double>(successes) / nt;
    double z2 = z * z;
    double denom = nt + z2;
    double center = (static_cast<double>(successes) + z2 / 2.0) / denom;
    double half = z * std::sqrt(phat * (1.0 - phat) * nt + z2 / 4.0) / denom;
    Interval iv{center - half, center + half};
    if (iv.low < 0.0) iv.low = 0.0;
    if (iv.high > 1.0) iv.high = 1.0;
    return iv;
}

std::vector<double> SignatureVector::relative_rates_or_nan() const {
    std::vector<double> out;
    out.reserve(entries.size());
    for (const auto& e : entries)
        out.push_back(e.defined ? e.relative_rate
                                : std::numeric_limits<double>::quiet_NaN());
    return out;
}

SignatureVector build_signature(const CensusTable& census,
                                const GraphClassCatalog& catalog,
                                unsigned k_min, unsigned k_max) {
    if (k_min < 1 || k_max < k_min) throw Error("build_signature: bad size range");
    if (k_max > census.cap)
        throw Error("build_signature: census cap " + std::to_string(census.cap) +
                    " below requested k_max " + std::to_string(k_max));

    // The size-1 common neighborhood is the first catalog class.
    const GraphClass& base_cls = catalog.cls(0);
    if (base_cls.k != 1) throw Error("catalog does not start with the size-1 class");
    std::uint64_t base_pairs = census.pair_count[0];
    std::uint64_t base_linked = census.linked_count[0];
    if (base_pairs == 0)
        throw UndefinedBaselineError(
            "base rate undefined: no pairs with exactly one common neighbor");

    SignatureVector sig;
    sig.k_min = k_min;
    sig.k_max = k_max;
    sig.base_pairs = base_pairs;
    sig.base_linked = base_linked;
    sig.base_rate = static_cast<double>(base_linked) / static_cast<double>(base_pairs);
    sig.base_ci = wilson_interval(base_linked, base_pairs);

    for (const auto& c : catalog.classes()) {
        if (c.k < k_min || c.k > k_max) continue;
        RateEntry e;
        e.class_id = c.class_id;
        e.k = c.k;
        e.pair_count = census.pair_count[c.class_id];
        e.linked_count = census.linked_count[c.class_id];
        e.defined = e.pair_count > 0;
        if (e.defined) {
            e.rate = static_cast<double>(e.linked_count) / static_cast<double>(e.pair_count);
            Interval ci = wilson_interval(e.linked_count, e.pair_count);
            e.ci_low = ci.low;
            e.ci_high = ci.high;
            e.relative_rate = sig.base_rate > 0.0
                                  ? e.rate / sig.base_rate
                                  : std::numeric_limits<double>::quiet_NaN();
        } else {
            e.rate = e.ci_low = e.ci_high = e.relative_rate =
                std::numeric_limits<double>::quiet_NaN();
        }
        sig.entries.push_back(e);
    }
    return sig;
}

Interval relative_rate_interval(const RateEntry& e, const SignatureVector& sig) {
    Interval out;
    out.low = sig.base_ci.high > 0.0 ? e.ci_low / sig.base_ci.high : 0.0;
    out.high = sig.base_ci.low > 0.0 ? e.ci_high / sig.base_ci.low
                                     : std::numeric_limits<double>::infinity();
    return out;
}

namespace {

void write_cell(std::ostream& out, double v) {
    if (std::isnan(v))
        out << "nan";
    else
        out << v;
}

}  // namespace

void write_signature_csv(const SignatureVector& sig, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write signature csv: " + path);
    out.precision(17);
    out << "# k_min=" << sig.k_min << " k_max=" << sig.k_max
        << " base_rate=" << sig.base_rate << " base_pairs=" << sig.base_pairs
        << " base_linked=" << sig.base_linked << '\n';
    out << "class_id,k,pair_count,linked_count,rate,ci_low,ci_high,relative_rate,defined\n";
    for (const auto& e : sig.entries) {
        out << e.class_id << ',' << unsigned(e.k) << ',';
        out << e.pair_count << ',' << e.linked_count << ',';
        write_cell(out, e.rate);
        out << ',';
        write_cell(out, e.ci_low);
        out << ',';
        write_cell(out, e.ci_high);
        out << ',';
        write_cell(out, e.relative_rate);
        out << ',' << (e.defined ? 1 : 0) << '\n';
    }
}

std::string signature_to_json(const SignatureVector& sig) {
    std::ostringstream os;
    os.precision(17);
    os << "{\"k_min\":" << sig.k_min << ",\"k_max\":" << sig.k_max
       << ",\"base_rate\":" << sig.base_rate << ",\"base_pairs\":" << sig.base_pairs
       << ",\"base_linked\":" << sig.base_linked << ",\"entries\":[";
    for (std::size_t i = 0; i < sig.entries.size(); ++i) {
        const auto& e = sig.entries[i];
        if (i) os << ',';
        os << "{\"class_id\":" << e.class_id << ",\"k\":" << unsigned(e.k)
           << ",\"pair_count\":" << e.pair_count
           << ",\"linked_count\":" << e.linked_count;
        auto field = [&](const char* name, double v) {
            os << ",\"" << name << "\":";
            if (std::isnan(v))
                os << "null";
            else
                os << v;
        };
        field("rate", e.rate);
        field("ci_low", e.ci_low);
        field("ci_high", e.ci_high);
        field("relative_rate", e.relative_rate);
        os << ",\"defined\":" << (e.defined ? "true" : "false") << "}";
    }
    os << "]}";
    return os.str();
}

LoadedSignature load_signature_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open signature csv: " + path);
    LoadedSignature sig;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ss(line.substr(1));
            std::string tok;
            while (ss >> tok) {
                if (tok.rfind("k_min=", 0) == 0) sig.k_min = std::stoul(tok.substr(6));
                if (tok.rfind("k_max=", 0) == 0) sig.k_max = std::stoul(tok.substr(6));
            }
            continue;
        }
        if (line.rfind("class_id", 0) == 0) continue;  // header
        std::istringstream ss(line);
        std::string tok;
        std::vector<std::string> fields;
        while (std::getline(ss, tok, ',')) fields.push_back(tok);
        if (fields.size() != 9)
            throw ParseError("signature csv: expected 9 fields", lineno);
        bool defined = fields[8] == "1";
        sig.relative_rates.push_back(defined
                                         ? std::stod(fields[7])
                                         : std::numeric_limits<double>::quiet_NaN());
    }
    return sig;
}

}  // namespace netdiv
