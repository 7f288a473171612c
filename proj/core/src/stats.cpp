#include "xling/stats.hpp"

#include <cmath>
#include <cstddef>

#include "xling/errors.hpp"

namespace xling {

double pearson_correlation(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw numeric_error("pearson: sequences have different lengths");
    const std::size_t n = a.size();
    if (n < 2) throw numeric_error("pearson: need at least two observations");

    double mean_a = 0.0, mean_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_a += a[i];
        mean_b += b[i];
    }
    mean_a /= static_cast<double>(n);
    mean_b /= static_cast<double>(n);

    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double da = a[i] - mean_a;
        const double db = b[i] - mean_b;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    if (saa == 0.0 || sbb == 0.0)
        throw numeric_error("pearson: zero variance makes the correlation undefined");
    return sab / std::sqrt(saa * sbb);
}

double skewness(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) throw numeric_error("skewness: need at least two observations");

    double mean = 0.0;
    for (const double v : values) mean += v;
    mean /= static_cast<double>(n);

    double m2 = 0.0, m3 = 0.0;
    for (const double v : values) {
        const double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= static_cast<double>(n);
    m3 /= static_cast<double>(n);

    const double sigma = std::sqrt(m2);
    if (sigma == 0.0) throw numeric_error("skewness: zero standard deviation");
    return m3 / (sigma * sigma * sigma);
}

} // namespace xling
