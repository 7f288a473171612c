#pragma once

#include <span>

namespace xling {

// Sample Pearson correlation. Requires equal lengths >= 2 and nonzero
// variance on both sides.
double pearson_correlation(std::span<const double> a, std::span<const double> b);

// Third standardized moment with population (1/n) moments. Requires
// length >= 2 and nonzero standard deviation.
double skewness(std::span<const double> values);

} // namespace xling
