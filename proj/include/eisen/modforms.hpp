#pragma once

#include <string>
#include <vector>

#include "eisen/qseries.hpp"

namespace eisen {

/// A q-series together with its modular weight. Multiplying adds weights.
struct WeightedSeries {
    QSeries series;
    int weight = 0;
};

WeightedSeries operator*(const WeightedSeries& a, const WeightedSeries& b);
WeightedSeries pow(const WeightedSeries& a, unsigned long e);

/// E_{two_n} = 1 - (4n/B_{2n}) sum_{m>=1} sigma_{2n-1}(m) q^m, weight two_n.
/// two_n must be even and >= 4; the weight-2 series is rejected because its
/// completion carries a non-holomorphic term and it is not used here.
WeightedSeries eisenstein(int two_n, std::size_t order);

enum class DeltaRoute { Product, Formula };

/// The weight-12 cusp form, by the eta product q*prod(1-q^r)^24 or by
/// (E4^3 - E6^2)/1728. The two routes agree identically.
WeightedSeries delta(std::size_t order, DeltaRoute route = DeltaRoute::Product);

struct ThetaFourthPowers {
    QSeries theta2_4;   // q-series, valuation 1
    QSeries theta3_4;   // q-series, unit
    QSeries theta2_2w;  // theta2^2 as a w-series (leading 4w)
    QSeries theta3_2w;  // theta3^2 as a w-series
};

ThetaFourthPowers theta_fourth_powers(std::size_t order);

struct EllipticParams {
    QSeries k2;   // modulus squared, q-series, = theta2^4/theta3^4
    QSeries z2;   // z^2 = theta3^4, q-series
    QSeries k_w;  // modulus as a w-series, branch +4w
    QSeries z_w;  // z as a w-series, branch +1
};

EllipticParams elliptic_params(std::size_t order);

/// Names accepted by named_series (the CLI `expand` registry).
const std::vector<std::string>& named_series_names();
QSeries named_series(const std::string& name, std::size_t order);

/// Optional on-disk cache for the named series ("" disables). Files hold
/// the same JSON schema the CLI emits; contents never change results.
void set_series_cache_dir(const std::string& dir);

}  // namespace eisen
