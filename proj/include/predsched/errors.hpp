#pragma once

#include <cstdint>

#include "predsched/interval.hpp"
#include "predsched/rational.hpp"

namespace predsched {

/// Prediction-vs-input classification plus the error measure.
/// eta is the profit of an optimal selection from the wrongly predicted
/// requests, eta = OPT(FP u FN); gamma = eta / OPT(input) is kept as an
/// exact rational and flagged undefined when the input has no profit at all.
struct ErrorBreakdown {
    IntervalSet tp;
    IntervalSet fp;
    IntervalSet fn;
    std::int64_t eta = 0;
    std::int64_t opt_input = 0;
    Rational gamma;
    bool gamma_undefined = false;
};

ErrorBreakdown classify(const IntervalSet& input, const IntervalSet& prediction);

/// |FP| + |FN|. Kept only as a comparison measure for experiments; it fails
/// Lipschitz-completeness (see check_properties tests).
std::int64_t hamming_error(const IntervalSet& input, const IntervalSet& prediction);

/// Result of checking the three properties the error measure must have on a
/// concrete (input, prediction) pair:
///   monotone            - single-element prediction fixes never raise eta
///   lipschitz           - eta >= |OPT(input) - OPT(prediction)|
///   lipschitz_complete  - eta <= OPT(FP u FN) (definitionally true; guards
///                         against implementation drift)
struct PropertyReport {
    bool monotone = false;
    bool lipschitz = false;
    bool lipschitz_complete = false;
    std::int64_t eta = 0;

    bool all_hold() const { return monotone && lipschitz && lipschitz_complete; }
};

PropertyReport check_properties(const IntervalSet& input, const IntervalSet& prediction);

}  // namespace predsched
