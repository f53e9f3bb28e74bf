#include "predsched/errors.hpp"

#include <cstdlib>

namespace predsched {

ErrorBreakdown classify(const IntervalSet& input, const IntervalSet& prediction) {
    ErrorBreakdown b;
    b.tp = intersection_of(input, prediction);
    b.fp = difference_of(prediction, input);
    b.fn = difference_of(input, prediction);
    b.eta = opt_eft(union_of(b.fp, b.fn)).profit;
    b.opt_input = opt_eft(input).profit;
    if (b.opt_input == 0) {
        b.gamma_undefined = true;
    } else {
        b.gamma = Rational(b.eta, b.opt_input);
    }
    return b;
}

std::int64_t hamming_error(const IntervalSet& input, const IntervalSet& prediction) {
    return static_cast<std::int64_t>(difference_of(prediction, input).size() +
                                     difference_of(input, prediction).size());
}

PropertyReport check_properties(const IntervalSet& input, const IntervalSet& prediction) {
    const ErrorBreakdown base = classify(input, prediction);

    PropertyReport report;
    report.eta = base.eta;

    // Monotonicity over single-element moves: turning one false negative
    // into a true positive, or dropping one false positive, never raises eta.
    report.monotone = true;
    for (const Interval& x : base.fn) {
        std::vector<Interval> grown(prediction.begin(), prediction.end());
        grown.push_back(x);
        if (classify(input, IntervalSet(std::move(grown))).eta > base.eta) {
            report.monotone = false;
            break;
        }
    }
    if (report.monotone) {
        for (const Interval& y : base.fp) {
            std::vector<Interval> shrunk;
            for (const Interval& p : prediction)
                if (p != y) shrunk.push_back(p);
            if (classify(input, IntervalSet(std::move(shrunk))).eta > base.eta) {
                report.monotone = false;
                break;
            }
        }
    }

    const std::int64_t opt_pred = opt_eft(prediction).profit;
    report.lipschitz = base.eta >= std::abs(base.opt_input - opt_pred);
    report.lipschitz_complete = base.eta <= opt_eft(union_of(base.fp, base.fn)).profit;
    return report;
}

}  // namespace predsched
