#pragma once

#include <string>

namespace storyeval {

// Transformation functions mapping lower-is-better metrics on [0, inf)
// into (0, 1] for aggregation. f1 is the adopted transform; f2..f4 are the
// rejected/alternate candidates kept for the selection check.
double f1(double x); // exp(-x/200)
double f2(double x); // 1/(x+1)
double f3(double x); // 1/sqrt(x+1)
double f4(double x); // -x/400 + 1, domain [0, 400]

enum class TransformCandidate { F1, F2, F3, F4 };

TransformCandidate candidate_from_name(const std::string& name); // "f1".."f4"
const char* candidate_name(TransformCandidate c);

/// Outcome of the six selection criteria for one candidate. Codomain,
/// monotonicity and rate are checked numerically on a [0,400] grid with
/// step 0.5; continuity and differentiability hold analytically for every
/// candidate and are flagged as such.
struct DesiderataReport {
    TransformCandidate candidate;
    bool domain_ok = false;            // (i)  defined on the whole grid
    bool codomain_ok = false;          // (ii) 0 <= f(x) <= 1
    bool strictly_decreasing = false;  // (iii)
    bool uniform_rate = false;         // (iv) max|f'| / min|f'| <= 10
    bool continuous = false;           // (v)  analytic
    bool differentiable = false;       // (vi) analytic
    double derivative_ratio = 0.0;     // the (iv) statistic
    bool all_pass() const {
        return domain_ok && codomain_ok && strictly_decreasing &&
               uniform_rate && continuous && differentiable;
    }
};

DesiderataReport check_desiderata(TransformCandidate c);

/// Raw six-metric vector for one model: FID (cn), Dice (sr), mIoU (la),
/// Hausdorff (bdp), Modified Hausdorff (mc), ASD (ads).
struct RawMetricVector {
    double cn = 0.0;
    double sr = 0.0;
    double la = 0.0;
    double bdp = 0.0;
    double mc = 0.0;
    double ads = 0.0;
};

/// Throws NonFiniteInput / NegativeInput / DomainError when the vector
/// violates its invariants (sr, la must lie in [0,1]; the rest >= 0).
void validate(const RawMetricVector& v);

struct OverallScore {
    double cn_t = 0.0;  // f1(cn)
    double bdp_t = 0.0; // f1(bdp)
    double mc_t = 0.0;  // f1(mc)
    double ads_t = 0.0; // f1(ads)
    double sr = 0.0;    // retained
    double la = 0.0;    // retained
    double overall = 0.0;
};

/// overall = f1(cn) + f1(bdp) + f1(mc) + f1(ads) + sr + la, summed in
/// exactly that order.
OverallScore aggregate_overall(const RawMetricVector& v);

} // namespace storyeval
