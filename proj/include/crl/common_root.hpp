#pragma once

#include <optional>

#include "crl/bivar.hpp"
#include "crl/intpoly.hpp"
#include "crl/poly.hpp"

namespace crl {

// Pipeline stage that settled a d=1 decision.
enum class DecisionStage { Degenerate, FilterAccept, Mod31Reject, Mod62Reject, Exact };

// Exact decision: do p and q share a complex root? Pipeline:
//   1. fast accept if both vanish at the same point of {+1, -1},
//   2. modular resultant fast reject,
//   3. exact gcd fallback.
// `use_filter` disables step 1 for the filter-soundness check;
// `prime_budget` caps step 2.
bool common_root_exists(const BernoulliPolyUni& p, const BernoulliPolyUni& q,
                        bool use_filter = true, int prime_budget = 2,
                        DecisionStage* stage = nullptr);

enum class Verdict2d { Yes, No, Undecided };

struct CommonRoot2dResult {
    Verdict2d verdict = Verdict2d::Undecided;
    std::optional<ComplexPoint> witness;  // set on Yes
};

// d=2 detection for three polynomials: eliminate y against P1 to get
// R12 = Res_y(P1,P2) and R13 = Res_y(P1,P3); deg gcd(R12, R13) = 0 certifies
// No; otherwise candidates (roots of the gcd) are lifted numerically through
// the y-fibers of P1 and verified against all three polynomials. Ambiguous
// lifts stay Undecided, never folded into Yes/No.
CommonRoot2dResult common_root_exists_2d(const BernoulliPolyMulti& p1,
                                         const BernoulliPolyMulti& p2,
                                         const BernoulliPolyMulti& p3,
                                         double tol = 1e-8,
                                         int prime_budget = 2);

}  // namespace crl
