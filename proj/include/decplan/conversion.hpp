#pragma once

#include <map>
#include <vector>

#include "decplan/model.hpp"
#include "decplan/rewards.hpp"
#include "decplan/statistic.hpp"

namespace decplan::conversion {

/// The standard Dec-POMDP obtained from a pair (M, gamma): horizon h+1, one
/// individual prediction action per tangent hyperplane at step h, a single
/// null observation per agent at step h+1, identity dynamics on the added
/// step, and the averaged prediction reward
///   R_h(s, a) = (1/n) sum_i alpha_{a_i}(s).
/// Steps 0..h-1 share the source model's tables.
struct ConvertedModel {
    core::DecPomdpModel model;
    rewards::AlphaSet gamma;
    std::vector<int> action_to_alpha;  // prediction action index -> alpha index
};

/// Applies the conversion. Throws std::invalid_argument on an empty gamma.
ConvertedModel convert_to_standard(const core::DecPomdpModel& source, const rewards::AlphaSet& gamma);

/// Per-agent map from an individual final observation sequence to a
/// prediction action, defined on exactly the positive-marginal sequences.
struct PredictionRule {
    std::vector<std::map<beliefs::IndivSeq, int>> per_agent;
};

/// The optimal joint prediction rule: for each agent and each positive-mass
/// individual sequence, the prediction action maximizing the expected
/// individual prediction reward under sigma_h, ties broken toward the lowest
/// action index.
PredictionRule optimal_prediction_rule(const beliefs::PlanTimeStatistic& sigma_h,
                                       const ConvertedModel& converted);

/// Expected decentralized prediction reward of a joint prediction rule:
///   sum_{seq,s} sigma(s, seq) (1/n) sum_i alpha_{phi_i(seq_i)}(s).
/// Throws std::invalid_argument if phi is undefined on a stored sequence.
double expected_decentralized_reward(const beliefs::PlanTimeStatistic& sigma_h,
                                     const ConvertedModel& converted, const PredictionRule& phi);

/// Loss due to decentralization at sigma_h: rho_hat(sigma_h) minus the
/// expected decentralized prediction reward under the optimal rule. Always
/// >= 0 up to floating-point noise; values within -1e-9 of zero are clamped.
double decentralization_gap(const beliefs::PlanTimeStatistic& sigma_h, const rewards::AlphaSet& gamma);

} // namespace decplan::conversion
