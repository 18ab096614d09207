#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "decplan/policy.hpp"

namespace decplan::planner {

/// Thrown when an exact computation would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// How the value at the final statistic is computed.
enum class FinalReward {
    none,          // plain Dec-POMDP: stage rewards only
    centralized,   // rho_hat(sigma_h) over gamma
    decentralized, // prediction reward under a joint prediction rule (implicit conversion)
    true_convex,   // f_hat(sigma_h) for reporting
};

/// A planning/evaluation target: the source model plus the final-reward
/// closure. The decentralized kind is the implicit form of the converted
/// model: controllers get one extra layer of prediction actions (one per
/// tangent hyperplane) and the joint prediction-reward table is never
/// materialized.
struct PlanningProblem {
    const core::DecPomdpModel* model = nullptr;
    const rewards::AlphaSet* gamma = nullptr;
    const rewards::ConvexReward* truth = nullptr;
    FinalReward final_kind = FinalReward::none;

    static PlanningProblem plain(const core::DecPomdpModel& m);
    static PlanningProblem dec_rho(const core::DecPomdpModel& m, const rewards::AlphaSet& g);
    static PlanningProblem converted(const core::DecPomdpModel& m, const rewards::AlphaSet& g);
    static PlanningProblem true_reward(const core::DecPomdpModel& m, const rewards::ConvexReward& f);

    /// Number of controller layers: h, plus one prediction layer for the
    /// decentralized kind.
    int fsc_horizon() const;
    std::vector<std::vector<int>> fsc_action_sizes() const; // per layer, per agent
    std::vector<std::vector<int>> fsc_obs_sizes() const;    // edges out of each non-final layer
};

struct PlannerParams {
    int fsc_width = 2;
    int improvement_iterations = 20;
    double restart_probability = 0.1;
    std::uint64_t seed = 0;
    // exact evaluation refuses above this many (sequence x state) entries
    long long exact_eval_budget = 10'000'000;
    // occupancy tables larger than this fall back to sampled rollouts
    long long occupancy_budget = 100'000;
    int occupancy_samples = 2000;
};

struct EvalOptions {
    /// Replace the policy's own terminal rule with the optimal joint
    /// prediction rule (decentralized problems only).
    bool use_optimal_prediction = false;
};

struct EvalResult {
    double value = 0.0;
    beliefs::PlanTimeStatistic sigma_h;  // the final statistic under the policy
};

/// Exact policy evaluation: rolls the plan-time statistic forward under the
/// controller-induced decision rules, accumulating expected stage rewards,
/// then adds the problem's final term. Throws BudgetExceeded when the
/// statistic grows past params-configured limits.
EvalResult evaluate_exact(const PlanningProblem& problem, const JointPolicy& policy,
                          const EvalOptions& options = {}, long long budget = 10'000'000);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    int samples = 0;
};

/// Monte Carlo policy evaluation from rollouts. The final term per
/// trajectory uses Bayesian filtering of the sampled history (centralized and
/// true-convex kinds) or the policy's own prediction rule (decentralized).
McEstimate evaluate_mc(const PlanningProblem& problem, const JointPolicy& policy, int num_samples,
                       std::mt19937_64& gen);

struct Trajectory {
    std::vector<int> states;        // length h+1
    std::vector<int> joint_actions; // flat joint action per step
    beliefs::SeqKey joint_obs;      // flat joint observation per step
};

/// Forward-simulates the model under the controllers. The policy may have
/// more layers than the model has steps (the extra prediction layer does not
/// influence dynamics).
Trajectory rollout(const core::DecPomdpModel& model, const JointPolicy& policy, std::mt19937_64& gen);

/// Filtered belief at the end of a trajectory's (action, observation) history.
beliefs::Belief filter_history(const core::DecPomdpModel& model, const std::vector<int>& joint_actions,
                               const beliefs::SeqKey& joint_obs);

/// The prediction rule realized by the policy itself on sigma_h's support:
/// the explicit rule when attached, otherwise the controllers' final layer.
conversion::PredictionRule policy_prediction_rule(const PlanningProblem& problem, const JointPolicy& policy,
                                                  const beliefs::PlanTimeStatistic& sigma_h);

/// One pass of policy-graph improvement on a decentralized problem: computes
/// node occupancies forward, then rebuilds each node backward in time,
/// picking the action and edges that maximize expected value-to-go while
/// marginalizing over the other agents' controller states. Each node is
/// instead randomized with probability restart_probability. Ties keep the
/// incumbent node unchanged.
JointPolicy improve_once(const PlanningProblem& problem, const JointPolicy& policy, const PlannerParams& params,
                         std::mt19937_64& gen);

struct PlanResult {
    JointPolicy policy;  // best candidate seen, optimal prediction rule attached
    double value = 0.0;
    std::vector<double> candidate_values;  // evaluated value per iteration
};

/// Random initial policy plus improvement_iterations improvement passes;
/// returns the best-valued candidate (exact evaluation with the optimal
/// prediction rule). Deterministic given params.seed.
PlanResult plan(const PlanningProblem& problem, const PlannerParams& params);

struct BruteForceResult {
    JointPolicy policy;  // full observation-history tree controllers
    double value = 0.0;
};

/// Exhaustive optimum over deterministic history-based joint policies. For
/// decentralized problems the final step is resolved analytically with the
/// optimal prediction rule, so only the first h decision rules are
/// enumerated. Refuses instances whose full policy count exceeds the budget.
BruteForceResult brute_force(const PlanningProblem& problem, long long budget = 10'000'000);

} // namespace decplan::planner
