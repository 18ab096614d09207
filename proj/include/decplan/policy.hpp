#pragma once

#include <optional>
#include <random>
#include <vector>

#include "decplan/conversion.hpp"
#include "decplan/model.hpp"
#include "decplan/statistic.hpp"

namespace decplan::planner {

/// One controller state: the action it emits and, except in the last layer,
/// the successor node per individual observation.
struct FscNode {
    int action = 0;
    std::vector<int> edges;
};

/// Layered finite-state controller for one agent. Layer t holds the nodes
/// active at time t; layer 0 has exactly one start node. Following the edge
/// labelled by each received observation yields the deterministic decision
/// rule: the node reached along an observation sequence emits the action.
struct LayeredFsc {
    std::vector<std::vector<FscNode>> layers;

    int horizon() const { return static_cast<int>(layers.size()); }

    /// Node index in layer t reached by an individual observation sequence of
    /// length t.
    int node_at(const beliefs::IndivSeq& seq) const;
    int action_at(const beliefs::IndivSeq& seq) const;
};

/// A joint policy: one controller per agent, optionally extended by an
/// explicit terminal prediction rule (sequence-keyed, e.g. the optimal rule).
struct JointPolicy {
    std::vector<LayeredFsc> fscs;
    std::optional<conversion::PredictionRule> prediction;

    int horizon() const { return fscs.empty() ? 0 : fscs.front().horizon(); }
};

/// Structural checks: layer 0 singleton, actions within the problem's spaces,
/// every edge targeting a node of the next layer, last-layer edges absent.
/// Returns one message per violation.
std::vector<std::string> validate_policy(const JointPolicy& policy, const std::vector<std::vector<int>>& action_sizes,
                                         const std::vector<std::vector<int>>& obs_sizes);

/// Decision rule at time t induced by the controllers.
beliefs::JointDecisionRule fsc_decision_rule(const JointPolicy& policy,
                                             const std::vector<std::vector<int>>& obs_arity, int t,
                                             const std::vector<int>& action_sizes);

/// Uniform-random policy: every node gets a random valid action and edges.
JointPolicy random_policy(const std::vector<std::vector<int>>& action_sizes,
                          const std::vector<std::vector<int>>& obs_sizes, int fsc_width, std::mt19937_64& gen);

} // namespace decplan::planner
