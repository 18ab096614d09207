#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "decplan/model.hpp"

namespace decplan::beliefs {

/// Probability vector over states.
using Belief = std::vector<double>;

/// Joint observation sequence, stored as the flat joint observation index of
/// each step. Lexicographic order on the key equals lexicographic order over
/// per-agent indices with agent 0 slowest-varying.
using SeqKey = std::vector<std::int32_t>;

/// One agent's observation sequence.
using IndivSeq = std::vector<std::int32_t>;

/// Per-agent view of a joint sequence. obs_arity[k] holds the per-agent
/// observation space sizes of step k+1.
IndivSeq project_sequence(const SeqKey& seq, const std::vector<std::vector<int>>& obs_arity, int agent);

/// The complement view: the joint sequence of all agents except `agent`,
/// flattened per step over the remaining agents' spaces.
SeqKey complement_sequence(const SeqKey& seq, const std::vector<std::vector<int>>& obs_arity, int agent);

/// Joint decision rule at one time step: maps a joint observation sequence to
/// a flat joint action index; nullopt means the rule is undefined there.
using JointDecisionRule = std::function<std::optional<int>(const SeqKey&)>;

/// Plan-time sufficient statistic sigma_t: sparse map from joint observation
/// sequence to the unnormalized state distribution sigma_t(s, seq).
/// Zero-mass sequences are never stored; total mass stays 1.
class PlanTimeStatistic {
public:
    PlanTimeStatistic() = default;
    PlanTimeStatistic(int num_agents, std::vector<std::vector<int>> obs_arity,
                      std::map<SeqKey, std::vector<double>> entries);

    /// sigma_0 for a model: the single empty sequence carrying b0.
    static PlanTimeStatistic initial(const core::DecPomdpModel& model);

    int time() const { return static_cast<int>(obs_arity_.size()); }
    int num_agents() const { return num_agents_; }
    int num_states() const;
    const std::vector<std::vector<int>>& obs_arity() const { return obs_arity_; }
    const std::map<SeqKey, std::vector<double>>& entries() const { return entries_; }

    double total_mass() const;
    IndivSeq project(const SeqKey& seq, int agent) const { return project_sequence(seq, obs_arity_, agent); }

private:
    int num_agents_ = 0;
    std::vector<std::vector<int>> obs_arity_;
    std::map<SeqKey, std::vector<double>> entries_;
};

struct Filtered {
    Belief posterior;  // empty when likelihood is zero
    double likelihood = 0.0;
};

/// One Bayes step: posterior(s') ∝ sum_s P(z, s' | s, a) b(s) at time t.
/// A zero likelihood flags an impossible (a, z) pair; the posterior is then
/// left empty and the caller must skip the branch.
Filtered belief_update(const core::DecPomdpModel& model, int t, const Belief& belief, int joint_action,
                       int joint_obs);

/// Statistic update: sigma_{t+1}(s', (seq, z)) = sum_s P(z, s' | s, delta(seq)) sigma_t(s, seq).
/// Mass is preserved; extensions with exactly zero mass are dropped.
/// Throws std::invalid_argument if delta is undefined on a stored sequence.
PlanTimeStatistic statistic_update(const core::DecPomdpModel& model, const PlanTimeStatistic& sigma,
                                   const JointDecisionRule& delta);

struct Conditional {
    std::optional<Belief> belief;  // nullopt when the marginal is zero
    double marginal = 0.0;
};

/// Conditional state distribution sigma_t(. | seq) and marginal sigma_t(seq).
Conditional condition(const PlanTimeStatistic& sigma, const SeqKey& seq);

/// Expected immediate reward of applying decision rule delta at sigma's time:
/// sum over stored sequences of sigma(s, seq) R_t(s, delta(seq)).
double expected_stage_reward(const core::DecPomdpModel& model, const PlanTimeStatistic& sigma,
                             const JointDecisionRule& delta);

} // namespace decplan::beliefs
