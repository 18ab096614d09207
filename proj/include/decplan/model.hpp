#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace decplan::core {

/// Tolerance used for all stochasticity checks on probability tables.
inline constexpr double kStochasticTol = 1e-9;

/// Dense per-step probability and reward tables.
///
/// dynamics holds P(z', s' | s, a) flattened as
///   dynamics[((s * nJA + ja) * nJZ + jz) * nS + s']
/// and rewards holds R(s, a) flattened as rewards[s * nJA + ja].
struct StepTables {
    std::vector<double> dynamics;
    std::vector<double> rewards;
};

/// One time step of a (possibly time-dependent) Dec-POMDP: the per-agent
/// action spaces used at time t and the per-agent observation spaces of the
/// observation received at time t+1, plus the tables for this step.
/// Time-homogeneous models share one StepTables across all steps.
struct Step {
    std::vector<int> action_sizes;
    std::vector<int> obs_sizes;
    std::shared_ptr<const StepTables> tables;

    int num_joint_actions() const;
    int num_joint_obs() const;
};

/// Finite-horizon Dec-POMDP with time-dependent action/observation spaces.
/// All math is index-based; names are optional metadata for I/O.
class DecPomdpModel {
public:
    DecPomdpModel() = default;
    DecPomdpModel(int num_agents, std::vector<double> initial_belief, std::vector<Step> steps);

    int horizon() const { return static_cast<int>(steps_.size()); }
    int num_agents() const { return num_agents_; }
    int num_states() const { return num_states_; }
    const std::vector<double>& initial_belief() const { return initial_belief_; }

    const Step& step(int t) const { return steps_.at(static_cast<std::size_t>(t)); }
    const std::vector<Step>& steps() const { return steps_; }

    double dynamics(int t, int s, int joint_action, int joint_obs, int next_s) const;
    double reward(int t, int s, int joint_action) const;

    // Optional metadata carried through parsing/serialization.
    std::vector<std::string> state_names;
    std::vector<std::vector<std::string>> action_names; // per agent, time-homogeneous
    std::vector<std::vector<std::string>> obs_names;    // per agent, time-homogeneous

private:
    int num_agents_ = 0;
    int num_states_ = 0;
    std::vector<double> initial_belief_;
    std::vector<Step> steps_;
};

/// Builds a time-homogeneous model: every step views the same tables.
DecPomdpModel make_homogeneous_model(int num_agents, int horizon, std::vector<double> initial_belief,
                                     std::vector<int> action_sizes, std::vector<int> obs_sizes,
                                     std::shared_ptr<const StepTables> tables);

/// Checks initial-belief normalization, row stochasticity of every dynamics
/// row and non-negativity. Returns one message per violation naming the
/// offending (t, s, a) entry; empty report means the model is valid.
std::vector<std::string> validate_model(const DecPomdpModel& model);

enum class JointKind { action, observation };

/// Enumerates the joint action space at time t (0 <= t < h) or the joint
/// observation space at time t (1 <= t <= h) in lexicographic order with
/// agent 0 slowest-varying. Throws std::out_of_range for an invalid t.
std::vector<std::vector<int>> enumerate_joint(const DecPomdpModel& model, int t, JointKind kind);

/// Flat index of a joint tuple under lexicographic order (agent 0 slowest).
int flatten_joint(std::span<const int> indices, std::span<const int> sizes);
std::vector<int> unflatten_joint(int flat, std::span<const int> sizes);
int joint_space_size(std::span<const int> sizes);

} // namespace decplan::core
