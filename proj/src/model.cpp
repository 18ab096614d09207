#include "decplan/model.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace decplan::core {

int joint_space_size(std::span<const int> sizes) {
    int n = 1;
    for (int s : sizes) n *= s;
    return n;
}

int Step::num_joint_actions() const {
    return joint_space_size(action_sizes);
}

int Step::num_joint_obs() const {
    return joint_space_size(obs_sizes);
}

DecPomdpModel::DecPomdpModel(int num_agents, std::vector<double> initial_belief, std::vector<Step> steps)
    : num_agents_(num_agents),
      num_states_(static_cast<int>(initial_belief.size())),
      initial_belief_(std::move(initial_belief)),
      steps_(std::move(steps)) {
    if (num_agents_ < 1) throw std::invalid_argument("model requires at least one agent");
    if (num_states_ < 1) throw std::invalid_argument("model requires at least one state");
    if (steps_.empty()) throw std::invalid_argument("model requires horizon >= 1");
    for (const Step& st : steps_) {
        if (static_cast<int>(st.action_sizes.size()) != num_agents_ ||
            static_cast<int>(st.obs_sizes.size()) != num_agents_) {
            throw std::invalid_argument("per-agent space list arity does not match agent count");
        }
        if (!st.tables) throw std::invalid_argument("step tables missing");
        const std::size_t dyn_size = static_cast<std::size_t>(num_states_) * st.num_joint_actions() *
                                     st.num_joint_obs() * num_states_;
        const std::size_t rew_size = static_cast<std::size_t>(num_states_) * st.num_joint_actions();
        if (st.tables->dynamics.size() != dyn_size)
            throw std::invalid_argument("dynamics table size does not match spaces");
        if (st.tables->rewards.size() != rew_size)
            throw std::invalid_argument("reward table size does not match spaces");
    }
}

double DecPomdpModel::dynamics(int t, int s, int joint_action, int joint_obs, int next_s) const {
    const Step& st = steps_[static_cast<std::size_t>(t)];
    const std::size_t idx =
        ((static_cast<std::size_t>(s) * st.num_joint_actions() + joint_action) * st.num_joint_obs() + joint_obs) *
            num_states_ +
        next_s;
    return st.tables->dynamics[idx];
}

double DecPomdpModel::reward(int t, int s, int joint_action) const {
    const Step& st = steps_[static_cast<std::size_t>(t)];
    return st.tables->rewards[static_cast<std::size_t>(s) * st.num_joint_actions() + joint_action];
}

DecPomdpModel make_homogeneous_model(int num_agents, int horizon, std::vector<double> initial_belief,
                                     std::vector<int> action_sizes, std::vector<int> obs_sizes,
                                     std::shared_ptr<const StepTables> tables) {
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(horizon));
    for (int t = 0; t < horizon; ++t) {
        steps.push_back(Step{action_sizes, obs_sizes, tables});
    }
    return DecPomdpModel(num_agents, std::move(initial_belief), std::move(steps));
}

namespace {

std::string joint_to_string(const std::vector<int>& tuple) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i > 0) out << ",";
        out << tuple[i];
    }
    out << ")";
    return out.str();
}

} // namespace

std::vector<std::string> validate_model(const DecPomdpModel& model) {
    std::vector<std::string> report;
    double belief_sum = 0.0;
    for (std::size_t s = 0; s < model.initial_belief().size(); ++s) {
        const double p = model.initial_belief()[s];
        if (p < 0.0) {
            std::ostringstream out;
            out << "initial belief entry for state " << s << " is negative (" << p << ")";
            report.push_back(out.str());
        }
        belief_sum += p;
    }
    if (std::abs(belief_sum - 1.0) > kStochasticTol) {
        std::ostringstream out;
        out << "initial belief sums to " << belief_sum;
        report.push_back(out.str());
    }

    for (int t = 0; t < model.horizon(); ++t) {
        const Step& st = model.step(t);
        const int n_ja = st.num_joint_actions();
        const int n_jz = st.num_joint_obs();
        for (int s = 0; s < model.num_states(); ++s) {
            for (int ja = 0; ja < n_ja; ++ja) {
                double row_sum = 0.0;
                bool negative = false;
                for (int jz = 0; jz < n_jz; ++jz) {
                    for (int s2 = 0; s2 < model.num_states(); ++s2) {
                        const double p = model.dynamics(t, s, ja, jz, s2);
                        if (p < 0.0) negative = true;
                        row_sum += p;
                    }
                }
                if (negative || std::abs(row_sum - 1.0) > kStochasticTol) {
                    std::ostringstream out;
                    out << "dynamics row at (t=" << t << ", s=" << s << ", a="
                        << joint_to_string(unflatten_joint(ja, st.action_sizes));
                    if (negative) out << ") has a negative entry";
                    else out << ") sums to " << row_sum;
                    report.push_back(out.str());
                }
            }
        }
    }
    return report;
}

std::vector<std::vector<int>> enumerate_joint(const DecPomdpModel& model, int t, JointKind kind) {
    std::vector<int> sizes;
    if (kind == JointKind::action) {
        if (t < 0 || t >= model.horizon())
            throw std::out_of_range("no joint actions at time " + std::to_string(t));
        sizes = model.step(t).action_sizes;
    } else {
        // Observations exist for t = 1..h only; there is none at t = 0.
        if (t < 1 || t > model.horizon())
            throw std::out_of_range("no joint observation at time " + std::to_string(t));
        sizes = model.step(t - 1).obs_sizes;
    }
    const int count = joint_space_size(sizes);
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int flat = 0; flat < count; ++flat) {
        out.push_back(unflatten_joint(flat, sizes));
    }
    return out;
}

int flatten_joint(std::span<const int> indices, std::span<const int> sizes) {
    int flat = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        flat = flat * sizes[i] + indices[i];
    }
    return flat;
}

std::vector<int> unflatten_joint(int flat, std::span<const int> sizes) {
    std::vector<int> out(sizes.size(), 0);
    for (std::size_t i = sizes.size(); i-- > 0;) {
        out[i] = flat % sizes[i];
        flat /= sizes[i];
    }
    return out;
}

} // namespace decplan::core
