#include "decplan/statistic.hpp"

#include <sstream>
#include <stdexcept>

namespace decplan::beliefs {

IndivSeq project_sequence(const SeqKey& seq, const std::vector<std::vector<int>>& obs_arity, int agent) {
    IndivSeq out;
    out.reserve(seq.size());
    for (std::size_t k = 0; k < seq.size(); ++k) {
        const std::vector<int>& sizes = obs_arity[k];
        const std::vector<int> parts = core::unflatten_joint(seq[k], sizes);
        out.push_back(static_cast<std::int32_t>(parts[static_cast<std::size_t>(agent)]));
    }
    return out;
}

SeqKey complement_sequence(const SeqKey& seq, const std::vector<std::vector<int>>& obs_arity, int agent) {
    SeqKey out;
    out.reserve(seq.size());
    for (std::size_t k = 0; k < seq.size(); ++k) {
        const std::vector<int>& sizes = obs_arity[k];
        const std::vector<int> parts = core::unflatten_joint(seq[k], sizes);
        int flat = 0;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            if (static_cast<int>(i) == agent) continue;
            flat = flat * sizes[i] + parts[i];
        }
        out.push_back(static_cast<std::int32_t>(flat));
    }
    return out;
}

PlanTimeStatistic::PlanTimeStatistic(int num_agents, std::vector<std::vector<int>> obs_arity,
                                     std::map<SeqKey, std::vector<double>> entries)
    : num_agents_(num_agents), obs_arity_(std::move(obs_arity)), entries_(std::move(entries)) {}

PlanTimeStatistic PlanTimeStatistic::initial(const core::DecPomdpModel& model) {
    std::map<SeqKey, std::vector<double>> entries;
    entries.emplace(SeqKey{}, model.initial_belief());
    return PlanTimeStatistic(model.num_agents(), {}, std::move(entries));
}

int PlanTimeStatistic::num_states() const {
    if (entries_.empty()) return 0;
    return static_cast<int>(entries_.begin()->second.size());
}

double PlanTimeStatistic::total_mass() const {
    double mass = 0.0;
    for (const auto& [seq, dist] : entries_) {
        for (double p : dist) mass += p;
    }
    return mass;
}

Filtered belief_update(const core::DecPomdpModel& model, int t, const Belief& belief, int joint_action,
                       int joint_obs) {
    const int n_states = model.num_states();
    Belief posterior(static_cast<std::size_t>(n_states), 0.0);
    double likelihood = 0.0;
    for (int s2 = 0; s2 < n_states; ++s2) {
        double mass = 0.0;
        for (int s = 0; s < n_states; ++s) {
            mass += model.dynamics(t, s, joint_action, joint_obs, s2) * belief[static_cast<std::size_t>(s)];
        }
        posterior[static_cast<std::size_t>(s2)] = mass;
        likelihood += mass;
    }
    if (likelihood == 0.0) {
        return Filtered{{}, 0.0};
    }
    for (double& p : posterior) p /= likelihood;
    return Filtered{std::move(posterior), likelihood};
}

PlanTimeStatistic statistic_update(const core::DecPomdpModel& model, const PlanTimeStatistic& sigma,
                                   const JointDecisionRule& delta) {
    const int t = sigma.time();
    if (t >= model.horizon()) throw std::invalid_argument("statistic already at the model horizon");
    const core::Step& st = model.step(t);
    const int n_states = model.num_states();
    const int n_jz = st.num_joint_obs();

    std::map<SeqKey, std::vector<double>> next;
    for (const auto& [seq, dist] : sigma.entries()) {
        const std::optional<int> ja = delta(seq);
        if (!ja.has_value()) {
            std::ostringstream out;
            out << "decision rule undefined for a reachable sequence at time " << t;
            throw std::invalid_argument(out.str());
        }
        for (int jz = 0; jz < n_jz; ++jz) {
            std::vector<double> ext(static_cast<std::size_t>(n_states), 0.0);
            bool any = false;
            for (int s2 = 0; s2 < n_states; ++s2) {
                double mass = 0.0;
                for (int s = 0; s < n_states; ++s) {
                    const double p = dist[static_cast<std::size_t>(s)];
                    if (p == 0.0) continue;
                    mass += model.dynamics(t, s, *ja, jz, s2) * p;
                }
                ext[static_cast<std::size_t>(s2)] = mass;
                if (mass != 0.0) any = true;
            }
            if (!any) continue; // zero-probability branch, pruned
            SeqKey extended = seq;
            extended.push_back(static_cast<std::int32_t>(jz));
            // each (seq, jz) pair extends to a distinct key
            next.emplace(std::move(extended), std::move(ext));
        }
    }

    std::vector<std::vector<int>> arity = sigma.obs_arity();
    arity.push_back(st.obs_sizes);
    return PlanTimeStatistic(model.num_agents(), std::move(arity), std::move(next));
}

Conditional condition(const PlanTimeStatistic& sigma, const SeqKey& seq) {
    if (seq.size() != static_cast<std::size_t>(sigma.time()))
        throw std::invalid_argument("sequence length does not match statistic time");
    const auto it = sigma.entries().find(seq);
    if (it == sigma.entries().end()) {
        return Conditional{std::nullopt, 0.0};
    }
    double marginal = 0.0;
    for (double p : it->second) marginal += p;
    if (marginal == 0.0) {
        return Conditional{std::nullopt, 0.0};
    }
    Belief belief = it->second;
    for (double& p : belief) p /= marginal;
    return Conditional{std::move(belief), marginal};
}

double expected_stage_reward(const core::DecPomdpModel& model, const PlanTimeStatistic& sigma,
                             const JointDecisionRule& delta) {
    const int t = sigma.time();
    double total = 0.0;
    for (const auto& [seq, dist] : sigma.entries()) {
        const std::optional<int> ja = delta(seq);
        if (!ja.has_value()) throw std::invalid_argument("decision rule undefined for a reachable sequence");
        for (int s = 0; s < model.num_states(); ++s) {
            const double p = dist[static_cast<std::size_t>(s)];
            if (p == 0.0) continue;
            total += p * model.reward(t, s, *ja);
        }
    }
    return total;
}

} // namespace decplan::beliefs
