#include "decplan/conversion.hpp"

#include <limits>
#include <stdexcept>

namespace decplan::conversion {

ConvertedModel convert_to_standard(const core::DecPomdpModel& source, const rewards::AlphaSet& gamma) {
    if (gamma.empty()) throw std::invalid_argument("conversion requires a non-empty alpha set");
    const int n_agents = source.num_agents();
    const int n_states = source.num_states();
    const int n_alpha = gamma.size();

    std::vector<core::Step> steps = source.steps();

    core::Step prediction_step;
    prediction_step.action_sizes.assign(static_cast<std::size_t>(n_agents), n_alpha);
    prediction_step.obs_sizes.assign(static_cast<std::size_t>(n_agents), 1);
    const int n_ja = prediction_step.num_joint_actions();

    auto tables = std::make_shared<core::StepTables>();
    // Deterministic point mass: the state persists and the joint null
    // observation is emitted with probability one.
    tables->dynamics.assign(
        static_cast<std::size_t>(n_states) * n_ja * 1 * n_states, 0.0);
    for (int s = 0; s < n_states; ++s) {
        for (int ja = 0; ja < n_ja; ++ja) {
            tables->dynamics[((static_cast<std::size_t>(s) * n_ja + ja) * 1 + 0) * n_states + s] = 1.0;
        }
    }
    tables->rewards.assign(static_cast<std::size_t>(n_states) * n_ja, 0.0);
    for (int s = 0; s < n_states; ++s) {
        for (int ja = 0; ja < n_ja; ++ja) {
            const std::vector<int> parts = core::unflatten_joint(ja, prediction_step.action_sizes);
            double sum = 0.0;
            for (int i = 0; i < n_agents; ++i) {
                sum += gamma.vectors[static_cast<std::size_t>(parts[static_cast<std::size_t>(i)])]
                                    [static_cast<std::size_t>(s)];
            }
            tables->rewards[static_cast<std::size_t>(s) * n_ja + ja] = sum / n_agents;
        }
    }
    prediction_step.tables = std::move(tables);
    steps.push_back(std::move(prediction_step));

    ConvertedModel out;
    out.model = core::DecPomdpModel(n_agents, source.initial_belief(), std::move(steps));
    out.model.state_names = source.state_names;
    out.gamma = gamma;
    out.action_to_alpha.resize(static_cast<std::size_t>(n_alpha));
    for (int k = 0; k < n_alpha; ++k) out.action_to_alpha[static_cast<std::size_t>(k)] = k;
    return out;
}

namespace {

/// Per-agent aggregation of sigma_h: for each individual sequence of agent i,
/// the unnormalized state weight sum over all joint sequences projecting to
/// it. The argmax over prediction actions is unchanged by normalization.
std::map<beliefs::IndivSeq, std::vector<double>> agent_weights(const beliefs::PlanTimeStatistic& sigma,
                                                               int agent) {
    std::map<beliefs::IndivSeq, std::vector<double>> weights;
    for (const auto& [seq, dist] : sigma.entries()) {
        beliefs::IndivSeq indiv = sigma.project(seq, agent);
        auto [it, inserted] = weights.try_emplace(std::move(indiv));
        if (inserted) it->second.assign(dist.size(), 0.0);
        for (std::size_t s = 0; s < dist.size(); ++s) it->second[s] += dist[s];
    }
    return weights;
}

} // namespace

PredictionRule optimal_prediction_rule(const beliefs::PlanTimeStatistic& sigma_h,
                                       const ConvertedModel& converted) {
    const rewards::AlphaSet& gamma = converted.gamma;
    PredictionRule rule;
    rule.per_agent.resize(static_cast<std::size_t>(sigma_h.num_agents()));
    for (int i = 0; i < sigma_h.num_agents(); ++i) {
        for (auto& [indiv, weight] : agent_weights(sigma_h, i)) {
            int best_action = 0;
            double best_value = -std::numeric_limits<double>::infinity();
            for (int k = 0; k < gamma.size(); ++k) {
                const std::vector<double>& alpha = gamma.vectors[static_cast<std::size_t>(k)];
                double dot = 0.0;
                for (std::size_t s = 0; s < weight.size(); ++s) dot += weight[s] * alpha[s];
                if (dot > best_value) {
                    best_value = dot;
                    best_action = k;
                }
            }
            rule.per_agent[static_cast<std::size_t>(i)].emplace(indiv, best_action);
        }
    }
    return rule;
}

double expected_decentralized_reward(const beliefs::PlanTimeStatistic& sigma_h,
                                     const ConvertedModel& converted, const PredictionRule& phi) {
    const rewards::AlphaSet& gamma = converted.gamma;
    const int n_agents = sigma_h.num_agents();
    double total = 0.0;
    for (const auto& [seq, dist] : sigma_h.entries()) {
        for (int i = 0; i < n_agents; ++i) {
            const beliefs::IndivSeq indiv = sigma_h.project(seq, i);
            const auto& agent_rule = phi.per_agent.at(static_cast<std::size_t>(i));
            const auto it = agent_rule.find(indiv);
            if (it == agent_rule.end())
                throw std::invalid_argument("prediction rule undefined for a positive-mass sequence");
            const std::vector<double>& alpha = gamma.vectors.at(static_cast<std::size_t>(it->second));
            double dot = 0.0;
            for (std::size_t s = 0; s < dist.size(); ++s) dot += dist[s] * alpha[s];
            total += dot / n_agents;
        }
    }
    return total;
}

double decentralization_gap(const beliefs::PlanTimeStatistic& sigma_h, const rewards::AlphaSet& gamma) {
    // The gap only needs gamma and the statistic; build a minimal converted
    // view carrying gamma for the shared helpers.
    ConvertedModel view;
    view.gamma = gamma;
    const PredictionRule best = optimal_prediction_rule(sigma_h, view);
    const double centralized = rewards::expected_centralized_reward(sigma_h, gamma);
    const double decentralized = expected_decentralized_reward(sigma_h, view, best);
    double gap = centralized - decentralized;
    if (gap < 0.0 && gap > -1e-9) gap = 0.0;
    return gap;
}

} // namespace decplan::conversion
