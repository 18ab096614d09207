#include "decplan/rewards.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace decplan::rewards {

double NegativeEntropy::value(std::span<const double> belief) const {
    double v = 0.0;
    for (double p : belief) {
        if (p > 0.0) v += p * std::log(p);
    }
    return v;
}

std::vector<double> NegativeEntropy::gradient(std::span<const double> belief) const {
    std::vector<double> grad(belief.size());
    for (std::size_t s = 0; s < belief.size(); ++s) {
        grad[s] = std::log(std::max(belief[s], kBeliefFloor)) + 1.0;
    }
    return grad;
}

double NegativeEntropy::conjugate_at_gradient(std::span<const double> belief) const {
    // log-sum-exp of (ln b~ + 1) collapses to 1 + ln(sum b~) with b~ clamped.
    double sum = 0.0;
    for (double p : belief) sum += std::max(p, kBeliefFloor);
    return 1.0 + std::log(sum);
}

AlphaSet AlphaSet::zero(int num_states) {
    AlphaSet gamma;
    gamma.vectors.push_back(std::vector<double>(static_cast<std::size_t>(num_states), 0.0));
    return gamma;
}

std::vector<double> tangent_at(const ConvexReward& f, const beliefs::Belief& belief) {
    std::vector<double> alpha = f.gradient(belief);
    const double offset = f.conjugate_at_gradient(belief);
    for (double& a : alpha) a -= offset;
    return alpha;
}

AlphaSet tangents_at(const ConvexReward& f, const std::vector<beliefs::Belief>& points) {
    AlphaSet gamma;
    gamma.points = points;
    gamma.vectors.reserve(points.size());
    for (const beliefs::Belief& b : points) {
        gamma.vectors.push_back(tangent_at(f, b));
    }
    return gamma;
}

RhoResult rho_value(const AlphaSet& gamma, std::span<const double> belief) {
    if (gamma.empty()) throw std::invalid_argument("rho_value requires a non-empty alpha set");
    RhoResult best;
    best.value = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < gamma.size(); ++k) {
        const std::vector<double>& alpha = gamma.vectors[static_cast<std::size_t>(k)];
        double dot = 0.0;
        for (std::size_t s = 0; s < belief.size(); ++s) dot += belief[s] * alpha[s];
        if (dot > best.value) {
            best.value = dot;
            best.argmax = k;
        }
    }
    return best;
}

double expected_centralized_reward(const beliefs::PlanTimeStatistic& sigma, const AlphaSet& gamma) {
    if (gamma.empty()) throw std::invalid_argument("expected_centralized_reward requires a non-empty alpha set");
    // maximizing <sigma(., seq), alpha> equals marginal * max <sigma(.|seq), alpha>
    double total = 0.0;
    for (const auto& [seq, dist] : sigma.entries()) {
        total += rho_value(gamma, dist).value;
    }
    return total;
}

double expected_true_final_reward(const beliefs::PlanTimeStatistic& sigma, const ConvexReward& f) {
    double total = 0.0;
    for (const auto& [seq, dist] : sigma.entries()) {
        double marginal = 0.0;
        for (double p : dist) marginal += p;
        if (marginal == 0.0) continue;
        beliefs::Belief belief = dist;
        for (double& p : belief) p /= marginal;
        total += marginal * f.value(belief);
    }
    return total;
}

std::vector<beliefs::Belief> sample_simplex(int dim, int count, std::mt19937_64& gen) {
    if (dim < 1 || count < 1) throw std::invalid_argument("sample_simplex requires dim >= 1 and count >= 1");
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<beliefs::Belief> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        if (dim == 1) {
            out.push_back({1.0});
            continue;
        }
        std::vector<double> cuts(static_cast<std::size_t>(dim - 1));
        for (double& c : cuts) c = unif(gen);
        std::sort(cuts.begin(), cuts.end());
        beliefs::Belief b(static_cast<std::size_t>(dim));
        double prev = 0.0;
        for (int s = 0; s < dim - 1; ++s) {
            b[static_cast<std::size_t>(s)] = cuts[static_cast<std::size_t>(s)] - prev;
            prev = cuts[static_cast<std::size_t>(s)];
        }
        b[static_cast<std::size_t>(dim - 1)] = 1.0 - prev;
        out.push_back(std::move(b));
    }
    return out;
}

} // namespace decplan::rewards
