#pragma once

#include <memory>
#include <random>
#include <span>
#include <vector>

#include "decplan/statistic.hpp"

namespace decplan::rewards {

/// Floor applied to belief entries before gradient evaluation, so tangents at
/// beliefs with exact zeros stay bounded.
inline constexpr double kBeliefFloor = 1e-12;

/// A bounded, convex, differentiable function on the belief simplex together
/// with the pieces needed to build tangent hyperplanes.
class ConvexReward {
public:
    virtual ~ConvexReward() = default;
    virtual double value(std::span<const double> belief) const = 0;
    virtual std::vector<double> gradient(std::span<const double> belief) const = 0;
    /// Convex conjugate evaluated at the gradient, f*(grad f(b)).
    virtual double conjugate_at_gradient(std::span<const double> belief) const = 0;
};

/// f(b) = sum_s b(s) ln b(s), with gradient ln b + 1 and conjugate the
/// log-sum-exp, so f*(grad f(b)) = 1 on the simplex interior.
class NegativeEntropy final : public ConvexReward {
public:
    double value(std::span<const double> belief) const override;
    std::vector<double> gradient(std::span<const double> belief) const override;
    double conjugate_at_gradient(std::span<const double> belief) const override;
};

/// Set of tangent hyperplanes defining the piecewise-linear reward rho.
/// points, when non-empty, records the linearization point of each vector.
struct AlphaSet {
    std::vector<std::vector<double>> vectors;
    std::vector<std::vector<double>> points;

    int size() const { return static_cast<int>(vectors.size()); }
    bool empty() const { return vectors.empty(); }

    static AlphaSet zero(int num_states);  // the standard Dec-POMDP special case
};

/// Tangent hyperplane of f at b: alpha = grad f(b) - f*(grad f(b)), with
/// entries of b below kBeliefFloor clamped first.
std::vector<double> tangent_at(const ConvexReward& f, const beliefs::Belief& belief);

/// Builds an AlphaSet from tangents of f at the given linearization points.
AlphaSet tangents_at(const ConvexReward& f, const std::vector<beliefs::Belief>& points);

struct RhoResult {
    double value = 0.0;
    int argmax = 0;  // lowest index on ties
};

/// rho(b) = max over alpha in gamma of <b, alpha>. Throws on empty gamma.
RhoResult rho_value(const AlphaSet& gamma, std::span<const double> belief);

/// Expected centralized prediction reward: sum over positive-mass sequences
/// of sigma(seq) * max_alpha <sigma(.|seq), alpha>, with sigma at the final
/// time.
double expected_centralized_reward(const beliefs::PlanTimeStatistic& sigma, const AlphaSet& gamma);

/// Expected true final reward sum_seq sigma(seq) f(sigma(.|seq)).
double expected_true_final_reward(const beliefs::PlanTimeStatistic& sigma, const ConvexReward& f);

/// K points uniformly distributed on the (dim-1)-simplex via sorted-uniform
/// spacings; deterministic given the generator state.
std::vector<beliefs::Belief> sample_simplex(int dim, int count, std::mt19937_64& gen);

} // namespace decplan::rewards
