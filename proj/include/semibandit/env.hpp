#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "semibandit/errors.hpp"
#include "semibandit/rng.hpp"
#include "semibandit/strategy.hpp"

namespace semibandit {

enum class RewardFamily { Bernoulli, UniformAround };

// One stochastic arm: i.i.d. draws on [0,1] with the given mean.
// `scale` maps the normalized value back to application units (e.g. data rate).
struct ArmModel {
    double mean = 0.0;
    RewardFamily family = RewardFamily::Bernoulli;
    double halfwidth = 0.0; // UniformAround only
    double scale = 1.0;
};

inline void validate_arm(const ArmModel& a, int index) {
    const std::string where = "arm " + std::to_string(index);
    if (!(a.mean >= 0.0 && a.mean <= 1.0))
        fail(Errc::domain, where + ": mean must lie in [0,1]");
    if (!(a.scale > 0.0))
        fail(Errc::domain, where + ": scale must be positive");
    if (a.family == RewardFamily::UniformAround) {
        if (a.halfwidth < 0.0)
            fail(Errc::domain, where + ": halfwidth must be nonnegative");
        if (a.mean - a.halfwidth < 0.0 || a.mean + a.halfwidth > 1.0)
            fail(Errc::domain, where + ": support [mean-h, mean+h] must stay inside [0,1]");
    }
}

// K arms, a seed, and a round counter. Arms are immutable after construction;
// only the round counter advances. Identical (arms, seed) replay identically.
class Environment {
public:
    Environment(std::vector<ArmModel> arms, std::uint64_t seed)
        : arms_(std::move(arms)), seed_(seed) {
        if (arms_.empty())
            fail(Errc::degenerate_environment, "environment needs at least one arm");
        for (int k = 0; k < static_cast<int>(arms_.size()); ++k)
            validate_arm(arms_[k], k);
    }

    int arm_count() const { return static_cast<int>(arms_.size()); }
    std::uint64_t seed() const { return seed_; }
    long round() const { return round_; }
    const std::vector<ArmModel>& arms() const { return arms_; }

    // Pure draw for arm k at round t; does not advance the counter.
    double value_at(long t, int k) const {
        const double u = uniform01(seed_, static_cast<std::uint64_t>(t),
                                   static_cast<std::uint64_t>(k));
        const ArmModel& a = arms_[static_cast<std::size_t>(k)];
        switch (a.family) {
            case RewardFamily::Bernoulli:
                return u < a.mean ? 1.0 : 0.0;
            case RewardFamily::UniformAround:
                return a.mean - a.halfwidth + 2.0 * a.halfwidth * u;
        }
        return 0.0;
    }

    // One i.i.d. draw per selected arm (semi-bandit feedback). Unselected arms
    // consume no randomness. Advances the round counter by exactly one.
    std::vector<std::pair<int, double>> sample_round(const Strategy& selected) {
        validate_strategy(selected, arm_count(), arm_count());
        const long t = ++round_;
        std::vector<std::pair<int, double>> out;
        out.reserve(selected.arms.size());
        for (int k : selected.arms)
            out.emplace_back(k, value_at(t, k));
        return out;
    }

private:
    std::vector<ArmModel> arms_;
    std::uint64_t seed_ = 0;
    long round_ = 0;
};

// Divide by the global maximum so means land in [0,1]; the returned scale
// restores original units (reward_raw = reward * scale).
inline std::pair<Environment, double>
normalize_environment(const std::vector<double>& raw_means, std::uint64_t seed,
                      RewardFamily family = RewardFamily::Bernoulli) {
    if (raw_means.empty())
        fail(Errc::degenerate_environment, "no raw means given");
    double scale = 0.0;
    for (std::size_t i = 0; i < raw_means.size(); ++i) {
        if (raw_means[i] < 0.0)
            fail(Errc::domain, "raw mean " + std::to_string(i) + " is negative");
        scale = std::max(scale, raw_means[i]);
    }
    if (scale == 0.0)
        fail(Errc::degenerate_environment, "all raw means are zero");
    std::vector<ArmModel> arms;
    arms.reserve(raw_means.size());
    for (double r : raw_means)
        arms.push_back(ArmModel{r / scale, family, 0.0, scale});
    return {Environment(std::move(arms), seed), scale};
}

} // namespace semibandit
