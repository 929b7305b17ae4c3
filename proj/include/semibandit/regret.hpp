#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "semibandit/env.hpp"
#include "semibandit/errors.hpp"
#include "semibandit/oracle.hpp"
#include "semibandit/strategy.hpp"

namespace semibandit {

// Best static strategy under the true means; its mean reward lambda_1 anchors
// every regret series. Always solved by the exact oracle variant, even when
// the learning run uses the greedy one.
inline std::pair<Strategy, double> static_optimum(const std::vector<double>& means,
                                                  const OracleProblem& problem) {
    OracleProblem exact = problem;
    if (auto* m = std::get_if<MwisProblem>(&exact)) m->mode = MwisMode::Exact;
    if (auto* p = std::get_if<PathProblem>(&exact)) p->mode = PathMode::GainOptimism;
    const OracleResult r = maximize(exact, warm_weights(means));
    return {r.strategy, r.weight.value};
}

inline std::pair<Strategy, double> static_optimum(const Environment& env,
                                                  const OracleProblem& problem) {
    std::vector<double> means;
    means.reserve(env.arms().size());
    for (const ArmModel& a : env.arms()) means.push_back(a.mean);
    return static_optimum(means, problem);
}

struct RoundRecord {
    long t = 0;
    Strategy strategy;
    double reward = 0.0;
    double avg_regret = 0.0;
    double avg_beta_regret = 0.0;
};

// Single-trajectory accounting in normalized units:
//   avg_regret(t)      = lambda1   - cum_reward / t
//   avg_beta_regret(t) = lambda1/b - cum_reward / t
// Expectations are recovered by averaging replications.
class RegretLedger {
public:
    RegretLedger(double lambda1, double beta, double scale = 1.0)
        : lambda1_(lambda1), beta_(beta), scale_(scale) {
        if (!(beta >= 1.0)) fail(Errc::domain, "beta must be >= 1");
    }

    double lambda1() const { return lambda1_; }
    double beta() const { return beta_; }
    double scale() const { return scale_; }
    double cum_reward() const { return cum_reward_; }
    const std::vector<RoundRecord>& rows() const { return rows_; }

    void record_round(long t, const Strategy& strategy, double reward) {
        if (t != static_cast<long>(rows_.size()) + 1)
            fail(Errc::sequencing, "expected round " + std::to_string(rows_.size() + 1) +
                                       ", got " + std::to_string(t));
        cum_reward_ += reward;
        const double avg_reward = cum_reward_ / static_cast<double>(t);
        rows_.push_back(RoundRecord{t, strategy, reward, lambda1_ - avg_reward,
                                    lambda1_ / beta_ - avg_reward});
    }

private:
    double lambda1_;
    double beta_;
    double scale_;
    double cum_reward_ = 0.0;
    std::vector<RoundRecord> rows_;
};

// ---------------------------------------------------------------------------
// Closed-form regret-bound expressions, evaluated term by term without
// simplification. The distribution-free forms need (n, K, N); the
// distribution-dependent forms additionally take the minimum gap.

namespace detail {

inline void check_bound_args(double n, double K, double N) {
    if (!(n > 0.0) || !(K > 0.0) || !(N > 0.0))
        fail(Errc::domain, "bound arguments must be positive");
}

inline void check_delta(double delta, double N) {
    if (!(delta > 0.0) || !(delta <= N))
        fail(Errc::domain, "gap argument must lie in (0, N]");
}

constexpr double kE = 2.718281828459045235360287471352662498;

} // namespace detail

// sup R(n) <= NK + sqrt(Ke) n^{2/3} + 16 N^3 n^{3/4}
//            + [ K/e^2 + (1 + 4 sqrt(K) N^2) N ] N K n^{5/6}
inline double bound_lemma1(double n, double K, double N) {
    detail::check_bound_args(n, K, N);
    const double e = detail::kE;
    return N * K + std::sqrt(K * e) * std::pow(n, 2.0 / 3.0) +
           16.0 * N * N * N * std::pow(n, 3.0 / 4.0) +
           (K / (e * e) + (1.0 + 4.0 * std::sqrt(K) * N * N) * N) * N * K *
               std::pow(n, 5.0 / 6.0);
}

// R(n) <= e^3 K^3 / d^5 + NK ( 1 + 16 N^2 ln(n^{2/3} N^2 / K) / d^2
//         + K n^{1/3} / e^2 + 8 N^3 K ln(n N^2 / K) n^{1/3} / d^2
//         + KN / ((1 - 1/e) d^2) )
inline double bound_lemma2(double n, double K, double N, double delta_min) {
    detail::check_bound_args(n, K, N);
    detail::check_delta(delta_min, N);
    const double e = detail::kE;
    const double d2 = delta_min * delta_min;
    const double d5 = d2 * d2 * delta_min;
    return e * e * e * K * K * K / d5 +
           N * K *
               (1.0 + 16.0 * N * N * std::log(std::pow(n, 2.0 / 3.0) * N * N / K) / d2 +
                K * std::pow(n, 1.0 / 3.0) / (e * e) +
                8.0 * N * N * N * K * std::log(n * N * N / K) / d2 * std::pow(n, 1.0 / 3.0) +
                K * N / ((1.0 - 1.0 / e) * d2));
}

// sup R_b(n) <= NK/b + sqrt(eK) n^{2/3} + 16 N^3 n^{3/4} / b
//              + ( 1 + 4 sqrt(K) N^2 / b^2 + K / (e^2 N) ) (N^2 K / b) n^{5/6}
inline double bound_lemma3(double n, double K, double N, double beta) {
    detail::check_bound_args(n, K, N);
    if (!(beta >= 1.0)) fail(Errc::domain, "beta must be >= 1");
    const double e = detail::kE;
    return N * K / beta + std::sqrt(e * K) * std::pow(n, 2.0 / 3.0) +
           16.0 * N * N * N * std::pow(n, 3.0 / 4.0) / beta +
           (1.0 + 4.0 * std::sqrt(K) * N * N / (beta * beta) + K / (e * e * N)) *
               (N * N * K / beta) * std::pow(n, 5.0 / 6.0);
}

// R_b(n) <= e^3 K^3 / d^5 + (NK/b) ( 1 + 16 N^2 ln(n^{2/3} N^2 / K) / d^2
//           + K n^{1/3} / e^2 + 8 N^3 K n^{1/3} ln(n N^2 / K) / (b^2 d^2)
//           + NK / ((1 - 1/e) d^2) )
inline double bound_lemma4(double n, double K, double N, double beta, double delta_beta_min) {
    detail::check_bound_args(n, K, N);
    if (!(beta >= 1.0)) fail(Errc::domain, "beta must be >= 1");
    detail::check_delta(delta_beta_min, N);
    const double e = detail::kE;
    const double d2 = delta_beta_min * delta_beta_min;
    const double d5 = d2 * d2 * delta_beta_min;
    return e * e * e * K * K * K / d5 +
           (N * K / beta) *
               (1.0 + 16.0 * N * N * std::log(std::pow(n, 2.0 / 3.0) * N * N / K) / d2 +
                K * std::pow(n, 1.0 / 3.0) / (e * e) +
                8.0 * N * N * N * K * std::pow(n, 1.0 / 3.0) * std::log(n * N * N / K) /
                    (beta * beta * d2) +
                N * K / ((1.0 - 1.0 / e) * d2));
}

// Combined bounds: the pairwise minimum of the matching lemma expressions.
inline double bound_combined(double n, double K, double N, double delta_min) {
    return std::min(bound_lemma1(n, K, N), bound_lemma2(n, K, N, delta_min));
}

inline double bound_combined_beta(double n, double K, double N, double beta,
                                  double delta_beta_min) {
    return std::min(bound_lemma3(n, K, N, beta), bound_lemma4(n, K, N, beta, delta_beta_min));
}

} // namespace semibandit
