#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mdpkit/dist.hpp"
#include "mdpkit/fixpoint.hpp"
#include "mdpkit/fnspace.hpp"

namespace mdpkit {

/// One action index per state.
struct DecisionRule {
  std::vector<int> actions;

  bool operator==(const DecisionRule&) const = default;
};

/**
 * A finite Markov decision process: a nonempty state set, a nonempty
 * per-state action set, a stochastic transition kernel T(s, a) over
 * states, and a reward r(s, a, s') on transition triples.
 *
 * Everything is validated at construction; instances are immutable and
 * safe for concurrent reads. Rewards are stored densely on (s, a, s').
 */
class Mdp {
 public:
  /// transitions[s][a] is the distribution over successor states,
  /// rewards[s][a][s'] the reward for that transition. Labels are
  /// optional; defaults "s0", "s1", ... and "a0", "a1", ... are
  /// generated when omitted.
  Mdp(std::vector<std::vector<Dist>> transitions,
      std::vector<std::vector<std::vector<double>>> rewards,
      std::vector<std::string> state_labels = {},
      std::vector<std::vector<std::string>> action_labels = {});

  int n_states() const noexcept { return static_cast<int>(transitions_.size()); }
  int n_actions(int s) const;
  const Dist& transition(int s, int a) const;
  double reward(int s, int a, int next_state) const;

  /// The bound D: largest absolute reward over all triples.
  double max_abs_reward() const noexcept { return max_abs_reward_; }

  const std::vector<std::string>& state_labels() const noexcept { return state_labels_; }
  const std::vector<std::string>& action_labels(int s) const;

  /// Throws unless the rule names one in-range action per state.
  void validate_rule(const DecisionRule& rule) const;

  /// Number of distinct decision rules, saturating at the uint64 max.
  std::uint64_t rule_space_size() const;

  /// The index-th rule in lexicographic order of action vectors.
  DecisionRule nth_rule(std::uint64_t index) const;

 private:
  std::vector<std::vector<Dist>> transitions_;
  std::vector<std::vector<std::vector<double>>> rewards_;
  std::vector<std::string> state_labels_;
  std::vector<std::vector<std::string>> action_labels_;
  double max_abs_reward_ = 0.0;
};

/// An MDP paired with a discount factor in [0, 1).
class DiscountedProblem {
 public:
  DiscountedProblem(Mdp mdp, double gamma);

  const Mdp& mdp() const noexcept { return mdp_; }
  double gamma() const noexcept { return gamma_; }

 private:
  Mdp mdp_;
  double gamma_;
};

/// Expected immediate reward: sum over s' of r(s, a, s') * T(s, a)(s').
double expected_immediate_reward(const Mdp& mdp, int s, int a);

/// The per-state expected immediate reward under a rule.
ValueFn step_expt_reward(const Mdp& mdp, const DecisionRule& rule);

/// The stationary kernel s -> T(s, rule(s)). Captures copies of the
/// MDP and rule, so the kernel owns everything it needs.
Kernel kernel_for_rule(const Mdp& mdp, const DecisionRule& rule);

/// Expected reward collected at step `step` when starting from
/// start_state and following the rule: the expectation of the rule's
/// immediate reward under the step-fold Kleisli iterate.
double expt_reward_at_step(const DiscountedProblem& problem, const DecisionRule& rule,
                           int start_state, int step);

/// Single (s, a) backup: sum over s' of T(s,a)(s') * (r(s,a,s') + gamma * w(s')).
double one_step_backup(const DiscountedProblem& problem, const ValueFn& w, int s, int a);

/**
 * The Bellman operator of a rule: W -> rbar_pi + gamma * E_{T_pi}[W].
 * A monotone gamma-contraction in the sup norm whose unique fixed
 * point is the rule's long-term value.
 */
ValueOp bellman_op(const DiscountedProblem& problem, const DecisionRule& rule);

/// The Bellman optimality operator: the pointwise max of the one-step
/// backup over the actions available at each state. Monotone
/// gamma-contraction; dominates bellman_op of every rule.
ValueOp bellman_max_op(const DiscountedProblem& problem);

/// n-th Bellman-operator iterate from the zero function; equals the
/// n-term partial sum of the discounted reward series.
ValueFn ltv_partial(const DiscountedProblem& problem, const DecisionRule& rule, int n);

/// Long-term value of a stationary rule, computed by fixed-point
/// iteration of its Bellman operator from zero. gamma_hint defaults to
/// the problem's discount when the config leaves it unset.
ValueFn ltv(const DiscountedProblem& problem, const DecisionRule& rule,
            const FixpointConfig& cfg = {});

/// Long-term value by direct solution of (I - gamma * M_pi) V = rbar_pi
/// with partially pivoted elimination. Testing oracle for ltv.
ValueFn ltv_exact(const DiscountedProblem& problem, const DecisionRule& rule);

/// The Q function of a rule: (s, a) -> rbar(s,a) + gamma * E_{T(s,a)}[V_pi].
class QFunction {
 public:
  QFunction(DiscountedProblem problem, ValueFn policy_value);

  double operator()(int s, int a) const;
  const ValueFn& policy_value() const noexcept { return policy_value_; }

 private:
  DiscountedProblem problem_;
  ValueFn policy_value_;
};

QFunction q_function(const DiscountedProblem& problem, const DecisionRule& rule,
                     const FixpointConfig& cfg = {});

}  // namespace mdpkit
