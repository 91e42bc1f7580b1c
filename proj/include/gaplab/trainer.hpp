#pragma once

#include <memory>
#include <string>

#include "gaplab/env.hpp"

namespace gaplab {

struct PPOConfig {
  int n_envs = 64;
  int horizon = 256;
  int epochs = 1;
  int minibatch_envs = 16;  // a minibatch is a block of whole env sequences
  double clip = 0.2;
  double gamma = 0.995;
  double lam = 0.95;
  double lr = 3e-4;
  double value_coeff = 0.5;
  double entropy_coeff = 0.0001;
  double lambda_grad = 0.01;       // weight of the input-gradient penalty
  double grad_fd_eps = 1e-3;       // probe length for the penalty estimator
  int grad_penalty_samples = 8;    // probed samples per minibatch
  double latent_reg = 1e-4;
  double max_grad_norm = 1.0;
  // scale rewards by the running RMS of discounted returns, then clip;
  // crash-impact penalties span ~10 orders of magnitude and would otherwise
  // consume the whole clipped gradient budget through the critic
  bool scale_rewards = true;
  double reward_clip = 10.0;
  // hard cap on the raw per-step reward before it enters the return
  // accumulator: one unbounded crash penalty would otherwise inflate the
  // running RMS forever and flatten every later reward to ~0
  double raw_reward_clip = 5.0;
  int total_updates = 1000;
  int checkpoint_every = 100;
  std::uint64_t seed = 0;

  void validate() const;
};

struct LossBreakdown {
  double surrogate = 0.0;   // clipped policy objective (to maximize)
  double value = 0.0;
  double entropy = 0.0;
  double recon = 0.0;
  double grad_penalty = 0.0;
  double total = 0.0;
  double grad_norm = 0.0;
};

struct UpdateStats {
  int update = 0;
  double mean_reward = 0.0;       // mean per-episode return of finished episodes
  double mean_ep_len = 0.0;       // s
  int episodes_finished = 0;
  int terminations = 0;
  int truncations = 0;
  LossBreakdown loss;
  double wall_time = 0.0;  // s
};

// Flat rollout storage: index [t] holds a batch over environments.
struct RolloutBuffer {
  int n_envs = 0, horizon = 0;
  std::vector<MatX> obs, priv, action, latent;
  std::vector<VecX> logp, reward, value;
  std::vector<std::vector<std::uint8_t>> done, terminated;
  std::vector<std::vector<std::uint8_t>> pert_active;  // per env, per step
  MatX h0;  // encoder hidden at buffer start, n_envs x hidden
  MatX advantage, returns;  // horizon x n_envs
};

// Per-sample clipped-surrogate objective min(r*A, clip(r)*A). When coeff is
// non-null it receives dL/dlogp for the maximized objective (0 where the
// clip is active).
double clipped_surrogate_term(double ratio, double adv, double clip,
                              double* coeff = nullptr);

class Trainer {
 public:
  Trainer(const EnvConfig& env_cfg, const PPOConfig& cfg);

  UpdateStats run_update();
  // full loop with CSV logging and periodic checkpoints
  void train(const std::string& out_dir);

  PolicyParams& policy() { return policy_; }
  const RunningScale& scale() const { return scale_; }
  RunningScale& scale() { return scale_; }
  const RunningScale& reward_scale() const { return reward_scale_; }
  const PPOConfig& config() const { return cfg_; }
  const EnvConfig& env_config() const { return env_cfg_; }
  const RolloutBuffer& last_buffer() const { return buffer_; }
  LocomotionEnv& env(int i) { return *envs_[i]; }

 private:
  void collect_rollouts();
  void compute_advantages();
  // critic / decoder consume RMS-normalized privileged vectors
  MatX norm_priv(const MatX& priv) const;
  LossBreakdown update_policy();
  LossBreakdown update_minibatch(const std::vector<int>& env_ids);

  PPOConfig cfg_;
  EnvConfig env_cfg_;
  std::vector<std::unique_ptr<LocomotionEnv>> envs_;
  PolicyParams policy_;
  RunningScale scale_;
  RunningScale reward_scale_;  // RMS of per-env discounted returns
  VecX ret_accum_;
  std::unique_ptr<nn::Adam> opt_;
  Rng rng_;
  RolloutBuffer buffer_;

  MatX hidden_;   // live encoder hidden per env
  MatX obs_cur_, priv_cur_;
  std::vector<double> ep_return_, ep_ticks_;
  // per-update episode stats
  double fin_return_sum_ = 0.0, fin_len_sum_ = 0.0;
  int fin_count_ = 0, term_count_ = 0, trunc_count_ = 0;
  int update_idx_ = 0;
};

}  // namespace gaplab
