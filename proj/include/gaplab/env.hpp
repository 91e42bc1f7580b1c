#pragma once

#include "gaplab/agent.hpp"
#include "gaplab/dynamics.hpp"
#include "gaplab/randomization.hpp"
#include "gaplab/rewards.hpp"
#include "gaplab/terrain.hpp"

namespace gaplab {

struct EnvConfig {
  ModelParams model;
  DRConfig dr = DRConfig::preset_by_name("reference");
  TrainMethod method = TrainMethod::kNeuralPerturbation;
  PlannerConfig planner;
  RewardConfig reward;

  double control_dt = 8e-3;   // s, 125 Hz policy rate
  int substeps = 4;           // 2 ms physics steps
  double episode_length = 20.0;

  // terrain (0 amplitude = flat)
  double terrain_amplitude = 0.0;
  double terrain_smoothing = 4.0;
  double terrain_extent = 30.0;

  // per-episode command sampling (planar: forward velocity only)
  double cmd_vx_min = 0.0, cmd_vx_max = 0.6;
  double zero_cmd_prob = 0.15;
  bool fixed_cmd = false;
  Command cmd;  // used when fixed_cmd

  // training-time injection
  bool perturbation_slot = false;  // half-gating slot, fixed per run
  double erfi_sigma_bias = 0.0;    // N m; 0 disables the bias component
  double erfi_sigma_noise = 0.0;

  // evaluation behavior: disables training-only injections regardless of
  // method, keeps observation corruption and scheduled pushes on
  bool eval_mode = false;
  bool eval_randomize_plant = false;  // scenario-driven plant randomization

  int n_scan = 11;
  double scan_spacing = 0.1;  // m
  double init_noise = 0.03;   // rad / m, initial-state randomization
  // clip the total step reward at zero from below; without this the net
  // reward while flailing is negative and early termination outscores
  // learning to stand
  bool nonnegative_reward = true;
};

struct EnvStepResult {
  VecX obs;
  VecX priv;
  double reward = 0.0;
  RewardBreakdown breakdown;
  bool terminated = false;
  bool truncated = false;
  VecX tau_pert;               // the exact injected joint torques this tick
  Vec2 f_base_pert = Vec2::Zero();
};

// One planar locomotion environment: owns its randomization draw, gait
// bookkeeping, delay buffer, and injection machinery for the episode.
class LocomotionEnv {
 public:
  LocomotionEnv(EnvConfig cfg, std::uint64_t seed);

  VecX reset();
  EnvStepResult step(const PolicyParams& pi, const VecX& action);

  int obs_dim() const { return observation_dim(cfg_.model.n_joints); }
  int priv_dim() const {
    return privileged_dim(cfg_.model.n_joints, cfg_.n_scan);
  }
  const VecX& last_priv() const { return priv_; }
  const SimState& state() const { return state_; }
  const Command& command() const { return cmd_; }
  const DRSample& dr_sample() const { return dr_; }
  double episode_time() const { return tick_ * cfg_.control_dt; }
  bool injection_active() const;
  Rng& rng() { return rng_; }

  // shared privileged-input normalizer (single writer: the trainer)
  void set_scale(const RunningScale* scale) { scale_ = scale; }

 private:
  void start_gait_step();
  VecX corrupted_obs(const VecX& obs);
  VecX build_obs();
  void build_priv(const VecX& obs, double reward,
                  const RewardBreakdown& breakdown);
  Pose swing_rel_pose(const Kinematics& kin) const;

  EnvConfig cfg_;
  Rng rng_;
  TerrainProfile terrain_;
  ModelParams ep_params_;  // nominal with the episode's DR sample applied
  DRSample dr_;
  SimState state_;
  GaitState gait_;
  SwingSpline swing_ref_;
  Vec2 stance_foot_ref_ = Vec2::Zero();
  Command cmd_;
  DelayBuffer delay_;
  VecX a_prev_;
  VecX priv_;
  PerturbNet perturb_;
  ErfiSampler erfi_;
  const RunningScale* scale_ = nullptr;
  int tick_ = 0;
  std::size_t push_idx_ = 0;
  double prev_pitch_qdd_ = 0.0;
  std::array<bool, 2> prev_contacts_{{false, false}};
  VecX tau_pert_prev_;  // previous tick's injection echoed into obs inputs
  Vec2 f_base_prev_ = Vec2::Zero();
};

}  // namespace gaplab
