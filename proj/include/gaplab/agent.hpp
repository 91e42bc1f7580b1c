#pragma once

#include <deque>

#include "gaplab/model.hpp"
#include "gaplab/nn.hpp"
#include "gaplab/planner.hpp"

namespace gaplab {

// Observation layout (fixed order):
//   [pitch rate (1), gravity direction in base frame (2), command (3),
//    q - q_default (n), qd joints (n), gait phase signal (2), a_prev (n)]
int observation_dim(int n_joints);

// Privileged layout: observation ++ base velocity (2) ++ swing-foot pose
// relative to stance (3) ++ swing reference pose (3) ++ reward (1) ++
// contact flags (2) ++ injected joint torques (n) ++ injected base force (2)
// ++ terrain height scan (n_scan).
int privileged_dim(int n_joints, int n_scan);

VecX assemble_observation(const SimState& state, const ModelParams& params,
                          const Command& cmd, const Vec2& phase_signal,
                          const VecX& a_prev);

struct PrivInputs {
  Vec2 v_base = Vec2::Zero();
  Pose swing_rel;     // actual swing-foot pose in the stance-foot frame
  Pose swing_target;  // reference pose at the current phase
  double reward = 0.0;
  std::array<bool, 2> contacts{{false, false}};
  VecX tau_pert;      // n_joints, the exact injected values
  Vec2 f_base_pert = Vec2::Zero();
  VecX h_scan;        // n_scan terrain samples relative to the base footprint
};

VecX assemble_privileged(const VecX& obs, const PrivInputs& in);

// Fixed per-channel input scaling applied inside the policy networks; raw
// joint velocities reach tens of rad/s and would saturate the recurrent
// encoder and dominate first-layer gradients.
VecX observation_scale(int n_joints);

enum class ActionMode { kPosition, kTorque };

// Ring buffer of recent actions; zero-filled at episode start.
class DelayBuffer {
 public:
  void reset(int n_act, int capacity = 16);
  void push(const VecX& action);
  // action from `delay` ticks ago (delay = 0 -> the most recent push)
  VecX get(int delay) const;

 private:
  std::deque<VecX> ring_;
  int n_act_ = 0;
  int capacity_ = 16;
};

struct PolicyParams {
  int n_obs = 0, n_priv = 0, n_act = 0;
  int latent_dim = 24, gru_hidden = 256;

  nn::MLP actor;        // [n_obs + latent, 256, 256, n_act], ELU
  nn::GaussianHead head;
  nn::MLP critic;       // [n_obs + n_priv, 512, 512, 256, 1], ELU
  nn::GRUCell enc_gru;  // n_obs -> 256
  nn::MLP enc_head;     // [256, 256, latent], ELU
  nn::MLP decoder;      // [latent, 128, 128, n_priv], ELU

  ActionMode mode = ActionMode::kTorque;
  double kp = 400.0, kd = 40.0;
  VecX mu_pd, sigma_pd;  // position-mode target offset/scale per joint
  VecX tau_limit;
  VecX obs_scale;  // per-channel input scaling, see observation_scale()

  static PolicyParams make(int n_obs, int n_priv, int n_act, ActionMode mode,
                           const ModelParams& model, Rng& rng);
  nn::ParamRefs all_params();

  // batched helpers; rows = samples
  MatX scaled_obs(const MatX& obs) const;
  MatX actor_mean(const MatX& obs, const MatX& latent,
                  nn::MLP::Cache* cache = nullptr) const;
  VecX value(const MatX& obs, const MatX& priv,
             nn::MLP::Cache* cache = nullptr) const;
  // one recurrence step for a batch of environments
  MatX encode_step(const MatX& obs, MatX& hidden, nn::GRUCell::Cache* gru_cache,
                   nn::MLP::Cache* head_cache) const;
};

struct ActResult {
  VecX action;  // a_t as sampled (or the mean)
  VecX a_eff;   // delayed action retrieved from the buffer
  VecX tau;     // commanded joint torques
};

// Samples (or takes the mean of) the policy, pushes to the delay buffer,
// retrieves the delayed action, and maps it to joint torques.
ActResult act(const PolicyParams& pi, const VecX& obs, const VecX& latent,
              DelayBuffer& buffer, int delay_ticks, const VecX& q_joints,
              const VecX& qd_joints, bool stochastic, Rng& rng,
              double pd_gain_scale = 1.0);

// Torque mapping alone (used by act and by tests).
VecX action_to_torque(const PolicyParams& pi, const VecX& a_eff,
                      const VecX& q_joints, const VecX& qd_joints,
                      double pd_gain_scale = 1.0);

}  // namespace gaplab
