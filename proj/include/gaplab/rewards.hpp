#pragma once

#include <map>
#include <string>

#include "gaplab/dynamics.hpp"
#include "gaplab/planner.hpp"

namespace gaplab {

// Per-term weights and tolerances. Penalty terms evaluate to values <= 0 and
// carry positive weights, so every weighted contribution of a penalty row is
// non-positive.
struct RewardConfig {
  // command tracking
  double w_lin_vel_x = 1.2, sigma_vel_x = 0.15;
  double w_lin_vel_y = 1.2, sigma_vel_y = 0.15;
  double w_ang_vel_z = 2.2, sigma_ang_vel = 0.10;
  double w_yaw_drift = 0.4, sigma_yaw = 0.09;
  // motion quality
  double w_base_height = 2.0, sigma_height = 0.15, target_height = 0.92;
  double w_orientation = 1.6;
  double sigma_roll = 0.15, sigma_pitch = 0.2, sigma_yaw_coord = 0.25;
  double w_roll_stability = 1.4;
  double sigma_roll_angle = 0.1, sigma_roll_rate = 0.2;
  double w_smooth = 0.6, sigma_smooth = 5.0;
  double w_swing_pos = 0.45, sigma_swing_xy = 0.2, sigma_swing_z = 0.05;
  double w_swing_ori = 0.45, sigma_swing_psi = 0.10;
  double w_stance_pos = 0.25, sigma_stance_xy = 0.2, sigma_stance_z = 0.1;
  double w_stance_ori = 0.25, sigma_stance_psi = 0.15;
  double w_contact_schedule = 0.9;
  double w_force_symmetry = 0.7, sigma_sym = 0.25;
  double w_joint_deviation = 0.18, sigma_joint_dev = 2.0;
  // regularization
  double w_action_rate = 0.001;
  double sigma_action_hip = 0.9, sigma_action_knee = 0.55,
         sigma_action_ankle = 0.45;
  double cmd_scale_floor = 0.1;  // s(c) = min(1, |c| / floor)
  double w_energy = 4e-4;
  double w_joint_limits = 0.4;
  double w_contact_power = 0.015;
  double w_impact = 0.5, impact_threshold = 1100.0;  // N
  double w_landing = 2.0, landing_vel_threshold = 1.5, landing_height = 0.1;
};

struct RewardBreakdown {
  // raw per-term values (exp-kernel terms in (0,1], penalties <= 0)
  std::map<std::string, double> terms;
  // names of rows whose symbols do not exist in the planar model
  std::map<std::string, bool> planar_degenerate;
  double total = 0.0;
};

double yaw_drift_reward(double omega_base_z, double omega_cmd_z,
                        double sigma_yaw);
double orientation_reward(double roll, double pitch, double dpsi,
                          double sigma_r = 0.15, double sigma_p = 0.2,
                          double sigma_psi = 0.25);
// (impact, landing) pre-weight penalty values
std::pair<double, double> impact_landing_penalties(double foot_force_norm,
                                                   double foot_z,
                                                   double foot_zd,
                                                   bool landing_detected,
                                                   const RewardConfig& cfg = {});

// Everything compute_total needs beyond the raw state.
struct RewardInputs {
  Command cmd;
  const TerrainProfile* terrain = nullptr;  // null = flat
  const GaitState* gait = nullptr;
  SwingSpline swing_ref;                 // stance-frame reference
  Vec2 stance_foot_ref = Vec2::Zero();   // world (x, z) at touchdown
  VecX action;       // a_t
  VecX action_prev;  // a_{t-1}
  VecX tau;          // applied joint torques
  double base_pitch_acc_rate = 0.0;  // d(pitch qdd)/dt, control-rate estimate
  std::array<bool, 2> landing_detected{{false, false}};
};

RewardBreakdown compute_total(const SimState& state, const ModelParams& params,
                              const RewardInputs& in, const RewardConfig& cfg);

}  // namespace gaplab
