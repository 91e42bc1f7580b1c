#pragma once

#include <vector>

#include "gaplab/model.hpp"

namespace gaplab {

enum class TrainMethod { kDR, kERFI, kNeuralPerturbation };

struct Range {
  double lo = 0.0, hi = 0.0;
  double sample(Rng& rng) const {
    return lo == hi ? lo : rng.uniform(lo, hi);
  }
};

// Parametric randomization ranges. Multiplicative unless noted.
struct DRConfig {
  std::string preset = "reference";
  Range terrain_friction{0.6, 1.4};
  Range link_mass{0.6, 1.4};
  Range link_com{-0.03, 0.03};        // additive, m, along local x
  Range actuator_armature{0.6, 1.4};
  Range actuator_damping{0.0, 2.9};   // additive, N m s/rad
  Range push_magnitude{0.0, 0.5};     // m/s
  double push_interval = 4.0;         // s
  Range motor_constant{0.8, 1.2};
  Range delay_ms{0.0, 10.0};
  Range pd_gain_multiplier{0.9, 1.1};
  // observation corruption (additive bias per episode + per-step noise)
  double obs_bias_scale = 0.05;
  double obs_noise_scale = 0.02;

  static DRConfig preset_by_name(const std::string& name);
  void validate() const;
};

struct PushEvent {
  double time = 0.0;       // s
  double velocity = 0.0;   // m/s, applied to base x velocity
};

struct DRSample {
  double terrain_friction = 1.0;
  std::vector<double> link_mass_scale;
  std::vector<double> link_com_offset;
  std::vector<double> armature_scale;
  std::vector<double> damping_offset;
  std::vector<double> motor_scale;
  double pd_gain_scale = 1.0;
  int delay_ticks = 0;
  std::vector<PushEvent> pushes;
  VecX obs_bias;           // empty when observation corruption is off
  double obs_noise_scale = 0.0;
  bool obs_corruption = false;
  bool pushes_active = false;

  // nominal params with this sample applied
  ModelParams apply(const ModelParams& nominal) const;
};

// Draws one randomization instance. Parameters outside the given method's
// set stay at nominal.
DRSample sample_dr(const DRConfig& config, TrainMethod method,
                   const ModelParams& nominal, Rng& rng,
                   double control_dt = 8e-3, double episode_length = 20.0);

// -- state-dependent torque-space perturbation --

struct PerturbNet {
  std::vector<MatX> weights;  // no biases anywhere
  std::vector<int> layer_dims;
  double sigma_lim_joint = 50.0;  // N m
  double sigma_lim_base = 25.0;   // N
  bool active = false;

  int input_dim() const { return layer_dims.empty() ? 0 : layer_dims.front(); }
  int output_dim() const { return layer_dims.empty() ? 0 : layer_dims.back(); }
};

// Gaussian weights with per-layer std sqrt(1.5 / (n_in + n_out)).
PerturbNet sample_perturb_weights(const std::vector<int>& layer_dims, Rng& rng);
double perturb_init_std(int n_in, int n_out);

struct RunningScale {
  VecX sum_sq;
  std::int64_t count = 0;
  bool frozen = false;
  double floor = 1e-6;

  VecX scale() const;
  void update(const MatX& batch);  // rows = samples
  void update(const VecX& sample);
};

struct PerturbOutput {
  VecX tau_joint;  // n_joints
  Vec2 f_base = Vec2::Zero();
};

// tau_phi(o_priv) = sigma_lim * tanh(MLP(o_priv / scale)). Inactive nets and
// zero inputs produce exact zeros. Output layout: [joints..., base fx, fz].
PerturbOutput perturb_torque(const PerturbNet& net, const VecX& o_priv,
                             const RunningScale& scale, int n_joints);

// -- extended random force injection --

class ErfiSampler {
 public:
  ErfiSampler() = default;
  ErfiSampler(double sigma_bias, double sigma_noise, int n_joints, Rng& rng);

  // bias fixed for the episode + fresh per-step noise
  VecX sample(Rng& rng) const;
  const VecX& bias() const { return bias_; }

 private:
  VecX bias_;
  double sigma_noise_ = 0.0;
  int n_joints_ = 0;
};

// Matches the injected torque power of freshly sampled perturbation networks
// over random states; used to default the ERFI magnitudes.
double calibrate_erfi_sigma(int d_priv, int n_joints, int n_nets = 64,
                            int n_states = 64, std::uint64_t seed = 0);

// Process-wide counters used by the evaluation harness to prove that no
// training-only injection machinery runs at evaluation time.
struct InjectionAudit {
  static long perturb_net_draws;
  static long erfi_constructions;
  static void reset();
};

// Per-run half-environment gating: exactly ceil(n/2) active slots, shuffled
// deterministically. An environment keeps its slot for the whole run.
std::vector<bool> half_gating(int n_envs, Rng& rng);

}  // namespace gaplab
