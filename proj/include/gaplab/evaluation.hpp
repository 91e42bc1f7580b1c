#pragma once

#include <string>
#include <vector>

#include "gaplab/config_io.hpp"

namespace gaplab {

// A named test condition: plant overrides, optional plant randomization
// ranges, and the command protocol.
struct EvalScenario {
  std::string name = "nominal";

  // plant overrides (0 / 1 = keep nominal)
  double joint_stiffness = 0.0;     // N m/rad added on every joint, eq = 0
  double contact_time_const = 0.0;  // s
  double friction_scale = 1.0;
  double foot_length_scale = 1.0;   // scales heel/toe lever arms
  double terrain_amplitude = 0.0;   // m
  double terrain_smoothing = 2.0;

  // per-episode plant randomization (widened-range protocols)
  bool randomize_plant = false;
  DRConfig dr = DRConfig::preset_by_name("reference");

  // protocol
  Command cmd{0.3, 0.0, 0.0};
  double duration = 20.0;
  int n_episodes = 16;
};

// Built-in scenario presets by name; throws ConfigError on unknown names.
EvalScenario make_scenario(const std::string& name);
std::vector<std::string> scenario_names();

// JSON round trip; a reloaded scenario reproduces identical metrics.
std::string scenario_to_json(const EvalScenario& s);
EvalScenario scenario_from_json(const std::string& text);

struct EpisodeLog {
  std::vector<double> time, vx, cmd_vx, pitch, base_x;
  bool survived = false;
  double length = 0.0;  // s
};

struct Metrics {
  double success_rate = 0.0;
  double rmse_vx = 0.0;
  double mean_vx = 0.0;        // time-averaged forward velocity
  double drift_mean = 0.0;     // final pitch excursion (planar drift analog)
  double drift_std = 0.0;
  double mean_ep_len = 0.0;    // s
  int n_episodes = 0;
  // audit: training-only injection machinery invoked during evaluation
  long injection_draws = 0;
};

Metrics compute_metrics(const std::vector<EpisodeLog>& logs,
                        const Command& cmd);

// Applies the scenario's plant overrides to a nominal model.
ModelParams apply_scenario(const ModelParams& nominal, const EvalScenario& s);

// Deterministic per seed. Training-only perturbations stay off; sensor
// corruption and scheduled pushes stay on. traj_dir, when set, receives one
// CSV per episode.
Metrics run_scenario(const Checkpoint& ck, const EvalScenario& scenario,
                     std::uint64_t seed, const std::string& traj_dir = "",
                     std::vector<EpisodeLog>* logs_out = nullptr);

}  // namespace gaplab
