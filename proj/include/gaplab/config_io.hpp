#pragma once

#include <string>

#include "gaplab/env.hpp"
#include "gaplab/trainer.hpp"

namespace gaplab {

std::string to_string(TrainMethod m);
TrainMethod method_from_string(const std::string& s);

// Versioned JSON weight dump with a layout manifest; loadable by `eval`.
void save_checkpoint(const std::string& path, PolicyParams& policy,
                     const RunningScale& scale, const EnvConfig& env_cfg,
                     const PPOConfig& ppo_cfg);

struct Checkpoint {
  PolicyParams policy;
  RunningScale scale;
  EnvConfig env_cfg;
  PPOConfig ppo_cfg;
};

Checkpoint load_checkpoint(const std::string& path);

// Training / environment configuration files (JSON, partial overrides of the
// built-in defaults).
EnvConfig load_env_config(const std::string& path);
PPOConfig load_ppo_config(const std::string& path);
void apply_env_overrides(EnvConfig& cfg, const std::string& path);
void apply_ppo_overrides(PPOConfig& cfg, const std::string& path);

}  // namespace gaplab
