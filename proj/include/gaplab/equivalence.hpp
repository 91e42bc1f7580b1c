#pragma once

#include <vector>

#include "gaplab/dynamics.hpp"

namespace gaplab {

struct EquivalenceReport {
  std::vector<double> max_state_deviation;  // per step
  std::vector<VecX> tau_dr_trace;
  int horizon = 0;
  double tolerance = 0.0;
  bool pass = false;

  double worst() const {
    double w = 0.0;
    for (double d : max_state_deviation) w = std::max(w, d);
    return w;
  }
};

// The torque that makes the nominal model reproduce the perturbed model's
// acceleration at this state. qdd_perturbed must be the acceleration realized
// by stepping the perturbed model from `state`.
VecX compute_tau_dr(const SimState& state, const VecX& qdd_perturbed,
                    const VecX& tau_input, const ModelParams& nominal,
                    const ModelParams& perturbed,
                    const TerrainProfile& terrain);

// Rolls the perturbed model, injects tau_DR into the nominal model from the
// same state each step, and compares next states. Re-synchronizes to the
// perturbed trajectory after every step.
EquivalenceReport verify_equivalence(const SimState& x0,
                                     const std::vector<VecX>& torque_sequence,
                                     const ModelParams& nominal,
                                     const ModelParams& perturbed,
                                     const TerrainProfile& terrain,
                                     int horizon, double tol,
                                     double dt = 2e-3);

}  // namespace gaplab
