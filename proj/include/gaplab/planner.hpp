#pragma once

#include <array>

#include "gaplab/types.hpp"

namespace gaplab {

struct Command {
  double vx = 0.0;      // m/s
  double vy = 0.0;      // m/s
  double wz = 0.0;      // rad/s
};

struct PlannerConfig {
  double c_x = 0.4, c_y = 0.4, c_psi = 0.4;
  double t_min = 0.4, t_max = 0.8;  // s
  double eps = 1e-6;
  double foot_separation = 0.21;    // m, minimum lateral spacing
  double dx_max = 0.5;              // m
  double h_apex = 0.08;             // m
  double v_lift = 0.1;              // dz/ds at liftoff
};

// Velocity-adaptive step period.
double step_period(const Command& cmd, const PlannerConfig& cfg = {});

struct FootholdTarget {
  double dx = 0.0;   // m, stance-foot frame
  double dy = 0.0;   // m
  double dpsi = 0.0; // rad
};

// phase: 0 = left stance, 1 = right stance.
FootholdTarget foothold(const Command& cmd, double t_step, int phase,
                        const PlannerConfig& cfg = {});

struct Pose {
  double x = 0.0, y = 0.0, z = 0.0, psi = 0.0;
};

// Cubic horizontal channels (zero boundary velocities) plus a quartic
// vertical profile with prescribed liftoff slope and apex height. All
// polynomials are in the normalized phase s in [0, 1].
struct SwingSpline {
  std::array<double, 4> cx{}, cy{}, cpsi{};  // cubic coefficients
  std::array<double, 5> cz{};                // quartic coefficients
  double t_step = 0.8;

  Pose eval(double s) const;
  Pose eval_deriv(double s) const;  // d(pose)/ds
};

SwingSpline build_swing_spline(const Pose& start, const FootholdTarget& target,
                               double h_apex, double v_lift, double t_step);

// Sinusoidal gait-cycle encoding; tick t, step period in ticks, leg phase
// indicator in {0, 1}. One step period is half the gait cycle.
Vec2 gait_phase_signal(double t, double period_ticks, int phase);

// Gait bookkeeping for one environment.
struct GaitState {
  int phase = 0;           // stance leg: 0 = left, 1 = right
  int tick = 0;            // control ticks into the current step
  double t_step = 0.8;     // s
  int ticks_per_step = 100;
  Pose swing_start;        // swing-foot pose at step start, stance frame

  double normalized_phase() const {
    return ticks_per_step > 0
               ? static_cast<double>(tick) / ticks_per_step
               : 0.0;
  }
};

}  // namespace gaplab
