#pragma once

#include <array>
#include <vector>

#include "gaplab/model.hpp"

namespace gaplab {

struct SimDivergedError : std::runtime_error {
  SimState state;
  SimDivergedError(const std::string& msg, SimState s)
      : std::runtime_error(msg), state(std::move(s)) {}
};

// Per-body world-frame kinematics, including CoM Jacobians and the
// velocity-product accelerations needed for the bias vector.
struct BodyKin {
  double theta = 0.0;   // absolute angle
  double omega = 0.0;
  Vec2 origin = Vec2::Zero();   // joint position (base: q[0..1])
  Vec2 origin_vel = Vec2::Zero();
  Vec2 origin_acc_vp = Vec2::Zero();
  Vec2 com = Vec2::Zero();
  Vec2 com_vel = Vec2::Zero();
  Vec2 com_acc_vp = Vec2::Zero();  // CoM acceleration at qdd = 0
  MatX jac_origin;  // 2 x nv
  MatX jac_com;     // 2 x nv
  VecX jac_ang;     // nv, constant 0/1 selector
};

struct Kinematics {
  std::vector<BodyKin> bodies;  // [base?, link 0..n-1]
  int base_dof = 0;
  const BodyKin& link(int i) const { return bodies[base_dof > 0 ? i + 1 : i]; }
};

Kinematics forward_kinematics(const SimState& state, const ModelParams& p);

// World position/velocity and Jacobian of a point fixed in a link frame.
struct PointKin {
  Vec2 pos;
  Vec2 vel;
  MatX jac;  // 2 x nv
};
PointKin link_point(const Kinematics& kin, const ModelParams& p, int link,
                    const Vec2& local);

struct DynamicsTerms {
  MatX M;   // nv x nv, symmetric positive definite
  VecX b;   // Coriolis + gravity + damping/stiffness/dry-friction torques
};

// M(q) and the bias vector such that M qdd + b + tau_contact = tau_applied.
DynamicsTerms dynamics_terms(const SimState& state, const ModelParams& p);
DynamicsTerms dynamics_terms(const Kinematics& kin, const SimState& state,
                             const ModelParams& p);

struct ContactResult {
  VecX tau_contact;  // generalized, left-hand-side sign convention
  // per foot: world-frame (normal, tangential) force on the foot, N
  std::array<Vec2, 2> foot_forces{{Vec2::Zero(), Vec2::Zero()}};
  std::array<bool, 2> in_contact{{false, false}};
};

ContactResult contact_forces(const SimState& state, const ModelParams& p,
                             const TerrainProfile& terrain);
ContactResult contact_forces(const Kinematics& kin, const SimState& state,
                             const ModelParams& p,
                             const TerrainProfile& terrain);

// Semi-implicit Euler step. tau_input is clamped to the torque limits and
// scaled by the motor constant; tau_pert and f_base_pert bypass both.
SimState step(const SimState& state, const VecX& tau_input,
              const VecX& tau_pert, const Vec2& f_base_pert,
              const ModelParams& p, const TerrainProfile& terrain, double dt);

// Same update with a full generalized perturbation (nv entries), including
// the base pitch moment. Used by the equivalence oracle.
SimState step_generalized(const SimState& state, const VecX& tau_input,
                          const VecX& pert_generalized, const ModelParams& p,
                          const TerrainProfile& terrain, double dt);

// Convenience overload with no injected perturbations.
SimState step(const SimState& state, const VecX& tau_input,
              const ModelParams& p, const TerrainProfile& terrain, double dt);

// Kinetic + gravitational potential energy (contact springs excluded).
double total_energy(const SimState& state, const ModelParams& p);

// True when any non-foot collision proxy point (base, hips, knees, shank
// midpoints) is below the terrain surface.
bool non_foot_contact(const SimState& state, const ModelParams& p,
                      const TerrainProfile& terrain);

}  // namespace gaplab
