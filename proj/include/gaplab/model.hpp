#pragma once

#include <vector>

#include "gaplab/types.hpp"

namespace gaplab {

// Planar articulated mechanism: optional floating base (x, z, pitch) plus a
// tree of revolute links. Link i hangs from joint i; joint_parent[i] == -1
// attaches to the base (or to the world when the base is fixed).
//
// Link frame convention: origin at the joint, local +x forward and +y up at
// zero absolute angle. Leg links extend along local -y, so a chain with all
// angles zero hangs straight down.
struct ModelParams {
  bool floating_base = true;
  int n_joints = 0;

  // base link (used only when floating_base)
  double base_mass = 0.0;
  double base_inertia = 0.0;
  Vec2 base_com = Vec2::Zero();

  std::vector<int> joint_parent;    // -1 = base/world, else link index
  std::vector<Vec2> joint_offset;   // joint position in parent link frame

  std::vector<double> link_mass;      // kg
  std::vector<double> link_inertia;   // kg m^2, about the link CoM
  std::vector<double> link_length;    // m, joint-to-child-joint distance
  std::vector<Vec2> link_com;         // CoM in link frame

  std::vector<double> joint_damping;        // N m s/rad
  std::vector<double> joint_armature;       // kg m^2
  std::vector<double> joint_stiffness;      // N m/rad, default 0
  std::vector<double> joint_stiffness_eq;   // spring equilibrium angle
  std::vector<double> joint_friction_loss;  // N m, dry friction magnitude
  std::vector<double> torque_limit;         // N m
  std::vector<double> motor_constant_scale; // multiplies commanded torque
  std::vector<double> joint_q_min;          // soft position limits
  std::vector<double> joint_q_max;

  // contact
  std::vector<int> foot_links;  // link indices carrying heel/toe points
  Vec2 heel_offset = Vec2(-0.09, -0.05);
  Vec2 toe_offset = Vec2(0.12, -0.05);
  double contact_stiffness_time_const = 0.02;  // s
  double contact_friction_coeff = 1.0;

  double gravity = 9.81;

  std::vector<double> q_default;       // default joint angles
  double nominal_base_height = 0.93;   // m, standing pose

  int nv() const { return (floating_base ? 3 : 0) + n_joints; }
  int base_dof() const { return floating_base ? 3 : 0; }

  double total_mass() const {
    double m = floating_base ? base_mass : 0.0;
    for (double mi : link_mass) m += mi;
    return m;
  }

  void validate() const;
};

struct SimState {
  VecX q;          // [base x, base z, pitch, joints...] or [joints...]
  VecX qd;
  double t = 0.0;
  std::array<bool, 2> contact_flags{{false, false}};
  // per foot: (normal, tangential) summed over heel/toe, world frame N
  std::array<Vec2, 2> foot_forces{{Vec2::Zero(), Vec2::Zero()}};
  VecX last_qdd;
};

struct TerrainProfile {
  std::vector<double> heights;  // uniform 1D grid, centered on x = 0
  double grid_spacing = 0.1;    // m
  double friction_scale = 1.0;

  // Linear interpolation, clamped at the grid ends. Empty profile is flat.
  double height_at(double x) const;
  static TerrainProfile flat() { return TerrainProfile{}; }
};

SimState make_state(const ModelParams& p);

// Fixtures.
// Serial pendulum chain fixed to the world; point mass convention puts the
// CoM at the link tip when com_at_tip is true.
ModelParams make_pendulum(int n_links, double mass = 1.0, double length = 1.0,
                          bool com_at_tip = true);

// 9-DOF planar biped: floating base + hip/knee/ankle per leg.
// Joint order: [L_hip, L_knee, L_ankle, R_hip, R_knee, R_ankle].
ModelParams make_biped();

}  // namespace gaplab
