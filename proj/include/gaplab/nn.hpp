#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gaplab/types.hpp"

namespace gaplab::nn {

using gaplab::MatX;
using gaplab::VecX;

// One learnable tensor with its gradient accumulator.
struct Param {
  std::string name;
  MatX v;
  MatX g;

  Param() = default;
  Param(std::string n, int rows, int cols)
      : name(std::move(n)), v(MatX::Zero(rows, cols)), g(MatX::Zero(rows, cols)) {}
  void zero_grad() { g.setZero(); }
};

using ParamRefs = std::vector<Param*>;

enum class Act { kNone, kElu, kTanh };

MatX activate(Act act, const MatX& pre);
// dPre given dPost and the cached pre-activation
MatX activate_backward(Act act, const MatX& pre, const MatX& dpost);

// Row-major batching: X is (batch x in), output (batch x out).
struct Linear {
  Param W;  // out x in
  Param b;  // out x 1
  bool has_bias = true;

  Linear() = default;
  Linear(const std::string& name, int in, int out, bool bias = true)
      : W(name + ".W", out, in), b(name + ".b", out, 1), has_bias(bias) {}

  MatX forward(const MatX& x, MatX* x_cache) const;
  // accumulates parameter grads, returns dX
  MatX backward(const MatX& x_cache, const MatX& dy);

  void collect(ParamRefs& out) {
    out.push_back(&W);
    if (has_bias) out.push_back(&b);
  }
};

struct MLP {
  std::vector<Linear> layers;
  std::vector<Act> acts;  // one per layer

  struct Cache {
    std::vector<MatX> inputs;  // per layer
    std::vector<MatX> pre;     // pre-activation per layer
  };

  MLP() = default;
  MLP(const std::string& name, const std::vector<int>& dims, Act hidden,
      Act output = Act::kNone, bool bias = true);

  MatX forward(const MatX& x, Cache* cache) const;
  MatX backward(Cache& cache, const MatX& dy);
  void collect(ParamRefs& out) {
    for (auto& l : layers) l.collect(out);
  }
  int in_dim() const { return layers.front().W.v.cols(); }
  int out_dim() const { return layers.back().W.v.rows(); }
};

// Single GRU cell, batch-first. Gate convention:
//   z = sigmoid(x Wz^T + h Uz^T + bz)
//   r = sigmoid(x Wr^T + h Ur^T + br)
//   n = tanh(x Wn^T + bn + r .* (h Un^T + bhn))
//   h' = (1 - z) .* n + z .* h
struct GRUCell {
  Linear wz, uz, wr, ur, wn, un;
  int in_dim = 0, hidden_dim = 0;

  struct Cache {
    MatX x, h_prev, z, r, n, hn;  // hn = h Un^T + bhn
    MatX pre_z, pre_r, pre_n;
  };

  GRUCell() = default;
  GRUCell(const std::string& name, int in, int hidden);

  MatX step(const MatX& x, const MatX& h_prev, Cache* cache) const;
  // returns dx, writes dh_prev; accumulates parameter grads
  MatX backward_step(Cache& cache, const MatX& dh, MatX* dh_prev);
  void collect(ParamRefs& out) {
    wz.collect(out); uz.collect(out);
    wr.collect(out); ur.collect(out);
    wn.collect(out); un.collect(out);
  }
};

// Diagonal Gaussian with state-independent log-std.
struct GaussianHead {
  Param log_std;  // n x 1
  double log_std_min = -4.0, log_std_max = 1.0;

  GaussianHead() = default;
  GaussianHead(const std::string& name, int n, double init = -0.7)
      : log_std(name + ".log_std", n, 1) {
    log_std.v.setConstant(init);
  }

  VecX clamped_log_std() const;
  // per-row log probability of actions under means
  VecX log_prob(const MatX& mean, const MatX& action) const;
  // d(sum_i coeff_i * logp_i)/dmean and accumulation into log_std grad
  MatX log_prob_backward(const MatX& mean, const MatX& action,
                         const VecX& coeff);
  double entropy() const;  // summed over dims
  void entropy_backward(double coeff);
  MatX sample(const MatX& mean, Rng& rng) const;
  void collect(ParamRefs& out) { out.push_back(&log_std); }
};

struct AdamConfig {
  double lr = 3e-4;
  double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;
};

class Adam {
 public:
  Adam() = default;
  Adam(ParamRefs params, AdamConfig cfg);
  void step();
  void zero_grad();
  // global gradient-norm clipping before the step; returns the norm
  double clip_grad_norm(double max_norm);
  const ParamRefs& params() const { return params_; }

 private:
  ParamRefs params_;
  AdamConfig cfg_;
  std::vector<MatX> m_, v_;
  long t_ = 0;
};

// Xavier-uniform init, the usual default for tanh/ELU stacks.
void init_xavier(ParamRefs params, Rng& rng);

// Relative-error check of analytic vs central finite-difference gradients.
// loss_fn must evaluate the scalar loss without touching gradients.
double gradient_check(ParamRefs params, const std::function<double()>& loss_fn,
                      const std::function<void()>& backward_fn,
                      double fd_eps = 1e-5, int probes_per_param = 10,
                      Rng* rng = nullptr);

}  // namespace gaplab::nn
