#pragma once

#include <vector>

#include "stagerl/common.hpp"

namespace stagerl {

/// Fully connected network with tanh hidden layers and a linear output,
/// batched over rows. Forward/backward are hand-rolled so gradients stay
/// deterministic and checkable against finite differences.
class Mlp {
 public:
  Mlp() = default;
  /// dims = {in, h1, ..., out}; orthogonal init, last layer rescaled.
  Mlp(const std::vector<int>& dims, Rng& rng, double last_layer_scale = 1.0);

  /// Rows of x are samples. Returns rows of outputs.
  MatX forward(const MatX& x) const;

  struct Cache {
    std::vector<MatX> inputs;  // input to each layer (post-activation of prev)
  };
  MatX forward(const MatX& x, Cache& cache) const;

  /// Backprop dL/dy through the cached forward pass. Accumulates parameter
  /// gradients (same shapes as weights/biases) and returns dL/dx.
  MatX backward(const Cache& cache, const MatX& dy, std::vector<MatX>& grad_w,
                std::vector<VecX>& grad_b) const;

  void makeGradBuffers(std::vector<MatX>& grad_w, std::vector<VecX>& grad_b) const;

  int inputDim() const { return weights_.empty() ? 0 : (int)weights_.front().cols(); }
  int outputDim() const { return weights_.empty() ? 0 : (int)weights_.back().rows(); }
  size_t numLayers() const { return weights_.size(); }

  std::vector<MatX>& weights() { return weights_; }
  std::vector<VecX>& biases() { return biases_; }
  const std::vector<MatX>& weights() const { return weights_; }
  const std::vector<VecX>& biases() const { return biases_; }

  VecX flatten() const;
  void unflatten(const VecX& theta);
  VecX flattenGrads(const std::vector<MatX>& grad_w,
                    const std::vector<VecX>& grad_b) const;
  Eigen::Index numParams() const;

 private:
  std::vector<MatX> weights_;  // layer l: (out_l x in_l)
  std::vector<VecX> biases_;
};

/// Generate a matrix with orthonormal rows or columns, scaled by gain.
MatX orthogonalMatrix(int rows, int cols, double gain, Rng& rng);

/// Adam over a flat parameter vector.
class Adam {
 public:
  explicit Adam(double lr = 3e-4, double beta1 = 0.9, double beta2 = 0.999,
                double eps = 1e-8)
      : lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps) {}

  void step(VecX& params, const VecX& grad);
  void setLearningRate(double lr) { lr_ = lr; }
  double learningRate() const { return lr_; }

 private:
  double lr_, beta1_, beta2_, eps_;
  long t_ = 0;
  VecX m_, v_;
};

/// Clip the L2 norm of a flat gradient in place. Returns the pre-clip norm.
double clipGradNorm(VecX& grad, double max_norm);

/// Running mean/std tracker for observation normalization.
class RunningMeanStd {
 public:
  RunningMeanStd() = default;
  explicit RunningMeanStd(int dim)
      : mean_(VecX::Zero(dim)), var_(VecX::Ones(dim)), count_(1e-4) {}

  void update(const MatX& batch);
  MatX normalize(const MatX& x) const;
  VecX normalize(const VecX& x) const;

  const VecX& mean() const { return mean_; }
  const VecX& var() const { return var_; }
  double count() const { return count_; }
  void restore(const VecX& mean, const VecX& var, double count) {
    mean_ = mean;
    var_ = var;
    count_ = count;
  }

 private:
  VecX mean_;
  VecX var_;
  double count_ = 0.0;
};

}  // namespace stagerl
