#include "stagerl/net.hpp"

#include <Eigen/QR>

#include <cmath>

namespace stagerl {

MatX orthogonalMatrix(int rows, int cols, double gain, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const bool transpose = rows < cols;
  const int m = transpose ? cols : rows;
  const int n = transpose ? rows : cols;
  MatX g(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = normal(rng);
  }
  Eigen::HouseholderQR<MatX> qr(g);
  MatX q = qr.householderQ() * MatX::Identity(m, n);
  MatX r = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  if (transpose) return gain * q.transpose();
  return gain * q;
}

Mlp::Mlp(const std::vector<int>& dims, Rng& rng, double last_layer_scale) {
  if (dims.size() < 2) throw FaultError("Mlp needs at least input and output dims");
  for (size_t l = 0; l + 1 < dims.size(); ++l) {
    const bool last = (l + 2 == dims.size());
    const double gain = last ? last_layer_scale : std::sqrt(2.0);
    weights_.push_back(orthogonalMatrix(dims[l + 1], dims[l], gain, rng));
    biases_.push_back(VecX::Zero(dims[l + 1]));
  }
}

MatX Mlp::forward(const MatX& x) const {
  MatX a = x;
  for (size_t l = 0; l < weights_.size(); ++l) {
    MatX z = a * weights_[l].transpose();
    z.rowwise() += biases_[l].transpose();
    a = (l + 1 < weights_.size()) ? z.array().tanh().matrix() : z;
  }
  return a;
}

MatX Mlp::forward(const MatX& x, Cache& cache) const {
  cache.inputs.clear();
  cache.inputs.reserve(weights_.size());
  MatX a = x;
  for (size_t l = 0; l < weights_.size(); ++l) {
    cache.inputs.push_back(a);
    MatX z = a * weights_[l].transpose();
    z.rowwise() += biases_[l].transpose();
    a = (l + 1 < weights_.size()) ? z.array().tanh().matrix() : z;
  }
  return a;
}

MatX Mlp::backward(const Cache& cache, const MatX& dy, std::vector<MatX>& grad_w,
                   std::vector<VecX>& grad_b) const {
  if (cache.inputs.size() != weights_.size()) {
    throw FaultError("Mlp::backward: cache does not match network");
  }
  MatX g = dy;
  MatX dx;
  for (size_t li = weights_.size(); li-- > 0;) {
    grad_w[li].noalias() += g.transpose() * cache.inputs[li];
    grad_b[li] += g.colwise().sum().transpose();
    dx.noalias() = g * weights_[li];
    if (li > 0) {
      // input to layer li is the tanh activation output of layer li-1
      g = dx.cwiseProduct(
          (1.0 - cache.inputs[li].array().square()).matrix());
    }
  }
  return dx;
}

void Mlp::makeGradBuffers(std::vector<MatX>& grad_w,
                          std::vector<VecX>& grad_b) const {
  grad_w.clear();
  grad_b.clear();
  for (size_t l = 0; l < weights_.size(); ++l) {
    grad_w.push_back(MatX::Zero(weights_[l].rows(), weights_[l].cols()));
    grad_b.push_back(VecX::Zero(biases_[l].size()));
  }
}

VecX Mlp::flatten() const {
  VecX theta(numParams());
  Eigen::Index k = 0;
  for (size_t l = 0; l < weights_.size(); ++l) {
    const Eigen::Index nw = weights_[l].size();
    theta.segment(k, nw) = Eigen::Map<const VecX>(weights_[l].data(), nw);
    k += nw;
    theta.segment(k, biases_[l].size()) = biases_[l];
    k += biases_[l].size();
  }
  return theta;
}

void Mlp::unflatten(const VecX& theta) {
  if (theta.size() != numParams()) throw FaultError("Mlp::unflatten: size mismatch");
  Eigen::Index k = 0;
  for (size_t l = 0; l < weights_.size(); ++l) {
    const Eigen::Index nw = weights_[l].size();
    Eigen::Map<VecX>(weights_[l].data(), nw) = theta.segment(k, nw);
    k += nw;
    biases_[l] = theta.segment(k, biases_[l].size());
    k += biases_[l].size();
  }
}

VecX Mlp::flattenGrads(const std::vector<MatX>& grad_w,
                       const std::vector<VecX>& grad_b) const {
  VecX g(numParams());
  Eigen::Index k = 0;
  for (size_t l = 0; l < grad_w.size(); ++l) {
    const Eigen::Index nw = grad_w[l].size();
    g.segment(k, nw) = Eigen::Map<const VecX>(grad_w[l].data(), nw);
    k += nw;
    g.segment(k, grad_b[l].size()) = grad_b[l];
    k += grad_b[l].size();
  }
  return g;
}

Eigen::Index Mlp::numParams() const {
  Eigen::Index n = 0;
  for (size_t l = 0; l < weights_.size(); ++l) {
    n += weights_[l].size() + biases_[l].size();
  }
  return n;
}

void Adam::step(VecX& params, const VecX& grad) {
  if (m_.size() == 0) {
    m_ = VecX::Zero(params.size());
    v_ = VecX::Zero(params.size());
  }
  if (params.size() != grad.size() || params.size() != m_.size()) {
    throw FaultError("Adam::step: size mismatch");
  }
  ++t_;
  m_ = beta1_ * m_ + (1.0 - beta1_) * grad;
  v_ = beta2_ * v_.array().matrix() + (1.0 - beta2_) * grad.array().square().matrix();
  const double bc1 = 1.0 - std::pow(beta1_, t_);
  const double bc2 = 1.0 - std::pow(beta2_, t_);
  params.array() -=
      lr_ * (m_.array() / bc1) / ((v_.array() / bc2).sqrt() + eps_);
}

double clipGradNorm(VecX& grad, double max_norm) {
  const double norm = grad.norm();
  if (max_norm > 0.0 && norm > max_norm) {
    grad *= max_norm / norm;
  }
  return norm;
}

void RunningMeanStd::update(const MatX& batch) {
  const double n = static_cast<double>(batch.rows());
  if (n < 1.0) return;
  const VecX batch_mean = batch.colwise().mean().transpose();
  const MatX centered = batch.rowwise() - batch_mean.transpose();
  const VecX batch_var =
      centered.array().square().colwise().sum().transpose() / n;
  const VecX delta = batch_mean - mean_;
  const double tot = count_ + n;
  mean_ += delta * (n / tot);
  const VecX m2 = var_ * count_ + batch_var * n +
                  delta.array().square().matrix() * (count_ * n / tot);
  var_ = m2 / tot;
  count_ = tot;
}

MatX RunningMeanStd::normalize(const MatX& x) const {
  MatX out = x;
  out.rowwise() -= mean_.transpose();
  const VecX denom = (var_.array() + 1e-8).sqrt();
  out.array().rowwise() /= denom.transpose().array();
  return out.cwiseMax(-10.0).cwiseMin(10.0);
}

VecX RunningMeanStd::normalize(const VecX& x) const {
  VecX out = (x - mean_).array() / (var_.array() + 1e-8).sqrt();
  return out.cwiseMax(-10.0).cwiseMin(10.0);
}

}  // namespace stagerl
