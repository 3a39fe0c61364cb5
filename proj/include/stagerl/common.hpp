#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace stagerl {

using Vec2 = Eigen::Vector2d;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;
using Rng = std::mt19937_64;

/// Raised when a config file, stage plan, or signal set is malformed.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised on runtime faults (non-finite actions, mismatched buffers, ...).
class FaultError : public std::runtime_error {
 public:
  explicit FaultError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Planar pose of an agent base: position plus heading angle.
struct Pose2 {
  Vec2 p{0.0, 0.0};
  double theta = 0.0;

  Vec2 worldToBody(const Vec2& w) const {
    const double c = std::cos(theta), s = std::sin(theta);
    const Vec2 d = w - p;
    return {c * d.x() + s * d.y(), -s * d.x() + c * d.y()};
  }
  Vec2 bodyToWorld(const Vec2& b) const {
    const double c = std::cos(theta), s = std::sin(theta);
    return {p.x() + c * b.x() - s * b.y(), p.y() + s * b.x() + c * b.y()};
  }
  Vec2 rotateToWorld(const Vec2& b) const {
    const double c = std::cos(theta), s = std::sin(theta);
    return {c * b.x() - s * b.y(), s * b.x() + c * b.y()};
  }
  Vec2 rotateToBody(const Vec2& w) const {
    const double c = std::cos(theta), s = std::sin(theta);
    return {c * w.x() + s * w.y(), -s * w.x() + c * w.y()};
  }
};

/// Wrap an angle into (-pi, pi]. Odd-symmetric: wrap(-a) == -wrap(a).
inline double wrapAngle(double a) {
  const double two_pi = 2.0 * M_PI;
  double r = std::remainder(a, two_pi);
  if (r <= -M_PI) r += two_pi;
  return r;
}

/// Print a warning to stderr at most once per key.
void warnOnce(const std::string& key, const std::string& msg);

}  // namespace stagerl
