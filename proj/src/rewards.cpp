#include "stagerl/rewards.hpp"

#include <cmath>

namespace stagerl {

void RewardConfig::validate() const {
  if (n_con < 1) throw ConfigError("n_con must be >= 1");
  if (w_con < 0.0 || w_stage < 0.0 || w_curi < 0.0) {
    throw ConfigError("reward weights must be non-negative");
  }
  if (reg_scale < 1.0 || reg_scale > 2.0) {
    throw ConfigError("reg_scale must lie in [1, 2]");
  }
}

double contactReward(int n_corr, int n_wrong, int n_con, int n_stage,
                     bool f_con, bool f_task) {
  const double penalty = (n_stage > 0) ? static_cast<double>(n_con * n_wrong) : 0.0;
  const double bonus =
      (f_con && f_task) ? 2.0 * static_cast<double>(n_con) * n_con : 0.0;
  return static_cast<double>(n_corr) - penalty + bonus;
}

double stageCountReward(int n_stage, bool f_task) {
  return f_task ? static_cast<double>(n_stage) : 0.0;
}

double zeroOneReward(bool f_con, bool f_task, double c01) {
  return (f_con && f_task) ? c01 : 0.0;
}

double regularizationReward(const std::map<std::string, double>& signals,
                            const std::map<std::string, double>& reg_weights,
                            double reg_scale) {
  double sum = 0.0;
  for (const auto& [term, weight] : reg_weights) {
    const auto it = signals.find(term);
    if (it == signals.end()) {
      throw ConfigError("regularization term '" + term +
                        "' is enabled but the environment provides no signal");
    }
    sum += reg_scale * weight * it->second;
  }
  return sum;
}

double taskRewardPosture(double err_rot, double err_pos, double w_task) {
  return w_task * std::exp(-std::abs(err_rot) / M_PI) * std::exp(-std::abs(err_pos));
}

double taskRewardTransport(double d_obj2dest, double d_left2obj,
                           double d_right2obj, double theta_dest,
                           double theta_obj, int n_stage, double w_box,
                           double w_hand, bool angle_gates_enabled) {
  const bool gate_dest = !angle_gates_enabled || std::abs(theta_dest) < M_PI / 2.0;
  const bool gate_obj = !angle_gates_enabled || std::abs(theta_obj) < M_PI / 6.0;
  double r = 0.0;
  if (n_stage > 0 && gate_dest) r += w_box * std::exp(-d_obj2dest);
  if (gate_obj) r += w_hand * std::exp(-0.5 * (d_left2obj + d_right2obj));
  return r;
}

RewardBreakdown totalReward(const RewardParts& parts, const RewardConfig& config) {
  RewardBreakdown b;
  b.r_con = parts.r_con;
  b.r_stage = parts.r_stage;
  b.r_curi = parts.r_curi;
  b.r_reg = parts.r_reg;
  b.r_task = parts.r_task;
  b.r_total = config.w_con * b.r_con + config.w_stage * b.r_stage +
              config.w_curi * b.r_curi + config.reg_scale * b.r_reg + b.r_task;
  return b;
}

const std::map<std::string, double>& regTermDefaults() {
  static const std::map<std::string, double> kDefaults = {
      {"yaw_rate", -0.1},
      {"torques", -0.5},
      {"torque_overlimit", -500.0},
      {"dof_acceleration", -0.000005},
      {"dof_velocities", -0.003},
      {"action_rate", -250.0},
      {"termination", -200.0},
      {"foot_contact_forces", -0.005},
      {"foot_orientation", -50.0},
      {"stumble", -100.0},
      {"slippage", -5.0},
      {"feet_air_time", 20.0},
      {"no_fly", 10.0},
  };
  return kDefaults;
}

const std::map<std::string, WeightPreset>& weightPresets() {
  static const std::map<std::string, WeightPreset> kPresets = {
      {"parkour", {120.0, 160.0, 20000.0}},
      {"loco-mani", {40.0, 160.0, 40000.0}},
      {"dancing", {10.0, 5.0, 5000.0}},
      {"cliffside", {20.0, 40.0, 10000.0}},
      {"hopper", {120.0, 160.0, 20000.0}},
      {"pusher", {40.0, 160.0, 40000.0}},
  };
  return kPresets;
}

namespace reg {

double torquesStat(const VecX& torques, const VecX& limits) {
  if (torques.size() != limits.size()) {
    throw FaultError("torquesStat: size mismatch");
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < torques.size(); ++i) {
    const double r = torques[i] / limits[i];
    sum += r * r;
  }
  return sum;
}

double torqueOverlimitStat(const VecX& torques, const VecX& limits) {
  if (torques.size() != limits.size()) {
    throw FaultError("torqueOverlimitStat: size mismatch");
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < torques.size(); ++i) {
    sum += std::max(std::abs(torques[i]) / limits[i] - 0.95, 0.0);
  }
  return sum;
}

double slippageStat(const std::vector<double>& foot_speed_sq,
                    const std::vector<bool>& in_contact) {
  if (foot_speed_sq.size() != in_contact.size()) {
    throw FaultError("slippageStat: size mismatch");
  }
  double sum = 0.0;
  for (size_t i = 0; i < foot_speed_sq.size(); ++i) {
    if (in_contact[i]) sum += foot_speed_sq[i];
  }
  return sum;
}

double airTimeStat(const std::vector<double>& air_time_at_touchdown) {
  double sum = 0.0;
  for (double t : air_time_at_touchdown) sum += t - 0.5;
  return sum;
}

double noFlyStat(const std::vector<bool>& in_contact) {
  for (bool c : in_contact) {
    if (c) return 1.0;
  }
  return 0.0;
}

}  // namespace reg

}  // namespace stagerl
