#pragma once

#include <map>
#include <string>
#include <vector>

#include "stagerl/common.hpp"

namespace stagerl {

/// All reward weights for one run. reg_weights holds the *enabled*
/// regularization terms only; disabled terms are simply absent and
/// contribute 0. reg_scale is curriculum-controlled and stays in [1, 2].
struct RewardConfig {
  double w_con = 120.0;
  double w_stage = 160.0;
  double w_curi = 20000.0;
  int n_con = 2;
  std::map<std::string, double> reg_weights;
  double reg_scale = 1.0;
  std::map<std::string, double> task_weights;
  double c01 = -1.0;  // <0 means "derive from n_con", see zeroOneCoefficient()

  double zeroOneCoefficient() const {
    return c01 >= 0.0 ? c01 : static_cast<double>(n_con + 2 * n_con * n_con);
  }
  void validate() const;
};

/// Per-step reward decomposition. r_reg stores the unscaled weighted sum of
/// regularization terms; the curriculum scale is applied in the total.
struct RewardBreakdown {
  double r_con = 0.0;
  double r_stage = 0.0;
  double r_curi = 0.0;
  double r_reg = 0.0;
  double r_task = 0.0;
  double r_total = 0.0;
};

/// Dense contact reward: each correct contact pays 1, each wrong contact
/// costs n_con once past the first contact stage, and simultaneous
/// fulfillment of both goals adds 2*n_con^2.
double contactReward(int n_corr, int n_wrong, int n_con, int n_stage,
                     bool f_con, bool f_task);

/// Stage count reward: number of fulfilled stages, gated by the task goal.
double stageCountReward(int n_stage, bool f_task);

/// Sparse 0-1 baseline used by the dense-contact ablation.
double zeroOneReward(bool f_con, bool f_task, double c01);

/// Weighted sum of enabled regularization terms, scaled by reg_scale.
/// `signals` maps term name to the term's raw statistic; an enabled term
/// without a signal is a configuration error.
double regularizationReward(const std::map<std::string, double>& signals,
                            const std::map<std::string, double>& reg_weights,
                            double reg_scale);

/// Posture tracking reward: w * exp(-|err_rot|/pi) * exp(-|err_pos|/1).
double taskRewardPosture(double err_rot, double err_pos, double w_task);

/// Transport task reward: object-to-destination plus hand-approach terms.
/// Angle gates (|theta_dest| < pi/2, |theta_obj| < pi/6) are forced open
/// when angle_gates_enabled is false (single-effector pusher variant).
double taskRewardTransport(double d_obj2dest, double d_left2obj,
                           double d_right2obj, double theta_dest,
                           double theta_obj, int n_stage, double w_box,
                           double w_hand, bool angle_gates_enabled);

struct RewardParts {
  double r_con = 0.0;
  double r_stage = 0.0;
  double r_curi = 0.0;
  double r_reg = 0.0;  // unscaled
  double r_task = 0.0;
};

/// Mix per-term values into the total:
/// r_total = w_con*r_con + w_stage*r_stage + w_curi*r_curi
///           + reg_scale*r_reg + r_task.
RewardBreakdown totalReward(const RewardParts& parts, const RewardConfig& config);

/// Full regularization-term table with default weights. Terms whose signal a
/// given environment cannot provide are left out of RewardConfig.reg_weights.
const std::map<std::string, double>& regTermDefaults();

/// Named weight presets: parkour, loco-mani, dancing, cliffside, plus the
/// toy aliases hopper (= parkour) and pusher (= loco-mani).
struct WeightPreset {
  double w_con;
  double w_stage;
  double w_curi;
};
const std::map<std::string, WeightPreset>& weightPresets();

// Aggregation helpers for the non-trivial regularization statistics. The
// environment evaluates these on its raw physics quantities and reports the
// result as the term's signal.
namespace reg {

/// sum over joints of (tau/tau_lim)^2
double torquesStat(const VecX& torques, const VecX& limits);
/// sum over joints of max(|tau|/tau_lim - 0.95, 0)
double torqueOverlimitStat(const VecX& torques, const VecX& limits);
/// sum over feet of |v|^2 * 1(contact)
double slippageStat(const std::vector<double>& foot_speed_sq,
                    const std::vector<bool>& in_contact);
/// sum over feet that touched down this step of (T_air - 0.5)
double airTimeStat(const std::vector<double>& air_time_at_touchdown);
/// 1 if any foot is in contact
double noFlyStat(const std::vector<bool>& in_contact);

}  // namespace reg

}  // namespace stagerl
