#include "stagerl/stage.hpp"

#include <iostream>
#include <mutex>
#include <set>

namespace stagerl {

void warnOnce(const std::string& key, const std::string& msg) {
  static std::mutex mu;
  static std::set<std::string> seen;
  std::lock_guard<std::mutex> lock(mu);
  if (seen.insert(key).second) {
    std::cerr << "[stagerl] warning: " << msg << "\n";
  }
}

bool Region::contains(const Vec2& world_pt, const Pose2& base) const {
  const Vec2 pt = (frame == Frame::kBody) ? base.worldToBody(world_pt) : world_pt;
  return pt.x() >= lo.x() && pt.x() <= hi.x() && pt.y() >= lo.y() &&
         pt.y() <= hi.y();
}

int ContactGoal::numConstrained() const {
  int n = 0;
  for (const auto& [name, req] : requirements) {
    (void)name;
    if (req.kind != ContactRequirement::Kind::kUnconstrained) ++n;
  }
  return n;
}

int StagePlan::maxConstrainedEffectors() const {
  int n = 0;
  for (const auto& stage : stages) {
    n = std::max(n, stage.contact.numConstrained());
  }
  return n;
}

void StagePlan::validate() const {
  if (stages.empty()) throw ConfigError("stage plan must have at least one stage");
  if (dwell_steps < 1) throw ConfigError("dwell_steps must be >= 1");
  for (const auto& stage : stages) {
    for (const auto& [name, req] : stage.contact.requirements) {
      if (req.kind == ContactRequirement::Kind::kInContactWithin &&
          !req.region.valid()) {
        throw ConfigError("invalid region for effector '" + name +
                          "': lo must be <= hi componentwise");
      }
    }
  }
}

ContactEval evaluateContacts(
    const std::map<std::string, ContactObservation>& contacts,
    const ContactGoal& goal, const Pose2& base) {
  ContactEval eval;
  bool all_satisfied = true;
  for (const auto& [name, req] : goal.requirements) {
    if (req.kind == ContactRequirement::Kind::kUnconstrained) continue;
    const auto it = contacts.find(name);
    if (it == contacts.end()) {
      throw ConfigError("contact goal names unknown end effector '" + name + "'");
    }
    const ContactObservation& obs = it->second;
    switch (req.kind) {
      case ContactRequirement::Kind::kInContactWithin:
        if (obs.in_contact) {
          if (req.region.contains(obs.point, base)) {
            ++eval.n_corr;
          } else {
            ++eval.n_wrong;
            all_satisfied = false;
          }
        } else {
          all_satisfied = false;  // not yet in contact: neither count
        }
        break;
      case ContactRequirement::Kind::kAirborne:
        if (obs.in_contact) {
          ++eval.n_wrong;
          all_satisfied = false;
        } else {
          ++eval.n_corr;
        }
        break;
      case ContactRequirement::Kind::kUnconstrained:
        break;
    }
  }
  eval.f_con = all_satisfied;
  return eval;
}

bool evaluateTask(const TaskSnapshot& snapshot, const TaskGoal& goal) {
  switch (goal.kind) {
    case TaskGoal::Kind::kAlways:
      return true;
    case TaskGoal::Kind::kPosture: {
      if (!snapshot.posture_err_rot.has_value()) {
        throw ConfigError("posture task goal needs posture_err_rot in snapshot");
      }
      const double err_pos = snapshot.posture_err_pos.value_or(0.0);
      return std::abs(*snapshot.posture_err_rot) < goal.tol_rot &&
             std::abs(err_pos) < goal.tol_pos;
    }
    case TaskGoal::Kind::kTransport: {
      if (!snapshot.object_dist.has_value()) {
        throw ConfigError("transport task goal needs object_dist in snapshot");
      }
      return *snapshot.object_dist < goal.threshold;
    }
  }
  return false;
}

StageStatus advance(const StageStatus& status, bool f_con, bool f_task,
                    const StagePlan& plan) {
  StageStatus next = status;
  next.f_con = f_con;
  next.f_task = f_task;
  if (status.plan_complete) return next;
  if (f_con && f_task) {
    next.dwell_counter = status.dwell_counter + 1;
    if (next.dwell_counter >= plan.dwell_steps) {
      next.n_stage = status.n_stage + 1;
      next.dwell_counter = 0;
      if (next.n_stage > plan.maxStageIndex()) next.plan_complete = true;
    }
  } else {
    next.dwell_counter = 0;
  }
  return next;
}

}  // namespace stagerl
