#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stagerl/common.hpp"

namespace stagerl {

enum class Frame { kWorld, kBody };

/// Axis-aligned rectangle, expressed in the world or the agent base frame.
/// Body-frame regions are resolved against the base pose before containment
/// tests, so a world point is first mapped into the base frame.
struct Region {
  Frame frame = Frame::kWorld;
  Vec2 lo{0.0, 0.0};
  Vec2 hi{0.0, 0.0};

  bool valid() const { return lo.x() <= hi.x() && lo.y() <= hi.y(); }
  bool contains(const Vec2& world_pt, const Pose2& base) const;
  Vec2 center() const { return 0.5 * (lo + hi); }
};

/// Per-effector contact requirement for one stage. Exactly one variant.
struct ContactRequirement {
  enum class Kind { kInContactWithin, kAirborne, kUnconstrained };
  Kind kind = Kind::kUnconstrained;
  Region region;  // only meaningful for kInContactWithin

  static ContactRequirement inContactWithin(const Region& r) {
    return {Kind::kInContactWithin, r};
  }
  static ContactRequirement airborne() { return {Kind::kAirborne, {}}; }
  static ContactRequirement unconstrained() { return {Kind::kUnconstrained, {}}; }
};

/// Contact goal of one stage: requirement per end effector.
struct ContactGoal {
  std::map<std::string, ContactRequirement> requirements;

  int numConstrained() const;
};

/// Additional stage predicate beyond contacts.
struct TaskGoal {
  enum class Kind { kPosture, kTransport, kAlways };
  Kind kind = Kind::kAlways;
  // posture
  double target_rot = 0.0;
  double tol_rot = 0.2;
  double tol_pos = 1e9;
  // transport
  double threshold = 0.1;

  static TaskGoal always() { return {}; }
  static TaskGoal posture(double target, double tol) {
    TaskGoal g;
    g.kind = Kind::kPosture;
    g.target_rot = target;
    g.tol_rot = tol;
    return g;
  }
  static TaskGoal transport(double threshold) {
    TaskGoal g;
    g.kind = Kind::kTransport;
    g.threshold = threshold;
    return g;
  }
};

struct Stage {
  ContactGoal contact;
  TaskGoal task;
};

/// Ordered contact-stage plan. Stages are indexed 0..I; the plan is complete
/// once n_stage exceeds I. Goal lookups past the end are padded with the
/// final stage so observation builders can always ask for future stages.
struct StagePlan {
  std::vector<Stage> stages;
  int dwell_steps = 5;

  int length() const { return static_cast<int>(stages.size()); }
  int maxStageIndex() const { return length() - 1; }
  const Stage& stageAt(int n) const {
    if (stages.empty()) throw ConfigError("stage plan is empty");
    const int i = std::min(std::max(n, 0), maxStageIndex());
    return stages[static_cast<size_t>(i)];
  }
  /// Maximal number of effectors with a non-unconstrained requirement in any
  /// single stage of the plan.
  int maxConstrainedEffectors() const;
  void validate() const;
};

/// Per-episode stage bookkeeping.
struct StageStatus {
  int n_stage = 0;
  bool f_con = false;
  bool f_task = false;
  int n_corr = 0;
  int n_wrong = 0;
  int dwell_counter = 0;
  bool plan_complete = false;
};

/// Observed contact of one end effector at the current step.
struct ContactObservation {
  bool in_contact = false;
  Vec2 point{0.0, 0.0};  // world frame, meaningful only when in_contact
};

struct ContactEval {
  bool f_con = false;
  int n_corr = 0;
  int n_wrong = 0;
};

/// Classify every effector named by the goal against its observed contact.
///
/// correct: in contact inside the goal region, or contact-free while airborne
///          is required;
/// wrong:   any contact that violates the requirement (contact outside the
///          region, or any contact when airborne is required).
/// An effector that is merely not yet in contact when a region is required
/// counts as neither. Unconstrained effectors contribute to neither count.
ContactEval evaluateContacts(
    const std::map<std::string, ContactObservation>& contacts,
    const ContactGoal& goal, const Pose2& base);

/// Snapshot of the environment quantities task goals may test.
struct TaskSnapshot {
  std::optional<double> posture_err_rot;
  std::optional<double> posture_err_pos;
  std::optional<double> object_dist;
};

bool evaluateTask(const TaskSnapshot& snapshot, const TaskGoal& goal);

/// One bookkeeping step: counts consecutive fulfilled steps and advances the
/// stage once the dwell requirement is met. Any unfulfilled step resets the
/// dwell counter.
StageStatus advance(const StageStatus& status, bool f_con, bool f_task,
                    const StagePlan& plan);

}  // namespace stagerl
