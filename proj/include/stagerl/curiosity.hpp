#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "stagerl/net.hpp"

namespace stagerl {

/// Declared min/max per curiosity-observation component. Inputs outside the
/// range are clamped before normalization (with a one-shot warning).
struct CuriosityRanges {
  VecX lo;
  VecX hi;

  int dim() const { return static_cast<int>(lo.size()); }
  void validate() const;
};

/// Frozen random hash network: one tanh hidden layer, linear outputs whose
/// sign pattern indexes a bucket. Identical seed gives identical weights.
class HashNetwork {
 public:
  HashNetwork() = default;
  HashNetwork(MatX w1, VecX b1, MatX w2, VecX b2);
  static HashNetwork random(uint64_t seed, int input_dim, int hidden_dim = 32,
                            int output_dim = 16);

  VecX forward(const VecX& v) const;
  int inputDim() const { return static_cast<int>(w1_.cols()); }
  int outputDim() const { return static_cast<int>(w2_.rows()); }
  uint64_t seed() const { return seed_; }

  const MatX& w1() const { return w1_; }
  const VecX& b1() const { return b1_; }
  const MatX& w2() const { return w2_; }
  const VecX& b2() const { return b2_; }

 private:
  MatX w1_;
  VecX b1_;
  MatX w2_;
  VecX b2_;
  uint64_t seed_ = 0;
};

/// Bucket-id -> visit-count table over 2^bits buckets. Counts only grow;
/// the sum of counts equals the number of recorded observations.
class VisitTable {
 public:
  explicit VisitTable(int bits = 16);

  uint64_t record(uint32_t bucket);  // returns count after the increment
  uint64_t count(uint32_t bucket) const;
  uint64_t total() const { return total_; }
  int bits() const { return bits_; }
  size_t numBuckets() const { return counts_.size(); }

  /// Nonzero (bucket, count) pairs sorted by bucket id, for checkpoints.
  std::vector<std::pair<uint32_t, uint64_t>> nonzeroEntries() const;
  void restore(const std::vector<std::pair<uint32_t, uint64_t>>& entries);

 private:
  int bits_;
  std::vector<uint64_t> counts_;
  uint64_t total_ = 0;
};

/// Normalize a raw curiosity observation.
///  method 1: componentwise affine map into [0, 1]
///  method 2: affine map into [0, pi], then per-component (sin, cos) pairs
///  method 3: method 2 output multiplied by (n_stage + 1)
VecX preprocessCuriosity(const VecX& obs, int method,
                         const CuriosityRanges& ranges, int n_stage);

int preprocessedDim(int raw_dim, int method);

/// Hash a preprocessed vector: forward pass, compare outputs > 0, interpret
/// the boolean array as a binary number with the first output as the most
/// significant bit.
uint32_t bucketId(const VecX& v, const HashNetwork& net);

/// 1/sqrt(visits of the vector's bucket). With record=true the visit is
/// counted first, so the first visit returns exactly 1. With record=false a
/// never-visited bucket also returns 1.
double curiosityReward(const VecX& v, const HashNetwork& net, VisitTable& table,
                       bool record);

/// Average of the curiosity rewards of an observation and its left-right
/// mirror, both preprocessed and both recorded.
double symmetricCuriosity(const VecX& obs, const VecX& mirrored_obs, int method,
                          const CuriosityRanges& ranges, int n_stage,
                          const HashNetwork& net, VisitTable& table);

/// Random network distillation baseline: a frozen target and a trained
/// predictor; the bonus is the squared prediction error.
class RndModule {
 public:
  RndModule() = default;
  RndModule(uint64_t seed, int input_dim, int hidden_dim = 32,
            int output_dim = 16, double learning_rate = 1e-3);

  double bonus(const VecX& v) const;
  /// One Adam step minimizing the prediction MSE on the batch (rows are
  /// preprocessed observations). Returns the pre-step mean loss.
  double update(const MatX& batch);

  void copyTargetToPredictor();
  const Mlp& target() const { return target_; }
  const Mlp& predictor() const { return predictor_; }

 private:
  Mlp target_;
  Mlp predictor_;
  Adam opt_;
};

}  // namespace stagerl
