#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace camreid {

// One target-domain feature vector plus its acquisition metadata. The label
// is ground truth for evaluation only; the adaptation stages never read it.
struct Sample {
  std::string id;
  int camera = 0;
  std::optional<std::string> label;
};

// Ordered collection of samples with a contiguous row-major feature block.
// Immutable after construction; safe to share across threads.
class EmbeddingSet {
 public:
  EmbeddingSet() = default;
  EmbeddingSet(std::vector<Sample> samples, std::vector<double> features,
               std::size_t dim, bool normalized);

  std::size_t size() const { return samples_.size(); }
  std::size_t dim() const { return dim_; }
  bool normalized() const { return normalized_; }
  bool empty() const { return samples_.empty(); }

  const Sample& sample(std::size_t i) const { return samples_[i]; }
  const std::vector<Sample>& samples() const { return samples_; }
  std::span<const double> feature(std::size_t i) const {
    return {features_.data() + i * dim_, dim_};
  }
  const std::vector<double>& features() const { return features_; }

  // New set containing the given rows, in the given order.
  EmbeddingSet subset(std::span<const std::size_t> indices) const;

 private:
  std::vector<Sample> samples_;
  std::vector<double> features_;
  std::size_t dim_ = 0;
  bool normalized_ = false;
};

// Keeps the first sample (input order) of every group of near-identical
// vectors: a sample is dropped when it lies within epsilon of an already
// retained one. Identity when epsilon rejects nothing.
EmbeddingSet deduplicate(const EmbeddingSet& set, double epsilon);

// Scales every feature to unit Euclidean norm. Throws if any feature has
// zero norm (the sample id is named in the message).
EmbeddingSet l2_normalize(const EmbeddingSet& set);

}  // namespace camreid
