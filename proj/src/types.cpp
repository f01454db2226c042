#include "camreid/types.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace camreid {

EmbeddingSet::EmbeddingSet(std::vector<Sample> samples,
                           std::vector<double> features, std::size_t dim,
                           bool normalized)
    : samples_(std::move(samples)),
      features_(std::move(features)),
      dim_(dim),
      normalized_(normalized) {
  if (features_.size() != samples_.size() * dim_) {
    throw std::invalid_argument("embedding set: feature block size " +
                                std::to_string(features_.size()) +
                                " does not match " +
                                std::to_string(samples_.size()) + " x " +
                                std::to_string(dim_));
  }
  std::unordered_set<std::string> seen;
  seen.reserve(samples_.size());
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (samples_[i].camera < 0) {
      throw std::invalid_argument("sample '" + samples_[i].id +
                                  "': negative camera id");
    }
    if (!seen.insert(samples_[i].id).second) {
      throw std::invalid_argument("duplicate sample_id '" + samples_[i].id +
                                  "'");
    }
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    double sq = 0.0;
    for (std::size_t d = 0; d < dim_; ++d) {
      const double v = features_[i * dim_ + d];
      if (!std::isfinite(v)) {
        throw std::invalid_argument("sample '" + samples_[i].id +
                                    "': non-finite feature component");
      }
      sq += v * v;
    }
    if (normalized_ && std::fabs(std::sqrt(sq) - 1.0) > 1e-6) {
      throw std::invalid_argument("sample '" + samples_[i].id +
                                  "': marked normalized but norm is " +
                                  std::to_string(std::sqrt(sq)));
    }
  }
}

EmbeddingSet EmbeddingSet::subset(std::span<const std::size_t> indices) const {
  std::vector<Sample> samples;
  std::vector<double> features;
  samples.reserve(indices.size());
  features.reserve(indices.size() * dim_);
  for (const std::size_t i : indices) {
    samples.push_back(samples_[i]);
    const auto f = feature(i);
    features.insert(features.end(), f.begin(), f.end());
  }
  return EmbeddingSet(std::move(samples), std::move(features), dim_,
                      normalized_);
}

namespace {

double sq_distance(std::span<const double> a, std::span<const double> b) {
  double sq = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) {
    const double diff = a[d] - b[d];
    sq += diff * diff;
  }
  return sq;
}

}  // namespace

EmbeddingSet deduplicate(const EmbeddingSet& set, double epsilon) {
  if (set.empty()) {
    throw std::invalid_argument("deduplicate: empty embedding set");
  }
  if (epsilon < 0.0) {
    throw std::invalid_argument("deduplicate: negative epsilon");
  }
  const double eps_sq = epsilon * epsilon;
  std::vector<std::size_t> kept;
  kept.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    bool duplicate = false;
    for (const std::size_t j : kept) {
      if (sq_distance(set.feature(i), set.feature(j)) <= eps_sq) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) kept.push_back(i);
  }
  if (kept.size() == set.size()) return set;
  return set.subset(kept);
}

EmbeddingSet l2_normalize(const EmbeddingSet& set) {
  std::vector<double> features = set.features();
  const std::size_t dim = set.dim();
  for (std::size_t i = 0; i < set.size(); ++i) {
    double sq = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
      sq += features[i * dim + d] * features[i * dim + d];
    }
    const double norm = std::sqrt(sq);
    if (norm == 0.0) {
      throw std::runtime_error("zero-norm feature for sample '" +
                               set.sample(i).id + "'");
    }
    for (std::size_t d = 0; d < dim; ++d) {
      features[i * dim + d] /= norm;
    }
  }
  return EmbeddingSet(set.samples(), std::move(features), dim, true);
}

}  // namespace camreid
