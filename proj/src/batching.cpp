#include "fedsim/batching.hpp"

#include <algorithm>
#include <numeric>

#include "fedsim/errors.hpp"

namespace fedsim {

const Tensor& Batch::column(const std::string& name) const {
  auto it = columns.find(name);
  if (it == columns.end()) {
    throw InvalidArgumentError("batch has no column named '" + name + "'");
  }
  return it->second;
}

std::vector<std::size_t> default_buckets(std::size_t batch_size) {
  if (batch_size < 1) {
    throw InvalidArgumentError("batch_size must be >= 1");
  }
  std::vector<std::size_t> buckets;
  for (std::size_t p = 1; p < batch_size; p *= 2) buckets.push_back(p);
  buckets.push_back(batch_size);
  return buckets;
}

BatchSpec BatchSpec::sequential(std::size_t batch_size) {
  BatchSpec s;
  s.batch_size = batch_size;
  return s;
}

BatchSpec BatchSpec::padded(std::size_t batch_size) {
  return padded(batch_size, default_buckets(batch_size));
}

BatchSpec BatchSpec::padded(std::size_t batch_size,
                            std::vector<std::size_t> buckets) {
  BatchSpec s;
  s.batch_size = batch_size;
  s.buckets = std::move(buckets);
  return s;
}

BatchSpec BatchSpec::shuffle_epochs(std::size_t batch_size,
                                    std::size_t num_epochs,
                                    std::string seed_label) {
  BatchSpec s;
  s.batch_size = batch_size;
  s.num_epochs = num_epochs;
  s.seed_label = std::move(seed_label);
  return s;
}

BatchSpec BatchSpec::shuffle_steps(std::size_t batch_size,
                                   std::size_t num_steps,
                                   std::string seed_label) {
  BatchSpec s;
  s.batch_size = batch_size;
  s.num_steps = num_steps;
  s.seed_label = std::move(seed_label);
  return s;
}

namespace {

void require_nonempty(const ClientDataset& ds) {
  if (ds.num_examples() == 0) {
    throw EmptyDatasetError("cannot batch an empty client dataset");
  }
}

void require_batch_size(const BatchSpec& spec) {
  if (spec.batch_size < 1) {
    throw InvalidArgumentError("batch_size must be >= 1");
  }
}

// Rows idx copied into a capacity-sized batch; pad rows stay zero.
Batch gather_rows(const ClientDataset& ds, const std::vector<std::size_t>& idx,
                  std::size_t capacity) {
  Batch b;
  b.num_real = idx.size();
  b.mask.assign(capacity, 0);
  std::fill(b.mask.begin(), b.mask.begin() + idx.size(), 1);
  for (const auto& [name, col] : ds.columns()) {
    std::vector<std::size_t> shape = col.shape();
    shape[0] = capacity;
    Tensor out(std::move(shape));
    const std::size_t w = col.row_size();
    for (std::size_t r = 0; r < idx.size(); ++r) {
      auto src = col.row(idx[r]);
      std::copy(src.begin(), src.end(), out.data().begin() + r * w);
    }
    b.columns.emplace(name, std::move(out));
  }
  return b;
}

std::vector<std::size_t> iota_range(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> v(end - begin);
  std::iota(v.begin(), v.end(), begin);
  return v;
}

class SequentialStream final : public BatchStream {
 public:
  SequentialStream(std::shared_ptr<const ClientDataset> ds, std::size_t b)
      : ds_(std::move(ds)), batch_size_(b) {}

  std::optional<Batch> next() override {
    const std::size_t n = ds_->num_examples();
    if (pos_ >= n) return std::nullopt;
    const std::size_t take = std::min(batch_size_, n - pos_);
    auto idx = iota_range(pos_, pos_ + take);
    pos_ += take;
    return gather_rows(*ds_, idx, take);
  }

 private:
  std::shared_ptr<const ClientDataset> ds_;
  std::size_t batch_size_;
  std::size_t pos_ = 0;
};

class PaddedStream final : public BatchStream {
 public:
  PaddedStream(std::shared_ptr<const ClientDataset> ds, std::size_t b,
               std::vector<std::size_t> buckets)
      : ds_(std::move(ds)), batch_size_(b), buckets_(std::move(buckets)) {}

  std::optional<Batch> next() override {
    const std::size_t n = ds_->num_examples();
    if (pos_ >= n) return std::nullopt;
    const std::size_t take = std::min(batch_size_, n - pos_);
    auto idx = iota_range(pos_, pos_ + take);
    pos_ += take;
    std::size_t capacity = batch_size_;
    if (take < batch_size_) {
      auto it = std::lower_bound(buckets_.begin(), buckets_.end(), take);
      if (it == buckets_.end()) {
        throw NoBucketFitsError("remainder " + std::to_string(take) +
                                " exceeds the largest bucket");
      }
      capacity = *it;
    }
    return gather_rows(*ds_, idx, capacity);
  }

 private:
  std::shared_ptr<const ClientDataset> ds_;
  std::size_t batch_size_;
  std::vector<std::size_t> buckets_;
  std::size_t pos_ = 0;
};

class ShuffleRepeatStream final : public BatchStream {
 public:
  ShuffleRepeatStream(std::shared_ptr<const ClientDataset> ds,
                      const BatchSpec& spec, Rng rng)
      : ds_(std::move(ds)),
        batch_size_(spec.batch_size),
        num_epochs_(spec.num_epochs),
        num_steps_(spec.num_steps),
        rng_(std::move(rng)) {}

  std::optional<Batch> next() override {
    if (num_steps_ > 0 && emitted_ >= num_steps_) return std::nullopt;
    const bool bounded_epochs = num_steps_ == 0;
    while (pending_.size() < batch_size_) {
      if (bounded_epochs && epochs_started_ >= num_epochs_) {
        // Terminal partial remainder (< B examples) is dropped.
        return std::nullopt;
      }
      start_epoch();
    }
    std::vector<std::size_t> idx(pending_.begin(),
                                 pending_.begin() + batch_size_);
    pending_.erase(pending_.begin(), pending_.begin() + batch_size_);
    ++emitted_;
    return gather_rows(*ds_, idx, batch_size_);
  }

 private:
  void start_epoch() {
    const std::size_t n = ds_->num_examples();
    std::vector<std::size_t> perm = iota_range(0, n);
    Rng epoch_rng = rng_.split("epoch:" + std::to_string(epochs_started_));
    for (std::size_t i = n; i > 1; --i) {
      const std::size_t j = epoch_rng.next_below(i);
      std::swap(perm[i - 1], perm[j]);
    }
    pending_.insert(pending_.end(), perm.begin(), perm.end());
    ++epochs_started_;
  }

  std::shared_ptr<const ClientDataset> ds_;
  std::size_t batch_size_;
  std::size_t num_epochs_;
  std::size_t num_steps_;
  Rng rng_;
  std::vector<std::size_t> pending_;
  std::size_t epochs_started_ = 0;
  std::size_t emitted_ = 0;
};

}  // namespace

BatchStreamPtr batch(std::shared_ptr<const ClientDataset> ds,
                     const BatchSpec& spec) {
  require_batch_size(spec);
  require_nonempty(*ds);
  return std::make_unique<SequentialStream>(std::move(ds), spec.batch_size);
}

BatchStreamPtr padded_batch(std::shared_ptr<const ClientDataset> ds,
                            const BatchSpec& spec) {
  require_batch_size(spec);
  require_nonempty(*ds);
  if (spec.buckets.empty()) {
    throw InvalidArgumentError("padded_batch requires nonempty buckets");
  }
  if (!std::is_sorted(spec.buckets.begin(), spec.buckets.end()) ||
      std::adjacent_find(spec.buckets.begin(), spec.buckets.end()) !=
          spec.buckets.end()) {
    throw InvalidArgumentError("buckets must be strictly ascending");
  }
  if (spec.buckets.back() != spec.batch_size) {
    throw InvalidArgumentError(
        "padded_batch requires batch_size to equal the max bucket");
  }
  return std::make_unique<PaddedStream>(std::move(ds), spec.batch_size,
                                        spec.buckets);
}

BatchStreamPtr shuffle_repeat_batch(std::shared_ptr<const ClientDataset> ds,
                                    const BatchSpec& spec, Rng rng) {
  require_batch_size(spec);
  require_nonempty(*ds);
  if ((spec.num_epochs == 0) == (spec.num_steps == 0)) {
    throw InvalidArgumentError(
        "shuffle_repeat_batch requires exactly one of num_epochs/num_steps");
  }
  Rng stream_rng =
      spec.seed_label.empty() ? rng : rng.split(spec.seed_label);
  return std::make_unique<ShuffleRepeatStream>(std::move(ds), spec,
                                               std::move(stream_rng));
}

std::vector<Batch> collect(BatchStreamPtr stream) {
  std::vector<Batch> out;
  while (auto b = stream->next()) out.push_back(std::move(*b));
  return out;
}

std::set<std::size_t> distinct_padded_capacities(const FederatedData& fd,
                                                 const BatchSpec& spec) {
  std::set<std::size_t> caps;
  for (const auto& [id, ds] : fd.clients()) {
    auto stream = padded_batch(
        std::shared_ptr<const ClientDataset>(&ds, [](const ClientDataset*) {}),
        spec);
    while (auto b = stream->next()) caps.insert(b->capacity());
  }
  return caps;
}

}  // namespace fedsim
