#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fedsim/federated_data.hpp"
#include "fedsim/rng.hpp"
#include "fedsim/tensor.hpp"

namespace fedsim {

// Fixed-shape slice of a client dataset. The mask has exactly num_real
// leading trues; padded rows are zero-filled and must never influence a
// result (masks, not pad values, carry correctness).
struct Batch {
  std::map<std::string, Tensor> columns;
  std::vector<std::uint8_t> mask;
  std::size_t num_real = 0;

  std::size_t capacity() const { return mask.size(); }
  const Tensor& column(const std::string& name) const;
};

// Powers of two from 1 up to batch_size, plus batch_size itself. Bounds the
// bucket count at ceil(log2(B)) + 1 while keeping worst-case padding waste
// under 2x.
std::vector<std::size_t> default_buckets(std::size_t batch_size);

struct BatchSpec {
  std::size_t batch_size = 1;
  // Padded mode: sorted ascending, batch_size must equal the max bucket.
  std::vector<std::size_t> buckets;
  // Shuffled mode: optional extra fold-in applied to the stream rng.
  std::string seed_label;
  // Repeat mode: exactly one of num_epochs / num_steps is set.
  std::size_t num_epochs = 0;
  std::size_t num_steps = 0;

  static BatchSpec sequential(std::size_t batch_size);
  static BatchSpec padded(std::size_t batch_size);
  static BatchSpec padded(std::size_t batch_size,
                          std::vector<std::size_t> buckets);
  static BatchSpec shuffle_epochs(std::size_t batch_size,
                                  std::size_t num_epochs,
                                  std::string seed_label = "");
  static BatchSpec shuffle_steps(std::size_t batch_size,
                                 std::size_t num_steps,
                                 std::string seed_label = "");

  bool operator==(const BatchSpec&) const = default;
};

// Single-consumer lazy stream of batches; cheap to create per worker thread.
class BatchStream {
 public:
  virtual ~BatchStream() = default;
  virtual std::optional<Batch> next() = 0;
};

using BatchStreamPtr = std::unique_ptr<BatchStream>;

// Dataset order, no padding; the final batch keeps its natural (smaller)
// capacity. Masks are all-true.
BatchStreamPtr batch(std::shared_ptr<const ClientDataset> ds,
                     const BatchSpec& spec);

// Dataset order for evaluation; a final remainder r > 0 is padded up to the
// smallest bucket >= r with the mask marking the r real rows. The set of
// emitted capacities is a subset of spec.buckets.
BatchStreamPtr padded_batch(std::shared_ptr<const ClientDataset> ds,
                            const BatchSpec& spec);

// Shuffled-without-replacement, repeated stream of constant-capacity batches
// for training. Leftover examples at an epoch boundary are carried into the
// next batch ahead of the next epoch's shuffle; only the stream's final
// partial remainder is dropped (epoch mode). Step mode ends after exactly
// num_steps batches.
BatchStreamPtr shuffle_repeat_batch(std::shared_ptr<const ClientDataset> ds,
                                    const BatchSpec& spec, Rng rng);

// Drains a stream. Test and tooling convenience.
std::vector<Batch> collect(BatchStreamPtr stream);

// Distinct capacities emitted by padded_batch across all clients; the
// artifact's proxy for the number of distinct batch shapes a JIT would see.
std::set<std::size_t> distinct_padded_capacities(const FederatedData& fd,
                                                 const BatchSpec& spec);

}  // namespace fedsim
