#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fedsim/batching.hpp"
#include "fedsim/federated_data.hpp"
#include "fedsim/param_tree.hpp"
#include "fedsim/rng.hpp"

namespace fedsim {

// A model reads the feature column "x" and the target column "y" from a
// batch. grad() is the exact gradient of the mean of per_example_loss over
// the masked rows; padded rows never influence loss or grad.
class Model {
 public:
  virtual ~Model() = default;

  virtual ParamTree init(Rng rng) const = 0;

  // Per-example outputs: predictions [capacity] for regression, logits
  // [capacity, num_classes] for classifiers. Rows past num_real are computed
  // from pad contents and must be ignored by callers.
  virtual Tensor apply(const ParamTree& params, const Batch& batch) const = 0;

  // Per-example losses, length = batch capacity.
  virtual Tensor per_example_loss(const ParamTree& params,
                                  const Batch& batch) const = 0;

  // Gradient of mean-over-masked-examples of per_example_loss.
  virtual ParamTree grad(const ParamTree& params, const Batch& batch) const = 0;
};

using ModelPtr = std::shared_ptr<const Model>;

// Mean of per_example_loss over the masked rows.
double masked_mean_loss(const Model& model, const ParamTree& params,
                        const Batch& batch);

// Sum of per-example losses over masked rows, plus the masked count.
std::pair<double, double> masked_loss_sum(const Model& model,
                                          const ParamTree& params,
                                          const Batch& batch);

// Defined on a single example; batch/client/population values are
// weight-averaged from example values.
struct Metric {
  std::string name;
  // (value, weight) for one example. `prediction` is the example's row of
  // apply() output.
  std::function<std::pair<double, double>(std::span<const double> prediction,
                                          double target)>
      evaluate_example;
};

// Fraction of examples whose argmax logit equals the target class. Ties go
// to the lowest index.
Metric accuracy_metric();
// Squared error of a scalar prediction.
Metric mse_metric();

struct MetricReport {
  std::map<ClientId, std::map<std::string, double>> per_client;
  std::map<std::string, double> overall;
  std::map<ClientId, std::size_t> example_counts;
};

// Evaluates each client separately over padded batches (masked rows only)
// and combines per-client values into example-weighted overall values.
MetricReport evaluate(const Model& model, const ParamTree& params,
                      const FederatedData& fd,
                      const std::vector<Metric>& metrics,
                      const BatchSpec& spec);

enum class Activation { kTanh, kRelu, kIdentity };

Activation activation_from_name(const std::string& name);
std::string activation_name(Activation a);

// Least-squares linear predictor. Params are a bare leaf weight vector, or
// Branch{w, b} when with_bias is set.
ModelPtr linear_regression_model(std::size_t num_features,
                                 bool with_bias = false);

// Softmax cross-entropy classifier with params Branch{w: [classes,
// features], b: [classes]}.
ModelPtr logistic_classifier_model(std::size_t num_features,
                                   std::size_t num_classes);

// Dense layers with an activation between them and a softmax cross-entropy
// head. layer_sizes runs input..output and needs at least one hidden layer.
// Params: Branch{layer_i: Branch{w, b}}.
ModelPtr mlp_model(const std::vector<std::size_t>& layer_sizes,
                   Activation activation = Activation::kTanh);

}  // namespace fedsim
