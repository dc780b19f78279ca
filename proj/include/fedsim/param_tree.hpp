#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fedsim/tensor.hpp"

namespace fedsim {

// Nested named structure of tensors. A node is either a leaf tensor or a
// branch of uniquely named children; branch iteration follows insertion
// order, so traversal is deterministic.
class ParamTree {
 public:
  using Entry = std::pair<std::string, ParamTree>;

  ParamTree() : node_(std::vector<Entry>{}) {}

  static ParamTree leaf(Tensor t);
  static ParamTree branch();
  static ParamTree branch(std::vector<Entry> entries);

  bool is_leaf() const { return std::holds_alternative<Tensor>(node_); }

  const Tensor& tensor() const;
  Tensor& tensor();

  const std::vector<Entry>& entries() const;
  std::vector<Entry>& entries();

  bool has_child(std::string_view name) const;
  const ParamTree& child(std::string_view name) const;
  ParamTree& child(std::string_view name);

  // Appends a child; the name must not already exist.
  void set(std::string name, ParamTree sub);

  std::size_t num_elements() const;

  bool operator==(const ParamTree& other) const;

 private:
  std::variant<Tensor, std::vector<Entry>> node_;
};

// True iff same branch structure, same keys in the same order, same leaf
// shapes.
bool congruent(const ParamTree& a, const ParamTree& b);

// Congruent tree with every leaf element replaced by f(element).
ParamTree tree_map(const std::function<double(double)>& f, const ParamTree& t);

// Congruent tree of f(a_i, b_i). Throws IncongruentTreesError on any
// structure or shape mismatch, with the path of the mismatch.
ParamTree tree_zip_map(const std::function<double(double, double)>& f,
                       const ParamTree& a, const ParamTree& b);

// Sum of weight_i * tree_i accumulated left to right in list order, which
// makes the result bit-reproducible run to run.
ParamTree tree_weighted_sum(
    const std::vector<std::pair<ParamTree, double>>& terms);

ParamTree zeros_like(const ParamTree& t);
ParamTree tree_add(const ParamTree& a, const ParamTree& b);
ParamTree tree_sub(const ParamTree& a, const ParamTree& b);
ParamTree tree_scale(const ParamTree& t, double s);

bool tree_all_finite(const ParamTree& t);

// Global l2 norm over all leaf elements.
double tree_l2_norm(const ParamTree& t);

// Global (min, max) over all leaf elements. Throws on an all-branch tree
// with no leaves.
std::pair<double, double> tree_min_max(const ParamTree& t);

// Depth-first visit of leaves; path components joined with '/'.
void for_each_leaf(
    const ParamTree& t,
    const std::function<void(const std::string& path, const Tensor&)>& fn);

}  // namespace fedsim
