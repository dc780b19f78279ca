#include "fedsim/param_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fedsim/errors.hpp"

namespace fedsim {

namespace {

[[noreturn]] void throw_incongruent(const std::string& path,
                                    const std::string& why) {
  throw IncongruentTreesError("incongruent trees at '" +
                              (path.empty() ? "<root>" : path) + "': " + why);
}

void check_finite_leaf(const Tensor& t) {
  if (!t.all_finite()) {
    throw NonFiniteError("tree operation produced non-finite elements");
  }
}

}  // namespace

ParamTree ParamTree::leaf(Tensor t) {
  ParamTree p;
  p.node_ = std::move(t);
  return p;
}

ParamTree ParamTree::branch() { return ParamTree(); }

ParamTree ParamTree::branch(std::vector<Entry> entries) {
  ParamTree p;
  p.node_ = std::vector<Entry>{};
  for (auto& [name, sub] : entries) {
    p.set(std::move(name), std::move(sub));
  }
  return p;
}

const Tensor& ParamTree::tensor() const {
  if (!is_leaf()) throw InvalidArgumentError("tensor() called on a branch");
  return std::get<Tensor>(node_);
}

Tensor& ParamTree::tensor() {
  if (!is_leaf()) throw InvalidArgumentError("tensor() called on a branch");
  return std::get<Tensor>(node_);
}

const std::vector<ParamTree::Entry>& ParamTree::entries() const {
  if (is_leaf()) throw InvalidArgumentError("entries() called on a leaf");
  return std::get<std::vector<Entry>>(node_);
}

std::vector<ParamTree::Entry>& ParamTree::entries() {
  if (is_leaf()) throw InvalidArgumentError("entries() called on a leaf");
  return std::get<std::vector<Entry>>(node_);
}

bool ParamTree::has_child(std::string_view name) const {
  if (is_leaf()) return false;
  for (const auto& [k, v] : entries()) {
    if (k == name) return true;
  }
  return false;
}

const ParamTree& ParamTree::child(std::string_view name) const {
  for (const auto& [k, v] : entries()) {
    if (k == name) return v;
  }
  throw InvalidArgumentError("no child named '" + std::string(name) + "'");
}

ParamTree& ParamTree::child(std::string_view name) {
  for (auto& [k, v] : entries()) {
    if (k == name) return v;
  }
  throw InvalidArgumentError("no child named '" + std::string(name) + "'");
}

void ParamTree::set(std::string name, ParamTree sub) {
  auto& es = entries();
  for (const auto& [k, v] : es) {
    if (k == name) {
      throw InvalidArgumentError("duplicate branch key '" + name + "'");
    }
  }
  es.emplace_back(std::move(name), std::move(sub));
}

std::size_t ParamTree::num_elements() const {
  if (is_leaf()) return tensor().size();
  std::size_t n = 0;
  for (const auto& [k, v] : entries()) n += v.num_elements();
  return n;
}

bool ParamTree::operator==(const ParamTree& other) const {
  if (is_leaf() != other.is_leaf()) return false;
  if (is_leaf()) return tensor() == other.tensor();
  const auto& a = entries();
  const auto& b = other.entries();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].first != b[i].first || !(a[i].second == b[i].second)) return false;
  }
  return true;
}

namespace {

bool congruent_impl(const ParamTree& a, const ParamTree& b) {
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.tensor().same_shape(b.tensor());
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  if (ea.size() != eb.size()) return false;
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i].first != eb[i].first) return false;
    if (!congruent_impl(ea[i].second, eb[i].second)) return false;
  }
  return true;
}

ParamTree zip_impl(const std::function<double(double, double)>& f,
                   const ParamTree& a, const ParamTree& b,
                   const std::string& path) {
  if (a.is_leaf() != b.is_leaf()) {
    throw_incongruent(path, "leaf paired with branch");
  }
  if (a.is_leaf()) {
    const Tensor& ta = a.tensor();
    const Tensor& tb = b.tensor();
    if (!ta.same_shape(tb)) {
      throw_incongruent(path, "leaf shapes " + ta.shape_str() + " vs " +
                                  tb.shape_str());
    }
    Tensor out(ta.shape());
    for (std::size_t i = 0; i < ta.size(); ++i) out[i] = f(ta[i], tb[i]);
    check_finite_leaf(out);
    return ParamTree::leaf(std::move(out));
  }
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  if (ea.size() != eb.size()) {
    throw_incongruent(path, "branch sizes " + std::to_string(ea.size()) +
                                " vs " + std::to_string(eb.size()));
  }
  ParamTree out = ParamTree::branch();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i].first != eb[i].first) {
      throw_incongruent(path, "keys '" + ea[i].first + "' vs '" +
                                  eb[i].first + "'");
    }
    out.set(ea[i].first,
            zip_impl(f, ea[i].second, eb[i].second,
                     path.empty() ? ea[i].first : path + "/" + ea[i].first));
  }
  return out;
}

}  // namespace

bool congruent(const ParamTree& a, const ParamTree& b) {
  return congruent_impl(a, b);
}

ParamTree tree_map(const std::function<double(double)>& f,
                   const ParamTree& t) {
  if (t.is_leaf()) {
    const Tensor& src = t.tensor();
    Tensor out(src.shape());
    for (std::size_t i = 0; i < src.size(); ++i) out[i] = f(src[i]);
    check_finite_leaf(out);
    return ParamTree::leaf(std::move(out));
  }
  ParamTree out = ParamTree::branch();
  for (const auto& [k, v] : t.entries()) out.set(k, tree_map(f, v));
  return out;
}

ParamTree tree_zip_map(const std::function<double(double, double)>& f,
                       const ParamTree& a, const ParamTree& b) {
  return zip_impl(f, a, b, "");
}

namespace {

// result += w * t, elementwise, recursing in entry order.
void accumulate_scaled(ParamTree& result, const ParamTree& t, double w,
                       const std::string& path) {
  if (result.is_leaf() != t.is_leaf()) {
    throw_incongruent(path, "leaf paired with branch");
  }
  if (result.is_leaf()) {
    Tensor& acc = result.tensor();
    const Tensor& src = t.tensor();
    if (!acc.same_shape(src)) {
      throw_incongruent(path, "leaf shapes " + acc.shape_str() + " vs " +
                                  src.shape_str());
    }
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w * src[i];
    return;
  }
  auto& er = result.entries();
  const auto& et = t.entries();
  if (er.size() != et.size()) {
    throw_incongruent(path, "branch sizes differ");
  }
  for (std::size_t i = 0; i < er.size(); ++i) {
    if (er[i].first != et[i].first) {
      throw_incongruent(path, "keys '" + er[i].first + "' vs '" +
                                  et[i].first + "'");
    }
    accumulate_scaled(er[i].second, et[i].second, w,
                      path.empty() ? er[i].first
                                   : path + "/" + er[i].first);
  }
}

}  // namespace

ParamTree tree_weighted_sum(
    const std::vector<std::pair<ParamTree, double>>& terms) {
  if (terms.empty()) {
    throw EmptyTermListError("tree_weighted_sum requires at least one term");
  }
  const double w0 = terms[0].second;
  ParamTree acc = tree_map([w0](double x) { return w0 * x; }, terms[0].first);
  for (std::size_t i = 1; i < terms.size(); ++i) {
    accumulate_scaled(acc, terms[i].first, terms[i].second, "");
  }
  if (!tree_all_finite(acc)) {
    throw NonFiniteError("tree_weighted_sum produced non-finite elements");
  }
  return acc;
}

ParamTree zeros_like(const ParamTree& t) {
  return tree_map([](double) { return 0.0; }, t);
}

ParamTree tree_add(const ParamTree& a, const ParamTree& b) {
  return tree_zip_map([](double x, double y) { return x + y; }, a, b);
}

ParamTree tree_sub(const ParamTree& a, const ParamTree& b) {
  return tree_zip_map([](double x, double y) { return x - y; }, a, b);
}

ParamTree tree_scale(const ParamTree& t, double s) {
  return tree_map([s](double x) { return s * x; }, t);
}

bool tree_all_finite(const ParamTree& t) {
  if (t.is_leaf()) return t.tensor().all_finite();
  for (const auto& [k, v] : t.entries()) {
    if (!tree_all_finite(v)) return false;
  }
  return true;
}

double tree_l2_norm(const ParamTree& t) {
  double sumsq = 0.0;
  for_each_leaf(t, [&](const std::string&, const Tensor& leaf) {
    for (double v : leaf.data()) sumsq += v * v;
  });
  return std::sqrt(sumsq);
}

std::pair<double, double> tree_min_max(const ParamTree& t) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  std::size_t seen = 0;
  for_each_leaf(t, [&](const std::string&, const Tensor& leaf) {
    for (double v : leaf.data()) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      ++seen;
    }
  });
  if (seen == 0) {
    throw InvalidArgumentError("tree_min_max on a tree with no elements");
  }
  return {lo, hi};
}

namespace {

void visit_leaves(
    const ParamTree& t, const std::string& path,
    const std::function<void(const std::string&, const Tensor&)>& fn) {
  if (t.is_leaf()) {
    fn(path, t.tensor());
    return;
  }
  for (const auto& [k, v] : t.entries()) {
    visit_leaves(v, path.empty() ? k : path + "/" + k, fn);
  }
}

}  // namespace

void for_each_leaf(
    const ParamTree& t,
    const std::function<void(const std::string& path, const Tensor&)>& fn) {
  visit_leaves(t, "", fn);
}

}  // namespace fedsim
