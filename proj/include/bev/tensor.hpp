#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace bev {

class Tape;
class Gradients;

// Dense row-major tensor of 64-bit reals. Storage is shared between
// copies; tensors produced by ops are treated as immutable while a tape
// is recording. Participation in autodiff is tracked by a (generation,
// node) stamp referring to the currently active tape.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape);
  Tensor(std::vector<int> shape, std::vector<double> values);

  static Tensor zeros(std::vector<int> shape);
  static Tensor full(std::vector<int> shape, double value);
  static Tensor scalar(double value);

  const std::vector<int>& shape() const { return shape_; }
  int ndim() const { return static_cast<int>(shape_.size()); }
  std::int64_t numel() const;
  std::string shape_str() const;

  const double* data() const { return storage_->data(); }
  double* mutable_data() { return storage_->data(); }
  const std::shared_ptr<std::vector<double>>& storage() const { return storage_; }

  // Value of a one-element tensor.
  double item() const;

  Tensor& set_requires_grad(bool v) {
    requires_grad_ = v;
    return *this;
  }
  bool requires_grad() const { return requires_grad_; }

  // Same values, no tape participation. Shares storage.
  Tensor detach() const;
  // Deep copy, no tape participation.
  Tensor clone() const;

  bool on_tape(const Tape& tape) const;
  int node() const { return node_; }

 private:
  friend class Tape;
  std::vector<int> shape_;
  std::shared_ptr<std::vector<double>> storage_;
  bool requires_grad_ = false;
  std::uint64_t tape_generation_ = 0;  // 0 = not an op output
  int node_ = -1;
};

// Gradient buffers produced by one backward pass. Lookup never fails:
// tensors that took no part in the graph get zeros of their own size.
class Gradients {
 public:
  std::vector<double> at(const Tensor& t) const;
  bool nonzero(const Tensor& t) const;

 private:
  friend class Tape;
  std::uint64_t generation_ = 0;
  std::vector<std::vector<double>> buffers_;                // by node id
  std::unordered_map<const void*, int> leaf_nodes_;         // storage ptr -> node
};

// Accumulation sink handed to backward rules while a backward pass runs.
class GradSink {
 public:
  // Buffer for node `id`, allocated as zeros on first touch.
  std::vector<double>& buffer(int id);

 private:
  friend class Tape;
  explicit GradSink(const std::vector<std::int64_t>& numels) : numels_(numels) {
    buffers_.resize(numels.size());
  }
  const std::vector<std::int64_t>& numels_;
  std::vector<std::vector<double>> buffers_;
};

using BackwardFn = std::function<void(const std::vector<double>& grad_out, GradSink& sink)>;

// Define-by-run tape. Constructing a Tape makes it the active recorder
// for the current thread; destruction restores the previous one. A tape
// is confined to one thread and is meant to be rebuilt per training step.
class Tape {
 public:
  Tape();
  ~Tape();
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  static Tape* active();

  // Node id for input `t`, or -1 if it is a constant. Registers
  // requires_grad leaves on first sight.
  int input_node(const Tensor& t);
  // Records an op node; the caller stamps the output tensor itself.
  int record(std::vector<int> inputs, std::int64_t out_numel, BackwardFn fn);
  void stamp_output(Tensor& t, int node) const;

  // Reverse pass from a one-element loss produced on this tape. May be
  // called repeatedly; each call recomputes from scratch and yields
  // identical gradients.
  Gradients backward(const Tensor& loss) const;

  std::uint64_t generation() const { return generation_; }
  std::size_t size() const { return nodes_.size(); }

 private:
  struct NodeRecord {
    std::vector<int> inputs;
    std::int64_t numel = 0;
    BackwardFn fn;  // empty for leaves
  };
  std::uint64_t generation_;
  std::vector<NodeRecord> nodes_;
  std::unordered_map<const void*, int> leaf_nodes_;
  Tape* previous_ = nullptr;
};

// Free-function form of Tape::backward on the active tape.
Gradients backward(const Tensor& loss);

// ---- Differentiable ops -------------------------------------------------
// Elementwise ops require equal shapes (scalar overloads aside); there is
// no general broadcasting.

Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor divide(const Tensor& a, const Tensor& b);

Tensor add(const Tensor& a, double s);
Tensor sub(const Tensor& a, double s);
Tensor sub(double s, const Tensor& a);
Tensor mul(const Tensor& a, double s);
Tensor divide(const Tensor& a, double s);

// [M,K] x [K,N] -> [M,N]
Tensor matmul(const Tensor& a, const Tensor& b);

// x: [Cin,H,W], kernel: [Cout,Cin,k,k] with k odd, cross-correlation.
Tensor conv2d(const Tensor& x, const Tensor& kernel, int stride, int padding);

// bias has length x.shape()[0]; broadcast over the remaining axes.
Tensor bias_add(const Tensor& x, const Tensor& bias);

Tensor relu(const Tensor& x);
Tensor sigmoid(const Tensor& x);

// Reduce over the given axes (empty = all axes -> rank-0 scalar).
// Reduced axes are removed from the shape.
Tensor reduce_sum(const Tensor& x, const std::vector<int>& axes = {});
Tensor reduce_mean(const Tensor& x, const std::vector<int>& axes = {});

Tensor detach(const Tensor& x);

// Shares storage; element count must match.
Tensor reshape(const Tensor& x, std::vector<int> shape);

// Mirror along the last axis (horizontal flip for [..,W] layouts).
Tensor flip_last(const Tensor& x);

}  // namespace bev
