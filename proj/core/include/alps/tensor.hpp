#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "alps/errors.hpp"

namespace alps {

using Shape = std::vector<std::size_t>;

std::size_t shape_numel(const Shape& shape);
std::string shape_str(const Shape& shape);

namespace detail {

/// One node of the dynamically built computation graph. Inputs always
/// precede their consumers (the graph is a DAG by construction), and a
/// backward traversal visits each node exactly once.
template <typename T>
struct TensorNode {
  Shape shape;
  std::vector<T> value;
  std::vector<T> grad;  // empty until first needed; same length as value
  bool requires_grad = false;
  bool is_leaf = true;
  std::vector<std::shared_ptr<TensorNode>> inputs;
  // Reads this->grad and accumulates into the inputs' grads. Only set on
  // non-leaf nodes whose result requires grad.
  std::function<void(TensorNode&)> backprop;

  void ensure_grad() {
    if (grad.size() != value.size()) grad.assign(value.size(), T(0));
  }
};

}  // namespace detail

/// Dense n-dimensional array of real values (row major) with optional
/// reverse-mode gradient tracking. Copies are shallow: a Tensor is a handle
/// to a shared graph node, so passing tensors around never copies data.
///
/// Gradients accumulate across backward() calls until explicitly zeroed,
/// matching the usual training-loop structure.
template <typename T>
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape, T fill = T(0), bool requires_grad = false);
  Tensor(Shape shape, std::vector<T> values, bool requires_grad = false);

  static Tensor scalar(T v, bool requires_grad = false);

  bool defined() const { return node_ != nullptr; }
  const Shape& shape() const;
  std::size_t rank() const { return shape().size(); }
  std::size_t dim(std::size_t i) const { return shape().at(i); }
  std::size_t numel() const;

  std::vector<T>& values();
  const std::vector<T>& values() const;
  T item() const;  // scalar tensors only

  bool requires_grad() const;
  void set_requires_grad(bool on);

  bool has_grad() const;
  const std::vector<T>& grad() const;  // ContractError when absent
  void zero_grad();

  /// Reverse-mode gradient of this scalar w.r.t. every reachable leaf with
  /// requires_grad. Non-scalar tensors are rejected with ContractError.
  void backward() const;

  /// Graph-node handle; used by the operation implementations.
  const std::shared_ptr<detail::TensorNode<T>>& node() const { return node_; }
  explicit Tensor(std::shared_ptr<detail::TensorNode<T>> node) : node_(std::move(node)) {}

 private:
  std::shared_ptr<detail::TensorNode<T>> node_;
};

enum class Activation { relu, leaky_relu, sigmoid, tanh };

// ---- differentiable operations ------------------------------------------

/// Direct 2-D convolution. input [N,C,H,W], kernel [F,C,kh,kw], bias [F].
/// H' = floor((H + 2*padding - kh) / stride) + 1, likewise W'.
template <typename T>
Tensor<T> conv2d(const Tensor<T>& input, const Tensor<T>& kernel,
                 const Tensor<T>& bias, std::size_t stride, std::size_t padding);

/// Transposed convolution (the adjoint of conv2d). input [N,C,H,W],
/// kernel [C,F,kh,kw], bias [F]. H' = (H-1)*stride - 2*padding + kh.
template <typename T>
Tensor<T> conv2d_transpose(const Tensor<T>& input, const Tensor<T>& kernel,
                           const Tensor<T>& bias, std::size_t stride,
                           std::size_t padding);

/// Mean over the spatial dimensions: [N,C,H,W] -> [N,C].
template <typename T>
Tensor<T> global_avg_pool(const Tensor<T>& input);

/// Affine map: input [N,D] x weight [D,M] + bias [M] -> [N,M].
template <typename T>
Tensor<T> dense(const Tensor<T>& input, const Tensor<T>& weight,
                const Tensor<T>& bias);

template <typename T>
Tensor<T> elementwise(const Tensor<T>& input, Activation kind, T alpha = T(0.2));

template <typename T>
Tensor<T> relu(const Tensor<T>& input);
template <typename T>
Tensor<T> leaky_relu(const Tensor<T>& input, T alpha);
template <typename T>
Tensor<T> sigmoid(const Tensor<T>& input);
template <typename T>
Tensor<T> tanh(const Tensor<T>& input);

/// Mean squared error over all elements; returns a scalar. The target must
/// not require grad.
template <typename T>
Tensor<T> mse_loss(const Tensor<T>& prediction, const Tensor<T>& target);

/// Elementwise sum of two same-shape tensors.
template <typename T>
Tensor<T> add(const Tensor<T>& a, const Tensor<T>& b);

/// Multiply every element by a constant.
template <typename T>
Tensor<T> scale(const Tensor<T>& input, T factor);

/// Sum of all elements; returns a scalar.
template <typename T>
Tensor<T> sum(const Tensor<T>& input);

/// Same data, new shape (element count must match).
template <typename T>
Tensor<T> reshape(const Tensor<T>& input, Shape new_shape);

/// Closed-form output sizes for the two convolution ops.
std::size_t conv2d_out_dim(std::size_t in, std::size_t k, std::size_t stride,
                           std::size_t padding);
std::size_t conv2d_transpose_out_dim(std::size_t in, std::size_t k,
                                     std::size_t stride, std::size_t padding);

}  // namespace alps
