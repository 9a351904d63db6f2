#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hlseg/common.hpp"

namespace hlseg {

using Shape = std::vector<int>;

int64_t shape_numel(const Shape& s);
std::string shape_str(const Shape& s);

struct TensorImpl;

// Lineage record for one executed op. Backward walks these in reverse
// topological order; `apply` reads the output's grad buffer and accumulates
// into the parents' grad buffers.
struct Node {
  const char* op = "";
  std::vector<std::shared_ptr<TensorImpl>> parents;
  std::function<void(const TensorImpl& out)> apply;
};

struct TensorImpl {
  Shape shape;
  std::vector<float> data;
  bool requires_grad = false;
  std::vector<float> grad;  // allocated on first accumulation
  std::shared_ptr<Node> node;
};

// Dense rank-N float32 tensor with optional reverse-mode lineage. Value
// semantics on the handle; the buffer is shared. Data is immutable after
// construction except through mutable_data() on leaves (parameter updates)
// and the grad buffer.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape, bool requires_grad = false);
  static Tensor full(Shape shape, float value, bool requires_grad = false);
  static Tensor from_data(Shape shape, std::vector<float> data,
                          bool requires_grad = false);
  static Tensor scalar(float value, bool requires_grad = false);

  bool defined() const { return impl_ != nullptr; }
  const Shape& shape() const;
  int64_t numel() const;
  int dim(int i) const { return shape().at(static_cast<size_t>(i)); }

  std::span<const float> data() const;
  std::span<float> mutable_data();  // in-place edit; caller owns graph hygiene
  float item() const;               // numel()==1 only

  bool requires_grad() const;
  void set_requires_grad(bool v);
  bool has_node() const;
  const char* op_name() const;

  // grad view; empty span if never accumulated
  std::span<const float> grad() const;
  void zero_grad();

  // value-identical tensor with no lineage; gradients never flow through
  Tensor detach() const;

  // reverse pass from a scalar; seeds d(self)/d(self) = 1
  void backward() const;

  std::shared_ptr<TensorImpl> impl() const { return impl_; }
  explicit Tensor(std::shared_ptr<TensorImpl> impl) : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<TensorImpl> impl_;
};

// Builder for op results; used by ops.cpp and by fused ops elsewhere (e.g.
// the softmax cross-entropy map). Creates a Node only if some parent
// requires grad.
Tensor make_op_tensor(Shape shape, std::vector<float> data, const char* op,
                      std::vector<Tensor> parents,
                      std::function<void(const TensorImpl& out)> apply);

// Accumulate `g` into the impl's grad buffer (additive across fan-out).
void accumulate_grad(TensorImpl& t, std::span<const float> g);

}  // namespace hlseg
