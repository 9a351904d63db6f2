#include "hlseg/tensor.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace hlseg {

int64_t shape_numel(const Shape& s) {
  int64_t n = 1;
  for (int e : s) {
    if (e <= 0) fail(ErrorCategory::shape, "non-positive extent in shape " + shape_str(s));
    n *= e;
  }
  return n;
}

std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "]";
  return os.str();
}

Tensor Tensor::zeros(Shape shape, bool requires_grad) {
  return full(std::move(shape), 0.f, requires_grad);
}

Tensor Tensor::full(Shape shape, float value, bool requires_grad) {
  auto impl = std::make_shared<TensorImpl>();
  int64_t n = shape_numel(shape);
  impl->shape = std::move(shape);
  impl->data.assign(static_cast<size_t>(n), value);
  impl->requires_grad = requires_grad;
  return Tensor(std::move(impl));
}

Tensor Tensor::from_data(Shape shape, std::vector<float> data, bool requires_grad) {
  int64_t n = shape_numel(shape);
  if (n != static_cast<int64_t>(data.size()))
    fail(ErrorCategory::shape, "data length " + std::to_string(data.size()) +
                                   " does not match shape " + shape_str(shape));
  auto impl = std::make_shared<TensorImpl>();
  impl->shape = std::move(shape);
  impl->data = std::move(data);
  impl->requires_grad = requires_grad;
  return Tensor(std::move(impl));
}

Tensor Tensor::scalar(float value, bool requires_grad) {
  return from_data({1}, {value}, requires_grad);
}

const Shape& Tensor::shape() const {
  if (!impl_) fail(ErrorCategory::contract, "shape() on undefined tensor");
  return impl_->shape;
}

int64_t Tensor::numel() const { return static_cast<int64_t>(impl_->data.size()); }

std::span<const float> Tensor::data() const { return impl_->data; }

std::span<float> Tensor::mutable_data() { return impl_->data; }

float Tensor::item() const {
  if (!impl_ || impl_->data.size() != 1)
    fail(ErrorCategory::contract, "item() requires a scalar tensor");
  return impl_->data[0];
}

bool Tensor::requires_grad() const { return impl_ && impl_->requires_grad; }

void Tensor::set_requires_grad(bool v) { impl_->requires_grad = v; }

bool Tensor::has_node() const { return impl_ && impl_->node != nullptr; }

const char* Tensor::op_name() const {
  return impl_ && impl_->node ? impl_->node->op : "";
}

std::span<const float> Tensor::grad() const {
  if (!impl_) return {};
  return impl_->grad;
}

void Tensor::zero_grad() {
  if (impl_) std::fill(impl_->grad.begin(), impl_->grad.end(), 0.f);
}

Tensor Tensor::detach() const {
  auto impl = std::make_shared<TensorImpl>();
  impl->shape = impl_->shape;
  impl->data = impl_->data;  // bit-identical values
  impl->requires_grad = false;
  impl->node = nullptr;
  return Tensor(std::move(impl));
}

void accumulate_grad(TensorImpl& t, std::span<const float> g) {
  if (g.size() != t.data.size())
    fail(ErrorCategory::shape, "grad size mismatch in accumulate");
  if (t.grad.empty()) t.grad.assign(t.data.size(), 0.f);
  for (size_t i = 0; i < g.size(); ++i) t.grad[i] += g[i];
}

void Tensor::backward() const {
  if (!impl_ || impl_->data.size() != 1)
    fail(ErrorCategory::contract, "backward() requires a scalar root");

  // Reverse post-order DFS over lineage: every consumer is applied before
  // its parents, so each node's grad is complete when visited.
  std::vector<TensorImpl*> order;
  std::unordered_set<TensorImpl*> seen;
  struct Frame {
    TensorImpl* t;
    size_t next_parent;
  };
  std::vector<Frame> stack;
  stack.push_back({impl_.get(), 0});
  seen.insert(impl_.get());
  while (!stack.empty()) {
    Frame& f = stack.back();
    Node* node = f.t->node.get();
    size_t n_parents = node ? node->parents.size() : 0;
    if (f.next_parent < n_parents) {
      TensorImpl* p = node->parents[f.next_parent++].get();
      if (p->node && !seen.count(p)) {
        seen.insert(p);
        stack.push_back({p, 0});
      }
    } else {
      order.push_back(f.t);
      stack.pop_back();
    }
  }

  accumulate_grad(*impl_, std::vector<float>{1.f});
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    TensorImpl* t = *it;
    if (t->node && !t->grad.empty()) t->node->apply(*t);
  }
}

Tensor make_op_tensor(Shape shape, std::vector<float> data, const char* op,
                      std::vector<Tensor> parents,
                      std::function<void(const TensorImpl& out)> apply) {
  Tensor out = Tensor::from_data(std::move(shape), std::move(data));
  bool needs_grad = false;
  for (const Tensor& p : parents) needs_grad = needs_grad || p.requires_grad();
  if (needs_grad) {
    auto node = std::make_shared<Node>();
    node->op = op;
    node->parents.reserve(parents.size());
    for (const Tensor& p : parents) node->parents.push_back(p.impl());
    node->apply = std::move(apply);
    out.impl()->node = std::move(node);
    out.impl()->requires_grad = true;
  }
  return out;
}

}  // namespace hlseg
