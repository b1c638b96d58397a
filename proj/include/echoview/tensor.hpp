#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "echoview/error.hpp"

namespace echoview {

using Shape = std::vector<int>;

inline std::string shape_str(const Shape& s) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << 'x';
        os << s[i];
    }
    os << ']';
    return os.str();
}

inline std::size_t shape_numel(const Shape& s) {
    std::size_t n = 1;
    for (int d : s) {
        if (d <= 0) throw ShapeError("non-positive dimension in shape " + shape_str(s));
        n *= static_cast<std::size_t>(d);
    }
    return n;
}

// Dense row-major tensor with an optional gradient buffer. The handle has
// shared-storage semantics: copies alias the same data, which is what lets
// recorded backward rules write gradients into the tensors the caller holds.
template <typename T>
class Tensor {
  public:
    Tensor() = default;

    explicit Tensor(Shape shape, bool requires_grad = false)
        : s_(std::make_shared<Storage>()) {
        s_->shape = std::move(shape);
        s_->data.assign(shape_numel(s_->shape), T(0));
        s_->requires_grad = requires_grad;
    }

    static Tensor zeros(Shape shape, bool requires_grad = false) {
        return Tensor(std::move(shape), requires_grad);
    }

    static Tensor full(Shape shape, T value) {
        Tensor t(std::move(shape));
        for (auto& v : t.s_->data) v = value;
        return t;
    }

    static Tensor from(Shape shape, std::vector<T> values, bool requires_grad = false) {
        Tensor t;
        t.s_ = std::make_shared<Storage>();
        if (shape_numel(shape) != values.size())
            throw ShapeError("value count " + std::to_string(values.size()) +
                             " does not match shape " + shape_str(shape));
        t.s_->shape = std::move(shape);
        t.s_->data = std::move(values);
        t.s_->requires_grad = requires_grad;
        return t;
    }

    static Tensor scalar(T value, bool requires_grad = false) {
        return from({1}, {value}, requires_grad);
    }

    bool defined() const { return static_cast<bool>(s_); }
    const Shape& shape() const { return s_->shape; }
    int rank() const { return static_cast<int>(s_->shape.size()); }
    int dim(int i) const { return s_->shape[static_cast<std::size_t>(i)]; }
    std::size_t size() const { return s_->data.size(); }

    std::span<T> data() { return s_->data; }
    std::span<const T> data() const { return s_->data; }
    T& operator[](std::size_t i) { return s_->data[i]; }
    const T& operator[](std::size_t i) const { return s_->data[i]; }

    bool requires_grad() const { return s_->requires_grad; }
    void set_requires_grad(bool v) { s_->requires_grad = v; }

    // Allocates (zero-filled) on first touch.
    std::span<T> grad() {
        if (s_->grad.empty()) s_->grad.assign(s_->data.size(), T(0));
        return s_->grad;
    }

    // Empty span when no gradient has been accumulated yet.
    std::span<const T> grad_view() const { return s_->grad; }
    bool has_grad() const { return !s_->grad.empty(); }

    void zero_grad() {
        for (auto& g : s_->grad) g = T(0);
    }

    // Deep copy of the data; gradient buffer and flag are not copied.
    Tensor clone() const {
        Tensor t;
        t.s_ = std::make_shared<Storage>();
        t.s_->shape = s_->shape;
        t.s_->data = s_->data;
        return t;
    }

    void copy_data_from(const Tensor& other) {
        if (other.s_->shape != s_->shape)
            throw ShapeError("copy_data_from: shape " + shape_str(other.s_->shape) +
                             " vs " + shape_str(s_->shape));
        s_->data = other.s_->data;
    }

    bool same_storage(const Tensor& other) const { return s_ == other.s_; }

  private:
    struct Storage {
        Shape shape;
        std::vector<T> data;
        std::vector<T> grad;  // empty = not allocated
        bool requires_grad = false;
    };
    std::shared_ptr<Storage> s_;
};

// Execution graph: ops append themselves in forward order, backward replays
// in exact reverse order. Node outputs (intermediates) get their gradients
// cleared at the start of every backward pass so leaf tensors accumulate
// exactly one Jacobian contribution per call.
template <typename T>
class Tape {
  public:
    void record(Tensor<T> out, std::function<void()> fn) {
        nodes_.push_back(Node{std::move(out), std::move(fn)});
    }

    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }

    void backward(Tensor<T>& loss) {
        if (!loss.defined() || loss.size() != 1)
            throw ShapeError("backward: loss must be a defined scalar tensor");
        for (auto& n : nodes_) n.out.zero_grad();
        loss.grad()[0] += T(1);
        for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) it->fn();
    }

    void clear() { nodes_.clear(); }

  private:
    struct Node {
        Tensor<T> out;
        std::function<void()> fn;
    };
    std::vector<Node> nodes_;
};

template <typename T>
void zero_grads(std::span<Tensor<T>> params) {
    for (auto& p : params) p.zero_grad();
}

}  // namespace echoview
