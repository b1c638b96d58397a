#pragma once

#include <span>

#include "echoview/tensor.hpp"

namespace echoview {

enum class Padding { Same, Valid };
enum class Mode { Train, Eval };

// Exponential-moving-average batch statistics, one pair per channel.
// Fresh state means mean 0 / var 1, which is what eval mode uses when no
// train-mode batch has been seen yet.
template <typename T>
struct BatchNormState {
    Tensor<T> running_mean;
    Tensor<T> running_var;
};

template <typename T>
BatchNormState<T> make_batch_norm_state(int channels) {
    return BatchNormState<T>{Tensor<T>::zeros({channels}), Tensor<T>::full({channels}, T(1))};
}

// NaN/Inf screening of forward outputs. Off by default (hot training path);
// tests and the gradcheck harness switch it on.
void set_finite_checks(bool enabled);
bool finite_checks_enabled();

// ---- differentiable primitives -------------------------------------------
// Every op takes the tape it should record onto; pass nullptr for pure
// inference. Output requires_grad is the OR over the inputs' flags, and
// nothing is recorded unless some input is on the gradient path.

template <typename T>
Tensor<T> conv2d(Tape<T>* tape, const Tensor<T>& input, const Tensor<T>& kernel,
                 const Tensor<T>& bias, int stride, Padding padding);

template <typename T>
Tensor<T> batch_norm(Tape<T>* tape, const Tensor<T>& input, const Tensor<T>& gamma,
                     const Tensor<T>& beta, BatchNormState<T>& state, Mode mode,
                     T epsilon = T(1e-5), T momentum = T(0.9));

template <typename T>
Tensor<T> relu(Tape<T>* tape, const Tensor<T>& input);

// Fixed 2x2 window, stride 2; ties route the gradient to the first element
// in window scan order.
template <typename T>
Tensor<T> max_pool2d(Tape<T>* tape, const Tensor<T>& input);

template <typename T>
Tensor<T> dense(Tape<T>* tape, const Tensor<T>& input, const Tensor<T>& weight,
                const Tensor<T>& bias);

template <typename T>
Tensor<T> log_softmax(Tape<T>* tape, const Tensor<T>& input);

template <typename T>
Tensor<T> l2_normalize(Tape<T>* tape, const Tensor<T>& input, T epsilon = T(1e-12));

template <typename T>
Tensor<T> reshape(Tape<T>* tape, const Tensor<T>& input, Shape new_shape);

template <typename T>
Tensor<T> add(Tape<T>* tape, const Tensor<T>& a, const Tensor<T>& b);

template <typename T>
Tensor<T> sub(Tape<T>* tape, const Tensor<T>& a, const Tensor<T>& b);

template <typename T>
Tensor<T> mul(Tape<T>* tape, const Tensor<T>& a, const Tensor<T>& b);

template <typename T>
Tensor<T> sum(Tape<T>* tape, const Tensor<T>& a);

template <typename T>
Tensor<T> mean(Tape<T>* tape, const Tensor<T>& a);

}  // namespace echoview
