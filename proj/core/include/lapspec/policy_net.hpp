#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lapspec {

// exact GELU: x * Phi(x) with Phi the standard normal CDF
double gelu(double x);
double gelu_derivative(double x);

struct NetworkArchitecture {
  int input_size = 0;
  std::vector<int> hidden_sizes{72, 12};
  static constexpr int output_size = 2;
};

// architecture for an n-vertex construction environment: the observation is
// edge_bits followed by a one-hot position, so input_size = n(n-1)
NetworkArchitecture architecture_for_vertices(int n,
                                              std::vector<int> hidden_sizes = {72, 12});

struct TrainBatch {
  std::vector<std::vector<double>> observations;
  std::vector<std::uint8_t> actions;  // 0 or 1, parallel to observations
};

// Fully connected policy: GELU hidden layers, two-logit softmax head,
// cross-entropy objective, ADAM updates (beta1 0.9, beta2 0.999, eps 1e-8,
// bias-corrected). Weights initialize from a zero-mean uniform of half-width
// 1/sqrt(fan_in); biases and moments start at zero. Everything is
// deterministic in (architecture, seed).
class PolicyNetwork {
 public:
  PolicyNetwork(NetworkArchitecture arch, std::uint64_t seed);

  const NetworkArchitecture& architecture() const { return arch_; }
  std::int64_t step_count() const { return step_; }

  // action probabilities; positive, summing to 1
  std::array<double, 2> forward(const std::vector<double>& obs) const;

  // mean negative log-probability of the batch's actions (no update)
  double loss(const TrainBatch& batch) const;

  // analytic d(loss)/d(parameters) in parameters() layout (no update)
  std::vector<double> loss_gradient(const TrainBatch& batch) const;

  // one full-batch gradient step through ADAM; returns the pre-update loss.
  // Non-finite loss or gradient raises numeric_error with parameters, moments
  // and step count untouched.
  double train_step(const TrainBatch& batch, double learning_rate);

  // flat view: per layer, weights row-major [out][in] then biases
  std::size_t parameter_count() const;
  std::vector<double> parameters() const;
  void set_parameters(const std::vector<double>& flat);

  // versioned little-endian checkpoint (weights + ADAM state); documented in
  // the README for resume
  void save(std::ostream& out) const;
  static PolicyNetwork load(std::istream& in);
  void save_file(const std::string& path) const;
  static PolicyNetwork load_file(const std::string& path);

  bool operator==(const PolicyNetwork& other) const;

 private:
  struct Layer {
    int in = 0, out = 0;
    std::vector<double> w, b;          // parameters
    std::vector<double> mw, vw, mb, vb;  // ADAM first/second moments
  };

  explicit PolicyNetwork(NetworkArchitecture arch);  // uninitialized, for load()
  void check_architecture() const;
  std::vector<int> layer_sizes() const;  // input, hidden..., output

  NetworkArchitecture arch_;
  std::vector<Layer> layers_;
  std::int64_t step_ = 0;
};

}  // namespace lapspec
