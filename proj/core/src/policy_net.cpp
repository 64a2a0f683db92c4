#include "lapspec/policy_net.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "lapspec/errors.hpp"
#include "lapspec/rng.hpp"

namespace lapspec {

namespace {

constexpr double kAdamBeta1 = 0.9;
constexpr double kAdamBeta2 = 0.999;
constexpr double kAdamEpsilon = 1e-8;

constexpr char kCheckpointMagic[4] = {'L', 'S', 'P', 'N'};
constexpr std::uint32_t kCheckpointVersion = 1;

double inv_sqrt_2pi() { return 0.3989422804014326779; }

// stable log-softmax pieces for a two-logit head
struct Head {
  double p0, p1;      // probabilities
  double logp0, logp1;
};

Head head_from_logits(double z0, double z1) {
  const double zmax = z0 > z1 ? z0 : z1;
  const double e0 = std::exp(z0 - zmax);
  const double e1 = std::exp(z1 - zmax);
  const double sum = e0 + e1;
  const double logsum = zmax + std::log(sum);
  return {e0 / sum, e1 / sum, z0 - logsum, z1 - logsum};
}

void store_u64_le(std::ostream& out, std::uint64_t v) {
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(buf, 8);
}

std::uint64_t load_u64_le(std::istream& in) {
  char buf[8];
  in.read(buf, 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i)
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[i])) << (8 * i);
  return v;
}

void store_f64_le(std::ostream& out, double d) {
  std::uint64_t bits;
  std::memcpy(&bits, &d, 8);
  store_u64_le(out, bits);
}

double load_f64_le(std::istream& in) {
  const std::uint64_t bits = load_u64_le(in);
  double d;
  std::memcpy(&d, &bits, 8);
  return d;
}

void store_vec_le(std::ostream& out, const std::vector<double>& v) {
  for (double d : v) store_f64_le(out, d);
}

void load_vec_le(std::istream& in, std::vector<double>& v) {
  for (double& d : v) d = load_f64_le(in);
}

}  // namespace

double gelu(double x) { return x * 0.5 * std::erfc(-x * M_SQRT1_2); }

double gelu_derivative(double x) {
  const double cdf = 0.5 * std::erfc(-x * M_SQRT1_2);
  const double pdf = inv_sqrt_2pi() * std::exp(-0.5 * x * x);
  return cdf + x * pdf;
}

NetworkArchitecture architecture_for_vertices(int n, std::vector<int> hidden_sizes) {
  if (n < 2) throw config_error("architecture_for_vertices: n must be >= 2");
  return NetworkArchitecture{n * (n - 1), std::move(hidden_sizes)};
}

PolicyNetwork::PolicyNetwork(NetworkArchitecture arch)
    : arch_(std::move(arch)) {
  check_architecture();
  const std::vector<int> sizes = layer_sizes();
  layers_.resize(sizes.size() - 1);
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    Layer& layer = layers_[l];
    layer.in = sizes[l];
    layer.out = sizes[l + 1];
    const std::size_t wn = static_cast<std::size_t>(layer.in) * layer.out;
    layer.w.assign(wn, 0.0);
    layer.b.assign(layer.out, 0.0);
    layer.mw.assign(wn, 0.0);
    layer.vw.assign(wn, 0.0);
    layer.mb.assign(layer.out, 0.0);
    layer.vb.assign(layer.out, 0.0);
  }
}

PolicyNetwork::PolicyNetwork(NetworkArchitecture arch, std::uint64_t seed)
    : PolicyNetwork(std::move(arch)) {
  Rng rng(seed);
  for (Layer& layer : layers_) {
    const double half_width = 1.0 / std::sqrt(static_cast<double>(layer.in));
    for (double& w : layer.w) w = rng.uniform_symmetric(half_width);
  }
}

void PolicyNetwork::check_architecture() const {
  if (arch_.input_size < 1)
    throw config_error("PolicyNetwork: input_size must be >= 1");
  for (int h : arch_.hidden_sizes)
    if (h < 1) throw config_error("PolicyNetwork: hidden sizes must be >= 1");
}

std::vector<int> PolicyNetwork::layer_sizes() const {
  std::vector<int> sizes;
  sizes.push_back(arch_.input_size);
  for (int h : arch_.hidden_sizes) sizes.push_back(h);
  sizes.push_back(NetworkArchitecture::output_size);
  return sizes;
}

std::array<double, 2> PolicyNetwork::forward(const std::vector<double>& obs) const {
  if (static_cast<int>(obs.size()) != arch_.input_size)
    throw shape_error("forward: observation length " + std::to_string(obs.size()) +
                      " != input size " + std::to_string(arch_.input_size));
  std::vector<double> cur = obs;
  std::vector<double> next;
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const Layer& layer = layers_[l];
    next.assign(layer.out, 0.0);
    for (int o = 0; o < layer.out; ++o) {
      const double* row = &layer.w[static_cast<std::size_t>(o) * layer.in];
      double acc = layer.b[o];
      for (int i = 0; i < layer.in; ++i) acc += row[i] * cur[i];
      next[o] = acc;
    }
    if (l + 1 < layers_.size())
      for (double& z : next) z = gelu(z);
    cur.swap(next);
  }
  const Head head = head_from_logits(cur[0], cur[1]);
  return {head.p0, head.p1};
}

namespace {

// per-sample forward pass keeping pre-activations for backprop
struct Trace {
  std::vector<std::vector<double>> activations;      // inputs to each layer
  std::vector<std::vector<double>> pre_activations;  // z of each layer
};

}  // namespace

double PolicyNetwork::loss(const TrainBatch& batch) const {
  if (batch.observations.empty())
    throw shape_error("loss: batch must be non-empty");
  if (batch.observations.size() != batch.actions.size())
    throw shape_error("loss: observations/actions length mismatch");
  double total = 0.0;
  for (std::size_t s = 0; s < batch.observations.size(); ++s) {
    const std::vector<double>& obs = batch.observations[s];
    if (static_cast<int>(obs.size()) != arch_.input_size)
      throw shape_error("loss: observation " + std::to_string(s) + " has length " +
                        std::to_string(obs.size()));
    std::vector<double> cur = obs;
    std::vector<double> next;
    for (std::size_t l = 0; l < layers_.size(); ++l) {
      const Layer& layer = layers_[l];
      next.assign(layer.out, 0.0);
      for (int o = 0; o < layer.out; ++o) {
        const double* row = &layer.w[static_cast<std::size_t>(o) * layer.in];
        double acc = layer.b[o];
        for (int i = 0; i < layer.in; ++i) acc += row[i] * cur[i];
        next[o] = acc;
      }
      if (l + 1 < layers_.size())
        for (double& z : next) z = gelu(z);
      cur.swap(next);
    }
    const Head head = head_from_logits(cur[0], cur[1]);
    total -= batch.actions[s] ? head.logp1 : head.logp0;
  }
  return total / static_cast<double>(batch.observations.size());
}

std::vector<double> PolicyNetwork::loss_gradient(const TrainBatch& batch) const {
  if (batch.observations.empty())
    throw shape_error("loss_gradient: batch must be non-empty");
  if (batch.observations.size() != batch.actions.size())
    throw shape_error("loss_gradient: observations/actions length mismatch");

  std::vector<double> grad(parameter_count(), 0.0);
  const double inv_n = 1.0 / static_cast<double>(batch.observations.size());

  // per-layer slices into the flat gradient
  std::vector<std::size_t> offsets;
  std::size_t off = 0;
  for (const Layer& layer : layers_) {
    offsets.push_back(off);
    off += static_cast<std::size_t>(layer.in) * layer.out + layer.out;
  }

  Trace trace;
  trace.activations.resize(layers_.size());
  trace.pre_activations.resize(layers_.size());
  std::vector<double> delta, delta_prev;

  for (std::size_t s = 0; s < batch.observations.size(); ++s) {
    const std::vector<double>& obs = batch.observations[s];
    if (static_cast<int>(obs.size()) != arch_.input_size)
      throw shape_error("loss_gradient: observation " + std::to_string(s) +
                        " has length " + std::to_string(obs.size()));

    // forward, recording layer inputs and pre-activations
    std::vector<double> cur = obs;
    for (std::size_t l = 0; l < layers_.size(); ++l) {
      const Layer& layer = layers_[l];
      trace.activations[l] = cur;
      std::vector<double>& z = trace.pre_activations[l];
      z.assign(layer.out, 0.0);
      for (int o = 0; o < layer.out; ++o) {
        const double* row = &layer.w[static_cast<std::size_t>(o) * layer.in];
        double acc = layer.b[o];
        for (int i = 0; i < layer.in; ++i) acc += row[i] * cur[i];
        z[o] = acc;
      }
      if (l + 1 < layers_.size()) {
        cur.assign(layer.out, 0.0);
        for (int o = 0; o < layer.out; ++o) cur[o] = gelu(z[o]);
      } else {
        cur = z;
      }
    }

    // softmax + cross-entropy head: dL/dz = (p - onehot(action)) / N
    const Head head = head_from_logits(cur[0], cur[1]);
    delta.assign(2, 0.0);
    delta[0] = (head.p0 - (batch.actions[s] ? 0.0 : 1.0)) * inv_n;
    delta[1] = (head.p1 - (batch.actions[s] ? 1.0 : 0.0)) * inv_n;

    for (int l = static_cast<int>(layers_.size()) - 1; l >= 0; --l) {
      const Layer& layer = layers_[l];
      double* gw = &grad[offsets[l]];
      double* gb = gw + static_cast<std::size_t>(layer.in) * layer.out;
      const std::vector<double>& input = trace.activations[l];
      for (int o = 0; o < layer.out; ++o) {
        const double d = delta[o];
        if (d == 0.0) continue;
        double* grow = gw + static_cast<std::size_t>(o) * layer.in;
        for (int i = 0; i < layer.in; ++i) grow[i] += d * input[i];
        gb[o] += d;
      }
      if (l > 0) {
        delta_prev.assign(layer.in, 0.0);
        for (int o = 0; o < layer.out; ++o) {
          const double d = delta[o];
          if (d == 0.0) continue;
          const double* row = &layer.w[static_cast<std::size_t>(o) * layer.in];
          for (int i = 0; i < layer.in; ++i) delta_prev[i] += d * row[i];
        }
        const std::vector<double>& z_prev = trace.pre_activations[l - 1];
        for (int i = 0; i < layer.in; ++i)
          delta_prev[i] *= gelu_derivative(z_prev[i]);
        delta.swap(delta_prev);
      }
    }
  }
  return grad;
}

double PolicyNetwork::train_step(const TrainBatch& batch, double learning_rate) {
  const double batch_loss = loss(batch);
  const std::vector<double> grad = loss_gradient(batch);

  if (!std::isfinite(batch_loss))
    throw numeric_error("train_step: non-finite loss; parameters untouched", batch_loss);
  for (double g : grad)
    if (!std::isfinite(g))
      throw numeric_error("train_step: non-finite gradient; parameters untouched",
                          batch_loss);

  ++step_;
  const double bias1 = 1.0 - std::pow(kAdamBeta1, static_cast<double>(step_));
  const double bias2 = 1.0 - std::pow(kAdamBeta2, static_cast<double>(step_));

  std::size_t idx = 0;
  for (Layer& layer : layers_) {
    auto update = [&](std::vector<double>& param, std::vector<double>& m,
                      std::vector<double>& v) {
      for (std::size_t k = 0; k < param.size(); ++k, ++idx) {
        const double g = grad[idx];
        m[k] = kAdamBeta1 * m[k] + (1.0 - kAdamBeta1) * g;
        v[k] = kAdamBeta2 * v[k] + (1.0 - kAdamBeta2) * g * g;
        const double m_hat = m[k] / bias1;
        const double v_hat = v[k] / bias2;
        param[k] -= learning_rate * m_hat / (std::sqrt(v_hat) + kAdamEpsilon);
      }
    };
    update(layer.w, layer.mw, layer.vw);
    update(layer.b, layer.mb, layer.vb);
  }
  return batch_loss;
}

std::size_t PolicyNetwork::parameter_count() const {
  std::size_t count = 0;
  for (const Layer& layer : layers_)
    count += static_cast<std::size_t>(layer.in) * layer.out + layer.out;
  return count;
}

std::vector<double> PolicyNetwork::parameters() const {
  std::vector<double> flat;
  flat.reserve(parameter_count());
  for (const Layer& layer : layers_) {
    flat.insert(flat.end(), layer.w.begin(), layer.w.end());
    flat.insert(flat.end(), layer.b.begin(), layer.b.end());
  }
  return flat;
}

void PolicyNetwork::set_parameters(const std::vector<double>& flat) {
  if (flat.size() != parameter_count())
    throw shape_error("set_parameters: expected " + std::to_string(parameter_count()) +
                      " values, got " + std::to_string(flat.size()));
  std::size_t idx = 0;
  for (Layer& layer : layers_) {
    for (double& w : layer.w) w = flat[idx++];
    for (double& b : layer.b) b = flat[idx++];
  }
}

void PolicyNetwork::save(std::ostream& out) const {
  out.write(kCheckpointMagic, 4);
  store_u64_le(out, kCheckpointVersion);
  store_u64_le(out, static_cast<std::uint64_t>(arch_.input_size));
  store_u64_le(out, static_cast<std::uint64_t>(arch_.hidden_sizes.size()));
  for (int h : arch_.hidden_sizes) store_u64_le(out, static_cast<std::uint64_t>(h));
  store_u64_le(out, static_cast<std::uint64_t>(step_));
  for (const Layer& layer : layers_) {
    store_vec_le(out, layer.w);
    store_vec_le(out, layer.b);
    store_vec_le(out, layer.mw);
    store_vec_le(out, layer.vw);
    store_vec_le(out, layer.mb);
    store_vec_le(out, layer.vb);
  }
  if (!out) throw parse_error("checkpoint write failed");
}

PolicyNetwork PolicyNetwork::load(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kCheckpointMagic, 4) != 0)
    throw parse_error("checkpoint: byte 1: bad magic");
  const std::uint64_t version = load_u64_le(in);
  if (version != kCheckpointVersion)
    throw parse_error("checkpoint: unsupported version " + std::to_string(version));
  NetworkArchitecture arch;
  arch.input_size = static_cast<int>(load_u64_le(in));
  const std::uint64_t n_hidden = load_u64_le(in);
  if (!in || n_hidden > 64) throw parse_error("checkpoint: bad hidden-layer count");
  arch.hidden_sizes.resize(n_hidden);
  for (std::uint64_t i = 0; i < n_hidden; ++i)
    arch.hidden_sizes[i] = static_cast<int>(load_u64_le(in));
  PolicyNetwork net{arch};
  net.step_ = static_cast<std::int64_t>(load_u64_le(in));
  for (Layer& layer : net.layers_) {
    load_vec_le(in, layer.w);
    load_vec_le(in, layer.b);
    load_vec_le(in, layer.mw);
    load_vec_le(in, layer.vw);
    load_vec_le(in, layer.mb);
    load_vec_le(in, layer.vb);
  }
  if (!in) throw parse_error("checkpoint: truncated parameter dump");
  return net;
}

void PolicyNetwork::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("checkpoint: cannot open '" + path + "' for writing");
  save(out);
}

PolicyNetwork PolicyNetwork::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("checkpoint: cannot open '" + path + "'");
  return load(in);
}

bool PolicyNetwork::operator==(const PolicyNetwork& other) const {
  if (arch_.input_size != other.arch_.input_size ||
      arch_.hidden_sizes != other.arch_.hidden_sizes || step_ != other.step_)
    return false;
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const Layer& a = layers_[l];
    const Layer& b = other.layers_[l];
    if (a.w != b.w || a.b != b.b || a.mw != b.mw || a.vw != b.vw || a.mb != b.mb ||
        a.vb != b.vb)
      return false;
  }
  return true;
}

}  // namespace lapspec
