#include "qsc/dataset.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qsc/parallel.hpp"
#include "qsc/version.hpp"

namespace qsc {

namespace {

constexpr int kMaxResampleAttempts = 100;
constexpr std::uint64_t kSplitSalt = 0x73706c6974ULL;  // "split"

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_double_array(const std::vector<double>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += fmt_double(xs[i]);
  }
  out += "]";
  return out;
}

std::string fmt_int_array(const std::vector<int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  out += "]";
  return out;
}

std::string fmt_pairs(const std::vector<std::pair<int, int>>& pairs) {
  std::string out = "[";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ",";
    out += "[" + std::to_string(pairs[i].first) + "," +
           std::to_string(pairs[i].second) + "]";
  }
  out += "]";
  return out;
}

std::string sample_line(const DataSample& s) {
  std::string out = "{";
  out += "\"topology\":{\"num_qubits\":" + std::to_string(s.topology.num_qubits);
  out += ",\"pairs\":" + fmt_pairs(s.topology.entangling_pairs);
  out += ",\"intended_label\":" + std::to_string(s.topology.intended_label);
  out += "},\"noise\":\"" + to_string(s.noise) + "\"";
  out += ",\"which\":\"" + to_string(s.which) + "\"";
  out += ",\"params\":" + fmt_double_array(s.params);
  out += ",\"label\":" + std::to_string(s.label);
  out += ",\"label_name\":\"" + class_name(s.topology.num_qubits, s.label) + "\"";
  out += ",\"entropies\":" + fmt_double_array(s.entropies.per_qubit_bits);
  out += ",\"eps\":" + fmt_double(s.entropies.eps);
  out += ",\"seed_trace\":" + std::to_string(s.seed_trace);
  out += "}";
  return out;
}

std::string header_line(const Dataset& ds) {
  std::string out = "{";
  out += "\"format\":\"qsc-dataset\",\"version\":1";
  out += ",\"tool\":\"" + std::string(kToolVersion) + "\"";
  out += ",\"num_qubits\":" + std::to_string(ds.num_qubits);
  out += ",\"num_classes\":" + std::to_string(ds.num_classes);
  out += ",\"noise\":\"" + to_string(ds.config.noise) + "\"";
  out += ",\"which\":\"" + to_string(ds.config.which) + "\"";
  out += ",\"per_class\":" + std::to_string(ds.config.per_class);
  out += ",\"seed\":" + std::to_string(ds.config.seed);
  out += ",\"split_rule\":\"stratified 70/30, rounding toward train\"";
  out += ",\"train_indices\":" + fmt_int_array(ds.train_indices);
  out += ",\"test_indices\":" + fmt_int_array(ds.test_indices);
  out += "}";
  return out;
}

}  // namespace

bool operator==(const DataSample& a, const DataSample& b) {
  return a.topology == b.topology && a.noise == b.noise && a.which == b.which &&
         a.params == b.params && a.label == b.label &&
         a.entropies.per_qubit_bits == b.entropies.per_qubit_bits &&
         a.entropies.eps == b.entropies.eps && a.seed_trace == b.seed_trace;
}

bool operator==(const Dataset& a, const Dataset& b) {
  return a.samples == b.samples && a.num_qubits == b.num_qubits &&
         a.num_classes == b.num_classes && a.train_indices == b.train_indices &&
         a.test_indices == b.test_indices &&
         a.config.num_qubits == b.config.num_qubits &&
         a.config.noise == b.config.noise && a.config.which == b.config.which &&
         a.config.per_class == b.config.per_class &&
         a.config.seed == b.config.seed;
}

WhichUnitary default_which(ChannelFamily family) {
  return family == ChannelFamily::AD ? WhichUnitary::U0 : WhichUnitary::U1;
}

int default_per_class(int num_qubits) { return num_qubits == 2 ? 200 : 150; }

DataSample sample_class(const ClassTopology& topology, ChannelFamily noise,
                        WhichUnitary which, Rng& rng,
                        std::uint64_t seed_trace) {
  const Circuit prep = build_prep_circuit(topology, noise, which);

  for (int attempt = 0; attempt < kMaxResampleAttempts; ++attempt) {
    std::vector<double> params;
    params.reserve(prep.num_params);
    for (int q = 0; q < topology.num_qubits; ++q)
      params.push_back(rng.uniform(0.0, std::numbers::pi));
    for (std::size_t p = 0; p < topology.entangling_pairs.size(); ++p) {
      if (noise == ChannelFamily::AD) {
        params.push_back(rng.uniform(0.1, 2.0));
        params.push_back(rng.uniform(-2.0, -0.1));
      } else {
        params.push_back(rng.uniform(0.1, 2.0));
        params.push_back(rng.uniform(0.5, 4.0));
        params.push_back(rng.uniform(0.1, 3.0));
      }
    }

    const StateVector state =
        run(prep.bind(params), StateVector::zero_state(topology.num_qubits));
    Classification cls;
    try {
      cls = classify(state);
    } catch (const GrayZoneError&) {
      continue;
    }
    if (cls.label != topology.intended_label) continue;

    DataSample sample;
    sample.topology = topology;
    sample.noise = noise;
    sample.which = which;
    sample.params = std::move(params);
    sample.label = cls.label;
    sample.entropies = std::move(cls.signature);
    sample.seed_trace = seed_trace;
    return sample;
  }
  throw std::runtime_error(
      "sample_class: resample budget exhausted for class " +
      class_name(topology.num_qubits, topology.intended_label) + " (" +
      to_string(noise) + "/" + to_string(which) +
      "); the configuration cannot realize this label");
}

Dataset generate(const GenConfig& config) {
  if (config.per_class < 10)
    throw std::invalid_argument("generate: per_class must be >= 10");
  const int k = num_classes_for(config.num_qubits);
  const int total = k * config.per_class;

  Dataset ds;
  ds.num_qubits = config.num_qubits;
  ds.num_classes = k;
  ds.config = config;
  ds.samples.resize(total);

  parallel_for(total, config.threads, [&](std::size_t i) {
    const int label = static_cast<int>(i) / config.per_class;
    const ClassTopology topo = topology_for_label(config.num_qubits, label);
    const std::uint64_t stream = derive_stream(config.seed, i);
    Rng rng(stream);
    ds.samples[i] = sample_class(topo, config.noise, config.which, rng, stream);
  });

  // Stratified split; integer arithmetic keeps 0.7 * per_class exact.
  const int train_per_class = (7 * config.per_class + 9) / 10;
  for (int c = 0; c < k; ++c) {
    std::vector<int> local(config.per_class);
    for (int i = 0; i < config.per_class; ++i) local[i] = c * config.per_class + i;
    Rng srng(derive_stream(config.seed ^ kSplitSalt, c));
    for (int i = config.per_class - 1; i > 0; --i) {
      const int j = static_cast<int>(srng.below(i + 1));
      std::swap(local[i], local[j]);
    }
    for (int i = 0; i < config.per_class; ++i) {
      if (i < train_per_class)
        ds.train_indices.push_back(local[i]);
      else
        ds.test_indices.push_back(local[i]);
    }
  }
  std::sort(ds.train_indices.begin(), ds.train_indices.end());
  std::sort(ds.test_indices.begin(), ds.test_indices.end());
  return ds;
}

StateVector realize_state(const DataSample& sample) {
  const Circuit prep =
      build_prep_circuit(sample.topology, sample.noise, sample.which);
  return run(prep.bind(sample.params),
             StateVector::zero_state(sample.topology.num_qubits));
}

std::string to_jsonl(const Dataset& dataset) {
  std::string out = header_line(dataset);
  out += "\n";
  for (const auto& s : dataset.samples) {
    out += sample_line(s);
    out += "\n";
  }
  return out;
}

void save(const Dataset& dataset, std::ostream& out) {
  out << to_jsonl(dataset);
}

void save(const Dataset& dataset, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("save: cannot open " + path);
  save(dataset, out);
  if (!out) throw std::runtime_error("save: write failed for " + path);
}

namespace {

nlohmann::json parse_line(const std::string& line, std::size_t byte_offset) {
  try {
    return nlohmann::json::parse(line);
  } catch (const std::exception& e) {
    throw std::runtime_error("dataset parse error at byte " +
                             std::to_string(byte_offset) + ": " + e.what());
  }
}

DataSample sample_from_json(const nlohmann::json& j, std::size_t byte_offset) {
  try {
    DataSample s;
    const auto& topo = j.at("topology");
    s.topology.num_qubits = topo.at("num_qubits").get<int>();
    for (const auto& p : topo.at("pairs"))
      s.topology.entangling_pairs.emplace_back(p.at(0).get<int>(),
                                               p.at(1).get<int>());
    s.topology.intended_label = topo.at("intended_label").get<int>();
    s.noise = channel_family_from_string(j.at("noise").get<std::string>());
    s.which = which_unitary_from_string(j.at("which").get<std::string>());
    s.params = j.at("params").get<std::vector<double>>();
    s.label = j.at("label").get<int>();
    s.entropies.per_qubit_bits =
        j.at("entropies").get<std::vector<double>>();
    s.entropies.eps = j.at("eps").get<double>();
    s.seed_trace = j.at("seed_trace").get<std::uint64_t>();
    return s;
  } catch (const std::exception& e) {
    throw std::runtime_error("dataset field error at byte " +
                             std::to_string(byte_offset) + ": " + e.what());
  }
}

}  // namespace

Dataset load_from_string(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;

  if (!std::getline(in, line))
    throw std::runtime_error("dataset parse error at byte 0: missing header");
  const auto header = parse_line(line, offset);
  offset += line.size() + 1;
  if (header.value("format", "") != "qsc-dataset")
    throw std::runtime_error("load: not a qsc-dataset file");
  if (header.at("version").get<int>() != 1)
    throw std::runtime_error("load: unsupported dataset version");

  Dataset ds;
  ds.num_qubits = header.at("num_qubits").get<int>();
  ds.num_classes = header.at("num_classes").get<int>();
  ds.config.num_qubits = ds.num_qubits;
  ds.config.noise =
      channel_family_from_string(header.at("noise").get<std::string>());
  ds.config.which =
      which_unitary_from_string(header.at("which").get<std::string>());
  ds.config.per_class = header.at("per_class").get<int>();
  ds.config.seed = header.at("seed").get<std::uint64_t>();
  ds.train_indices = header.at("train_indices").get<std::vector<int>>();
  ds.test_indices = header.at("test_indices").get<std::vector<int>>();

  while (std::getline(in, line)) {
    if (line.empty()) {
      offset += 1;
      continue;
    }
    const auto j = parse_line(line, offset);
    ds.samples.push_back(sample_from_json(j, offset));
    offset += line.size() + 1;
  }

  for (int idx : ds.train_indices)
    if (idx < 0 || idx >= static_cast<int>(ds.samples.size()))
      throw std::runtime_error("load: train index out of range");
  for (int idx : ds.test_indices)
    if (idx < 0 || idx >= static_cast<int>(ds.samples.size()))
      throw std::runtime_error("load: test index out of range");
  return ds;
}

Dataset load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_from_string(buf.str());
}

AuditResult audit(const Dataset& dataset) {
  AuditResult result;
  std::vector<std::string> messages(dataset.samples.size());
  parallel_for(dataset.samples.size(), dataset.config.threads,
               [&](std::size_t i) {
                 const DataSample& s = dataset.samples[i];
                 try {
                   const StateVector state = realize_state(s);
                   const Classification cls = classify(state, s.entropies.eps);
                   if (cls.label != s.label) {
                     messages[i] = "label mismatch: stored " +
                                   std::to_string(s.label) + ", recomputed " +
                                   std::to_string(cls.label);
                     return;
                   }
                   for (std::size_t q = 0;
                        q < cls.signature.per_qubit_bits.size(); ++q) {
                     const double diff =
                         std::abs(cls.signature.per_qubit_bits[q] -
                                  s.entropies.per_qubit_bits[q]);
                     if (diff > 1e-8) {
                       messages[i] = "entropy mismatch on qubit " +
                                     std::to_string(q) + " (diff " +
                                     fmt_double(diff) + ")";
                       return;
                     }
                   }
                 } catch (const std::exception& e) {
                   messages[i] = std::string("re-simulation failed: ") + e.what();
                 }
               });
  for (std::size_t i = 0; i < messages.size(); ++i)
    if (!messages[i].empty())
      result.issues.push_back({static_cast<int>(i), messages[i]});
  return result;
}

}  // namespace qsc
