// Copyright 2026 The lcnns Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "lcnns/arch.hpp"
#include "lcnns/circuit.hpp"
#include "lcnns/error.hpp"
#include "lcnns/gf2.hpp"
#include "lcnns/rng.hpp"
#include "lcnns/segment.hpp"
#include "lcnns/synth.hpp"

namespace lcnns::cli {
namespace {

using nlohmann::ordered_json;

// A verification mismatch; maps to exit code 1.
class Mismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string arch;
  std::uint64_t seed = 0;
  int tabu_len = 20;
  int iterations = 50;
  std::uint64_t shots = 0;
  std::string format = "table";
  std::string out;
  std::optional<double> one_q_error;

  TabuConfig tabu() const { return {tabu_len, iterations, seed}; }
};

void add_tabu_flags(CLI::App* cmd, Common& o) {
  cmd->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--tabu-len", o.tabu_len, "Tabu table length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--iterations", o.iterations, "Tabu iterations")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

void add_report_flags(CLI::App* cmd, Common& o) {
  cmd->add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Write the primary output to this file");
}

void add_noise_flags(CLI::App* cmd, Common& o) {
  cmd->add_option("--shots", o.shots, "Monte-Carlo shots (0 = ESP only)")->capture_default_str();
  cmd->add_option("--one-q-error", o.one_q_error,
                  "Single-qubit gate error (default: architecture value)")
      ->check(CLI::Range(0.0, 1.0));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
  if (!f.flush()) throw InputError("failed writing '" + path + "'");
}

void emit(const Common& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text);
  }
}

Circuit load_circuit(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_qasm(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string fixed(double v, int digits) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(digits) << v;
  return ss.str();
}

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += sep;
    s += std::to_string(v[k]);
  }
  return s;
}

// Columns padded to their widest cell. The first column is left-aligned;
// the rest are right-aligned unless `left` is set.
std::string render_table(const std::vector<std::vector<std::string>>& rows, bool left = false) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::string s;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) line += "  ";
      const std::string pad(width[c] - r[c].size(), ' ');
      line += c == 0 || left ? r[c] + pad : pad + r[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    s += line + "\n";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Metric rows shared by synth and bench.

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

const char* const kCsvHeader = "arch,n,input_gates,cnot,depth,esp,mc_fidelity,ms";

struct Row {
  std::string arch;
  int n = 0;
  double input_gates = 0;
  double cnot = 0;
  double depth = 0;
  double esp = 1.0;
  std::optional<double> mc;
  std::optional<double> ms;
  bool mean = false;
};

std::vector<std::string> cells(const Row& r) {
  const int d = r.mean ? 2 : 0;
  return {r.mean ? "mean(" + r.arch + ")" : r.arch,
          std::to_string(r.n),
          fixed(r.input_gates, d),
          fixed(r.cnot, d),
          fixed(r.depth, d),
          fixed(r.esp, 6),
          r.mc ? fixed(*r.mc, 6) : "",
          r.ms ? fixed(*r.ms, 3) : ""};
}

ordered_json to_json(const Row& r) {
  ordered_json j;
  j["arch"] = r.arch;
  j["n"] = r.n;
  j["input_gates"] = r.input_gates;
  j["cnot"] = r.cnot;
  j["depth"] = r.depth;
  j["esp"] = r.esp;
  j["mc_fidelity"] = r.mc ? ordered_json(*r.mc) : ordered_json(nullptr);
  j["ms"] = r.ms ? ordered_json(*r.ms) : ordered_json(nullptr);
  return j;
}

std::string render_rows(const std::vector<Row>& rows, const std::string& format) {
  if (format == "json") {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) {
      auto item = to_json(r);
      item["kind"] = r.mean ? "mean" : "instance";
      j.push_back(std::move(item));
    }
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string s = std::string(kCsvHeader) + "\n";
    for (const auto& r : rows) {
      const auto c = cells(r);
      for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + csv_field(c[k]);
      s += "\n";
    }
    return s;
  }
  std::vector<std::vector<std::string>> table{
      {"arch", "n", "input_gates", "cnot", "depth", "esp", "mc_fidelity", "ms"}};
  for (const auto& r : rows) table.push_back(cells(r));
  return render_table(table);
}

Row mean_of(const std::vector<Row>& group) {
  Row m = group.front();
  m.mean = true;
  m.input_gates = m.cnot = m.depth = m.esp = 0;
  double mc = 0, ms = 0;
  for (const auto& r : group) {
    m.input_gates += r.input_gates;
    m.cnot += r.cnot;
    m.depth += r.depth;
    m.esp += r.esp;
    if (r.mc) mc += *r.mc;
    if (r.ms) ms += *r.ms;
  }
  const auto k = static_cast<double>(group.size());
  m.input_gates /= k;
  m.cnot /= k;
  m.depth /= k;
  m.esp /= k;
  if (m.mc) m.mc = mc / k;
  if (m.ms) m.ms = ms / k;
  return m;
}

double one_qubit_error(const Common& o, const CouplingGraph& g) {
  return o.one_q_error ? *o.one_q_error : g.one_qubit_error();
}

std::optional<double> maybe_mc(const Circuit& c, const CouplingGraph& g, std::uint64_t shots,
                               std::uint64_t seed) {
  if (shots == 0) return std::nullopt;
  if (!c.cnot_only()) {
    throw InputError("--shots needs a CNOT-only circuit; use --shots 0 for ESP only");
  }
  return monte_carlo_fidelity(c, g, shots, seed);
}

// ---------------------------------------------------------------------------
// arch

int cmd_arch(const Common& o, std::ostream& out) {
  const CouplingGraph g = resolve_arch(o.arch);
  const auto cuts = articulation_points(g);
  const auto keys = key_qubits(g);
  std::optional<std::vector<int>> path;
  bool decided = true;
  if (g.num_vertices() <= kMaxHamiltonianVertices) {
    path = has_hamiltonian_path(g);
  } else {
    decided = false;
  }

  std::string text;
  if (o.format == "json") {
    ordered_json j;
    j["arch"] = g.name();
    j["qubits"] = g.num_vertices();
    j["one_qubit_error"] = g.one_qubit_error();
    ordered_json edges = ordered_json::array();
    for (const auto& e : g.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"error", e.error}});
    j["edges"] = std::move(edges);
    j["cut_points"] = cuts;
    j["key_qubits"] = keys;
    j["hamiltonian"] = decided ? ordered_json(path.has_value()) : ordered_json(nullptr);
    if (path) j["hamiltonian_path"] = *path;
    text = j.dump(2) + "\n";
  } else if (o.format == "csv") {
    text = "u,v,error\n";
    for (const auto& e : g.edges()) {
      text += std::to_string(e.u) + "," + std::to_string(e.v) + "," + fixed(e.error, 6) + "\n";
    }
  } else {
    std::vector<std::vector<std::string>> head{
        {"arch:", g.name()},
        {"qubits:", std::to_string(g.num_vertices())},
        {"one-qubit error:", fixed(g.one_qubit_error(), 6)},
        {"cut points:", join(cuts)},
        {"key qubits:", join(keys)},
        {"hamiltonian:",
         !decided ? "unknown (more than " + std::to_string(kMaxHamiltonianVertices) + " qubits)"
         : path   ? "yes (" + join(*path) + ")"
                  : "no"}};
    text = render_table(head, true);
    std::vector<std::vector<std::string>> edges{{"edge", "error"}};
    for (const auto& e : g.edges()) {
      edges.push_back({std::to_string(e.u) + "-" + std::to_string(e.v), fixed(e.error, 6)});
    }
    text += "\n" + render_table(edges);
  }
  emit(o, out, text);
  return kOk;
}

// ---------------------------------------------------------------------------
// synth

int cmd_synth(const Common& o, const std::string& input, const std::string& map_path,
              std::ostream& out, std::ostream& err) {
  const Circuit c = load_circuit(input);
  const CouplingGraph g = resolve_arch(o.arch);
  Synthesizer synth(g, o.tabu());
  const SegmentedSynthesis result = segment_and_synthesize(c, synth);
  for (std::size_t k = 0; k < result.segments.size(); ++k) {
    const auto& seg = result.segments[k];
    const auto v = verify_equivalence(seg.matrix, seg.result, g);
    if (!v) {
      throw InvariantError("segment " + std::to_string(k) + " failed verification: " +
                           v.diagnostic);
    }
  }

  Row row;
  row.arch = g.name();
  row.n = c.num_qubits();
  row.input_gates = static_cast<double>(c.size());
  row.cnot = static_cast<double>(result.circuit.cnot_count());
  row.depth = static_cast<double>(depth(result.circuit));
  row.esp = esp(result.circuit, g, one_qubit_error(o, g));
  row.mc = maybe_mc(result.circuit, g, o.shots, o.seed);

  std::string metrics;
  if (o.format == "table") {
    std::vector<std::vector<std::string>> t{
        {"arch:", row.arch},
        {"qubits:", std::to_string(row.n)},
        {"input gates:", std::to_string(c.size())},
        {"cnot_count:", std::to_string(result.circuit.cnot_count())},
        {"depth:", std::to_string(depth(result.circuit))},
        {"esp:", fixed(row.esp, 6)},
        {"mc_fidelity:", row.mc ? fixed(*row.mc, 6) : "-"},
        {"mapping:", join(result.mapping.assign)}};
    metrics = render_table(t, true);
  } else if (o.format == "json") {
    auto j = to_json(row);
    j.erase("ms");
    j["segments"] = result.segments.size();
    j["mapping"] = result.mapping.assign;
    metrics = j.dump(2) + "\n";
  } else {
    metrics = render_rows({row}, "csv");
  }

  if (!map_path.empty()) write_file(map_path, write_mapping(result.mapping));
  const std::string qasm = write_qasm(result.circuit);
  if (o.out.empty()) {
    out << qasm;
    err << metrics;
  } else {
    write_file(o.out, qasm);
    out << metrics;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct Blocks {
  std::vector<ParityMatrix> cnot_blocks;  // one more than `others`
  std::vector<Gate> others;
  std::size_t cnots = 0;
};

Blocks split_blocks(const Circuit& c, int n) {
  Blocks b;
  b.cnot_blocks.push_back(ParityMatrix::identity(static_cast<std::size_t>(n)));
  for (const auto& g : c.gates()) {
    if (g.is_cnot()) {
      b.cnot_blocks.back().apply(g.as_cnot());
      ++b.cnots;
    } else {
      b.others.push_back(g);
      b.cnot_blocks.push_back(ParityMatrix::identity(static_cast<std::size_t>(n)));
    }
  }
  return b;
}

Circuit pull_back(const Circuit& physical, const Mapping& pi, int n) {
  std::vector<int> logical(static_cast<std::size_t>(physical.num_qubits()), -1);
  for (std::size_t q = 0; q < pi.size(); ++q) {
    const int p = pi.assign[q];
    if (p >= physical.num_qubits()) {
      throw InputError("mapping places logical " + std::to_string(q) + " on physical " +
                       std::to_string(p) + ", outside q[" +
                       std::to_string(physical.num_qubits()) + "]");
    }
    logical[static_cast<std::size_t>(p)] = static_cast<int>(q);
  }
  Circuit c(n, physical.num_clbits());
  for (std::size_t k = 0; k < physical.size(); ++k) {
    Gate g = physical.gates()[k];
    const int a = logical[static_cast<std::size_t>(g.a)];
    const int b = g.is_cnot() ? logical[static_cast<std::size_t>(g.b)] : 0;
    if (a < 0 || b < 0) {
      throw Mismatch("gate " + std::to_string(k) + " acts on a physical qubit outside the mapping");
    }
    g.a = a;
    if (g.is_cnot()) g.b = b;
    c.add(g);
  }
  return c;
}

std::string describe(const Gate& g) {
  std::string s = std::string(gate_name(g.kind)) + " q[" + std::to_string(g.a) + "]";
  if (g.kind == GateKind::Measure) s += " -> c[" + std::to_string(g.b) + "]";
  return s;
}

int cmd_verify(const Common& o, const std::string& original_path,
               const std::string& synth_path, const std::string& map_path,
               std::ostream& out) {
  const Circuit original = load_circuit(original_path);
  const Circuit physical = load_circuit(synth_path);
  const Mapping pi = parse_mapping(read_file(map_path));
  const int n = original.num_qubits();
  if (static_cast<int>(pi.size()) != n) {
    throw InputError("mapping covers " + std::to_string(pi.size()) + " qubits, circuit has " +
                     std::to_string(n));
  }
  if (!o.arch.empty()) {
    const CouplingGraph g = resolve_arch(o.arch);
    for (std::size_t k = 0; k < physical.size(); ++k) {
      const Gate& gate = physical.gates()[k];
      if (gate.is_cnot() && !g.has_edge(gate.a, gate.b)) {
        throw Mismatch("gate " + std::to_string(k) + " cx q[" + std::to_string(gate.a) +
                       "],q[" + std::to_string(gate.b) + "] is not a coupling of " +
                       g.name());
      }
    }
  }

  const Blocks want = split_blocks(original, n);
  const Blocks got = split_blocks(pull_back(physical, pi, n), n);
  if (want.others.size() != got.others.size()) {
    throw Mismatch("non-CNOT gate count differs: " + std::to_string(want.others.size()) +
                   " vs " + std::to_string(got.others.size()));
  }
  for (std::size_t k = 0; k < want.others.size(); ++k) {
    if (!(want.others[k] == got.others[k])) {
      throw Mismatch("non-CNOT gate " + std::to_string(k) + " differs: " +
                     describe(want.others[k]) + " vs " + describe(got.others[k]));
    }
  }
  for (std::size_t b = 0; b < want.cnot_blocks.size(); ++b) {
    const auto& a = want.cnot_blocks[b];
    const auto& c = got.cnot_blocks[b];
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (a.row(r) != c.row(r)) {
        throw Mismatch("CNOT block " + std::to_string(b) + ", row " + std::to_string(r) +
                       ": expected " + a.row(r).to_string() + ", got " + c.row(r).to_string());
      }
    }
  }
  out << "equivalent: " << want.cnots << " input CNOT(s) as " << got.cnots
      << " synthesized, " << want.others.size() << " other gate(s) in order\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// fidelity

int cmd_fidelity(const Common& o, const std::string& input, std::ostream& out) {
  const Circuit c = load_circuit(input);
  const CouplingGraph g = resolve_arch(o.arch);
  if (c.num_qubits() > g.capacity()) {
    throw InputError("circuit uses " + std::to_string(c.num_qubits()) + " qubits; " + g.name() +
                     " has " + std::to_string(g.capacity()));
  }
  const double e1 = one_qubit_error(o, g);
  const double esp_value = esp(c, g, e1);
  const auto mc = maybe_mc(c, g, o.shots, o.seed);

  std::string text;
  if (o.format == "json") {
    ordered_json j;
    j["arch"] = g.name();
    j["gates"] = c.size();
    j["cnot"] = c.cnot_count();
    j["one_qubit_error"] = e1;
    j["esp"] = esp_value;
    j["mc_fidelity"] = mc ? ordered_json(*mc) : ordered_json(nullptr);
    j["shots"] = o.shots;
    j["seed"] = o.seed;
    text = j.dump(2) + "\n";
  } else if (o.format == "csv") {
    text = "arch,gates,cnot,esp,mc_fidelity,shots,seed\n" + csv_field(g.name()) + "," +
           std::to_string(c.size()) + "," + std::to_string(c.cnot_count()) + "," +
           fixed(esp_value, 6) + "," + (mc ? fixed(*mc, 6) : "") + "," +
           std::to_string(o.shots) + "," + std::to_string(o.seed) + "\n";
  } else {
    text = render_table({{"arch:", g.name()},
                         {"gates:", std::to_string(c.size())},
                         {"cnot:", std::to_string(c.cnot_count())},
                         {"esp:", fixed(esp_value, 6)},
                         {"mc_fidelity:", mc ? fixed(*mc, 6) : "-"},
                         {"shots:", std::to_string(o.shots)},
                         {"seed:", std::to_string(o.seed)}},
                        true);
  }
  emit(o, out, text);
  return kOk;
}

// ---------------------------------------------------------------------------
// bench

int cmd_bench(const Common& o, const std::string& archs_arg, const std::string& sizes_arg,
              int instances, bool timing, std::ostream& out) {
  std::vector<std::size_t> sizes;
  for (const auto& s : split_list(sizes_arg)) {
    std::size_t v = 0;
    std::size_t used = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw InputError("bad size '" + s + "' in --sizes");
    sizes.push_back(v);
  }
  if (sizes.empty()) throw InputError("--sizes is empty");
  const auto archs = split_list(archs_arg);
  if (archs.empty()) throw InputError("--arch is empty");

  std::vector<Row> rows;
  for (const auto& name : archs) {
    const CouplingGraph g = resolve_arch(name);
    Synthesizer synth(g, o.tabu());
    const int n = g.num_vertices();
    if (n < 2) throw InputError(g.name() + " has fewer than 2 qubits");
    for (const std::size_t size : sizes) {
      std::vector<Row> group;
      for (int i = 0; i < instances; ++i) {
        Rng draw = Rng::substream(o.seed, size, static_cast<std::uint64_t>(i));
        const std::uint64_t circuit_seed = draw();
        const std::uint64_t mc_seed = draw();
        const Circuit c = random_cnot_circuit(n, size, circuit_seed);
        const ParityMatrix m = from_circuit(c.cnots(), static_cast<std::size_t>(n));

        const auto t0 = std::chrono::steady_clock::now();
        const SynthesisResult r = synth.run(m);
        const auto t1 = std::chrono::steady_clock::now();
        const auto v = verify_equivalence(m, r, g);
        if (!v) {
          throw InvariantError(g.name() + " size " + std::to_string(size) + " instance " +
                               std::to_string(i) + " failed verification: " + v.diagnostic);
        }

        Circuit phys(g.capacity());
        for (const auto& cx : r.gates) phys.add_cnot(cx.control, cx.target);
        Row row;
        row.arch = g.name();
        row.n = n;
        row.input_gates = static_cast<double>(size);
        row.cnot = static_cast<double>(r.cnot_count);
        row.depth = static_cast<double>(r.depth);
        row.esp = esp(phys, g, one_qubit_error(o, g));
        row.mc = maybe_mc(phys, g, o.shots, mc_seed);
        if (timing) row.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        group.push_back(row);
      }
      if (group.empty()) continue;
      rows.insert(rows.end(), group.begin(), group.end());
      rows.push_back(mean_of(group));
    }
  }
  emit(o, out, render_rows(rows, o.format));
  return kOk;
}

}  // namespace

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

Mapping parse_mapping(std::string_view text) {
  std::vector<std::pair<int, int>> pairs;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    int logical = 0;
    int physical = 0;
    std::string extra;
    if (!(fields >> logical)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError("expected 'logical physical'", line_no);
    }
    if (!(fields >> physical) || (fields >> extra)) {
      throw ParseError("expected 'logical physical'", line_no);
    }
    if (logical < 0 || physical < 0) throw ParseError("negative qubit index", line_no);
    pairs.emplace_back(logical, physical);
  }
  Mapping pi;
  pi.assign.assign(pairs.size(), -1);
  for (const auto& [logical, physical] : pairs) {
    if (static_cast<std::size_t>(logical) >= pairs.size()) {
      throw InputError("mapping: logical " + std::to_string(logical) + " out of range");
    }
    auto& slot = pi.assign[static_cast<std::size_t>(logical)];
    if (slot != -1) throw InputError("mapping: logical " + std::to_string(logical) + " repeated");
    slot = physical;
  }
  for (std::size_t a = 0; a < pi.size(); ++a) {
    for (std::size_t b = a + 1; b < pi.size(); ++b) {
      if (pi.assign[a] == pi.assign[b]) {
        throw InputError("mapping: physical " + std::to_string(pi.assign[a]) + " used twice");
      }
    }
  }
  return pi;
}

std::string write_mapping(const Mapping& pi) {
  std::string s = "# logical physical\n";
  for (std::size_t q = 0; q < pi.size(); ++q) {
    s += std::to_string(q) + " " + std::to_string(pi.assign[q]) + "\n";
  }
  return s;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Layer-convergence CNOT synthesis under connectivity and noise", "lcnns"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  Common o;
  std::string input;
  std::string second;
  std::string map_path;
  std::string bench_archs = "quito";
  std::string sizes = "10,100,1000";
  int instances = 10;
  bool timing = false;

  auto* arch = app.add_subcommand("arch", "Describe a coupling graph");
  arch->add_option("name", o.arch, "Built-in name or architecture file");
  arch->add_option("--arch", o.arch, "Built-in name or architecture file");
  add_report_flags(arch, o);

  auto* synth = app.add_subcommand("synth", "Synthesize a QASM circuit for an architecture");
  synth->add_option("input", input, "Input OpenQASM file")->required();
  synth->add_option("--arch", o.arch, "Built-in name or architecture file")->required();
  synth->add_option("--map", map_path, "Write the logical-to-physical mapping here");
  add_tabu_flags(synth, o);
  add_noise_flags(synth, o);
  add_report_flags(synth, o);

  auto* verify = app.add_subcommand("verify", "Check a synthesized circuit against its source");
  verify->add_option("original", input, "Original OpenQASM file")->required();
  verify->add_option("synthesized", second, "Synthesized OpenQASM file")->required();
  verify->add_option("mapping", map_path, "Mapping file written by synth --map")->required();
  verify->add_option("--arch", o.arch, "Also require every CNOT to be a coupling");

  auto* fidelity = app.add_subcommand("fidelity", "Estimate the fidelity of a physical circuit");
  fidelity->add_option("input", input, "OpenQASM file on physical qubits")->required();
  fidelity->add_option("--arch", o.arch, "Built-in name or architecture file")->required();
  fidelity->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  add_noise_flags(fidelity, o);
  add_report_flags(fidelity, o);

  auto* bench = app.add_subcommand("bench", "Synthesize seeded random circuits and report metrics");
  bench->add_option("--arch", bench_archs, "Comma-separated architectures")
      ->capture_default_str();
  bench->add_option("--sizes", sizes, "Comma-separated gate counts")->capture_default_str();
  bench->add_option("--instances", instances, "Circuits per (arch, size)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_flag("--timing", timing, "Fill the ms column with wall-clock synthesis time");
  add_tabu_flags(bench, o);
  add_noise_flags(bench, o);
  add_report_flags(bench, o);

  try {
    std::vector<std::string> argv(args.rbegin(), args.rend());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*arch) {
      if (o.arch.empty()) throw InputError("arch: missing architecture name");
      return cmd_arch(o, out);
    }
    if (*synth) return cmd_synth(o, input, map_path, out, err);
    if (*verify) return cmd_verify(o, input, second, map_path, out);
    if (*fidelity) return cmd_fidelity(o, input, out);
    if (*bench) return cmd_bench(o, bench_archs, sizes, instances, timing, out);
  } catch (const Mismatch& e) {
    err << "mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace lcnns::cli
