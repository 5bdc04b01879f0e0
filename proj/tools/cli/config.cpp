// Copyright 2026 The qtedge Authors
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

#include "config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qtedge/errors.hpp"

namespace qtedge::cli {
namespace {

ParamSpec num(std::string name, double value, std::string help) {
  return {std::move(name), value, std::move(help), false, {}};
}

ParamSpec count(std::string name, double value, std::string help) {
  return {std::move(name), value, std::move(help), true, {}};
}

ParamSpec choice(std::string name, std::vector<std::string> labels, std::string help) {
  return {std::move(name), 0.0, std::move(help), false, std::move(labels)};
}

using Schemas = std::map<std::pair<Model, std::string>, std::vector<ParamSpec>>;

const Schemas& all_schemas() {
  static const Schemas table = [] {
    Schemas s;
    s[{Model::kHelstrom, ""}] = {
        num("fidelity", 0.5, "squared overlap F of the two hypotheses"),
        num("p0", 0.5, "prior of H0 (p1 = 1 - p0)")};

    const auto copies = std::vector<ParamSpec>{
        count("n", 100, "number of independent copies N"),
        num("var-q", 1.0, "variance of the perturbing generator, Delta q^2"),
        num("t", 1.0, "evolution time")};
    auto qfi = copies;
    qfi.push_back(num("step", 1e-3, "finite-difference step in delta"));
    s[{Model::kStandard, "qfi"}] = qfi;
    auto detectable = copies;
    detectable.push_back(num("fidelity", 0.5, "target fidelity F'"));
    s[{Model::kStandard, "detectable"}] = detectable;

    const auto chain = std::vector<ParamSpec>{
        count("n", 8, "number of sites N"), num("j", 1.0, "coupling J (inverse time)")};
    auto exact = chain;
    exact.push_back(num("g0", 0.9, "field of H0 in units of J"));
    exact.push_back(num("g1", 1.1, "field of H1 in units of J"));
    exact.push_back(num("t", 0.5, "evolution time"));
    exact.push_back(choice("grid", {"integer", "half-shifted"},
                           "momentum grid: integer (2 pi k/N) or half-shifted (2 pi (k-1/2)/N)"));
    s[{Model::kIsing, "exact"}] = exact;
    auto asym = std::vector<ParamSpec>{count("n", 1048576, "number of sites N"),
                                       num("j", 1.0, "coupling J (inverse time)"),
                                       num("g1", 1.2, "field of H1 in units of J"),
                                       num("delta", 1e-3, "perturbation g1 - g0")};
    auto asym_t = asym;
    asym_t.push_back(num("t", 0.05, "evolution time"));
    s[{Model::kIsing, "asymptotic"}] = asym_t;
    auto tf = asym;
    tf.push_back(num("fidelity", 0.5, "target fidelity"));
    s[{Model::kIsing, "time-for-f"}] = tf;

    const auto two_ham = std::vector<ParamSpec>{
        num("omega0", 1.0, "frequency of H0"), num("omega1", 1.0, "frequency of H1"),
        num("g0", 0.8, "criticality 2 lambda0/omega0 of H0"),
        num("g1", 1.25, "criticality 2 lambda1/omega1 of H1"), num("t", 1.0, "evolution time")};
    auto opo = two_ham;
    opo.push_back(count("truncation", 200, "Fock truncation D for --oracle-check"));
    s[{Model::kOpo, "fidelity"}] = opo;
    s[{Model::kOpo, "worst-case"}] = {num("lambda1", 0.5, "pump coefficient of H1"),
                                      num("delta", 1e-3, "perturbation g1 - g0"),
                                      num("t", 1.0, "evolution time")};
    s[{Model::kOpo, "multimode"}] = {count("n-modes", 1000, "number of modes N"),
                                     num("lambda1", 0.5, "pump coefficient of H1"),
                                     num("delta", 1e-3, "perturbation g1 - g0"),
                                     num("t", 1.0, "evolution time"),
                                     num("fidelity", 0.5, "target fidelity F'")};
    auto receiver = two_ham;
    receiver.push_back(num("p0", 0.5, "prior of H0"));
    receiver.push_back(count("truncation", 200, "Fock truncation D for --oracle-check"));
    receiver.push_back(count("n-max", 40, "largest b0 photon number for --oracle-check"));
    s[{Model::kOpo, "receiver"}] = receiver;

    auto dicke = two_ham;
    dicke[2].default_value = 0.9;
    dicke[3].default_value = 1.1;
    dicke[4].default_value = 2.0;
    dicke.push_back(count("truncation", 30, "levels per mode for --oracle-check (<= 40)"));
    s[{Model::kDicke, "fidelity"}] = dicke;

    s[{Model::kFisher, "threshold"}] = {num("gamma-norm", 1e-3, "normalized coupling rate Gamma")};
    s[{Model::kFisher, "point"}] = {
        num("g", 0.6, "normalized pump g"), num("gamma-norm", 0.2, "normalized coupling rate Gamma"),
        num("s-in", 0.5, "input noise power"), num("s-prime", 0.5, "excess noise power"),
        num("step", 1e-3, "relative step of the Bhattacharyya second difference")};
    s[{Model::kFisher, "sweep"}] = {
        num("gamma-norm", 0.01, "normalized coupling rate Gamma"),
        num("g-min", 0.5, "first g"),
        num("g-max", 0.0, "last g; 0 selects 0.9999 g_th"),
        count("points", 200, "number of grid points"),
        choice("scale", {"log", "linear"}, "grid spacing"),
        num("s-in", 0.5, "input noise power"), num("s-prime", 0.5, "excess noise power")};
    s[{Model::kOracle, "compare"}] = {};
    return s;
  }();
  return table;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const ParamSpec* find(const std::vector<ParamSpec>& params, const std::string& name) {
  for (const auto& p : params) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

}  // namespace

const char* model_name(Model model) {
  switch (model) {
    case Model::kHelstrom: return "helstrom";
    case Model::kStandard: return "standard";
    case Model::kIsing: return "ising";
    case Model::kOpo: return "opo";
    case Model::kDicke: return "dicke";
    case Model::kFisher: return "fisher";
    case Model::kOracle: return "oracle";
  }
  return "?";
}

Model parse_model(const std::string& name) {
  for (Model m : {Model::kHelstrom, Model::kStandard, Model::kIsing, Model::kOpo, Model::kDicke, Model::kFisher,
                  Model::kOracle}) {
    if (name == model_name(m)) return m;
  }
  throw DomainError("unknown model '" + name + "'");
}

void SweepSpec::validate() const {
  if (variable.empty()) throw DomainError("sweep: variable name is empty");
  if (points < 1) throw DomainError("sweep: points must be >= 1");
  if (!std::isfinite(start) || !std::isfinite(stop)) throw DomainError("sweep: bounds must be finite");
  if (points > 1 && !(start < stop)) throw DomainError("sweep: start must be < stop");
  if (scale == Scale::kLog && !(start > 0.0)) throw DomainError("sweep: log scale needs start > 0");
}

std::vector<double> SweepSpec::values() const {
  validate();
  std::vector<double> v(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double u = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    v[i] = scale == Scale::kLog ? std::exp(std::log(start) + u * (std::log(stop) - std::log(start)))
                                : start + u * (stop - start);
  }
  if (points > 1) v.back() = stop;
  v.front() = start;
  return v;
}

const std::vector<ParamSpec>& schema(Model model, const std::string& command) {
  const auto& table = all_schemas();
  const auto it = table.find({model, command});
  if (it == table.end()) {
    throw DomainError(std::string("unknown command '") + command + "' for model " +
                      model_name(model));
  }
  return it->second;
}

double parse_value(const ParamSpec& spec, const std::string& text) {
  const std::string v = trim(text);
  if (!spec.choices.empty()) {
    for (std::size_t i = 0; i < spec.choices.size(); ++i) {
      if (v == spec.choices[i]) return static_cast<double>(i);
    }
    std::string msg = spec.name + ": expected one of";
    for (const auto& c : spec.choices) msg += " " + c;
    throw DomainError(msg + ", got '" + v + "'");
  }
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    throw DomainError(spec.name + ": '" + v + "' is not a decimal number");
  }
  if (used != v.size() || !std::isfinite(x)) {
    throw DomainError(spec.name + ": '" + v + "' is not a finite decimal number");
  }
  if (spec.integer && x != std::floor(x)) {
    throw DomainError(spec.name + ": expected an integer, got '" + v + "'");
  }
  return x;
}

std::map<std::string, std::string> parse_config_text(const std::string& text, Model model,
                                                     const std::string& command) {
  const auto& params = schema(model, command);
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "config line " + std::to_string(line_no) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') throw DomainError(where + "malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      parse_model(section);  // rejects unknown sections
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw DomainError(where + "expected key = value");
    if (section.empty()) throw DomainError(where + "key outside of a [model] section");
    if (section != model_name(model)) continue;
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const ParamSpec* spec = find(params, key);
    if (!spec) {
      bool known = false;
      for (const auto& [id, other] : all_schemas()) {
        if (id.first == model && find(other, key)) known = true;
      }
      if (!known) {
        throw DomainError(where + "unknown key '" + key + "' in [" + section + "]");
      }
      continue;
    }
    parse_value(*spec, value);
    out[key] = value;
  }
  return out;
}

std::map<std::string, std::string> read_config_file(const std::string& path, Model model,
                                                    const std::string& command) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), model, command);
}

Params resolve_parameters(const std::vector<ParamSpec>& params,
                          const std::map<std::string, std::string>& file_values,
                          const std::map<std::string, std::string>& flag_values) {
  Params out;
  for (const auto& spec : params) out[spec.name] = spec.default_value;
  for (const auto* layer : {&file_values, &flag_values}) {
    for (const auto& [key, value] : *layer) {
      const ParamSpec* spec = find(params, key);
      if (!spec) throw DomainError("unknown parameter '" + key + "'");
      out[key] = parse_value(*spec, value);
    }
  }
  return out;
}

}  // namespace qtedge::cli
