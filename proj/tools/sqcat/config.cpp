#include "config.hpp"

#include "sqcat/error.hpp"
#include "sqcat/hamiltonians.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>

namespace sqcat::cli {

using nlohmann::json;

namespace {

// Locates the first occurrence of a quoted key so errors can point at a line.
std::optional<int> line_of_key(const std::string& text, const std::string& key) {
  const auto pos = text.find("\"" + key + "\"");
  if (pos == std::string::npos) return std::nullopt;
  int line = 1;
  for (std::size_t i = 0; i < pos; ++i)
    if (text[i] == '\n') ++line;
  return line;
}

class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  [[noreturn]] void fail(const std::string& path, const std::string& key, const std::string& msg) const {
    std::ostringstream os;
    if (const auto line = line_of_key(text_, key)) os << "line " << *line << ": ";
    os << path << ": " << msg;
    throw ConfigError(os.str());
  }

  void require_object(const json& j, const std::string& path, const std::string& key) const {
    if (!j.is_object()) fail(path, key, "expected an object");
  }

  void check_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) const {
    for (const auto& [k, v] : j.items()) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || k == a;
      if (!ok) fail(path.empty() ? k : path + "." + k, k, "unknown key \"" + k + "\"");
    }
  }

  double number(const json& j, const std::string& path, const std::string& key) const {
    if (!j.is_number()) fail(path, key, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(path, key, "must be finite");
    return v;
  }

  int integer(const json& j, const std::string& path, const std::string& key) const {
    if (!j.is_number_integer()) fail(path, key, "expected an integer");
    return j.get<int>();
  }

  std::string string(const json& j, const std::string& path, const std::string& key) const {
    if (!j.is_string()) fail(path, key, "expected a string");
    return j.get<std::string>();
  }

  // A complex value is a plain number or {"re": x, "im": y}.
  Complex complex(const json& j, const std::string& path, const std::string& key) const {
    if (j.is_number()) return {number(j, path, key), 0.0};
    if (!j.is_object()) fail(path, key, "expected a number or {\"re\", \"im\"}");
    check_keys(j, path, {"re", "im"});
    const double re = j.contains("re") ? number(j["re"], path + ".re", "re") : 0.0;
    const double im = j.contains("im") ? number(j["im"], path + ".im", "im") : 0.0;
    return {re, im};
  }

 private:
  const std::string& text_;
};

json complex_json(Complex c) { return json{{"re", c.real()}, {"im", c.imag()}}; }

json params_json(const PhysParams& p) {
  return json{{"hbar_omega", p.hbar_omega},
              {"e_j", p.e_j},
              {"e_z", p.e_z},
              {"beta", complex_json(p.beta)},
              {"gamma_flux", p.gamma_flux}};
}

}  // namespace

Preset parse_preset(const std::string& name) {
  if (name == "default") return Preset::Default;
  if (name == "deep-squeeze") return Preset::DeepSqueeze;
  throw ConfigError("unknown preset \"" + name + "\" (expected default or deep-squeeze)");
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string params_hash(const PhysParams& p) { return fnv1a_hex(params_json(p).dump()); }

json ScenarioConfig::to_json() const {
  json wig{{"outcome", wigner.outcome == Qubit::g ? "g" : "e"},
           {"x_min", wigner.spec.x_min},
           {"x_max", wigner.spec.x_max},
           {"p_min", wigner.spec.p_min},
           {"p_max", wigner.spec.p_max},
           {"resolution", wigner.spec.resolution}};
  if (wigner.t) wig["t"] = *wigner.t;
  if (wigner.squeeze_r) wig["squeeze_r"] = *wigner.squeeze_r;
  return json{{"preset", to_string(preset)},
              {"params", params_json(params)},
              {"gamma_amp", complex_json(gamma_amp)},
              {"dims", {{"n_fock", dims.n_fock}, {"guard", dims.guard}}},
              {"grid", {{"t_start", grid.t_start}, {"t_end", grid.t_end}, {"n_points", grid.n_points}}},
              {"outputs", std::vector<std::string>(outputs.begin(), outputs.end())},
              {"wigner", wig},
              {"sweep", {{"parameter", sweep.parameter}, {"values", sweep.values}, {"r_target", sweep.r_target}}}};
}

std::string ScenarioConfig::hash() const { return fnv1a_hex(to_json().dump()); }

double ScenarioConfig::wigner_time() const {
  if (wigner.t) return *wigner.t;
  if (wigner.squeeze_r) return *wigner.squeeze_r / (2.0 * squeeze_rate(params));
  return grid.t_start;
}

ScenarioConfig default_config(Preset preset) {
  ScenarioConfig c;
  c.preset = preset;
  c.params = preset_params(preset);
  return c;
}

void validate(const ScenarioConfig& c) {
  try {
    c.params.validate();
    c.dims.validate_for_displacement();
    c.grid.validate();
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  for (const auto& o : c.outputs)
    if (o != "timeseries" && o != "wigner" && o != "sweep") throw ConfigError("outputs: unknown output \"" + o + "\"");
  try {
    c.wigner.spec.validate();
  } catch (const Error& e) {
    throw ConfigError(std::string("wigner: ") + e.what());
  }
  if (c.wigner.t && c.wigner.squeeze_r) throw ConfigError("wigner: give either t or squeeze_r, not both");
  if (c.wigner.t && (*c.wigner.t < c.grid.t_start || *c.wigner.t > c.grid.t_end))
    throw ConfigError("wigner.t lies outside the time grid");
  if (c.wigner.squeeze_r && !(*c.wigner.squeeze_r >= 0.0)) throw ConfigError("wigner.squeeze_r must be >= 0");
  if (c.sweep.parameter != "beta" && c.sweep.parameter != "hbar_omega")
    throw ConfigError("sweep.parameter must be \"beta\" or \"hbar_omega\"");
  if (c.sweep.values.empty()) throw ConfigError("sweep.values must not be empty");
  if (!(c.sweep.r_target > 0.0)) throw ConfigError("sweep.r_target must be positive");
}

ScenarioConfig parse_config(const std::string& text, std::optional<Preset> preset_override) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset -> line
    int line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ConfigError("line " + std::to_string(line) + ": JSON syntax error: " + e.what());
  }
  const Reader r(text);
  r.require_object(root, "<root>", "");
  r.check_keys(root, "", {"preset", "params", "gamma_amp", "dims", "grid", "outputs", "wigner", "sweep"});

  Preset preset = Preset::Default;
  if (root.contains("preset")) {
    try {
      preset = parse_preset(r.string(root["preset"], "preset", "preset"));
    } catch (const ConfigError& e) {
      r.fail("preset", "preset", e.what());
    }
  }
  if (preset_override) preset = *preset_override;
  ScenarioConfig c = default_config(preset);

  if (root.contains("params")) {
    const json& p = root["params"];
    r.require_object(p, "params", "params");
    r.check_keys(p, "params", {"hbar_omega", "e_j", "e_z", "beta", "gamma_flux"});
    if (p.contains("hbar_omega")) c.params.hbar_omega = r.number(p["hbar_omega"], "params.hbar_omega", "hbar_omega");
    if (p.contains("e_j")) c.params.e_j = r.number(p["e_j"], "params.e_j", "e_j");
    if (p.contains("e_z")) c.params.e_z = r.number(p["e_z"], "params.e_z", "e_z");
    if (p.contains("beta")) c.params.beta = r.complex(p["beta"], "params.beta", "beta");
    if (p.contains("gamma_flux")) c.params.gamma_flux = r.number(p["gamma_flux"], "params.gamma_flux", "gamma_flux");
  }
  if (root.contains("gamma_amp")) c.gamma_amp = r.complex(root["gamma_amp"], "gamma_amp", "gamma_amp");
  if (root.contains("dims")) {
    const json& d = root["dims"];
    r.require_object(d, "dims", "dims");
    r.check_keys(d, "dims", {"n_fock", "guard"});
    if (d.contains("n_fock")) c.dims.n_fock = r.integer(d["n_fock"], "dims.n_fock", "n_fock");
    if (d.contains("guard")) c.dims.guard = r.integer(d["guard"], "dims.guard", "guard");
    if (c.dims.n_fock < 8) r.fail("dims.n_fock", "n_fock", "n_fock = " + std::to_string(c.dims.n_fock) + " is below the minimum 8");
  }
  if (root.contains("grid")) {
    const json& g = root["grid"];
    r.require_object(g, "grid", "grid");
    r.check_keys(g, "grid", {"t_start", "t_end", "n_points"});
    if (g.contains("t_start")) c.grid.t_start = r.number(g["t_start"], "grid.t_start", "t_start");
    if (g.contains("t_end")) c.grid.t_end = r.number(g["t_end"], "grid.t_end", "t_end");
    if (g.contains("n_points")) c.grid.n_points = r.integer(g["n_points"], "grid.n_points", "n_points");
  }
  if (root.contains("outputs")) {
    const json& o = root["outputs"];
    if (!o.is_array()) r.fail("outputs", "outputs", "expected an array of strings");
    c.outputs.clear();
    for (const auto& item : o) c.outputs.insert(r.string(item, "outputs", "outputs"));
  }
  if (root.contains("wigner")) {
    const json& w = root["wigner"];
    r.require_object(w, "wigner", "wigner");
    r.check_keys(w, "wigner", {"t", "squeeze_r", "outcome", "x_min", "x_max", "p_min", "p_max", "resolution"});
    if (w.contains("t")) c.wigner.t = r.number(w["t"], "wigner.t", "t");
    if (w.contains("squeeze_r")) c.wigner.squeeze_r = r.number(w["squeeze_r"], "wigner.squeeze_r", "squeeze_r");
    if (w.contains("outcome")) {
      const std::string o = r.string(w["outcome"], "wigner.outcome", "outcome");
      if (o != "g" && o != "e") r.fail("wigner.outcome", "outcome", "expected \"g\" or \"e\"");
      c.wigner.outcome = o == "g" ? Qubit::g : Qubit::e;
    }
    auto& s = c.wigner.spec;
    if (w.contains("x_min")) s.x_min = r.number(w["x_min"], "wigner.x_min", "x_min");
    if (w.contains("x_max")) s.x_max = r.number(w["x_max"], "wigner.x_max", "x_max");
    if (w.contains("p_min")) s.p_min = r.number(w["p_min"], "wigner.p_min", "p_min");
    if (w.contains("p_max")) s.p_max = r.number(w["p_max"], "wigner.p_max", "p_max");
    if (w.contains("resolution")) s.resolution = r.integer(w["resolution"], "wigner.resolution", "resolution");
    if (!(s.x_min < s.x_max)) r.fail("wigner.x_min", "x_min", "malformed range: x_min must be below x_max");
    if (!(s.p_min < s.p_max)) r.fail("wigner.p_min", "p_min", "malformed range: p_min must be below p_max");
  }
  if (root.contains("sweep")) {
    const json& s = root["sweep"];
    r.require_object(s, "sweep", "sweep");
    r.check_keys(s, "sweep", {"parameter", "values", "r_target"});
    if (s.contains("parameter")) c.sweep.parameter = r.string(s["parameter"], "sweep.parameter", "parameter");
    if (s.contains("values")) {
      if (!s["values"].is_array()) r.fail("sweep.values", "values", "expected an array of numbers");
      c.sweep.values.clear();
      for (const auto& v : s["values"]) c.sweep.values.push_back(r.number(v, "sweep.values", "values"));
    }
    if (s.contains("r_target")) c.sweep.r_target = r.number(s["r_target"], "sweep.r_target", "r_target");
  }
  validate(c);
  return c;
}

ScenarioConfig load_config(const std::string& path, std::optional<Preset> preset_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str(), preset_override);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

}  // namespace sqcat::cli
