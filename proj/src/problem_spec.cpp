#include "qcurve/problem_spec.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qcurve {

using nlohmann::json;

namespace {

const std::map<std::string, std::vector<std::string>>& family_params() {
  static const std::map<std::string, std::vector<std::string>> table{
      {"single_qubit", {"m0", "mx", "my", "mz"}},
      {"two_qubit_nonlocal", {"m1", "m2", "m3", "m4"}},
      {"two_qubit_local", {"m1", "m2", "m3", "m4"}},
      {"heisenberg3", {"Jx", "Jy", "Jz", "h"}},
  };
  return table;
}

double number_at(const json& j, const std::string& ptr) {
  if (!j.is_number()) throw SchemaError(ptr, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw SchemaError(ptr, "expected a finite number");
  return v;
}

Complex complex_at(const json& j, const std::string& ptr) {
  if (!j.is_array() || j.size() != 2) throw SchemaError(ptr, "expected a [re, im] pair");
  return {number_at(j[0], ptr + "/0"), number_at(j[1], ptr + "/1")};
}

void reject_unknown(const json& obj, const std::string& ptr, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw SchemaError(ptr + "/" + key, "unknown field");
  }
}

HamiltonianSpec parse_hamiltonian(const json& j) {
  const std::string ptr = "/hamiltonian";
  if (!j.is_object()) throw SchemaError(ptr, "expected an object");
  reject_unknown(j, ptr, {"pauli_terms", "dense", "model"});
  const int forms = static_cast<int>(j.contains("pauli_terms")) + static_cast<int>(j.contains("dense")) +
                    static_cast<int>(j.contains("model"));
  if (forms != 1) throw SchemaError(ptr, "exactly one of pauli_terms, dense, model is required");

  HamiltonianSpec h;
  if (j.contains("pauli_terms")) {
    h.form = HamiltonianSpec::Form::PauliTerms;
    const json& terms = j["pauli_terms"];
    const std::string tp = ptr + "/pauli_terms";
    if (!terms.is_array() || terms.empty()) throw SchemaError(tp, "expected a non-empty array");
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const std::string ep = tp + "/" + std::to_string(k);
      const json& t = terms[k];
      if (!t.is_object() || !t.contains("coeff") || !t.contains("word")) {
        throw SchemaError(ep, "expected {coeff, word}");
      }
      reject_unknown(t, ep, {"coeff", "word", "name"});
      if (!t["word"].is_string()) throw SchemaError(ep + "/word", "expected a string");
      NamedPauliTerm nt{{number_at(t["coeff"], ep + "/coeff"), t["word"].get<std::string>()}, ""};
      if (t.contains("name")) {
        if (!t["name"].is_string()) throw SchemaError(ep + "/name", "expected a string");
        nt.name = t["name"].get<std::string>();
      }
      if (nt.term.word.empty()) throw SchemaError(ep + "/word", "empty Pauli word");
      if (k == 0) h.n_qubits = nt.term.word.size();
      if (nt.term.word.size() != h.n_qubits) {
        throw SchemaError(ep + "/word", "inconsistent word length " + std::to_string(nt.term.word.size()) +
                                            ", expected " + std::to_string(h.n_qubits));
      }
      for (char c : nt.term.word) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
          throw SchemaError(ep + "/word", std::string("invalid Pauli character '") + c + "'");
        }
      }
      h.terms.push_back(std::move(nt));
    }
    if (h.n_qubits > 10) throw SchemaError(tp, "at most 10 qubits are supported");
  } else if (j.contains("dense")) {
    h.form = HamiltonianSpec::Form::Dense;
    const json& rows = j["dense"];
    const std::string dp = ptr + "/dense";
    if (!rows.is_array() || rows.empty()) throw SchemaError(dp, "expected a non-empty array");
    const bool nested = rows[0].is_array() && !rows[0].empty() && rows[0][0].is_array();
    if (nested) {
      const auto n = static_cast<Eigen::Index>(rows.size());
      h.dense.resize(n, n);
      for (Eigen::Index r = 0; r < n; ++r) {
        const json& row = rows[static_cast<std::size_t>(r)];
        const std::string rp = dp + "/" + std::to_string(r);
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
          throw SchemaError(rp, "row length must equal the number of rows (" + std::to_string(n) + ")");
        }
        for (Eigen::Index c = 0; c < n; ++c) {
          h.dense(r, c) = complex_at(row[static_cast<std::size_t>(c)], rp + "/" + std::to_string(c));
        }
      }
    } else {
      const auto count = rows.size();
      const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(count))));
      if (static_cast<std::size_t>(n * n) != count) {
        throw SchemaError(dp, "flat row-major matrix needs a square number of entries");
      }
      h.dense.resize(n, n);
      for (std::size_t k = 0; k < count; ++k) {
        h.dense(static_cast<Eigen::Index>(k) / n, static_cast<Eigen::Index>(k) % n) =
            complex_at(rows[k], dp + "/" + std::to_string(k));
      }
    }
    if (h.dense.rows() < 2) throw SchemaError(dp, "dimension must be at least 2");
  } else {
    h.form = HamiltonianSpec::Form::Model;
    const json& m = j["model"];
    const std::string mp = ptr + "/model";
    if (!m.is_object() || !m.contains("family") || !m["family"].is_string()) {
      throw SchemaError(mp, "expected {family, params}");
    }
    reject_unknown(m, mp, {"family", "params"});
    h.family = m["family"].get<std::string>();
    const auto it = family_params().find(h.family);
    if (it == family_params().end()) throw SchemaError(mp + "/family", "unknown model family '" + h.family + "'");
    for (const auto& name : it->second) h.params[name] = 0.0;
    if (m.contains("params")) {
      const json& p = m["params"];
      if (!p.is_object()) throw SchemaError(mp + "/params", "expected an object");
      for (const auto& [key, value] : p.items()) {
        if (!h.params.contains(key)) {
          throw SchemaError(mp + "/params/" + key, "not a parameter of family '" + h.family + "'");
        }
        h.params[key] = number_at(value, mp + "/params/" + key);
      }
    }
  }
  return h;
}

std::pair<double, double> two_numbers(std::string_view body, const std::string& ptr) {
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) throw SchemaError(ptr, "expected two comma-separated numbers");
  double a = 0.0, b = 0.0;
  try {
    std::size_t used = 0;
    const std::string first(body.substr(0, comma));
    const std::string second(body.substr(comma + 1));
    a = std::stod(first, &used);
    if (used != first.size()) throw std::invalid_argument("trailing");
    b = std::stod(second, &used);
    if (used != second.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw SchemaError(ptr, "expected two comma-separated numbers");
  }
  if (!std::isfinite(a) || !std::isfinite(b)) throw SchemaError(ptr, "expected finite numbers");
  return {a, b};
}

StateSpec parse_named_state(const std::string& label) {
  const std::string ptr = "/state/named";
  StateSpec s;
  const std::string_view v = label;
  if (v.starts_with("bloch:")) {
    s.form = StateSpec::Form::Bloch;
    std::tie(s.first, s.second) = two_numbers(v.substr(6), ptr);
  } else if (v.starts_with("xi:")) {
    s.form = StateSpec::Form::Xi;
    std::tie(s.first, s.second) = two_numbers(v.substr(3), ptr);
    if (!(s.first >= 0.0 && s.first <= 1.0)) throw SchemaError(ptr, "xi must lie in [0, 1]");
  } else if (v.starts_with("bell:")) {
    s.form = StateSpec::Form::Bell;
    const std::string_view kind = v.substr(5);
    if (kind == "Φ+" || kind == "phi+") s.bell = models::Bell::PhiPlus;
    else if (kind == "Φ−" || kind == "Φ-" || kind == "phi-") s.bell = models::Bell::PhiMinus;
    else if (kind == "Ψ+" || kind == "psi+") s.bell = models::Bell::PsiPlus;
    else if (kind == "Ψ−" || kind == "Ψ-" || kind == "psi-") s.bell = models::Bell::PsiMinus;
    else throw SchemaError(ptr, "unknown Bell state '" + std::string(kind) + "'");
  } else if (v == "ghz") {
    s.form = StateSpec::Form::Ghz;
  } else if (v == "w") {
    s.form = StateSpec::Form::W;
  } else if (!v.empty() && v.find_first_not_of("01") == std::string_view::npos) {
    if (v.size() > 10) throw SchemaError(ptr, "basis label longer than 10 bits");
    s.form = StateSpec::Form::Basis;
    s.bits = label;
  } else {
    throw SchemaError(ptr, "unrecognized state label '" + label + "'");
  }
  return s;
}

StateSpec parse_state(const json& j) {
  const std::string ptr = "/state";
  if (!j.is_object()) throw SchemaError(ptr, "expected an object");
  reject_unknown(j, ptr, {"amplitudes", "named"});
  const int forms = static_cast<int>(j.contains("amplitudes")) + static_cast<int>(j.contains("named"));
  if (forms != 1) throw SchemaError(ptr, "exactly one of amplitudes, named is required");
  if (j.contains("named")) {
    if (!j["named"].is_string()) throw SchemaError(ptr + "/named", "expected a string");
    return parse_named_state(j["named"].get<std::string>());
  }
  const json& a = j["amplitudes"];
  const std::string ap = ptr + "/amplitudes";
  if (!a.is_array() || a.size() < 2) throw SchemaError(ap, "expected at least two [re, im] pairs");
  StateSpec s;
  s.form = StateSpec::Form::Amplitudes;
  s.amplitudes.resize(static_cast<Eigen::Index>(a.size()));
  for (std::size_t k = 0; k < a.size(); ++k) {
    s.amplitudes(static_cast<Eigen::Index>(k)) = complex_at(a[k], ap + "/" + std::to_string(k));
  }
  const double n2 = s.amplitudes.squaredNorm();
  if (std::abs(n2 - 1.0) > 1e-9) {
    throw SchemaError(ap, "amplitudes must be normalized (sum of |a|^2 = " + std::to_string(n2) + ")");
  }
  return s;
}

RunOptions parse_options(const json& j) {
  const std::string ptr = "/options";
  RunOptions o;
  if (!j.is_object()) throw SchemaError(ptr, "expected an object");
  reject_unknown(j, ptr, {"gamma", "dt_grid", "s_samples", "eta_t"});
  if (j.contains("gamma")) {
    o.gamma = number_at(j["gamma"], ptr + "/gamma");
    if (!(o.gamma > 0.0)) throw SchemaError(ptr + "/gamma", "must be positive");
  }
  if (j.contains("dt_grid")) {
    const json& g = j["dt_grid"];
    if (!g.is_array() || g.empty()) throw SchemaError(ptr + "/dt_grid", "expected a non-empty array");
    for (std::size_t k = 0; k < g.size(); ++k) {
      const double dt = number_at(g[k], ptr + "/dt_grid/" + std::to_string(k));
      if (!(dt > 0.0) || (!o.dt_grid.empty() && !(dt > o.dt_grid.back()))) {
        throw SchemaError(ptr + "/dt_grid/" + std::to_string(k), "steps must be positive and increasing");
      }
      o.dt_grid.push_back(dt);
    }
  }
  if (j.contains("s_samples")) {
    if (!j["s_samples"].is_number_integer() || j["s_samples"].get<int>() < 1) {
      throw SchemaError(ptr + "/s_samples", "expected a positive integer");
    }
    o.s_samples = j["s_samples"].get<int>();
  }
  if (j.contains("eta_t")) {
    o.eta_t = number_at(j["eta_t"], ptr + "/eta_t");
    if (!(o.eta_t > 0.0)) throw SchemaError(ptr + "/eta_t", "must be positive");
  }
  return o;
}

std::size_t state_dim(const StateSpec& s) {
  switch (s.form) {
    case StateSpec::Form::Amplitudes: return static_cast<std::size_t>(s.amplitudes.size());
    case StateSpec::Form::Bloch:
    case StateSpec::Form::Xi: return 2;
    case StateSpec::Form::Bell: return 4;
    case StateSpec::Form::Ghz:
    case StateSpec::Form::W: return 8;
    case StateSpec::Form::Basis: return std::size_t{1} << s.bits.size();
  }
  return 0;
}

std::size_t hamiltonian_dim(const HamiltonianSpec& h) {
  switch (h.form) {
    case HamiltonianSpec::Form::PauliTerms: return std::size_t{1} << h.n_qubits;
    case HamiltonianSpec::Form::Dense: return static_cast<std::size_t>(h.dense.rows());
    case HamiltonianSpec::Form::Model:
      if (h.family == "single_qubit") return 2;
      if (h.family == "heisenberg3") return 8;
      return 4;
  }
  return 0;
}

}  // namespace

HermitianOperator HamiltonianSpec::build() const {
  switch (form) {
    case Form::PauliTerms: {
      std::vector<PauliTerm> plain;
      plain.reserve(terms.size());
      for (const auto& t : terms) plain.push_back(t.term);
      return build_operator(plain, n_qubits);
    }
    case Form::Dense:
      try {
        return HermitianOperator(dense);
      } catch (const InvariantError& e) {
        throw SchemaError("/hamiltonian/dense", e.what());
      }
    case Form::Model: {
      const auto p = [&](const char* k) { return params.at(k); };
      if (family == "single_qubit") {
        return models::single_qubit({Eigen::Vector3d(p("mx"), p("my"), p("mz")), p("m0")});
      }
      if (family == "two_qubit_nonlocal") return models::two_qubit_nonlocal(p("m1"), p("m2"), p("m3"), p("m4"));
      if (family == "two_qubit_local") return models::two_qubit_local(p("m1"), p("m2"), p("m3"), p("m4"));
      return models::heisenberg3(p("Jx"), p("Jy"), p("Jz"), p("h"));
    }
  }
  throw SchemaError("/hamiltonian", "unsupported form");
}

StateVector StateSpec::build() const {
  switch (form) {
    case Form::Amplitudes: return StateVector::normalized(amplitudes);
    case Form::Bloch: return models::bloch_to_state(models::BlochVector::spherical(first, second));
    case Form::Xi: return models::xi_family(first, second);
    case Form::Bell: return models::bell(bell);
    case Form::Ghz: return models::ghz();
    case Form::W: return models::w();
    case Form::Basis: return models::basis_state(bits);
  }
  throw SchemaError("/state", "unsupported form");
}

EvolutionProblem ProblemSpec::build() const {
  const std::size_t hd = hamiltonian_dim(hamiltonian);
  const std::size_t sd = state_dim(state);
  if (hd != sd) {
    throw SchemaError("/state", "state dimension " + std::to_string(sd) + " does not match Hamiltonian dimension " +
                                    std::to_string(hd));
  }
  return EvolutionProblem(hamiltonian.build(), state.build());
}

ProblemSpec ProblemSpec::with_parameter(std::string_view name, double value) const {
  ProblemSpec out = *this;
  const std::string key(name);
  if (key == "xi") {
    if (state.form != StateSpec::Form::Xi) throw SchemaError("/state/named", "sweep over xi needs an xi: state");
    if (!(value >= 0.0 && value <= 1.0)) throw SchemaError("/state/named", "xi must lie in [0, 1]");
    out.state.first = value;
    return out;
  }
  if (key == "theta") {
    if (state.form != StateSpec::Form::Bloch) {
      throw SchemaError("/state/named", "sweep over theta needs a bloch: state");
    }
    out.state.first = value;
    return out;
  }
  if (key == "phi") {
    if (state.form != StateSpec::Form::Bloch && state.form != StateSpec::Form::Xi) {
      throw SchemaError("/state/named", "sweep over phi needs a bloch: or xi: state");
    }
    out.state.second = value;
    return out;
  }
  if (hamiltonian.form == HamiltonianSpec::Form::Model && hamiltonian.params.contains(key)) {
    out.hamiltonian.params[key] = value;
    return out;
  }
  bool found = false;
  for (auto& t : out.hamiltonian.terms) {
    if (!t.name.empty() && t.name == key) {
      t.term.coefficient = value;
      found = true;
    }
  }
  if (!found) throw SchemaError("/hamiltonian", "unknown parameter '" + key + "'");
  return out;
}

ProblemSpec parse_problem_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("", "expected a JSON object");
  reject_unknown(doc, "", {"hamiltonian", "state", "options"});
  if (!doc.contains("hamiltonian")) throw SchemaError("/hamiltonian", "missing");
  if (!doc.contains("state")) throw SchemaError("/state", "missing");
  ProblemSpec spec;
  spec.hamiltonian = parse_hamiltonian(doc["hamiltonian"]);
  spec.state = parse_state(doc["state"]);
  if (doc.contains("options")) spec.options = parse_options(doc["options"]);
  const std::size_t hd = hamiltonian_dim(spec.hamiltonian);
  const std::size_t sd = state_dim(spec.state);
  if (hd != sd) {
    throw SchemaError("/state", "state dimension " + std::to_string(sd) + " does not match Hamiltonian dimension " +
                                    std::to_string(hd));
  }
  return spec;
}

ProblemSpec parse_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_spec(buf.str());
}

}  // namespace qcurve
