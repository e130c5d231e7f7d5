#include "qha/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace qha::io {

namespace {

json matrix_part(const CMatrix& m, bool imag) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(imag ? m(i, j).imag() : m(i, j).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_parts(const json& j, int n) {
  if (!j.contains("re")) throw ConfigError("matrix JSON lacks the 're' field");
  const json& re = j.at("re");
  const json* im = j.contains("im") ? &j.at("im") : nullptr;
  if (!re.is_array() || static_cast<int>(re.size()) != n) throw ConfigError("matrix JSON 're' must have N rows");
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    if (!re[r].is_array() || static_cast<int>(re[r].size()) != n) {
      throw ConfigError("matrix JSON rows must have N entries");
    }
    for (int c = 0; c < n; ++c) {
      const double imv = im ? im->at(r).at(c).get<double>() : 0.0;
      m(r, c) = cplx(re[r][c].get<double>(), imv);
    }
  }
  return m;
}

int read_n(const json& j) {
  if (!j.contains("N")) throw ConfigError("JSON object lacks the 'N' field");
  return j.at("N").get<int>();
}

}  // namespace

json to_json(const PhaseFunction& f) {
  const auto& model = f.model();
  json j{{"kind", model.kind_name()}, {"N", model.n()}};
  if (model.kind() == ModelKind::SampledLine) j["L"] = model.length();
  j["re"] = matrix_part(f.values(), false);
  j["im"] = matrix_part(f.values(), true);
  return j;
}

PhaseFunction phase_function_from_json(const json& j) {
  try {
    const int n = read_n(j);
    const ModelKind kind = parse_model_kind(j.value("kind", std::string("FiniteCyclic")));
    std::optional<double> length;
    if (j.contains("L")) length = j.at("L").get<double>();
    const PhaseSpaceModel model = build_model(kind, n, length);
    return PhaseFunction(model, matrix_from_parts(j, n));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed phase function JSON: ") + e.what());
  }
}

std::string to_csv(const PhaseFunction& f) {
  const auto& model = f.model();
  std::ostringstream os;
  os.precision(17);
  os << "m,k,x,omega,re,im\n";
  for (int m = 0; m < model.n(); ++m) {
    for (int k = 0; k < model.n(); ++k) {
      os << m << ',' << k << ',' << model.x_coord(m) << ',' << model.omega_coord(k) << ','
         << f(m, k).real() << ',' << f(m, k).imag() << '\n';
    }
  }
  return os.str();
}

json to_json(const Op& a) {
  return json{{"N", a.n()}, {"re", matrix_part(a.matrix(), false)}, {"im", matrix_part(a.matrix(), true)}};
}

Op op_from_json(const json& j, const PhaseSpaceModel& model) {
  try {
    const int n = read_n(j);
    if (n != model.n()) throw ConfigError("operator JSON dimension does not match the model");
    return Op(model, matrix_from_parts(j, n));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed operator JSON: ") + e.what());
  }
}

std::string eigenvalues_csv(const Op& a) {
  const Eigen::VectorXd ev = hermitian_eigenvalues(a);
  std::ostringstream os;
  os.precision(17);
  os << "index,eigenvalue\n";
  for (Eigen::Index i = 0; i < ev.size(); ++i) os << i << ',' << ev(i) << '\n';
  return os.str();
}

json to_json(const StateVector& v) {
  json re = json::array(), im = json::array();
  for (int i = 0; i < v.n(); ++i) {
    re.push_back(v[i].real());
    im.push_back(v[i].imag());
  }
  return json{{"N", v.n()}, {"re", re}, {"im", im}};
}

StateVector state_from_json(const json& j, const PhaseSpaceModel& model) {
  try {
    const int n = read_n(j);
    if (n != model.n()) throw ConfigError("state JSON dimension does not match the model");
    const json& re = j.at("re");
    if (!re.is_array() || static_cast<int>(re.size()) != n) throw ConfigError("state JSON 're' must have N entries");
    StateVector v(model);
    for (int i = 0; i < n; ++i) {
      const double imv = j.contains("im") ? j.at("im").at(i).get<double>() : 0.0;
      v[i] = cplx(re[i].get<double>(), imv);
    }
    return v;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed state JSON: ") + e.what());
  }
}

json to_json(const VerificationReport& r) {
  return json{{"identity", r.identity_name}, {"model", r.model_kind},
              {"N", r.n},                    {"seed", r.seed},
              {"inputs_digest", r.inputs_digest},
              {"max_abs_error", r.max_abs_error},
              {"tolerance", r.tolerance},    {"passed", r.passed},
              {"runtime_ms", r.runtime_ms}};
}

json to_json(const ZeroSetReport& r) {
  json points = json::array();
  for (const auto& z : r.zero_points) {
    points.push_back(json{{"m", z.m}, {"k", z.k}, {"x", r.model.x_coord(z.m)}, {"omega", r.model.omega_coord(z.k)}});
  }
  return json{{"window_digest", r.window_digest},
              {"tolerance", r.tolerance},
              {"scanned", r.scanned},
              {"zero_count", r.zero_points.size()},
              {"zero_points", points},
              {"min_modulus", r.min_modulus},
              {"classification", to_string(r.classification)}};
}

std::string zero_points_csv(const ZeroSetReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "m,k,x,omega\n";
  for (const auto& z : r.zero_points) {
    os << z.m << ',' << z.k << ',' << r.model.x_coord(z.m) << ',' << r.model.omega_coord(z.k) << '\n';
  }
  return os.str();
}

json to_json(const BerezinLiebResult& r) {
  return json{{"variant", r.side == BerezinLiebSide::Operator ? "operator-side" : "function-side"},
              {"functional", r.functional.describe()},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"passed", r.passed}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw ConfigError("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw ConfigError("cannot move output into place at '" + path + "': " + ec.message());
  }
}

}  // namespace qha::io
