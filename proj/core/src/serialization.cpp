#include "quatkyp/serialization.hpp"

#include <fstream>
#include <sstream>

#include "quatkyp/errors.hpp"

namespace quatkyp {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidArgument(std::string("expected a JSON object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw InvalidArgument(std::string("missing field '") + key + "'");
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw InvalidArgument(std::string(what) + " must be a number");
  return j.get<double>();
}

Index dimension(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InvalidArgument(std::string("'") + key + "' must be a nonnegative integer");
  }
  return static_cast<Index>(v.get<long long>());
}

std::string text(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw InvalidArgument(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Json to_json(const Quaternion& q) { return Json::array({q.w, q.x, q.y, q.z}); }

Json to_json(const QMatrix& m) {
  Json entries = Json::array();
  for (const Quaternion& q : m.entries()) entries.push_back(to_json(q));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json to_json(const ComplexMatrix& m) {
  Json entries = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index k = 0; k < m.cols(); ++k) entries.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json to_json(const Signature& s) { return Json::array({s.n_plus, s.n_minus, s.n_zero}); }

Json to_json(const Realization& r) {
  return Json{{"convention", std::string(to_string(r.convention))},
              {"A", to_json(r.A)},
              {"B", to_json(r.B)},
              {"C", to_json(r.C)},
              {"D", to_json(r.D)}};
}

Json to_json(const Certificate& c) {
  return Json{{"domain", std::string(to_string(c.domain))},
              {"kind", std::string(to_string(c.kind))},
              {"method", std::string(to_string(c.method))},
              {"H", to_json(c.H)},
              {"Qblk", to_json(c.Qblk)},
              {"Sblk", to_json(c.Sblk)},
              {"Rblk", to_json(c.Rblk)},
              {"L", to_json(c.L)},
              {"M", to_json(c.M)},
              {"signature", to_json(c.signature_H)},
              {"residual_min_eig", c.residual_min_eig}};
}

Json to_json(const VerificationReport& v) {
  return Json{{"lmi_min_eig", v.lmi_min_eig},
              {"hermitian_defect", v.hermitian_defect},
              {"chi_structure_defect", v.chi_structure_defect},
              {"factorization_defect", v.factorization_defect},
              {"pass", v.pass}};
}

Json to_json(const MinimalityReport& m) {
  return Json{{"observable", m.observable},
              {"controllable", m.controllable},
              {"obs_rank", m.obs_rank},
              {"ctrl_rank", m.ctrl_rank},
              {"state_dim", m.state_dim}};
}

Json to_json(const SignatureReport& s) {
  Json points = Json::array();
  for (const Quaternion& p : s.points) points.push_back(to_json(p));
  Json vectors = Json::array();
  for (const QMatrix& v : s.vectors) vectors.push_back(to_json(v));
  return Json{{"points", std::move(points)},
              {"vectors", std::move(vectors)},
              {"gram", to_json(s.gram)},
              {"signature", to_json(s.signature)},
              {"kappa_estimate", s.kappa_estimate},
              {"tol", s.tol}};
}

Quaternion quaternion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw InvalidArgument("a quaternion is an array [w, x, y, z]");
  return {number(j[0], "w"), number(j[1], "x"), number(j[2], "y"), number(j[3], "z")};
}

QMatrix qmatrix_from_json(const Json& j) {
  const Index rows = dimension(j, "rows");
  const Index cols = dimension(j, "cols");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || static_cast<Index>(entries.size()) != rows * cols) {
    throw DimensionError("matrix declares " + std::to_string(rows) + "x" + std::to_string(cols) + " but has " +
                         std::to_string(entries.is_array() ? entries.size() : 0) + " entries");
  }
  QMatrix m(rows, cols);
  for (Index k = 0; k < rows * cols; ++k) m(k / cols, k % cols) = quaternion_from_json(entries[static_cast<std::size_t>(k)]);
  return m;
}

Signature signature_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw InvalidArgument("a signature is an array [n+, n-, n0]");
  for (const Json& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0) throw InvalidArgument("signature counts must be integers");
  }
  return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

Realization realization_from_json(const Json& j) {
  return Realization(convention_from_string(text(j, "convention")), qmatrix_from_json(field(j, "A")),
                     qmatrix_from_json(field(j, "B")), qmatrix_from_json(field(j, "C")),
                     qmatrix_from_json(field(j, "D")));
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.domain = domain_from_string(text(j, "domain"));
  c.kind = certificate_kind_from_string(text(j, "kind"));
  c.method = solve_method_from_string(text(j, "method"));
  c.H = qmatrix_from_json(field(j, "H"));
  c.Qblk = qmatrix_from_json(field(j, "Qblk"));
  c.Sblk = qmatrix_from_json(field(j, "Sblk"));
  c.Rblk = qmatrix_from_json(field(j, "Rblk"));
  c.L = qmatrix_from_json(field(j, "L"));
  c.M = qmatrix_from_json(field(j, "M"));
  c.signature_H = signature_from_json(field(j, "signature"));
  c.residual_min_eig = number(field(j, "residual_min_eig"), "residual_min_eig");
  if (c.H.rows() != c.H.cols()) throw DimensionError("certificate H must be square");
  return c;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace quatkyp
