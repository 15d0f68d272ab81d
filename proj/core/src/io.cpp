#include "edmf/io.hpp"

namespace edmf::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError(std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Ring ring_of(const Json& j, const Ring& fallback) {
  if (j.is_object()) {
    auto it = j.find("ring");
    if (it != j.end()) {
      if (!it->is_string()) throw ParseError("\"ring\" must be a string");
      return Ring::parse(it->get<std::string>());
    }
  }
  return fallback;
}

Element element_from_json(const Json& j, const Ring& ring) {
  if (j.is_number_integer()) return ring.parse_element(std::to_string(j.get<long long>()));
  if (j.is_string()) return ring.parse_element(j.get<std::string>());
  throw ParseError("ring element must be an integer or a string, got " + j.dump());
}

Matrix matrix_from_json(const Json& j, const Ring& fallback) {
  const Ring ring = ring_of(j, fallback);
  const Json& rows_json = j.is_array() ? j : field(j, "entries");
  if (!rows_json.is_array()) throw ParseError("matrix entries must be an array of rows");

  const std::size_t m = rows_json.size();
  std::size_t n = 0;
  if (m > 0) {
    if (!rows_json[0].is_array()) throw ParseError("matrix rows must be arrays");
    n = rows_json[0].size();
  }
  if (j.is_object()) {
    if (j.contains("rows") && size_field(j, "rows") != m)
      throw ParseError("\"rows\" disagrees with the entries");
    if (j.contains("cols")) {
      const std::size_t c = size_field(j, "cols");
      if (m > 0 && c != n) throw ParseError("\"cols\" disagrees with the entries");
      n = c;
    }
  }
  std::vector<Element> entries;
  entries.reserve(m * n);
  for (const auto& row : rows_json) {
    if (!row.is_array() || row.size() != n) throw ParseError("ragged matrix rows");
    for (const auto& e : row) entries.push_back(element_from_json(e, ring));
  }
  return Matrix(ring, m, n, std::move(entries));
}

MatrixFactorization factorization_from_json(const Json& j, const Ring& fallback) {
  const Ring ring = ring_of(j, fallback);
  const Element W = element_from_json(field(j, "W"), ring);
  const Json& v = field(j, "v");
  if (!v.is_array() && !v.is_object()) return elementary(element_from_json(v, ring), W);
  return MatrixFactorization(matrix_from_json(field(j, "u"), ring), matrix_from_json(v, ring), W);
}

MfMorphism morphism_from_json(const Json& j, const Ring& fallback) {
  const Ring ring = ring_of(j, fallback);
  if (j.is_object() && j.contains("v1")) {
    const Element W = element_from_json(field(j, "W"), ring);
    return elementary_morphism(elementary(element_from_json(field(j, "v1"), ring), W),
                               elementary(element_from_json(field(j, "v2"), ring), W),
                               element_from_json(field(j, "r"), ring));
  }
  return make_morphism(factorization_from_json(field(j, "source"), ring),
                       factorization_from_json(field(j, "target"), ring),
                       matrix_from_json(field(j, "f00"), ring),
                       matrix_from_json(field(j, "f11"), ring));
}

MfClass class_from_json(const Json& j, const Ring& fallback) {
  const Ring ring = ring_of(j, fallback);
  const Element W = element_from_json(field(j, "W"), ring);
  const Json& labels_json = field(j, "labels");
  if (!labels_json.is_array()) throw ParseError("\"labels\" must be an array");
  std::vector<PrimaryLabel> labels;
  for (const auto& l : labels_json) {
    if (!l.is_array() || l.size() != 2 || !l[1].is_number_integer() || l[1].get<long long>() < 1)
      throw ParseError("label must be [prime, size] with size >= 1");
    labels.push_back({element_from_json(l[0], ring), l[1].get<unsigned>()});
  }
  if (W.is_unit()) {
    if (!labels.empty()) throw PreconditionError("W is a unit; every class is zero");
    return MfClass{CriticalData{W, W, ring.one(), {}}, {}};
  }
  return make_class(critical_decompose(W), std::move(labels));
}

// ---------------------------------------------------------------------------

Json to_json(const Element& e) { return e.to_string(); }

Json to_json(const std::vector<Element>& elements) {
  Json out = Json::array();
  for (const auto& e : elements) out.push_back(to_json(e));
  return out;
}

Json to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    entries.push_back(std::move(row));
  }
  Json out;
  out["ring"] = m.ring().to_string();
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(entries);
  return out;
}

Json to_json(const MatrixFactorization& a) {
  Json out;
  out["ring"] = a.ring().to_string();
  out["W"] = to_json(a.W());
  out["rho"] = a.rho();
  out["u"] = to_json(a.u());
  out["v"] = to_json(a.v());
  return out;
}

Json to_json(const MfMorphism& f) {
  Json out;
  out["source"] = to_json(f.source());
  out["target"] = to_json(f.target());
  out["f00"] = to_json(f.f00());
  out["f11"] = to_json(f.f11());
  return out;
}

Json to_json(const MfClass& c) {
  Json labels = Json::array();
  for (const auto& l : c.labels) labels.push_back(Json::array({l.prime.to_string(), l.size}));
  Json out;
  out["W"] = to_json(c.critical_data.W);
  out["labels"] = std::move(labels);
  return out;
}

Json to_json(const SmithDecomposition& snf) {
  Json out;
  out["ring"] = snf.D.ring().to_string();
  out["rank"] = snf.rank;
  out["invariant_factors"] = to_json(snf.invariant_factors);
  out["D"] = to_json(snf.D);
  out["U"] = to_json(snf.U);
  out["V"] = to_json(snf.V);
  out["V_inv"] = to_json(snf.V_inv);
  return out;
}

Json to_json(const ModuleInvariants& m) {
  Json out;
  out["context"] = m.context;
  out["cyclic_factors"] = to_json(m.cyclic_factors);
  out["zero"] = m.is_zero();
  return out;
}

Json to_json(const HomModules& h) {
  Json out;
  out["even"] = to_json(h.even);
  out["odd"] = to_json(h.odd);
  return out;
}

Json to_json(const CyclicDecomposition& d) {
  Json mult = Json::object();
  for (const auto& [i, count] : d.multiplicities) mult[std::to_string(i)] = count;
  Json out;
  out["p"] = to_json(d.context.p());
  out["n"] = d.context.n();
  out["mult"] = std::move(mult);
  return out;
}

Json to_json(const ARQuiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows)
    arrows.push_back(Json{{"from", a.from}, {"to", a.to},
                          {"valuation", Json::array({a.valuation.first, a.valuation.second})}});
  Json tau = Json::object();
  for (const auto& [v, t] : q.translation) tau[std::to_string(v)] = t ? Json(*t) : Json(nullptr);
  Json out;
  out["n"] = q.n;
  out["stable"] = q.stable;
  out["vertices"] = q.vertices;
  out["arrows"] = std::move(arrows);
  out["translation"] = std::move(tau);
  return out;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace edmf::io
