#include "cartankit/json_io.hpp"

#include <stdexcept>

namespace cartan {

namespace {

[[noreturn]] void bad(const std::string &what) { throw std::invalid_argument("bad json: " + what); }

const Json &field(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json &j, const char *key) {
  const Json &v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    bad(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<int>();
}

Covec covec_from_json(const Json &j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    bad("covector must be a list of " + std::to_string(dim) + " scalars");
  Covec out;
  for (const auto &x : j)
    out.push_back(scalar_from_json(x));
  return out;
}

Json covec_json(const Covec &c) {
  Json out = Json::array();
  for (const auto &x : c)
    out.push_back(to_json(x));
  return out;
}

} // namespace

Json to_json(const Scalar &s) { return s.str(); }

Scalar scalar_from_json(const Json &j) {
  if (j.is_number_integer())
    return Scalar(j.get<long>());
  if (!j.is_string())
    bad("scalar must be a string like \"a/b+c/d*i\"");
  return Scalar::parse(j.get<std::string>());
}

Json to_json(const Vector &v) {
  Json out = Json::array();
  for (const auto &[i, c] : v)
    out.push_back(Json::array({i, to_json(c)}));
  return out;
}

Vector vector_from_json(const Json &j) {
  if (!j.is_array())
    bad("vector must be a list of [index, coeff] pairs");
  Vector v;
  for (const auto &e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer())
      bad("vector entry must be [index, coeff]");
    add_term(v, e[0].get<Index>(), scalar_from_json(e[1]));
  }
  return v;
}

Json to_json(const LieElement &x) {
  Json out = Json::array();
  for (const auto &[k, c] : x.records())
    out.push_back({{"i", k.first}, {"j", k.second}, {"coeff", to_json(c)}});
  return out;
}

LieElement element_from_json(Kind k, const Json &j) {
  if (!j.is_array())
    bad("element must be a list of {i, j, coeff} records");
  std::vector<std::pair<Key, Scalar>> recs;
  for (const auto &r : j) {
    if (!field(r, "i").is_number_integer() || !field(r, "j").is_number_integer())
      bad("record indices must be integers");
    recs.push_back({{r.at("i").get<Index>(), r.at("j").get<Index>()},
                    scalar_from_json(field(r, "coeff"))});
  }
  return LieElement::from_records(k, recs);
}

Json to_json(const Matrix &m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k)
      row.push_back(to_json(m(i, k)));
    out.push_back(row);
  }
  return out;
}

Matrix matrix_from_json(const Json &j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    bad("matrix must have " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json &row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      bad("matrix rows must have " + std::to_string(cols) + " entries");
    for (int k = 0; k < cols; ++k)
      m(i, k) = scalar_from_json(row[static_cast<size_t>(k)]);
  }
  return m;
}

Json to_json(const CovecSeq &s) {
  Json pre = Json::array(), per = Json::array();
  for (const auto &c : s.prefix)
    pre.push_back(covec_json(c));
  for (const auto &c : s.period)
    per.push_back(covec_json(c));
  return {{"prefix", pre}, {"period", per}};
}

CovecSeq covec_seq_from_json(const Json &j, int dim) {
  const Json &pre = field(j, "prefix"), &per = field(j, "period");
  if (!pre.is_array() || !per.is_array() || per.empty())
    bad("sequence needs a prefix list and a nonempty period list");
  std::vector<Covec> a, b;
  for (const auto &c : pre)
    a.push_back(covec_from_json(c, dim));
  for (const auto &c : per)
    b.push_back(covec_from_json(c, dim));
  return CovecSeq(a, b);
}

Json to_json(const ScalarSeq &s) {
  Json pre = Json::array(), per = Json::array();
  for (const auto &c : s.prefix)
    pre.push_back(to_json(c));
  for (const auto &c : s.period)
    per.push_back(to_json(c));
  return {{"prefix", pre}, {"period", per}};
}

ScalarSeq scalar_seq_from_json(const Json &j) {
  if (j.is_array()) // bare list: purely periodic
    return scalar_seq_from_json(Json{{"prefix", Json::array()}, {"period", j}});
  const Json &pre = field(j, "prefix"), &per = field(j, "period");
  if (!pre.is_array() || !per.is_array() || per.empty())
    bad("sequence needs a prefix list and a nonempty period list");
  std::vector<Scalar> a, b;
  for (const auto &c : pre)
    a.push_back(scalar_from_json(c));
  for (const auto &c : per)
    b.push_back(scalar_from_json(c));
  return ScalarSeq(a, b);
}

Json to_json(const ComplementDatum &d) {
  Json j;
  j["kind"] = kind_name(d.kind);
  j["X_dim"] = d.x_dim;
  if (!d.single_space())
    j["Y_dim"] = d.y_dim;
  j["omega"] = to_json(d.omega);
  j["lambdas"] = to_json(d.lambdas);
  if (d.single_space())
    j["lambdas_neg"] = to_json(d.lambdas_neg);
  else
    j["mus"] = to_json(d.mus);
  return j;
}

ComplementDatum datum_from_json(const Json &j) {
  if (!j.is_object())
    bad("datum must be an object");
  ComplementDatum d;
  if (!field(j, "kind").is_string())
    bad("kind must be a string");
  d.kind = parse_kind(j.at("kind").get<std::string>());
  d.x_dim = int_field(j, "X_dim");
  if (!d.single_space())
    d.y_dim = int_field(j, "Y_dim");
  d.omega = matrix_from_json(field(j, "omega"), d.x_dim, d.other_dim());
  d.lambdas = covec_seq_from_json(field(j, "lambdas"), d.x_dim);
  if (d.single_space())
    d.lambdas_neg = covec_seq_from_json(field(j, "lambdas_neg"), d.x_dim);
  else
    d.mus = covec_seq_from_json(field(j, "mus"), d.y_dim);
  d.check();
  return d;
}

Json to_json(const Certificate &c) {
  Json classes = Json::array();
  for (const auto &cl : c.sigma.classes)
    classes.push_back({{"base", cl.base}, {"step", cl.step}, {"sign", cl.sign}});
  return {{"sigma", {{"head", c.sigma.head}, {"classes", classes}}},
          {"pi_X", to_json(c.pi_x)},
          {"pi_Y", to_json(c.pi_y)},
          {"alpha", to_json(c.alpha)}};
}

Certificate certificate_from_json(const Json &j) {
  Certificate c;
  const Json &sg = field(j, "sigma");
  const Json &head = field(sg, "head");
  if (!head.is_array())
    bad("sigma.head must be a list");
  for (const auto &h : head) {
    if (!h.is_number_integer())
      bad("sigma.head entries must be integers");
    c.sigma.head.push_back(h.get<Index>());
  }
  const Json &cls = field(sg, "classes");
  if (!cls.is_array() || cls.empty())
    bad("sigma.classes must be a nonempty list");
  for (const auto &cl : cls) {
    IndexClass ic;
    if (!field(cl, "base").is_number_integer() || !field(cl, "step").is_number_integer())
      bad("sigma class needs integer base and step");
    ic.base = cl.at("base").get<Index>();
    ic.step = cl.at("step").get<Index>();
    ic.sign = cl.contains("sign") ? cl.at("sign").get<int>() : 1;
    c.sigma.classes.push_back(ic);
  }
  auto square = [&](const char *key) {
    const Json &m = field(j, key);
    if (!m.is_array())
      bad(std::string(key) + " must be a matrix");
    int n = static_cast<int>(m.size());
    return matrix_from_json(m, n, n);
  };
  c.pi_x = square("pi_X");
  c.pi_y = j.contains("pi_Y") ? square("pi_Y") : Matrix(0, 0);
  c.alpha = scalar_seq_from_json(field(j, "alpha"));
  return c;
}

Json to_json(const StandardInvariants &inv) {
  Json out = Json::array();
  for (long e : inv.entries)
    out.push_back(e == StandardInvariants::aleph0 ? Json("aleph0") : Json(e));
  return out;
}

} // namespace cartan
