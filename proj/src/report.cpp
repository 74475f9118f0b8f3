#include "bvb/report.hpp"

#include <stdexcept>

namespace bvb {

Json rational_json(const Q& q) { return to_string(q); }

Q rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Q(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("rational must be an integer or a \"p/q\" string");
}

Json matrix_json(const Mat& m) {
  Json rows = Json::array();
  for (long i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  const long r = static_cast<long>(j.size());
  const long c = r == 0 ? 0 : static_cast<long>(j[0].size());
  Mat m = zeros(r, c);
  for (long i = 0; i < r; ++i) {
    if (!j[i].is_array() || static_cast<long>(j[i].size()) != c) throw std::invalid_argument("matrix rows differ in length");
    for (long k = 0; k < c; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

Json dims_json(const std::map<int, int>& dims) {
  Json out = Json::object();
  for (auto [k, d] : dims) out[std::to_string(k)] = d;
  return out;
}

Json bidims_json(const std::map<std::pair<int, int>, int>& dims) {
  Json out = Json::object();
  for (auto& [k, d] : dims) out[std::to_string(k.first) + "," + std::to_string(k.second)] = d;
  return out;
}

Json hpoly_json(const HPoly& p) {
  Json out = Json::array();
  for (const Q& x : p.c) out.push_back(rational_json(x));
  return out;
}

Json sym_json(const SymAlgebra& A, const SymElement& x) {
  Json out = Json::array();
  for (auto& [m, p] : x.terms) {
    Json mono = Json::array();
    for (auto t : A.describe(m)) mono.push_back(Json::array({t[0], t[1], t[2]}));
    out.push_back(Json{{"monomial", mono}, {"coeff", hpoly_json(p)}});
  }
  return out;
}

void Report::expect(const std::string& name, Json computed, Json expected, const std::string& src) {
  bool ok = computed == expected;
  checks_.push_back(Check{name, std::move(computed), std::move(expected), src, ok});
}

void Report::require(const std::string& name, bool ok, const std::string& src) {
  checks_.push_back(Check{name, ok, true, src, ok});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (Check c : other.checks_) {
    c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
  for (auto& [k, v] : other.notes_.items()) notes_[prefix + k] = v;
}

bool Report::pass() const { return failures() == 0; }

size_t Report::failures() const {
  size_t n = 0;
  for (const auto& c : checks_)
    if (!c.pass) ++n;
  return n;
}

Json Report::to_json() const {
  Json checks = Json::array();
  for (const auto& c : checks_)
    checks.push_back(Json{{"name", c.name}, {"computed", c.computed}, {"expected", c.expected}, {"source", c.source}, {"pass", c.pass}});
  return Json{{"schema_version", kSchemaVersion}, {"command", command_}, {"inputs", inputs_}, {"checks", checks},
              {"notes", notes_}, {"pass", pass()}};
}

}  // namespace bvb
