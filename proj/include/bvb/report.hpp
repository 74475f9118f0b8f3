#pragma once

#include "bvb/sym.hpp"

#include "json.hpp"

#include <map>
#include <string>
#include <vector>

namespace bvb {

// Insertion-ordered, so serialized reports are canonical.
using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

/// Rationals serialize as strings "p/q" (or "p" for integers).
Json rational_json(const Q& q);
Q rational_from_json(const Json& j);
Json matrix_json(const Mat& m);  // row-major array of rows
Mat matrix_from_json(const Json& j);
Json dims_json(const std::map<int, int>& dims);  // {"degree": dim}
Json bidims_json(const std::map<std::pair<int, int>, int>& dims);  // {"p,q": dim}
Json hpoly_json(const HPoly& p);  // coefficient per hbar power
// [{monomial: [[degree, index, multiplicity], ...], coeff: [...]}]
Json sym_json(const SymAlgebra& A, const SymElement& x);

/// Where an expected value comes from: a closed-form count, an independently coded
/// oracle, or an algebraic identity that must hold exactly.
namespace source {
inline const char* closed_form = "closed_form";
inline const char* oracle = "oracle";
inline const char* identity = "identity";
}  // namespace source

struct Check {
  std::string name;
  Json computed, expected;
  std::string source;
  bool pass = false;
};

class Report {
 public:
  explicit Report(std::string command = {}) : command_(std::move(command)) {}

  void input(const std::string& key, Json value) { inputs_[key] = std::move(value); }
  // pass iff computed == expected exactly
  void expect(const std::string& name, Json computed, Json expected, const std::string& src);
  void require(const std::string& name, bool ok, const std::string& src = source::identity);
  // Recorded but not checked.
  void note(const std::string& name, Json value) { notes_[name] = std::move(value); }
  // Appends another report's checks and notes with a name prefix.
  void merge(const Report& other, const std::string& prefix);

  bool pass() const;
  const std::vector<Check>& checks() const { return checks_; }
  const std::string& command() const { return command_; }
  size_t failures() const;
  Json to_json() const;

 private:
  std::string command_;
  Json inputs_ = Json::object();
  std::vector<Check> checks_;
  Json notes_ = Json::object();
};

}  // namespace bvb
