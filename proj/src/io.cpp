#include "grext/io.hpp"

#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "grext/error.hpp"

namespace grext::io {

namespace {

std::string position(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

// Semantic errors point at the first occurrence of the offending key or name.
struct Locator {
  std::string_view text;
  std::string_view source;

  [[noreturn]] void fail(std::string_view token, const std::string& message) const {
    std::size_t at = std::string_view::npos;
    if (!token.empty()) at = text.find("\"" + std::string(token) + "\"");
    const std::string where = std::string(source) + ":" + (at == std::string_view::npos ? "1:1" : position(text, at));
    throw Error(ErrorKind::Parse, where + ": " + message, std::string(token));
  }
};

void expect_keys(const Json& obj, std::initializer_list<const char*> keys, std::string_view what, const Locator& loc) {
  if (!obj.is_object()) loc.fail("", std::string(what) + " must be an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, _] : obj.items())
    if (!allowed.count(k)) loc.fail(k, "unknown key \"" + k + "\" in " + std::string(what));
  for (const char* k : keys)
    if (!obj.contains(k)) loc.fail("", std::string(what) + " is missing key \"" + k + "\"");
}

std::int64_t integer(const Json& v, std::string_view token, const std::string& what, const Locator& loc) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > std::uint64_t(std::numeric_limits<std::int64_t>::max()))
      loc.fail(token, what + " is out of range");
    return v.get<std::int64_t>();
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    std::size_t used = 0;
    try {
      const long long n = std::stoll(s, &used);
      if (used == s.size()) return n;
    } catch (const std::exception&) {
    }
  }
  loc.fail(token, what + " must be an integer");
}

Vec lincomb(const Json& v, const std::map<std::string, std::size_t>& index, std::string_view token,
            const std::string& what, const Locator& loc) {
  if (!v.is_array()) loc.fail(token, what + " must be a list of {basis, coeff}");
  Vec out(index.size());
  for (const auto& term : v) {
    expect_keys(term, {"basis", "coeff"}, what + " term", loc);
    if (!term["basis"].is_string()) loc.fail(token, what + ": basis must be a name");
    const auto& name = term["basis"].get_ref<const std::string&>();
    const auto it = index.find(name);
    if (it == index.end()) loc.fail(token.empty() ? std::string_view(name) : token, what + " names unknown basis element \"" + name + "\"");
    out[it->second] += Fp::from(integer(term["coeff"], token, what + " coefficient", loc));
  }
  return out;
}

Json lincomb_json(const GradedAlgebra& a, std::span<const Fp> v) {
  Json out = Json::array();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k]) out.push_back({{"basis", a.name(k)}, {"coeff", v[k].value()}});
  return out;
}

}  // namespace

AlgebraPtr parse_algebra(std::string_view text, std::string_view source) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(ErrorKind::Parse, std::string(source) + ":" + position(text, at) + ": malformed JSON (" + e.what() + ")");
  }
  const Locator loc{text, source};
  expect_keys(j, {"prime", "basis", "unit", "idempotents", "products"}, "algebra file", loc);

  const std::int64_t p = integer(j["prime"], "prime", "prime", loc);
  if (p < 2 || p >= (std::int64_t(1) << 31) || !is_prime(static_cast<std::uint64_t>(p)))
    loc.fail("prime", "prime must be a prime below 2^31");
  set_prime(static_cast<std::uint32_t>(p));

  Presentation pres;
  std::map<std::string, std::size_t> index;
  if (!j["basis"].is_array()) loc.fail("basis", "basis must be a list");
  for (const auto& entry : j["basis"]) {
    expect_keys(entry, {"name", "degree"}, "basis entry", loc);
    if (!entry["name"].is_string()) loc.fail("basis", "basis name must be a string");
    const auto& name = entry["name"].get_ref<const std::string&>();
    if (name.empty() || name.find('*') != std::string::npos) loc.fail(name, "basis name \"" + name + "\" is empty or contains '*'");
    if (!index.emplace(name, pres.names.size()).second) loc.fail(name, "duplicate basis name \"" + name + "\"");
    const std::int64_t deg = integer(entry["degree"], name, "degree of " + name, loc);
    if (deg < std::numeric_limits<int>::min() || deg > std::numeric_limits<int>::max()) loc.fail(name, "degree out of range");
    pres.names.push_back(name);
    pres.degrees.push_back(static_cast<int>(deg));
  }
  const std::size_t n = pres.names.size();

  pres.unit = lincomb(j["unit"], index, "unit", "unit", loc);
  if (!j["idempotents"].is_array()) loc.fail("idempotents", "idempotents must be a list");
  for (const auto& e : j["idempotents"]) pres.idempotents.push_back(lincomb(e, index, "idempotents", "idempotent", loc));

  if (!j["products"].is_object()) loc.fail("products", "products must be an object");
  pres.products.assign(n * n, Vec(n));
  for (const auto& [key, value] : j["products"].items()) {
    const auto star = key.find('*');
    if (star == std::string::npos || key.find('*', star + 1) != std::string::npos)
      loc.fail(key, "product key \"" + key + "\" is not of the form name*name");
    const auto l = index.find(key.substr(0, star));
    const auto r = index.find(key.substr(star + 1));
    if (l == index.end() || r == index.end()) loc.fail(key, "product key \"" + key + "\" names an unknown basis element");
    pres.products[l->second * n + r->second] = lincomb(value, index, key, "product " + key, loc);
  }
  return validate_algebra(std::move(pres));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Parse, path + ": cannot write file");
  out << text;
}

AlgebraPtr load_algebra(const std::string& path) { return parse_algebra(read_file(path), path); }

Json algebra_json(const GradedAlgebra& a) {
  Json j;
  j["prime"] = prime();
  Json basis = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back({{"name", a.name(i)}, {"degree", a.degree(i)}});
  j["basis"] = std::move(basis);
  j["unit"] = lincomb_json(a, a.unit());
  Json idem = Json::array();
  for (const auto& e : a.idempotents()) idem.push_back(lincomb_json(a, e));
  j["idempotents"] = std::move(idem);
  Json products = Json::object();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (!is_zero(a.basis_product(i, k))) products[a.name(i) + "*" + a.name(k)] = lincomb_json(a, a.basis_product(i, k));
  j["products"] = std::move(products);
  return j;
}

std::string save_algebra(const GradedAlgebra& a) { return algebra_json(a).dump(2) + "\n"; }

AlgebraPtr gen_example(std::string_view kind, int param) {
  Presentation p;
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, std::int64_t c) {
    p.products[i * p.names.size() + j][k] = Fp::from(c);
  };
  auto finish_products = [&] { p.products.assign(p.names.size() * p.names.size(), Vec(p.names.size())); };
  if (kind == "truncated_poly") {
    if (param < 1) throw Error(ErrorKind::Unsupported, "truncated_poly needs n >= 1");
    const auto n = static_cast<std::size_t>(param);
    for (std::size_t i = 0; i < n; ++i) {
      p.names.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
      p.degrees.push_back(static_cast<int>(i));
    }
    finish_products();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; i + j < n; ++j) set(i, j, i + j, 1);
    p.unit = unit_vec(n, 0);
    p.idempotents = {unit_vec(n, 0)};
  } else if (kind == "exterior") {
    if (param == 1) {
      p.names = {"1", "x"};
      p.degrees = {0, 1};
      finish_products();
      set(0, 0, 0, 1);
      set(0, 1, 1, 1);
      set(1, 0, 1, 1);
    } else if (param == 2) {
      p.names = {"1", "x", "y", "xy"};
      p.degrees = {0, 1, 1, 2};
      finish_products();
      for (std::size_t i = 0; i < 4; ++i) {
        set(0, i, i, 1);
        set(i, 0, i, 1);
      }
      set(1, 2, 3, 1);
      set(2, 1, 3, -1);
    } else {
      throw Error(ErrorKind::Unsupported, "exterior algebras are generated for m = 1 or 2 only");
    }
    p.unit = unit_vec(p.names.size(), 0);
    p.idempotents = {p.unit};
  } else if (kind == "product_counterexample") {
    // k × k[x]/(x^2)
    p.names = {"e", "f", "x"};
    p.degrees = {0, 0, 1};
    finish_products();
    set(0, 0, 0, 1);
    set(1, 1, 1, 1);
    set(1, 2, 2, 1);
    set(2, 1, 2, 1);
    p.unit = Vec{Fp::one(), Fp::one(), Fp::zero()};
    p.idempotents = {unit_vec(3, 0), unit_vec(3, 1)};
  } else if (kind == "upper_triangular") {
    if (param < 1) throw Error(ErrorKind::Unsupported, "upper_triangular needs c >= 1");
    std::map<std::pair<int, int>, std::size_t> at;
    for (int i = 1; i <= param; ++i)
      for (int j = i; j <= param; ++j) {
        at[{i, j}] = p.names.size();
        p.names.push_back("E" + std::to_string(i) + "," + std::to_string(j));
        p.degrees.push_back(0);
      }
    finish_products();
    const std::size_t n = p.names.size();
    for (const auto& [ij, u] : at)
      for (int k = ij.second; k <= param; ++k) set(u, at[{ij.second, k}], at[{ij.first, k}], 1);
    p.unit = Vec(n);
    for (int i = 1; i <= param; ++i) {
      p.unit[at[{i, i}]] = Fp::one();
      p.idempotents.push_back(unit_vec(n, at[{i, i}]));
    }
  } else {
    throw Error(ErrorKind::Unsupported, "unknown example kind \"" + std::string(kind) + "\"");
  }
  return validate_algebra(std::move(p));
}

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.value());
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& x : m.row(r)) row.push_back(x.value());
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const GradedModule& m) {
  Json dims = Json::array();
  for (const auto& [deg, d] : m.graded_dims()) dims.push_back({{"degree", deg}, {"dim", d}});
  Json actions = Json::array();
  for (const auto& a : m.actions()) actions.push_back(to_json(a));
  return {{"dim", m.dim()}, {"graded_dims", std::move(dims)}, {"degrees", m.degrees()}, {"actions", std::move(actions)}};
}

Json to_json(const SelfInjectivity& s) {
  Json j{{"holds", s.holds}, {"injective_dims", s.injective_dims}, {"cover_dims", s.cover_dims}};
  j["failing_index"] = s.failing_index ? Json(*s.failing_index) : Json(nullptr);
  return j;
}

Json to_json(const NakayamaData& n) {
  return {{"permutation", n.permutation},
          {"shifts", n.shifts},
          {"cover_dims", n.cover_dims},
          {"top_degrees", n.top_degrees}};
}

Json to_json(const GldimResult& g) {
  Json j;
  j["finite"] = g.finite;
  j["value"] = g.finite ? Json(g.value) : Json("ExceedsCutoff");
  j["cutoff_reached"] = !g.finite;
  Json pds = Json::array();
  for (int pd : g.simple_pds) pds.push_back(pd < 0 ? Json("ExceedsCutoff") : Json(pd));
  j["simple_projective_dims"] = std::move(pds);
  return j;
}

Json to_json(const SigmaExtraction& s) {
  return {{"sigma", to_json(s.sigma.matrix)},
          {"generator", to_json(s.generator)},
          {"theta", to_json(s.theta)},
          {"random_trials", s.trials},
          {"from_sweep", s.from_sweep}};
}

Json to_json(const EquivalenceCertificate& c) {
  Json j;
  j["passed"] = c.passed();
  j["checks"] = {{"algebra_isomorphism", c.algebra_iso_ok},
                 {"round_trip", c.round_trip_ok},
                 {"hom_dimensions", c.hom_dims_ok},
                 {"projective_injective_preservation", c.preservation_ok},
                 {"functoriality", c.functoriality_ok}};
  j["dims"] = {{"A", c.a->dim()},
               {"b", c.t.b->dim()},
               {"x", c.t.x.dim()},
               {"t", c.t.t->dim()},
               {"T", c.big_t->dim()}};
  j["sigma"] = to_json(c.sigma);
  Json samples = Json::array();
  for (const auto& s : c.samples)
    samples.push_back({{"label", s.label}, {"dim", s.dim}, {"round_trip", s.round_trip}, {"preserved", s.preserved}});
  j["samples"] = std::move(samples);
  // [source, target, dim Hom before, dim Hom after, morphisms carried]
  Json pairs = Json::array();
  for (const auto& p : c.pairs) pairs.push_back(Json::array({p.source, p.target, p.hom_before, p.hom_after, p.morphisms_ok}));
  j["pairs"] = std::move(pairs);
  j["compositions_checked"] = c.compositions_checked;
  j["first_failure"] = c.first_failure.empty() ? Json(nullptr) : Json(c.first_failure);
  return j;
}

}  // namespace grext::io
