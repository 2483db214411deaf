#include "json_io.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace qtower::io {

namespace {

Json integer_to_json(const Integer& k) {
  if (k.fits_int64()) return Json(k.small());
  return Json(k.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("json: integer expected");
}

Json laurent_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) out.push_back(Json::array({t.es, t.ev, integer_to_json(t.c)}));
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  std::vector<LaurentTerm> terms;
  for (const auto& t : j) terms.push_back(LaurentTerm{t.at(0).get<int>(), t.at(1).get<int>(), integer_from_json(t.at(2))});
  return LaurentPoly::from_terms(std::move(terms));
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  return Rational::parse(j.get<std::string>());
}

Field parse_mode(const std::string& name) {
  if (name == "symbolic,v=1") return Field::symbolic().with_unit_twist();
  return Field::parse(name);
}

}  // namespace

Json scalar_to_json(const Scalar& x, const Field& f) {
  Scalar y = x.kind() == Scalar::Kind::Int ? f.one() * x : x;
  switch (y.kind()) {
    case Scalar::Kind::Sym:
      return Json{{"num", laurent_to_json(y.num())}, {"den", laurent_to_json(y.den())}};
    case Scalar::Kind::Rat:
      return Json(y.rat().str());
    case Scalar::Kind::Cyc:
      return Json{{"a", y.cyc_a().str()}, {"b", y.cyc_b().str()}};
    case Scalar::Kind::Int:
      return Json(y.rat().str());
  }
  throw std::logic_error("scalar kind");
}

Scalar scalar_from_json(const Json& j, const Field& f) {
  switch (f.mode()) {
    case Mode::Symbolic:
      return Scalar::symbolic(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
    case Mode::RationalS:
      return Scalar::rational(rational_from_json(j));
    case Mode::Cyclotomic:
      return Scalar::cyclotomic(rational_from_json(j.at("a")), rational_from_json(j.at("b")));
  }
  throw std::logic_error("field mode");
}

Json zpoly_to_json(const ZPoly& p, const Field& f) {
  Json out = Json::array();
  for (const auto& [key, c] : p.terms()) out.push_back(Json::array({mono_unpack(key, p.nvars()), scalar_to_json(c, f)}));
  return out;
}

ZPoly zpoly_from_json(const Json& j, int nvars, const Field& f) {
  std::vector<ZPoly::Term> terms;
  for (const auto& t : j) {
    auto exps = t.at(0).get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != nvars) throw std::invalid_argument("json: exponent vector length");
    terms.emplace_back(mono_pack(exps), scalar_from_json(t.at(1), f));
  }
  return ZPoly::from_terms(nvars, std::move(terms));
}

Json solution_to_json(const QkzParams& p, const PolyVec& g) {
  const Basis& b = Basis::of(p.n);
  Json comps = Json::object();
  for (int i = 0; i < b.size(); ++i) comps[b[i].key()] = zpoly_to_json(g[i], p.field);
  return Json{{"n", p.n},
              {"s_mode", p.field.name()},
              {"q", "s^6"},
              {"c", "(-s^-3)^(n-1)"},
              {"q_value", scalar_to_json(p.q, p.field)},
              {"c_value", scalar_to_json(p.c, p.field)},
              {"degree", p.n * (p.n - 1) / 2},
              {"components", comps}};
}

LoadedSolution solution_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  Field f = parse_mode(j.at("s_mode").get<std::string>());
  QkzParams p = QkzParams::standard(f, n);
  if (j.contains("q_value")) p.q = scalar_from_json(j.at("q_value"), f);
  if (j.contains("c_value")) p.c = scalar_from_json(j.at("c_value"), f);
  const Basis& b = Basis::of(n);
  PolyVec g(b.size(), ZPoly(n));
  const Json& comps = j.at("components");
  if (static_cast<int>(comps.size()) != b.size()) throw std::invalid_argument("json: component count");
  for (auto it = comps.begin(); it != comps.end(); ++it) g[b.index_of_key(it.key())] = zpoly_from_json(it.value(), n, f);
  return {p, g};
}

Json matrix_to_json(const Matrix& m, const Field& f, int row_n, int col_n) {
  auto keys = [](int n) {
    Json out = Json::array();
    for (const auto& pat : Basis::of(n).patterns()) out.push_back(pat.key());
    return out;
  };
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(scalar_to_json(x, f));
    rows.push_back(row);
  }
  Json out{{"n", row_n}, {"s_mode", f.name()}, {"basis", keys(row_n)}};
  if (col_n != row_n) {
    out["column_n"] = col_n;
    out["column_basis"] = keys(col_n);
  }
  out["rows"] = rows;
  return out;
}

Json macdonald_to_json(const MacdonaldResult& r, const Field& f) {
  Json spec = Json::array();
  for (const auto& x : r.spec) spec.push_back(scalar_to_json(x, f));
  return Json{{"n", r.E.nvars()},
              {"s_mode", f.name()},
              {"lambda", r.lambda},
              {"q", "s^6"},
              {"t", "s^4"},
              {"q_value", scalar_to_json(f.q(), f)},
              {"spectrum", spec},
              {"kernel_dim", r.kernel_dim},
              {"terms", zpoly_to_json(r.E, f)}};
}

Json suite_summary(const std::vector<CriterionResult>& results, bool with_timing) {
  Json checks = Json::array();
  Json criteria = Json::array();
  for (const auto& c : results) {
    criteria.push_back(Json{{"criterion", c.id}, {"title", c.title}, {"status", c.pass() ? "PASS" : "FAIL"}});
    for (const auto& k : c.checks) {
      Json row{{"check", k.check}, {"n", k.n}, {"status", k.ok ? "PASS" : "FAIL"}};
      row["millis"] = with_timing ? static_cast<long long>(k.millis) : 0LL;
      row["criterion"] = c.id;
      row["required"] = k.required;
      if (!k.detail.empty()) row["detail"] = k.detail;
      checks.push_back(row);
    }
  }
  return Json{{"criteria", criteria}, {"checks", checks}};
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return Json::parse(in);
}

void write_file(const std::string& path, const Json& j) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace qtower::io
