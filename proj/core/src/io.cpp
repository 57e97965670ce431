#include "repwild/io.hpp"

#include <algorithm>
#include <fstream>

namespace repwild {

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::SchemaError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Errc::SchemaError, path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::SchemaError, "cannot write " + path);
  out << text;
}

void require_keys(const json& j, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional, const std::string& where) {
  if (!j.is_object()) fail(Errc::SchemaError, where + ": expected an object");
  for (const auto& k : required)
    if (!j.contains(k)) fail(Errc::SchemaError, where + ": missing key '" + k + "'");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (std::find(required.begin(), required.end(), k) == required.end() &&
        std::find(optional.begin(), optional.end(), k) == optional.end())
      fail(Errc::SchemaError, where + ": unknown key '" + k + "'");
  }
}

json scalar_to_json(const Field& f, const Scalar& s) {
  switch (f.kind()) {
    case FieldKind::rationals: return std::get<Rat>(s.v).str();
    case FieldKind::prime: return std::get<int64_t>(s.v);
    case FieldKind::finite_extension: {
      json a = json::array();
      for (auto c : std::get<FFElem>(s.v).c) a.push_back(c);
      return a;
    }
    case FieldKind::cyclotomic: {
      json a = json::array();
      for (const auto& c : std::get<CycElem>(s.v).c) a.push_back(c.str());
      return a;
    }
  }
  return nullptr;
}

Scalar scalar_from_json(const Field& f, const json& j, const std::string& where) {
  try {
    switch (f.kind()) {
      case FieldKind::rationals: {
        if (j.is_number_integer()) return Scalar(Rat(j.get<long>()));
        if (j.is_string()) return Scalar(Rat::from_string(j.get<std::string>()));
        break;
      }
      case FieldKind::prime: {
        long p = f.descriptor().p;
        if (j.is_number_integer()) {
          long v = j.get<long>();
          return Scalar((int64_t)(((v % p) + p) % p));
        }
        if (j.is_string()) {
          Rat r = Rat::from_string(j.get<std::string>());
          if (!r.is_integer()) break;
          mpz_class m = r.num() % p;
          long v = m.get_si();
          return Scalar((int64_t)(((v % p) + p) % p));
        }
        break;
      }
      case FieldKind::finite_extension: {
        if (j.is_array()) {
          FFElem e;
          e.c.assign(f.degree(), 0);
          if ((int)j.size() > f.degree()) break;
          long p = f.descriptor().p;
          for (size_t i = 0; i < j.size(); ++i) e.c[i] = ((j[i].get<long>() % p) + p) % p;
          return Scalar(std::move(e));
        }
        if (j.is_number_integer()) {
          FFElem e;
          e.c.assign(f.degree(), 0);
          long p = f.descriptor().p;
          e.c[0] = ((j.get<long>() % p) + p) % p;
          return Scalar(std::move(e));
        }
        break;
      }
      case FieldKind::cyclotomic: {
        if (j.is_array()) {
          CycElem e;
          e.c.assign(f.degree(), Rat(0));
          if ((int)j.size() > f.degree()) break;
          for (size_t i = 0; i < j.size(); ++i) {
            if (j[i].is_number_integer())
              e.c[i] = Rat(j[i].get<long>());
            else
              e.c[i] = Rat::from_string(j[i].get<std::string>());
          }
          return Scalar(std::move(e));
        }
        if (j.is_number_integer()) {
          CycElem e;
          e.c.assign(f.degree(), Rat(0));
          e.c[0] = Rat(j.get<long>());
          return Scalar(std::move(e));
        }
        if (j.is_string()) {
          CycElem e;
          e.c.assign(f.degree(), Rat(0));
          e.c[0] = Rat::from_string(j.get<std::string>());
          return Scalar(std::move(e));
        }
        break;
      }
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
  }
  fail(Errc::SchemaError, where + ": bad scalar literal " + j.dump());
}

json field_to_json(const FieldDescriptor& d) {
  json j;
  switch (d.kind) {
    case FieldKind::rationals: j["kind"] = "rationals"; break;
    case FieldKind::prime:
      j["kind"] = "prime";
      j["p"] = d.p;
      break;
    case FieldKind::finite_extension:
      j["kind"] = "finite-extension";
      j["p"] = d.p;
      j["modulus"] = d.modulus;
      break;
    case FieldKind::cyclotomic:
      j["kind"] = "cyclotomic";
      j["ell"] = d.ell;
      break;
  }
  return j;
}

FieldDescriptor field_from_json(const json& j, const std::string& where) {
  require_keys(j, {"kind"}, {"p", "modulus", "ell"}, where);
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rationals") return FieldDescriptor::rationals();
  if (kind == "prime") {
    if (!j.contains("p")) fail(Errc::SchemaError, where + ": prime field needs p");
    return FieldDescriptor::prime(j.at("p").get<long>());
  }
  if (kind == "finite-extension") {
    if (!j.contains("p") || !j.contains("modulus"))
      fail(Errc::SchemaError, where + ": finite extension needs p and modulus");
    return FieldDescriptor::finite_extension(j.at("p").get<long>(),
                                             j.at("modulus").get<std::vector<long>>());
  }
  if (kind == "cyclotomic") {
    if (!j.contains("ell")) fail(Errc::SchemaError, where + ": cyclotomic field needs ell");
    return FieldDescriptor::cyclotomic(j.at("ell").get<long>());
  }
  fail(Errc::SchemaError, where + ": unknown field kind '" + kind + "'");
}

json algebra_to_json(const AlgebraTable& A) {
  const Field& f = A.k();
  json j;
  j["schema"] = 1;
  j["field"] = field_to_json(f.descriptor());
  j["dim"] = A.dim;
  j["basis"] = A.basis;
  json sc = json::array();
  for (int i = 0; i < A.dim; ++i)
    for (int jj = 0; jj < A.dim; ++jj)
      for (const auto& [k, c] : A.sc[(size_t)i * A.dim + jj])
        sc.push_back(json::array({i, jj, k, scalar_to_json(f, c)}));
  j["sc"] = std::move(sc);
  json unit = json::array();
  for (const auto& c : A.unit) unit.push_back(scalar_to_json(f, c));
  j["unit"] = std::move(unit);
  if (A.augmentation) {
    json aug = json::array();
    for (const auto& c : *A.augmentation) aug.push_back(scalar_to_json(f, c));
    j["augmentation"] = std::move(aug);
  }
  if (!A.generators.empty()) {
    json gens = json::array();
    for (const auto& g : A.generators) {
      json gv = json::array();
      for (const auto& c : g) gv.push_back(scalar_to_json(f, c));
      gens.push_back(std::move(gv));
    }
    j["generators"] = std::move(gens);
  }
  if (!A.name.empty()) j["name"] = A.name;
  if (!A.family.empty()) j["family"] = A.family;
  return j;
}

AlgebraPtr algebra_from_json(const json& j) {
  require_keys(j, {"schema", "field", "dim", "basis", "sc", "unit"},
               {"augmentation", "generators", "name", "family"}, "algebra");
  if (j.at("schema").get<int>() != 1) fail(Errc::SchemaError, "algebra: unsupported schema");
  auto F = make_field(field_from_json(j.at("field"), "algebra.field"));
  const Field& f = *F;

  auto A = std::make_shared<AlgebraTable>();
  A->field = F;
  A->dim = j.at("dim").get<int>();
  if (A->dim <= 0) fail(Errc::SchemaError, "algebra.dim must be positive");
  A->basis = j.at("basis").get<std::vector<std::string>>();
  if ((int)A->basis.size() != A->dim) fail(Errc::SchemaError, "algebra.basis has wrong length");

  A->sc.assign((size_t)A->dim * A->dim, {});
  long prev_key = -1;
  for (size_t t = 0; t < j.at("sc").size(); ++t) {
    const json& e = j.at("sc")[t];
    std::string where = "algebra.sc[" + std::to_string(t) + "]";
    if (!e.is_array() || e.size() != 4) fail(Errc::SchemaError, where + ": expected [i,j,k,c]");
    long i = e[0].get<long>(), jj = e[1].get<long>(), k = e[2].get<long>();
    if (i < 0 || i >= A->dim || jj < 0 || jj >= A->dim || k < 0 || k >= A->dim)
      fail(Errc::SchemaError, where + ": index out of range");
    long key = (i * A->dim + jj) * A->dim + k;
    if (key <= prev_key) fail(Errc::SchemaError, where + ": entries must be sorted by (i,j,k)");
    prev_key = key;
    Scalar c = scalar_from_json(f, e[3], where);
    if (!f.is_zero(c)) A->sc[(size_t)i * A->dim + jj].emplace_back((int)k, c);
  }

  auto read_vec = [&](const json& arr, const std::string& where) {
    if (!arr.is_array() || (int)arr.size() != A->dim)
      fail(Errc::SchemaError, where + ": expected an array of length dim");
    std::vector<Scalar> v;
    v.reserve(A->dim);
    for (size_t i = 0; i < arr.size(); ++i)
      v.push_back(scalar_from_json(f, arr[i], where + "[" + std::to_string(i) + "]"));
    return v;
  };
  A->unit = read_vec(j.at("unit"), "algebra.unit");
  if (j.contains("augmentation")) A->augmentation = read_vec(j.at("augmentation"), "algebra.augmentation");
  if (j.contains("generators"))
    for (size_t g = 0; g < j.at("generators").size(); ++g)
      A->generators.push_back(
          read_vec(j.at("generators")[g], "algebra.generators[" + std::to_string(g) + "]"));
  if (j.contains("name")) A->name = j.at("name").get<std::string>();
  if (j.contains("family")) A->family = j.at("family").get<std::string>();
  return A;
}

void store_algebra_file(const AlgebraTable& A, const std::string& path) {
  write_text_file(path, canonical_dump(algebra_to_json(A)));
}

AlgebraPtr load_algebra_file(const std::string& path) {
  return algebra_from_json(parse_json_file(path));
}

json module_to_json(const ModuleRep& M, const std::string& algebra_ref) {
  const Field& f = M.k();
  json j;
  j["schema"] = 1;
  j["algebra"] = algebra_ref;
  j["dim"] = M.dim;
  json acts = json::array();
  for (const auto& act : M.action) {
    json rows = json::array();
    for (int r = 0; r < M.dim; ++r) {
      json row = json::array();
      for (int c = 0; c < M.dim; ++c) row.push_back(scalar_to_json(f, act.at(r, c)));
      rows.push_back(std::move(row));
    }
    acts.push_back(std::move(rows));
  }
  j["actions"] = std::move(acts);
  if (!M.name.empty()) j["name"] = M.name;
  return j;
}

ModuleRep module_from_json(const json& j, AlgebraPtr A) {
  require_keys(j, {"schema", "algebra", "dim", "actions"}, {"name"}, "module");
  if (j.at("schema").get<int>() != 1) fail(Errc::SchemaError, "module: unsupported schema");
  if (!A) {
    const json& aref = j.at("algebra");
    if (aref.is_object())
      A = algebra_from_json(aref);
    else
      A = load_algebra_file(aref.get<std::string>());
  }
  const Field& f = A->k();

  ModuleRep M;
  M.algebra = A;
  M.dim = j.at("dim").get<int>();
  if (M.dim < 0) fail(Errc::SchemaError, "module.dim must be non-negative");
  const json& acts = j.at("actions");
  if ((int)acts.size() != A->dim)
    fail(Errc::SchemaError, "module.actions needs one matrix per algebra basis element");
  for (size_t i = 0; i < acts.size(); ++i) {
    std::string where = "module.actions[" + std::to_string(i) + "]";
    const json& rows = acts[i];
    if ((int)rows.size() != M.dim) fail(Errc::SchemaError, where + ": wrong row count");
    Matrix m = Matrix::zero(M.dim, M.dim, f);
    for (int r = 0; r < M.dim; ++r) {
      if ((int)rows[r].size() != M.dim) fail(Errc::SchemaError, where + ": wrong column count");
      for (int c = 0; c < M.dim; ++c)
        m.at(r, c) = scalar_from_json(f, rows[r][c],
                                      where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    M.action.push_back(std::move(m));
  }
  if (j.contains("name")) M.name = j.at("name").get<std::string>();

  auto diag = validate_module(M);
  if (!diag.pass) fail(Errc::SchemaError, "module: " + diag.violations.front());
  return M;
}

void store_module_file(const ModuleRep& M, const std::string& algebra_ref, const std::string& path) {
  write_text_file(path, canonical_dump(module_to_json(M, algebra_ref)));
}

ModuleRep load_module_file(const std::string& path, AlgebraPtr A) {
  return module_from_json(parse_json_file(path), std::move(A));
}

PointedDatum datum_from_json(const json& j) {
  require_keys(j, {"schema", "theta", "group", "elements", "characters", "cartan"}, {},
               "datum");
  if (j.at("schema").get<int>() != 1) fail(Errc::SchemaError, "datum: unsupported schema");
  PointedDatum D;
  D.theta = j.at("theta").get<int>();
  D.group = j.at("group").get<std::vector<long>>();
  D.elements = j.at("elements").get<std::vector<std::vector<long>>>();
  D.characters = j.at("characters").get<std::vector<std::vector<long>>>();
  D.cartan = j.at("cartan").get<std::vector<std::vector<long>>>();
  for (const auto& v : D.elements)
    if (v.size() != D.group.size()) fail(Errc::SchemaError, "datum.elements: wrong arity");
  for (const auto& v : D.characters)
    if (v.size() != D.group.size()) fail(Errc::SchemaError, "datum.characters: wrong arity");
  for (const auto& v : D.cartan)
    if ((int)v.size() != D.theta) fail(Errc::SchemaError, "datum.cartan: wrong arity");
  return D;
}

PointedDatum load_datum_file(const std::string& path) {
  return datum_from_json(parse_json_file(path));
}

}  // namespace repwild
