#include "rootforge/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "rootforge/errors.hpp"

namespace rootforge::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <typename T>
T as(const json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw InputError("malformed " + what);
  }
}

std::vector<std::string> names(const json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array");
  return as<std::vector<std::string>>(j, what);
}

RealMatrix real_matrix(const json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of rows");
  RealMatrix out;
  for (const json& row : j) {
    if (!row.is_array()) throw InputError(what + " must be an array of rows");
    std::vector<double> r;
    for (const json& v : row) {
      if (!v.is_number()) throw InputError(what + " entries must be numbers");
      r.push_back(v.get<double>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Vec> vectors(const json& j, const std::string& what) { return real_matrix(j, what); }

json word_list(const CoxeterGroup& g, const std::vector<Element>& xs) {
  json out = json::array();
  for (const Element& x : xs) out.push_back(g.format(x));
  return out;
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

CoxeterMatrix read_coxeter_matrix(const json& j) {
  if (j.is_object() && j.contains("type")) {
    if (!j.at("type").is_string()) throw InputError("\"type\" must be a string");
    return CoxeterMatrix::of_type(j.at("type").get<std::string>());
  }
  auto gens = names(field(j, "generators"), "generators");
  const json& mj = field(j, "matrix");
  if (!mj.is_array()) throw InputError("matrix must be an array of rows");
  std::vector<std::vector<int>> m;
  for (const json& row : mj) {
    if (!row.is_array()) throw InputError("matrix must be an array of rows");
    std::vector<int> r;
    for (const json& v : row) {
      if (!v.is_number_integer()) throw InputError("matrix entries must be integers");
      r.push_back(v.get<int>());
    }
    m.push_back(std::move(r));
  }
  return CoxeterMatrix(std::move(gens), std::move(m));
}

json to_json(const CoxeterMatrix& m) { return {{"generators", m.generators()}, {"matrix", m.entries()}}; }

Ngcm read_ngcm(const json& j) {
  Ngcm a;
  if (j.contains("labels")) a.labels = names(j.at("labels"), "labels");
  a.a = real_matrix(field(j, "ngcm"), "ngcm");
  return a;
}

json to_json(const Ngcm& a) { return {{"labels", a.labels}, {"ngcm", a.a}}; }

BasedRootDatum read_datum(const json& j) {
  if (!j.contains("roots")) {
    if (j.contains("coroots")) throw InputError("\"coroots\" given without \"roots\"");
    return BasedRootDatum::from_ngcm(read_ngcm(j));
  }
  BasedRootDatum b;
  b.roots = vectors(j.at("roots"), "roots");
  b.coroots = vectors(field(j, "coroots"), "coroots");
  if (b.roots.size() != b.coroots.size()) throw InputError("roots and coroots differ in number");
  if (j.contains("labels")) {
    b.labels = names(j.at("labels"), "labels");
  } else {
    for (std::size_t i = 0; i < b.roots.size(); ++i) b.labels.push_back("a" + std::to_string(i + 1));
  }
  if (b.labels.size() != b.roots.size()) throw InputError("label count does not match the number of roots");
  const std::size_t dv = b.roots.empty() ? 0 : b.roots.front().size();
  const std::size_t dvp = b.coroots.empty() ? 0 : b.coroots.front().size();
  for (const Vec& r : b.roots)
    if (r.size() != dv) throw InputError("roots have different dimensions");
  for (const Vec& r : b.coroots)
    if (r.size() != dvp) throw InputError("coroots have different dimensions");
  if (j.contains("pairing")) {
    b.pairing = real_matrix(j.at("pairing"), "pairing");
    if (b.pairing.size() != dv) throw InputError("pairing has the wrong number of rows");
    for (const auto& row : b.pairing)
      if (row.size() != dvp) throw InputError("pairing has the wrong number of columns");
  } else {
    if (dv != dvp) throw InputError("a default pairing needs roots and coroots of equal dimension");
    b.pairing.assign(dv, std::vector<double>(dv, 0.0));
    for (std::size_t i = 0; i < dv; ++i) b.pairing[i][i] = 1.0;
  }
  if (j.contains("ngcm")) {
    const RealMatrix stated = real_matrix(j.at("ngcm"), "ngcm");
    const RealMatrix actual = b.ngcm();
    bool same = stated.size() == actual.size();
    for (std::size_t i = 0; same && i < actual.size(); ++i) {
      same = stated[i].size() == actual[i].size();
      for (std::size_t k = 0; same && k < actual[i].size(); ++k)
        same = std::abs(stated[i][k] - actual[i][k]) <= 1e-9 * std::max(1.0, std::abs(actual[i][k]));
    }
    if (!same) throw InputError("\"ngcm\" disagrees with the pairing of roots and coroots");
  }
  return b;
}

json to_json(const BasedRootDatum& b) {
  return {{"labels", b.labels}, {"ngcm", b.ngcm()}, {"pairing", b.pairing}, {"roots", b.roots}, {"coroots", b.coroots}};
}

AbstractRoot read_root(const CoxeterGroup& g, const json& j) {
  const json& r = field(j, "refl");
  if (!r.is_string()) throw InputError("\"refl\" must be a word string");
  const Element t = g.parse(r.get<std::string>());
  if (!g.is_reflection(t)) throw InputError("\"" + r.get<std::string>() + "\" is not a reflection");
  const json& s = field(j, "sign");
  if (!s.is_number_integer() || (s.get<int>() != 1 && s.get<int>() != -1)) throw InputError("\"sign\" must be 1 or -1");
  return {t, s.get<int>()};
}

json to_json(const CoxeterGroup& g, const AbstractRoot& a) { return {{"refl", g.format(a.reflection)}, {"sign", a.sign}}; }

std::vector<AbstractRoot> read_roots(const CoxeterGroup& g, const json& j) {
  const json& arr = j.is_array() ? j : field(j, "roots");
  if (!arr.is_array()) throw InputError("roots must be an array");
  std::vector<AbstractRoot> out;
  for (const json& r : arr) out.push_back(read_root(g, r));
  return out;
}

json to_json(const CoxeterGroup& g, const std::vector<AbstractRoot>& roots) {
  json out = json::array();
  for (const auto& a : roots) out.push_back(to_json(g, a));
  return out;
}

std::size_t read_window_length(const json& j, std::size_t fallback) {
  if (!j.is_object() || !j.contains("window")) return fallback;
  const json& w = j.at("window");
  if (!w.is_number_unsigned()) throw InputError("\"window\" must be a nonnegative integer");
  return w.get<std::size_t>();
}

TwistSpec read_twist_spec(const CoxeterMatrix& m, const json& j) {
  if (!j.is_object()) throw InputError("twist spec must be an object");
  auto part = [&](const char* key) {
    return j.contains(key) ? names(j.at(key), key) : std::vector<std::string>{};
  };
  return TwistSpec::from_names(m, part("J"), part("K"), part("L"), part("M"));
}

json to_json(const CoxeterMatrix& m, const TwistSpec& spec) {
  auto part = [&](const std::vector<int>& xs) {
    json out = json::array();
    for (int x : xs) out.push_back(m.name(x));
    return out;
  };
  return {{"J", part(spec.J)}, {"K", part(spec.K)}, {"L", part(spec.L)}, {"M", part(spec.M)}};
}

json to_json(const CoxeterGroup& g, const TwistResult& t) {
  json out = to_json(t.matrix);
  out["w_K"] = g.format(t.w_k);
  // Generators of J' are written as w_K r w_K, which is reduced.
  json words = json::array();
  for (std::size_t i = 0; i < t.generators.size(); ++i) {
    if (!t.in_j[i]) {
      words.push_back(g.format(t.generators[i]));
      continue;
    }
    Word w = t.w_k.word();
    w.push_back(static_cast<int>(i));
    w.insert(w.end(), t.w_k.word().rbegin(), t.w_k.word().rend());
    words.push_back(g.format_word(w));
  }
  out["words"] = words;
  out["normal_forms"] = word_list(g, t.generators);
  out["in_J"] = t.in_j;
  return out;
}

ReflectionSet read_twist_set(const CoxeterGroup& g, const json& j) {
  const json& arr = j.is_array() ? j : field(j, "A");
  if (!arr.is_array()) throw InputError("twist set must be an array of reflection words");
  ReflectionSet out;
  for (const json& w : arr) {
    if (!w.is_string()) throw InputError("twist set entries must be word strings");
    const Element t = g.parse(w.get<std::string>());
    if (!g.is_reflection(t)) throw InputError("\"" + w.get<std::string>() + "\" is not a reflection");
    out.insert(t);
  }
  return out;
}

json twist_set_to_json(const CoxeterGroup& g, const ReflectionSet& A) {
  return {{"A", word_list(g, std::vector<Element>(A.begin(), A.end()))}};
}

json to_json(const CocycleProvider& p, const OrderRelation& rel) {
  json elements = json::array(), twist = json::array(), relation = json::array(), hasse = json::array();
  for (std::size_t w = 0; w < rel.size; ++w) elements.push_back(p.label(w));
  for (std::size_t t = rel.twist.find_first(); t != ReflectionMask::npos; t = rel.twist.find_next(t))
    twist.push_back(p.reflection_label(t));
  for (std::size_t x = 0; x < rel.size; ++x) {
    std::vector<int> row;
    for (std::size_t y = 0; y < rel.size; ++y) row.push_back(rel.leq(x, y) ? 1 : 0);
    relation.push_back(row);
  }
  for (const auto& [x, y] : rel.hasse) hasse.push_back({x, y});
  return {{"kind", rel.kind == OrderKind::Weak ? "WEAK" : "BRUHAT"},
          {"reflections", p.reflection_count()},
          {"A", twist},
          {"elements", elements},
          {"relation", relation},
          {"partial_order", rel.partial_order},
          {"hasse", hasse}};
}

OrderRelation read_order_relation(const json& j) {
  OrderRelation rel;
  const std::string kind = as<std::string>(field(j, "kind"), "kind");
  if (kind == "WEAK") {
    rel.kind = OrderKind::Weak;
  } else if (kind == "BRUHAT") {
    rel.kind = OrderKind::Bruhat;
  } else {
    throw InputError("unknown order kind \"" + kind + "\"");
  }
  rel.size = field(j, "elements").size();
  const json& m = field(j, "relation");
  if (!m.is_array() || m.size() != rel.size) throw InputError("relation must be a square 0/1 matrix");
  rel.below.assign(rel.size, ReflectionMask(rel.size));
  for (std::size_t x = 0; x < rel.size; ++x) {
    if (!m[x].is_array() || m[x].size() != rel.size) throw InputError("relation must be a square 0/1 matrix");
    for (std::size_t y = 0; y < rel.size; ++y)
      if (as<int>(m[x][y], "relation entry")) rel.below[y].set(x);
  }
  rel.partial_order = as<bool>(field(j, "partial_order"), "partial_order");
  for (const json& e : field(j, "hasse")) {
    auto pair = as<std::vector<std::size_t>>(e, "hasse edge");
    if (pair.size() != 2 || pair[0] >= rel.size || pair[1] >= rel.size) throw InputError("malformed hasse edge");
    rel.hasse.emplace_back(pair[0], pair[1]);
  }
  rel.twist = ReflectionMask(j.contains("reflections") ? as<std::size_t>(j.at("reflections"), "reflections") : 0);
  return rel;
}

json to_json(const RootSlice& slice) {
  json roots = json::array();
  for (const auto& r : slice.roots)
    roots.push_back({{"depth", r.depth}, {"root", r.root}, {"coroot", r.coroot}, {"positive", r.positive}});
  return {{"datum", to_json(slice.datum)},
          {"depth_bound", slice.depth_bound},
          {"closed", slice.closed},
          {"positive_count", slice.positive_count()},
          {"roots", roots}};
}

RootSlice read_root_slice(const json& j) {
  RootSlice s;
  s.datum = read_datum(field(j, "datum"));
  s.depth_bound = as<std::size_t>(field(j, "depth_bound"), "depth_bound");
  s.closed = as<bool>(field(j, "closed"), "closed");
  for (const json& r : field(j, "roots")) {
    RootPair p;
    p.depth = as<std::size_t>(field(r, "depth"), "depth");
    p.root = as<Vec>(field(r, "root"), "root");
    p.coroot = as<Vec>(field(r, "coroot"), "coroot");
    p.positive = as<bool>(field(r, "positive"), "positive");
    s.roots.push_back(std::move(p));
  }
  return s;
}

std::string to_tsv(const RootSlice& slice) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "depth\troot\tcoroot\tpositive\n";
  auto coords = [&](const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  };
  for (const auto& r : slice.roots) {
    out << r.depth << '\t';
    coords(r.root);
    out << '\t';
    coords(r.coroot);
    out << '\t' << (r.positive ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace rootforge::io
