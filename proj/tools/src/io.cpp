#include "grmlab_cli/io.hpp"

#include <fstream>
#include <sstream>

#include "grmlab/errors.hpp"
#include "grmlab/standard.hpp"

namespace grmlab::cli {

namespace {

const char* const kLambda1 = R"({"prime": 2, "vertices": ["1", "2"],
 "arrows": [{"name": "α", "from": "1", "to": "1"}, {"name": "β", "from": "1", "to": "2"}],
 "relations": [[{"coeff": 1, "path": ["α", "α", "α"]}], [{"coeff": 1, "path": ["α", "β"]}]],
 "nilpotency_bound": 4})";

const char* const kLambda2 = R"({"prime": 2, "vertices": ["1", "2"],
 "arrows": [{"name": "α", "from": "1", "to": "1"}, {"name": "β", "from": "1", "to": "2"},
            {"name": "γ", "from": "1", "to": "2"}],
 "relations": [[{"coeff": 1, "path": ["α", "α", "α"]}], [{"coeff": 1, "path": ["α", "β"]}],
               [{"coeff": 1, "path": ["α", "γ"]}]],
 "nilpotency_bound": 4})";

const char* const kKronecker = R"({"prime": 2, "vertices": ["1", "2"],
 "arrows": [{"name": "a", "from": "1", "to": "2"}, {"name": "b", "from": "1", "to": "2"}],
 "relations": [], "nilpotency_bound": 2})";

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("field '") + key + "': " + e.what());
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

}  // namespace

std::string builtin_algebra(const std::string& name) {
  if (name == "lambda1") return kLambda1;
  if (name == "lambda2") return kLambda2;
  if (name == "kronecker") return kKronecker;
  return "";
}

AlgebraSpec parse_algebra(const json& j) {
  AlgebraSpec s;
  const auto p = get<std::int64_t>(j, "prime");
  if (p < 2 || p >= (std::int64_t{1} << 31)) throw MalformedInput("prime out of range");
  s.prime = static_cast<std::uint32_t>(p);
  s.quiver.vertices = get<std::vector<std::string>>(j, "vertices");
  for (const auto& a : get<json>(j, "arrows")) {
    s.quiver.arrows.push_back({get<std::string>(a, "name"), s.quiver.vertex_index(get<std::string>(a, "from")),
                               s.quiver.vertex_index(get<std::string>(a, "to"))});
  }
  if (j.contains("relations")) {
    for (const auto& r : j.at("relations")) {
      Relation rel;
      for (const auto& t : r) rel.push_back({get<std::int64_t>(t, "coeff"), get<std::vector<std::string>>(t, "path")});
      s.relations.push_back(std::move(rel));
    }
  }
  s.nilpotency_bound = get<std::size_t>(j, "nilpotency_bound");
  return s;
}

json algebra_to_json(const AlgebraSpec& spec) {
  json j;
  j["prime"] = spec.prime;
  j["vertices"] = spec.quiver.vertices;
  j["arrows"] = json::array();
  for (const auto& a : spec.quiver.arrows)
    j["arrows"].push_back({{"name", a.name}, {"from", spec.quiver.vertices[a.source]}, {"to", spec.quiver.vertices[a.target]}});
  j["relations"] = json::array();
  for (const auto& r : spec.relations) {
    json rel = json::array();
    for (const auto& t : r) rel.push_back({{"coeff", t.coeff}, {"path", t.path}});
    j["relations"].push_back(rel);
  }
  j["nilpotency_bound"] = spec.nilpotency_bound;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

AlgebraPtr load_algebra(const std::string& path_or_name) {
  std::string text = builtin_algebra(path_or_name);
  if (text.empty()) text = read_file(path_or_name);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput("algebra file: " + std::string(e.what()));
  }
  return build_algebra(parse_algebra(j));
}

Representation parse_module(const AlgebraPtr& algebra, const json& j) {
  if (j.is_string()) return parse_module(algebra, j.get<std::string>());
  const auto& q = algebra->quiver();
  std::vector<std::size_t> dims(algebra->num_vertices(), 0);
  const auto dims_json = get<json>(j, "dims");
  for (const auto& [name, d] : dims_json.items()) {
    if (!d.is_number_unsigned()) throw MalformedInput("dimension of vertex '" + name + "' must be a nonnegative integer");
    dims[q.vertex_index(name)] = d.get<std::size_t>();
  }
  std::vector<Matrix> arrows;
  for (std::size_t k = 0; k < algebra->num_arrows(); ++k) {
    const auto& a = algebra->arrow(k);
    arrows.emplace_back(algebra->field(), dims[a.target], dims[a.source]);
  }
  if (j.contains("arrows")) {
    for (const auto& [name, rows] : j.at("arrows").items()) {
      auto idx = q.arrow_index(name);
      if (!idx) throw MalformedInput("unknown arrow '" + name + "'");
      const auto& a = algebra->arrow(*idx);
      std::vector<std::vector<std::int64_t>> r;
      try {
        r = rows.get<std::vector<std::vector<std::int64_t>>>();
      } catch (const json::exception&) {
        throw MalformedInput("matrix of arrow '" + name + "' must be a list of integer rows");
      }
      if (r.size() != dims[a.target]) throw DimensionMismatch("arrow '" + name + "' has the wrong number of rows");
      for (const auto& row : r)
        if (row.size() != dims[a.source]) throw DimensionMismatch("arrow '" + name + "' has the wrong number of columns");
      arrows[*idx] = Matrix::from_rows(algebra->field(), r, dims[a.source]);
    }
  }
  return Representation(algebra, std::move(dims), std::move(arrows));
}

Representation parse_module(const AlgebraPtr& algebra, const std::string& expr) {
  const std::string e = trim(expr);
  if (!e.empty() && e.front() == '{') {
    try {
      return parse_module(algebra, json::parse(e));
    } catch (const json::parse_error& err) {
      throw MalformedInput("module JSON: " + std::string(err.what()));
    }
  }
  std::vector<Representation> parts;
  std::stringstream ss(e);
  std::string tok;
  while (std::getline(ss, tok, '+')) {
    tok = trim(tok);
    if (tok == "Lambda") {
      parts.push_back(regular(algebra));
    } else if (tok == "DLambda") {
      parts.push_back(coregular(algebra));
    } else if (tok.size() > 2 && tok[1] == ':' && (tok[0] == 'P' || tok[0] == 'I' || tok[0] == 'S')) {
      const auto v = algebra->quiver().vertex_index(tok.substr(2));
      parts.push_back(tok[0] == 'P' ? projective(algebra, v) : tok[0] == 'I' ? injective(algebra, v) : simple(algebra, v));
    } else {
      throw MalformedInput("bad module term '" + tok + "'");
    }
  }
  if (parts.empty()) throw MalformedInput("empty module expression");
  if (parts.size() == 1) return parts.front();
  return direct_sum(parts).module;
}

json dims_to_json(const AlgebraPtr& algebra, const std::vector<std::size_t>& dims) {
  json j = json::object();
  for (std::size_t v = 0; v < dims.size(); ++v) j[algebra->quiver().vertices[v]] = dims[v];
  return j;
}

json dims_to_json(const Representation& m) { return dims_to_json(m.algebra(), m.dims()); }

json module_to_json(const Representation& m) {
  json j;
  j["dims"] = dims_to_json(m);
  j["arrows"] = json::object();
  for (std::size_t k = 0; k < m.algebra()->num_arrows(); ++k) {
    const auto& a = m.arrow(k);
    json rows = json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(r, c));
      rows.push_back(row);
    }
    j["arrows"][m.algebra()->arrow(k).name] = rows;
  }
  return j;
}

LengthFunction parse_weights(const AlgebraPtr& algebra, const std::string& text) {
  std::vector<Rational> w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) w.push_back(Rational::parse(trim(tok)));
  if (w.size() != algebra->num_vertices())
    throw MalformedInput("expected " + std::to_string(algebra->num_vertices()) + " weights");
  return LengthFunction(std::move(w));
}

std::vector<std::string> weights_to_strings(const LengthFunction& lambda) {
  std::vector<std::string> out;
  for (const auto& w : lambda.weights()) out.push_back(w.to_string());
  return out;
}

json measure_to_json(const MeasureValue& m) {
  json j = json::array();
  for (const auto& v : m.values) j.push_back(v.to_string());
  return j;
}

std::vector<Representation> parse_chain_steps(const AlgebraPtr& algebra, const json& j) {
  std::vector<Representation> out;
  for (const auto& s : get<json>(j, "steps")) out.push_back(parse_module(algebra, s));
  if (out.empty()) throw MalformedInput("chain file has no steps");
  return out;
}

namespace {

void flatten(const json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << path << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

std::string to_tsv(const json& j) {
  std::ostringstream os;
  flatten(j, "", os);
  return os.str();
}

}  // namespace grmlab::cli
