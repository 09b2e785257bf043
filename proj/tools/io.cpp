#include "io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace hermex::io {

namespace {

// line/column of a byte offset, for syntax errors
std::string position(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

std::size_t dim_of(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

enum class ScalarKind { exact, floating };

ScalarKind kind_of(const json& v, const std::string& where) {
  if (v.is_string()) return ScalarKind::exact;
  if (v.is_number()) return ScalarKind::floating;
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) return ScalarKind::floating;
  throw InputError(where + ": scalar must be a string \"a/b+c/di\", a number, or [re, im]");
}

Gaussian exact_scalar(const json& v, const std::string& where) {
  try {
    return Gaussian::parse(v.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

Complex float_scalar(const json& v, const std::string& where) {
  const double re = v.is_array() ? v[0].get<double>() : v.get<double>();
  const double im = v.is_array() ? v[1].get<double>() : 0.0;
  if (!std::isfinite(re) || !std::isfinite(im)) throw InputError(where + ": non-finite value");
  return {re, im};
}

template <class T, class F>
Matrix<T> read_matrix(const json& j, const std::string& where, F&& scalar) {
  const std::size_t r = dim_of(field(j, "rows", where), where + ".rows");
  const std::size_t c = dim_of(field(j, "cols", where), where + ".cols");
  const json& e = field(j, "entries", where);
  if (!e.is_array() || e.size() != r) throw InputError(where + ".entries: expected " + std::to_string(r) + " rows");
  Matrix<T> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const std::string wi = where + ".entries[" + std::to_string(i) + "]";
    if (!e[i].is_array() || e[i].size() != c) throw InputError(wi + ": expected " + std::to_string(c) + " entries");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = scalar(e[i][k], wi + "[" + std::to_string(k) + "]");
  }
  return m;
}

json float_scalar_json(const Complex& z) {
  if (z.imag() == 0.0) return z.real();
  return json::array({z.real(), z.imag()});
}

json rel_json(Relation r) { return r == Relation::eq ? "=" : r == Relation::le ? "<=" : ">="; }

Relation rel_from(const json& j, const std::string& where) {
  const std::string s = j.is_string() ? j.get<std::string>() : "";
  if (s == "=") return Relation::eq;
  if (s == "<=") return Relation::le;
  if (s == ">=") return Relation::ge;
  throw InputError(where + ": relation must be =, <= or >=");
}

long long_of(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<long>();
}

std::string string_of(const json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a string");
  return j.get<std::string>();
}

bool bool_of(const json& j, const std::string& where) {
  if (!j.is_boolean()) throw InputError(where + ": expected true or false");
  return j.get<bool>();
}

std::vector<Condition> conditions_from(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  std::vector<Condition> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(condition_from_json(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

json conditions_json(const std::vector<Condition>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(to_json(c));
  return a;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON at " + position(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
}

}  // namespace

LoadedInstance parse_instance(const std::string& text) {
  const json j = parse_json(text);
  LoadedInstance out;
  const Kind kind = parse_kind(string_of(field(j, "kind", "instance"), "instance.kind"));
  const json& mats = field(j, "matrices", "instance");
  if (!mats.is_object()) throw InputError("instance.matrices: expected an object");
  // backend from the first scalar found; every other must agree
  std::optional<ScalarKind> backend;
  for (const auto& [name, m] : mats.items()) {
    const std::string where = "matrices." + name;
    const json& e = field(m, "entries", where);
    if (!e.is_array()) continue;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i].is_array()) continue;
      for (std::size_t k = 0; k < e[i].size(); ++k) {
        const std::string wk = where + ".entries[" + std::to_string(i) + "][" + std::to_string(k) + "]";
        const ScalarKind sk = kind_of(e[i][k], wk);
        if (backend && *backend != sk) {
          throw InputError(wk + ": mixes exact (string) and float (number) scalars; pick one backend per file");
        }
        backend = sk;
      }
    }
  }
  out.exact = !backend || *backend == ScalarKind::exact;
  out.ex.kind = out.fl.kind = kind;
  for (const auto& [name, m] : mats.items()) {
    const std::string where = "matrices." + name;
    if (out.exact) {
      out.ex.mats.emplace(name, read_matrix<Gaussian>(m, where, exact_scalar));
    } else {
      out.fl.mats.emplace(name, read_matrix<Complex>(m, where, float_scalar));
    }
  }
  try {
    if (out.exact) {
      out.ex.check_slots();
    } else {
      out.fl.check_slots();
    }
  } catch (const InputError& e) {
    throw InputError(std::string("instance.matrices: ") + e.what());
  }
  return out;
}

LoadedInstance read_instance_file(const std::string& path) {
  try {
    return parse_instance(slurp(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

json to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(m(i, k).str());
    rows.push_back(std::move(r));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

json to_json(const FloatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(float_scalar_json(m(i, k)));
    rows.push_back(std::move(r));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

template <class T>
json instance_json(const Instance<T>& in) {
  json mats = json::object();
  for (const auto& name : slot_names(in.kind)) mats[name] = to_json(in.at(name));
  return json{{"kind", to_string(in.kind)}, {"matrices", std::move(mats)}};
}

json to_json(const Instance<Gaussian>& in) { return instance_json(in); }
json to_json(const Instance<Complex>& in) { return instance_json(in); }

json to_json(const ExtremalSummary& s) {
  json j = json::object();
  for (std::size_t k = 0; k < 6; ++k) j[ExtremalSummary::field_names[k]] = s.field(k);
  return j;
}

ExtremalSummary summary_from_json(const json& j, const std::string& where) {
  ExtremalSummary s;
  for (std::size_t k = 0; k < 6; ++k) {
    const std::string f = ExtremalSummary::field_names[k];
    s.field(k) = long_of(field(j, f, where), where + "." + f);
  }
  return s;
}

json to_json(const Condition& c) {
  return json{{"text", c.text}, {"lhs", c.lhs}, {"rel", rel_json(c.rel)}, {"rhs", c.rhs}, {"holds", c.holds()}};
}

Condition condition_from_json(const json& j, const std::string& where) {
  Condition c;
  c.text = string_of(field(j, "text", where), where + ".text");
  c.lhs = long_of(field(j, "lhs", where), where + ".lhs");
  c.rhs = long_of(field(j, "rhs", where), where + ".rhs");
  c.rel = rel_from(field(j, "rel", where), where + ".rel");
  return c;
}

json to_json(const Decision& d) {
  json alts = json::array();
  for (const auto& g : d.alternatives) alts.push_back(conditions_json(g));
  return json{{"id", d.id},
              {"question", d.question},
              {"verdict", d.verdict},
              {"condition", conditions_json(d.criterion)},
              {"alternatives", std::move(alts)},
              {"from_summary", to_json(d.from_summary)}};
}

Decision decision_from_json(const json& j, const std::string& where) {
  Decision d;
  d.id = string_of(field(j, "id", where), where + ".id");
  d.question = string_of(field(j, "question", where), where + ".question");
  d.verdict = bool_of(field(j, "verdict", where), where + ".verdict");
  d.criterion = conditions_from(field(j, "condition", where), where + ".condition");
  const json& alts = field(j, "alternatives", where);
  if (!alts.is_array()) throw InputError(where + ".alternatives: expected an array");
  for (std::size_t k = 0; k < alts.size(); ++k)
    d.alternatives.push_back(conditions_from(alts[k], where + ".alternatives[" + std::to_string(k) + "]"));
  d.from_summary = condition_from_json(field(j, "from_summary", where), where + ".from_summary");
  return d;
}

namespace {

json objective_json(const ObjectiveReport& o) {
  json ds = json::array();
  for (const auto& d : o.decisions) ds.push_back(to_json(d));
  return json{{"objective", o.name}, {"summary", to_json(o.summary)}, {"decisions", std::move(ds)}};
}

}  // namespace

json to_json(const Report& r) {
  json j = json::object();
  j["kind"] = r.kind;
  j["backend"] = r.backend;
  j["tolerances"] = r.backend == "float" ? json{{"rank", r.rank_tol}, {"inertia", r.inertia_tol}} : json(nullptr);
  j["status"] = r.status;
  if (!r.message.empty()) j["message"] = r.message;
  if (!r.objectives.empty()) {
    const json first = objective_json(r.objectives.front());
    j["summary"] = first["summary"];
    j["decisions"] = first["decisions"];
  }
  json objs = json::array();
  for (const auto& o : r.objectives) objs.push_back(objective_json(o));
  j["objectives"] = std::move(objs);
  j["premises"] = conditions_json(r.premises);
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.kind = string_of(field(j, "kind", "report"), "report.kind");
  r.backend = string_of(field(j, "backend", "report"), "report.backend");
  if (r.backend != "exact" && r.backend != "float") throw InputError("report.backend: expected exact or float");
  const json& tol = field(j, "tolerances", "report");
  if (!tol.is_null()) {
    r.rank_tol = field(tol, "rank", "report.tolerances").get<double>();
    r.inertia_tol = field(tol, "inertia", "report.tolerances").get<double>();
  }
  r.status = string_of(field(j, "status", "report"), "report.status");
  if (j.contains("message")) r.message = string_of(j["message"], "report.message");
  const json& objs = field(j, "objectives", "report");
  if (!objs.is_array()) throw InputError("report.objectives: expected an array");
  for (std::size_t k = 0; k < objs.size(); ++k) {
    const std::string w = "report.objectives[" + std::to_string(k) + "]";
    ObjectiveReport o;
    o.name = string_of(field(objs[k], "objective", w), w + ".objective");
    o.summary = summary_from_json(field(objs[k], "summary", w), w + ".summary");
    const json& ds = field(objs[k], "decisions", w);
    if (!ds.is_array()) throw InputError(w + ".decisions: expected an array");
    for (std::size_t i = 0; i < ds.size(); ++i)
      o.decisions.push_back(decision_from_json(ds[i], w + ".decisions[" + std::to_string(i) + "]"));
    r.objectives.push_back(std::move(o));
  }
  // the mirrored top-level summary wins when edited by hand
  if (!r.objectives.empty() && j.contains("summary"))
    r.objectives.front().summary = summary_from_json(j["summary"], "report.summary");
  r.premises = conditions_from(field(j, "premises", "report"), "report.premises");
  return r;
}

Report read_report_file(const std::string& path) {
  try {
    return report_from_json(parse_json(slurp(path)));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

namespace {

bool is_scalar_row(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& v : j)
    if (v.is_structured() && !(v.is_array() && v.size() == 2 && v[0].is_number())) return false;
  return true;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render(const json& j, int depth, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !(v.is_array() && (v.empty() || is_scalar_row(v)))) {
        os << pad << k << ":\n";
        render(v, depth + 1, os);
      } else if (v.is_array()) {
        os << pad << k << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
        os << "]\n";
      } else {
        os << pad << k << ": " << scalar_text(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      const json& v = j[i];
      if (is_scalar_row(v)) {
        os << pad << "- [";
        for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << scalar_text(v[k]);
        os << "]\n";
      } else if (v.is_structured()) {
        os << pad << "-\n";
        render(v, depth + 1, os);
      } else {
        os << pad << "- " << scalar_text(v) << "\n";
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_text(const json& j) {
  std::ostringstream os;
  render(j, 0, os);
  return os.str();
}

}  // namespace hermex::io
