#include "hermex/instance.hpp"

namespace hermex {

std::string to_string(Kind k) {
  switch (k) {
    case Kind::pair: return "pair";
    case Kind::linear: return "linear";
    case Kind::linear_psd: return "linear_psd";
    case Kind::partitioned: return "partitioned";
    case Kind::free: return "free";
  }
  return "?";
}

Kind parse_kind(const std::string& s) {
  for (Kind k : {Kind::pair, Kind::linear, Kind::linear_psd, Kind::partitioned, Kind::free})
    if (to_string(k) == s) return k;
  throw InputError("unknown kind '" + s + "' (expected pair, linear, linear_psd, partitioned or free)");
}

const std::vector<std::string>& slot_names(Kind k) {
  static const std::vector<std::string> pair{"A1", "B1", "A2", "B2", "A3", "B3"};
  static const std::vector<std::string> linear{"A1", "B1", "A4", "B4"};
  static const std::vector<std::string> part{"A1", "A2", "B1", "B2"};
  static const std::vector<std::string> free{"A", "B"};
  switch (k) {
    case Kind::pair: return pair;
    case Kind::linear:
    case Kind::linear_psd: return linear;
    case Kind::partitioned: return part;
    case Kind::free: return free;
  }
  return free;
}

template <class T>
const Matrix<T>& Instance<T>::at(const std::string& name) const {
  auto it = mats.find(name);
  if (it == mats.end()) throw InputError("missing matrix '" + name + "' for kind " + to_string(kind));
  return it->second;
}

template <class T>
void Instance<T>::check_slots() const {
  const auto& names = slot_names(kind);
  for (const auto& n : names) at(n);
  for (const auto& [k, v] : mats) {
    (void)v;
    if (std::find(names.begin(), names.end(), k) == names.end()) {
      throw InputError("unexpected matrix '" + k + "' for kind " + to_string(kind));
    }
  }
}

template <class T>
PairInstance<T> Instance<T>::as_pair() const {
  return {Hermitian<T>(at("A1")), Hermitian<T>(at("A2")), Hermitian<T>(at("A3")), at("B1"), at("B2"), at("B3")};
}

template <class T>
LinearInstance<T> Instance<T>::as_linear() const {
  return {Hermitian<T>(at("A1")), at("B1"), at("A4"), at("B4")};
}

template <class T>
PartitionedInstance<T> Instance<T>::as_partitioned() const {
  return {at("A1"), at("A2"), at("B1"), at("B2")};
}

Instance<Complex> to_float(const Instance<Gaussian>& in) {
  Instance<Complex> out;
  out.kind = in.kind;
  for (const auto& [k, v] : in.mats) out.mats.emplace(k, to_float(v));
  return out;
}

template <class T>
KindAnalysis analyze(const Instance<T>& in, const TolerancePolicy& pol) {
  in.check_slots();
  KindAnalysis out;
  auto add = [&](const std::string& name, const ExtremalSummary& s, DecisionReport d) {
    out.objectives.push_back(name);
    out.summaries.push_back(s);
    out.decisions.push_back(std::move(d));
  };
  switch (in.kind) {
    case Kind::free: {
      add("A - B X B*", extremal_free(Hermitian<T>(in.at("A")), in.at("B"), pol), {});
      break;
    }
    case Kind::pair: {
      const auto p = in.as_pair();
      // solution_extremal_pair checks the premise and records it
      Analysis x = solution_extremal_pair(p.b2, p.a2, p.b3, p.a3, pol);
      out.premises = x.premises;
      add("A1 - B1 X B1*", extremal_pair_constrained(p, pol), {});
      add("X", x.summary, std::move(x.decisions));
      break;
    }
    case Kind::linear: {
      const auto l = in.as_linear();
      Analysis a = extremal_linear_constrained(l, pol);
      Analysis x = solution_extremal_linear(l.b4, l.a4, pol);
      out.premises = a.premises;
      add("A1 - B1 X B1*", a.summary, std::move(a.decisions));
      add("X", x.summary, std::move(x.decisions));
      break;
    }
    case Kind::linear_psd: {
      const auto l = in.as_linear();
      Analysis a = extremal_linear_psd_constrained(l, pol);
      const std::size_t n = l.n();
      Analysis x = solution_shift_extremal(l.b4, l.a4, Hermitian<T>::trusted(Matrix<T>(n, n)), true, pol);
      out.premises = a.premises;
      add("A1 - B1 X B1*", a.summary, std::move(a.decisions));
      add("X", x.summary, std::move(x.decisions));
      break;
    }
    case Kind::partitioned: {
      SubmatrixAnalysis<T> s = submatrix_extremal(in.as_partitioned(), pol);
      out.premises = s.premises;
      add("X1", s.x1, std::move(s.decisions));
      add("X3", s.x3, {});
      break;
    }
  }
  return out;
}

template struct Instance<Gaussian>;
template struct Instance<Complex>;
template KindAnalysis analyze<Gaussian>(const Instance<Gaussian>&, const TolerancePolicy&);
template KindAnalysis analyze<Complex>(const Instance<Complex>&, const TolerancePolicy&);

}  // namespace hermex
