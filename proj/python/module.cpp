// Python bindings. Instances and reports cross the boundary as the same JSON
// text the command-line tool reads and writes; small matrices for the kernel
// helpers cross as nested lists.

#include "cli.hpp"
#include "io.hpp"

#include "hermex/kernel.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <sstream>
#include <variant>

namespace py = pybind11;
using namespace hermex;

namespace {

using Entry = std::variant<long, double, std::string, std::complex<double>>;
using Rows = std::vector<std::vector<Entry>>;

bool is_exact(const Rows& rows) {
  for (const auto& r : rows)
    for (const auto& e : r)
      if (std::holds_alternative<double>(e) || std::holds_alternative<std::complex<double>>(e)) return false;
  return true;
}

std::size_t width(const Rows& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != c) throw InputError("ragged matrix: rows differ in length");
  return c;
}

ExactMatrix exact_of(const Rows& rows) {
  ExactMatrix m(rows.size(), width(rows));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const Entry& e = rows[i][j];
      m(i, j) = std::holds_alternative<long>(e) ? Gaussian(std::get<long>(e)) : Gaussian::parse(std::get<std::string>(e));
    }
  return m;
}

FloatMatrix float_of(const Rows& rows) {
  FloatMatrix m(rows.size(), width(rows));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const Entry& e = rows[i][j];
      if (std::holds_alternative<std::string>(e)) throw InputError("mixing rational strings with floats");
      if (std::holds_alternative<long>(e)) {
        m(i, j) = Complex(static_cast<double>(std::get<long>(e)), 0.0);
      } else if (std::holds_alternative<double>(e)) {
        m(i, j) = Complex(std::get<double>(e), 0.0);
      } else {
        m(i, j) = std::get<std::complex<double>>(e);
      }
    }
  return m;
}

py::list rows_of(const ExactMatrix& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list r;
    for (std::size_t j = 0; j < m.cols(); ++j) r.append(m(i, j).str());
    out.append(r);
  }
  return out;
}

py::list rows_of(const FloatMatrix& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list r;
    for (std::size_t j = 0; j < m.cols(); ++j) r.append(m(i, j));
    out.append(r);
  }
  return out;
}

TolerancePolicy policy(std::optional<double> tol) {
  TolerancePolicy p;
  if (tol) p.rank_tol = p.inertia_tol = *tol;
  return p;
}

cli::Options options(const std::string& backend, std::optional<double> tol) { return {backend, tol}; }

py::tuple result(const cli::Output& o) { return py::make_tuple(o.code, o.doc.dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rank and inertia extremes of Hermitian matrix expressions";

  static py::exception<Error> base(m, "HermexError", PyExc_RuntimeError);
  static py::exception<InputError> input(m, "InputError", base.ptr());
  static py::exception<PremiseViolated> premise(m, "PremiseViolated", base.ptr());
  static py::exception<InternalInconsistency> internal(m, "InternalInconsistency", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      py::set_error(input, e.what());
    } catch (const PremiseViolated& e) {
      py::set_error(premise, e.what());
    } catch (const InternalInconsistency& e) {
      py::set_error(internal, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def(
      "rank",
      [](const Rows& a, std::optional<double> tol) -> std::size_t {
        return is_exact(a) ? rank(exact_of(a)) : rank(float_of(a), policy(tol));
      },
      py::arg("a"), py::arg("tol") = py::none(), "Rank; exact for ints / rational strings, else float.");
  m.def(
      "inertia",
      [](const Rows& a, std::optional<double> tol) {
        const Inertia in = is_exact(a) ? inertia(Hermitian<Gaussian>(exact_of(a)))
                                       : inertia(Hermitian<Complex>(float_of(a), policy(tol).inertia_tol), policy(tol));
        return py::make_tuple(in.plus, in.minus, in.zero);
      },
      py::arg("a"), py::arg("tol") = py::none(), "(positive, negative, zero) eigenvalue counts of a Hermitian matrix.");
  m.def(
      "pinv",
      [](const Rows& a, std::optional<double> tol) -> py::list {
        return is_exact(a) ? rows_of(pinv(exact_of(a))) : rows_of(pinv(float_of(a), policy(tol)));
      },
      py::arg("a"), py::arg("tol") = py::none(), "Moore-Penrose inverse.");

  m.def(
      "analyze",
      [](const std::string& inst, const std::string& backend, std::optional<double> tol) {
        return result(cli::analyze(io::parse_instance(inst), options(backend, tol)));
      },
      py::arg("instance"), py::arg("backend") = "", py::arg("tol") = py::none());
  m.def(
      "solve",
      [](const std::string& inst, std::uint64_t seed, const std::string& backend, std::optional<double> tol) {
        return result(cli::solve(io::parse_instance(inst), options(backend, tol), seed));
      },
      py::arg("instance"), py::arg("seed") = 1, py::arg("backend") = "", py::arg("tol") = py::none());
  m.def(
      "check_triple",
      [](const std::string& inst, const std::string& backend, std::optional<double> tol) {
        return result(cli::check_triple(io::parse_instance(inst), options(backend, tol)));
      },
      py::arg("instance"), py::arg("backend") = "", py::arg("tol") = py::none());
  m.def(
      "verify",
      [](const std::string& inst, std::size_t trials, long grid, std::uint64_t seed,
         std::optional<std::string> report) {
        cli::VerifyOptions v{trials, grid, seed, std::nullopt};
        if (report) {
          try {
            v.report = io::report_from_json(io::json::parse(*report));
          } catch (const io::json::exception& e) {
            throw InputError(std::string("report: ") + e.what());
          }
        }
        return result(cli::verify(io::parse_instance(inst), {}, v));
      },
      py::arg("instance"), py::arg("trials") = 1000, py::arg("grid") = 2, py::arg("seed") = 1,
      py::arg("report") = py::none());
  m.def(
      "gen",
      [](const std::string& kind, const std::string& triple, std::size_t n, std::uint64_t seed) {
        const GeneratedInstance g = cli::generate(kind, triple, n, seed);
        return py::make_tuple(io::to_json(g.instance).dump(), rows_of(g.planted));
      },
      py::arg("kind") = "", py::arg("triple") = "", py::arg("n") = 2, py::arg("seed") = 1);
  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Same as the command-line tool; returns (exit code, stdout, stderr).");
}
