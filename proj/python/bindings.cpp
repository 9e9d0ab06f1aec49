#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "unisample/counting.hpp"
#include "unisample/dihedral.hpp"
#include "unisample/errors.hpp"
#include "unisample/fourier.hpp"
#include "unisample/uncertainty.hpp"
#include "unisample/universality.hpp"

namespace py = pybind11;
using namespace unisample;

namespace {

py::int_ to_python(const BigInt& value) {
  const auto text = to_decimal(value);
  return py::reinterpret_steal<py::int_>(PyLong_FromString(text.c_str(), nullptr, 10));
}

PrimePowerModulus modulus_of(const IndexSet& set, const std::optional<PrimePowerModulus>& modulus) {
  return modulus ? *modulus : PrimePowerModulus::from_size(set.n());
}

py::array_t<Complex> to_array(const Signal& s) {
  py::array_t<Complex> out(static_cast<py::ssize_t>(s.n()));
  auto view = out.mutable_unchecked<1>();
  for (Index i = 0; i < s.n(); ++i) view(i) = s[i];
  return out;
}

Signal to_signal(py::array_t<Complex, py::array::c_style | py::array::forcecast> values) {
  if (values.ndim() != 1) throw std::invalid_argument("signal must be one-dimensional");
  const auto* data = values.data();
  return Signal(static_cast<Index>(values.shape(0)), std::vector<Complex>(data, data + values.shape(0)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Universal sampling sets for N = p^M";

  py::register_exception<NotUniversal>(m, "NotUniversal", PyExc_ValueError);
  py::register_exception<Infeasible>(m, "Infeasible", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<SingularSystem>(m, "SingularSystem", PyExc_ArithmeticError);

  py::class_<PrimePowerModulus>(m, "PrimePowerModulus")
      .def(py::init<Index, int>(), py::arg("p"), py::arg("M"))
      .def_static("from_size", &PrimePowerModulus::from_size, py::arg("n"))
      .def_property_readonly("prime", &PrimePowerModulus::prime)
      .def_property_readonly("exponent", &PrimePowerModulus::exponent)
      .def_property_readonly("size", &PrimePowerModulus::size)
      .def("__repr__", [](const PrimePowerModulus& mod) { return "PrimePowerModulus(" + mod.to_string() + ")"; });

  py::class_<IndexSet>(m, "IndexSet")
      .def(py::init<Index, std::vector<Index>>(), py::arg("n"), py::arg("indices"))
      .def_property_readonly("n", &IndexSet::n)
      .def_property_readonly("indices", [](const IndexSet& s) { return std::vector<Index>(s.begin(), s.end()); })
      .def("complement", &IndexSet::complement)
      .def("__len__", &IndexSet::size)
      .def("__contains__", &IndexSet::contains)
      .def("__iter__", [](const IndexSet& s) { return py::make_iterator(s.begin(), s.end()); }, py::keep_alive<0, 1>())
      .def(py::self == py::self)
      .def("__hash__", [](const IndexSet& s) { return py::hash(py::make_tuple(s.n(), s.to_string())); })
      .def("__repr__", [](const IndexSet& s) { return "IndexSet(" + std::to_string(s.n()) + ", " + s.to_string() + ")"; });

  py::class_<UniversalityVerdict>(m, "UniversalityVerdict")
      .def_readonly("universal", &UniversalityVerdict::universal)
      .def_property_readonly("witness", [](const UniversalityVerdict& v) -> py::object {
        if (!v.witness) return py::none();
        return py::make_tuple(v.witness->level, v.witness->a, v.witness->b);
      })
      .def("__bool__", [](const UniversalityVerdict& v) { return v.universal; });

  py::class_<UniversalSubset>(m, "UniversalSubset")
      .def_readonly("example", &UniversalSubset::example)
      .def_property_readonly("size", &UniversalSubset::size)
      .def_property_readonly("levels", [](const UniversalSubset& s) { return s.decomposition.levels(); })
      .def_property_readonly("pieces", [](const UniversalSubset& s) {
        py::list out;
        for (const auto& piece : s.decomposition.pieces) out.append(py::make_tuple(piece.level, piece.elements));
        return out;
      });

  py::class_<MinimalUniversal>(m, "MinimalUniversal")
      .def_readonly("size", &MinimalUniversal::size)
      .def_readonly("example", &MinimalUniversal::example);

  m.def("is_universal",
        [](const IndexSet& set, std::optional<PrimePowerModulus> mod) { return is_universal(set, modulus_of(set, mod)); },
        py::arg("set"), py::arg("modulus") = py::none());
  m.def("maximal_universal",
        [](const IndexSet& set, std::optional<PrimePowerModulus> mod) {
          return maximal_universal(set, modulus_of(set, mod));
        },
        py::arg("set"), py::arg("modulus") = py::none());
  m.def("universal_subset_of_size",
        [](const IndexSet& set, Index d, std::optional<PrimePowerModulus> mod) {
          return universal_subset_of_size(set, modulus_of(set, mod), d);
        },
        py::arg("set"), py::arg("d"), py::arg("modulus") = py::none());
  m.def("minimal_universal",
        [](const IndexSet& set, std::optional<PrimePowerModulus> mod) {
          return minimal_universal(set, modulus_of(set, mod));
        },
        py::arg("set"), py::arg("modulus") = py::none());
  m.def("decompose",
        [](const IndexSet& set, std::optional<PrimePowerModulus> mod) {
          py::list out;
          for (const auto& piece : decompose(set, modulus_of(set, mod)).pieces) {
            out.append(py::make_tuple(piece.level, piece.elements));
          }
          return out;
        },
        py::arg("set"), py::arg("modulus") = py::none());

  m.def("count_universal",
        [](Index d, const PrimePowerModulus& mod) { return to_python(count_universal(d, mod)); },
        py::arg("d"), py::arg("modulus"));
  m.def("count_by_brute_force",
        [](Index d, const PrimePowerModulus& mod, std::uint64_t budget, unsigned threads) {
          BigInt c;
          {
            py::gil_scoped_release release;
            c = count_by_brute_force(d, mod, budget, threads);
          }
          return to_python(c);
        },
        py::arg("d"), py::arg("modulus"), py::arg("budget") = kDefaultBudget, py::arg("threads") = 1);
  m.def("entropy_curve",
        [](Index p, int exponent, int resolution) {
          py::list out;
          for (const auto& pt : entropy_curve(p, exponent, resolution)) {
            out.append(py::make_tuple(pt.alpha, pt.normalized_log_count));
          }
          return out;
        },
        py::arg("p"), py::arg("M"), py::arg("resolution") = 65);
  m.def("bracelet_count", [](Index n, Index d) { return to_python(bracelet_count(n, d)); }, py::arg("n"),
        py::arg("d"));
  m.def("bracelet_canonical", [](const IndexSet& set) { return bracelet_canonical(set).canonical; },
        py::arg("set"));

  py::class_<RankReport>(m, "RankReport")
      .def_readonly("numerical_rank", &RankReport::numerical_rank)
      .def_readonly("smallest_singular_value", &RankReport::smallest_singular_value)
      .def_readonly("largest_singular_value", &RankReport::largest_singular_value)
      .def_readonly("full_rank", &RankReport::full_rank)
      .def_property_readonly("condition_number", &RankReport::condition_number);

  py::class_<ConditionReport>(m, "ConditionReport")
      .def_readonly("condition_number", &ConditionReport::condition_number)
      .def_readonly("lower_bound", &ConditionReport::lower_bound);

  m.def("dft", [](py::array_t<Complex, py::array::c_style | py::array::forcecast> f) { return to_array(dft(to_signal(f))); },
        py::arg("f"));
  m.def("is_invertible", &is_invertible, py::arg("rows"), py::arg("cols"), py::arg("n"),
        py::arg("tolerance") = kDefaultRankTolerance);
  m.def("brute_force_universal",
        [](const IndexSet& set, double tolerance, std::uint64_t budget, unsigned threads) {
          py::gil_scoped_release release;
          return brute_force_universal(set, tolerance, budget, threads);
        },
        py::arg("set"), py::arg("tolerance") = kDefaultRankTolerance, py::arg("budget") = kDefaultBudget,
        py::arg("threads") = 1);
  m.def("interpolate",
        [](const std::vector<Complex>& samples, const IndexSet& sample_set, const IndexSet& support, double tolerance) {
          const auto rec = interpolate(samples, sample_set, support, tolerance);
          return py::make_tuple(to_array(rec.signal), rec.ill_conditioned, rec.rank);
        },
        py::arg("samples"), py::arg("sample_set"), py::arg("support"), py::arg("tolerance") = kDefaultRankTolerance,
        "Returns (signal, ill_conditioned, rank_report).");
  m.def("condition_report", &condition_report, py::arg("sample_set"), py::arg("support"));

  py::class_<BoundCheck>(m, "BoundCheck")
      .def_readonly("name", &BoundCheck::name)
      .def_readonly("lhs", &BoundCheck::lhs)
      .def_readonly("relation", &BoundCheck::relation)
      .def_readonly("rhs", &BoundCheck::rhs)
      .def_readonly("passed", &BoundCheck::pass);

  py::class_<UncertaintyReport>(m, "UncertaintyReport")
      .def_property_readonly("support", [](const UncertaintyReport& r) { return r.time.support; })
      .def_property_readonly("spectrum_support", [](const UncertaintyReport& r) { return r.frequency.support; })
      .def_readonly("checks", &UncertaintyReport::checks)
      .def("all_pass", &UncertaintyReport::all_pass);

  m.def("verify_uncertainty",
        [](py::array_t<Complex, py::array::c_style | py::array::forcecast> f, std::optional<double> tolerance) {
          const auto signal = to_signal(f);
          return verify_uncertainty(signal, PrimePowerModulus::from_size(signal.n()), tolerance);
        },
        py::arg("signal"), py::arg("tolerance") = py::none());

  py::class_<RandomExperimentSummary>(m, "RandomExperimentSummary")
      .def_readonly("trials", &RandomExperimentSummary::trials)
      .def_readonly("successes", &RandomExperimentSummary::successes)
      .def_readonly("empirical_probability", &RandomExperimentSummary::empirical_probability)
      .def_readonly("theoretical_bound", &RandomExperimentSummary::theoretical_bound)
      .def_readonly("slack", &RandomExperimentSummary::slack)
      .def_readonly("passed", &RandomExperimentSummary::passed);

  m.def("random_maximal_experiment",
        [](const PrimePowerModulus& mod, Index s, Index d, double delta, std::uint64_t trials, std::uint64_t seed,
           unsigned threads) {
          py::gil_scoped_release release;
          return random_maximal_experiment(mod, s, d, delta, trials, seed, threads);
        },
        py::arg("modulus"), py::arg("s"), py::arg("d"), py::arg("delta"), py::arg("trials"), py::arg("seed"),
        py::arg("threads") = 1);
  m.def("largest_admissible_d", &largest_admissible_d, py::arg("n"), py::arg("s"), py::arg("delta"));

  py::class_<SumsetReport>(m, "SumsetReport")
      .def_readonly("sum", &SumsetReport::sum)
      .def_readonly("theorem_applies", &SumsetReport::theorem_applies)
      .def_readonly("theorem_bound", &SumsetReport::theorem_bound)
      .def_readonly("theorem_pass", &SumsetReport::theorem_pass)
      .def_readonly("corollary_bound", &SumsetReport::corollary_bound)
      .def_readonly("corollary_pass", &SumsetReport::corollary_pass);

  m.def("sumset", &sumset, py::arg("x"), py::arg("y"));
  m.def("cauchy_davenport_check",
        [](const IndexSet& x, const IndexSet& y) {
          return cauchy_davenport_check(x, y, PrimePowerModulus::from_size(x.n()));
        },
        py::arg("x"), py::arg("y"));
}
