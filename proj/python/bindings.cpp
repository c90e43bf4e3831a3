#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "scs/bounds.hpp"
#include "scs/cfr.hpp"
#include "scs/constructions.hpp"
#include "scs/io.hpp"
#include "scs/spectral.hpp"

namespace py = pybind11;
using namespace scs;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexSeq to_seq(const ComplexArray& a, Domain domain = Domain::time) {
  if (a.ndim() != 1) throw std::invalid_argument("expected a 1-D array");
  return ComplexSeq(domain, std::vector<Complex>(a.data(), a.data() + a.size()));
}

ComplexArray to_array(std::span<const Complex> v) {
  ComplexArray out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

py::dict summary_dict(const CorrelationSummary& s) {
  py::dict d;
  d["theta_a"] = s.theta_a;
  d["theta_c"] = s.theta_c;
  d["theta_max"] = s.theta_max;
  d["window"] = s.window;
  d["zcz_width"] = s.zcz_width;
  return d;
}

constructions::ComplexMatrix to_matrix(const py::array_t<Complex, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2) throw std::invalid_argument("H must be a 2-D array");
  constructions::ComplexMatrix h;
  h.rows = static_cast<int>(a.shape(0));
  h.cols = static_cast<int>(a.shape(1));
  h.data.assign(a.data(), a.data() + a.size());
  return h;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectrally constrained sequence families from circular Florentine rectangles";

  py::class_<Cfr>(m, "Cfr")
      .def(py::init<std::vector<Permutation>>(), py::arg("rows"))
      .def_property_readonly("order", &Cfr::order)
      .def_property_readonly("row_count", &Cfr::row_count)
      .def_property_readonly("rows", &Cfr::rows)
      .def("fingerprint", [](const Cfr& c) { return fingerprint(c); })
      .def("to_text", [](const Cfr& c) { return to_text(c); })
      .def_static("from_text", [](const std::string& text) {
        std::istringstream in(text);
        return read_cfr(in);
      })
      .def("__eq__", [](const Cfr& a, const Cfr& b) { return a == b; })
      .def("__repr__", [](const Cfr& c) {
        return "Cfr(" + std::to_string(c.row_count()) + "x" + std::to_string(c.order()) + ")";
      });

  m.def("cfr_from_prime", &cfr_from_prime, py::arg("p"));
  m.def("verify_cfr", [](const std::vector<Permutation>& rows) -> py::object {
    const auto v = verify_cfr(rows);
    if (v.ok()) return py::none();
    py::dict d;
    d["kind"] = v.violation->kind == CfrViolation::Kind::not_permutation ? "not_permutation" : "repeated_pair";
    d["rows"] = py::make_tuple(v.violation->row_i, v.violation->row_j);
    d["positions"] = py::make_tuple(v.violation->x, v.violation->y);
    d["step"] = v.violation->step;
    return std::move(d);
  }, py::arg("rows"), "None when the rows form a CFR, otherwise one violating tuple.");
  m.def("search_cfr", [](int order, int rows, std::uint64_t budget) {
    SearchResult r;
    {
      py::gil_scoped_release release;
      r = search_cfr(order, rows, budget);
    }
    return py::make_tuple(std::string(to_string(r.status)), r.cfr ? py::cast(*r.cfr) : py::none(), r.nodes);
  }, py::arg("order"), py::arg("rows"), py::arg("budget") = 1'000'000);
  m.def("check_lemma4", &check_lemma4, py::arg("cfr"), py::arg("i"), py::arg("r"), py::arg("shift"));
  m.def("inverse_rows", [](const Cfr& c) { return InverseRows(c).rows(); });
  m.def("inverse_difference_is_permutation",
        [](const Cfr& c, int i, int r) { return InverseRows(c).difference_is_permutation(i, r); });

  py::class_<ScsFamily>(m, "Family")
      .def_property_readonly("length", &ScsFamily::length)
      .def_property_readonly("set_count", &ScsFamily::set_count)
      .def_property_readonly("set_size", &ScsFamily::set_size)
      .def_property_readonly("omega", [](const ScsFamily& f) {
        auto o = f.constraint().forbidden();
        return std::vector<std::size_t>(o.begin(), o.end());
      })
      .def_property_readonly("admissible_power", [](const ScsFamily& f) { return f.constraint().admissible_power(); })
      .def_property_readonly("alphabet_order", &ScsFamily::alphabet_order)
      .def_property_readonly("sets", [](const ScsFamily& f) {
        py::list sets;
        for (const auto& s : f.sets()) {
          py::list members;
          for (const auto& q : s) members.append(to_array(q.values()));
          sets.append(members);
        }
        return sets;
      })
      .def("to_json", [](const ScsFamily& f) {
        std::ostringstream os;
        io::write_family(os, f);
        return os.str();
      })
      .def_static("from_json", [](const std::string& text) {
        std::istringstream in(text);
        return io::read_family(in);
      });

  m.def("construction1", &constructions::construction1, py::arg("cfr"));
  m.def("construction2", &constructions::construction2, py::arg("cfr"), py::arg("s0"));
  m.def("construction3", &constructions::construction3, py::arg("cfr"), py::arg("insert_set"));
  m.def("construction4",
        [](const Cfr& cfr, std::vector<int> insert, std::optional<int> k, std::optional<ComplexArray> h) {
          if (h) return constructions::construction4(cfr, to_matrix(*h), std::move(insert), k, "custom");
          return constructions::construction4(cfr, std::move(insert), k);
        },
        py::arg("cfr"), py::arg("insert_set"), py::arg("set_count") = py::none(), py::arg("H") = py::none());

  m.def("dft", [](const ComplexArray& a) { return to_array(spectral::dft(to_seq(a)).values()); });
  m.def("idft", [](const ComplexArray& a) {
    return to_array(spectral::idft(to_seq(a, Domain::frequency)).values());
  });
  m.def("pccf", [](const ComplexArray& c, const ComplexArray& d) {
    return to_array(spectral::pccf(to_seq(c), to_seq(d)).values());
  });
  m.def("pccf_fast", [](const ComplexArray& c, const ComplexArray& d) {
    return to_array(spectral::pccf_fast(to_seq(c), to_seq(d)).values());
  });
  m.def("summarize", [](const ScsFamily& f, std::optional<std::size_t> window, double tol) {
    const auto s = spectral::summarize(f, window, tol);
    py::dict d;
    py::list sets;
    for (const auto& c : s.sets) sets.append(summary_dict(c));
    d["sets"] = sets;
    d["theta_a"] = s.theta_a;
    d["theta_c"] = s.theta_c;
    d["interset_min"] = s.interset_min;
    d["theta_max"] = s.theta_max;
    d["window"] = s.window;
    d["has_interset"] = s.has_interset;
    return d;
  }, py::arg("family"), py::arg("window") = py::none(), py::arg("tol") = kZeroTol);
  m.def("check_spectrum", [](const ComplexArray& seq, std::vector<std::size_t> omega, double tol) {
    const auto s = to_seq(seq);
    const auto r = spectral::check_spectrum(s, SpectralConstraint(s.size(), std::move(omega)), tol);
    py::dict d;
    d["power"] = r.power;
    d["admissible_power"] = r.admissible_power;
    d["max_leakage"] = r.max_leakage;
    d["max_deviation"] = r.max_deviation;
    d["pass"] = r.pass;
    return d;
  }, py::arg("seq"), py::arg("omega"), py::arg("tol") = kZeroTol);

  m.def("liu_bound", &bounds::liu_bound, py::arg("M"), py::arg("L"), py::arg("n"));
  m.def("improved_bounds", [](int L, int n) {
    const auto b = bounds::improved_bounds(L, n);
    return py::make_tuple(b.theta_a_lb, b.theta_c_lb);
  }, py::arg("L"), py::arg("n"));
  m.def("interset_bound", &bounds::interset_bound, py::arg("L"), py::arg("n"));
  m.def("optimality_factor", &bounds::optimality_factor, py::arg("theta_max"), py::arg("M"), py::arg("L"),
        py::arg("n"));
  m.def("evaluate_bounds_json",
        [](int L, int n, int M, int K, std::optional<int> window, std::optional<double> theta_a,
           std::optional<double> theta_c, std::optional<double> theta_max, std::optional<double> interset,
           std::optional<int> zcz_width) {
          bounds::BoundsInput in{L, n, M, K, window, theta_a, theta_c, theta_max, interset, zcz_width};
          return io::bounds_report_json(bounds::evaluate(in));
        },
        py::arg("L"), py::arg("n"), py::arg("M") = 1, py::arg("K") = 1, py::arg("window") = py::none(),
        py::arg("theta_a") = py::none(), py::arg("theta_c") = py::none(), py::arg("theta_max") = py::none(),
        py::arg("interset") = py::none(), py::arg("zcz_width") = py::none());
}
