// SPDX-License-Identifier: Apache-2.0
//
// gdof: exact GDoF region calculator for the two-user MIMO interference channel
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gdof/closed_forms.hpp"
#include "gdof/core_math.hpp"
#include "gdof/error.hpp"
#include "gdof/finite_snr.hpp"
#include "gdof/hk_scheme.hpp"
#include "gdof/rational.hpp"
#include "gdof/region.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Rational <-> fractions.Fraction. Accepts int, Fraction and strings.
template <>
struct type_caster<gdof::Rational> {
  PYBIND11_TYPE_CASTER(gdof::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (PyFloat_Check(src.ptr())) return false;
    if (py::isinstance<py::str>(src)) {
      try {
        value = gdof::parse_rational(src.cast<std::string>());
      } catch (const std::invalid_argument&) {
        return false;
      }
      return true;
    }
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
    try {
      value = gdof::Rational(src.attr("numerator").cast<std::int64_t>(), src.attr("denominator").cast<std::int64_t>());
    } catch (const std::exception&) {
      return false;
    }
    return true;
  }

  static handle cast(const gdof::Rational& r, return_value_policy, handle) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.numerator(), r.denominator()).release();
  }
};

template <>
struct type_caster<gdof::Point2> {
  PYBIND11_TYPE_CASTER(gdof::Point2, const_name("tuple[fractions.Fraction, fractions.Fraction]"));

  bool load(handle src, bool convert) {
    if (!py::isinstance<py::sequence>(src) || py::isinstance<py::str>(src) || py::len(src) != 2) return false;
    auto seq = py::reinterpret_borrow<py::sequence>(src);
    make_caster<gdof::Rational> x, y;
    if (!x.load(seq[0], convert) || !y.load(seq[1], convert)) return false;
    value = {cast_op<gdof::Rational>(x), cast_op<gdof::Rational>(y)};
    return true;
  }

  static handle cast(const gdof::Point2& p, return_value_policy, handle) {
    return py::make_tuple(p.x, p.y).release();
  }
};

template <>
struct type_caster<gdof::WeightedDim> {
  PYBIND11_TYPE_CASTER(gdof::WeightedDim, const_name("tuple[fractions.Fraction, int]"));

  bool load(handle src, bool convert) {
    if (!py::isinstance<py::sequence>(src) || py::isinstance<py::str>(src) || py::len(src) != 2) return false;
    auto seq = py::reinterpret_borrow<py::sequence>(src);
    make_caster<gdof::Rational> exponent;
    make_caster<int> dims;
    if (!exponent.load(seq[0], convert) || !dims.load(seq[1], convert)) return false;
    value = {cast_op<gdof::Rational>(exponent), cast_op<int>(dims)};
    return true;
  }

  static handle cast(const gdof::WeightedDim& w, return_value_policy, handle) {
    return py::make_tuple(w.exponent, w.dims).release();
  }
};

}  // namespace pybind11::detail

namespace {

std::string profile_repr(const gdof::AntennaProfile& a) {
  return "AntennaProfile(" + std::to_string(a.tx(1)) + ", " + std::to_string(a.rx(1)) + ", " +
         std::to_string(a.tx(2)) + ", " + std::to_string(a.rx(2)) + ")";
}

std::string exponents_repr(const gdof::ExponentProfile& e) {
  std::string s = "ExponentProfile(";
  for (int k = 0; k < 4; ++k) s += (k ? ", " : "") + std::string("'") + gdof::to_string(e.values()[k]) + "'";
  return s + ")";
}

}  // namespace

PYBIND11_MODULE(_gdof, m) {
  using namespace gdof;
  m.doc() = "Exact GDoF region calculator for the two-user MIMO interference channel";

  static py::exception<Error> gdof_error(m, "GdofError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InfeasibleSplit& e) {
      py::object args = py::make_tuple(e.what(), std::string(to_string(e.code())), e.conflict());
      PyErr_SetObject(gdof_error.ptr(), args.ptr());
    } catch (const Error& e) {
      py::object args = py::make_tuple(e.what(), std::string(to_string(e.code())));
      PyErr_SetObject(gdof_error.ptr(), args.ptr());
    }
  });

  py::enum_<BoundKind>(m, "BoundKind")
      .value("D1", BoundKind::kD1)
      .value("D2", BoundKind::kD2)
      .value("D3", BoundKind::kD3)
      .value("D4", BoundKind::kD4)
      .value("D5", BoundKind::kD5)
      .value("D6", BoundKind::kD6)
      .value("D7", BoundKind::kD7)
      .value("EDGE", BoundKind::kEdge);

  py::enum_<Regime>(m, "Regime")
      .value("VERY_WEAK", Regime::kVeryWeak)
      .value("WEAK", Regime::kWeak)
      .value("MODERATE", Regime::kModerate)
      .value("STRONG", Regime::kStrong)
      .value("VERY_STRONG", Regime::kVeryStrong);

  py::enum_<StreamClass>(m, "StreamClass")
      .value("PUBLIC", StreamClass::kPublic)
      .value("PRIVATE_BELOW_NOISE", StreamClass::kPrivateBelowNoise)
      .value("PRIVATE_NULLSPACE", StreamClass::kPrivateNullSpace);

  py::class_<AntennaProfile>(m, "AntennaProfile")
      .def(py::init<int, int, int, int>(), py::arg("tx1"), py::arg("rx1"), py::arg("tx2"), py::arg("rx2"))
      .def("tx", &AntennaProfile::tx, py::arg("user"))
      .def("rx", &AntennaProfile::rx, py::arg("user"))
      .def(py::self == py::self)
      .def("__repr__", &profile_repr);

  py::class_<ExponentProfile>(m, "ExponentProfile")
      .def(py::init<Rational, Rational, Rational, Rational>(), py::arg("a11"), py::arg("a12"), py::arg("a21"),
           py::arg("a22"))
      .def_static("symmetric", &ExponentProfile::symmetric, py::arg("alpha"))
      .def("link", &ExponentProfile::link, py::arg("from_tx"), py::arg("to_rx"))
      .def_property_readonly("values", &ExponentProfile::values)
      .def(py::self == py::self)
      .def("__repr__", &exponents_repr);

  py::class_<ChannelProfile>(m, "ChannelProfile")
      .def(py::init<AntennaProfile, ExponentProfile>(), py::arg("antennas"), py::arg("exponents"))
      .def_readonly("antennas", &ChannelProfile::antennas)
      .def_readonly("exponents", &ChannelProfile::exponents)
      .def(py::self == py::self)
      .def("__repr__", [](const ChannelProfile& c) {
        return "ChannelProfile(" + profile_repr(c.antennas) + ", " + exponents_repr(c.exponents) + ")";
      });

  py::class_<GdofBound>(m, "GdofBound")
      .def_readonly("kind", &GdofBound::kind)
      .def_readonly("c1", &GdofBound::c1)
      .def_readonly("c2", &GdofBound::c2)
      .def_readonly("rhs", &GdofBound::rhs)
      .def("admits", &GdofBound::admits, py::arg("point"));

  py::class_<GdofRegion>(m, "GdofRegion")
      .def_property_readonly("bounds", &GdofRegion::bounds)
      .def_property_readonly("vertices", &GdofRegion::vertices)
      .def("__contains__", [](const GdofRegion& r, const Point2& p) { return contains(r, p); });

  py::class_<SweepPoint>(m, "SweepPoint")
      .def_readonly("alpha", &SweepPoint::alpha)
      .def_readonly("d_sym", &SweepPoint::d_sym)
      .def_readonly("active", &SweepPoint::active)
      .def_readonly("is_breakpoint", &SweepPoint::is_breakpoint);

  py::class_<DofSplit>(m, "DofSplit")
      .def_readonly("d1c", &DofSplit::d1c)
      .def_readonly("d1p", &DofSplit::d1p)
      .def_readonly("d2c", &DofSplit::d2c)
      .def_readonly("d2p", &DofSplit::d2p)
      .def("as_tuple", [](const DofSplit& s) { return py::make_tuple(s.d1c, s.d1p, s.d2c, s.d2p); })
      .def(py::self == py::self);

  py::class_<SlopeEstimate>(m, "SlopeEstimate")
      .def_readonly("value", &SlopeEstimate::value)
      .def_readonly("spread", &SlopeEstimate::spread)
      .def_readonly("min", &SlopeEstimate::min)
      .def_readonly("max", &SlopeEstimate::max)
      .def_readonly("draws", &SlopeEstimate::draws)
      .def_readonly("seed", &SlopeEstimate::seed);

  py::class_<ChannelInstance>(m, "ChannelInstance")
      .def(py::init<ChannelProfile, double, ComplexMatrix, ComplexMatrix, ComplexMatrix, ComplexMatrix>(),
           py::arg("profile"), py::arg("rho"), py::arg("h11"), py::arg("h12"), py::arg("h21"), py::arg("h22"))
      .def_property_readonly("profile", &ChannelInstance::profile)
      .def_property_readonly("rho", &ChannelInstance::rho)
      .def("link", &ChannelInstance::link, py::arg("from_tx"), py::arg("to_rx"))
      .def("link_snr", &ChannelInstance::link_snr, py::arg("from_tx"), py::arg("to_rx"));

  m.def("f", &f, py::arg("receive_dims"), py::arg("first"), py::arg("second"),
        "Sum GDoF of a two-user MAC; each user is (exponent, dims).");
  m.def("g", &g, py::arg("receive_dims"), py::arg("first"), py::arg("second"), py::arg("third"),
        "Sum GDoF of a three-user MAC; each user is (exponent, dims).");

  m.def("theorem_bounds", [](const ChannelProfile& c) {
    auto b = theorem_bounds(c);
    return std::vector<GdofBound>(b.begin(), b.end());
  }, py::arg("channel"));
  m.def("gdof_region", &gdof_region, py::arg("channel"));
  m.def("contains", &contains, py::arg("region"), py::arg("point"));
  m.def("symmetric_gdof", [](const ChannelProfile& c) {
    auto s = symmetric_gdof(c);
    return py::make_tuple(s.value, s.active);
  }, py::arg("channel"), "(d_sym, first active bound)");
  m.def("reciprocal", &reciprocal, py::arg("channel"));
  m.def("regions_equal", &regions_equal, py::arg("a"), py::arg("b"));
  m.def("make_grid", &make_grid, py::arg("lo"), py::arg("hi"), py::arg("step"));
  m.def(
      "sweep_alpha",
      [](const AntennaProfile& ant, const std::vector<Rational>& grid,
         const std::optional<std::array<std::pair<Rational, Rational>, 4>>& shape) {
        ExponentTemplate t;
        if (shape) {
          for (std::size_t k = 0; k < 4; ++k) std::tie(t.offset[k], t.slope[k]) = (*shape)[k];
        }
        return sweep_alpha(ant, t, grid);
      },
      py::arg("antennas"), py::arg("grid"), py::arg("template") = py::none(),
      "Symmetric GDoF along a template of four (offset, slope) pairs; default [1, a, a, 1].");

  m.def("corollary_D", &corollary_D, py::arg("tx"), py::arg("rx"), py::arg("alpha"));
  m.def("siso_w_curve", &siso_w_curve, py::arg("alpha"));
  m.def("curve_1121", &curve_1121, py::arg("alpha"));
  m.def("alpha_star", &alpha_star, py::arg("tx"), py::arg("rx"));
  m.def("classify_regime", &classify_regime, py::arg("tx"), py::arg("rx"), py::arg("alpha"));
  m.def("dof_sum_bound", &dof_sum_bound, py::arg("antennas"));
  m.def("zf_only_region", &zf_only_region, py::arg("channel"));

  m.def("sample_instance", &sample_instance, py::arg("profile"), py::arg("rho"), py::arg("seed"));
  m.def("covariances", [](const ChannelInstance& inst, int user) {
    auto c = covariances(inst, user);
    return py::make_tuple(c.private_cov, c.public_cov);
  }, py::arg("instance"), py::arg("user"), "(K_u, K_w)");
  m.def("stream_decomposition", [](const ChannelInstance& inst, int user) {
    py::list out;
    for (const auto& s : stream_decomposition(inst, user)) out.append(py::make_tuple(s.direction, s.weight, s.cls));
    return out;
  }, py::arg("instance"), py::arg("user"), "List of (direction, weight, class).");
  m.def("split_solver", &split_solver, py::arg("channel"), py::arg("point"));

  m.def("estimate_tin_gdof", [](const ChannelProfile& c, const std::vector<double>& ladder, int draws,
                                std::uint64_t seed) { return estimate_tin_gdof(c, SnrLadder(ladder), draws, seed); },
        py::arg("channel"), py::arg("ladder") = std::vector<double>{1e8, 1e12}, py::arg("draws") = 5,
        py::arg("seed") = 1);
  m.def("estimate_mac_gdof", [](int receive_dims, const std::vector<WeightedDim>& users,
                                const std::vector<double>& ladder, int draws, std::uint64_t seed) {
    return estimate_mac_gdof(receive_dims, users, SnrLadder(ladder), draws, seed);
  }, py::arg("receive_dims"), py::arg("users"), py::arg("ladder") = std::vector<double>{1e8, 1e12},
        py::arg("draws") = 5, py::arg("seed") = 1);
}
