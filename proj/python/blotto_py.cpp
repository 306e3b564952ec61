#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "blotto/general_lotto.hpp"
#include "blotto/io.hpp"
#include "blotto/verify.hpp"

namespace py = pybind11;
using namespace blotto;

namespace {

PartitionMatrix matrix_from_rows(const std::vector<Row>& rows, long budget, long K) {
  PartitionMatrix M{budget, K, rows};
  validate(M);
  return M;
}

Dist dist_from_map(const std::map<long, std::string>& w) {
  std::map<long, Rat> out;
  for (auto& [k, p] : w) out[k] = parse_rat(p);
  return Dist(out);
}

std::optional<Rat> opt_rat(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return parse_rat(*s);
}

}  // namespace

PYBIND11_MODULE(_blotto, m) {
  py::register_exception<Error>(m, "BlottoError", PyExc_ValueError);

  m.def("value", [](long A, long B, long K) { return to_string(blotto_value({A, B, K})); },
        py::arg("a"), py::arg("b"), py::arg("k"));
  m.def("classify", [](long A, long B, long K) { return tag_name(classify({A, B, K}).tag); },
        py::arg("a"), py::arg("b"), py::arg("k"));
  m.def("solve", [](long A, long B, long K) { return to_json(solve({A, B, K})).dump(); },
        py::arg("a"), py::arg("b"), py::arg("k"));
  m.def(
      "certify",
      [](const std::vector<Row>& x, const std::vector<Row>& y, long A, long B, long K) {
        return to_json(certify(matrix_from_rows(x, A, K), matrix_from_rows(y, B, K), A, B, K)).dump();
      },
      py::arg("strategy_a"), py::arg("strategy_b"), py::arg("a"), py::arg("b"), py::arg("k"));
  m.def(
      "lotto_value",
      [](const std::string& a, const std::string& b, const std::optional<std::string>& c) {
        return to_string(lotto_value({parse_rat(a), parse_rat(b), opt_rat(c)}));
      },
      py::arg("a"), py::arg("b"), py::arg("c") = py::none());
  m.def(
      "implement",
      [](const std::map<long, std::string>& weights, long C, long K) -> std::optional<std::vector<Row>> {
        auto M = generic_implement(dist_from_map(weights), C, K);
        if (!M) return std::nullopt;
        return M->rows;
      },
      py::arg("weights"), py::arg("c"), py::arg("k"));
  m.def(
      "sweep_csv",
      [](long kmax, long amax, unsigned threads) {
        py::gil_scoped_release nogil;
        return sweep_csv(sweep_certify(kmax, amax, threads));
      },
      py::arg("kmax"), py::arg("amax"), py::arg("threads") = 0);
}
