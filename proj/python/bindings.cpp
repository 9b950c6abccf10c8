#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include <optional>

#include "crl/atom.hpp"
#include "crl/classify.hpp"
#include "crl/common_root.hpp"
#include "crl/dunomial.hpp"
#include "crl/experiment.hpp"
#include "crl/intpoly.hpp"
#include "crl/poly.hpp"

namespace py = pybind11;
using namespace crl;

namespace {

BernoulliPolyUni uni_from_signs(const std::string& s) { return from_sign_string(s); }

std::vector<mpz_class> to_mpz(const std::vector<long long>& v) {
    std::vector<mpz_class> z;
    z.reserve(v.size());
    for (long long x : v) z.emplace_back(static_cast<long>(x));
    return z;
}

AtomVector atoms_from_ints(const std::vector<long long>& v) {
    return AtomVector::integers(to_mpz(v));
}

IntPoly intpoly_from_ints(const std::vector<long long>& v) {
    return IntPoly(to_mpz(v));
}

}  // namespace

PYBIND11_MODULE(_crl, m) {
    m.doc() = "common-root experiments for random ±1 polynomial systems";

    py::class_<BernoulliPolyUni>(m, "BernoulliPolyUni")
        .def(py::init(&uni_from_signs), py::arg("signs"))
        .def_property_readonly("degree", &BernoulliPolyUni::degree)
        .def("sign_string", [](const BernoulliPolyUni& p) { return to_sign_string(p); })
        .def("__call__",
             [](const BernoulliPolyUni& p, Complex x) { return eval(p, x); });

    m.def("sample_uni",
          [](int n, std::uint64_t master, std::uint64_t stream) {
              return sample_uni(n, Seed{master, stream});
          },
          py::arg("n"), py::arg("master_seed"), py::arg("stream_index"));

    m.def("common_root_exists",
          [](const BernoulliPolyUni& p, const BernoulliPolyUni& q) {
              return common_root_exists(p, q);
          },
          py::arg("p"), py::arg("q"));

    m.def("atom_probability",
          [](const std::vector<long long>& xi) {
              const AtomResult r = atom_probability(atoms_from_ints(xi));
              return py::make_tuple(r.zero_count.get_str(), r.m,
                                    r.probability.get_d());
          },
          py::arg("entries"),
          "returns (zero_count, m, probability) for integer entries");

    m.def("walk_return_prob",
          [](unsigned long mm) { return walk_return_prob(mm).get_d(); }, py::arg("m"));

    m.def("bound_report_json",
          [](const std::vector<long long>& xi) {
              return bound_report(atoms_from_ints(xi)).to_json();
          },
          py::arg("entries"));

    py::class_<Dunomial>(m, "Dunomial")
        .def(py::init([](Exponent a, Exponent b, int sign) {
                 return Dunomial{std::move(a), std::move(b), sign};
             }),
             py::arg("alpha"), py::arg("beta"), py::arg("sign") = -1)
        .def_readonly("alpha", &Dunomial::alpha)
        .def_readonly("beta", &Dunomial::beta)
        .def_readonly("sign", &Dunomial::sign)
        .def_property_readonly("order", &dunomial_order)
        .def_property_readonly("degree", &dunomial_degree);

    m.def("reduce", &reduce, py::arg("dunomial"));
    m.def("enumerate_reduced_by_order", &enumerate_reduced_by_order, py::arg("d"),
          py::arg("r"));
    m.def("count_satisfied_numeric",
          [](const std::vector<Complex>& x, int n, double tol) {
              return count_satisfied_numeric(ComplexPoint{x}, n, tol);
          },
          py::arg("point"), py::arg("n"), py::arg("tol") = 1e-9);
    m.def("r_of_x_numeric",
          [](const std::vector<Complex>& x, int cap, double tol) {
              return r_of_x_numeric(ComplexPoint{x}, cap, tol);
          },
          py::arg("point"), py::arg("cap"), py::arg("tol") = 1e-9);

    m.def("classify_json",
          [](const std::string& p, const std::string& q) {
              return to_json(
                  classify_common_roots_1d(from_sign_string(p), from_sign_string(q)));
          },
          py::arg("p_signs"), py::arg("q_signs"));
    m.def("classify_point_json",
          [](const std::vector<Complex>& x, int n, double tol) {
              return to_json(classify_point(ComplexPoint{x}, n, tol));
          },
          py::arg("point"), py::arg("n"), py::arg("tol") = 1e-9);

    m.def("estimate_json",
          [](int d, int n, int ell, long long trials, std::uint64_t seed,
             bool use_filter, int prime_budget) {
              CampaignConfig c;
              c.d = d;
              c.n = n;
              c.ell = ell;
              c.trials = trials;
              c.master_seed = seed;
              c.use_filter = use_filter;
              c.prime_budget = prime_budget;
              return estimate_p(c).to_json();
          },
          py::arg("d"), py::arg("n"), py::arg("ell"), py::arg("trials"),
          py::arg("seed"), py::arg("use_filter") = true, py::arg("prime_budget") = 2);

    m.def("exact_json",
          [](int n) {
              CampaignConfig c;
              c.n = n;
              c.mode = CampaignConfig::Mode::Exhaustive;
              c.trials = 1;
              return exact_p_bruteforce(c).to_json();
          },
          py::arg("n"));

    m.def("resultant_str",
          [](const std::vector<long long>& f, const std::vector<long long>& g) {
              return resultant(intpoly_from_ints(f), intpoly_from_ints(g)).get_str();
          },
          py::arg("f"), py::arg("g"));
}
