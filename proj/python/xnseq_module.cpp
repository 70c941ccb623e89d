// Python bindings for the main operations.  Exact rationals cross the
// boundary as "p/q" strings so nothing is lost to floating point.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xnseq/ap.hpp"
#include "xnseq/expair.hpp"
#include "xnseq/fit.hpp"
#include "xnseq/floorseq.hpp"
#include "xnseq/lattice.hpp"
#include "xnseq/sieve.hpp"
#include "xnseq/table.hpp"
#include "xnseq/titchmarsh.hpp"
#include "xnseq/vaaler.hpp"

namespace py = pybind11;
using namespace xnseq;

namespace {

py::tuple pair_tuple(const ExponentPair& p) {
    return py::make_tuple(p.k.get_str(), p.l.get_str(), p.word);
}

ArithmeticFunctionSpec spec_from_name(const std::string& name) {
    return make_spec(arithmetic_kind_from_name(name));
}

}  // namespace

PYBIND11_MODULE(_xnseq, m) {
    m.doc() = "Floor-quotient sequence toolkit";

    py::register_exception<guard_error>(m, "GuardError");

    // core-floor
    py::class_<QuotientBlock>(m, "QuotientBlock")
        .def_readonly("n_lo", &QuotientBlock::n_lo)
        .def_readonly("n_hi", &QuotientBlock::n_hi)
        .def_readonly("value", &QuotientBlock::value)
        .def("__repr__", [](const QuotientBlock& b) {
            return "QuotientBlock(n_lo=" + std::to_string(b.n_lo) +
                   ", n_hi=" + std::to_string(b.n_hi) + ", value=" + std::to_string(b.value) + ")";
        });
    m.def("floor_div", &floor_div, py::arg("x"), py::arg("n"));
    m.def("quotient_blocks", &quotient_blocks, py::arg("x"));
    m.def("sx_member", &sx_member, py::arg("x"), py::arg("n"));
    m.def("sx_members", &sx_members, py::arg("x"));
    m.def("sx_cardinality", &sx_cardinality, py::arg("x"));
    m.def("sawtooth", &sawtooth, py::arg("t"));

    // ap-distribution
    m.def("count_S", [](u64 x, u64 q, i64 a) { return count_S_fast(APQuery(x, q, a)); },
          py::arg("x"), py::arg("q"), py::arg("a"));
    m.def("count_S_brute", [](u64 x, u64 q, i64 a) { return count_S_brute(APQuery(x, q, a)); },
          py::arg("x"), py::arg("q"), py::arg("a"));
    m.def("count_S_star", [](u64 x, u64 q, i64 a) { return count_S_star_fast(APQuery(x, q, a)); },
          py::arg("x"), py::arg("q"), py::arg("a"));
    m.def("count_S_star_brute",
          [](u64 x, u64 q, i64 a) { return count_S_star_brute(APQuery(x, q, a)); }, py::arg("x"),
          py::arg("q"), py::arg("a"));
    m.def("main_term_S",
          [](u64 x, u64 q, i64 a, double tol) {
              auto [value, trunc] = main_term_S(APQuery(x, q, a), tol);
              return py::make_tuple(value, trunc.terms_used, trunc.tail_bound);
          },
          py::arg("x"), py::arg("q"), py::arg("a"), py::arg("tol") = 1e-9);
    m.def("decomposition_gap_S",
          [](u64 x, u64 q, i64 a) {
              DecompositionReport r = decomposition_gap_S(APQuery(x, q, a));
              py::dict d;
              d["exact"] = r.exact;
              d["main_term"] = r.main_term;
              for (const auto& [name, value] : r.remainders) d[name.c_str()] = value;
              d["gap"] = r.gap;
              d["within_bound"] = r.within_bound;
              return d;
          },
          py::arg("x"), py::arg("q"), py::arg("a"));
    m.def("decomposition_gap_S_star",
          [](u64 x, u64 q, i64 a) {
              DecompositionReport r = decomposition_gap_S_star(APQuery(x, q, a));
              py::dict d;
              d["exact"] = r.exact;
              d["main_term"] = r.main_term;
              for (const auto& [name, value] : r.remainders) d[name.c_str()] = value;
              d["gap"] = r.gap;
              d["within_bound"] = r.within_bound;
              return d;
          },
          py::arg("x"), py::arg("q"), py::arg("a"));
    m.def("error_exponent_fit",
          [](u64 q, i64 a, const std::vector<u64>& grid) {
              FitResult r = error_exponent_fit(q, a, grid);
              return py::make_tuple(r.slope, r.degenerate, r.points_used);
          },
          py::arg("q"), py::arg("a"), py::arg("x_grid"));
    m.def("remainder_R1", [](u64 x, u64 q, i64 a) { return remainder_R1(APQuery(x, q, a)); },
          py::arg("x"), py::arg("q"), py::arg("a"));
    m.def("remainder_R2", [](u64 x, u64 q, i64 a) { return remainder_R2(APQuery(x, q, a)); },
          py::arg("x"), py::arg("q"), py::arg("a"));
    m.def("remainder_R1_star",
          [](u64 x, u64 q, i64 a) { return remainder_R1_star(APQuery(x, q, a)); }, py::arg("x"),
          py::arg("q"), py::arg("a"));

    // exponent-pairs
    m.def("apply_word",
          [](const std::string& word) { return pair_tuple(apply_word(word, trivial_pair())); },
          py::arg("word"));
    m.def("objective",
          [](const std::string& word) { return objective(apply_word(word, trivial_pair())).get_str(); },
          py::arg("word"));
    m.def("search_min_objective",
          [](u64 depth) {
              SearchResult r = search_min_objective(depth);
              return py::make_tuple(r.best.word, r.objective.get_str(),
                                    static_cast<u64>(r.frontier.size()));
          },
          py::arg("max_depth"));

    // sawtooth-fourier
    py::class_<VaalerPolynomial>(m, "VaalerPolynomial")
        .def_readonly("H", &VaalerPolynomial::H)
        .def_readonly("coefficients", &VaalerPolynomial::coefficients)
        .def("__call__", [](const VaalerPolynomial& p, double t) { return vaaler_eval(p, t); });
    m.def("vaaler_build", &vaaler_build, py::arg("H"));
    m.def("fejer_majorant", &fejer_majorant, py::arg("H"), py::arg("t"));
    m.def("erdos_turan_ratio", &erdos_turan_ratio, py::arg("points"), py::arg("H"));
    m.def("phase_sum",
          [](u64 x, u64 q, double delta, double eta, u64 N, u64 N_hi) {
              return phase_sum(PhaseSumQuery(x, q, delta, eta, N, N_hi));
          },
          py::arg("x"), py::arg("q"), py::arg("delta"), py::arg("eta"), py::arg("N"), py::arg("N_hi"));

    // primitive-lattice
    m.def("coprime_pairs_S", &coprime_pairs_S_moebius, py::arg("x"));
    m.def("coprime_pairs_S_brute", &coprime_pairs_S_brute, py::arg("x"),
          py::arg("cap") = kCoprimeBruteDefaultCap);
    m.def("coprime_pairs_multiplicity", &coprime_pairs_multiplicity_moebius, py::arg("x"));
    m.def("coprime_pairs_multiplicity_brute", &coprime_pairs_multiplicity_brute, py::arg("x"));
    m.def("sx_members_divisible", &sx_members_divisible, py::arg("x"), py::arg("d"));
    m.def("frak_S", &frak_S, py::arg("tol") = 1e-8);

    // titchmarsh
    py::class_<SieveTables>(m, "SieveTables")
        .def_readonly("limit", &SieveTables::limit)
        .def("lambda_", [](const SieveTables& t, u64 n) { return t.lambda.at(n); })
        .def("phi", [](const SieveTables& t, u64 n) { return t.phi.at(n); })
        .def("mu", [](const SieveTables& t, u64 n) { return static_cast<int>(t.mu.at(n)); })
        .def("is_prime", &SieveTables::is_prime)
        .def("pi", &SieveTables::pi)
        .def("chebyshev", &SieveTables::chebyshev)
        .def("phi_summatory", &SieveTables::phi_summatory)
        .def("tau", &SieveTables::tau);
    m.def("build_sieve", &build_sieve, py::arg("limit"));
    m.def("sum_lambda_a",
          [](const SieveTables& t, u64 x, const std::string& kind) {
              return sum_lambda_a(t, x, spec_from_name(kind));
          },
          py::arg("tables"), py::arg("x"), py::arg("kind") = "constant_one");
    m.def("sum_prime_a",
          [](const SieveTables& t, u64 x, const std::string& kind) {
              return sum_prime_a(t, x, spec_from_name(kind));
          },
          py::arg("tables"), py::arg("x"), py::arg("kind") = "constant_one");
    m.def("main_term_lambda",
          [](const SieveTables& t, const std::string& kind, u64 x, double tol) {
              return main_term_lambda(t, spec_from_name(kind), x, tol).first;
          },
          py::arg("tables"), py::arg("kind"), py::arg("x"), py::arg("tol") = 1e-6);
    m.def("expansion_prime_a",
          [](const SieveTables& t, const std::string& kind, u64 x, u64 K) {
              TitchmarshReport r = expansion_prime_a(t, spec_from_name(kind), x, K);
              py::dict d;
              d["x"] = r.x;
              d["exact"] = r.exact;
              d["main_term"] = r.main_term;
              d["ratio"] = r.ratio;
              for (const auto& [name, value] : r.secondary) d[name.c_str()] = value;
              return d;
          },
          py::arg("tables"), py::arg("kind"), py::arg("x"), py::arg("K") = 2);
    m.def("phi_lambda_report",
          [](const SieveTables& t, u64 x) {
              TitchmarshReport r = phi_lambda_report(t, x);
              return py::make_tuple(r.exact, r.main_term, r.ratio);
          },
          py::arg("tables"), py::arg("x"));
    m.def("phi_prime_report",
          [](const SieveTables& t, u64 x) {
              TitchmarshReport r = phi_prime_report(t, x);
              return py::make_tuple(r.exact, r.main_term, r.ratio);
          },
          py::arg("tables"), py::arg("x"));
    m.def("thm19_bounds", &thm19_bounds);
    m.def("phi_remainder_E", &phi_remainder_E, py::arg("tables"), py::arg("u"), py::arg("x"),
          py::arg("c_param") = 1.0);
    m.def("kvw_probe",
          [](const SieveTables& t, const std::string& v, u64 P, u64 P_hi, u64 Q, double eta) {
              KvwKind kind = v == "mu" ? KvwKind::mu
                             : v == "lambda" ? KvwKind::lambda
                                             : KvwKind::prime_indicator;
              return kvw_probe(t, kind, P, P_hi, Q, eta);
          },
          py::arg("tables"), py::arg("v"), py::arg("P"), py::arg("P_hi"), py::arg("Q"),
          py::arg("eta") = 0.0);
}
