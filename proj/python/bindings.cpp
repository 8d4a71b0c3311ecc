#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <functional>

#include "bipdeg/combinations.hpp"
#include "bipdeg/gen.hpp"
#include "bipdeg/oracle.hpp"
#include "bipdeg/search.hpp"

namespace py = pybind11;
using namespace bipdeg;

namespace {

// Sorted copy; zeros are kept.
DegreeSequence as_sequence(std::vector<int> v) {
    std::ranges::sort(v, std::greater<>());
    return DegreeSequence(std::move(v));
}

SearchConfig make_config(const std::string& lc, int threads, const std::string& dy_order,
                         const std::string& combo_order) {
    SearchConfig c;
    c.lc = LcPolicy::parse(lc);
    c.parallel_width = std::max(1, threads);
    if (dy_order == "largest_first")
        c.dy_order = DyOrder::LargestFirst;
    else if (dy_order == "smallest_first")
        c.dy_order = DyOrder::SmallestFirst;
    else
        throw InvalidInput("dy_order must be largest_first or smallest_first");
    if (combo_order == "smallest_terms_first")
        c.combo_order = ComboOrder::SmallestTermsFirst;
    else if (combo_order == "largest_terms_first")
        c.combo_order = ComboOrder::LargestTermsFirst;
    else
        throw InvalidInput("combo_order must be smallest_terms_first or largest_terms_first");
    return c;
}

py::object partition_or_none(const std::optional<Bipartition>& w, bool left) {
    if (!w) return py::none();
    return py::cast(left ? w->a.vec() : w->b.vec());
}

}  // namespace

PYBIND11_MODULE(_bipdeg, m) {
    m.doc() = "Bipartite realizability of graphical degree sequences";

    py::register_exception<NotGraphical>(m, "NotGraphicalError", PyExc_ValueError);
    py::register_exception<InvalidInput>(m, "InvalidInputError", PyExc_ValueError);
    py::register_exception<GenerationFailure>(m, "GenerationError", PyExc_RuntimeError);

    py::class_<Verdict>(m, "Verdict")
        .def_readonly("potentially_bipartite", &Verdict::potentially_bipartite)
        .def_readonly("exact", &Verdict::exact)
        .def_readonly("phase", &Verdict::phase)
        .def_property_readonly("a", [](const Verdict& v) { return partition_or_none(v.witness, true); })
        .def_property_readonly("b", [](const Verdict& v) { return partition_or_none(v.witness, false); })
        .def_property_readonly("certificate",
                               [](const Verdict& v) -> py::object {
                                   if (v.potentially_bipartite) return py::none();
                                   return py::cast(v.certificate());
                               })
        .def("__bool__", [](const Verdict& v) { return v.potentially_bipartite; })
        .def("__repr__", [](const Verdict& v) {
            if (v.potentially_bipartite)
                return "Verdict(yes, a=" + v.witness->a.to_string() + ", b=" + v.witness->b.to_string() + ")";
            return "Verdict(no, " + v.certificate() + (v.exact ? ", exact)" : ", budget-limited)");
        });

    m.def(
        "decide",
        [](const std::vector<int>& degrees, const std::string& lc, int threads,
           const std::string& dy_order, const std::string& combo_order) {
            const SearchConfig c = make_config(lc, threads, dy_order, combo_order);
            py::gil_scoped_release release;
            return decide(degrees, c);
        },
        py::arg("degrees"), py::arg("lc") = "n", py::arg("threads") = 1,
        py::arg("dy_order") = "largest_first", py::arg("combo_order") = "smallest_terms_first",
        "Decide whether some realization of the sequence is bipartite. Order and zeros are ignored.");

    m.def(
        "oracle_decide",
        [](const std::vector<int>& degrees) {
            const Normalized n = normalize(degrees);
            if (!is_graphical(n.sequence)) throw NotGraphical("not graphical: " + n.sequence.to_string());
            py::gil_scoped_release release;
            return oracle_decide(n.sequence);
        },
        py::arg("degrees"), "Exhaustive decision over every candidate bipartition.");

    m.def("normalize", [](const std::vector<int>& degrees) {
        const Normalized n = normalize(degrees);
        return py::make_tuple(n.sequence.vec(), n.zeros_dropped);
    }, py::arg("degrees"));
    m.def("is_graphical", [](const std::vector<int>& d) { return is_graphical(as_sequence(d)); },
          py::arg("degrees"));
    m.def("complement", [](const std::vector<int>& d) { return complement(as_sequence(d)).vec(); },
          py::arg("degrees"));
    m.def("conjugate", [](const std::vector<int>& p) { return conjugate(Partition(p)).vec(); },
          py::arg("parts"));
    m.def("dominates",
          [](const std::vector<int>& p, const std::vector<int>& q) {
              return dominates(Partition(p), Partition(q));
          },
          py::arg("p"), py::arg("q"));
    m.def("gale_ryser",
          [](const std::vector<int>& a, const std::vector<int>& b) {
              return gale_ryser(Partition(a), Partition(b));
          },
          py::arg("a"), py::arg("b"));

    m.def("phase1",
          [](const std::vector<int>& d) -> py::object {
              const auto out = phase1(as_sequence(d));
              if (out.undecided()) return py::none();
              return py::cast(std::string(rule_name(*out.rejected_by)));
          },
          py::arg("degrees"), "Name of the first rule that rejects, or None.");
    m.def("residue", [](const std::vector<int>& d) { return residue(as_sequence(d)); },
          py::arg("degrees"));
    m.def("murphy_bound", [](const std::vector<int>& d) { return murphy_bound(as_sequence(d)); },
          py::arg("degrees"));

    m.def("compute_bounds", [](const std::vector<int>& d) {
        const SearchBounds b = compute_bounds(as_sequence(d));
        py::dict out;
        out["a_f"] = b.a_f.vec();
        out["S"] = b.S;
        out["d_m"] = b.d_m;
        out["l_1"] = b.l_1;
        out["l_2"] = b.l_2;
        out["ell_lo"] = b.ell_lo;
        out["ell_hi"] = b.ell_hi;
        out["x_0"] = b.x_0;
        return out;
    }, py::arg("degrees"));

    m.def(
        "small_term_combinations",
        [](const std::vector<int>& pool, Weight target, int lo, int hi,
           std::optional<std::size_t> budget, const std::string& order) {
            ComboOrder o = ComboOrder::SmallestTermsFirst;
            if (order == "largest_terms_first")
                o = ComboOrder::LargestTermsFirst;
            else if (order != "smallest_terms_first")
                throw InvalidInput("order must be smallest_terms_first or largest_terms_first");
            SmallTermCombinations s(Partition(pool), target, lo, hi, budget, o);
            std::vector<std::vector<int>> out;
            for (const auto& p : s.collect()) out.push_back(p.vec());
            return out;
        },
        py::arg("pool"), py::arg("target"), py::arg("lo"), py::arg("hi"),
        py::arg("budget") = py::none(), py::arg("order") = "smallest_terms_first");

    m.def(
        "graphical_sequences",
        [](int n) {
            std::vector<std::vector<int>> out;
            enumerate_graphical_sequences(n, [&](const DegreeSequence& d) { out.push_back(d.vec()); });
            return out;
        },
        py::arg("n"), "Every zero-free graphical sequence of length n, reverse-lexicographic.");

    m.def(
        "tabulate",
        [](int n, const std::string& lc, int threads) {
            const SearchConfig c = make_config(lc, 1, "largest_first", "smallest_terms_first");
            TableRow row;
            {
                py::gil_scoped_release release;
                row = tabulate(n, c, threads);
            }
            py::dict out;
            out["n"] = row.n;
            out["D"] = row.D;
            out["r"] = row.r;
            out["B"] = row.B;
            out["B_w"] = row.B_w;
            return out;
        },
        py::arg("n"), py::arg("lc") = "1", py::arg("threads") = 1);

    m.def(
        "random_graphical",
        [](int n, int d1, int dn, std::uint64_t seed, int count) {
            std::vector<std::vector<int>> out;
            for (const auto& d : random_graphical_batch({n, d1, dn, seed, count})) out.push_back(d.vec());
            return out;
        },
        py::arg("n"), py::arg("d1"), py::arg("dn"), py::arg("seed") = 0, py::arg("count") = 1);
}
