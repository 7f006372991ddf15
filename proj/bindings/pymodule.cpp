#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "lispace/adjustable.hpp"
#include "lispace/generate.hpp"
#include "lispace/oracle.hpp"
#include "lispace/patience.hpp"
#include "lispace/permutation.hpp"
#include "lispace/reconstruct.hpp"
#include "lispace/sequence.hpp"

namespace py = pybind11;
using namespace lispace;

namespace {

std::size_t default_budget(std::optional<std::size_t> s, std::size_t n) {
    if (s) return *s;
    return std::max<std::size_t>(
        2, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n)))));
}

std::vector<std::pair<std::size_t, std::int64_t>> as_pairs(
    const std::vector<Element>& elements) {
    std::vector<std::pair<std::size_t, std::int64_t>> out;
    out.reserve(elements.size());
    for (const Element& e : elements) out.emplace_back(e.position, e.value);
    return out;
}

std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> as_pile_lists(
    const PileFamily& family) {
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> out;
    out.reserve(family.piles.size());
    for (const Pile& pile : family.piles) out.push_back(as_pairs(pile.elements));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Space-budgeted longest increasing subsequence algorithms";

    m.def(
        "lis_length",
        [](const std::vector<std::int64_t>& values, std::optional<std::size_t> s,
           const std::string& algorithm) -> std::size_t {
            auto source = open_array(values);
            if (algorithm == "classic") return ps_piles(*source).lis();
            if (algorithm == "permutation") {
                if (!validate_permutation(*source))
                    throw py::value_error("input is not a permutation of 1..n");
                return perm_lis_length(*source);
            }
            if (algorithm != "adjustable")
                throw py::value_error("unknown algorithm: " + algorithm);
            BudgetMeter meter;
            return adjustable_length(*source, View::full(values.size()),
                                     Budget{default_budget(s, values.size())}, meter);
        },
        py::arg("values"), py::arg("s") = std::nullopt,
        py::arg("algorithm") = "adjustable",
        "Length of a longest strictly increasing subsequence.");

    m.def(
        "lis_extract",
        [](const std::vector<std::int64_t>& values, std::optional<std::size_t> s) {
            auto source = open_array(values);
            const LisResult result =
                find_lis(*source, Budget{default_budget(s, values.size())});
            return as_pairs(*result.subsequence);
        },
        py::arg("values"), py::arg("s") = std::nullopt,
        "One longest increasing subsequence as (position, value) pairs.");

    m.def(
        "length_report",
        [](const std::vector<std::int64_t>& values, std::optional<std::size_t> s) {
            auto source = open_array(values);
            BudgetMeter meter;
            AdjustableTrace trace;
            const std::size_t lis =
                adjustable_length(*source, View::full(values.size()),
                                  Budget{default_budget(s, values.size())}, meter,
                                  &trace);
            const AccessStats& st = source->stats();
            py::dict report;
            report["lis"] = lis;
            report["n"] = values.size();
            report["s"] = trace.effective_s;
            report["iterations"] = trace.iterations;
            report["peak_words"] = meter.peak_words();
            report["reads"] = st.reads;
            report["forward_passes"] = st.forward_passes;
            report["backward_passes"] = st.backward_passes;
            report["reversals"] = st.reversals;
            report["seek_cost"] = st.seek_cost;
            return report;
        },
        py::arg("values"), py::arg("s") = std::nullopt,
        "lis plus working-space and access instrumentation.");

    m.def(
        "piles",
        [](const std::vector<std::int64_t>& values) {
            auto source = open_array(values);
            return as_pile_lists(ps_piles(*source));
        },
        py::arg("values"), "Patience-sorting piles as lists of (position, value).");

    m.def(
        "rpiles",
        [](const std::vector<std::int64_t>& values) {
            auto source = open_array(values);
            return as_pile_lists(rps_piles(*source));
        },
        py::arg("values"), "Reversed patience-sorting piles.");

    m.def(
        "dp_lis_length",
        [](const std::vector<std::int64_t>& values) {
            return oracle::dp_lis_length(values);
        },
        py::arg("values"), "Quadratic dynamic-programming reference length.");

    m.def("random_permutation", &random_permutation, py::arg("n"), py::arg("seed"));
    m.def("random_multiset", &random_multiset, py::arg("n"), py::arg("seed"));
    m.def("hard_instance", &hard_instance, py::arg("half_length"), py::arg("seed"),
          "Permutation of 1..4n whose lis exceeds the embedded permutation's by 1.");

#ifdef LISPACE_VERSION
#define LISPACE_STR2(x) #x
#define LISPACE_STR(x) LISPACE_STR2(x)
    m.attr("__version__") = LISPACE_STR(LISPACE_VERSION);
#else
    m.attr("__version__") = "dev";
#endif
}
