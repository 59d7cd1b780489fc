// Python face of the core library: sequences, palindromic lengths, factor
// queries, mask minima, level sets and their automata.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "palinruler/bitseq.hpp"
#include "palinruler/levelang.hpp"
#include "palinruler/maskcalc.hpp"
#include "palinruler/palfactor.hpp"
#include "palinruler/pallen.hpp"

namespace py = pybind11;
using namespace palinruler;

namespace {

PalLengthTable table_for(const std::string& seq, std::uint64_t n_max) {
    if (seq == "a") return pal_length_a(n_max);
    if (seq == "b") return pal_length_b(n_max);
    throw std::invalid_argument("seq is 'a' or 'b'");
}

std::function<std::uint64_t(std::uint64_t)> seq_fn(const std::string& name,
                                                   std::uint64_t n_max) {
    if (name == "ruler")
        return [](std::uint64_t n) { return std::uint64_t{ruler(n)}; };
    if (name == "period-doubling")
        return [](std::uint64_t n) { return std::uint64_t{period_doubling(n)}; };
    if (name == "run-count" || name == "pl-a")
        return [](std::uint64_t n) { return std::uint64_t{run_count(n)}; };
    if (name == "pl-b") {
        auto table = std::make_shared<PalLengthTable>(pal_length_b(n_max));
        return [table](std::uint64_t n) {
            if (n == 0 || n > table->n_max)
                throw std::length_error("pl-b value out of the computed table");
            return std::uint64_t{table->values[n]};
        };
    }
    throw std::invalid_argument("unknown sequence: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "palindromic-length toolkit for the ruler and period-doubling sequences";

    m.def("ruler", &ruler, py::arg("n"),
          "a[n]: the 2-adic valuation of n (n >= 1)");
    m.def("period_doubling", &period_doubling, py::arg("n"),
          "b[n]: the 2-adic valuation of n modulo 2");
    m.def("run_count", &run_count, py::arg("n"),
          "c[n]: the number of runs in the binary expansion of n");

    m.def(
        "pal_length",
        [](const std::string& seq, std::uint64_t n_max) {
            return table_for(seq, n_max).values;
        },
        py::arg("seq"), py::arg("n_max"),
        "Prefix palindromic lengths of sequence 'a' or 'b' as a list indexed by n "
        "(entry 0 is the empty prefix).");

    m.def(
        "pal_suffixes",
        [](const std::string& seq, std::uint64_t n) -> std::vector<std::uint64_t> {
            if (seq == "a") return pal_suffixes_a(n);
            if (seq == "b") {
                std::vector<std::uint64_t> starts;
                for (const auto& f : pal_suffixes_b(n)) starts.push_back(f.i);
                return starts;
            }
            throw std::invalid_argument("seq is 'a' or 'b'");
        },
        py::arg("seq"), py::arg("n"),
        "Start positions i of the palindromic suffixes [i, n], ascending.");

    m.def(
        "is_pal_factor",
        [](const std::string& seq, std::uint64_t i, std::uint64_t j) {
            if (seq == "a") return is_pal_factor_a(i, j);
            if (seq == "b") return is_pal_factor_b(i, j);
            throw std::invalid_argument("seq is 'a' or 'b'");
        },
        py::arg("seq"), py::arg("i"), py::arg("j"),
        "Whether the factor [i, j] of sequence 'a' or 'b' is a palindrome (O(1)).");

    m.def(
        "min_ops",
        [](const std::string& word, bool type_a_only, std::uint32_t max_len) {
            const BinaryWord w = BinaryWord::parse(word);
            const SolveResult r = type_a_only ? min_ops_type_a(w) : min_ops_mixed(w, max_len);
            std::vector<std::string> ops;
            ops.reserve(r.ops.ops.size());
            for (const auto& op : r.ops.ops) ops.push_back(op.str());
            return py::make_tuple(r.count, ops);
        },
        py::arg("word"), py::arg("type_a_only") = false, py::arg("max_len") = kSolverMaxLen,
        "Minimum number of mask operations sending the word to all zeros, with a "
        "witness list of operations.");

    m.def(
        "level_set",
        [](const std::string& seq, std::uint64_t epsilon, std::uint64_t n_max) {
            return level_set(seq_fn(seq, n_max), epsilon, n_max).members;
        },
        py::arg("seq"), py::arg("epsilon"), py::arg("n_max"),
        "Indices n in 1..n_max with seq(n) == epsilon; seq is one of ruler, "
        "period-doubling, run-count, pl-a, pl-b.");

    m.def(
        "run_count_dfa",
        [](std::uint32_t m) { return dfa_serialize(minimize(dfa_for_run_count(m))); },
        py::arg("m"),
        "Serialized minimal DFA accepting the binary expansions with exactly m runs.");

    m.def(
        "dfa_accepts",
        [](const std::string& dfa_text, std::uint64_t n) {
            return dfa_parse(dfa_text).accepts(n);
        },
        py::arg("dfa_text"), py::arg("n"),
        "Run a serialized DFA on the binary expansion of n.");

    m.def(
        "learn_level_set_dfa",
        [](const std::string& seq, std::uint64_t epsilon, std::uint64_t n_max,
           std::uint32_t max_states) {
            const auto f = seq_fn(seq, std::max(n_max, std::uint64_t{1} << 18));
            const LearnResult r = learn_level_set_dfa(
                [&](std::uint64_t n) { return f(n) == epsilon; }, n_max, max_states);
            py::dict out;
            out["dfa"] = r.dfa ? py::object(py::str(dfa_serialize(minimize(*r.dfa))))
                               : py::object(py::none());
            out["diagnosis"] = r.diagnosis;
            out["membership_queries"] = r.membership_queries;
            out["equivalence_rounds"] = r.equivalence_rounds;
            return out;
        },
        py::arg("seq"), py::arg("epsilon"), py::arg("n_max"), py::arg("max_states"),
        "Learn a DFA for the level set from membership queries; equivalence is "
        "approximated by sweeping 1..n_max. Returns the serialized minimized DFA "
        "or a diagnosis.");
}
