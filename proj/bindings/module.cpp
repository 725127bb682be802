#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "lrct/cli.hpp"
#include "lrct/errors.hpp"
#include "lrct/integer_tables.hpp"
#include "lrct/lr_contingency.hpp"
#include "lrct/lr_engine.hpp"
#include "lrct/oracle.hpp"
#include "lrct/orthosymplectic.hpp"

namespace py = pybind11;

namespace {

using namespace lrct;

py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::tuple parts_tuple(const Partition& p) {
    py::tuple t(p.length());
    for (int i = 0; i < p.length(); ++i) t[static_cast<size_t>(i)] = p.part(i + 1);
    return t;
}

Partition as_partition(const std::vector<int>& parts) { return Partition(parts); }

std::vector<Partition> as_partitions(const std::vector<std::vector<int>>& seqs) {
    std::vector<Partition> out;
    out.reserve(seqs.size());
    for (const auto& s : seqs) out.emplace_back(s);
    return out;
}

GlWeight as_weight(const std::vector<int>& tuple) { return GlWeight::from_tuple(tuple); }

std::vector<GlWeight> as_weights(const std::vector<std::vector<int>>& seqs) {
    std::vector<GlWeight> out;
    out.reserve(seqs.size());
    for (const auto& s : seqs) out.push_back(as_weight(s));
    return out;
}

py::dict expansion_dict(const ExpansionMap& m) {
    py::dict d;
    for (const auto& [shape, mult] : m) d[parts_tuple(shape)] = to_py(mult);
    return d;
}

int cap_of(const std::optional<int>& max_length) { return max_length.value_or(kNoLimit); }

TableSpec make_spec(const std::vector<int>& rows, const std::optional<std::vector<int>>& cols,
                    bool hollow, bool symmetric, const std::optional<int>& cap) {
    TableSpec spec;
    spec.row_margins = rows;
    spec.col_margins = cols ? *cols : rows;
    spec.hollow = hollow;
    spec.symmetric = symmetric;
    spec.entry_cap = cap;
    return spec;
}

SymMarginSpec make_sym_spec(const std::vector<std::vector<int>>& margins,
                            const std::optional<int>& n) {
    std::vector<Partition> parts = as_partitions(margins);
    int threshold = 0;
    for (const Partition& p : parts) threshold += 2 * p.length();
    return SymMarginSpec(std::move(parts), n.value_or(std::max(1, threshold)));
}

py::list partition_matrix_list(const PartitionMatrix& table) {
    py::list rows;
    for (int i = 0; i < table.rank(); ++i) {
        py::list row;
        for (int j = 0; j < table.rank(); ++j) row.append(parts_tuple(table.cell(i, j)));
        rows.append(row);
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_lrct, m) {
    m.doc() = "Tensor product multiplicities via sums over tables of partitions";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<OutsideStableRange>(m, "OutsideStableRangeError", PyExc_ValueError);

    m.def(
        "conjugate", [](const std::vector<int>& p) { return parts_tuple(as_partition(p).conjugate()); },
        py::arg("partition"), "Transpose of the Young diagram.");

    m.def(
        "combine",
        [](const std::vector<int>& alpha, const std::vector<int>& beta, int n) {
            std::vector<int> t = combine(as_partition(alpha), as_partition(beta), n);
            return py::tuple(py::cast(t));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("n"),
        "The GL_n weight tuple carrying (alpha, beta).");

    m.def(
        "split",
        [](const std::vector<int>& tuple) {
            GlWeight w = split(tuple);
            return py::make_tuple(parts_tuple(w.plus()), parts_tuple(w.minus()));
        },
        py::arg("tuple"), "Recover (plus, minus) from a weakly decreasing weight tuple.");

    m.def(
        "dual_weight",
        [](const std::vector<int>& tuple) {
            std::vector<int> t = as_weight(tuple).dual().to_tuple();
            return py::tuple(py::cast(t));
        },
        py::arg("tuple"), "Highest weight of the dual representation.");

    m.def(
        "lr_coefficient",
        [](const std::vector<int>& lam, const std::vector<int>& mu, const std::vector<int>& nu) {
            return to_py(lr_coefficient(as_partition(lam), as_partition(mu), as_partition(nu)));
        },
        py::arg("lam"), py::arg("mu"), py::arg("nu"), "Littlewood-Richardson coefficient.");

    m.def(
        "schur_product",
        [](const std::vector<int>& mu, const std::vector<int>& nu, std::optional<int> max_length) {
            return expansion_dict(schur_product(as_partition(mu), as_partition(nu), cap_of(max_length)));
        },
        py::arg("mu"), py::arg("nu"), py::arg("max_length") = py::none(),
        "Schur expansion of s_mu * s_nu as {shape: multiplicity}.");

    m.def(
        "pieri_row",
        [](const std::vector<int>& mu, int k, std::optional<int> max_length) {
            return expansion_dict(pieri_row(as_partition(mu), k, cap_of(max_length)));
        },
        py::arg("mu"), py::arg("k"), py::arg("max_length") = py::none());

    m.def(
        "pieri_column",
        [](const std::vector<int>& mu, int k, std::optional<int> max_length) {
            return expansion_dict(pieri_column(as_partition(mu), k, cap_of(max_length)));
        },
        py::arg("mu"), py::arg("k"), py::arg("max_length") = py::none());

    m.def(
        "multi_lr",
        [](const std::vector<int>& target, const std::vector<std::vector<int>>& factors) {
            return to_py(multi_lr(as_partition(target), as_partitions(factors)));
        },
        py::arg("target"), py::arg("factors"),
        "Coefficient of s_target in the product of the factors.");

    m.def(
        "count_tables",
        [](const std::vector<int>& rows, std::optional<std::vector<int>> cols, bool hollow,
           bool symmetric, std::optional<int> cap) {
            return to_py(count_tables(make_spec(rows, cols, hollow, symmetric, cap)));
        },
        py::arg("rows"), py::arg("cols") = py::none(), py::arg("hollow") = false,
        py::arg("symmetric") = false, py::arg("cap") = py::none());

    m.def(
        "enumerate_tables",
        [](const std::vector<int>& rows, std::optional<std::vector<int>> cols, bool hollow,
           bool symmetric, std::optional<int> cap) {
            py::list out;
            enumerate_tables(make_spec(rows, cols, hollow, symmetric, cap),
                             [&](const IntMatrix& t) { out.append(py::cast(t)); });
            return out;
        },
        py::arg("rows"), py::arg("cols") = py::none(), py::arg("hollow") = false,
        py::arg("symmetric") = false, py::arg("cap") = py::none());

    m.def("derangement_count", [](int r) { return to_py(derangement_count(r)); }, py::arg("r"));
    m.def("fpf_involution_count", [](int r) { return to_py(fpf_involution_count(r)); },
          py::arg("r"));

    m.def(
        "lrc_zero",
        [](const std::vector<std::vector<int>>& weights, int jobs) {
            return to_py(lrc_zero(MarginSpec(as_weights(weights)), jobs));
        },
        py::arg("weights"), py::arg("jobs") = 1,
        "Invariant multiplicity in the tensor product of GL_n weight tuples.");

    m.def(
        "lrc_general",
        [](const std::vector<int>& target, const std::vector<std::vector<int>>& weights, int jobs) {
            return to_py(lrc_general(as_weight(target), MarginSpec(as_weights(weights)), jobs));
        },
        py::arg("target"), py::arg("weights"), py::arg("jobs") = 1);

    m.def(
        "hom_dimension",
        [](const std::vector<std::vector<int>>& sources,
           const std::vector<std::vector<int>>& targets, int n, int jobs) {
            return to_py(hom_dimension(as_partitions(sources), as_partitions(targets), n, jobs));
        },
        py::arg("sources"), py::arg("targets"), py::arg("n"), py::arg("jobs") = 1);

    m.def(
        "lrc_tables",
        [](const std::vector<std::vector<int>>& weights, bool hollow) {
            MarginSpec margins(as_weights(weights));
            py::list out;
            enumerate_lrct(margins, hollow, [&](const PartitionMatrix& t, const BigInt& norm) {
                out.append(py::make_tuple(partition_matrix_list(t), to_py(norm)));
            });
            return out;
        },
        py::arg("weights"), py::arg("hollow") = true,
        "List of (cells, norm) for every nonzero-norm table.");

    m.def(
        "gl_stable_threshold",
        [](const std::vector<std::vector<int>>& weights) {
            return MarginSpec(as_weights(weights)).stable_threshold();
        },
        py::arg("weights"));

    m.def(
        "osp_invariant_dim",
        [](const std::vector<std::vector<int>>& margins, std::optional<int> n,
           const std::string& group, int jobs) {
            return to_py(osp_invariant_dim(make_sym_spec(margins, n), cli::parse_group(group), jobs));
        },
        py::arg("margins"), py::arg("n") = py::none(), py::arg("group") = "o",
        py::arg("jobs") = 1);

    m.def(
        "osp_tables",
        [](const std::vector<std::vector<int>>& margins, std::optional<int> n, bool hollow) {
            SymMarginSpec spec = make_sym_spec(margins, n);
            py::list out;
            enumerate_sym_lrct(spec, hollow, [&](const PartitionMatrix& t, const BigInt& norm) {
                out.append(py::make_tuple(partition_matrix_list(t), to_py(norm)));
            });
            return out;
        },
        py::arg("margins"), py::arg("n") = py::none(), py::arg("hollow") = true);

    m.def(
        "osp_stable_threshold",
        [](const std::vector<std::vector<int>>& margins) {
            int threshold = 0;
            for (const auto& p : as_partitions(margins)) threshold += 2 * p.length();
            return threshold;
        },
        py::arg("margins"));

    m.def(
        "oracle_gl_invariants",
        [](const std::vector<std::vector<int>>& weights) {
            return to_py(oracle_gl_invariants(MarginSpec(as_weights(weights))));
        },
        py::arg("weights"));

    m.def(
        "oracle_osp_invariants",
        [](const std::vector<std::vector<int>>& margins, std::optional<int> n) {
            return to_py(oracle_osp_invariants(make_sym_spec(margins, n)));
        },
        py::arg("margins"), py::arg("n") = py::none());

    m.def(
        "newell_littlewood_coefficient",
        [](const std::vector<int>& lam, const std::vector<int>& mu, const std::vector<int>& nu) {
            return to_py(newell_littlewood_coefficient(as_partition(lam), as_partition(mu),
                                                       as_partition(nu)));
        },
        py::arg("lam"), py::arg("mu"), py::arg("nu"));

    m.def("hook_identity_check", &hook_identity_check, py::arg("r"), py::arg("s"));
}
