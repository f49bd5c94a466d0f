// Python bindings for the main operations: coset machinery, counting,
// existence, witnesses, enumeration, codes and entropy. Ring elements cross
// the boundary as lists of field-element indices (constant term first).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "negacode/codes.hpp"
#include "negacode/cosets.hpp"
#include "negacode/experiment.hpp"
#include "negacode/selfdual.hpp"
#include "negacode/spectral.hpp"
#include "negacode/verify.hpp"

namespace py = pybind11;
using namespace negacode;

namespace {

FieldCtxPtr field_for_q(std::uint64_t q) {
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    std::uint32_t k = 0;
    std::uint64_t v = q;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    require(v == 1, Errc::CompositeCharacteristic, "q is not a prime power");
    return FieldCtx::make(p, k, 0, std::max<std::uint64_t>(kDefaultFieldBound, q));
}

RingCtxPtr nega_ring(std::uint64_t q, std::uint32_t n) {
    return RingCtx::make(field_for_q(q), n, -1);
}

RingElem elem_from(const RingCtxPtr& ring, const std::vector<std::uint64_t>& coeffs) {
    return RingElem::from_indices(ring.get(), coeffs);
}

}  // namespace

PYBIND11_MODULE(negacode, mod) {
    mod.doc() = "self-dual 2-quasi negacyclic code laboratory";

    py::register_exception<Error>(mod, "NegacodeError");

    mod.def("mu_q", &mu_q, py::arg("q"),
            "Largest l with q = +-1 mod 2^l (q odd, q >= 3).");
    mod.def("unit_order", &unit_order, py::arg("modulus"), py::arg("a"));
    mod.def("ord_two_power", &ord_two_power, py::arg("q"), py::arg("ell"));
    mod.def("minus_one_in_q_subgroup", &minus_one_in_q_subgroup, py::arg("q"), py::arg("ell"));

    mod.def(
        "q_orbits",
        [](std::uint32_t n, std::uint64_t q) {
            OrbitTable t = q_orbits(n, q);
            py::dict d;
            d["n"] = t.n;
            d["q"] = t.q;
            d["ord_q"] = t.ord_q;
            d["orbits"] = t.orbits;
            d["pairing"] = t.pairing;
            return d;
        },
        py::arg("n"), py::arg("q"));

    mod.def("count_selfdual", &count_selfdual, py::arg("q"), py::arg("n"),
            "Closed-form |D(A,*)| for n = 2^m.");
    mod.def("selfdual_exists", &existence_predicate, py::arg("q"), py::arg("n"));

    mod.def(
        "construct_witness",
        [](std::uint64_t q, std::uint32_t n) -> py::object {
            auto w = construct_witness(q, n);
            if (!w) return py::none();
            py::dict d;
            d["coeffs"] = w->g.to_indices();
            d["provenance"] = provenance_name(w->provenance);
            return d;
        },
        py::arg("q"), py::arg("n"));

    mod.def(
        "is_selfdual_generator",
        [](std::uint64_t q, std::uint32_t n, const std::vector<std::uint64_t>& coeffs) {
            return is_selfdual_generator(elem_from(nega_ring(q, n), coeffs));
        },
        py::arg("q"), py::arg("n"), py::arg("coeffs"));

    mod.def(
        "enumerate_selfdual",
        [](std::uint64_t q, std::uint32_t n, std::uint64_t cap) {
            auto ring = nega_ring(q, n);
            std::vector<std::vector<std::uint64_t>> out;
            try {
                SpectralData sd = spectral_decomposition(ring);
                for (const auto& g : enumerate_selfdual(sd, cap)) out.push_back(g.to_indices());
            } catch (const Error& e) {
                if (e.code() != Errc::NotSemisimple) throw;
                for (const auto& g : scan_selfdual(ring, cap)) out.push_back(g.to_indices());
            }
            return out;
        },
        py::arg("q"), py::arg("n"), py::arg("cap") = std::uint64_t{1} << 20);

    mod.def(
        "code_from_pair",
        [](std::uint64_t q, std::uint32_t n, const std::vector<std::uint64_t>& a,
           const std::vector<std::uint64_t>& b) {
            auto ring = nega_ring(q, n);
            QuasiCode c = code_from_pair(elem_from(ring, a), elem_from(ring, b));
            std::vector<std::vector<std::uint64_t>> rows;
            for (const auto& row : c.rows) {
                std::vector<std::uint64_t> r;
                for (const auto& e : row) r.push_back(c.ctx->field()->to_index(e));
                rows.push_back(std::move(r));
            }
            py::dict d;
            d["dimension"] = c.dim();
            d["length"] = c.length();
            d["rows"] = rows;
            d["self_dual"] = is_self_dual(c);
            return d;
        },
        py::arg("q"), py::arg("n"), py::arg("a"), py::arg("b"));

    mod.def(
        "min_weight",
        [](std::uint64_t q, std::uint32_t n, const std::vector<std::uint64_t>& a,
           const std::vector<std::uint64_t>& b, std::uint64_t budget) {
            auto ring = nega_ring(q, n);
            QuasiCode c = code_from_pair(elem_from(ring, a), elem_from(ring, b));
            WeightReport rep = min_weight(c, budget, false, 0);
            py::dict d;
            d["min_weight"] = rep.min_weight;
            d["relative"] = rep.relative.to_double();
            d["rate"] = rep.rate.to_double();
            d["exhaustive"] = rep.exhaustive;
            d["enumerated"] = rep.enumerated;
            return d;
        },
        py::arg("q"), py::arg("n"), py::arg("a"), py::arg("b"),
        py::arg("budget") = std::uint64_t{1} << 20);

    mod.def(
        "entropy",
        [](std::int64_t num, std::int64_t den, std::uint64_t q) {
            return entropy_hq(Rational(num, den), q);
        },
        py::arg("num"), py::arg("den"), py::arg("q"),
        "q-ary entropy h_q(num/den).");

    mod.def(
        "verify",
        [](std::uint64_t q, std::uint32_t max_m) {
            VerifyConfig cfg;
            cfg.q = q;
            cfg.max_m = max_m;
            auto results = run_lemma_checks(cfg);
            py::list out;
            for (const auto& r : results) {
                py::dict d;
                d["name"] = r.name;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("q") = 3, py::arg("max_m") = 3);
}
