#include "findet/json_io.hpp"

namespace findet {

json field_to_json(const Field& f) {
    if (f.is_rationals()) return json("Q");
    return json{{"Fp", f.characteristic()}};
}

Field field_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return Field::rationals();
        throw std::invalid_argument("unknown field literal: " + j.get<std::string>());
    }
    if (j.is_object() && j.contains("Fp"))
        return Field::prime_field(j.at("Fp").get<std::int64_t>());
    throw std::invalid_argument("field must be \"Q\" or {\"Fp\": p}");
}

json elem_to_json(const FieldElem& e) {
    if (e.field().is_prime_field()) return json(e.residue());
    return json(e.to_string());
}

FieldElem elem_from_json(const json& j, const Field& f) {
    if (j.is_number_integer()) return FieldElem::from_int(f, j.get<long long>());
    if (j.is_string()) return FieldElem::parse(f, j.get<std::string>());
    throw std::invalid_argument("field element must be an integer or a \"n/d\" string");
}

json poly_to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json exps = json::array();
        for (std::size_t v = 0; v < m.nvars(); ++v) exps.push_back(m.exponent(v));
        terms.push_back(json::array({elem_to_json(c), exps}));
    }
    return terms;
}

Poly poly_from_json(const json& j, const Field& f, std::size_t nvars) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a term list");
    Poly p(f, nvars);
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2)
            throw std::invalid_argument("polynomial term must be [coeff, exponents]");
        const json& exps = t.at(1);
        if (!exps.is_array() || exps.size() != nvars)
            throw std::invalid_argument("term needs " + std::to_string(nvars) + " exponents");
        std::vector<std::uint32_t> e;
        e.reserve(nvars);
        for (const auto& x : exps) {
            long long v = x.get<long long>();
            if (v < 0) throw std::invalid_argument("negative exponent");
            e.push_back(static_cast<std::uint32_t>(v));
        }
        p.add_term(Monomial(std::move(e)), elem_from_json(t.at(0), f));
    }
    return p;
}

json matrix_to_json(const PolyMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"m", m.rows()},
                {"n", m.cols()},
                {"s", m.nvars()},
                {"field", field_to_json(m.field())},
                {"entries", std::move(entries)}};
}

PolyMatrix matrix_from_json(const json& j) {
    const json& obj = (j.is_object() && j.contains("matrix")) ? j.at("matrix") : j;
    if (!obj.is_object()) throw std::invalid_argument("matrix must be a JSON object");
    for (const char* key : {"m", "n", "s", "field", "entries"})
        if (!obj.contains(key))
            throw std::invalid_argument(std::string("matrix is missing \"") + key + "\"");
    std::size_t m = obj.at("m").get<std::size_t>();
    std::size_t n = obj.at("n").get<std::size_t>();
    std::size_t s = obj.at("s").get<std::size_t>();
    Field f = field_from_json(obj.at("field"));
    const json& entries = obj.at("entries");
    if (!entries.is_array() || entries.size() != m)
        throw std::invalid_argument("entries must be an m-row grid");
    PolyMatrix out(m, n, f, s);
    for (std::size_t i = 0; i < m; ++i) {
        const json& row = entries.at(i);
        if (!row.is_array() || row.size() != n)
            throw std::invalid_argument("entries row " + std::to_string(i + 1) +
                                        " must have n polynomials");
        for (std::size_t jj = 0; jj < n; ++jj) out.set(i, jj, poly_from_json(row.at(jj), f, s));
    }
    return out;
}

json codim_to_json(const CodimResult& r) {
    json out;
    out["profile"] = r.profile;
    if (r.is_finite()) {
        out["status"] = "finite";
        out["codim"] = r.codim;
        out["stab_degree"] = r.stab_degree;
    } else {
        out["status"] = "inconclusive";
        out["codim_lower_bound"] = r.codim;
        out["max_degree"] = r.stab_degree;
    }
    return out;
}

json report_to_json(const DeterminacyReport& r) {
    json bounds = json::object();
    if (r.bound_i) bounds["i"] = *r.bound_i;
    if (r.bound_ii) bounds["ii"] = *r.bound_ii;
    if (r.bound_iii) bounds["iii"] = *r.bound_iii;
    json out{{"verdict", r.verdict == DeterminacyReport::Verdict::FinitelyDetermined
                             ? "finitely_determined"
                             : "not_determined_up_to_cap"},
             {"ord", r.ord_a},
             {"d", codim_to_json(r.d)},
             {"d_e", codim_to_json(r.d_e)},
             {"minors_ideal_codim", codim_to_json(r.ideal)},
             {"bounds", std::move(bounds)},
             {"consistent", r.consistent},
             {"field", field_to_json(r.field)},
             {"m", r.m},
             {"n", r.n},
             {"s", r.s},
             {"max_degree", r.degree_cap}};
    if (r.k_min) out["k_min"] = *r.k_min;
    return out;
}

json scan_to_json(const ScanResult& r) {
    json ts = json::array();
    for (const auto& t : r.t_values) ts.push_back(elem_to_json(t));
    json des = json::array();
    for (const auto& d : r.d_e_values) des.push_back(codim_to_json(d));
    json sat = json::array();
    for (auto i : r.satisfied) sat.push_back(elem_to_json(r.t_values[i]));
    return json{{"t_values", std::move(ts)},
                {"d_e_values", std::move(des)},
                {"d_e_at_zero", codim_to_json(r.d_e_at_zero)},
                {"satisfied_t", std::move(sat)},
                {"satisfied_indices", r.satisfied}};
}

json group_element_to_json(const GroupElement& g) {
    json images = json::array();
    for (const Poly& phi : g.phi.images()) images.push_back(poly_to_json(phi));
    return json{{"U", matrix_to_json(g.u)}, {"V", matrix_to_json(g.v)}, {"phi", images}};
}

GroupElement group_element_from_json(const json& j) {
    PolyMatrix u = matrix_from_json(j.at("U"));
    PolyMatrix v = matrix_from_json(j.at("V"));
    const json& phis = j.at("phi");
    std::vector<Poly> images;
    for (const auto& p : phis) images.push_back(poly_from_json(p, u.field(), u.nvars()));
    return GroupElement(std::move(u), std::move(v), LocalAutomorphism(std::move(images)));
}

}  // namespace findet
