#include "nonassoc/json_io.hpp"

#include "nonassoc/parse.hpp"

namespace nonassoc {

ordered_json expr_to_json(const Expr& e) {
    ordered_json terms = ordered_json::array();
    for (const auto& [t, c] : e.terms())
        terms.push_back({{"coeff", c.str()}, {"tree", t.key()}});
    return {{"terms", std::move(terms)}};
}

ordered_json element_to_json(const Element& e) {
    ordered_json coeffs = ordered_json::array();
    for (Eigen::Index k = 0; k < e.coeffs().size(); ++k)
        coeffs.push_back(e.coeffs()[k].str());
    return {{"coeffs", std::move(coeffs)}, {"text", e.str()}};
}

ordered_json algebra_to_json(const Algebra& a) {
    ordered_json j;
    j["name"] = a.name();
    j["dim"] = a.dim();
    if (a.cd_constructed() || a.dim() == 1)
        j["gammas"] = a.gammas();
    ordered_json table = ordered_json::array();
    for (int i = 0; i < a.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k < a.dim(); ++k) {
            ordered_json cell = ordered_json::array();
            const QVec& v = a.basis_product(i, k);
            for (Eigen::Index c = 0; c < v.size(); ++c)
                cell.push_back(v[c].str());
            row.push_back(std::move(cell));
        }
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    if (a.has_involution())
        j["involution"] = a.involution_signs();
    return j;
}

namespace {

Rational coeff_from_json(const ordered_json& v) {
    if (v.is_number_integer())
        return Rational(v.get<long long>());
    if (v.is_string())
        return Rational::from_string(v.get<std::string>());
    throw Error("algebra file: coefficients must be integers or rational strings");
}

} // namespace

AlgebraPtr algebra_from_json(const ordered_json& j) {
    if (!j.is_object())
        throw Error("algebra file: expected a JSON object");
    std::string name = j.value("name", std::string());
    std::vector<int> involution;
    if (j.contains("involution")) {
        for (const auto& s : j.at("involution"))
            involution.push_back(s.get<int>());
    }

    AlgebraPtr from_gammas;
    if (j.contains("gammas")) {
        std::vector<int> gammas;
        for (const auto& g : j.at("gammas"))
            gammas.push_back(g.get<int>());
        for (int g : gammas)
            if (g != 1 && g != -1)
                throw Error("algebra file: gammas must be +1 or -1");
        from_gammas = Algebra::from_gammas(gammas, name);
        if (!involution.empty() &&
            involution != from_gammas->involution_signs())
            throw Error("algebra file: involution does not match the Cayley-Dickson one");
    }

    AlgebraPtr from_table;
    if (j.contains("table")) {
        const auto& tj = j.at("table");
        std::vector<std::vector<QVec>> table;
        const int d = static_cast<int>(tj.size());
        for (const auto& row : tj) {
            if (static_cast<int>(row.size()) != d)
                throw Error("algebra file: table is not square");
            std::vector<QVec> out_row;
            for (const auto& cell : row) {
                if (static_cast<int>(cell.size()) != d)
                    throw Error("algebra file: table entry has wrong length");
                QVec v(d);
                for (int k = 0; k < d; ++k)
                    v[k] = coeff_from_json(cell[static_cast<std::size_t>(k)]);
                out_row.push_back(std::move(v));
            }
            table.push_back(std::move(out_row));
        }
        from_table = Algebra::from_table(name, std::move(table), involution);
    }

    AlgebraPtr result = from_gammas ? from_gammas : from_table;
    if (!result)
        throw Error("algebra file: needs \"gammas\" or \"table\"");
    if (from_gammas && from_table && !same_algebra(*from_gammas, *from_table))
        throw Error("algebra file: gammas and table disagree");
    if (j.contains("dim") && j.at("dim").get<int>() != result->dim())
        throw Error("algebra file: declared dim " + std::to_string(j.at("dim").get<int>()) +
                    " does not match actual dim " + std::to_string(result->dim()));
    return result;
}

ordered_json commutator_to_json(const CommutatorResult& r) {
    ordered_json atoms = ordered_json::array();
    for (const AssocAtom& a : r.associators) {
        ordered_json slots = ordered_json::array();
        for (const Expr& s : a.slots)
            slots.push_back(print(s));
        atoms.push_back({{"sign", a.sign == Sign::minus ? "-" : "+"},
                         {"slots", std::move(slots)},
                         {"label", a.label}});
    }
    return {{"raw", expr_to_json(r.raw)},
            {"normal", expr_to_json(r.normal)},
            {"associators", std::move(atoms)}};
}

ordered_json report_to_json(const ObservabilityReport& r) {
    ordered_json j;
    j["observable"] = r.observable;
    j["closure_dim"] = r.closure.dim();
    if (r.witness)
        j["witness"] = {(*r.witness)[0], (*r.witness)[1], (*r.witness)[2]};
    else
        j["witness"] = nullptr;
    if (r.involution_closed)
        j["involution_closed"] = *r.involution_closed;
    return j;
}

ordered_json equation_to_json(const DerivedEquation& eq) {
    ordered_json free;
    free["a"] = eq.color;
    free["mu"] = eq.mu;
    ordered_json j;
    j["free_indices"] = std::move(free);
    j["terms"] = expr_to_json(eq.lhs)["terms"];
    return j;
}

} // namespace nonassoc
