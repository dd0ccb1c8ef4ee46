#include "rhoslice/encoding.hpp"

namespace rhoslice {

json laurent_to_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(json::array({e, c.get_str()}));
    return out;
}

LaurentPoly laurent_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("laurent encoding: expected array");
    LaurentPoly p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2) {
            throw std::invalid_argument("laurent encoding: expected [exponent, coefficient]");
        }
        const long e = term[0].get<long>();
        Int c;
        if (term[1].is_string()) {
            if (c.set_str(term[1].get<std::string>(), 10) != 0) {
                throw std::invalid_argument("laurent encoding: bad coefficient string");
            }
        } else if (term[1].is_number_integer()) {
            c = Int(term[1].get<long>());
        } else {
            throw std::invalid_argument("laurent encoding: coefficient must be a string");
        }
        p.set_coeff(e, p.coeff(e) + c);
    }
    return p;
}

json herm_matrix_to_json(const HermMatrix& u) {
    json entries = json::array();
    for (const auto& p : u.entries()) entries.push_back(laurent_to_json(p));
    json generator;
    if (u.context().order) {
        generator["order"] = *u.context().order;
    } else {
        generator["order"] = "infinite";
    }
    generator["abelianization_image"] = u.context().abelianization_image;
    return json{{"size", u.size()}, {"entries", entries}, {"generator", generator}};
}

HermMatrix herm_matrix_from_json(const json& j) {
    const std::size_t n = j.at("size").get<std::size_t>();
    std::vector<LaurentPoly> entries;
    for (const auto& e : j.at("entries")) entries.push_back(laurent_from_json(e));
    CyclicEmbedding ctx;
    if (j.contains("generator")) {
        const json& g = j.at("generator");
        if (g.contains("order")) {
            if (g.at("order").is_string()) {
                if (g.at("order").get<std::string>() != "infinite") {
                    throw std::invalid_argument("generator order: expected \"infinite\" or an integer");
                }
            } else {
                ctx.order = g.at("order").get<unsigned long>();
            }
        }
        if (g.contains("abelianization_image")) {
            ctx.abelianization_image = g.at("abelianization_image").get<long>();
        }
        if (g.contains("name")) ctx.generator_name = g.at("name").get<std::string>();
    }
    return HermMatrix(n, std::move(entries), std::move(ctx));
}

json presentation_to_json(const AlexanderPresentation& a) {
    json entries = json::array();
    for (const auto& p : a.entries) entries.push_back(laurent_to_json(p));
    return json{{"size", a.size}, {"entries", entries}};
}

AlexanderPresentation presentation_from_json(const json& j) {
    AlexanderPresentation a;
    a.size = j.at("size").get<std::size_t>();
    for (const auto& e : j.at("entries")) a.entries.push_back(laurent_from_json(e));
    if (a.entries.size() != a.size * a.size) {
        throw std::invalid_argument("presentation encoding: entries do not match size");
    }
    return a;
}

json form_to_json(const BlanchfieldForm& form) {
    json summands = json::array();
    for (const auto& p : form.summands()) summands.push_back(laurent_to_json(p));
    json gram = json::array();
    for (std::size_t i = 0; i < form.summand_count(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < form.summand_count(); ++k) {
            row.push_back(json{{"num", laurent_to_json(form.gram(i, k).num)},
                               {"den", laurent_to_json(form.gram(i, k).den)}});
        }
        gram.push_back(row);
    }
    return json{{"summands", summands}, {"gram", gram}};
}

BlanchfieldForm form_from_json(const json& j) {
    std::vector<LaurentPoly> summands;
    for (const auto& s : j.at("summands")) summands.push_back(laurent_from_json(s));
    std::vector<QZmodZZ> gram;
    for (const auto& row : j.at("gram")) {
        for (const auto& v : row) {
            gram.emplace_back(laurent_from_json(v.at("num")), laurent_from_json(v.at("den")));
        }
    }
    return BlanchfieldForm(std::move(summands), std::move(gram));
}

json submodule_to_json(const Submodule& s) {
    json gens = json::array();
    for (std::size_t j = 0; j < s.generators.cols(); ++j) {
        json col = json::array();
        for (std::size_t i = 0; i < s.generators.rows(); ++i) {
            col.push_back(s.generators.at(i, j).get_str());
        }
        gens.push_back(col);
    }
    return json{{"generators", gens}};
}

IntMatrix submodule_generators_from_json(const json& j, std::size_t ambient_dim) {
    const json& gens = j.at("generators");
    IntMatrix m(ambient_dim, gens.size());
    std::size_t col = 0;
    for (const auto& g : gens) {
        if (g.size() != ambient_dim) {
            throw std::invalid_argument("submodule encoding: generator has wrong dimension");
        }
        for (std::size_t i = 0; i < ambient_dim; ++i) {
            if (g[i].is_string()) {
                Int v;
                if (v.set_str(g[i].get<std::string>(), 10) != 0) {
                    throw std::invalid_argument("submodule encoding: bad integer string");
                }
                m.at(i, col) = v;
            } else {
                m.at(i, col) = Int(g[i].get<long>());
            }
        }
        ++col;
    }
    return m;
}

json metabelian_ctx_to_json(const MetabelianGroupCtx& ctx) {
    return json{{"p", laurent_to_json(ctx.relation())}};
}

MetabelianGroupCtx metabelian_ctx_from_json(const json& j) {
    return MetabelianGroupCtx(laurent_from_json(j.at("p")));
}

json metabelian_element_to_json(const MetabelianElement& e) {
    json v = json::array();
    for (const Int& x : e.v) v.push_back(x.get_str());
    return json{{"n", e.n}, {"v", v}};
}

MetabelianElement metabelian_element_from_json(const json& j) {
    MetabelianElement e;
    e.n = j.at("n").get<long>();
    for (const auto& x : j.at("v")) {
        if (x.is_string()) {
            Int v;
            if (v.set_str(x.get<std::string>(), 10) != 0) {
                throw std::invalid_argument("element encoding: bad integer string");
            }
            e.v.push_back(v);
        } else {
            e.v.emplace_back(x.get<long>());
        }
    }
    return e;
}

json rho_result_to_json(const RhoResult& r) {
    json out;
    out["copies"] = r.copies;
    if (r.is_exact()) {
        out["kind"] = "exact";
        out["value"] = rational_to_string(r.exact_value());
    } else {
        const auto& c = std::get<RhoResult::Certified>(r.value);
        out["kind"] = "certified";
        out["lo"] = rational_to_string(c.lo);
        out["hi"] = rational_to_string(c.hi);
    }
    if (r.fell_back_to_numeric) out["fell_back_to_numeric"] = true;
    return out;
}

json cover_order_to_json(const CoverOrderResult& r) {
    json out;
    out["r"] = r.r;
    if (r.infinite()) {
        out["order"] = "infinite";
    } else {
        out["order"] = r.order->get_str();
    }
    return out;
}

namespace {

json livingston_row_to_json(const LivingstonRow& row) {
    json out = cover_order_to_json(row.order);
    out["prime_power"] = row.prime_power;
    out["vanishes"] = row.vanishes;
    if (!row.prime_power) out["note"] = "outside theorem hypothesis";
    return out;
}

}  // namespace

json livingston_report_to_json(const LivingstonReport& r) {
    json factors = json::array();
    for (const auto& f : r.split.factors) {
        factors.push_back(json{{"m", f.m}, {"multiplicity", f.multiplicity}});
    }
    json rows = json::array();
    for (const auto& row : r.rows) rows.push_back(livingston_row_to_json(row));
    return json{{"cyclotomic_factors", factors},
                {"remainder", laurent_to_json(r.split.remainder)},
                {"remainder_is_unit", r.remainder_is_unit},
                {"all_factors_three_primes", r.all_factors_three_primes},
                {"criterion_applies", r.criterion_applies},
                {"covers", rows}};
}

json ruberman_report_to_json(const RubermanReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) rows.push_back(livingston_row_to_json(row));
    return json{{"r_max", r.r_max},
                {"covers", rows},
                {"failing", r.failing_rs},
                {"inapplicable", r.inapplicable}};
}

json signature_function_to_json(const SignatureFunction& f) {
    json breakpoints = json::array();
    for (const auto& bp : f.breakpoints) {
        json b;
        b["interval"] = json::array(
            {rational_to_string(bp.abscissa.lo), rational_to_string(bp.abscissa.hi)});
        b["multiplicity"] = bp.abscissa.multiplicity;
        if (bp.exact_cos_of) b["exact_cos_of"] = rational_to_string(*bp.exact_cos_of);
        if (bp.singular_value) b["singular_value"] = *bp.singular_value;
        breakpoints.push_back(b);
    }
    return json{{"breakpoints", breakpoints},
                {"arc_values", f.arc_values},
                {"value_at_one", f.value_at_one},
                {"value_at_minus_one", f.value_at_minus_one},
                {"singular_at_one", f.singular_at_one},
                {"singular_at_minus_one", f.singular_at_minus_one},
                {"all_breakpoints_cyclotomic", f.all_breakpoints_cyclotomic}};
}

json obstruction_report_to_json(const ObstructionReport& r) {
    json checks = json::array();
    for (const auto& c : r.hypothesis_checks) {
        checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    json rows = json::array();
    for (const auto& row : r.rho_values) {
        json jr;
        jr["representation"] = row.rep.describe();
        if (row.rep.induced_order) {
            jr["induced_order"] = *row.rep.induced_order;
        } else {
            jr["induced_order"] = "infinite";
        }
        if (row.rho) jr["rho"] = rho_result_to_json(*row.rho);
        jr["nonzero"] = row.nonzero;
        if (!row.note.empty()) jr["note"] = row.note;
        rows.push_back(jr);
    }
    return json{{"hypothesis_checks", checks},
                {"hypotheses_ok", r.hypotheses_ok},
                {"irreducibility", r.irreducibility},
                {"rho_values", rows},
                {"verdict", to_string(r.verdict)}};
}

json double_slice_verdict_to_json(const DoubleSliceVerdict& v) {
    const auto check_to_json = [](const LagrangianCheck& c) {
        json out{{"isotropic", c.isotropic},
                 {"equals_orthogonal", c.equals_orthogonal},
                 {"quotient_torsion_free", c.quotient_torsion_free},
                 {"lagrangian", c.lagrangian}};
        if (!c.failing_condition.empty()) out["failing_condition"] = c.failing_condition;
        return out;
    };
    return json{{"first", check_to_json(v.first)},
                {"second", check_to_json(v.second)},
                {"complementary", v.complementary},
                {"failures", v.failures},
                {"verdict", v.algebraically_doubly_slice ? "ALGEBRAICALLY_DOUBLY_SLICE"
                                                         : "NOT_CERTIFIED"}};
}

}  // namespace rhoslice
