/*
 * rhoslice_cli.cpp
 * ----------------
 * Command-line front end. Subcommands:
 *
 *   rho              rho invariant of a Hermitian matrix file
 *   fox              branched-cover homology orders of a presentation
 *   livingston       cyclotomic vanishing criterion for an Alexander polynomial
 *   blanchfield      lagrangian / double-sliceness checks for a linking form
 *   reproduce-paper  end-to-end worked example with golden self-checks
 *
 * Exit codes: 0 success, 1 malformed input, 2 uncertified computation
 * (precision exhausted or a golden self-check mismatch).
 */
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rhoslice/encoding.hpp"

namespace {

using namespace rhoslice;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUncertified = 2;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw input_error("malformed json in " + path + ": " + e.what());
    }
    return j;
}

std::string rho_line(const RhoResult& r) {
    std::ostringstream os;
    if (r.is_exact()) {
        os << "rho = " << rational_to_string(r.exact_value()) << " (exact)";
    } else {
        const auto& c = std::get<RhoResult::Certified>(r.value);
        os << "rho in [" << rational_to_string(c.lo) << ", " << rational_to_string(c.hi)
           << "] (certified)";
    }
    if (r.fell_back_to_numeric) os << " [non-cyclotomic breakpoint: numeric fallback]";
    return os.str();
}

void emit(const json& doc, const std::string& format, const std::string& text) {
    if (format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

int cmd_rho(const std::string& matrix_path, const std::string& mode, const std::string& tol_text,
            unsigned long copies, long max_bits, const std::string& format) {
    const HermMatrix u = herm_matrix_from_json(load_json(matrix_path));
    SignPolicy policy;
    policy.max_bits = max_bits;
    const Rat tol = parse_rational(tol_text);

    RhoResult r;
    if (u.context().order) {
        r = rho_finite(u, *u.context().order, copies, policy);
    } else {
        const RhoMode m = mode == "numeric" ? RhoMode::numeric : RhoMode::exact_if_possible;
        r = rho_integral(u, copies, m, tol, policy);
    }
    json doc;
    doc["rho"] = rho_result_to_json(r);
    doc["generator_order"] =
        u.context().order ? json(*u.context().order) : json("infinite");
    emit(doc, format, rho_line(r) + "\n");
    return kExitOk;
}

int cmd_fox(const std::string& presentation_path, const std::vector<unsigned long>& rs,
            unsigned long bound, const std::string& format) {
    const AlexanderPresentation a = presentation_from_json(load_json(presentation_path));
    if (rs.empty()) throw input_error("fox: at least one cover index --r is required");
    json rows = json::array();
    std::ostringstream text;
    for (unsigned long r : rs) {
        const CoverOrderResult fox = fox_order(a, r);
        json row = cover_order_to_json(fox);
        text << "r = " << r << ": order ";
        text << (fox.infinite() ? std::string("infinite") : fox.order->get_str());
        if (r * a.size <= bound) {
            const CoverOrderResult alt = block_circulant_order(a, r, bound);
            const bool match = fox.infinite() == alt.infinite() &&
                               (fox.infinite() || *fox.order == *alt.order);
            row["block_circulant_agrees"] = match;
            text << (match ? " (block-circulant oracle agrees)"
                           : " (MISMATCH with block-circulant oracle)");
        }
        rows.push_back(row);
        text << "\n";
    }
    emit(json{{"covers", rows}}, format, text.str());
    return kExitOk;
}

int cmd_livingston(const std::string& delta_path, std::vector<unsigned long> covers,
                   unsigned long r_max, const std::string& format) {
    const LaurentPoly delta = laurent_from_json(load_json(delta_path));
    if (covers.empty() && r_max == 0) {
        throw input_error("livingston: provide --covers or --r-max");
    }
    if (r_max > 0) {
        for (unsigned long r : prime_powers_up_to(r_max)) covers.push_back(r);
    }
    const LivingstonReport report = livingston_check(delta, covers);
    std::ostringstream text;
    text << "criterion " << (report.criterion_applies ? "applies" : "does not apply") << "\n";
    for (const auto& row : report.rows) {
        text << "r = " << row.r << ": order "
             << (row.order.infinite() ? std::string("infinite") : row.order.order->get_str());
        if (!row.prime_power) text << " (outside theorem hypothesis)";
        text << "\n";
    }
    emit(livingston_report_to_json(report), format, text.str());
    return kExitOk;
}

int cmd_blanchfield(const std::string& form_path, const std::string& l1_path,
                    const std::string& l2_path, const std::string& format) {
    const BlanchfieldForm form = form_from_json(load_json(form_path));
    const Submodule l1 = Submodule::from_generators(
        form, submodule_generators_from_json(load_json(l1_path), form.lattice_rank()));
    if (l2_path.empty()) {
        const LagrangianCheck check = is_lagrangian(form, l1);
        std::ostringstream text;
        text << (check.lagrangian ? "lagrangian\n"
                                  : "not a lagrangian: " + check.failing_condition + "\n");
        json doc{{"lagrangian", check.lagrangian}};
        if (!check.failing_condition.empty()) doc["failing_condition"] = check.failing_condition;
        emit(doc, format, text.str());
        return kExitOk;
    }
    const Submodule l2 = Submodule::from_generators(
        form, submodule_generators_from_json(load_json(l2_path), form.lattice_rank()));
    const DoubleSliceVerdict v = algebraic_double_slice_check(form, l1, l2);
    std::ostringstream text;
    if (v.algebraically_doubly_slice) {
        text << "ALGEBRAICALLY_DOUBLY_SLICE\n";
    } else {
        text << "NOT_CERTIFIED\n";
        for (const auto& f : v.failures) text << "  " << f << "\n";
    }
    emit(double_slice_verdict_to_json(v), format, text.str());
    return kExitOk;
}

// The bundled worked example: the 2x2 matrix with diagonal u - 2 + 1/u over
// an infinite-order commutator generator. Every printed value is checked
// against its expected exact counterpart; a mismatch exits with code 2.
int cmd_reproduce_paper(unsigned long copies, const std::vector<unsigned long>& primes,
                        long max_bits, const std::string& format) {
    SignPolicy policy;
    policy.max_bits = max_bits;
    const HermMatrix u = model_matrix();
    bool ok = true;
    std::ostringstream text;
    json doc;

    const auto check = [&](const std::string& name, bool passed, const std::string& detail) {
        ok &= passed;
        text << (passed ? "[PASS] " : "[FAIL] ") << name << ": " << detail << "\n";
        doc["checks"].push_back(json{{"name", name}, {"passed", passed}, {"detail", detail}});
    };

    // Evenness with the expected witness.
    const auto witness = is_even(u);
    const LaurentPoly vdiag = LaurentPoly::var() - LaurentPoly::one();
    const bool witness_ok = witness && witness->v[0] == vdiag && witness->v[3] == vdiag &&
                            witness->v[1] == LaurentPoly::one() && witness->v[2].is_zero();
    check("even", witness_ok, "U = V + involute(V)^T with V diagonal u - 1");

    // Abelianization (g -> 1) is the standard hyperbolic matrix.
    const bool hyperbolic_ok = zz_nonsingular(u) &&
                               u.at(0, 0).substitute_power(0).is_zero() &&
                               u.at(0, 1).substitute_power(0).is_one();
    check("zz_nonsingular", hyperbolic_ok, "abelianized matrix is hyperbolic, determinant -1");

    const int aug = augmentation_signature(u, policy);
    check("augmentation_signature", aug == 0, "signature at the augmentation is " + std::to_string(aug));

    // Determinant on the circle factors as (2x - 1)(2x - 3).
    const RealPoly expected_det({Rat(3), Rat(-8), Rat(4)});
    const SignatureFunction sf = signature_function(u, policy);
    check("determinant_factorization", sf.det_on_circle == expected_det,
          "chebyshev reduction of det is " + sf.det_on_circle.to_string());

    const bool breakpoint_ok = sf.breakpoints.size() == 1 && sf.breakpoints[0].exact_cos_of &&
                               *sf.breakpoints[0].exact_cos_of == Rat(1, 6);
    check("breakpoint", breakpoint_ok, "unique breakpoint x = 1/2 = cos(2 pi / 6)");

    const bool arcs_ok = sf.arc_values == std::vector<int>{0, -2} && sf.value_at_one == 0 &&
                         sf.value_at_minus_one == -2 && sf.breakpoints.size() == 1 &&
                         sf.breakpoints[0].singular_value == -1;
    check("arc_signatures", arcs_ok, "arc values [0, -2]; singular value -1; endpoints 0 and -2");

    const RhoResult rho = rho_integral(u, copies, RhoMode::exact_if_possible, Rat(1, 1000000000),
                                       policy);
    const Rat expected_rho = rat(Int(-4), Int(3) * Int(copies));
    check("rho_exact", rho.is_exact() && rho.exact_value() == expected_rho,
          rho_line(rho) + (copies != 1 ? " [non-standard normalization copies=" +
                                             std::to_string(copies) + "]"
                                       : ""));
    doc["rho"] = rho_result_to_json(rho);

    // Finite-order cross-check at k = 3.
    const RhoResult rho3 = rho_finite(u, 3, copies, policy);
    check("rho_finite_3", rho3.exact_value() == expected_rho, rho_line(rho3));

    // Cyclotomic sweep: indices divisible by three distinct primes give
    // trivial prime-power branched-cover homology.
    for (unsigned long m : {30UL, 42UL, 60UL, 105UL}) {
        const RubermanReport rr = ruberman_inapplicability(cyclotomic_poly(m), 9);
        std::ostringstream detail;
        detail << "Phi_" << m << ": prime-power covers r <= 9 all have order 1";
        check("cover_sweep_m" + std::to_string(m), rr.inapplicable, detail.str());
        doc["cover_sweeps"].push_back(ruberman_report_to_json(rr));
    }

    // Full obstruction report for the Phi_30 module.
    const ObstructionReport report = doubly_slice_report(u, cyclotomic_poly(30), primes, copies,
                                                         policy);
    check("verdict", report.verdict == ObstructionVerdict::not_doubly_slice,
          to_string(report.verdict) +
              " (index 30 = 2*3*5 is divisible by three distinct primes)");
    doc["obstruction_report"] = obstruction_report_to_json(report);

    if (copies != 1) {
        text << "note: copies = " << copies << " rescales every rho value by 1/" << copies
             << " relative to the standard normalization\n";
        doc["non_standard_normalization"] = copies;
    }

    emit(doc, format, text.str());
    return ok ? kExitOk : kExitUncertified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact doubly-slice obstruction calculator"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format = "text";
    long max_bits = 4096;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--max-precision-bits", max_bits, "certification precision cap");

    auto* rho_cmd = app.add_subcommand("rho", "rho invariant of a Hermitian matrix");
    std::string matrix_path, mode = "exact", tol_text = "1e-9";
    unsigned long copies = 1;
    rho_cmd->add_option("--matrix", matrix_path, "matrix json file")->required();
    rho_cmd->add_option("--mode", mode, "exact or numeric")
        ->check(CLI::IsMember({"exact", "numeric"}));
    rho_cmd->add_option("--tol", tol_text, "certified interval width (rational)");
    rho_cmd->add_option("--copies", copies, "the r in the 1/r normalization");

    auto* fox_cmd = app.add_subcommand("fox", "branched-cover homology orders");
    std::string presentation_path;
    std::vector<unsigned long> fox_rs;
    unsigned long bc_bound = 200;
    fox_cmd->add_option("--presentation", presentation_path, "presentation json file")->required();
    fox_cmd->add_option("--r", fox_rs, "cover indices")->delimiter(',');
    fox_cmd->add_option("--block-circulant-bound", bc_bound, "oracle size bound");

    auto* liv_cmd = app.add_subcommand("livingston", "cyclotomic vanishing criterion");
    std::string delta_path;
    std::vector<unsigned long> covers;
    unsigned long r_max = 0;
    liv_cmd->add_option("--delta", delta_path, "Alexander polynomial json file")->required();
    liv_cmd->add_option("--covers", covers, "cover indices")->delimiter(',');
    liv_cmd->add_option("--r-max", r_max, "check all prime powers up to this bound");

    auto* bl_cmd = app.add_subcommand("blanchfield", "linking form lagrangian checks");
    std::string form_path, l1_path, l2_path;
    bl_cmd->add_option("--form", form_path, "form json file")->required();
    bl_cmd->add_option("--l1", l1_path, "first submodule json file")->required();
    bl_cmd->add_option("--l2", l2_path, "second submodule json file");

    auto* rp_cmd = app.add_subcommand("reproduce-paper", "worked example with golden self-checks");
    unsigned long rp_copies = 1;
    std::vector<unsigned long> rp_primes;
    rp_cmd->add_option("--copies", rp_copies, "the r in the 1/r normalization");
    rp_cmd->add_option("--primes", rp_primes, "extra mod-p representation rows")->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(rho_cmd)) {
            return cmd_rho(matrix_path, mode, tol_text, copies, max_bits, format);
        }
        if (app.got_subcommand(fox_cmd)) {
            return cmd_fox(presentation_path, fox_rs, bc_bound, format);
        }
        if (app.got_subcommand(liv_cmd)) {
            return cmd_livingston(delta_path, covers, r_max, format);
        }
        if (app.got_subcommand(bl_cmd)) {
            return cmd_blanchfield(form_path, l1_path, l2_path, format);
        }
        if (app.got_subcommand(rp_cmd)) {
            return cmd_reproduce_paper(rp_copies, rp_primes, max_bits, format);
        }
    } catch (const precision_exhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUncertified;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
