#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fpkz/analysis.hpp"
#include "fpkz/construct.hpp"
#include "fpkz/json_io.hpp"
#include "fpkz/kz.hpp"
#include "fpkz/oracle.hpp"
#include "fpkz/selftest.hpp"

using namespace fpkz;

namespace {

struct InstanceFlags {
    i64 p = 0;
    i64 q = 0;
    std::vector<i64> m;

    void attach(CLI::App* cmd) {
        cmd->add_option("-p", p, "prime modulus p")->required();
        cmd->add_option("-q", q, "prime parameter q")->required();
        cmd->add_option("-m", m, "weights m_1,...,m_n")->required()->delimiter(',');
    }

    KzInstance instance() const { return make_instance(p, q, m); }
};

std::string vec_str(const std::vector<i64>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--in", "cannot open file: " + path);
    return json::parse(in); // parse_error carries the byte position
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int run_info(const InstanceFlags& fl, bool as_json) {
    KzInstance inst = fl.instance();
    json j{{"schema", kSchemaTag},
           {"p", inst.p},
           {"q", inst.q},
           {"n", inst.n},
           {"m", inst.m},
           {"M", inst.M},
           {"r", inst.r},
           {"ample", inst.ample},
           {"sum_M", inst.sum_M()}};
    std::ostringstream os;
    os << "p = " << inst.p << ", q = " << inst.q << ", n = " << inst.n << "\n"
       << "m = " << vec_str(inst.m) << "\n"
       << "M = " << vec_str(inst.M) << "   (q*M_i = -m_i mod p)\n"
       << "r = " << inst.r << (inst.ample ? "   (ample)" : "   (not ample)") << "\n";
    if (inst.r > 0) {
        json tbl = json::array();
        os << "degrees and boundary indices:\n";
        for (int l = 1; l <= inst.r; ++l) {
            int il = index_i_of_l(inst, l);
            tbl.push_back({{"l", l}, {"delta", inst.delta(l)}, {"i", il}});
            os << "  l = " << l << ": deg I^[" << l << "] = " << inst.delta(l)
               << ", i(" << l << ") = " << il << "\n";
        }
        j["cycles"] = std::move(tbl);
    }
    emit(j, as_json, os.str());
    return 0;
}

int run_solve(const InstanceFlags& fl, int l, bool as_json) {
    KzInstance inst = fl.instance();
    HypergeomSolution sol = hypergeometric_solution(inst, l);
    json j = solution_to_json(inst, sol);
    std::ostringstream os;
    os << "I^[" << l << "], homogeneous of degree " << sol.degree << ":\n";
    for (int i = 0; i < inst.n; ++i)
        os << "  I_" << (i + 1) << " = " << sol.poly[i].to_string() << "\n";
    emit(j, as_json, os.str());
    return 0;
}

int run_verify(const InstanceFlags& fl, const std::string& path, bool as_json) {
    KzInstance inst = fl.instance();
    VecPoly I = solution_payload_from_json(load_json(path));
    VerificationReport rep = verify_kz_solution(inst, I);
    emit(verification_report_to_json(rep), as_json,
         std::string(rep.pass ? "pass" : "FAIL: " + rep.summary()) + "\n");
    return rep.pass ? 0 : 1;
}

int run_leading(const InstanceFlags& fl, int l, std::vector<int> sigma, bool as_json) {
    KzInstance inst = fl.instance();
    Perm perm = sigma.empty() ? identity_perm(inst.n) : Perm(sigma.begin(), sigma.end());
    LeadingPrediction pred = leading_prediction(inst, l, perm);
    json j{{"schema", kSchemaTag},
           {"l", pred.l},
           {"sigma", pred.sigma},
           {"i_of_l", pred.i_of_l},
           {"scalar", pred.scalar},
           {"coeff", pred.coeff_vector.a_coords},
           {"coeff_w", pred.coeff_vector.w_coords},
           {"exponents", pred.exponents}};
    std::ostringstream os;
    os << "sigma-leading term of I^[" << l << "]: coeff " << vec_str(pred.coeff_vector.a_coords)
       << " at monomial " << Poly::monomial(inst.p, inst.n, pred.exponents, 1).to_string()
       << "  (i(l) = " << pred.i_of_l << ")\n";
    emit(j, as_json, os.str());
    return 0;
}

int run_det(const InstanceFlags& fl, bool as_json) {
    KzInstance inst = fl.instance();
    DetReport rep = verify_determinant(inst);
    std::ostringstream os;
    os << "det c(z)      = " << rep.det.to_string() << "\n"
       << "closed form   = " << rep.closed_form.to_string() << "\n"
       << "equal         = " << (rep.equal ? "true" : "false") << "\n"
       << "gamma offset  = " << rep.gamma_form_sign_offset << "\n";
    emit(det_report_to_json(rep), as_json, os.str());
    return rep.equal ? 0 : 1;
}

int run_search(const InstanceFlags& fl, int degree, std::size_t cap, bool as_json) {
    KzInstance inst = fl.instance();
    std::vector<VecPoly> basis = solve_homogeneous(inst, degree, cap);
    std::ostringstream os;
    os << "solution space of homogeneous degree " << degree << ": dimension " << basis.size()
       << "\n";
    for (std::size_t b = 0; b < basis.size(); ++b)
        for (int i = 0; i < inst.n; ++i)
            os << "  basis[" << b << "]_" << (i + 1) << " = " << basis[b][i].to_string() << "\n";
    emit(basis_to_json(basis), as_json, os.str());
    return 0;
}

int run_reduce(const InstanceFlags& fl, const std::string& path, bool as_json) {
    KzInstance inst = fl.instance();
    VecPoly I = solution_payload_from_json(load_json(path));
    ReduceResult res = reduce_to_hypergeometric(inst, I);
    std::ostringstream os;
    if (res.reducible) {
        os << "reducible: I = sum_l c_l(z) I^[l](z) with\n";
        for (const ReduceTerm& t : res.certificate)
            os << "  c_" << t.l << " = " << t.c.to_string() << "\n";
    } else {
        os << "irreducible: blocking leading term with coeff " << vec_str(res.blocking.coeff)
           << " (module rank r = " << inst.r << ")\n";
    }
    emit(reduce_result_to_json(inst, res), as_json, os.str());
    return res.reducible ? 0 : 1;
}

int run_gamma(i64 p, i64 x, bool as_json) {
    if (!is_prime(p) || p == 2) throw DomainError("gamma needs an odd prime p");
    Fp g = gamma_fp(x, p);
    json j{{"schema", kSchemaTag}, {"p", p}, {"x", x}, {"gamma", g.value()}};
    std::ostringstream os;
    os << "Gamma_{F_" << p << "}(" << x << ") = " << g.value() << "\n";
    emit(j, as_json, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact F_p-hypergeometric solutions of the KZ system"};
    app.require_subcommand(1);
    bool as_json = false;
    auto add_json = [&as_json](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "emit JSON instead of text");
    };

    InstanceFlags fl_info, fl_solve, fl_verify, fl_leading, fl_det, fl_search, fl_reduce;
    int arg_l = 1, arg_degree = 0;
    std::vector<int> arg_sigma;
    std::string arg_in;
    std::size_t arg_cap = 20000;
    i64 arg_p = 0, arg_x = 0;

    CLI::App* c_info = app.add_subcommand("info", "derived instance data: M, r, ample, i(l)");
    add_json(c_info);
    fl_info.attach(c_info);

    CLI::App* c_solve = app.add_subcommand("solve", "emit the solution I^[l]");
    add_json(c_solve);
    fl_solve.attach(c_solve);
    c_solve->add_option("--l", arg_l, "cycle index l")->required();

    CLI::App* c_verify = app.add_subcommand("verify", "verify a solution file");
    add_json(c_verify);
    fl_verify.attach(c_verify);
    c_verify->add_option("--in", arg_in, "solution JSON file")->required();

    CLI::App* c_leading = app.add_subcommand("leading", "predicted sigma-leading term of I^[l]");
    add_json(c_leading);
    fl_leading.attach(c_leading);
    c_leading->add_option("--l", arg_l, "cycle index l")->required();
    c_leading->add_option("--sigma", arg_sigma, "permutation of 1..n")->delimiter(',');

    CLI::App* c_det = app.add_subcommand("det", "determinant identity report");
    add_json(c_det);
    fl_det.attach(c_det);

    CLI::App* c_search = app.add_subcommand("search", "all homogeneous solutions of a degree");
    add_json(c_search);
    fl_search.attach(c_search);
    c_search->add_option("--degree", arg_degree, "homogeneity degree")->required();
    c_search->add_option("--cap", arg_cap, "unknown-count cap");

    CLI::App* c_reduce = app.add_subcommand("reduce", "reduce a solution to the module");
    add_json(c_reduce);
    fl_reduce.attach(c_reduce);
    c_reduce->add_option("--in", arg_in, "solution JSON file")->required();

    CLI::App* c_gamma = app.add_subcommand("gamma", "evaluate Gamma_{F_p}");
    add_json(c_gamma);
    c_gamma->add_option("-p", arg_p, "odd prime p")->required();
    c_gamma->add_option("--x", arg_x, "argument")->required();

    CLI::App* c_selftest = app.add_subcommand("selftest", "run the full verification grid");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(c_info)) return run_info(fl_info, as_json);
        if (app.got_subcommand(c_solve)) return run_solve(fl_solve, arg_l, as_json);
        if (app.got_subcommand(c_verify)) return run_verify(fl_verify, arg_in, as_json);
        if (app.got_subcommand(c_leading)) return run_leading(fl_leading, arg_l, arg_sigma, as_json);
        if (app.got_subcommand(c_det)) return run_det(fl_det, as_json);
        if (app.got_subcommand(c_search)) return run_search(fl_search, arg_degree, arg_cap, as_json);
        if (app.got_subcommand(c_reduce)) return run_reduce(fl_reduce, arg_in, as_json);
        if (app.got_subcommand(c_gamma)) return run_gamma(arg_p, arg_x, as_json);
        if (app.got_subcommand(c_selftest))
            return selftest::all_passed(selftest::run_all(std::cout)) ? 0 : 1;
    } catch (const NotASolution& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const json::parse_error& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
