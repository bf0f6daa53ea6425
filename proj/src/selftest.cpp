#include "fpkz/selftest.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "fpkz/analysis.hpp"
#include "fpkz/construct.hpp"
#include "fpkz/json_io.hpp"
#include "fpkz/kz.hpp"
#include "fpkz/oracle.hpp"
#include "fpkz/sl2.hpp"

namespace fpkz::selftest {

namespace {

struct Failure {
    std::ostringstream os;
    int count = 0;

    template <typename... Args>
    void note(Args&&... args) {
        if (count < 4) {
            if (count) os << "; ";
            (os << ... << args);
        }
        ++count;
    }

    bool ok() const { return count == 0; }
    std::string text(const std::string& ok_text) const {
        if (ok()) return ok_text;
        std::ostringstream out;
        out << count << " failure(s): " << os.str();
        return out.str();
    }
};

std::string instance_tag(const KzInstance& inst) {
    std::ostringstream os;
    os << "(p=" << inst.p << ",q=" << inst.q << ",m=";
    for (int i = 0; i < inst.n; ++i) os << (i ? "," : "") << inst.m[i];
    os << ")";
    return os.str();
}

// Enumerates {d : sum d_i = total, 0 <= d_i <= cap_i}.
void for_each_bounded(const std::vector<i64>& cap, i64 total,
                      const std::function<void(const Exponents&)>& fn) {
    int n = int(cap.size());
    Exponents d(n, 0);
    auto rec = [&](auto&& self, int slot, i64 rest) -> void {
        if (slot == n - 1) {
            if (rest <= cap[slot]) {
                d[slot] = int(rest);
                fn(d);
            }
            return;
        }
        i64 hi = std::min<i64>(cap[slot], rest);
        for (i64 v = hi; v >= 0; --v) {
            d[slot] = int(v);
            self(self, slot + 1, rest - v);
        }
    };
    if (total >= 0) rec(rec, 0, total);
}

// Exact integer binomial, small enough for int64 (b <= 30 here).
i64 integer_binom(i64 a, i64 b) {
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    i64 r = 1;
    for (i64 t = 1; t <= b; ++t) r = r * (a - b + t) / t;
    return r;
}

const std::vector<i64> kGammaPrimes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31};

struct Runner {
    std::vector<KzInstance> sweep = standard_sweep();

    // aggregates from the criterion-7 oracle sweep, reused by criterion 8
    struct OracleRecord {
        KzInstance inst;
        int degree;
        std::vector<VecPoly> basis;
    };
    std::vector<OracleRecord> oracle_records;

    CriterionResult c1_worked_example();
    CriterionResult c2_solution_theorem();
    CriterionResult c3_coefficient_formula();
    CriterionResult c4_beta();
    CriterionResult c5_gamma();
    CriterionResult c6_determinant();
    CriterionResult c7_oracle();
    CriterionResult c8_leading_characterization();
    CriterionResult c9_sl2();
    CriterionResult c10_initial_value();
};

CriterionResult Runner::c1_worked_example() {
    CriterionResult res{1, "worked example: sigma-leading terms of I^[1], I^[2]", false, "", 0};
    Failure fail;

    KzInstance inst = make_instance(13, 3, {2, 2, 2, 1, 1, 1});
    HypergeomSolution I1 = hypergeometric_solution(inst, 1);
    HypergeomSolution I2 = hypergeometric_solution(inst, 2);
    if (I1.degree != 23 || !I1.poly.is_homogeneous() || I1.poly.total_degree() != 23)
        fail.note("I^[1] degree != 23");
    if (I2.degree != 10 || !I2.poly.is_homogeneous() || I2.poly.total_degree() != 10)
        fail.note("I^[2] degree != 10");

    struct Expected {
        int l;
        Perm sigma;
        Exponents exp;
        std::vector<i64> coeff;
        const char* tag;
    };
    Perm id = identity_perm(6);
    Perm s34{1, 2, 4, 3, 5, 6};
    Perm rev{6, 5, 4, 3, 2, 1};
    std::vector<Expected> table{
        {1, id, {8, 8, 7, 0, 0, 0}, {0, 0, 12, 5, 5, 5}, "l=1 id"},
        {1, s34, {8, 8, 3, 4, 0, 0}, {0, 0, 4, 0, 9, 9}, "l=1 s34"},
        {1, rev, {0, 3, 8, 4, 4, 4}, {9, 4, 0, 0, 0, 0}, "l=1 rev"},
        {2, id, {8, 2, 0, 0, 0, 0}, {0, 8, 2, 2, 2, 2}, "l=2 id"},
        {2, s34, {8, 2, 0, 0, 0, 0}, {0, 8, 2, 2, 2, 2}, "l=2 s34"},
        {2, rev, {0, 0, 0, 2, 4, 4}, {6, 6, 6, 3, 0, 0}, "l=2 rev"},
    };
    for (const Expected& e : table) {
        const VecPoly& sol = (e.l == 1 ? I1 : I2).poly;
        VectorLeadingTerm lt = sol.leading_term(e.sigma);
        if (lt.exponents != e.exp || lt.coeff != e.coeff) {
            fail.note(e.tag, ": computed leading term differs from the printed formula");
            continue;
        }
        LeadingPrediction pred = leading_prediction(inst, e.l, e.sigma);
        if (pred.exponents != e.exp || pred.coeff_vector.a_coords != e.coeff)
            fail.note(e.tag, ": leading_prediction disagrees with the computed term");
    }
    res.pass = fail.ok();
    res.detail = fail.text("all six leading terms match");
    return res;
}

CriterionResult Runner::c2_solution_theorem() {
    CriterionResult res{2, "solution theorem: every I^[l] solves the KZ system", false, "", 0};
    Failure fail;
    int checked = 0, skipped = 0;
    for (const KzInstance& inst : sweep) {
        if (inst.r == 0) {
            ++skipped;
            continue;
        }
        for (int l = 1; l <= inst.r; ++l) {
            HypergeomSolution sol = hypergeometric_solution(inst, l);
            if (sol.poly.is_zero()) {
                fail.note(instance_tag(inst), " l=", l, ": zero solution");
                continue;
            }
            if (!sol.poly.is_homogeneous() || sol.poly.total_degree() != sol.degree)
                fail.note(instance_tag(inst), " l=", l, ": degree mismatch");
            VerificationReport rep = verify_kz_solution(inst, sol.poly);
            if (!rep.pass)
                fail.note(instance_tag(inst), " l=", l, ": ", rep.summary());
            ++checked;
        }
    }
    res.pass = fail.ok();
    std::ostringstream ok;
    ok << checked << " solutions verified over " << sweep.size() - skipped
       << " instances (r=0 skipped: " << skipped << ")";
    res.detail = fail.text(ok.str());
    return res;
}

CriterionResult Runner::c3_coefficient_formula() {
    CriterionResult res{3, "coefficient formula agrees with direct extraction", false, "", 0};
    Failure fail;
    long monomials = 0;
    for (const KzInstance& inst : sweep) {
        for (int l = 1; l <= inst.r; ++l) {
            HypergeomSolution sol = hypergeometric_solution(inst, l);
            // every support monomial matches the closed form
            for_each_bounded(inst.M, inst.delta(sol.l), [&](const Exponents& d) {
                ++monomials;
                std::vector<i64> closed = coefficient_closed_form(inst, sol.l, d);
                std::vector<i64> actual = sol.poly.coeff_vector_at(d);
                if (closed != actual) {
                    fail.note(instance_tag(inst), " l=", sol.l, ": closed form mismatch");
                    return;
                }
                i64 sm = 0, sM = 0;
                bool nonzero = false;
                for (int i = 0; i < inst.n; ++i) {
                    nonzero = nonzero || closed[i] != 0;
                    sm = modarith::add(sm, modarith::mul(inst.m[i] % inst.p, closed[i], inst.p),
                                       inst.p);
                    sM = modarith::add(sM, modarith::mul(inst.M[i], closed[i], inst.p), inst.p);
                }
                if (nonzero && (sm != 0 || sM != 0))
                    fail.note(instance_tag(inst), " l=", sol.l, ": singular-vector sums nonzero");
            });
            // and no solution monomial escapes the support
            for (int i = 0; i < inst.n; ++i)
                for (const Term& t : sol.poly[i].terms()) {
                    Exponents d = unpack_key(t.key, inst.n);
                    i64 total = 0;
                    bool inside = true;
                    for (int s = 0; s < inst.n; ++s) {
                        total += d[s];
                        inside = inside && d[s] <= inst.M[s];
                    }
                    if (total != inst.delta(sol.l) || !inside)
                        fail.note(instance_tag(inst), " l=", sol.l, ": term outside support");
                }
        }
    }
    res.pass = fail.ok();
    std::ostringstream ok;
    ok << monomials << " support monomials compared exhaustively";
    res.detail = fail.text(ok.str());
    return res;
}

CriterionResult Runner::c4_beta() {
    CriterionResult res{4, "F_p-beta equals direct coefficient extraction", false, "", 0};
    Failure fail;
    long pairs = 0;
    for (i64 p : kGammaPrimes) {
        for (i64 a = 1; a < p; ++a)
            for (i64 b = 1; b < p; ++b) {
                if (a + b < p - 1) continue;
                ++pairs;
                // coefficient of x^{p-1} in x^a (1-x)^b, via the exact
                // integer binomial
                i64 direct = modarith::norm(integer_binom(b, p - 1 - a), p);
                if ((p - 1 - a) & 1) direct = modarith::norm(-direct, p);
                Fp got = beta_fp(a, b, p);
                if (got.value() != direct)
                    fail.note("p=", p, " a=", a, " b=", b, ": beta mismatch");
                if (got != beta_fp(b, a, p))
                    fail.note("p=", p, " a=", a, " b=", b, ": beta not symmetric");
            }
    }
    res.pass = fail.ok();
    std::ostringstream ok;
    ok << pairs << " (a,b) pairs checked exhaustively for p <= 31";
    res.detail = fail.text(ok.str());
    return res;
}

CriterionResult Runner::c5_gamma() {
    CriterionResult res{5, "gamma identities and the printed-form sign audit", false, "", 0};
    Failure fail;
    int common_offset = -1;
    for (i64 p : kGammaPrimes) {
        i64 wilson = 1;
        for (i64 j = 2; j < p; ++j) wilson = modarith::mul(wilson, j, p);
        if (wilson != p - 1) fail.note("p=", p, ": Wilson fails");
        for (i64 x = 1; x <= p; ++x) {
            Fp lhs = gamma_fp(x, p) * gamma_fp(1 - x, p);
            Fp rhs((x & 1) ? -1 : 1, p);
            if (lhs != rhs) fail.note("p=", p, " x=", x, ": reflection fails");
        }
        for (i64 x = -2 * p; x <= 2 * p; ++x)
            if (gamma_fp(x + p, p) != gamma_fp(x, p))
                fail.note("p=", p, " x=", x, ": periodicity fails");
        try {
            int e = gamma_sign_audit(p);
            if (common_offset == -1)
                common_offset = e;
            else if (common_offset != e)
                fail.note("p=", p, ": sign offset differs across primes");
        } catch (const Error& err) {
            fail.note("p=", p, ": ", err.what());
        }
    }
    res.pass = fail.ok();
    std::ostringstream ok;
    ok << "identities exhaustive for p <= 31; printed gamma-form offset is (-1)^(A+"
       << common_offset << ")";
    res.detail = fail.text(ok.str());
    return res;
}

CriterionResult Runner::c6_determinant() {
    CriterionResult res{6, "determinant identity under ample reduction", false, "", 0};
    Failure fail;
    bool seen_5 = false, seen_19 = false;
    int count = 0;
    for (const KzInstance& inst : sweep) {
        if (!inst.ample) continue;
        ++count;
        if (inst.p == 5 && inst.q == 3 && inst.m == std::vector<i64>{1, 1}) seen_5 = true;
        if (inst.p == 19 && inst.q == 5 && inst.m == std::vector<i64>{1, 1, 1}) seen_19 = true;
        DetReport rep = verify_determinant(inst);
        if (!rep.equal) {
            fail.note(instance_tag(inst), ": determinant != closed form");
            continue;
        }
        if (!det_ode_check(inst, rep.det)) fail.note(instance_tag(inst), ": det ODE fails");
        i64 want_deg =
            i64(inst.n - 1) * inst.sum_M() - i64(inst.n) * (inst.n - 1) / 2 * inst.p;
        if (rep.det.total_degree() != want_deg)
            fail.note(instance_tag(inst), ": det degree mismatch");
        Exponents lead(inst.n, 0);
        for (int i = 0; i < inst.n - 1; ++i) {
            i64 e = i64(inst.n - 1 - i) * (inst.M[i] - inst.p);
            for (int j = i + 1; j < inst.n; ++j) e += inst.M[j];
            lead[i] = int(e);
        }
        if (rep.det.leading_term(identity_perm(inst.n)).exponents != lead)
            fail.note(instance_tag(inst), ": det leading monomial mismatch");
    }
    if (!seen_5) fail.note("sweep lost (5,3,(1,1))");
    if (!seen_19) fail.note("sweep lost (19,5,(1,1,1))");
    res.pass = fail.ok();
    std::ostringstream ok;
    ok << count << " ample instances checked as exact polynomial identities";
    res.detail = fail.text(ok.str());
    return res;
}

CriterionResult Runner::c7_oracle() {
    CriterionResult res{7, "oracle cross-validation and reduction to the module", false, "", 0};
    Failure fail;
    oracle_records.clear();

    // the rank-zero example: one-dimensional solution space, nothing
    // hypergeometric to reduce to
    KzInstance ex = make_instance(3, 2, {1, 1});
    if (ex.r != 0) fail.note("(3,2,(1,1)): r != 0");
    Poly sq = Poly::linear_diff_power(3, 2, 0, 1, 2);
    VecPoly expect(std::vector<Poly>{sq, -sq});
    std::vector<VecPoly> b2 = solve_homogeneous(ex, 2);
    if (b2.size() != 1)
        fail.note("(3,2,(1,1)) d=2: dimension ", b2.size(), " != 1");
    else {
        bool prop = false;
        for (i64 c = 1; c < 3; ++c)
            if (b2[0].scaled(c) == expect) prop = true;
        if (!prop) fail.note("(3,2,(1,1)) d=2: basis is not (z1-z2)^2 (1,-1)");
    }
    if (!solve_homogeneous(ex, 1).empty()) fail.note("(3,2,(1,1)) d=1: space not zero");
    ReduceResult rr = reduce_to_hypergeometric(ex, expect);
    if (rr.reducible) fail.note("(3,2,(1,1)): reduce should be Irreducible");
    for (int d = 0; d <= int(ex.sum_M() + 2 * ex.p); ++d)
        oracle_records.push_back({ex, d, solve_homogeneous(ex, d)});

    long vectors = 0;
    for (const KzInstance& inst : sweep) {
        if (!inst.ample || inst.p > 11 || inst.n > 3) continue;
        for (int l = 1; l <= inst.r; ++l)
            if (!uniqueness_check(inst, l))
                fail.note(instance_tag(inst), " l=", l,
                          ": a distinct degree-", inst.delta(l),
                          " solution shares the leading term of I^[", l, "]");
        int dmax = int(inst.sum_M() + 2 * inst.p);
        for (int d = 0; d <= dmax; ++d) {
            std::vector<VecPoly> basis = solve_homogeneous(inst, d);
            for (const VecPoly& b : basis) {
                ++vectors;
                ReduceResult red = reduce_to_hypergeometric(inst, b);
                if (!red.reducible) {
                    fail.note(instance_tag(inst), " d=", d, ": Irreducible oracle solution");
                    continue;
                }
                VecPoly recon(inst.p, inst.n, inst.n);
                for (const ReduceTerm& t : red.certificate) {
                    for (const Term& tm : t.c.terms())
                        for (int s = 0; s < inst.n; ++s)
                            if (key_get(tm.key, s) % inst.p != 0)
                                fail.note(instance_tag(inst), " d=", d,
                                          ": certificate not in F_p[z^p]");
                    recon = recon +
                            hypergeometric_solution(inst, t.l).poly.mul_poly(t.c);
                }
                if (recon != b)
                    fail.note(instance_tag(inst), " d=", d, ": certificate mismatch");
            }
            oracle_records.push_back({inst, d, std::move(basis)});
        }
    }
    res.pass = fail.ok();
    std::ostringstream ok;
    ok << vectors << " oracle solutions reduced to the hypergeometric module";
    res.detail = fail.text(ok.str());
    return res;
}

CriterionResult Runner::c8_leading_characterization() {
    CriterionResult res{8, "leading-term system and degree congruence", false, "", 0};
    Failure fail;
    long vectors = 0;
    for (const auto& rec : oracle_records) {
        bool congruent =
            modarith::norm(i64(rec.degree) - rec.inst.sum_M(), rec.inst.p) == 0;
        if (!congruent && !rec.basis.empty())
            fail.note(instance_tag(rec.inst), " d=", rec.degree,
                      ": nonzero space at incongruent degree");
        for (const VecPoly& b : rec.basis) {
            ++vectors;
            VectorLeadingTerm lt = b.leading_term(identity_perm(rec.inst.n));
            std::vector<i64> d(lt.exponents.begin(), lt.exponents.end());
            if (!leading_system_check(rec.inst, lt.coeff, d))
                fail.note(instance_tag(rec.inst), " d=", rec.degree,
                          ": leading term fails the characterization");
        }
    }
    res.pass = fail.ok();
    std::ostringstream ok;
    ok << vectors << " oracle leading terms checked over the criterion-7 sweep";
    res.detail = fail.text(ok.str());
    return res;
}

CriterionResult Runner::c9_sl2() {
    CriterionResult res{9, "sl2 Casimir identification and trace identity", false, "", 0};
    Failure fail;
    long pairs = 0;
    for (const KzInstance& inst : sweep) {
        for (int i = 1; i <= inst.n; ++i)
            for (int j = i + 1; j <= inst.n; ++j) {
                ++pairs;
                if (casimir_matrix(inst, i, j) != omega_standard(inst, i, j)) {
                    fail.note(instance_tag(inst), " (", i, ",", j, "): Casimir != Omega");
                }
                i64 tr = trace_omega_M_on_sing(inst, i, j);
                if (tr != modarith::norm(inst.M[i - 1] + inst.M[j - 1], inst.p))
                    fail.note(instance_tag(inst), " (", i, ",", j, "): trace != M_i+M_j");
            }
    }
    res.pass = fail.ok();
    std::ostringstream ok;
    ok << pairs << " pairs checked across the sweep";
    res.detail = fail.text(ok.str());
    return res;
}

CriterionResult Runner::c10_initial_value() {
    CriterionResult res{10, "initial-value invertibility at distinct points", false, "", 0};
    Failure fail;
    long points = 0;
    for (const KzInstance& inst : sweep) {
        if (!inst.ample || inst.p > 7) continue;
        CoordinateMatrix cm = coordinate_matrix(inst);
        int k = inst.n - 1;
        std::vector<i64> x(inst.n, 0);
        auto rec = [&](auto&& self, int slot) -> void {
            if (slot == inst.n) {
                ++points;
                // rank of c(x) by elimination
                std::vector<std::vector<i64>> E(k, std::vector<i64>(k));
                for (int l = 1; l <= k; ++l)
                    for (int j = 1; j <= k; ++j) E[l - 1][j - 1] = cm.at(l, j).eval(x);
                int rank = 0;
                for (int col = 0; col < k; ++col) {
                    int pr = -1;
                    for (int rrow = rank; rrow < k; ++rrow)
                        if (E[rrow][col] != 0) {
                            pr = rrow;
                            break;
                        }
                    if (pr < 0) continue;
                    std::swap(E[rank], E[pr]);
                    i64 inv = modarith::inv(E[rank][col], inst.p);
                    for (int cc = col; cc < k; ++cc)
                        E[rank][cc] = modarith::mul(E[rank][cc], inv, inst.p);
                    for (int rrow = 0; rrow < k; ++rrow) {
                        if (rrow == rank || E[rrow][col] == 0) continue;
                        i64 f = E[rrow][col];
                        for (int cc = col; cc < k; ++cc)
                            E[rrow][cc] = modarith::sub(
                                E[rrow][cc], modarith::mul(f, E[rank][cc], inst.p), inst.p);
                    }
                    ++rank;
                }
                if (rank != k)
                    fail.note(instance_tag(inst), ": singular evaluation matrix");
                return;
            }
            for (i64 v = 0; v < inst.p; ++v) {
                bool distinct = true;
                for (int t = 0; t < slot; ++t)
                    if (x[t] == v) distinct = false;
                if (!distinct) continue;
                x[slot] = v;
                self(self, slot + 1);
            }
        };
        rec(rec, 0);
    }
    res.pass = fail.ok();
    std::ostringstream ok;
    ok << points << " evaluation points, all invertible";
    res.detail = fail.text(ok.str());
    return res;
}

} // namespace

std::vector<KzInstance> standard_sweep() {
    std::vector<KzInstance> out;
    for (i64 p : {5, 7, 11, 13, 17, 19})
        for (i64 q : {2, 3, 5}) {
            if (q >= p) continue;
            for (int n : {2, 3, 4}) {
                std::vector<i64> m(n, 1);
                while (true) {
                    out.push_back(make_instance(p, q, m));
                    int slot = n - 1;
                    while (slot >= 0 && m[slot] == q - 1) m[slot--] = 1;
                    if (slot < 0) break;
                    ++m[slot];
                }
            }
        }
    return out;
}

std::vector<CriterionResult> run_all(std::ostream& log) {
    Runner runner;
    std::vector<std::function<CriterionResult()>> criteria{
        [&] { return runner.c1_worked_example(); },
        [&] { return runner.c2_solution_theorem(); },
        [&] { return runner.c3_coefficient_formula(); },
        [&] { return runner.c4_beta(); },
        [&] { return runner.c5_gamma(); },
        [&] { return runner.c6_determinant(); },
        [&] { return runner.c7_oracle(); },
        [&] { return runner.c8_leading_characterization(); },
        [&] { return runner.c9_sl2(); },
        [&] { return runner.c10_initial_value(); },
    };
    std::vector<CriterionResult> results;
    for (auto& fn : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r.id = int(results.size()) + 1;
            r.name = "criterion aborted";
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        log << "criterion " << r.id << " [" << (r.pass ? "PASS" : "FAIL") << "] " << r.name
            << " (" << r.seconds << "s) - " << r.detail << "\n";
        results.push_back(std::move(r));
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const CriterionResult& r : results)
        if (!r.pass) return false;
    return results.size() == 10;
}

} // namespace fpkz::selftest
