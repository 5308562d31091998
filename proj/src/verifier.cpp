#include "ahlab/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace ahlab {

const std::vector<std::string>& check_registry() {
    static const std::vector<std::string> names = {
        "u-recursion",        "p-integrality",
        "digit-oracle",       "mod-p-recursion",
        "prop-even-sum",      "sk-relation",
        "closed-forms",       "conjecture-k-odd",
        "conjecture-poly-forms", "lemma-pound0",
        "feq-gamma",          "feq-gamma-sym",
        "gamma-parity",       "gamma-reconstruction",
        "granville-pol",      "nielsen",
        "faulhaber",          "polylog-special-values",
        "numeric-sums",       "corollary-sixth",
        "corollary-eighth",   "zagier-identity",
        "wolstenholme",       "lehmer",
    };
    return names;
}

bool is_known_check(const std::string& name) {
    const auto& reg = check_registry();
    return std::find(reg.begin(), reg.end(), name) != reg.end();
}

CheckResult verify_prop_even(const AHTable& table, std::uint32_t kmax) {
    const std::uint32_t p = table.p;
    if (std::uint64_t{kmax} >= std::uint64_t{p} * p - 1)
        throw UsageError("verify_prop_even: kmax must be < p^2 - 1");
    const std::string name = "prop-even-sum";
    json params{{"kmax", kmax}};
    SkTable sk = compute_sk(table, kmax);
    for (std::uint32_t k = 0; k <= kmax; ++k) {
        FpElem expected{0, p};
        if (k % (p - 1) == 0) {
            std::uint32_t j = k / (p - 1);
            expected = FpElem{j % 2 == 0 ? 1 : -1, p};
        }
        if (sk.s(k) != expected) {
            json witness{{"k", k}, {"lhs", sk.s(k).v}, {"rhs", expected.v}};
            return CheckResult::fail(name, p, witness, params);
        }
    }
    return CheckResult::pass(name, p, params);
}

CheckResult verify_conjecture_numeric(const AHTable& table) {
    const std::uint32_t p = table.p;
    const std::string name = "conjecture-k-odd";
    if (std::uint64_t{p - 1} * p > table.N)
        throw TableTooShallow("conjecture check needs N >= (p-1)*p");

    auto lhs_at = [&](std::uint32_t k) {
        FpElem sum{0, p};
        for (std::uint32_t r = 1; r <= k; ++r) {
            FpElem term = FpElem{r, p} * table.a(std::size_t{r} * p) *
                          table.a(std::size_t{k - r} * p);
            sum = (r % 2 == 0) ? sum + term : sum - term;
        }
        return sum;
    };

    // k = 1 boundary: the sum reads -a_p, which must equal w_p.
    FpElem w{BigInt(wilson_quotient(p) % p).get_si(), p};
    if (lhs_at(1) != w) {
        json witness{{"k", 1}, {"lhs", lhs_at(1).v}, {"rhs", w.v}};
        return CheckResult::fail(name, p, witness);
    }

    for (std::uint32_t k = 2; k < p; ++k) {
        FpElem lhs = lhs_at(k);
        BigRational b_over_k = bernoulli_exact(p - k) / BigRational(k);
        b_over_k.canonicalize();
        FpElem rhs = reduce_mod_p(b_over_k, p);
        if (lhs != rhs) {
            json witness{{"k", k}, {"lhs", lhs.v}, {"rhs", rhs.v}};
            // Odd k is the open case: a violation refutes the conjecture.
            // Even k is a theorem, so a violation is a software fault.
            return k % 2 == 1 ? CheckResult::refuted(name, p, witness)
                              : CheckResult::fail(name, p, witness);
        }
    }

    // k = p-1 restated: the sum equals -B_1 = 1/2.
    FpElem half = fp_inverse(FpElem{2, p});
    if (lhs_at(p - 1) != half) {
        json witness{{"k", p - 1}, {"lhs", lhs_at(p - 1).v}, {"rhs", half.v}};
        return CheckResult::fail(name, p, witness);
    }
    return CheckResult::pass(name, p);
}

CheckResult verify_conjecture_poly_forms(const AHTable& table) {
    const std::uint32_t p = table.p;
    const std::string name = "conjecture-poly-forms";
    PrimeField field(p);
    FpPoly G = g_series(table, p);
    FpPoly Gm(p); // G(-X)
    {
        std::vector<std::uint32_t> c(G.coeffs());
        for (std::size_t i = 1; i < c.size(); i += 2) c[i] = c[i] ? p - c[i] : 0;
        Gm = FpPoly(p, std::move(c));
    }
    FpPoly Gp = poly_derivative(G);
    FpPoly X = FpPoly::monomial(p, 1);
    FpElem w{BigInt(wilson_quotient(p) % p).get_si(), p};
    FpPoly wX = w * X;
    GammaPolys gp = build_gamma_polys(p);
    FpPoly pound1 = finite_polylog(field, 1);

    FpPoly form_a = poly_mul_trunc(poly_mul_trunc(X, Gp, p), Gm, p);
    FpPoly form_b =
        poly_mul_trunc(poly_mul_trunc(X, Gp, p), series_inverse_trunc(G, p), p);
    FpPoly rhs_ab = wX - gp.gamma;

    FpPoly composed = poly_compose_trunc(pound1, G, p);
    FpPoly form_c = poly_truncate(poly_mul(X, poly_derivative(composed)), p);
    FpPoly rhs_c = -wX + gp.gamma;
    FpPoly rhs_d = -wX - gp.rho;

    struct Form {
        const char* label;
        bool holds;
        const FpPoly* lhs;
        const FpPoly* rhs;
    };
    const Form forms[] = {
        {"A", form_a == rhs_ab, &form_a, &rhs_ab},
        {"B", form_b == rhs_ab, &form_b, &rhs_ab},
        {"C", form_c == rhs_c, &form_c, &rhs_c},
        {"D", composed == rhs_d, &composed, &rhs_d},
    };

    json params = json::object();
    bool all_hold = true, any_hold = false;
    for (const auto& f : forms) {
        params[std::string("form_") + f.label] = f.holds ? "pass" : "fail";
        all_hold = all_hold && f.holds;
        any_hold = any_hold || f.holds;
    }
    params["forms_agree"] = (all_hold || !any_hold);

    if (all_hold) return CheckResult::pass(name, p, params);
    json witness = json::array();
    for (const auto& f : forms)
        if (!f.holds)
            witness.push_back(json{{"form", f.label},
                                   {"lhs", f.lhs->str()},
                                   {"rhs", f.rhs->str()}});
    // All forms failing together means the conjecture itself fails here;
    // disagreement between forms would be an internal inconsistency.
    return !any_hold ? CheckResult::refuted(name, p, witness, params)
                     : CheckResult::fail(name, p, witness, params);
}

json RunConfig::echo() const {
    json j{{"pmin", pmin},   {"pmax", pmax}, {"checks", checks},
           {"max_n", max_n}, {"kmax", kmax}, {"seed", seed},
           {"trials", trials}, {"parallel", parallel}};
    if (have_xrange) {
        j["xmin"] = xmin;
        j["xmax"] = xmax;
    }
    return j;
}

namespace {

constexpr std::uint32_t kTablePolicyMaxP = 31;   // table-based checks
constexpr std::uint32_t kEvenSumPolicyMaxP = 13; // p^2/p^3-depth checks

bool selected(const RunConfig& cfg, const std::string& name) {
    if (cfg.checks.empty()) return true;
    return std::find(cfg.checks.begin(), cfg.checks.end(), name) !=
           cfg.checks.end();
}

// kmax for the even-sum proposition: its statement only covers
// k < p^2 - 1, so the sweep clamps there.
std::uint32_t prop_even_kmax(const RunConfig& cfg, std::uint32_t p) {
    std::uint64_t full = std::uint64_t{p} * p - 2;
    return static_cast<std::uint32_t>(std::min<std::uint64_t>(cfg.kmax, full));
}

std::uint32_t sk_kmax(const RunConfig& cfg, std::uint32_t p) {
    if (p <= 7) return prop_even_kmax(cfg, p); // full stated range
    return cfg.kmax;
}

std::uint32_t required_depth(const RunConfig& cfg, std::uint32_t p) {
    std::uint64_t need = 0;
    auto want = [&](std::uint64_t n) { need = std::max(need, n); };
    if (p <= kTablePolicyMaxP) {
        if (selected(cfg, "u-recursion") || selected(cfg, "p-integrality") ||
            selected(cfg, "mod-p-recursion"))
            want(60);
        if (selected(cfg, "digit-oracle")) want(60);
        if (selected(cfg, "closed-forms") && p > 3) want(7 * std::uint64_t{p});
        if (selected(cfg, "conjecture-k-odd") ||
            selected(cfg, "conjecture-poly-forms"))
            want(std::uint64_t{p - 1} * p);
    }
    if (p <= kEvenSumPolicyMaxP) {
        if (selected(cfg, "prop-even-sum"))
            want(std::uint64_t{prop_even_kmax(cfg, p)} * p);
        if (selected(cfg, "sk-relation"))
            want(std::uint64_t{sk_kmax(cfg, p)} * p);
    }
    if (cfg.max_n > 0) need = std::min<std::uint64_t>(need, cfg.max_n);
    return static_cast<std::uint32_t>(need);
}

CheckResult check_u_recursion(const AHTable& t) {
    const std::string name = "u-recursion";
    json params{{"max_n", t.N}};
    for (std::uint32_t n = 1; n <= t.N; ++n) {
        BigRational sum(0);
        for (std::uint64_t q = 1; q <= n; q *= t.p) sum += t.u[n - q];
        if (BigRational(static_cast<unsigned long>(n)) * t.u[n] != sum) {
            json witness{{"n", n}, {"u_n", t.u[n].get_str()}};
            return CheckResult::fail(name, t.p, witness, params);
        }
    }
    return CheckResult::pass(name, t.p, params);
}

CheckResult check_p_integrality(const AHTable& t) {
    const std::string name = "p-integrality";
    json params{{"max_n", t.N}};
    const BigInt pz(t.p);
    for (std::uint32_t n = 0; n <= t.N; ++n) {
        if (divides(pz, denominator(t.u[n]))) {
            json witness{{"n", n}, {"u_n", t.u[n].get_str()}};
            return CheckResult::fail(name, t.p, witness, params);
        }
    }
    return CheckResult::pass(name, t.p, params);
}

CheckResult check_digit_oracle(const AHTable& t) {
    const std::string name = "digit-oracle";
    std::uint32_t nmax = std::min<std::uint32_t>(t.N, 60);
    json params{{"max_n", nmax}};
    for (std::uint32_t n = 0; n <= nmax; ++n) {
        BigRational oracle = u_digit_oracle(t.p, n);
        if (oracle != t.u[n]) {
            json witness{{"n", n},
                         {"recursion", t.u[n].get_str()},
                         {"oracle", oracle.get_str()}};
            return CheckResult::fail(name, t.p, witness, params);
        }
    }
    return CheckResult::pass(name, t.p, params);
}

CheckResult check_mod_p_recursion(const AHTable& t) {
    const std::string name = "mod-p-recursion";
    json params{{"max_n", t.N}};
    const std::uint32_t p = t.p;
    for (std::uint32_t n = 1; n <= t.N; ++n) {
        if (n % p == 0) continue;
        FpElem sum{0, p};
        for (std::uint64_t q = 1; q <= n; q *= p) sum = sum + t.a(n - q);
        if (FpElem{n, p} * t.a(n) != sum) {
            json witness{{"n", n}, {"lhs", (FpElem{n, p} * t.a(n)).v}, {"rhs", sum.v}};
            return CheckResult::fail(name, t.p, witness, params);
        }
    }
    return CheckResult::pass(name, t.p, params);
}

CheckResult check_closed_forms(const AHTable& t) {
    const std::string name = "closed-forms";
    const std::uint32_t p = t.p;
    json params = json::object();
    json conditional = json::object();
    bool any_checked = false;
    for (std::uint32_t k = 2; k <= 7; ++k) {
        std::uint32_t min_p = (k <= 3) ? 3 : (k == 4) ? 5 : 7;
        std::string key = "a_" + std::to_string(k) + "p";
        if (p <= min_p) {
            params[key] = "out-of-range";
            continue;
        }
        ClosedFormResult r;
        try {
            r = closed_form_akp(p, k, t);
        } catch (const TableTooShallow&) {
            params[key] = "table-too-shallow";
            continue;
        }
        any_checked = true;
        if (k == 7) {
            conditional["a_7p"] = r.matches() ? "pass" : "refuted";
            conditional["predicted"] = r.predicted.v;
            conditional["actual"] = r.actual.v;
            params["conditional"] = conditional;
            if (!r.matches()) {
                json witness{{"k", k}, {"predicted", r.predicted.v},
                             {"actual", r.actual.v}, {"conditional", true}};
                return CheckResult::refuted(name, p, witness, params);
            }
            continue;
        }
        params[key] = r.matches() ? "pass" : "fail";
        if (!r.matches()) {
            json witness{{"k", k},
                         {"predicted", r.predicted.v},
                         {"actual", r.actual.v}};
            return CheckResult::fail(name, p, witness, params);
        }
    }
    if (!any_checked)
        return CheckResult::skipped(name, p, "no closed form valid at this prime",
                                    params);
    return CheckResult::pass(name, p, params);
}

struct PrimeContext {
    std::uint32_t p;
    const RunConfig& cfg;
    const AHTable* table; // may be null when no table check is selected
};

CheckResult run_one(const PrimeContext& ctx, const std::string& name) {
    const std::uint32_t p = ctx.p;
    const RunConfig& cfg = ctx.cfg;

    auto need_table = [&]() -> const AHTable& {
        if (!ctx.table)
            throw TableTooShallow("no coefficient table built for this prime");
        return *ctx.table;
    };

    if (name == "u-recursion") return check_u_recursion(need_table());
    if (name == "p-integrality") return check_p_integrality(need_table());
    if (name == "digit-oracle") return check_digit_oracle(need_table());
    if (name == "mod-p-recursion") return check_mod_p_recursion(need_table());
    if (name == "prop-even-sum")
        return verify_prop_even(need_table(), prop_even_kmax(cfg, p));
    if (name == "sk-relation") {
        SkTable sk = compute_sk(need_table(), sk_kmax(cfg, p));
        // Off-multiple vanishing holds for every k, so fold it in here.
        for (std::size_t k = 0; k <= sk.kmax(); ++k) {
            if (k % (p - 1) != 0 && sk.s(static_cast<std::ptrdiff_t>(k)).v != 0) {
                json witness{{"k", k},
                             {"s_k", sk.s(static_cast<std::ptrdiff_t>(k)).v},
                             {"relation", "s_k = 0 off multiples of p-1"}};
                return CheckResult::fail(name, p, witness,
                                         json{{"kmax", sk.kmax()}});
            }
        }
        return verify_sk_relation(sk);
    }
    if (name == "closed-forms") return check_closed_forms(need_table());
    if (name == "conjecture-k-odd") return verify_conjecture_numeric(need_table());
    if (name == "conjecture-poly-forms")
        return verify_conjecture_poly_forms(need_table());
    if (name == "lemma-pound0")
        return verify_lemma_pound0(p, cfg.trials, cfg.seed);
    if (name == "feq-gamma") return verify_feq_gamma(p);
    if (name == "feq-gamma-sym") return verify_feq_gamma_sym(p);
    if (name == "gamma-parity") return verify_gamma_parity(p);
    if (name == "gamma-reconstruction") return verify_gamma_reconstruction(p);
    if (name == "granville-pol") return verify_granville_pol(p);
    if (name == "nielsen") {
        std::int64_t lo = cfg.have_xrange ? cfg.xmin : -3 * std::int64_t{p} * p;
        std::int64_t hi = cfg.have_xrange ? cfg.xmax : 3 * std::int64_t{p} * p;
        return verify_nielsen(p, lo, hi);
    }
    if (name == "faulhaber") return verify_faulhaber_check(p);
    if (name == "polylog-special-values") return verify_polylog_special_values(p);
    if (name == "numeric-sums") return verify_numeric_sums(p);
    if (name == "corollary-sixth") return verify_corollary_sixth(p);
    if (name == "corollary-eighth") return verify_corollary_eighth(p);
    if (name == "zagier-identity") return verify_zagier_identity(std::max<std::uint64_t>(cfg.kmax, 2));
    if (name == "wolstenholme") return verify_wolstenholme(p);
    if (name == "lehmer") return verify_lehmer(p);
    throw UsageError("unknown check: " + name);
}

// Checks with depth policies get skipped beyond their default prime cap.
bool within_policy(const std::string& name, std::uint32_t p, std::string& why) {
    static const std::vector<std::string> table_checks = {
        "u-recursion",  "p-integrality",    "digit-oracle",
        "mod-p-recursion", "closed-forms",  "conjecture-k-odd",
        "conjecture-poly-forms"};
    if (std::find(table_checks.begin(), table_checks.end(), name) !=
            table_checks.end() &&
        p > kTablePolicyMaxP) {
        why = "depth policy caps table-based checks at p <= " +
              std::to_string(kTablePolicyMaxP);
        return false;
    }
    if ((name == "prop-even-sum" || name == "sk-relation") &&
        p > kEvenSumPolicyMaxP) {
        why = "depth policy caps convolution-sum checks at p <= " +
              std::to_string(kEvenSumPolicyMaxP);
        return false;
    }
    return true;
}

PrimeReport run_prime(std::uint32_t p, const RunConfig& cfg) {
    PrimeReport report;
    report.p = p;

    std::uint32_t depth = required_depth(cfg, p);
    AHTable table;
    bool have_table = false;
    std::string table_error;
    if (depth > 0) {
        try {
            table = compute_table(p, depth);
            have_table = true;
        } catch (const NotPIntegral& e) {
            table_error = e.what();
        }
    }

    PrimeContext ctx{p, cfg, have_table ? &table : nullptr};
    for (const auto& name : check_registry()) {
        if (!selected(cfg, name)) continue;
        auto start = std::chrono::steady_clock::now();
        CheckResult r{};
        std::string why;
        if (!within_policy(name, p, why)) {
            r = CheckResult::skipped(name, p, why);
        } else if (!table_error.empty() && name == "p-integrality") {
            r = CheckResult::fail(name, p, json{{"error", table_error}});
        } else {
            try {
                r = run_one(ctx, name);
            } catch (const TableTooShallow& e) {
                r = CheckResult::skipped(name, p, e.what());
            } catch (const RangeError& e) {
                r = CheckResult::skipped(name, p, e.what());
            } catch (const UsageError& e) {
                r = CheckResult::skipped(name, p, e.what());
            }
        }
        r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        report.checks.push_back(std::move(r));
    }
    return report;
}

std::vector<std::uint32_t> primes_in(std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = std::max<std::uint32_t>(lo, 3); p <= hi; ++p)
        if (is_prime_u64(p)) out.push_back(p);
    return out;
}

} // namespace

VerificationReport run_all(const RunConfig& config) {
    if (config.pmin > config.pmax)
        throw UsageError("run_all: pmin > pmax");
    for (const auto& name : config.checks)
        if (!is_known_check(name))
            throw UsageError("unknown check name: " + name);

    std::vector<std::uint32_t> ps = primes_in(config.pmin, config.pmax);
    std::vector<PrimeReport> reports(ps.size());

    const std::uint32_t workers =
        std::max<std::uint32_t>(1, std::min<std::uint32_t>(
                                       config.parallel,
                                       static_cast<std::uint32_t>(ps.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < ps.size(); ++i)
            reports[i] = run_prime(ps[i], config);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::uint32_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < ps.size();
                     i = next.fetch_add(1))
                    reports[i] = run_prime(ps[i], config);
            });
        for (auto& th : pool) th.join();
    }

    VerificationReport out;
    out.config_echo = config.echo();
    out.primes = std::move(reports);
    for (const auto& pr : out.primes)
        for (const auto& c : pr.checks) out.totals.add(c.status);
    return out;
}

} // namespace ahlab
