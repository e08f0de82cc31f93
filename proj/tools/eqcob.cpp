// eqcob: build equivariant cobordism classes of Milnor manifolds under
// (Z_2)^n coordinate-flip actions, search for indecomposability
// certificates, verify the supporting identities, and tabulate results.
//
// Exit codes: 0 success/proven, 1 verification failure, 2 invalid input,
// 3 inconclusive certificate search.
#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqcob/criteria.hpp"

using json = nlohmann::ordered_json;
using namespace eqcob;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInconclusive = 3;

constexpr int kRankGuard = 6;
constexpr int kKmaxGuard = 64;
constexpr int kLemmaGuard = 7;
constexpr unsigned kWeightGuardSlack = 10;

std::vector<std::uint32_t> parse_hom(const std::string& text) {
    std::vector<std::uint32_t> images;
    std::stringstream outer(text);
    std::string subset;
    while (std::getline(outer, subset, ';')) {
        std::vector<int> elems;
        std::stringstream inner(subset);
        std::string token;
        while (std::getline(inner, token, ',')) {
            token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
            if (token.empty()) continue;
            std::size_t pos = 0;
            const int value = std::stoi(token, &pos);
            if (pos != token.size()) throw std::invalid_argument("bad hom element: " + token);
            elems.push_back(value);
        }
        images.push_back(mask_from_elements(elems));
    }
    if (images.empty()) throw std::invalid_argument("empty hom specification");
    return images;
}

struct ClassSpec {
    int m = 0;
    int n = 0;
    int rank = 0;
    std::optional<GroupHom> hom;
    RepElement element = RepElement::zero(1);
};

ClassSpec build_class(int m, int n, const std::string& hom_text, int rank_flag,
                      bool use_formula, bool force) {
    ClassSpec spec;
    spec.m = m;
    spec.n = n;
    if (!hom_text.empty()) {
        auto images = parse_hom(hom_text);
        if (static_cast<int>(images.size()) != n)
            throw std::invalid_argument("hom lists " + std::to_string(images.size()) +
                                        " subsets but n=" + std::to_string(n));
        int max_elem = 0;
        for (auto s : images)
            for (int e : elements_of(s)) max_elem = std::max(max_elem, e);
        const int rank = rank_flag > 0 ? rank_flag : max_elem;
        if (rank < max_elem)
            throw std::invalid_argument("rank " + std::to_string(rank) +
                                        " is below the largest hom element " +
                                        std::to_string(max_elem));
        spec.hom = GroupHom(rank, std::move(images));
        spec.rank = rank;
    } else {
        if (rank_flag > 0 && rank_flag != n)
            throw std::invalid_argument("without a hom the rank equals n");
        spec.rank = n;
    }
    if (!force && spec.rank > kRankGuard)
        throw std::invalid_argument("rank " + std::to_string(spec.rank) +
                                    " exceeds the desk-scale guard " +
                                    std::to_string(kRankGuard) + "; pass --force to override");
    MilnorAction action{m, n, spec.hom};
    validate_action(action);
    if (use_formula) {
        RepElement e = eta_closed_formula(m, n);
        spec.element = spec.hom ? pullback(e, *spec.hom) : std::move(e);
    } else {
        spec.element = eta_fixed_point_sum(action);
    }
    return spec;
}

json hom_json(const std::optional<GroupHom>& hom) {
    if (!hom) return nullptr;
    json arr = json::array();
    for (auto s : hom->images()) arr.push_back(elements_of(s));
    return arr;
}

json class_json(const ClassSpec& spec) {
    json monos = json::array();
    for (const auto& m : spec.element.monomials()) monos.push_back(m.str());
    return json{{"m", spec.m},
                {"n", spec.n},
                {"rank", spec.rank},
                {"hom", hom_json(spec.hom)},
                {"degree", spec.m + spec.n - 1},
                {"monomials", monos}};
}

json certificate_json(const Certificate& cert) {
    return json{{"k", cert.k},
                {"kind", cert.kind_name()},
                {"witness_numerator", cert.witness.numerator().str()},
                {"witness_denominator", cert.witness.denominator().factor_strings()}};
}

void print_class_text(std::ostream& os, const ClassSpec& spec) {
    os << "class: H(" << spec.m << "," << spec.n << ")\n";
    if (spec.hom) os << "hom: " << spec.hom->str() << "\n";
    os << "rank: " << spec.rank << "\n";
    os << "degree: " << (spec.m + spec.n - 1) << "\n";
    os << "monomials: " << spec.element.monomial_count() << "\n";
    os << "eta: " << spec.element.str() << "\n";
}

int run_class(const ClassSpec& spec, bool as_json) {
    const bool nonbounding = is_nonbounding(spec.element);
    if (as_json) {
        json out{{"class", class_json(spec)},
                 {"verdict", nonbounding ? "nonbounding" : "bounds"}};
        std::cout << out.dump(2) << "\n";
    } else {
        print_class_text(std::cout, spec);
        std::cout << "nonbounding: " << (nonbounding ? "true" : "false") << "\n";
    }
    return kExitOk;
}

SearchPolicy make_policy(int m, int degree, int k_min, int k_max, bool force) {
    if (k_min > 0 || k_max > 0) {
        if (k_min <= 0 || k_max < k_min)
            throw std::invalid_argument("need 0 < k-min <= k-max");
        if (!force && k_max > kKmaxGuard)
            throw std::invalid_argument("k-max exceeds the guard " +
                                        std::to_string(kKmaxGuard) +
                                        "; pass --force to override");
        return SearchPolicy::range(k_min, k_max);
    }
    SearchPolicy policy = SearchPolicy::standard(m, degree);
    if (policy.k_candidates.empty())
        throw std::invalid_argument("default policy has no candidate above degree " +
                                    std::to_string(degree));
    return policy;
}

int run_certify(const ClassSpec& spec, const SearchPolicy& policy, bool as_json) {
    const int degree = spec.m + spec.n - 1;
    const auto cert = test_indecomposable(spec.element, degree, policy);
    if (as_json) {
        json out{{"class", class_json(spec)}};
        if (cert) {
            out["certificate"] = certificate_json(*cert);
            out["verdict"] = "proven";
        } else {
            out["verdict"] = "inconclusive";
        }
        std::cout << out.dump(2) << "\n";
    } else {
        print_class_text(std::cout, spec);
        if (cert) {
            std::cout << "verdict: proven\n";
            std::cout << "k: " << cert->k << "\n";
            std::cout << "kind: " << cert->kind_name() << "\n";
            std::cout << "witness: " << cert->witness.str() << "\n";
        } else {
            std::cout << "verdict: inconclusive\n";
        }
    }
    return cert ? kExitOk : kExitInconclusive;
}

struct CheckLog {
    std::vector<std::pair<std::string, bool>> checks;

    void record(const std::string& name, bool pass) { checks.emplace_back(name, pass); }
    bool all() const {
        for (const auto& [name, pass] : checks)
            if (!pass) return false;
        return true;
    }
    int finish(bool as_json) const {
        int passed = 0;
        if (as_json) {
            json arr = json::array();
            for (const auto& [name, pass] : checks) {
                arr.push_back({{"name", name}, {"pass", pass}});
                if (pass) ++passed;
            }
            json out{{"checks", arr}, {"verdict", all() ? "pass" : "fail"}};
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& [name, pass] : checks) {
                std::cout << (pass ? "pass  " : "FAIL  ") << name << "\n";
                if (pass) ++passed;
            }
            std::cout << "summary: " << passed << "/" << checks.size() << " passed\n";
        }
        return all() ? kExitOk : kExitVerifyFail;
    }
};

void verify_lemma41(CheckLog& log, int n_max) {
    for (int n = 2; n <= n_max; ++n)
        log.record("lemma41.p n=" + std::to_string(n), lagrange_p(n).is_zero());
    for (int n = 1; n <= n_max; ++n)
        log.record("lemma41.ii n=" + std::to_string(n), lagrange_ii(n).is_zero());
    for (int n = 2; n <= n_max; ++n) {
        bool below = true;
        for (int k = 0; k < n - 1; ++k) below = below && lagrange_q(n, k).is_zero();
        log.record("lemma41.q n=" + std::to_string(n) + " below threshold", below);
        log.record("lemma41.q n=" + std::to_string(n) + " at threshold k=" +
                       std::to_string(n - 1),
                   lagrange_q(n, n - 1).is_one());
        log.record("lemma41.q n=" + std::to_string(n) + " at k=n",
                   lagrange_q(n, n) == RationalFunction(linear_form_poly(n, (1u << n) - 1),
                                                        FactoredDenominator{}));
    }
    for (int n = 2; n <= std::min(n_max - 1, 6); ++n) {
        const int nv = n + 1;
        std::vector<int> all, lo, hi;
        for (int v = 1; v <= n + 1; ++v) all.push_back(v);
        for (int v = 1; v <= n; ++v) lo.push_back(v);
        for (int v = 2; v <= n + 1; ++v) hi.push_back(v);
        const auto shift = linear_form_poly(nv, mask_from_elements({1, n + 1}));

        const auto p_all = lagrange_p_on(nv, all);
        const bool p_rec = RationalFunction(p_all.numerator() * shift, p_all.denominator()) ==
                           lagrange_p_on(nv, lo) + lagrange_p_on(nv, hi);
        log.record("lemma41.p recursion n=" + std::to_string(n), p_rec);

        bool q_rec = true;
        for (int k = 0; k <= n + 1; ++k) {
            const auto q_all = lagrange_q_on(nv, all, k);
            q_rec = q_rec &&
                    RationalFunction(q_all.numerator() * shift, q_all.denominator()) ==
                        lagrange_q_on(nv, lo, k) + lagrange_q_on(nv, hi, k);
        }
        log.record("lemma41.q recursion n=" + std::to_string(n), q_rec);
    }
}

void verify_formula(CheckLog& log, int n_max) {
    for (int n = 1; n <= n_max; ++n)
        for (int m = 1; m <= n; ++m)
            log.record("formula H(" + std::to_string(m) + "," + std::to_string(n) + ")",
                       eta_closed_formula(m, n) == eta_fixed_point_sum({m, n, std::nullopt}));
}

void verify_integrality(CheckLog& log, const ClassSpec& spec, unsigned max_weight) {
    const int d = spec.m + spec.n - 1;
    const auto report = check_integrality(spec.element, d, max_weight);
    for (const auto& entry : report.entries) {
        const std::string what = entry.requires_zero ? " vanishes" : " is polynomial";
        log.record("integrality " + entry.B.str() + what, entry.pass);
    }
}

struct TableRow {
    int d, m, n;
    GroupHom hom;
    std::optional<Certificate> cert;
};

int run_table(int rank, bool as_json, bool force) {
    if (!force && rank > kRankGuard)
        throw std::invalid_argument("rank exceeds the desk-scale guard; pass --force");
    if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("rank out of range");

    std::vector<TableRow> rows;
    const int n_cap = (1 << (rank - 1)) - 1;
    for (int n = 3; n <= n_cap; ++n) {
        for (int m = 1; m <= n - 2; ++m) {
            std::vector<std::uint32_t> images{mask_from_elements({1})};
            const auto pool = subsets_in_order(2, rank);
            if (static_cast<std::size_t>(n - 1) > pool.size()) continue;
            for (int t = 0; t < n - 1; ++t) images.push_back(pool[static_cast<std::size_t>(t)]);
            GroupHom hom(rank, images);
            const int d = m + n - 1;
            const auto e = eta_fixed_point_sum({m, n, hom});
            auto cert = test_indecomposable(e, d, SearchPolicy::standard(m, d));
            rows.push_back(TableRow{d, m, n, std::move(hom), std::move(cert)});
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
        if (a.d != b.d) return a.d < b.d;
        if (a.n != b.n) return a.n < b.n;
        return a.m < b.m;
    });

    if (as_json) {
        json arr = json::array();
        for (const auto& row : rows) {
            json r{{"d", row.d},
                   {"m", row.m},
                   {"n", row.n},
                   {"hom", hom_json(row.hom)},
                   {"verdict", row.cert ? "proven" : "inconclusive"}};
            if (row.cert) {
                r["k"] = row.cert->k;
                r["kind"] = row.cert->kind_name();
            }
            arr.push_back(std::move(r));
        }
        std::cout << json{{"rank", rank}, {"rows", arr}}.dump(2) << "\n";
    } else {
        std::cout << "d   m   n   verdict       k    kind    hom\n";
        for (const auto& row : rows) {
            std::ostringstream line;
            line << std::left << std::setw(4) << row.d << std::setw(4) << row.m
                 << std::setw(4) << row.n << std::setw(14)
                 << (row.cert ? "proven" : "inconclusive") << std::setw(5)
                 << (row.cert ? std::to_string(row.cert->k) : "-") << std::setw(8)
                 << (row.cert ? row.cert->kind_name() : "-") << row.hom.str();
            std::cout << line.str() << "\n";
        }
        std::cout << "rows: " << rows.size() << "\n";
    }
    return kExitOk;
}

int run_table_linind(int rank, int i, int m, int n, bool as_json, bool force) {
    if (!force && rank > kRankGuard)
        throw std::invalid_argument("rank exceeds the desk-scale guard; pass --force");
    const auto family = build_linind_family(rank, i, m, n);
    const int d = m + n - 1;
    std::vector<std::optional<Certificate>> certs;
    for (const auto& e : family)
        certs.push_back(test_indecomposable(e, d, SearchPolicy::standard(m, d)));
    const bool independent = verify_linear_independence(family);

    if (as_json) {
        json arr = json::array();
        for (int j = 1; j <= i; ++j) {
            const auto& cert = certs[static_cast<std::size_t>(j - 1)];
            json r{{"j", j},
                   {"d", d},
                   {"m", m},
                   {"n", n},
                   {"hom", hom_json(linind_hom(rank, i, m, n, j))},
                   {"verdict", cert ? "proven" : "inconclusive"}};
            if (cert) {
                r["k"] = cert->k;
                r["kind"] = cert->kind_name();
            }
            arr.push_back(std::move(r));
        }
        std::cout << json{{"rank", rank},
                          {"i", i},
                          {"rows", arr},
                          {"independent", independent}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "linind family: rank " << rank << ", i=" << i << ", H(" << m << "," << n
                  << "), degree " << d << "\n";
        for (int j = 1; j <= i; ++j) {
            const auto& cert = certs[static_cast<std::size_t>(j - 1)];
            std::cout << "j=" << j << "  hom " << linind_hom(rank, i, m, n, j).str() << "  "
                      << (cert ? "proven k=" + std::to_string(cert->k) + " " +
                                     cert->kind_name()
                               : "inconclusive")
                      << "\n";
        }
        std::cout << "independent: " << (independent ? "true" : "false") << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant cobordism of Milnor manifolds over (Z_2)^n: classes, "
                 "indecomposability certificates, identity checks, tables"};
    app.require_subcommand(1);

    bool as_json = false;
    bool force = false;
    app.add_flag("--json", as_json, "emit JSON on stdout");
    app.add_flag("--force", force, "override desk-scale guards");

    int m = 0, n = 0, rank = 0, k_min = 0, k_max = 0;
    int n_max = 0, i_count = 0, max_weight = -1;
    std::string hom_text;
    bool use_formula = false;

    auto* cls = app.add_subcommand("class", "build eta of a Milnor action");
    cls->fallthrough();
    cls->add_option("--m", m, "first parameter of H(m,n)")->required();
    cls->add_option("--n", n, "second parameter of H(m,n)")->required();
    cls->add_option("--hom", hom_text, "pullback hom, e.g. \"1;2;3,4\"");
    cls->add_option("--rank", rank, "domain rank of the hom");
    cls->add_flag("--formula", use_formula, "assemble via the closed formula");

    auto* certify = app.add_subcommand("certify", "search for an indecomposability certificate");
    certify->fallthrough();
    certify->add_option("--m", m, "first parameter of H(m,n)")->required();
    certify->add_option("--n", n, "second parameter of H(m,n)")->required();
    certify->add_option("--hom", hom_text, "pullback hom");
    certify->add_option("--rank", rank, "domain rank of the hom");
    certify->add_option("--k-min", k_min, "lowest candidate index");
    certify->add_option("--k-max", k_max, "highest candidate index");

    auto* verify = app.add_subcommand("verify", "run identity and integrality checks");
    verify->fallthrough();
    std::string check;
    verify->add_option("check", check, "one of: lemma41, integrality, formula")->required();
    verify->add_option("--n-max", n_max, "largest n to check");
    verify->add_option("--m", m, "first parameter (integrality)");
    verify->add_option("--n", n, "second parameter (integrality)");
    verify->add_option("--hom", hom_text, "pullback hom (integrality)");
    verify->add_option("--rank", rank, "domain rank of the hom");
    verify->add_option("--max-weight", max_weight, "largest b-monomial weight (integrality)");

    auto* table = app.add_subcommand("table", "tabulate certificates for a rank");
    table->fallthrough();
    std::string mode;
    table->add_option("mode", mode, "optional mode: linind");
    table->add_option("--rank", rank, "acting group rank")->required();
    table->add_option("--i", i_count, "family size (linind)");
    table->add_option("--m", m, "first parameter (linind)");
    table->add_option("--n", n, "second parameter (linind)");

    try {
        app.parse(argc, argv);

        if (app.got_subcommand(cls)) {
            return run_class(build_class(m, n, hom_text, rank, use_formula, force), as_json);
        }
        if (app.got_subcommand(certify)) {
            const ClassSpec spec = build_class(m, n, hom_text, rank, false, force);
            const SearchPolicy policy = make_policy(m, m + n - 1, k_min, k_max, force);
            return run_certify(spec, policy, as_json);
        }
        if (app.got_subcommand(verify)) {
            CheckLog log;
            if (check == "lemma41") {
                const int bound = n_max > 0 ? n_max : 7;
                if (!force && bound > kLemmaGuard)
                    throw std::invalid_argument("n-max exceeds the guard " +
                                                std::to_string(kLemmaGuard) +
                                                "; pass --force to override");
                verify_lemma41(log, bound);
            } else if (check == "formula") {
                const int bound = n_max > 0 ? n_max : 6;
                if (!force && bound > kLemmaGuard)
                    throw std::invalid_argument("n-max exceeds the guard; pass --force");
                verify_formula(log, bound);
            } else if (check == "integrality") {
                if (m <= 0 || n <= 0)
                    throw std::invalid_argument("integrality needs --m and --n");
                const ClassSpec spec = build_class(m, n, hom_text, rank, false, force);
                const int d = m + n - 1;
                const unsigned weight =
                    max_weight >= 0 ? static_cast<unsigned>(max_weight)
                                    : static_cast<unsigned>(d) + 6;
                if (!force && weight > static_cast<unsigned>(d) + kWeightGuardSlack)
                    throw std::invalid_argument("max-weight exceeds degree+10; pass --force");
                verify_integrality(log, spec, weight);
            } else {
                throw std::invalid_argument("unknown check: " + check);
            }
            return log.finish(as_json);
        }
        if (app.got_subcommand(table)) {
            if (mode.empty()) return run_table(rank, as_json, force);
            if (mode == "linind") {
                if (i_count <= 0 || m <= 0 || n <= 0)
                    throw std::invalid_argument("linind needs --i, --m, --n");
                return run_table_linind(rank, i_count, m, n, as_json, force);
            }
            throw std::invalid_argument("unknown table mode: " + mode);
        }
        return kExitInvalid;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
