// Command-line front end: triangle checking, witness construction, the
// path/set/monomial dictionary, composition search, Betti tables, and the
// census. Exit codes: 0 accept/success, 1 reject, 2 usage or format error.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "scmh/census.hpp"
#include "scmh/io.hpp"

namespace {

using namespace scmh;

IntVec parse_list(const std::string& s) {
    std::string spaced = s;
    for (char& ch : spaced)
        if (ch == ',') ch = ' ';
    std::istringstream iss(spaced);
    IntVec out;
    std::string tok;
    while (iss >> tok) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (...) {
            throw std::invalid_argument("not an integer list: '" + s + "'");
        }
        if (pos != tok.size()) throw std::invalid_argument("not an integer list: '" + s + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

std::string verdict_line(const Verdict& v) {
    if (v.accepted) return "ACCEPT";
    std::string s = "REJECT condition=";
    s += v.condition;
    s += " at (i=" + std::to_string(v.i);
    if (v.j >= 0) s += ",j=" + std::to_string(v.j);
    s += ")";
    return s;
}

void print_set(const std::vector<int>& xs) {
    if (xs.empty()) {
        std::cout << "set -\n";
        return;
    }
    std::cout << "set";
    for (int x : xs) std::cout << " " << x;
    std::cout << "\n";
}

int run_check_triangle(const std::string& file, bool strict) {
    const Triangle t = read_triangle_file(file);
    const Verdict v = check_htriangle(t, strict ? ValuePolicy::strict_positive : ValuePolicy::admit_zero);
    std::cout << verdict_line(v) << "\n";
    if (!v.accepted) std::cout << "# " << v.describe() << "\n";
    return v.accepted ? 0 : 1;
}

int run_witness(const std::string& file, const std::string& out_path, bool strict) {
    const Triangle t = read_triangle_file(file);
    const ValuePolicy policy = strict ? ValuePolicy::strict_positive : ValuePolicy::admit_zero;
    const Verdict v = check_htriangle(t, policy);
    if (!v.accepted) {
        std::cout << verdict_line(v) << "\n# " << v.describe() << "\n";
        return 1;
    }
    const SimplicialComplex c = build_witness(t, policy);
    if (out_path.empty()) {
        write_facets(std::cout, c);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        write_facets(out, c);
    }
    return 0;
}

int run_htriangle(const std::string& file, bool want_h) {
    const SimplicialComplex c = read_facets_file(file);
    if (c.is_void()) throw std::invalid_argument("the void complex has no triangle");
    const Triangle tilde = htriangle_tilde(c);
    write_triangle(std::cout, want_h ? h_from_htilde(tilde) : tilde);
    return 0;
}

int run_dual(const std::string& file) {
    const SimplicialComplex d = alexander_dual(read_facets_file(file));
    if (d.is_void()) {
        std::cout << "# void complex (no faces)\n";
        return 0;
    }
    write_facets(std::cout, d);
    return 0;
}

int run_bfs(const std::string& mode, const std::string& arg, long long r, long long a) {
    LatticePath p;
    if (mode == "path") {
        p = parse_path(arg);
        if (r >= 0 && r != p.r()) throw std::invalid_argument("--r disagrees with the word");
        if (a >= 0 && a != p.a()) throw std::invalid_argument("--a disagrees with the word");
    } else if (mode == "set") {
        if (r < 0 || a < 0) throw std::invalid_argument("set mode needs --r and --a");
        std::vector<int> s;
        for (Int v : parse_list(arg)) s.push_back(static_cast<int>(v));
        p = nu_inverse(s, static_cast<int>(r), static_cast<int>(a));
    } else {
        if (a < 0) throw std::invalid_argument("monomial mode needs --a");
        std::vector<int> e;
        for (Int v : parse_list(arg)) {
            if (v < 0) throw std::invalid_argument("negative exponent");
            e.push_back(static_cast<int>(v));
        }
        const Monomial m{std::move(e)};
        if (r >= 0 && r != m.vars()) throw std::invalid_argument("--r disagrees with the exponent count");
        p = lambda_inverse(m, static_cast<int>(a));
    }
    std::cout << "path " << to_string(p) << "\n";
    print_set(nu(p));
    std::cout << "monomial " << to_string(lambda(p)) << "\n";
    return 0;
}

void print_composition(const Composition& comp) {
    for (int deg = 0; deg <= comp.space.cap; ++deg) {
        auto ms = monomials_of_degree(comp.space.vars, deg);
        std::reverse(ms.begin(), ms.end());
        for (const auto& m : ms) std::cout << "q[" << to_string(m, "u") << "] = " << comp.q.at(m) << "\n";
    }
    std::cout << "sigma_top = " << sigma_top(comp) << "\n";
}

int run_rho(int vars, int cap, const std::string& hlist, Int r, bool oracle, bool strict) {
    const CompositionSpace sp{vars, cap, parse_list(hlist)};
    const ValuePolicy policy = strict ? ValuePolicy::strict_positive : ValuePolicy::admit_zero;
    const auto val = oracle ? rho_oracle(sp, r, policy) : rho(sp, r, policy);
    if (val)
        std::cout << "rho = " << *val << "\n";
    else
        std::cout << "INFEASIBLE\n";
    return 0;
}

int run_regular_composition(int vars, int cap, const std::string& hlist, Int r, bool strict) {
    const CompositionSpace sp{vars, cap, parse_list(hlist)};
    const ValuePolicy policy = strict ? ValuePolicy::strict_positive : ValuePolicy::admit_zero;
    try {
        print_composition(regular_composition(sp, r, policy));
    } catch (const CompositionInfeasible& e) {
        std::cout << "INFEASIBLE: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int run_betti(const std::string& file) {
    const MonomialIdeal ideal = read_generators_file(file);
    std::cout << format_betti(betti_table(ideal));
    return 0;
}

int run_check_generator_array(const std::string& file, int n, int r, int d) {
    const GeneratorArray g = read_generator_array_file(file);
    const Verdict v = check_generator_array(g, n, r, d);
    std::cout << verdict_line(v) << "\n";
    if (!v.accepted) std::cout << "# " << v.describe() << "\n";
    return v.accepted ? 0 : 1;
}

int run_census(int n, int dmax, const std::string& verify, int jobs) {
    if (!verify.empty()) {
        const RunReport rep = verify_census(n, dmax, jobs);
        std::cout << to_string(rep) << "\n";
        return rep.ok() ? 0 : 1;
    }
    const auto all = enumerate_shifted_parallel(n, dmax, jobs);
    for (const auto& c : all) std::cout << fingerprint(c) << "\n";
    std::cout << "count " << all.size() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shifted-complex toolkit: h-triangle checking, witnesses, dualities, Betti tables"};
    app.require_subcommand(1);
    int ret = 0;

    std::string tri_file;
    bool tri_strict = false;
    auto* ct = app.add_subcommand("check-triangle", "decide whether a triangle file is realizable");
    ct->add_option("file", tri_file, "triangle file (.tri)")->required();
    ct->add_flag("--strict", tri_strict, "require strictly positive composition values");
    ct->callback([&] { ret = run_check_triangle(tri_file, tri_strict); });

    std::string wit_file, wit_out;
    bool wit_strict = false;
    auto* wt = app.add_subcommand("witness", "construct a shifted complex realizing a triangle");
    wt->add_option("file", wit_file, "triangle file (.tri)")->required();
    wt->add_option("--out", wit_out, "write the facet list here instead of stdout");
    wt->add_flag("--strict", wit_strict, "require strictly positive composition values");
    wt->callback([&] { ret = run_witness(wit_file, wit_out, wit_strict); });

    std::string ht_file;
    bool ht_h = false, ht_tilde = false;
    auto* ht = app.add_subcommand("htriangle", "print the triangle of a facet list");
    ht->set_help_flag("--help", "print help");
    ht->add_option("file", ht_file, "facet file (.fac)")->required();
    ht->add_flag("--h", ht_h, "print the shelling-style triangle");
    ht->add_flag("--htilde", ht_tilde, "print the skeleton-wise triangle (default)");
    ht->callback([&] {
        if (ht_h && ht_tilde) throw CLI::ValidationError("htriangle", "--h and --htilde are exclusive");
        ret = run_htriangle(ht_file, ht_h);
    });

    std::string dual_file;
    auto* du = app.add_subcommand("dual", "print the Alexander dual of a facet list");
    du->add_option("file", dual_file, "facet file (.fac)")->required();
    du->callback([&] { ret = run_dual(dual_file); });

    std::string bfs_mode, bfs_arg;
    long long bfs_r = -1, bfs_a = -1;
    auto* bf = app.add_subcommand("bfs", "translate between lattice paths, sets, and monomials");
    bf->add_option("mode", bfs_mode, "path | set | monomial")
        ->required()
        ->check(CLI::IsMember({"path", "set", "monomial"}));
    bf->add_option("arg", bfs_arg, "N/E word, comma-separated set, or comma-separated exponents")->required();
    bf->add_option("--r", bfs_r, "number of E steps / variables");
    bf->add_option("--a", bfs_a, "number of N steps / set size");
    bf->callback([&] { ret = run_bfs(bfs_mode, bfs_arg, bfs_r, bfs_a); });

    int rho_vars = 0, rho_cap = 0;
    std::string rho_h;
    Int rho_r = 0;
    bool rho_oracle_flag = false, rho_strict = false;
    auto* rh = app.add_subcommand("rho", "minimum top-variable mass over compositions");
    rh->set_help_flag("--help", "print help");
    rh->add_option("--vars", rho_vars, "number of variables")->required();
    rh->add_option("--cap", rho_cap, "degree cap")->required();
    rh->add_option("--h", rho_h, "comma-separated bound sequence")->required();
    rh->add_option("r", rho_r, "total mass")->required();
    rh->add_flag("--oracle", rho_oracle_flag, "exhaustive search instead of the greedy construction");
    rh->add_flag("--strict", rho_strict, "require strictly positive values");
    rh->callback([&] { ret = run_rho(rho_vars, rho_cap, rho_h, rho_r, rho_oracle_flag, rho_strict); });

    int rc_vars = 0, rc_cap = 0;
    std::string rc_h;
    Int rc_r = 0;
    bool rc_strict = false;
    auto* rc = app.add_subcommand("regular-composition", "print the greedy minimal composition");
    rc->set_help_flag("--help", "print help");
    rc->add_option("--vars", rc_vars, "number of variables")->required();
    rc->add_option("--cap", rc_cap, "degree cap")->required();
    rc->add_option("--h", rc_h, "comma-separated bound sequence")->required();
    rc->add_option("r", rc_r, "total mass")->required();
    rc->add_flag("--strict", rc_strict, "require strictly positive values");
    rc->callback([&] { ret = run_regular_composition(rc_vars, rc_cap, rc_h, rc_r, rc_strict); });

    std::string betti_file;
    auto* bt = app.add_subcommand("betti", "print the Betti table of a square-free strongly stable ideal");
    bt->add_option("file", betti_file, "generator file (.gens)")->required();
    bt->callback([&] { ret = run_betti(betti_file); });

    std::string cga_file;
    int cga_n = 0, cga_r = 0, cga_d = 0;
    auto* cg = app.add_subcommand("check-generator-array",
                                  "decide whether a generator array arises from a componentwise linear ideal");
    cg->add_option("file", cga_file, "generator-array file")->required();
    cg->add_option("--n", cga_n, "triangle size parameter; the ideal lives in n + r - 1 variables")->required();
    cg->add_option("--r", cga_r, "maximum generator degree")->required();
    cg->add_option("--d", cga_d, "minimum generator degree")->required();
    cg->callback([&] { ret = run_check_generator_array(cga_file, cga_n, cga_r, cga_d); });

    int census_n = 0, census_dmax = 0, census_jobs = 1;
    std::string census_verify;
    auto* cs = app.add_subcommand("census", "enumerate shifted complexes");
    cs->add_option("--n", census_n, "ground set size")->required();
    cs->add_option("--dmax", census_dmax, "maximum facet size")->required();
    cs->add_option("--verify", census_verify, "run cross-checks over the census")->check(CLI::IsMember({"all"}));
    cs->add_option("--jobs", census_jobs, "worker count")->check(CLI::PositiveNumber);
    cs->callback([&] { ret = run_census(census_n, census_dmax, census_verify, census_jobs); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const scmh::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return ret;
}
