#include "fsind/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <random>
#include <sstream>
#include <vector>

#include "fsind/cocycle.hpp"
#include "fsind/pointed.hpp"
#include "fsind/tqd.hpp"
#include "fsind/ty.hpp"

namespace fsind {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw integrity_error(what);
}

void check_cocycle_instance(const std::string& path) {
    ThreeCochain omega = read_three_cochain_file(path);
    const FiniteAbelianGroup& g = omega.group();
    if (g.order() > 16) throw input_error(path + ": desk-scale limit (|G| <= 16) exceeded");
    if (!omega.is_cocycle()) throw input_error(path + ": not a 3-cocycle");

    TwistedDouble d(g, omega);
    require(d.structure_checks(), path + ": structure-constant axioms violated");

    // Derived symmetry of the grading slice.
    for (long a = 0; a < g.order(); ++a)
        for (long x = 0; x < g.order(); ++x)
            require(d.theta_exp(a, a, x) == d.theta_exp(a, x, a),
                    path + ": grading not in the radical of its own slice");

    auto simples = d.center_simples();
    long sumsq = 0;
    for (const CenterSimple& s : simples) sumsq += s.dim * s.dim;
    require(sumsq == g.order() * g.order(), path + ": center dimension count is off");

    // Dual-path totals and the integrality/divisibility bounds.
    PointedCategory c(g, omega);
    long N = c.fs_exponent(); // internally cross-checked against the center
    require(N % g.exponent() == 0, path + ": FS exponent not a multiple of exp(G)");
    for (const GroupElement& x : g.elements()) {
        long via_sum = c.total_indicator(x); // certifies integrality, sign, divisibility
        long via_center = d.total_indicator_via_center(x);
        require(via_sum == via_center, path + ": total-indicator paths disagree at " + x.label());
    }

    if (d.is_commutative()) {
        auto gls = d.grouplikes();
        require(static_cast<long>(gls.size()) == g.order() * g.order(),
                path + ": group-like count is not |G|^2");
        require(d.em_on_grouplikes().check(), path + ": group-like braiding pair fails");
        d.is_genuine(); // exercises the pointed category on the group-likes
    }
}

void check_random_cochains(long count, VerifyStats& stats) {
    std::mt19937 rng(424243);
    std::vector<std::vector<long>> shapes = {{2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}};
    for (long t = 0; t < count; ++t) {
        FiniteAbelianGroup g(shapes[t % shapes.size()]);
        long modulus = 2 + static_cast<long>(rng() % 11);
        TwoCochain h(g, modulus);
        for (long i = 1; i < g.order(); ++i)
            for (long j = 1; j < g.order(); ++j) h.set_exp(i, j, static_cast<long>(rng() % modulus));
        ThreeCochain dh = h.coboundary3();
        require(dh.is_cocycle(), "coboundary of a random 2-cochain is not a cocycle");
        EMCocycle em(dh, h.skew());
        require(em.check(), "coboundary braiding pair fails the compatibility equalities");
        require(em.trace().is_quadratic(), "braiding trace is not quadratic");
        require(em.c().symmetrize().is_bicharacter(), "braiding symmetrization is not a bicharacter");
        ++stats.random_cochains;
    }
}

void check_ty_grid(VerifyStats& stats) {
    auto diag = [](long p, std::vector<long> d) {
        BilinearForm b;
        b.p = p;
        b.r = static_cast<long>(d.size());
        b.gram.assign(d.size(), std::vector<long>(d.size(), 0));
        for (size_t i = 0; i < d.size(); ++i) b.gram[i][i] = ((d[i] % p) + p) % p;
        return b;
    };
    std::vector<TYCategory> grid;
    for (long ell : {1L, 2L})
        for (int sign : {1, -1}) {
            grid.emplace_back(diag(2, std::vector<long>(2 * ell, 1)), sign);
            BilinearForm alt;
            alt.p = 2;
            alt.r = 2 * ell;
            alt.gram.assign(2 * ell, std::vector<long>(2 * ell, 0));
            for (long i = 0; i < ell; ++i) alt.gram[2 * i][2 * i + 1] = alt.gram[2 * i + 1][2 * i] = 1;
            grid.emplace_back(alt, sign);
            for (long p : {3L, 5L, 7L})
                for (int disc : {1, -1}) {
                    long u = 2;
                    while (legendre(u, p) != -1) ++u;
                    std::vector<long> d(2 * ell, 1);
                    if (disc == -1) d.back() = u;
                    grid.emplace_back(diag(p, d), sign);
                }
        }
    for (const TYCategory& c : grid) {
        long N = c.fs_exponent(); // closed form vs scan
        long total_m = c.total_m(); // closed form vs summation
        require(c.indicator_m(2) == Cyclotomic::integer(c.sign_tau()),
                "nu_2(m) is not the sign of tau");
        require(c.indicator_m(N) == Cyclotomic::integer(c.dim_m()), "nu_N(m) is not d(m)");
        for (long n = 1; n < N; n += 2)
            require(c.indicator_m(n) == Cyclotomic(), "odd indicator of m is nonzero");
        require(total_m >= 0, "negative total indicator");
        require((c.dim_total() * total_m) % N == 0, "total indicator divisibility bound fails");
        bool all_meet = total_m >= c.dim_m();
        long checked_orders = 0;
        for (const GroupElement& a : c.base_group().elements()) {
            if (c.base_group().element_order(a) > 1 && ++checked_orders > 1) continue;
            long t = c.total_invertible(a);
            if (t < 1) all_meet = false;
        }
        if (c.p() != 2)
            require((c.admits_fibration() == FibrationVerdict::Fibration) == all_meet,
                    "fibration verdict disagrees with the total-indicator criterion");
        ++stats.ty_instances;
    }
    // Positive totals without a fibration.
    TYCategory witness(diag(3, {1, 1}), -1);
    require(witness.admits_fibration() == FibrationVerdict::NoFibration &&
                witness.total_m() == 1,
            "positive-totals/no-fibration witness lost");
    ++stats.ty_instances;
}

} // namespace

VerifyStats verify_corpus(const std::string& dir) {
    namespace fs = std::filesystem;
    VerifyStats stats;
    if (!fs::is_directory(dir)) throw input_error("corpus directory not found: " + dir);
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".cocyc")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw input_error("no .cocyc files in " + dir);
    for (const std::string& path : files) {
        check_cocycle_instance(path);
        ++stats.cocycle_files;
    }
    check_random_cochains(100, stats);
    check_ty_grid(stats);
    return stats;
}

std::string verify_corpus_report(const std::string& dir) {
    VerifyStats s = verify_corpus(dir);
    std::ostringstream out;
    out << "verify: all invariants hold\n"
        << "  cocycle instances: " << s.cocycle_files << "\n"
        << "  random 2-cochains: " << s.random_cochains << "\n"
        << "  Tambara-Yamagami instances: " << s.ty_instances << "\n";
    return out.str();
}

} // namespace fsind
