// Regenerates the corpus/ directory of .cocyc instances used by the
// verification suite. Usage: gen_corpus OUTPUT_DIR
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "fsind/cocycle.hpp"

using namespace fsind;

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: gen_corpus OUTPUT_DIR\n");
        return 2;
    }
    std::filesystem::create_directories(argv[1]);
    std::string dir = std::string(argv[1]) + "/";
    auto emit = [&](const std::string& name, const ThreeCochain& w) {
        write_three_cochain_file(dir + name + ".cocyc", w);
    };

    // Generating classes on cyclic groups up to order 8.
    for (auto [ell, a] : std::vector<std::pair<long, long>>{
             {2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}, {5, 1}, {5, 2},
             {6, 1}, {6, 3}, {7, 1}, {7, 3}, {8, 1}, {8, 4}})
        emit("gen_c" + std::to_string(ell) + "_" + std::to_string(a),
             ThreeCochain::generating_cyclic(ell, a));

    // Trivial classes.
    emit("trivial_c2", ThreeCochain::trivial(FiniteAbelianGroup({2})));
    emit("trivial_c2c2", ThreeCochain::trivial(FiniteAbelianGroup({2, 2})));
    emit("trivial_c6", ThreeCochain::trivial(FiniteAbelianGroup({6})));

    // Inflations along surjections onto smaller cyclic quotients.
    auto mod_proj = [](const FiniteAbelianGroup& g, long m) {
        std::vector<GroupElement> pi;
        for (const auto& x : g.elements()) pi.push_back(GroupElement{{x.coords[0] % m}});
        return pi;
    };
    {
        FiniteAbelianGroup c4({4});
        emit("infl_c4_from_c2",
             ThreeCochain::inflate(ThreeCochain::generating_cyclic(2, 1), c4, mod_proj(c4, 2)));
        FiniteAbelianGroup c6({6});
        emit("infl_c6_from_c3",
             ThreeCochain::inflate(ThreeCochain::generating_cyclic(3, 1), c6, mod_proj(c6, 3)));
        FiniteAbelianGroup c8({8});
        emit("infl_c8_from_c4",
             ThreeCochain::inflate(ThreeCochain::generating_cyclic(4, 1), c8, mod_proj(c8, 4)));
        FiniteAbelianGroup v4({2, 2});
        std::vector<GroupElement> sum;
        for (const auto& x : v4.elements())
            sum.push_back(GroupElement{{(x.coords[0] + x.coords[1]) % 2}});
        emit("infl_c2c2_from_c2",
             ThreeCochain::inflate(ThreeCochain::generating_cyclic(2, 1), v4, sum));
    }

    // Pointwise products.
    emit("prod_c4_11", ThreeCochain::generating_cyclic(4, 1).product(ThreeCochain::generating_cyclic(4, 1)));
    emit("prod_c6_15", ThreeCochain::generating_cyclic(6, 1).product(ThreeCochain::generating_cyclic(6, 5)));
    {
        FiniteAbelianGroup c8({8});
        emit("prod_c8_gen_infl",
             ThreeCochain::generating_cyclic(8, 2).product(
                 ThreeCochain::inflate(ThreeCochain::generating_cyclic(4, 1), c8, mod_proj(c8, 4))));
    }

    // Seeded-random coboundaries (cohomologically trivial instances).
    std::mt19937 rng(90210);
    auto coboundary = [&](const FiniteAbelianGroup& g, long modulus) {
        TwoCochain h(g, modulus);
        for (long i = 1; i < g.order(); ++i)
            for (long j = 1; j < g.order(); ++j) h.set_exp(i, j, static_cast<long>(rng() % modulus));
        return h.coboundary3();
    };
    FiniteAbelianGroup v4({2, 2}), c4({4}), c2c4({2, 4});
    emit("cob_c2c2_a", coboundary(v4, 4));
    emit("cob_c2c2_b", coboundary(v4, 8));
    emit("cob_c4_a", coboundary(c4, 4));
    emit("cob_c4_b", coboundary(c4, 12));
    emit("cob_c2c4", coboundary(c2c4, 4));

    // A non-commutative double: the three-slot product cocycle on Z_2^3.
    {
        FiniteAbelianGroup g({2, 2, 2});
        ThreeCochain w(g, 2);
        auto els = g.elements();
        for (long i = 0; i < 8; ++i)
            for (long j = 0; j < 8; ++j)
                for (long k = 0; k < 8; ++k)
                    w.set_exp(i, j, k, els[i].coords[0] * els[j].coords[1] * els[k].coords[2]);
        emit("typeIII_c2c2c2", w);
    }
    return 0;
}
