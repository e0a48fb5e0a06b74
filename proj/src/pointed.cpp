#include "fsind/pointed.hpp"

#include "fsind/tqd.hpp"

namespace fsind {

namespace {
long mod(long a, long m) { return ((a % m) + m) % m; }
} // namespace

PointedCategory::PointedCategory(FiniteAbelianGroup group, ThreeCochain omega)
    : PointedCategory(std::move(group), std::move(omega), unchecked_tag{}) {
    if (!(omega_.group() == group_)) throw input_error("pointed category: cocycle group mismatch");
    if (!omega_.is_cocycle()) throw input_error("pointed category: omega is not a 3-cocycle");
}

PointedCategory::PointedCategory(FiniteAbelianGroup group, ThreeCochain omega, unchecked_tag)
    : group_(std::move(group)), omega_(std::move(omega)) {}

std::pair<bool, long> PointedCategory::indicator_exp(long x_idx, long n) const {
    GroupElement x = group_.element_at(x_idx);
    if (!(group_.power(x, n) == group_.identity())) return {true, 0};
    long e = 0;
    GroupElement p = x;
    for (long r = 1; r < n; ++r) {
        e = mod(e + omega_.exp_at(x, p, x), omega_.modulus());
        p = group_.compose(p, x);
    }
    return {false, e};
}

Cyclotomic PointedCategory::indicator(const GroupElement& x, long n) const {
    if (n < 1) throw input_error("indicator order must be positive");
    auto [zero, e] = indicator_exp(group_.index_of(x), n);
    if (zero) return Cyclotomic();
    return Cyclotomic::root_of_unity(e, omega_.modulus());
}

long PointedCategory::fs_exponent() const {
    if (cached_exponent_ > 0) return cached_exponent_;
    TwistedDouble d(group_, omega_, TwistedDouble::unchecked_tag{});
    long N = d.fs_exponent_center();
    long scanned = 0;
    for (long n = 1; n <= N && scanned == 0; ++n) {
        bool all_one = true;
        for (long x = 0; x < group_.order() && all_one; ++x) {
            auto [zero, e] = indicator_exp(x, n);
            if (zero || e != 0) all_one = false;
        }
        if (all_one) scanned = n;
    }
    if (scanned != N)
        throw integrity_error("FS exponent mismatch between twist orders and the direct scan");
    cached_exponent_ = N;
    return N;
}

long PointedCategory::total_indicator(const GroupElement& x) const {
    long N = fs_exponent();
    long xi = group_.index_of(x);
    Cyclotomic sum;
    for (long n = 1; n <= N; ++n) {
        auto [zero, e] = indicator_exp(xi, n);
        if (!zero) sum += Cyclotomic::root_of_unity(e, omega_.modulus());
    }
    long total = sum.as_integer(); // not_an_integer is an integrity error
    if (total < 0) throw integrity_error("negative total indicator for " + x.label());
    if ((group_.order() * total) % N != 0)
        throw integrity_error("total indicator fails the divisibility bound for " + x.label());
    return total;
}

CoboundaryVerdict PointedCategory::positivity_coboundary_test(const TwoCochain& c) const {
    if (!EMCocycle(omega_, c).check())
        throw input_error("coboundary test requires an Eilenberg-MacLane pair");
    for (const GroupElement& x : group_.elements())
        if (total_indicator(x) <= 0) return CoboundaryVerdict::NotCoboundary;
    return CoboundaryVerdict::Coboundary;
}

} // namespace fsind
