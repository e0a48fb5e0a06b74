#include "fsind/group.hpp"

#include <numeric>
#include <sstream>

namespace fsind {

std::string GroupElement::label() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ',';
        os << coords[i];
    }
    os << ')';
    return os.str();
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw input_error("group: modulus list must be nonempty");
    order_ = 1;
    exponent_ = 1;
    for (long n : moduli_) {
        if (n < 1) throw input_error("group: moduli must be >= 1");
        order_ *= n;
        exponent_ = std::lcm(exponent_, n);
    }
}

FiniteAbelianGroup FiniteAbelianGroup::parse(const std::string& spec) {
    std::vector<long> mods;
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            size_t pos = 0;
            long n = std::stol(tok, &pos);
            if (pos != tok.size()) throw input_error("");
            mods.push_back(n);
        } catch (const std::exception&) {
            throw input_error("bad group spec '" + spec + "': expected comma-separated positive integers");
        }
    }
    if (mods.empty()) throw input_error("bad group spec '" + spec + "': empty");
    return FiniteAbelianGroup(std::move(mods));
}

std::string FiniteAbelianGroup::spec() const {
    std::ostringstream os;
    for (size_t i = 0; i < moduli_.size(); ++i) {
        if (i) os << ',';
        os << moduli_[i];
    }
    return os.str();
}

GroupElement FiniteAbelianGroup::identity() const {
    return GroupElement{std::vector<long>(moduli_.size(), 0)};
}

bool FiniteAbelianGroup::contains(const GroupElement& x) const {
    if (x.coords.size() != moduli_.size()) return false;
    for (size_t i = 0; i < moduli_.size(); ++i)
        if (x.coords[i] < 0 || x.coords[i] >= moduli_[i]) return false;
    return true;
}

void FiniteAbelianGroup::check_shape(const GroupElement& x) const {
    if (!contains(x)) throw input_error("element " + x.label() + " does not belong to Z_" + spec());
}

GroupElement FiniteAbelianGroup::compose(const GroupElement& x, const GroupElement& y) const {
    check_shape(x);
    check_shape(y);
    GroupElement r;
    r.coords.resize(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) r.coords[i] = (x.coords[i] + y.coords[i]) % moduli_[i];
    return r;
}

GroupElement FiniteAbelianGroup::inverse(const GroupElement& x) const {
    check_shape(x);
    GroupElement r;
    r.coords.resize(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) r.coords[i] = (moduli_[i] - x.coords[i]) % moduli_[i];
    return r;
}

GroupElement FiniteAbelianGroup::power(const GroupElement& x, long k) const {
    check_shape(x);
    GroupElement r;
    r.coords.resize(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) {
        long m = moduli_[i];
        long c = ((x.coords[i] * (k % m)) % m + m) % m;
        r.coords[i] = c;
    }
    return r;
}

long FiniteAbelianGroup::element_order(const GroupElement& x) const {
    check_shape(x);
    long ord = 1;
    for (size_t i = 0; i < moduli_.size(); ++i) {
        long m = moduli_[i];
        long o = m / std::gcd(m, x.coords[i] == 0 ? m : x.coords[i]);
        ord = std::lcm(ord, o);
    }
    return ord;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(order_);
    for (long idx = 0; idx < order_; ++idx) out.push_back(element_at(idx));
    return out;
}

long FiniteAbelianGroup::index_of(const GroupElement& x) const {
    check_shape(x);
    long idx = 0;
    for (size_t i = 0; i < moduli_.size(); ++i) idx = idx * moduli_[i] + x.coords[i];
    return idx;
}

GroupElement FiniteAbelianGroup::element_at(long idx) const {
    if (idx < 0 || idx >= order_) throw input_error("element index out of range");
    GroupElement x;
    x.coords.resize(moduli_.size());
    for (size_t i = moduli_.size(); i-- > 0;) {
        x.coords[i] = idx % moduli_[i];
        idx /= moduli_[i];
    }
    return x;
}

Cyclotomic FiniteAbelianGroup::character_pairing(const GroupElement& chi, const GroupElement& x) const {
    check_shape(chi);
    check_shape(x);
    long L = exponent_;
    long e = 0;
    for (size_t i = 0; i < moduli_.size(); ++i)
        e = (e + chi.coords[i] * x.coords[i] % L * (L / moduli_[i])) % L;
    return Cyclotomic::root_of_unity(e, L);
}

} // namespace fsind
