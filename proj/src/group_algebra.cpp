#include "hoaf/group_algebra.hpp"

#include <stdexcept>
#include <tuple>

namespace hoaf {

GroupElement::GroupElement() : a_(1), b_(0), c_(0), d_(1) {}

GroupElement::GroupElement(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ != 1) {
        throw DeterminantError("matrix determinant is not 1");
    }
    normalize();
}

void GroupElement::normalize() {
    if (c_ < 0 || (c_ == 0 && a_ < 0)) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
        d_ = -d_;
    }
}

GroupElement GroupElement::inverse() const {
    return GroupElement(d_, -b_, -c_, a_);
}

GroupElement GroupElement::pow(int e) const {
    GroupElement base = e >= 0 ? *this : inverse();
    int n = e >= 0 ? e : -e;
    GroupElement acc;
    for (int i = 0; i < n; ++i) acc = acc * base;
    return acc;
}

Complex GroupElement::apply(Complex z) const {
    const double a = a_.convert_to<double>();
    const double b = b_.convert_to<double>();
    const double c = c_.convert_to<double>();
    const double d = d_.convert_to<double>();
    return (a * z + b) / (c * z + d);
}

Complex GroupElement::denominator(Complex z) const {
    return c_.convert_to<double>() * z + d_.convert_to<double>();
}

GroupElement operator*(const GroupElement& x, const GroupElement& y) {
    return GroupElement(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                        x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
}

bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

bool operator<(const GroupElement& x, const GroupElement& y) {
    return std::tie(x.a_, x.b_, x.c_, x.d_) < std::tie(y.a_, y.b_, y.c_, y.d_);
}

GroupElement make_element(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
    return GroupElement(a, b, c, d);
}

bool in_gamma0(const GroupElement& g, long level) {
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    return g.c() % level == 0;
}

GroupData gamma0_11_data() {
    return GroupData{1, 2, 0};
}

GroupRingElement::GroupRingElement(const GroupElement& g, BigInt coeff) {
    if (coeff != 0) terms_.emplace(g, std::move(coeff));
}

GroupRingElement GroupRingElement::delta(const GroupElement& g) {
    GroupRingElement r;
    r.add_term(g, 1, nullptr);
    r.add_term(GroupElement::identity(), -1, nullptr);
    r.prune();
    r.j_order_ = 1;
    return r;
}

BigInt GroupRingElement::coefficient(const GroupElement& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<GroupElement> GroupRingElement::factorization(const GroupElement& g) const {
    auto it = factors_.find(g);
    if (it != factors_.end()) return it->second;
    if (g.is_identity()) return {};
    return {g};
}

void GroupRingElement::add_term(const GroupElement& g, const BigInt& coeff,
                                const std::vector<GroupElement>* factorization) {
    if (coeff == 0) return;
    terms_[g] += coeff;
    if (factorization && !factors_.count(g)) factors_[g] = *factorization;
}

void GroupRingElement::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) {
            factors_.erase(it->first);
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs) {
    for (const auto& [g, c] : rhs.terms_) {
        auto f = rhs.factorization(g);
        add_term(g, c, &f);
    }
    prune();
    if (is_zero()) {
        j_order_ = std::max(j_order_, rhs.j_order_);
    } else {
        j_order_ = std::min(j_order_, rhs.j_order_);
    }
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& rhs) {
    for (const auto& [g, c] : rhs.terms_) {
        auto f = rhs.factorization(g);
        add_term(g, -c, &f);
    }
    prune();
    if (is_zero()) {
        j_order_ = std::max(j_order_, rhs.j_order_);
    } else {
        j_order_ = std::min(j_order_, rhs.j_order_);
    }
    return *this;
}

GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) {
    GroupRingElement out;
    for (const auto& [g, cg] : x.terms_) {
        const auto fg = x.factorization(g);
        for (const auto& [h, ch] : y.terms_) {
            GroupElement gh = g * h;
            std::vector<GroupElement> f = fg;
            const auto fh = y.factorization(h);
            f.insert(f.end(), fh.begin(), fh.end());
            out.add_term(gh, cg * ch, &f);
        }
    }
    out.prune();
    out.j_order_ = x.j_order_ + y.j_order_;
    return out;
}

GroupRingElement operator*(const BigInt& k, GroupRingElement x) {
    if (k == 0) return GroupRingElement();
    for (auto& [g, c] : x.terms_) c *= k;
    return x;
}

bool operator==(const GroupRingElement& x, const GroupRingElement& y) {
    return x.terms_ == y.terms_;
}

BigInt augmentation(const GroupRingElement& x) {
    BigInt sum = 0;
    for (const auto& [g, c] : x.terms()) sum += c;
    return sum;
}

GroupRingElement delta_product(const std::vector<GroupElement>& elements) {
    if (elements.empty()) throw std::invalid_argument("delta_product needs at least one element");
    GroupRingElement acc = GroupRingElement::delta(elements.front());
    for (std::size_t i = 1; i < elements.size(); ++i) {
        acc = acc * GroupRingElement::delta(elements[i]);
    }
    acc.j_order_ = static_cast<int>(elements.size());
    return acc;
}

GroupRingElement inclusion_exclusion_expand(const std::vector<GroupElement>& elements) {
    if (elements.empty()) throw std::invalid_argument("expansion needs at least one element");
    const int s = static_cast<int>(elements.size());
    GroupRingElement out;
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
        GroupElement prod;  // ordered product over the selected positions
        int selected = 0;
        for (int i = 0; i < s; ++i) {
            if (mask & (1u << i)) {
                prod = prod * elements[i];
                ++selected;
            }
        }
        BigInt sign = ((s - selected) % 2 == 0) ? 1 : -1;
        out += GroupRingElement(prod, sign);
    }
    return out;
}

GroupRingElement elliptic_telescoping(const GroupElement& g, int e) {
    if (e < 2) throw std::invalid_argument("telescoping exponent must be >= 2");
    GroupRingElement geom;
    for (int l = 0; l < e; ++l) geom += GroupRingElement(g.pow(l));
    return geom * GroupRingElement::delta(g);
}

} // namespace hoaf
