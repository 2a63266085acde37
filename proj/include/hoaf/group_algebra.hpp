#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <map>
#include <vector>

#include "hoaf/errors.hpp"

namespace hoaf {

using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

/// An element of PSL2(Z): integer matrix [[a,b],[c,d]] with ad - bc = 1,
/// stored as the sign-normalized representative of {M, -M} with c > 0,
/// or c = 0 and a > 0. Entries are arbitrary-precision.
class GroupElement {
public:
    GroupElement();  // identity
    GroupElement(BigInt a, BigInt b, BigInt c, BigInt d);

    static GroupElement identity() { return GroupElement(); }

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& c() const { return c_; }
    const BigInt& d() const { return d_; }

    bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

    GroupElement inverse() const;
    GroupElement pow(int e) const;  // e may be negative

    /// Mobius action z -> (az+b)/(cz+d), entries rounded to double.
    Complex apply(Complex z) const;
    /// cz + d in double precision.
    Complex denominator(Complex z) const;

    friend GroupElement operator*(const GroupElement& x, const GroupElement& y);
    friend bool operator==(const GroupElement& x, const GroupElement& y);
    friend bool operator!=(const GroupElement& x, const GroupElement& y) { return !(x == y); }
    friend bool operator<(const GroupElement& x, const GroupElement& y);

private:
    BigInt a_, b_, c_, d_;
    void normalize();
};

/// Throws DeterminantError unless ad - bc = 1.
GroupElement make_element(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d);

/// Membership in Gamma_0(N): c = 0 mod N. Requires N >= 1.
bool in_gamma0(const GroupElement& g, long level);

/// Topological data of the quotient curve. rank = 2g + c - 1 indexes the
/// weight-2 basis and the psi components.
struct GroupData {
    int genus = 1;
    int cusp_count = 2;
    int elliptic_count = 0;
    int rank() const { return 2 * genus + cusp_count - 1; }
};

/// Level-11 data: genus 1, two cusps, no elliptic elements.
GroupData gamma0_11_data();

/// An element of the integer group ring Z[Gamma] in canonical form (no zero
/// coefficients). Terms produced by delta products carry an ordered
/// factorization used to trace lifted paths, and a constructive lower bound
/// on the augmentation-power (J-adic) order.
class GroupRingElement {
public:
    GroupRingElement() = default;
    explicit GroupRingElement(const GroupElement& g, BigInt coeff = 1);

    static GroupRingElement unit() { return GroupRingElement(GroupElement::identity()); }
    /// g - 1, tagged as lying in J.
    static GroupRingElement delta(const GroupElement& g);

    const std::map<GroupElement, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int size() const { return static_cast<int>(terms_.size()); }

    BigInt coefficient(const GroupElement& g) const;

    /// Ordered factorization recorded for a term, defaulting to {g} (empty
    /// for the identity) when none was recorded.
    std::vector<GroupElement> factorization(const GroupElement& g) const;

    /// Constructive J-power tag: the element is known to lie in J^tag.
    /// 0 means no information.
    int j_order_tag() const { return j_order_; }

    GroupRingElement& operator+=(const GroupRingElement& rhs);
    GroupRingElement& operator-=(const GroupRingElement& rhs);
    friend GroupRingElement operator+(GroupRingElement x, const GroupRingElement& y) { return x += y; }
    friend GroupRingElement operator-(GroupRingElement x, const GroupRingElement& y) { return x -= y; }
    friend GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y);
    friend GroupRingElement operator*(const BigInt& k, GroupRingElement x);
    friend bool operator==(const GroupRingElement& x, const GroupRingElement& y);
    friend bool operator!=(const GroupRingElement& x, const GroupRingElement& y) { return !(x == y); }

private:
    std::map<GroupElement, BigInt> terms_;
    std::map<GroupElement, std::vector<GroupElement>> factors_;
    int j_order_ = 0;

    void add_term(const GroupElement& g, const BigInt& coeff,
                  const std::vector<GroupElement>* factorization);
    void prune();
    friend GroupRingElement delta_product(const std::vector<GroupElement>&);
};

/// Sum of coefficients (the degree map); x lies in J iff this is 0.
BigInt augmentation(const GroupRingElement& x);

/// (g1 - 1)(g2 - 1)...(gs - 1) by repeated ring multiplication. The result
/// carries j_order_tag = s and per-term factorizations. Requires s >= 1.
GroupRingElement delta_product(const std::vector<GroupElement>& elements);

/// The same product expanded by inclusion-exclusion over subsets:
/// sum over S of (-1)^(s-|S|) * (ordered product of selected elements).
/// Must equal delta_product exactly.
GroupRingElement inclusion_exclusion_expand(const std::vector<GroupElement>& elements);

/// (sum_{l=0}^{e-1} g^l) * (g - 1), which telescopes to g^e - 1. e >= 2.
GroupRingElement elliptic_telescoping(const GroupElement& g, int e);

} // namespace hoaf
