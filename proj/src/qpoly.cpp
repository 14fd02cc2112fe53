#include "qcomb/qpoly.hpp"

#include <algorithm>

namespace qcomb {

// -- LaurentPoly ------------------------------------------------------------

LaurentPoly::LaurentPoly(const BigInt& c, int exponent) { add_term(exponent, c); }

void LaurentPoly::add_term(int e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = c_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

BigInt LaurentPoly::coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exponent() const {
    if (c_.empty()) throw DomainError("zero polynomial has no exponents");
    return c_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (c_.empty()) throw DomainError("zero polynomial has no exponents");
    return c_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + o.scale(-1); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::scale(const BigInt& k) const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.add_term(e, c * k);
    return r;
}

LaurentPoly LaurentPoly::shift(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_.emplace(e + k, c);
    return r;
}

BigInt LaurentPoly::eval_at_one() const {
    BigInt t = 0;
    for (const auto& [e, c] : c_) t += c;
    return t;
}

BigInt LaurentPoly::eval_at_zero() const {
    if (!c_.empty() && c_.begin()->first < 0)
        throw DomainError("evaluation at q=0 of a polynomial with negative exponents");
    return coeff(0);
}

std::vector<BigInt> LaurentPoly::dense() const {
    std::vector<BigInt> out;
    if (c_.empty()) return out;
    for (int e = min_exponent(); e <= max_exponent(); ++e) out.push_back(coeff(e));
    return out;
}

bool LaurentPoly::is_unimodal() const {
    const auto d = dense();
    std::size_t i = 0;
    while (i + 1 < d.size() && d[i] <= d[i + 1]) ++i;
    while (i + 1 < d.size() && d[i] >= d[i + 1]) ++i;
    return i + 1 >= d.size();
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string term;
        if (e == 0) {
            term = c.str();
        } else {
            if (c == -1)
                term = "-";
            else if (c != 1)
                term = c.str();
            term += "q";
            if (e != 1) term += "^" + std::to_string(e);
        }
        if (!s.empty() && term[0] != '-') s += "+";
        s += term;
    }
    return s;
}

// -- matrices ---------------------------------------------------------------

QMat2 QMat2::operator*(const QMat2& o) const {
    return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
            m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
}

QVec QMat2::operator*(const QVec& v) const { return {m11 * v.x + m12 * v.y, m21 * v.x + m22 * v.y}; }

QMat2 L_q() { return {LaurentPoly::q(), 0, LaurentPoly::q(), 1}; }
QMat2 R_q() { return {LaurentPoly::q(), 1, 0, 1}; }
QMat2 D_q() { return {1, 0, 0, LaurentPoly::q()}; }
QMat2 D_q_inv() { return {1, 0, 0, LaurentPoly::q(-1)}; }

const QGen& QGen::standard() {
    static const QGen g{L_q(), R_q()};
    return g;
}

QMat2 nu_q(const BinaryWord& w, const QGen& g) {
    QMat2 m = QMat2::identity();
    for (std::size_t i = 0; i < w.size(); ++i) m = m * (w[i] ? g.R : g.L);
    return m;
}

QMat2 mu_q(const BinaryWord& w) {
    const LaurentPoly q = LaurentPoly::q();
    const QMat2 zero{q + q.shift(1), 1, q, 1};
    const QMat2 one{q + q.shift(1).scale(2) + q.shift(2) + q.shift(3), q + 1, q + q.shift(1), 1};
    QMat2 m = QMat2::identity();
    for (std::size_t i = 0; i < w.size(); ++i) m = m * (w[i] ? one : zero);
    return m;
}

namespace {

QMat2 power(const QMat2& g, const BigInt& n) {
    QMat2 m = QMat2::identity();
    for (BigInt i = 0; i < n; ++i) m = m * g;
    return m;
}

void require_even(const CFExpansion& a) {
    if (!a.is_even()) throw DomainError("matrix product needs an even-length expansion, got " + a.str());
}

} // namespace

QVec cf_product(const CFExpansion& a, const QGen& g) {
    require_even(a);
    QMat2 m = QMat2::identity();
    for (std::size_t i = 0; i < a.size(); ++i) m = m * power(i % 2 == 0 ? g.R : g.L, a[i]);
    return m * QVec{1, 0};
}

QVec cf_product_alt(const CFExpansion& a, const QGen& g) {
    require_even(a);
    QMat2 m = QMat2::identity();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const BigInt n = i + 1 == a.size() ? BigInt(a[i] - 1) : a[i];
        m = m * power(i % 2 == 0 ? g.R : g.L, n);
    }
    return m * QVec{1, 1};
}

QVec statistics_product(const CFExpansion& a, const QGen& g) { return D_q_inv() * cf_product(a, g); }

QVec word_statistics_product(const BinaryWord& w, const QGen& g) {
    const LaurentPoly q = LaurentPoly::q();
    return D_q_inv() * (nu_q(w, g) * QVec{q, q});
}

// -- q-rationals ------------------------------------------------------------

namespace {

std::string wrap(const LaurentPoly& p) { return p.term_count() > 1 ? "(" + p.str() + ")" : p.str(); }

} // namespace

std::string QRational::str() const { return wrap(R) + "/" + wrap(S); }

std::string QRational::str_qinv() const { return "q^-1(" + R.shift(1).str() + ")/" + wrap(S); }

QRational q_rational(const Rational& x, const QGen& g) {
    const QVec v = cf_product(cf_even(x), g);
    return {v.x.shift(-1), v.y.shift(-1)};
}

QRational q_rational_alt(const Rational& x, const QGen& g) {
    const QVec v = cf_product_alt(cf_even(x), g);
    return {v.x, v.y};
}

bool q_shift_identity_check(const Rational& x, const QGen& g) {
    const QRational a = q_rational(x, g);
    const QRational b = q_rational(x.plus_one(), g);
    return b.R == a.R.shift(1) + a.S && b.S == a.S;
}

bool xy_recurrence_check(const BinaryWord& w, const QGen& g) {
    const LaurentPoly q = LaurentPoly::q();
    const QVec base = word_statistics_product(w, g);
    if (w.empty() && !(base.x == q && base.y == LaurentPoly(1))) return false;
    const QVec one = word_statistics_product(1 + w, g);
    const QVec zero = word_statistics_product(0 + w, g);
    return one.x == (base.x + base.y).shift(1) && zero.x == base.x.shift(1) && one.y == base.y &&
           zero.y == base.x + base.y;
}

} // namespace qcomb
