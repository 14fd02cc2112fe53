#pragma once

/**
 * @file qpoly.hpp
 * @brief Integer Laurent polynomials in q, 2x2 matrices over them, the
 * homomorphisms nu_q and mu_q, and q-deformed rationals.
 */

#include <map>
#include <string>
#include <vector>

#include "qcomb/cf.hpp"
#include "qcomb/core.hpp"
#include "qcomb/words.hpp"

namespace qcomb {

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) : LaurentPoly(BigInt(c), 0) {}
    LaurentPoly(const BigInt& c, int exponent);

    static LaurentPoly q(int exponent = 1) { return LaurentPoly(BigInt(1), exponent); }

    const std::map<int, BigInt>& coeffs() const { return c_; }
    BigInt coeff(int e) const;
    bool is_zero() const { return c_.empty(); }
    int min_exponent() const;
    int max_exponent() const;
    std::size_t term_count() const { return c_.size(); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly scale(const BigInt& k) const;
    // Multiplies by q^k.
    LaurentPoly shift(int k) const;

    BigInt eval_at_one() const;
    // Constant term; requires no negative exponents.
    BigInt eval_at_zero() const;

    // Dense coefficient list from min_exponent() to max_exponent().
    std::vector<BigInt> dense() const;
    bool is_unimodal() const;

    // Descending sparse form, e.g. "q^4+q^3+2q^2+2q+1"; negative exponents as q^-1.
    std::string str() const;

    bool operator==(const LaurentPoly&) const = default;

private:
    void add_term(int e, const BigInt& c);
    std::map<int, BigInt> c_;
};

struct QVec {
    LaurentPoly x, y;
    bool operator==(const QVec&) const = default;
};

struct QMat2 {
    LaurentPoly m11, m12, m21, m22;

    static QMat2 identity() { return {1, 0, 0, 1}; }
    QMat2 operator*(const QMat2& o) const;
    QVec operator*(const QVec& v) const;
    QMat2 transpose() const { return {m11, m21, m12, m22}; }
    bool operator==(const QMat2&) const = default;
};

QMat2 L_q();
QMat2 R_q();
// diag(1,q) and its inverse.
QMat2 D_q();
QMat2 D_q_inv();

// The pair of generators used by every matrix-product formula. The harness
// accepts a substitute pair to prove it can detect a broken build.
struct QGen {
    QMat2 L, R;
    static const QGen& standard();
};

// 0 -> L_q, 1 -> R_q
QMat2 nu_q(const BinaryWord& w, const QGen& g = QGen::standard());
// 0 -> R_q L_q, 1 -> R_q^2 L_q^2, from the displayed matrices.
QMat2 mu_q(const BinaryWord& w);

// R_q^{a0} L_q^{a1} ... L_q^{a_{2l-1}} (1,0)^T; requires even length.
QVec cf_product(const CFExpansion& a, const QGen& g = QGen::standard());
// Same product through the second form, ending with L_q^{a_{2l-1}-1} (1,1)^T.
QVec cf_product_alt(const CFExpansion& a, const QGen& g = QGen::standard());
// diag(1,q)^{-1} R_q^{a0} ... L_q^{a_{2l-1}} (1,0)^T
QVec statistics_product(const CFExpansion& a, const QGen& g = QGen::standard());
// diag(1,q)^{-1} nu_q(w) (q,q)^T
QVec word_statistics_product(const BinaryWord& w, const QGen& g = QGen::standard());

struct QRational {
    LaurentPoly R, S;

    // "(R)/(S)" with parentheses only around multi-term polynomials.
    std::string str() const;
    // "q^-1(qR)/(S)", the presentation with the q^{-1} prefactor pulled out.
    std::string str_qinv() const;
    bool operator==(const QRational&) const = default;
};

QRational q_rational(const Rational& x, const QGen& g = QGen::standard());
QRational q_rational_alt(const Rational& x, const QGen& g = QGen::standard());

// [x+1]_q = q[x]_q + 1 as exact pairs.
bool q_shift_identity_check(const Rational& x, const QGen& g = QGen::standard());

// Checks the four recurrences relating (X,Y)(aw) and (X,Y)(w) for a = 0,1,
// plus the base case when w is empty.
bool xy_recurrence_check(const BinaryWord& w, const QGen& g = QGen::standard());

} // namespace qcomb
