#include "qcomb/cf.hpp"

#include <algorithm>
#include <cctype>

namespace qcomb {

namespace {

std::string strip(std::string_view t) {
    std::string s;
    for (char c : t)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

// -- Rational ---------------------------------------------------------------

Rational::Rational(BigInt r, BigInt s) : r_(std::move(r)), s_(std::move(s)) {
    if (r_ <= 0 || s_ <= 0) throw DomainError("rational must be positive: " + r_.str() + "/" + s_.str());
    BigInt g = boost::multiprecision::gcd(r_, s_);
    r_ /= g;
    s_ /= g;
}

Rational Rational::parse(std::string_view text) {
    const std::string s = strip(text);
    const auto slash = s.find('/');
    BigInt r, d = 1;
    if (slash == std::string::npos) {
        r = parse_bigint(s);
    } else {
        r = parse_bigint(s.substr(0, slash));
        d = parse_bigint(s.substr(slash + 1));
    }
    if (r <= 0 || d <= 0) throw ParseError("expected a positive rational, got '" + s + "'");
    return Rational(r, d);
}

std::string Rational::str() const { return s_ == 1 ? r_.str() : fraction_str(); }

std::string Rational::fraction_str() const { return r_.str() + "/" + s_.str(); }

// -- CFExpansion ------------------------------------------------------------

CFExpansion::CFExpansion(std::vector<BigInt> a) : a_(std::move(a)) {
    if (a_.empty()) throw DomainError("continued fraction needs at least one quotient");
    if (a_[0] < 0) throw DomainError("a_0 must be nonnegative");
    for (std::size_t i = 1; i < a_.size(); ++i)
        if (a_[i] < 1) throw DomainError("a_i must be positive for i > 0");
    if (a_.back() < 1) throw DomainError("last quotient must be positive");
}

CFExpansion::CFExpansion(std::initializer_list<long> a)
    : CFExpansion(std::vector<BigInt>(a.begin(), a.end())) {}

CFExpansion CFExpansion::parse(std::string_view text) {
    std::string s = strip(text);
    // Brackets are optional so that "2,2,2" can be typed without shell quoting.
    if (!s.empty() && s.front() == '[') {
        if (s.size() < 2 || s.back() != ']') throw ParseError("expected [a0;a1,...], got '" + s + "'");
        s = s.substr(1, s.size() - 2);
    }
    if (s.empty()) throw ParseError("empty continued fraction");
    std::vector<BigInt> a;
    const auto semi = s.find(';');
    if (semi == std::string::npos) {
        for (const auto& part : split(s, ',')) a.push_back(parse_bigint(part));
    } else {
        a.push_back(parse_bigint(s.substr(0, semi)));
        for (const auto& part : split(s.substr(semi + 1), ',')) a.push_back(parse_bigint(part));
    }
    try {
        return CFExpansion(std::move(a));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

BigInt CFExpansion::sum() const {
    BigInt t = 0;
    for (const auto& x : a_) t += x;
    return t;
}

Rational CFExpansion::value() const {
    const auto c = convergents(*this);
    return Rational(c.p(c.k() - 1), c.q(c.k() - 1));
}

std::string CFExpansion::str() const {
    std::string s = "[" + a_[0].str();
    for (std::size_t i = 1; i < a_.size(); ++i) s += (i == 1 ? ";" : ",") + a_[i].str();
    return s + "]";
}

// -- expansions -------------------------------------------------------------

CFExpansion cf_euclid(const Rational& x) {
    std::vector<BigInt> a;
    BigInt r = x.num(), s = x.den();
    while (s != 0) {
        a.push_back(r / s);
        BigInt t = r % s;
        r = s;
        s = t;
    }
    return CFExpansion(std::move(a));
}

CFExpansion with_parity(const CFExpansion& a, bool even) {
    if (a.is_even() == even) return a;
    std::vector<BigInt> q = a.quotients();
    if (q.back() == 1 && q.size() >= 2) {
        q.pop_back();
        q.back() += 1;
    } else {
        q.back() -= 1;
        q.push_back(1);
    }
    return CFExpansion(std::move(q));
}

CFExpansion cf_even(const Rational& x) { return with_parity(cf_euclid(x), true); }

CFExpansion cf_odd(const Rational& x) { return with_parity(cf_euclid(x), false); }

BinaryWord word_of(const CFExpansion& a) {
    if (!a.is_even()) throw DomainError("W needs an even-length expansion, got " + a.str());
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        long n = to_long(a[i]) - (i + 1 == a.size() ? 1 : 0);
        s.append(static_cast<std::size_t>(n), i % 2 == 0 ? '1' : '0');
    }
    return BinaryWord(s);
}

BinaryWord word_of(const Rational& x) { return word_of(cf_even(x)); }

CFExpansion cf_of_word(const BinaryWord& w) {
    const std::string s = w.str() + "0";
    std::vector<BigInt> a;
    std::size_t i = 0;
    char want = '1';
    while (i < s.size()) {
        long run = 0;
        while (i < s.size() && s[i] == want) {
            ++run;
            ++i;
        }
        a.push_back(run);
        want = want == '1' ? '0' : '1';
    }
    return CFExpansion(std::move(a));
}

Rational rational_of_word(const BinaryWord& w) { return cf_of_word(w).value(); }

CFExpansion tau(const CFExpansion& a) {
    if (!a.is_even()) throw DomainError("tau needs an even-length expansion, got " + a.str());
    std::vector<BigInt> t(a.quotients().rbegin(), a.quotients().rend());
    t.front() -= 1;
    t.back() += 1;
    return CFExpansion(std::move(t));
}

ConvergentTable convergents(const CFExpansion& a) {
    const std::size_t k = a.size();
    ConvergentTable t;
    BigInt p2 = 0, p1 = 1, q2 = 1, q1 = 0; // p_{-2}, p_{-1}, q_{-2}, q_{-1}
    t.p_.push_back(p1);
    t.q_.push_back(q1);
    for (std::size_t i = 0; i < k; ++i) {
        BigInt p = a[i] * p1 + p2, q = a[i] * q1 + q2;
        t.p_.push_back(p);
        t.q_.push_back(q);
        p2 = p1;
        p1 = p;
        q2 = q1;
        q1 = q;
    }
    // r_{-1} = r_0 = 1, r_i = a_{i-1} r_{i-1} + r_{i-2}
    t.r_ = {1, 1};
    for (std::size_t i = 1; i <= k; ++i)
        t.r_.push_back(a[i - 1] * t.r_[i] + t.r_[i - 1]);
    return t;
}

IMat2 IMat2::operator*(const IMat2& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
}

std::pair<BigInt, BigInt> matrix_identity_check(const CFExpansion& a) {
    if (!a.is_even()) throw DomainError("matrix identity needs an even-length expansion");
    IMat2 m = IMat2::identity();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const IMat2 g = i % 2 == 0 ? R_int() : L_int();
        for (BigInt j = 0; j < a[i]; ++j) m = m * g;
    }
    return {m.a11, m.a21};
}

std::pair<Rational, Rational> stern_brocot_children(const Rational& x) {
    const BinaryWord w = word_of(x);
    return {rational_of_word(w + 0), rational_of_word(w + 1)};
}

std::pair<Rational, Rational> calkin_wilf_children(const Rational& x) {
    const BinaryWord w = word_of(x);
    return {rational_of_word(0 + w), rational_of_word(1 + w)};
}

std::vector<Rational> tree_level(TreeKind kind, int depth) {
    if (depth < 0) throw DomainError("tree depth must be nonnegative");
    std::vector<Rational> level{Rational(1)};
    for (int d = 0; d < depth; ++d) {
        std::vector<Rational> next;
        for (const auto& x : level) {
            auto [l, r] = kind == TreeKind::SternBrocot ? stern_brocot_children(x) : calkin_wilf_children(x);
            next.push_back(l);
            next.push_back(r);
        }
        level = std::move(next);
    }
    return level;
}

} // namespace qcomb
