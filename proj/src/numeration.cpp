#include "qcomb/numeration.hpp"

namespace qcomb {

std::string digits_str(const Digits& b) {
    std::string s;
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + b[i].str();
    return s;
}

std::string digits_compact(const Digits& b) {
    std::string s;
    for (const auto& d : b) s += d.str();
    return s;
}

Digits parse_digits(std::string_view text) {
    Digits b;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            b.push_back(parse_bigint(cur));
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    b.push_back(parse_bigint(cur));
    return b;
}

bool is_admissible(const Digits& b, const CFExpansion& a) {
    if (b.size() != a.size())
        throw DomainError("digit vector has length " + std::to_string(b.size()) + ", expected " +
                          std::to_string(a.size()));
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 0 || b[i] > a[i]) return false;
        if (i == 0) continue;
        if (i % 2 == 1 && b[i] == a[i] && b[i - 1] != a[i - 1]) return false;
        if (i % 2 == 0 && b[i] == 0 && b[i - 1] != 0) return false;
    }
    return true;
}

namespace {

// Fills b[i] downward given b[i+1]; the constraints only couple neighbours.
void enumerate_from(const CFExpansion& a, std::vector<long>& b, long i, std::vector<Digits>& out) {
    if (i < 0) {
        out.emplace_back(b.begin(), b.end());
        return;
    }
    const long ai = to_long(a[static_cast<std::size_t>(i)]);
    long lo = 0, hi = ai;
    if (i + 1 < static_cast<long>(b.size())) {
        const long next = b[static_cast<std::size_t>(i + 1)];
        const long anext = to_long(a[static_cast<std::size_t>(i + 1)]);
        if ((i + 1) % 2 == 1 && next == anext) lo = hi = ai;
        if ((i + 1) % 2 == 0 && next == 0) lo = hi = 0;
    }
    for (long d = lo; d <= hi; ++d) {
        b[static_cast<std::size_t>(i)] = d;
        enumerate_from(a, b, i - 1, out);
    }
}

} // namespace

std::vector<Digits> enumerate_admissible(const CFExpansion& a) {
    std::vector<long> b(a.size(), 0);
    std::vector<Digits> out;
    enumerate_from(a, b, static_cast<long>(a.size()) - 1, out);
    return out;
}

ZInterval z_interval(const CFExpansion& a) {
    const auto c = convergents(a);
    const int k = c.k();
    if (k % 2 == 1) return {0, c.r(k)};
    return {c.r(k - 1) - c.r(k), c.r(k - 1)};
}

BigInt val(const Digits& b, const CFExpansion& a) {
    if (!is_admissible(b, a)) throw DomainError("digit vector " + digits_str(b) + " is not admissible for " + a.str());
    const auto c = convergents(a);
    BigInt n = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const BigInt t = b[i] * c.r(static_cast<int>(i));
        n += i % 2 == 0 ? t : BigInt(-t);
    }
    return n;
}

namespace {

// Floor division for a positive divisor.
BigInt floor_div(const BigInt& n, const BigInt& d) {
    BigInt q = n / d;
    if (n % d != 0 && n < 0) q -= 1;
    return q;
}

} // namespace

Digits rep(const BigInt& n, const CFExpansion& a) {
    const ZInterval z = z_interval(a);
    if (!z.contains(n))
        throw DomainError(n.str() + " is outside Z(" + a.str() + ") = [" + z.lo.str() + "," + z.hi.str() + ")");
    const auto c = convergents(a);
    Digits b(a.size(), 0);
    BigInt m = n;
    for (int j = static_cast<int>(a.size()) - 1; j >= 1; --j) {
        const BigInt& rj = c.r(j);
        if (j % 2 == 1) {
            // Length j+1 is even: n = -b_j r_j + R with R in [0, r_j).
            const BigInt quot = floor_div(m, rj);
            b[static_cast<std::size_t>(j)] = -quot;
            m -= quot * rj;
        } else {
            // Length j+1 is odd: n - (r_{j-1} - r_j) = b_j r_j + R, recurse on R + r_{j-1} - r_j.
            const BigInt shift = c.r(j - 1) - rj;
            const BigInt quot = floor_div(m - shift, rj);
            b[static_cast<std::size_t>(j)] = quot;
            m = m - quot * rj;
        }
    }
    b[0] = m;
    if (!is_admissible(b, a))
        throw std::logic_error("rep produced an inadmissible sequence for n=" + n.str() + " and a=" + a.str());
    return b;
}

BigInt norm1(const Digits& b) {
    BigInt t = 0;
    for (const auto& d : b) t += d;
    return t;
}

bool is_filled(const Digits& b, const CFExpansion& a) {
    if (b[0] > 0) return true;
    return a.size() >= 2 && a[0] == 0 && b[0] == 0 && b[1] > 0 && b[1] == a[1];
}

Partition partition(const CFExpansion& a) {
    Partition p;
    for (auto& b : enumerate_admissible(a)) (is_filled(b, a) ? p.filled : p.empty).push_back(std::move(b));
    return p;
}

QVec norm1_statistics(const CFExpansion& a) {
    QVec v;
    for (const auto& b : enumerate_admissible(a)) {
        const LaurentPoly t = LaurentPoly::q(static_cast<int>(to_long(norm1(b))));
        (is_filled(b, a) ? v.x : v.y) += t;
    }
    return v;
}

bool digits_leq(const Digits& b, const Digits& c) {
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] > c[i]) return false;
    return true;
}

} // namespace qcomb
