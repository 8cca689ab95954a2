#include "tamari/counting.hpp"

#include "tamari/error.hpp"

namespace tamari {

namespace {

// Every closed form below is integral; a remainder means a transcription bug.
BigInt exact_div(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) {
        throw Error(ErrorCode::OracleDisagreement, "inexact division " + num.str() + " / " + den.str());
    }
    return q;
}

BigInt pow2(int e) {
    BigInt p = 1;
    p <<= e;
    return p;
}

void require_positive(int n) {
    if (n < 1) throw Error(ErrorCode::UnsupportedSize, "size must be at least 1, got " + std::to_string(n));
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::General: return "general";
        case Family::Synchronized: return "synchronized";
        case Family::Modern: return "modern";
        case Family::New: return "new";
        case Family::ModernSynchronized: return "modern-synchronized";
        case Family::InfinitelyModern: return "infinitely-modern";
        case Family::Kreweras: return "kreweras";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (Family f : kAllFamilies) {
        if (family_name(f) == name) return f;
    }
    throw Error(ErrorCode::ParseError, "unknown family '" + std::string(name) + "'");
}

bool in_family(const TamariInterval& interval, Family f) {
    switch (f) {
        case Family::General: return true;
        case Family::Synchronized: return is_synchronized(interval);
        case Family::Modern: return is_modern(interval);
        case Family::New: return is_new(interval);
        case Family::ModernSynchronized: return is_modern(interval) && is_synchronized(interval);
        case Family::InfinitelyModern: return is_infinitely_modern(interval);
        case Family::Kreweras: return is_kreweras(interval);
    }
    return false;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigInt catalan(int n) {
    return exact_div(binomial(2 * n, n), n + 1);
}

BigInt count(Family f, int n) {
    if (f == Family::New) {
        require_positive(n);
        return count(Family::Modern, n - 1);
    }
    if (f == Family::Modern && n == 0) return 1;
    require_positive(n);
    switch (f) {
        case Family::General: return exact_div(2 * binomial(4 * n + 1, n - 1), BigInt(n) * (n + 1));
        case Family::Synchronized: return exact_div(2 * binomial(3 * n, n - 1), BigInt(n) * (n + 1));
        case Family::Modern:
            return exact_div(3 * pow2(n - 1) * binomial(2 * n, n), BigInt(n + 1) * (n + 2));
        case Family::ModernSynchronized: return catalan(n);
        case Family::InfinitelyModern:
        case Family::Kreweras: return exact_div(binomial(3 * n, n), 2 * n + 1);
        case Family::New: break;
    }
    return 0;
}

BigInt count_self_dual(Family f, int n) {
    if (f == Family::New) {
        // rise commutes with duality, so self-dual new intervals are rises of
        // self-dual modern ones.
        require_positive(n);
        return n == 1 ? BigInt(1) : count_self_dual(Family::Modern, n - 1);
    }
    require_positive(n);
    const int k = n / 2;
    if (n % 2 == 0) {
        switch (f) {
            case Family::General: return exact_div(binomial(4 * k, k), 3 * k + 1);
            case Family::Synchronized: return 0;
            case Family::Modern: return exact_div(pow2(k - 1) * binomial(2 * k, k), k + 1);
            case Family::ModernSynchronized: return 0;
            case Family::InfinitelyModern:
            case Family::Kreweras: return exact_div(binomial(3 * k, k), 2 * k + 1);
            case Family::New: break;
        }
    } else {
        switch (f) {
            case Family::General: return exact_div(binomial(4 * k + 2, k), k + 1);
            case Family::Synchronized: return exact_div(binomial(3 * k + 1, k), k + 1);
            case Family::Modern: return exact_div(pow2(k) * binomial(2 * k, k), k + 1);
            case Family::ModernSynchronized: return catalan(k);
            case Family::InfinitelyModern:
            case Family::Kreweras: return exact_div(binomial(3 * k + 1, k), k + 1);
            case Family::New: break;
        }
    }
    return 0;
}

BigInt count_J(int n, int k) {
    require_positive(n);
    if (k < 0) return 0;
    return exact_div(2 * binomial(3 * n, k) * binomial(n + 1, k + 2), BigInt(n) * (n + 1));
}

BigInt count_sync_ij(int i, int j) {
    if (i < 1 || j < 1) return 0;
    return exact_div(binomial(2 * i + j - 2, j - 1) * binomial(2 * j + i - 2, i - 1), BigInt(i) * j);
}

BigInt narayana(int i, int j) {
    if (i < 1 || j < 1) return 0;
    return exact_div(binomial(i + j - 1, i) * binomial(i + j - 1, j), i + j - 1);
}

// --- TriSeries ------------------------------------------------------------

TriSeries TriSeries::monomial(int max_degree, int i, int j, int m, BigInt c) {
    TriSeries s(max_degree);
    s.set(i, j, m, std::move(c));
    return s;
}

BigInt TriSeries::coefficient(int i, int j, int m) const {
    const auto it = terms_.find({i, j, m});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void TriSeries::set(int i, int j, int m, BigInt c) {
    if (i + j + m > max_degree_) return;
    if (c == 0) {
        terms_.erase({i, j, m});
    } else {
        terms_[{i, j, m}] = std::move(c);
    }
}

TriSeries TriSeries::operator+(const TriSeries& o) const {
    TriSeries r = *this;
    r.max_degree_ = std::min(max_degree_, o.max_degree_);
    for (const auto& [k, c] : o.terms_) r.set(k[0], k[1], k[2], r.coefficient(k[0], k[1], k[2]) + c);
    return r;
}

TriSeries TriSeries::operator-(const TriSeries& o) const {
    TriSeries r = *this;
    r.max_degree_ = std::min(max_degree_, o.max_degree_);
    for (const auto& [k, c] : o.terms_) r.set(k[0], k[1], k[2], r.coefficient(k[0], k[1], k[2]) - c);
    return r;
}

TriSeries TriSeries::operator*(const TriSeries& o) const {
    TriSeries r(std::min(max_degree_, o.max_degree_));
    std::map<Key, BigInt> acc;
    for (const auto& [ka, ca] : terms_) {
        const int da = ka[0] + ka[1] + ka[2];
        for (const auto& [kb, cb] : o.terms_) {
            if (da + kb[0] + kb[1] + kb[2] > r.max_degree_) continue;
            acc[{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}] += ca * cb;
        }
    }
    for (auto& [k, c] : acc) r.set(k[0], k[1], k[2], std::move(c));
    return r;
}

TriSeries TriSeries::geometric() const {
    if (coefficient(0, 0, 0) != 0) {
        throw Error(ErrorCode::OracleDisagreement, "1/(1-S) needs S without constant term");
    }
    const TriSeries one = monomial(max_degree_, 0, 0, 0);
    TriSeries g = one;
    for (int d = 0; d < max_degree_; ++d) g = one + *this * g;
    return g;
}

TriSeries TriSeries::swap_xy() const {
    TriSeries r(max_degree_);
    for (const auto& [k, c] : terms_) r.set(k[1], k[0], k[2], c);
    return r;
}

TrivariateResult trivariate_coefficients(int max_n, int cap) {
    if (max_n < 1 || max_n > cap) {
        throw Error(ErrorCode::SizeCapExceeded,
                    "series size " + std::to_string(max_n) + " outside [1, " + std::to_string(cap) + "]");
    }
    // An interval of size n has n + 1 canopy entries.
    const int degree = max_n + 1;
    const TriSeries x = TriSeries::monomial(degree, 1, 0, 0);
    const TriSeries y = TriSeries::monomial(degree, 0, 1, 0);
    const TriSeries z = TriSeries::monomial(degree, 0, 0, 1);

    TrivariateResult out{TriSeries(degree), TriSeries(degree), {}, 0};
    TriSeries& a = out.a;
    TriSeries& b = out.b;
    for (;;) {
        const TriSeries ga = a.geometric();
        const TriSeries gb = b.geometric();
        TriSeries na = gb * gb * (y + z * a * ga);
        TriSeries nb = ga * ga * (x + z * b * gb);
        ++out.rounds;
        if (na == a && nb == b) break;
        if (out.rounds > degree + 2) {
            throw Error(ErrorCode::OracleDisagreement, "trivariate fixed point did not stabilize");
        }
        a = std::move(na);
        b = std::move(nb);
    }
    if (!(a == b.swap_xy())) throw Error(ErrorCode::OracleDisagreement, "A(x,y,z) != B(y,x,z)");

    const TriSeries ga = a.geometric();
    const TriSeries gb = b.geometric();
    const TriSeries ab = a * b;
    const TriSeries f = x * a * ga + y * b * gb + z * ab * ga * gb - ab;
    for (const auto& [k, c] : f.terms()) {
        if (c < 0) throw Error(ErrorCode::OracleDisagreement, "negative trivariate coefficient");
        out.coefficients[k] = c;
    }
    // Edge-marked trees: (i + j + m - 1) I_{i,j,m} = [x^i y^j z^m] AB.
    for (const auto& [k, c] : ab.terms()) {
        if (BigInt(k[0] + k[1] + k[2] - 1) * f.coefficient(k[0], k[1], k[2]) != c) {
            throw Error(ErrorCode::OracleDisagreement, "edge-marked identity fails at (" + std::to_string(k[0]) +
                                                           "," + std::to_string(k[1]) + "," +
                                                           std::to_string(k[2]) + ")");
        }
    }
    for (const auto& [k, c] : f.terms()) {
        if (ab.coefficient(k[0], k[1], k[2]) == 0 && k[0] + k[1] + k[2] > 1) {
            throw Error(ErrorCode::OracleDisagreement, "edge-marked identity misses a term");
        }
    }
    return out;
}

// --- modern series ----------------------------------------------------------

namespace {

using Poly = std::vector<BigInt>;

Poly mul(const Poly& p, const Poly& q) {
    Poly r(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        for (std::size_t j = 0; i + j < r.size(); ++j) r[i + j] += p[i] * q[j];
    }
    return r;
}

Poly geometric(const Poly& s) {
    if (s[0] != 0) throw Error(ErrorCode::OracleDisagreement, "1/(1-S) needs S without constant term");
    Poly g(s.size(), 0);
    g[0] = 1;
    for (std::size_t d = 1; d < s.size(); ++d) {
        g = mul(s, g);
        g[0] += 1;
    }
    return g;
}

}  // namespace

ModernSeries modern_series_coefficients(int max_n, int cap) {
    if (max_n < 1 || max_n > cap) {
        throw Error(ErrorCode::SizeCapExceeded,
                    "series size " + std::to_string(max_n) + " outside [1, " + std::to_string(cap) + "]");
    }
    const std::size_t len = static_cast<std::size_t>(max_n) + 1;
    Poly a(len, 0), b(len, 0);
    Poly z(len, 0);
    z[1] = 1;
    for (int round = 0;; ++round) {
        const Poly gb = geometric(b);
        Poly inner = mul(a, gb);
        inner[0] += 1;  // 1 + A/(1-B)
        const Poly zg = mul(z, gb);
        Poly nb = mul(zg, inner);
        Poly na = mul(nb, inner);
        if (na == a && nb == b) break;
        if (round > max_n + 2) throw Error(ErrorCode::OracleDisagreement, "modern fixed point did not stabilize");
        a = std::move(na);
        b = std::move(nb);
    }
    ModernSeries out{a, b, mul(a, geometric(b))};
    for (int n = 1; n <= max_n; ++n) {
        if (out.c[n] != exact_div(pow2(n - 1) * binomial(2 * n, n), n + 1)) {
            throw Error(ErrorCode::OracleDisagreement, "C_m coefficient mismatch at n=" + std::to_string(n));
        }
    }
    Poly one_c = out.c;
    one_c[0] += 1;
    const Poly sq = mul(one_c, one_c);
    for (int n = 1; n <= max_n; ++n) {
        if (exact_div(sq[n], n + 1) != count(Family::Modern, n)) {
            throw Error(ErrorCode::OracleDisagreement, "modern count mismatch at n=" + std::to_string(n));
        }
    }
    return out;
}

void Tally::merge(const Tally& o) {
    total += o.total;
    for (const auto& [k, v] : o.family) family[k] += v;
    for (const auto& [k, v] : o.self_dual) self_dual[k] += v;
    for (const auto& [k, v] : o.canopy) canopy[k] += v;
    if (equal_canopy.size() < o.equal_canopy.size()) equal_canopy.resize(o.equal_canopy.size(), 0);
    for (std::size_t k = 0; k < o.equal_canopy.size(); ++k) equal_canopy[k] += o.equal_canopy[k];
    for (const auto& [k, v] : o.synchronized_ij) synchronized_ij[k] += v;
    for (const auto& [k, v] : o.modern_synchronized_ij) modern_synchronized_ij[k] += v;
}

}  // namespace tamari
