/* Copyright 2026 The mtomega Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Exact arithmetic in Q(zeta_n) = Q[x]/Phi_n(x) and evaluation of cyclotomic
// multiple omega values, z_n values and q-multiple polylogarithm series.

#ifndef MTOMEGA_CYCLO_HPP
#define MTOMEGA_CYCLO_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"
#include "hbar.hpp"
#include "index.hpp"
#include "modular.hpp"
#include "rational.hpp"

namespace mtomega {

// ---------------------------------------------------------------------------
// Integer polynomials, coefficients from low to high degree

namespace poly {

using ZPoly = std::vector<Integer>;
using QPoly = std::vector<Rational>;

template <class P>
void trim(P& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Exact division by a monic divisor; the remainder must vanish.
inline ZPoly divide_exact(ZPoly a, const ZPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {};
    ZPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        Integer c = a[i];
        q[i - db] = c;
        if (c != 0)
            for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (const auto& r : a)
        if (r != 0) throw InternalClosureError("inexact polynomial division");
    return q;
}

inline QPoly to_q(const ZPoly& a) { return QPoly(a.begin(), a.end()); }

inline QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

inline QPoly sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// a = q b + r with deg r < deg b
inline void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    r = a;
    trim(r);
    q.clear();
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    if (r.size() < b.size()) return;
    q.assign(r.size() - b.size() + 1, 0);
    const Rational lead = b.back();
    const std::size_t db = b.size() - 1;
    for (std::size_t i = r.size() - 1;; --i) {
        Rational c = r[i] / lead;
        q[i - db] = c;
        if (c != 0)
            for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
        if (i == db) break;
    }
    trim(r);
    trim(q);
}

}  // namespace poly

inline std::vector<Integer> cyclotomic_polynomial(int n) {
    if (n < 1) throw RangeError("cyclotomic polynomial needs n >= 1");
    std::map<int, poly::ZPoly> phis;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        poly::ZPoly a(static_cast<std::size_t>(d) + 1, 0);  // x^d - 1
        a[0] = -1;
        a[static_cast<std::size_t>(d)] = 1;
        for (const auto& [e, f] : phis)
            if (d % e == 0) a = poly::divide_exact(a, f);
        phis[d] = a;
    }
    return phis[n];
}

inline int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

/** The field Q(zeta_n): n, the minimal polynomial Phi_n and its degree. */
struct CycloCtx {
    int n = 0;
    std::vector<Integer> phi;  // monic, length degree + 1
    int degree = 0;
    std::vector<std::vector<Integer>> xpow;  // x^e mod Phi_n for 0 <= e < n
};

using CycloCtxPtr = std::shared_ptr<const CycloCtx>;

inline CycloCtxPtr make_cyclo_ctx(int n) {
    if (n < 2) throw RangeError("cyclotomic fields are used for n >= 2, got " + std::to_string(n));
    auto ctx = std::make_shared<CycloCtx>();
    ctx->n = n;
    ctx->phi = cyclotomic_polynomial(n);
    ctx->degree = static_cast<int>(ctx->phi.size()) - 1;
    const std::size_t d = static_cast<std::size_t>(ctx->degree);
    std::vector<Integer> cur(d, 0);
    cur[0] = 1;
    for (int e = 0; e < n; ++e) {
        ctx->xpow.push_back(cur);
        // multiply by x
        Integer top = cur[d - 1];
        for (std::size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (std::size_t i = 0; i < d; ++i) cur[i] -= top * ctx->phi[i];
    }
    return ctx;
}

// Reduce a coefficient vector of any length modulo the monic Phi_n in place.
template <class T>
void reduce_mod_phi(std::vector<T>& a, const CycloCtx& ctx) {
    const std::size_t d = static_cast<std::size_t>(ctx.degree);
    for (std::size_t i = a.size(); i-- > d;) {
        if (a[i] == 0) continue;
        T c = a[i];
        for (std::size_t j = 0; j < d; ++j)
            if (ctx.phi[j] != 0) a[i - d + j] -= c * ctx.phi[j];
        a[i] = 0;
    }
    a.resize(d, T(0));
}

/** An element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1}. */
class CycloElem {
public:
    explicit CycloElem(CycloCtxPtr ctx) : ctx_(std::move(ctx)), c_(static_cast<std::size_t>(ctx_->degree), 0) {}
    CycloElem(CycloCtxPtr ctx, std::vector<Rational> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
        reduce_mod_phi(c_, *ctx_);
    }

    static CycloElem constant(CycloCtxPtr ctx, const Rational& r) {
        CycloElem e(std::move(ctx));
        e.c_[0] = r;
        return e;
    }
    static CycloElem zeta_power(CycloCtxPtr ctx, long k) {
        const long n = ctx->n;
        const auto& xp = ctx->xpow[static_cast<std::size_t>(((k % n) + n) % n)];
        CycloElem e(ctx);
        for (std::size_t i = 0; i < xp.size(); ++i) e.c_[i] = Rational(xp[i]);
        return e;
    }
    // 1 - zeta
    static CycloElem one_minus_zeta(const CycloCtxPtr& ctx) {
        return constant(ctx, 1) - zeta_power(ctx, 1);
    }
    // [m] = 1 + zeta + ... + zeta^{m-1}
    static CycloElem q_integer(const CycloCtxPtr& ctx, long m) {
        CycloElem e(ctx);
        for (long i = 0; i < m; ++i) e += zeta_power(ctx, i);
        return e;
    }

    const CycloCtxPtr& ctx() const { return ctx_; }
    int n() const { return ctx_->n; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
    }

    CycloElem& operator+=(const CycloElem& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    CycloElem& operator-=(const CycloElem& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    CycloElem& operator*=(const Rational& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }
    friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
    friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
    friend CycloElem operator-(CycloElem a) { return a *= Rational(-1); }
    friend CycloElem operator*(CycloElem a, const Rational& s) { return a *= s; }
    friend CycloElem operator*(const Rational& s, CycloElem a) { return a *= s; }
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b) {
        a.check(b);
        std::vector<Rational> prod(a.c_.size() * 2, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i] != 0)
                for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
        return CycloElem(a.ctx_, std::move(prod));
    }
    CycloElem& operator*=(const CycloElem& o) { return *this = *this * o; }
    bool operator==(const CycloElem& o) const { return ctx_->n == o.ctx_->n && c_ == o.c_; }

    CycloElem pow(unsigned long e) const {
        CycloElem r = constant(ctx_, 1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[i].get_str() + ")";
            if (i) s += "*z^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

private:
    void check(const CycloElem& o) const {
        if (ctx_->n != o.ctx_->n) throw RangeError("mixing Q(zeta_n) for different n");
    }
    CycloCtxPtr ctx_;
    std::vector<Rational> c_;
};

// Inverse by the extended Euclidean algorithm against Phi_n.
inline CycloElem cyclo_inv(const CycloElem& x) {
    if (x.is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(x.n()) + ")");
    using poly::QPoly;
    QPoly r0 = poly::to_q(x.ctx()->phi), r1 = x.coeffs();
    poly::trim(r1);
    QPoly s0, s1{Rational(1)};  // s_i * x == r_i  (mod Phi)
    while (r1.size() > 1) {
        QPoly q, r;
        poly::divmod(r0, r1, q, r);
        QPoly s = poly::sub(s0, poly::mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant since Phi_n is irreducible
    const Rational c = r1.at(0);
    for (auto& v : s1) v /= c;
    return CycloElem(x.ctx(), s1);
}

// ---------------------------------------------------------------------------
// Integral evaluation: n/[m] lies in Z[zeta_n], so n^{wt} omega_n and n^{wt} z_n
// are computed in Z[zeta_n] and divided at the end.

namespace detail {

using IntCyclo = std::vector<Integer>;

inline IntCyclo int_mul(const IntCyclo& a, const IntCyclo& b, const CycloCtx& ctx) {
    std::vector<Integer> prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    reduce_mod_phi(prod, ctx);
    return prod;
}

inline void int_addmul(IntCyclo& acc, const IntCyclo& a, const IntCyclo& b, const CycloCtx& ctx) {
    IntCyclo p = int_mul(a, b, ctx);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += p[i];
}

inline bool int_is_zero(const IntCyclo& a) {
    return std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace detail

/** Evaluates omega_n and z_n at zeta_n for one n, caching shared pieces. */
class CycloEvaluator {
public:
    explicit CycloEvaluator(int n) : ctx_(make_cyclo_ctx(n)), n_(n) {
        const std::size_t d = static_cast<std::size_t>(ctx_->degree);
        // n/[m] = -(1 - zeta) sum_j j zeta^{m j}
        nq_.assign(static_cast<std::size_t>(n), detail::IntCyclo(d, 0));
        detail::IntCyclo one_minus(d, 0);
        for (std::size_t i = 0; i < d; ++i) one_minus[i] = ctx_->xpow[0][i] - ctx_->xpow[1][i];
        for (int m = 1; m < n; ++m) {
            detail::IntCyclo s(d, 0);
            for (int j = 1; j < n; ++j) {
                const auto& xp = ctx_->xpow[static_cast<std::size_t>((static_cast<long>(m) * j) % n)];
                for (std::size_t i = 0; i < d; ++i)
                    if (xp[i] != 0) s[i] += xp[i] * j;
            }
            detail::IntCyclo v = detail::int_mul(one_minus, s, *ctx_);
            for (auto& c : v) c = -c;
            nq_[static_cast<std::size_t>(m)] = std::move(v);
        }
    }

    const CycloCtxPtr& ctx() const { return ctx_; }
    int n() const { return n_; }

    // n^{wt(k)} omega_n(k; zeta_n)
    detail::IntCyclo omega_scaled(const Index& k) {
        if (k.length() < 2) throw LengthError("omega_at_root needs length >= 2, got " + k.to_string());
        const std::size_t d = static_cast<std::size_t>(ctx_->degree);
        detail::IntCyclo total(d, 0);
        if (static_cast<int>(k.length()) > n_) return total;
        Index s = k.sorted_descending();
        const auto& head = prefix(s.slice(0, s.length() - 1));
        const int last = s[s.length() - 1];
        for (int m = 1; m < n_; ++m) {
            const auto& h = head[static_cast<std::size_t>(n_ - m)];
            if (detail::int_is_zero(h)) continue;
            detail::int_addmul(total, h, G(last, m), *ctx_);
        }
        return total;
    }

    CycloElem omega(const Index& k) { return unscale(omega_scaled(k), k.weight()); }

    // n^{wt(k)} z_n(e_k; zeta_n) with 1hat counted as weight 1
    detail::IntCyclo z_scaled(const ExtendedIndex& k) {
        auto it = zmemo_.find(k);
        if (it != zmemo_.end()) return it->second;
        const std::size_t d = static_cast<std::size_t>(ctx_->degree);
        if (k.empty()) return detail::IntCyclo(d, 0);  // L(1) = 1 has no t^m with m >= 1
        std::vector<detail::IntCyclo> inner(static_cast<std::size_t>(n_) + 1, ctx_->xpow[0]);
        for (std::size_t a = k.length(); a-- > 0;) {
            std::vector<detail::IntCyclo> next(static_cast<std::size_t>(n_) + 1, detail::IntCyclo(d, 0));
            detail::IntCyclo run(d, 0);
            for (int m = 1; m <= n_; ++m) {
                next[static_cast<std::size_t>(m)] = run;
                if (m < n_) {
                    const auto& f = k[a] == kHat ? G_hat(m) : G(k[a], m);
                    detail::int_addmul(run, f, inner[static_cast<std::size_t>(m)], *ctx_);
                }
            }
            inner = std::move(next);
        }
        return zmemo_.emplace(k, inner[static_cast<std::size_t>(n_)]).first->second;
    }

    CycloElem z(const HbarSum& u) {
        CycloElem total(ctx_);
        const CycloElem h = CycloElem::one_minus_zeta(ctx_);
        for (const auto& [mono, c] : u) {
            CycloElem v = unscale(z_scaled(mono.eword), mono.eword.weight());
            if (mono.hbar) v *= h.pow(static_cast<unsigned long>(mono.hbar));
            total += v * c;
        }
        return total;
    }

    // G_k(m) = n^k F_k(m) = zeta^{(k-1)m} (n/[m])^k
    const detail::IntCyclo& G(int k, int m) {
        auto key = std::make_pair(k, m);
        auto it = gmemo_.find(key);
        if (it != gmemo_.end()) return it->second;
        detail::IntCyclo v = ctx_->xpow[static_cast<std::size_t>((static_cast<long>(k - 1) * m) % n_)];
        for (int i = 0; i < k; ++i) v = detail::int_mul(v, nq_[static_cast<std::size_t>(m)], *ctx_);
        return gmemo_.emplace(key, std::move(v)).first->second;
    }
    // G_1hat(m) = n F_1hat(m) = zeta^m n/[m]
    const detail::IntCyclo& G_hat(int m) {
        auto key = std::make_pair(0, m);
        auto it = gmemo_.find(key);
        if (it != gmemo_.end()) return it->second;
        detail::IntCyclo v = detail::int_mul(ctx_->xpow[static_cast<std::size_t>(m % n_)],
                                             nq_[static_cast<std::size_t>(m)], *ctx_);
        return gmemo_.emplace(key, std::move(v)).first->second;
    }

    CycloElem unscale(const detail::IntCyclo& v, int weight) const {
        const Rational inv = Rational(1) / Rational(ipow(Integer(n_), static_cast<unsigned long>(weight)));
        std::vector<Rational> c(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            c[i] = Rational(v[i]) * inv;
            c[i].canonicalize();
        }
        return CycloElem(ctx_, std::move(c));
    }

private:
    // Convolution arrays over m = 0..n of the product of the F's in k.
    const std::vector<detail::IntCyclo>& prefix(const Index& k) {
        auto it = prefixes_.find(k);
        if (it != prefixes_.end()) return it->second;
        const std::size_t d = static_cast<std::size_t>(ctx_->degree);
        std::vector<detail::IntCyclo> out(static_cast<std::size_t>(n_) + 1, detail::IntCyclo(d, 0));
        if (k.length() == 1) {
            for (int m = 1; m < n_; ++m) out[static_cast<std::size_t>(m)] = G(k[0], m);
        } else {
            const auto& a = prefix(k.slice(0, k.length() - 1));
            const int last = k[k.length() - 1];
            for (int i = 1; i < n_; ++i) {
                if (detail::int_is_zero(a[static_cast<std::size_t>(i)])) continue;
                for (int j = 1; i + j <= n_; ++j) {
                    detail::int_addmul(out[static_cast<std::size_t>(i + j)], a[static_cast<std::size_t>(i)], G(last, j),
                                       *ctx_);
                }
            }
        }
        return prefixes_.emplace(k, std::move(out)).first->second;
    }

    CycloCtxPtr ctx_;
    int n_;
    std::vector<detail::IntCyclo> nq_;
    std::map<std::pair<int, int>, detail::IntCyclo> gmemo_;
    std::map<Index, std::vector<detail::IntCyclo>> prefixes_;
    std::map<ExtendedIndex, detail::IntCyclo> zmemo_;
};

inline CycloElem omega_at_root(const Index& k, int n) {
    if (k.length() < 2) throw LengthError("omega_at_root needs length >= 2, got " + k.to_string());
    CycloEvaluator ev(n);
    return ev.omega(k);
}

inline CycloElem z_at_root(const HbarSum& u, int n) {
    CycloEvaluator ev(n);
    return ev.z(u);
}

inline CycloElem z_at_root(const Index& k, int n) { return z_at_root(HbarSum(ExtendedIndex(k)), n); }

// Image in Z[zeta_p]/(1 - zeta_p) = F_p.
inline Residue reduce_at_one(const CycloElem& x, std::int64_t p) {
    if (x.n() != p || !is_prime(p)) throw RangeError("reduce_at_one needs n = p prime");
    std::int64_t total = 0;
    Integer pp(static_cast<long>(p));
    for (const auto& c : x.coeffs()) {
        if (c == 0) continue;
        if (mpz_divisible_p(c.get_den().get_mpz_t(), pp.get_mpz_t()))
            throw NotIntegralError("coefficient " + c.get_str() + " is not p-integral for p=" + std::to_string(p));
        total = (total + rational_mod(c, p)) % p;
    }
    return {p, total};
}

// ---------------------------------------------------------------------------
// q-multiple polylogarithm series at a rational q

struct QSeries {
    Rational constant;              // coefficient of t^0
    std::vector<Rational> coeffs;   // coeffs[m-1] is the coefficient of t^m, m = 1..N

    bool operator==(const QSeries&) const = default;

    // Cauchy product truncated at the same order.
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        const std::size_t N = std::min(a.coeffs.size(), b.coeffs.size());
        QSeries c{a.constant * b.constant, std::vector<Rational>(N, 0)};
        auto at = [](const QSeries& s, std::size_t m) { return m == 0 ? s.constant : s.coeffs[m - 1]; };
        for (std::size_t m = 1; m <= N; ++m)
            for (std::size_t i = 0; i <= m; ++i) c.coeffs[m - 1] += at(a, i) * at(b, m - i);
        return c;
    }
};

inline QSeries l_series_rational(const HbarSum& u, const Rational& q, int N) {
    if (N < 0) throw RangeError("truncation order must be nonnegative");
    std::vector<Rational> qint(static_cast<std::size_t>(N) + 1, 0), qpow(static_cast<std::size_t>(N) + 1, 1);
    for (int m = 1; m <= N; ++m) {
        qpow[static_cast<std::size_t>(m)] = qpow[static_cast<std::size_t>(m - 1)] * q;
        qint[static_cast<std::size_t>(m)] = qint[static_cast<std::size_t>(m - 1)] + qpow[static_cast<std::size_t>(m - 1)];
        if (qint[static_cast<std::size_t>(m)] == 0)
            throw PoleError("[" + std::to_string(m) + "] vanishes at q = " + q.get_str());
    }
    auto F = [&](int k, int m) -> Rational {
        const Rational& qm = qpow[static_cast<std::size_t>(m)];
        const Rational& im = qint[static_cast<std::size_t>(m)];
        if (k == kHat) return qm / im;
        return rpow(qm, static_cast<unsigned long>(k - 1)) / rpow(im, static_cast<unsigned long>(k));
    };
    QSeries out{0, std::vector<Rational>(static_cast<std::size_t>(N), 0)};
    const Rational h = Rational(1) - q;
    for (const auto& [mono, c] : u) {
        const Rational scale = c * rpow(h, static_cast<unsigned long>(mono.hbar));
        const auto& k = mono.eword;
        if (k.empty()) {
            out.constant += scale;
            continue;
        }
        // inner[m] = sum over m > m_{a+1} > ... of the deeper factors
        std::vector<Rational> inner(static_cast<std::size_t>(N) + 1, 1);
        for (std::size_t a = k.length(); a-- > 1;) {
            std::vector<Rational> next(static_cast<std::size_t>(N) + 1, 0);
            Rational run = 0;
            for (int m = 1; m <= N; ++m) {
                next[static_cast<std::size_t>(m)] = run;
                run += F(k[a], m) * inner[static_cast<std::size_t>(m)];
            }
            inner = std::move(next);
        }
        for (int m = 1; m <= N; ++m)
            out.coeffs[static_cast<std::size_t>(m - 1)] += scale * F(k[0], m) * inner[static_cast<std::size_t>(m)];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Identity checks

// (-1)^{k_r} sum_j C(k_r - 1, j - 1) (1 - zeta)^{k_r - j} z_n(a^j (e_{k_1} sh ... sh e_{k_{r-1}}))
inline CycloElem q_kamano_rhs(const Index& k, CycloEvaluator& ev,
                              const HbarSum* shuffled = nullptr) {
    const std::size_t r = k.length();
    HbarSum sh;
    if (shuffled) {
        sh = *shuffled;
    } else {
        std::vector<int> ks(k.begin(), k.end() - 1);
        sh = shuffle_hbar_of_letters(ks);
    }
    const int kr = k[r - 1];
    const CycloElem h = CycloElem::one_minus_zeta(ev.ctx());
    CycloElem total(ev.ctx());
    HbarSum aj = sh;
    for (int j = 1; j <= kr; ++j) {
        aj = a_mult(1, aj);
        total += ev.z(aj) * h.pow(static_cast<unsigned long>(kr - j)) *
                 Rational(binomial(kr - 1, j - 1));
    }
    return kr % 2 == 0 ? total : -total;
}

inline bool check_q_kamano(const Index& k, int n) {
    if (k.length() < 2) throw LengthError("check_q_kamano needs length >= 2, got " + k.to_string());
    CycloEvaluator ev(n);
    return ev.omega(k) == q_kamano_rhs(k, ev);
}

/** One term c (1-zeta)^m omega(l) of a linear form in cyclotomic omega values. */
struct CycloTerm {
    Rational coeff;
    int m = 0;
    Index l;
};

// The terms of the balanced sum for k_1, ..., k_r >= 2, with l sorted descending
// and equal terms merged.
inline std::vector<CycloTerm> sym_sum_terms(const Index& k) {
    const std::size_t r = k.length();
    if (r < 2) throw RangeError("sym_sum needs r >= 2");
    for (int kk : k)
        if (kk < 2) throw RangeError("sym_sum needs all parts >= 2, got " + k.to_string());
    std::map<std::pair<int, Index>, Rational> acc;
    for (std::size_t j = 0; j < r; ++j) {
        // ranges and binomial weights per position
        std::vector<int> lo(r), hi(r);
        for (std::size_t p = 0; p < r; ++p) {
            if (p < j) {
                lo[p] = 2;
                hi[p] = k[p];
            } else if (p == j) {
                lo[p] = 1;
                hi[p] = k[p] - 1;
            } else {
                lo[p] = 1;
                hi[p] = k[p];
            }
        }
        std::vector<int> l(lo);
        while (true) {
            Integer c = 1;
            int excess = 0;
            for (std::size_t p = 0; p < r; ++p) {
                if (p < j)
                    c *= binomial(k[p] - 2, l[p] - 2);
                else if (p == j)
                    c *= binomial(k[p] - 2, l[p] - 1);
                else
                    c *= binomial(k[p] - 1, l[p] - 1);
                excess += k[p] - l[p];
            }
            if (c != 0) acc[{excess - 1, Index(l).sorted_descending()}] += Rational(c);
            std::size_t p = 0;
            while (p < r && ++l[p] > hi[p]) {
                l[p] = lo[p];
                ++p;
            }
            if (p == r) break;
        }
    }
    std::vector<CycloTerm> out;
    for (const auto& [key, c] : acc)
        if (c != 0) out.push_back({c, key.first, key.second});
    return out;
}

inline CycloElem evaluate_terms(const std::vector<CycloTerm>& terms, CycloEvaluator& ev) {
    CycloElem total(ev.ctx());
    const CycloElem h = CycloElem::one_minus_zeta(ev.ctx());
    for (const auto& t : terms) total += ev.omega(t.l) * h.pow(static_cast<unsigned long>(t.m)) * t.coeff;
    return total;
}

inline bool check_sym_sum(const Index& k, int n) {
    auto terms = sym_sum_terms(k);
    CycloEvaluator ev(n);
    return evaluate_terms(terms, ev).is_zero();
}

}  // namespace mtomega

#endif  // MTOMEGA_CYCLO_HPP
