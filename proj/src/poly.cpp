#include "septic/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace septic {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(const Int& constant) {
    if (constant != 0) c_.push_back(constant);
}

IntPoly IntPoly::monomial(const Int& coeff, int degree) {
    IntPoly p;
    if (coeff != 0) {
        p.c_.assign(degree + 1, Int(0));
        p.c_[degree] = coeff;
    }
    return p;
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Int IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
    return c_[i];
}

IntPoly operator+(const IntPoly& p, const IntPoly& q) {
    std::vector<Int> r(std::max(p.coeffs().size(), q.coeffs().size()), Int(0));
    for (size_t i = 0; i < p.coeffs().size(); ++i) r[i] += p.coeffs()[i];
    for (size_t i = 0; i < q.coeffs().size(); ++i) r[i] += q.coeffs()[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& p, const IntPoly& q) {
    std::vector<Int> r(std::max(p.coeffs().size(), q.coeffs().size()), Int(0));
    for (size_t i = 0; i < p.coeffs().size(); ++i) r[i] += p.coeffs()[i];
    for (size_t i = 0; i < q.coeffs().size(); ++i) r[i] -= q.coeffs()[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& p) {
    std::vector<Int> r(p.coeffs());
    for (auto& x : r) x = -x;
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) return IntPoly();
    std::vector<Int> r(p.coeffs().size() + q.coeffs().size() - 1, Int(0));
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i] == 0) continue;
        for (size_t j = 0; j < q.coeffs().size(); ++j)
            r[i + j] += p.coeffs()[i] * q.coeffs()[j];
    }
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& p, const Int& s) {
    if (s == 0) return IntPoly();
    std::vector<Int> r(p.coeffs());
    for (auto& x : r) x *= s;
    return IntPoly(std::move(r));
}

IntPoly operator*(const Int& s, const IntPoly& p) { return p * s; }

IntPoly shift(const IntPoly& p, const Int& a) {
    std::vector<Int> q{a, Int(1)};
    return compose(p, IntPoly(std::move(q)));
}

Int eval(const IntPoly& p, const Int& x) {
    Int r(0);
    for (int i = p.degree(); i >= 0; --i) {
        r *= x;
        r += p.coeffs()[i];
    }
    return r;
}

IntPoly compose(const IntPoly& p, const IntPoly& q) {
    IntPoly r;
    for (int i = p.degree(); i >= 0; --i) {
        r = r * q + IntPoly(p.coeffs()[i]);
    }
    return r;
}

IntPoly derivative(const IntPoly& p) {
    if (p.degree() < 1) return IntPoly();
    std::vector<Int> r(p.degree());
    for (int i = 1; i <= p.degree(); ++i) r[i - 1] = p.coeffs()[i] * i;
    return IntPoly(std::move(r));
}

IntPoly derivative(const IntPoly& p, int order) {
    IntPoly r = p;
    for (int i = 0; i < order; ++i) r = derivative(r);
    return r;
}

Int content(const IntPoly& p) {
    Int g(0);
    for (const auto& x : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    std::vector<Int> r(p.coeffs());
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(r));
}

namespace {

// lc(B)^(deg A - deg B + 1) * A  reduced mod B.
IntPoly prem(const IntPoly& A, const IntPoly& B) {
    IntPoly R = A;
    const Int& d = B.lc();
    long e = A.degree() - B.degree() + 1;
    while (!R.is_zero() && R.degree() >= B.degree()) {
        IntPoly lead = IntPoly::monomial(R.lc(), R.degree() - B.degree());
        R = R * d - lead * B;
        --e;
    }
    for (; e > 0; --e) R = R * d;
    return R;
}

Int pow_int(const Int& base, long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

}  // namespace

IntPoly primitive_gcd(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() && q.is_zero())
        throw std::domain_error("gcd of two zero polynomials");
    IntPoly A = primitive_part(p);
    IntPoly B = primitive_part(q);
    if (A.is_zero()) std::swap(A, B);
    if (B.is_zero()) {
        if (A.lc() < 0) A = -A;
        return A;
    }
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero()) {
        IntPoly R = primitive_part(prem(A, B));
        A = B;
        B = R;
    }
    if (A.lc() < 0) A = -A;
    return A;
}

Int resultant(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw std::domain_error("resultant of zero polynomial");
    const int m = p.degree(), n = q.degree();
    if (m == 0 && n == 0) return Int(1);
    if (m == 0) return pow_int(p.lc(), n);
    if (n == 0) return pow_int(q.lc(), m);

    const int N = m + n;
    std::vector<std::vector<Int>> S(N, std::vector<Int>(N, Int(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) S[i][i + j] = p.coeffs()[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) S[n + i][i + j] = q.coeffs()[n - j];

    // Bareiss: every division below is exact.
    Int prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < N; ++k) {
        if (S[k][k] == 0) {
            int r = -1;
            for (int i = k + 1; i < N; ++i)
                if (S[i][k] != 0) { r = i; break; }
            if (r < 0) return Int(0);
            std::swap(S[k], S[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                Int t = S[k][k] * S[i][j] - S[i][k] * S[k][j];
                mpz_divexact(S[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            S[i][k] = 0;
        }
        prev = S[k][k];
    }
    return sign > 0 ? S[N - 1][N - 1] : Int(-S[N - 1][N - 1]);
}

Int resultant_prs(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw std::domain_error("resultant of zero polynomial");
    IntPoly A = p, B = q;
    if (A.degree() == 0 && B.degree() == 0) return Int(1);
    if (A.degree() == 0) return pow_int(A.lc(), B.degree());
    if (B.degree() == 0) return pow_int(B.lc(), A.degree());

    Int ca = content(A), cb = content(B);
    A = primitive_part(A);
    B = primitive_part(B);
    Int scale = pow_int(ca, B.degree()) * pow_int(cb, A.degree());
    int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        std::swap(A, B);
    }
    Int g(1), h(1);
    while (true) {
        const long dA = A.degree(), dB = B.degree();
        const long delta = dA - dB;
        if ((dA & 1) && (dB & 1)) s = -s;
        IntPoly R = prem(A, B);
        A = B;
        Int den = g * pow_int(h, delta);
        std::vector<Int> bc(R.coeffs());
        for (auto& x : bc) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), den.get_mpz_t());
        B = IntPoly(std::move(bc));
        if (B.is_zero()) return Int(0);  // nonconstant common factor
        g = A.lc();
        if (delta > 0) {
            Int num = pow_int(g, delta);
            Int hd = pow_int(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), hd.get_mpz_t());
        }
        if (B.degree() == 0) break;
    }
    Int num = pow_int(B.lc(), A.degree());
    Int den = pow_int(h, A.degree() - 1);
    Int r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return scale * (s > 0 ? r : Int(-r));
}

Int discriminant(const IntPoly& p) {
    const int n = p.degree();
    if (n < 2) throw std::domain_error("discriminant needs degree >= 2");
    Int r = resultant(p, derivative(p));
    if (((static_cast<long>(n) * (n - 1)) / 2) & 1) r = -r;
    Int d;
    mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), p.lc().get_mpz_t());
    return d;
}

// ---------------------------------------------------------------------------
// arithmetic over F_p
// ---------------------------------------------------------------------------

void ModPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

ModPoly ModPoly::reduce(const IntPoly& p, long prime) {
    ModPoly r;
    r.modulus = prime;
    r.c.reserve(p.coeffs().size());
    Int q(prime);
    for (const auto& x : p.coeffs()) {
        Int m = x % q;
        if (m < 0) m += q;
        r.c.push_back(m.get_si());
    }
    r.normalize();
    return r;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b) {
    ModPoly r;
    r.modulus = a.modulus;
    if (a.is_zero() || b.is_zero()) return r;
    const long p = a.modulus;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % p;
    }
    r.normalize();
    return r;
}

namespace {

long mod_inv(long a, long p) {
    long t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        long qq = r / newr;
        std::swap(t -= qq * newt, newt);
        std::swap(r -= qq * newr, newr);
    }
    return t < 0 ? t + p : t;
}

ModPoly mod_monic(const ModPoly& a) {
    if (a.is_zero() || a.c.back() == 1) return a;
    ModPoly r = a;
    long inv = mod_inv(a.c.back(), a.modulus);
    for (auto& x : r.c) x = x * inv % a.modulus;
    return r;
}

}  // namespace

ModPoly mod_rem(const ModPoly& a, const ModPoly& b) {
    const long p = a.modulus;
    ModPoly r = a;
    long inv_lb = mod_inv(b.c.back(), p);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        long f = r.c.back() * inv_lb % p;
        int off = r.degree() - b.degree();
        for (int i = 0; i <= b.degree(); ++i)
            r.c[off + i] = ((r.c[off + i] - f * b.c[i]) % p + p) % p;
        r.normalize();
    }
    return r;
}

ModPoly mod_gcd(const ModPoly& a, const ModPoly& b) {
    ModPoly A = a, B = b;
    while (!B.is_zero()) {
        ModPoly R = mod_rem(A, B);
        A = B;
        B = R;
    }
    return mod_monic(A);
}

ModPoly mod_pow_x(unsigned long long e, const ModPoly& f) {
    ModPoly base;
    base.modulus = f.modulus;
    base.c = {0, 1};  // X
    base = mod_rem(base, f);
    ModPoly acc;
    acc.modulus = f.modulus;
    acc.c = {1};
    while (e) {
        if (e & 1ULL) acc = mod_rem(mod_mul(acc, base), f);
        base = mod_rem(mod_mul(base, base), f);
        e >>= 1;
    }
    return acc;
}

std::optional<long> certify_irreducible_deg7(const IntPoly& p) {
    if (p.degree() != 7) throw std::domain_error("certify_irreducible_deg7 needs degree 7");
    static const long primes[25] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (long q : primes) {
        if (mpz_divisible_ui_p(p.lc().get_mpz_t(), q)) continue;
        ModPoly f = mod_monic(ModPoly::reduce(p, q));
        bool clean = true;
        unsigned long long e = 1;
        for (int k = 1; k <= 3 && clean; ++k) {
            e *= static_cast<unsigned long long>(q);
            ModPoly xq = mod_pow_x(e, f);
            // gcd(f, X^(q^k) - X) nonconstant <=> some factor of degree <= k
            if (xq.c.size() < 2) xq.c.resize(2, 0);
            xq.c[1] = ((xq.c[1] - 1) % q + q) % q;
            xq.normalize();
            ModPoly g = xq.is_zero() ? f : mod_gcd(f, xq);
            if (g.degree() != 0) clean = false;
        }
        if (clean) return q;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// text form
// ---------------------------------------------------------------------------

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i > 0) os << " + ";
        os << p.coeffs()[i].get_str();
        if (i == 1) os << "*X";
        else if (i > 1) os << "*X^" << i;
    }
    return os.str();
}

IntPoly parse_poly(const std::string& text) {
    // split on '+' at top level; each term is "c", "c*X", "c*X^k", "X", "X^k"
    std::vector<Int> coeffs;
    std::string term;
    auto flush = [&](const std::string& raw) {
        std::string s;
        for (char ch : raw)
            if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
        if (s.empty()) throw std::domain_error("empty term in polynomial text");
        std::string cpart = s;
        long deg = 0;
        auto xpos = s.find('X');
        if (xpos != std::string::npos) {
            deg = 1;
            cpart = s.substr(0, xpos);
            if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
            if (cpart.empty()) cpart = "1";
            if (cpart == "-") cpart = "-1";
            std::string rest = s.substr(xpos + 1);
            if (!rest.empty()) {
                if (rest[0] != '^') throw std::domain_error("malformed term: " + raw);
                deg = std::stol(rest.substr(1));
            }
        }
        Int c;
        if (mpz_set_str(c.get_mpz_t(), cpart.c_str(), 10) != 0)
            throw std::domain_error("bad coefficient: " + raw);
        if (deg < 0 || deg > 4096) throw std::domain_error("bad degree in term: " + raw);
        if (coeffs.size() <= static_cast<size_t>(deg)) coeffs.resize(deg + 1, Int(0));
        coeffs[deg] += c;
    };
    // normalize "a - b" to "a + -b" so one split suffices
    std::string norm;
    for (size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '-' && i > 0 && text[i - 1] != '+' && text[i - 1] != '^' &&
            text[i - 1] != '*' && norm.find_first_not_of(" \t") != std::string::npos) {
            norm += "+-";
        } else {
            norm += ch;
        }
    }
    std::stringstream ss(norm);
    while (std::getline(ss, term, '+')) {
        if (term.find_first_not_of(" \t") == std::string::npos) continue;
        flush(term);
    }
    return IntPoly(std::move(coeffs));
}

}  // namespace septic
