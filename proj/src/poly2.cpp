#include "sigma/poly2.hpp"

#include <bit>
#include <utility>

#include "sigma/contract.hpp"

namespace sigma {

namespace {
constexpr std::size_t kBits = 64;
}

Poly2 Poly2::monomial(std::size_t exponent) {
    Poly2 p;
    p.words_.assign(exponent / kBits + 1, 0);
    p.words_.back() = Word{1} << (exponent % kBits);
    return p;
}

Poly2 Poly2::from_exponents(std::initializer_list<std::size_t> exponents) {
    Poly2 p;
    for (const auto e : exponents) {
        p += monomial(e);
    }
    return p;
}

Poly2 Poly2::from_coefficients(const BitVector& coeffs) {
    Poly2 p;
    const auto w = coeffs.words();
    p.words_.assign(w.begin(), w.end());
    p.trim();
    return p;
}

void Poly2::trim() {
    while (!words_.empty() && words_.back() == 0) {
        words_.pop_back();
    }
}

int Poly2::degree() const {
    if (words_.empty()) {
        return kZeroDegree;
    }
    const auto top = static_cast<int>(std::bit_width(words_.back())) - 1;
    return static_cast<int>((words_.size() - 1) * kBits) + top;
}

bool Poly2::coeff(std::size_t k) const {
    const auto w = k / kBits;
    if (w >= words_.size()) {
        return false;
    }
    return ((words_[w] >> (k % kBits)) & 1U) != 0;
}

std::vector<std::size_t> Poly2::exponents() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        Word bits = words_[w];
        while (bits != 0) {
            const auto b = static_cast<std::size_t>(std::countr_zero(bits));
            out.push_back(w * kBits + b);
            bits &= bits - 1;
        }
    }
    return out;
}

BitVector Poly2::coefficients(std::size_t len) const {
    require(degree() < static_cast<int>(len), "Poly2::coefficients: degree does not fit");
    BitVector v(len);
    for (const auto e : exponents()) {
        v.set(e);
    }
    return v;
}

void Poly2::xor_shifted(const Poly2& other, std::size_t shift) {
    if (other.words_.empty()) {
        return;
    }
    const std::size_t word_shift = shift / kBits;
    const std::size_t bit_shift = shift % kBits;
    const std::size_t needed = other.words_.size() + word_shift + 1;
    if (words_.size() < needed) {
        words_.resize(needed, 0);
    }
    for (std::size_t i = 0; i < other.words_.size(); ++i) {
        const Word w = other.words_[i];
        words_[i + word_shift] ^= w << bit_shift;
        if (bit_shift != 0) {
            words_[i + word_shift + 1] ^= w >> (kBits - bit_shift);
        }
    }
    trim();
}

Poly2& Poly2::operator+=(const Poly2& other) {
    xor_shifted(other, 0);
    return *this;
}

Poly2 Poly2::shifted(std::size_t k) const {
    Poly2 out;
    out.xor_shifted(*this, k);
    return out;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 out;
    for (const auto e : a.exponents()) {
        out.xor_shifted(b, e);
    }
    return out;
}

DivMod divmod(const Poly2& a, const Poly2& b) {
    require(!b.is_zero(), "Poly2: division by the zero polynomial");
    DivMod r{Poly2{}, a};
    const int db = b.degree();
    while (!r.remainder.is_zero() && r.remainder.degree() >= db) {
        const auto shift = static_cast<std::size_t>(r.remainder.degree() - db);
        r.quotient += Poly2::monomial(shift);
        r.remainder += b.shifted(shift);
    }
    return r;
}

Poly2 operator%(const Poly2& a, const Poly2& b) { return divmod(a, b).remainder; }

Poly2 operator/(const Poly2& a, const Poly2& b) { return divmod(a, b).quotient; }

Poly2 gcd(Poly2 a, Poly2 b) {
    // Over GF(2) the only unit is 1, so every nonzero result is monic.
    while (!b.is_zero()) {
        Poly2 r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool divides(const Poly2& d, const Poly2& p) { return (p % d).is_zero(); }

std::string Poly2::to_string() const {
    if (is_zero()) {
        return "0";
    }
    const auto exps = exponents();
    std::string out;
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
        if (!out.empty()) {
            out += '+';
        }
        if (*it == 0) {
            out += '1';
        } else if (*it == 1) {
            out += 'X';
        } else {
            out += "X^" + std::to_string(*it);
        }
    }
    return out;
}

std::vector<Poly2> chebyshev_table(std::size_t n_max) {
    std::vector<Poly2> q;
    q.reserve(n_max + 1);
    q.push_back(Poly2::one());
    if (n_max >= 1) {
        q.push_back(Poly2::x());
    }
    for (std::size_t n = 1; n < n_max; ++n) {
        q.push_back(q[n].shifted(1) + q[n - 1]);
    }
    return q;
}

Poly2 chebyshev_q(std::size_t n) { return chebyshev_table(n).back(); }

std::size_t val_x(const Poly2& p) {
    require(!p.is_zero(), "val_x: zero polynomial has infinite valuation");
    return p.exponents().front();
}

std::size_t valuation(const Poly2& p, const Poly2& prime) {
    require(!p.is_zero(), "valuation: zero polynomial has infinite valuation");
    require(prime.degree() >= 1, "valuation: prime must have positive degree");
    std::size_t v = 0;
    Poly2 cur = p;
    for (;;) {
        auto [q, r] = divmod(cur, prime);
        if (!r.is_zero()) {
            return v;
        }
        cur = std::move(q);
        ++v;
    }
}

std::size_t two_valuation(std::uint64_t n) {
    require(n >= 1, "two_valuation: n must be positive");
    return static_cast<std::size_t>(std::countr_zero(n));
}

}  // namespace sigma
