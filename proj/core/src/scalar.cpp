#include "qrep/scalar.hpp"

#include <cctype>
#include <cstdlib>

namespace qrep {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Extended Euclid, returns x with a*x == 1 (mod m).
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw InputError("element has no inverse mod p");
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t mpz_mod_u64(const mpz_class& z, std::uint64_t p) {
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

}  // namespace

bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (p > (1u << 31)) throw InputError("prime field characteristic exceeds 2^31");
    if (!is_prime_u32(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
    return Field(p);
}

Field Field::parse(const std::string& text) {
    std::string t = trimmed(text);
    if (t == "Q" || t == "q") return rationals();
    std::string digits;
    if (t.rfind("Fp:", 0) == 0) {
        digits = t.substr(3);
    } else if (t.rfind("f:", 0) == 0 || t.rfind("F:", 0) == 0) {
        digits = t.substr(2);
    } else {
        throw InputError("unrecognized field '" + text + "' (expected q or f:<p>)");
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw InputError("bad prime field spec '" + text + "'");
    }
    unsigned long long p = std::strtoull(digits.c_str(), nullptr, 10);
    if (p > (1ull << 31)) throw InputError("prime field characteristic exceeds 2^31");
    return prime(static_cast<std::uint32_t>(p));
}

std::string Field::to_string() const {
    return is_rationals() ? "Q" : "Fp:" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f) { return Scalar(f); }

Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long long value) {
    Scalar s(f);
    if (f.is_rationals()) {
        s.rat_ = Rational(static_cast<long>(value));
    } else {
        std::int64_t p = f.characteristic();
        std::int64_t r = value % p;
        if (r < 0) r += p;
        s.res_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::from_rational(const Field& f, const Rational& value) {
    Scalar s(f);
    if (f.is_rationals()) {
        s.rat_ = value;
        s.rat_.canonicalize();
    } else {
        std::uint64_t p = f.characteristic();
        Rational v = value;
        v.canonicalize();
        std::uint64_t den = mpz_mod_u64(v.get_den(), p);
        if (den == 0) throw InputError("rational with denominator divisible by p cannot map to F_" + std::to_string(p));
        std::uint64_t num = mpz_mod_u64(v.get_num(), p);
        s.res_ = (num * mod_inverse(den, p)) % p;
    }
    return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    std::string t = trimmed(text);
    if (t.empty()) throw InputError("empty scalar");
    if (f.is_prime()) {
        std::string digits = t;
        auto mod_pos = t.find(" mod ");
        if (mod_pos != std::string::npos) {
            std::string ptxt = trimmed(t.substr(mod_pos + 5));
            if (ptxt != std::to_string(f.characteristic())) {
                throw InputError("scalar '" + text + "' declares modulus " + ptxt + ", field is F_" +
                                 std::to_string(f.characteristic()));
            }
            digits = trimmed(t.substr(0, mod_pos));
        }
        try {
            Rational r(digits, 10);
            if (r.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
            return from_rational(f, r);
        } catch (const std::invalid_argument&) {
            throw InputError("bad prime-field scalar '" + text + "'");
        }
    }
    try {
        Rational r(t, 10);
        if (r.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
        r.canonicalize();
        Scalar s(f);
        s.rat_ = r;
        return s;
    } catch (const std::invalid_argument&) {
        throw InputError("bad rational scalar '" + text + "'");
    }
}

bool Scalar::is_zero() const {
    return field_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rationals() ? rat_ == 1 : res_ == 1;
}

void Scalar::check_same_field(const Scalar& rhs) const {
    if (field_ != rhs.field_) {
        throw FieldMismatchError("mixed-field arithmetic: " + field_.to_string() + " vs " + rhs.field_.to_string());
    }
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (field_.is_rationals()) {
        s.rat_ = -rat_;
    } else if (res_ != 0) {
        s.res_ = field_.characteristic() - res_;
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    check_same_field(rhs);
    if (field_.is_rationals()) {
        rat_ += rhs.rat_;
    } else {
        res_ = (res_ + rhs.res_) % field_.characteristic();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    check_same_field(rhs);
    if (field_.is_rationals()) {
        rat_ -= rhs.rat_;
    } else {
        std::uint64_t p = field_.characteristic();
        res_ = (res_ + p - rhs.res_) % p;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    check_same_field(rhs);
    if (field_.is_rationals()) {
        rat_ *= rhs.rat_;
    } else {
        res_ = (res_ * rhs.res_) % field_.characteristic();
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    check_same_field(rhs);
    if (rhs.is_zero()) throw InputError("division by zero");
    if (field_.is_rationals()) {
        rat_ /= rhs.rat_;
    } else {
        res_ = (res_ * mod_inverse(rhs.res_, field_.characteristic())) % field_.characteristic();
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw InputError("zero has no inverse");
    Scalar s(field_);
    if (field_.is_rationals()) {
        s.rat_ = 1 / rat_;
    } else {
        s.res_ = mod_inverse(res_, field_.characteristic());
    }
    return s;
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (field_ != rhs.field_) return false;
    return field_.is_rationals() ? rat_ == rhs.rat_ : res_ == rhs.res_;
}

const Rational& Scalar::rational() const {
    if (!field_.is_rationals()) throw FieldMismatchError("scalar is not rational");
    return rat_;
}

std::uint64_t Scalar::residue() const {
    if (!field_.is_prime()) throw FieldMismatchError("scalar is not a prime-field element");
    return res_;
}

std::uint64_t Scalar::to_uint64() const {
    if (field_.is_prime()) return res_;
    if (rat_.get_den() != 1 || rat_ < 0) throw InputError("scalar is not a nonnegative integer");
    if (!rat_.get_num().fits_ulong_p()) throw InputError("integer scalar exceeds 64 bits");
    return rat_.get_num().get_ui();
}

std::string Scalar::to_string() const {
    if (field_.is_rationals()) return rat_.get_str();
    return std::to_string(res_) + " mod " + std::to_string(field_.characteristic());
}

}  // namespace qrep
