#include "gkforge/scalar.hpp"

#include <stdexcept>

namespace gkforge {

Rat::Rat(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

std::optional<Rat> Rat::parse(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num_part) || !is_int(den_part)) return std::nullopt;
    auto strip_plus = [](std::string_view s) { return s.front() == '+' ? s.substr(1) : s; };
    mpz_class num(std::string(strip_plus(num_part)), 10);
    mpz_class den(std::string(strip_plus(den_part)), 10);
    if (den == 0) return std::nullopt;
    return Rat(num, den);
}

std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

CRat& CRat::operator*=(const CRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

CRat& CRat::operator/=(const CRat& o) {
    Rat n2 = o.norm2();
    if (n2.is_zero()) throw std::domain_error("division by zero Gaussian rational");
    CRat num = *this * o.conj();
    re = num.re / n2;
    im = num.im / n2;
    return *this;
}

std::string CRat::str() const {
    if (im.is_zero()) return re.str();
    std::string s = re.str();
    s += im.sign() < 0 ? "-" : "+";
    s += im.abs().str();
    s += " i";
    return s;
}

} // namespace gkforge
