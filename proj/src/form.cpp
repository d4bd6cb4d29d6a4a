#include "gkforge/form.hpp"

#include <bit>
#include <stdexcept>

namespace gkforge {

Form Form::unit(int n) {
    Form f(n);
    f.terms[0] = CRat(1);
    return f;
}

Form Form::gen(int n, int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("generator index out of range");
    Form f(n);
    f.terms[1u << i] = CRat(1);
    return f;
}

Form Form::monomial(int n, std::uint32_t mask, CRat coeff) {
    if (n < 32 && mask >= (1u << n)) throw std::invalid_argument("monomial mask out of range");
    Form f(n);
    if (!coeff.is_zero()) f.terms[mask] = std::move(coeff);
    return f;
}

int Form::homogeneous_degree() const {
    int deg = -2;
    for (const auto& [mask, c] : terms) {
        int d = std::popcount(mask);
        if (deg == -2) deg = d;
        else if (deg != d) return -1;
    }
    return deg == -2 ? 0 : deg;
}

CRat Form::coeff(std::uint32_t mask) const {
    auto it = terms.find(mask);
    return it == terms.end() ? CRat() : it->second;
}

void Form::set(std::uint32_t mask, CRat c) {
    if (c.is_zero()) terms.erase(mask);
    else terms[mask] = std::move(c);
}

Form Form::operator-() const {
    Form f(n);
    for (const auto& [mask, c] : terms) f.terms[mask] = -c;
    return f;
}

Form& Form::operator+=(const Form& o) {
    if (n != o.n) throw std::invalid_argument("form generator count mismatch");
    for (const auto& [mask, c] : o.terms) {
        auto it = terms.find(mask);
        if (it == terms.end()) terms.emplace(mask, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form Form::conj() const {
    Form f(n);
    for (const auto& [mask, c] : terms) f.terms[mask] = c.conj();
    return f;
}

Form scale(const CRat& c, const Form& f) {
    Form r(f.n);
    if (c.is_zero()) return r;
    for (const auto& [mask, v] : f.terms) r.terms[mask] = c * v;
    return r;
}

int merge_sign(std::uint32_t a, std::uint32_t b) {
    if (a & b) return 0;
    int inversions = 0;
    std::uint32_t bb = b;
    while (bb) {
        int bit = std::countr_zero(bb);
        bb &= bb - 1;
        inversions += std::popcount(a >> (bit + 1));
    }
    return inversions % 2 == 0 ? 1 : -1;
}

Form wedge(const Form& a, const Form& b) {
    if (a.n != b.n) throw std::invalid_argument("form generator count mismatch");
    Form r(a.n);
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            int s = merge_sign(ma, mb);
            if (s == 0) continue;
            CRat add = ca * cb;
            if (s < 0) add = -add;
            auto it = r.terms.find(ma | mb);
            if (it == r.terms.end()) r.terms.emplace(ma | mb, std::move(add));
            else {
                it->second += add;
                if (it->second.is_zero()) r.terms.erase(it);
            }
        }
    return r;
}

Form contract(const Form& f, const Vec& x) {
    if (static_cast<int>(x.size()) != f.n) throw std::invalid_argument("contract: coordinate count mismatch");
    Form r(f.n);
    for (int j = 0; j < f.n; ++j) {
        if (x[j].is_zero()) continue;
        for (const auto& [mask, c] : f.terms) {
            std::uint32_t bit = 1u << j;
            if (!(mask & bit)) continue;
            int below = std::popcount(mask & (bit - 1));
            CRat add = x[j] * c;
            if (below % 2) add = -add;
            std::uint32_t m2 = mask & ~bit;
            auto it = r.terms.find(m2);
            if (it == r.terms.end()) r.terms.emplace(m2, std::move(add));
            else {
                it->second += add;
                if (it->second.is_zero()) r.terms.erase(it);
            }
        }
    }
    return r;
}

Form degree_part(const Form& f, int k) {
    Form r(f.n);
    for (const auto& [mask, c] : f.terms)
        if (std::popcount(mask) == k) r.terms[mask] = c;
    return r;
}

Vec form_to_coords(const Form& f) {
    Vec v(static_cast<size_t>(1) << f.n);
    for (const auto& [mask, c] : f.terms) v[mask] = c;
    return v;
}

Form form_from_coords(int n, const Vec& v) {
    if (v.size() != (static_cast<size_t>(1) << n)) throw std::invalid_argument("coordinate size mismatch");
    Form f(n);
    for (std::uint32_t m = 0; m < v.size(); ++m)
        if (!v[m].is_zero()) f.terms[m] = v[m];
    return f;
}

std::vector<std::uint32_t> degree_masks(int n, int k) {
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == k) masks.push_back(m);
    return masks;
}

Vec form_to_degree_coords(const Form& f, int k) {
    auto masks = degree_masks(f.n, k);
    Vec v(masks.size());
    size_t seen = 0;
    for (size_t i = 0; i < masks.size(); ++i) {
        auto it = f.terms.find(masks[i]);
        if (it != f.terms.end()) { v[i] = it->second; ++seen; }
    }
    if (seen != f.terms.size()) throw std::invalid_argument("form is not homogeneous of the requested degree");
    return v;
}

Form form_from_degree_coords(int n, int k, const Vec& v) {
    auto masks = degree_masks(n, k);
    if (v.size() != masks.size()) throw std::invalid_argument("degree coordinate size mismatch");
    Form f(n);
    for (size_t i = 0; i < masks.size(); ++i)
        if (!v[i].is_zero()) f.terms[masks[i]] = v[i];
    return f;
}

std::string form_to_string(const Form& f, const std::string& gen_prefix) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [mask, c] : f.terms) {
        if (!out.empty()) out += " + ";
        std::string mono;
        std::uint32_t m = mask;
        while (m) {
            int bit = std::countr_zero(m);
            m &= m - 1;
            if (!mono.empty()) mono += "^";
            mono += gen_prefix + std::to_string(bit + 1);
        }
        if (mono.empty()) out += c.str();
        else if (c == CRat(1)) out += mono;
        else if (c == CRat(-1)) out += "-" + mono;
        else out += "(" + c.str() + ") " + mono;
    }
    return out;
}

} // namespace gkforge
