#include "rp3/laurent.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace rp3 {

Laurent::Laurent(long c) {
    if (c != 0) t_[0] = c;
}

Laurent Laurent::monomial(const mpz_class& c, int e) {
    Laurent p;
    p.add_term(e, c);
    return p;
}

Laurent Laurent::delta() { return monomial(-1, 2) + monomial(-1, -2); }

void Laurent::add_term(int e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

mpz_class Laurent::coeff(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? mpz_class(0) : it->second;
}

int Laurent::min_exp() const { return t_.empty() ? 0 : t_.begin()->first; }
int Laurent::max_exp() const { return t_.empty() ? 0 : t_.rbegin()->first; }

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
}

Laurent& Laurent::operator*=(const Laurent& o) {
    Laurent r;
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_) r.add_term(e1 + e2, c1 * c2);
    t_ = std::move(r.t_);
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : t_) r.t_[e] = -c;
    return r;
}

Laurent Laurent::pow(int k) const {
    if (k < 0) {
        if (t_.size() != 1) throw std::domain_error("negative power of a non-monomial");
        const auto& [e, c] = *t_.begin();
        if (c != 1 && c != -1) throw std::domain_error("negative power of a non-unit monomial");
        return monomial((-k) % 2 ? c : mpz_class(1), e * k);
    }
    Laurent r(1), b = *this;
    while (k) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

Laurent Laurent::mirror() const { return scaled(-1); }

Laurent Laurent::scaled(int k) const {
    Laurent r;
    for (const auto& [e, c] : t_) r.add_term(e * k, c);
    return r;
}

bool Laurent::divide_exact(const Laurent& d, Laurent& q) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    q = Laurent();
    if (is_zero()) return true;
    Laurent rem = *this;
    const int dlead = d.max_exp();
    const int qmin = min_exp() - d.min_exp();
    const mpz_class dc = d.t_.rbegin()->second;
    while (!rem.is_zero()) {
        int e = rem.max_exp() - dlead;
        if (e < qmin) return false;
        const mpz_class& c = rem.t_.rbegin()->second;
        if (!mpz_divisible_p(c.get_mpz_t(), dc.get_mpz_t())) return false;
        Laurent step = monomial(c / dc, e);
        q += step;
        rem -= step * d;
    }
    return true;
}

mpq_class Laurent::eval(long x) const {
    mpq_class s = 0;
    for (const auto& [e, c] : t_) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), mpz_class(x).get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
        mpq_class term = e < 0 ? mpq_class(c, p) : mpq_class(c * p);
        term.canonicalize();
        s += term;
    }
    return s;
}

namespace {

std::string render(const std::map<int, mpz_class>& t, auto expfmt, const std::string& var) {
    if (t.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : t) {
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string x = expfmt(e);
        if (x.empty()) {
            out += a.get_str();
            continue;
        }
        if (a != 1) out += a.get_str();
        out += var;
        if (x != "1") out += "^" + x;
    }
    return out;
}

}  // namespace

std::string Laurent::str(const std::string& var) const {
    return render(t_, [](int e) { return e == 0 ? std::string() : std::to_string(e); }, var);
}

std::string Laurent::jones_str() const {
    // A^e = t^(-e/4)
    std::map<int, mpz_class> flipped;
    for (const auto& [e, c] : t_) flipped[-e] = c;
    return render(flipped,
                  [](int e) -> std::string {
                      if (e == 0) return {};
                      int g = std::gcd(e < 0 ? -e : e, 4);
                      int num = e / g, den = 4 / g;
                      if (den == 1) return std::to_string(num);
                      return "(" + std::to_string(num) + "/" + std::to_string(den) + ")";
                  },
                  "t");
}

Laurent Laurent::parse(const std::string& text) {
    Laurent p;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto bad = [&](const std::string& why) {
        throw std::invalid_argument("bad polynomial at column " + std::to_string(i + 1) + ": " + why);
    };
    skip();
    if (text.substr(i) == "0") return p;
    bool any = false;
    while (true) {
        skip();
        if (i >= text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (any) {
            bad("expected + or -");
        }
        mpz_class c = 1;
        size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        bool has_digits = j > i;
        if (has_digits) {
            c = mpz_class(text.substr(i, j - i));
            i = j;
        }
        int e = 0;
        if (i < text.size() && text[i] == 'A') {
            ++i;
            e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                size_t k = i;
                if (k < text.size() && text[k] == '-') ++k;
                size_t m = k;
                while (m < text.size() && std::isdigit(static_cast<unsigned char>(text[m]))) ++m;
                if (m == k) bad("missing exponent");
                e = std::stoi(text.substr(i, m - i));
                i = m;
            }
        } else if (!has_digits) {
            bad("expected a term");
        }
        p.add_term(e, sign * c);
        any = true;
    }
    if (!any) bad("empty polynomial");
    return p;
}

}  // namespace rp3
