#ifndef HORNCODE_FORMAT_HPP
#define HORNCODE_FORMAT_HPP

#include <cctype>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "divisor.hpp"
#include "horn.hpp"
#include "partition.hpp"
#include "poly.hpp"
#include "poly_matrix.hpp"
#include "projective.hpp"
#include "rational.hpp"

namespace horncode {

// Text formats used by the CLI and the golden files. Every printer produces a
// string the matching parser accepts verbatim.

namespace fmt_detail {

inline std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

inline long long parse_ll(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("malformed integer: " + s);
    return v;
}

}  // namespace fmt_detail

// ---- partitions ----

inline std::string partition_to_string(const Partition& p) {
    if (p.empty()) return "[]";
    std::ostringstream os;
    os << p;
    return os.str();
}

inline Partition parse_partition(const std::string& text) {
    std::string s = fmt_detail::strip_spaces(text);
    if (s.empty() || s == "[]") return Partition{};
    std::vector<int> parts;
    for (const std::string& tok : fmt_detail::split(s, ','))
        parts.push_back(static_cast<int>(fmt_detail::parse_ll(tok)));
    return Partition(std::move(parts));
}

// ---- rationals ----

inline Rational parse_rational(const std::string& text) {
    std::string s = fmt_detail::strip_spaces(text);
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(fmt_detail::parse_ll(s));
    return Rational(fmt_detail::parse_ll(s.substr(0, slash)), fmt_detail::parse_ll(s.substr(slash + 1)));
}

// ---- field specs ----

inline std::vector<int> parse_gfp_poly(const std::string& text, long long p, char var);

inline std::string field_spec_to_string(const FieldSpec& f) {
    if (f.extension_degree() == 1) return std::to_string(f.characteristic());
    std::ostringstream os;
    os << f.characteristic() << "^" << f.extension_degree() << "/";
    bool first = true;
    for (int i = 0; i <= f.extension_degree(); ++i) {
        int c = f.modulus()[i];
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0)
            os << c;
        else {
            if (c != 1) os << c << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

/// "p", "p^k" (default modulus) or "p^k/modulus" with the modulus written in
/// x over the prime field.
inline std::shared_ptr<const FieldSpec> parse_field_spec(const std::string& text) {
    std::string s = fmt_detail::strip_spaces(text);
    auto caret = s.find('^');
    if (caret == std::string::npos) return std::make_shared<const FieldSpec>(fmt_detail::parse_ll(s));
    long long p = fmt_detail::parse_ll(s.substr(0, caret));
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        int k = static_cast<int>(fmt_detail::parse_ll(s.substr(caret + 1)));
        return std::make_shared<const FieldSpec>(p, k);
    }
    int k = static_cast<int>(fmt_detail::parse_ll(s.substr(caret + 1, slash - caret - 1)));
    auto modulus = parse_gfp_poly(s.substr(slash + 1), p, 'x');
    return std::make_shared<const FieldSpec>(p, k, std::move(modulus));
}

// ---- field elements ----

/// Prime-field elements print as integers; extension elements as polynomials
/// in the power-basis generator "a" with ascending exponents and no spaces.
inline std::string element_to_string(const FieldSpec& f, int v) {
    if (f.extension_degree() == 1) return std::to_string(v);
    auto digits = f.coords(v);
    if (digits.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0)
            os << digits[i];
        else {
            if (digits[i] != 1) os << digits[i] << "*";
            os << "a";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

inline std::string element_to_string(const FieldElement& e) { return element_to_string(e.field(), e.value()); }

namespace fmt_detail {

// Sum of terms c, c*v^i, v^i over +/- with an optional symbolic variable;
// returns coefficients ascending. Used for GF(p) polynomials and for
// power-basis element strings.
inline std::vector<long long> parse_poly_terms(const std::string& stripped, char var) {
    std::vector<long long> coeffs;
    auto bump = [&](size_t deg, long long c) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
        coeffs[deg] += c;
    };
    const std::string& s = stripped;
    size_t i = 0;
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    while (i < s.size()) {
        long long sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        // optional coefficient
        long long coeff = 1;
        bool sawCoeff = false;
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) {
            coeff = parse_ll(s.substr(start, i - start));
            sawCoeff = true;
        }
        if (i < s.size() && s[i] == '*') ++i;
        long long deg = 0;
        if (i < s.size() && s[i] == var) {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                start = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == start) throw std::invalid_argument("missing exponent");
                deg = parse_ll(s.substr(start, i - start));
            }
        } else if (!sawCoeff) {
            throw std::invalid_argument("malformed term in polynomial: " + s);
        }
        bump(static_cast<size_t>(deg), sign * coeff);
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            throw std::invalid_argument("unexpected character in polynomial: " + s);
    }
    return coeffs;
}

}  // namespace fmt_detail

inline std::vector<int> parse_gfp_poly(const std::string& text, long long p, char var) {
    auto raw = fmt_detail::parse_poly_terms(fmt_detail::strip_spaces(text), var);
    std::vector<int> out;
    for (long long c : raw) out.push_back(static_cast<int>(((c % p) + p) % p));
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

inline int parse_element(const FieldSpec& f, const std::string& text) {
    std::string s = fmt_detail::strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("empty element");
    if (f.extension_degree() == 1) {
        long long v = fmt_detail::parse_ll(s);
        return f.from_integer(v);
    }
    auto raw = fmt_detail::parse_poly_terms(s, 'a');
    if (static_cast<int>(raw.size()) > f.extension_degree())
        throw std::invalid_argument("element exceeds the power-basis degree");
    std::vector<int> digits;
    for (long long c : raw) digits.push_back(f.from_integer(c));
    return f.from_coords(digits);
}

// ---- polynomials over a field ----

/// Ascending-term form "c0 + c1*x + c2*x^2"; extension-field coefficients are
/// parenthesized power-basis strings.
inline std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    const FieldSpec& f = p.field();
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= p.degree_int(); ++i) {
        int c = p.coeff(i);
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = element_to_string(f, c);
        bool composite = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
        if (i == 0) {
            os << (composite ? "(" + cs + ")" : cs);
        } else {
            if (c != 1) os << (composite ? "(" + cs + ")" : cs) << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

inline Poly parse_poly(const FieldSpec& f, const std::string& text) {
    std::string s = fmt_detail::strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("empty polynomial");

    // split into terms at top-level +/- (parentheses only wrap coefficients)
    std::vector<std::pair<int, std::string>> terms;  // (sign, body)
    {
        int depth = 0, sign = 1;
        std::string cur;
        for (size_t i = 0; i < s.size(); ++i) {
            char c = s[i];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (depth == 0 && (c == '+' || c == '-') && i > 0) {
                terms.emplace_back(sign, cur);
                cur.clear();
                sign = c == '-' ? -1 : 1;
            } else if (i == 0 && (c == '+' || c == '-')) {
                sign = c == '-' ? -1 : 1;
            } else {
                cur.push_back(c);
            }
        }
        if (depth != 0) throw std::invalid_argument("unbalanced parenthesis: " + text);
        terms.emplace_back(sign, cur);
    }

    std::vector<int> coeffs;
    auto bump = [&](int deg, int c) {
        if (static_cast<int>(coeffs.size()) <= deg) coeffs.resize(deg + 1, 0);
        coeffs[deg] = f.add(coeffs[deg], c);
    };
    for (auto& [sign, body] : terms) {
        if (body.empty()) throw std::invalid_argument("empty term in polynomial: " + text);
        // 'x' never occurs inside an element string (those use digits and 'a')
        size_t xpos = body.find('x');
        int coeff = 1, deg = 0;
        if (xpos == std::string::npos) {
            std::string cs = body;
            if (cs.front() == '(' && cs.back() == ')') cs = cs.substr(1, cs.size() - 2);
            coeff = parse_element(f, cs);
        } else {
            std::string before = body.substr(0, xpos);
            std::string after = body.substr(xpos + 1);
            if (!before.empty()) {
                if (before.back() == '*') before.pop_back();
                if (!before.empty() && before.front() == '(' && before.back() == ')')
                    before = before.substr(1, before.size() - 2);
                if (!before.empty()) coeff = parse_element(f, before);
            }
            if (after.empty()) {
                deg = 1;
            } else if (after.front() == '^') {
                deg = static_cast<int>(fmt_detail::parse_ll(after.substr(1)));
            } else {
                throw std::invalid_argument("malformed term in polynomial: " + text);
            }
            if (deg < 0) throw std::invalid_argument("negative exponent in polynomial: " + text);
        }
        bump(deg, sign < 0 ? f.neg(coeff) : coeff);
    }
    return Poly(f, std::move(coeffs));
}

// ---- divisors ----

/// "2*[inf] + 1*[0] - 1*[3]"; the infinite point prints first, then finite
/// points ascending. The zero divisor prints as "0".
inline std::string divisor_to_string(const Divisor& D) {
    const FieldSpec& f = D.field();
    std::vector<std::pair<std::string, int>> terms;
    auto inf = P1Point::infinity(f);
    if (int m = D.multiplicity(inf); m != 0) terms.emplace_back("inf", m);
    for (const auto& [p, m] : D.support()) {
        if (p.is_infinity()) continue;
        terms.emplace_back(element_to_string(f, p.value()), m);
    }
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [label, m] : terms) {
        if (first) {
            if (m < 0) os << "-";
            first = false;
        } else {
            os << (m < 0 ? " - " : " + ");
        }
        os << (m < 0 ? -m : m) << "*[" << label << "]";
    }
    return os.str();
}

inline Divisor parse_divisor(const FieldSpec& f, const std::string& text) {
    std::string s = fmt_detail::strip_spaces(text);
    Divisor D(f);
    if (s.empty() || s == "0") return D;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw std::invalid_argument("divisor term missing multiplicity: " + text);
        int mult = static_cast<int>(fmt_detail::parse_ll(s.substr(start, i - start)));
        if (i >= s.size() || s[i] != '*') throw std::invalid_argument("divisor term missing '*': " + text);
        ++i;
        if (i >= s.size() || s[i] != '[') throw std::invalid_argument("divisor term missing '[': " + text);
        size_t close = s.find(']', i);
        if (close == std::string::npos) throw std::invalid_argument("unbalanced '[' in divisor: " + text);
        std::string label = s.substr(i + 1, close - i - 1);
        i = close + 1;
        P1Point p = label == "inf" ? P1Point::infinity(f) : P1Point::finite(f, parse_element(f, label));
        D.add(p, sign * mult);
    }
    return D;
}

// ---- projective points ----

inline std::string point_to_string(const ProjectivePoint& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.coords().size(); ++i)
        os << (i ? ":" : "") << element_to_string(p.field(), p.coords()[i]);
    os << ")";
    return os.str();
}

inline ProjectivePoint parse_point(const FieldSpec& f, const std::string& text) {
    std::string s = fmt_detail::strip_spaces(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("point must be parenthesized: " + text);
    std::vector<int> coords;
    for (const std::string& tok : fmt_detail::split(s.substr(1, s.size() - 2), ':'))
        coords.push_back(parse_element(f, tok));
    return ProjectivePoint(f, std::move(coords));
}

// ---- index triples (golden-file format) ----

inline std::string index_set_to_string(const IndexSet& s) {
    std::ostringstream os;
    os << s;
    return os.str();
}

inline std::string triple_to_string(const IndexTriple& t) {
    std::ostringstream os;
    os << t;
    return os.str();
}

inline IndexSet parse_index_set(const std::string& text, int ambient) {
    std::string s = fmt_detail::strip_spaces(text);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw std::invalid_argument("index set must be braced: " + text);
    std::vector<int> elems;
    std::string body = s.substr(1, s.size() - 2);
    if (!body.empty())
        for (const std::string& tok : fmt_detail::split(body, ','))
            elems.push_back(static_cast<int>(fmt_detail::parse_ll(tok)));
    return IndexSet(std::move(elems), ambient);
}

/// "{1,2}|{1,3}|{1,3}"
inline IndexTriple parse_triple(const std::string& text, int ambient) {
    auto parts = fmt_detail::split(fmt_detail::strip_spaces(text), '|');
    if (parts.size() != 3) throw std::invalid_argument("triple needs three index sets: " + text);
    return IndexTriple{parse_index_set(parts[0], ambient), parse_index_set(parts[1], ambient),
                       parse_index_set(parts[2], ambient)};
}

// ---- polynomial matrices ----

/// One row per line, entries separated by ';'.
inline std::string poly_matrix_to_string(const PolyMatrix& M) {
    std::ostringstream os;
    for (size_t i = 0; i < M.rows(); ++i) {
        for (size_t j = 0; j < M.cols(); ++j) os << (j ? ";" : "") << poly_to_string(M.at(i, j));
        os << "\n";
    }
    return os.str();
}

inline PolyMatrix parse_poly_matrix(const FieldSpec& f, const std::string& text) {
    std::vector<std::vector<Poly>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (fmt_detail::strip_spaces(line).empty()) continue;
        std::vector<Poly> row;
        for (const std::string& tok : fmt_detail::split(line, ';')) row.push_back(parse_poly(f, tok));
        rows.push_back(std::move(row));
    }
    return PolyMatrix(f, std::move(rows));
}

}  // namespace horncode

#endif
