#include "mhess/textio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace mhess {

static std::string var_name(int idx, int nx) {
    if (idx < nx) return "x" + std::to_string(idx);
    return "y" + std::to_string(idx - nx);
}

std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        std::string body;
        bool coeff_needed = !a.is_one() || m.is_constant();
        if (coeff_needed) body = a.str();
        for (int i = 0; i < m.nvars(); ++i) {
            if (m.e[i] == 0) continue;
            if (!body.empty()) body += "*";
            body += var_name(i, p.nx());
            if (m.e[i] > 1) body += "^" + std::to_string(m.e[i]);
        }
        out += body;
    }
    return out;
}

namespace {

struct Scanner {
    const std::string& s;
    std::size_t pos = 0;
    int line, col = 1;

    Scanner(const std::string& text, int line0) : s(text), line(line0) {}

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r' ||
                                  s[pos] == '\n')) {
            if (s[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        char c = peek();
        ++pos;
        ++col;
        return c;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

    std::string take_digits() {
        skip_ws();
        std::string d;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            d += s[pos++];
            ++col;
        }
        if (d.empty()) fail("expected a number");
        return d;
    }
};

struct PolyParser {
    Scanner sc;
    int nx, ny;

    PolyParser(const std::string& text, int nx_, int ny_, int line0)
        : sc(text, line0), nx(nx_), ny(ny_) {}

    int small_int(const std::string& digits) {
        if (digits.size() > 6) sc.fail("number too large here: " + digits);
        return std::stoi(digits);
    }

    Poly parse() {
        Poly acc(nx, ny);
        bool negative = false;
        if (sc.peek() == '-') {
            sc.take();
            negative = true;
        } else if (sc.peek() == '+') {
            sc.take();
        }
        while (true) {
            Poly t = parse_term();
            acc += negative ? -t : t;
            if (sc.eof()) break;
            char c = sc.take();
            if (c == '+')
                negative = false;
            else if (c == '-')
                negative = true;
            else
                sc.fail(std::string("unexpected character '") + c + "'");
        }
        return acc;
    }

    Poly parse_term() {
        Poly t = parse_factor();
        while (sc.peek() == '*') {
            sc.take();
            t *= parse_factor();
        }
        return t;
    }

    Poly parse_factor() {
        char c = sc.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = sc.take_digits();
            if (sc.peek() == '/') {
                sc.take();
                std::string den = sc.take_digits();
                if (Int(den) == 0) sc.fail("zero denominator");
                return Poly::constant(nx, ny, Rational(Int(num), Int(den)));
            }
            return Poly::constant(nx, ny, Rational(Int(num)));
        }
        if (c == 'x' || c == 'y') {
            sc.take();
            int idx = small_int(sc.take_digits());
            int vi;
            if (c == 'x') {
                if (idx >= nx) sc.fail("variable x" + std::to_string(idx) + " out of range");
                vi = idx;
            } else {
                if (ny == 0) sc.fail("jet variables not allowed here");
                if (idx >= ny) sc.fail("variable y" + std::to_string(idx) + " out of range");
                vi = nx + idx;
            }
            int exp = 1;
            if (sc.peek() == '^') {
                sc.take();
                exp = small_int(sc.take_digits());
            }
            Monomial m(nx + ny);
            m.e[vi] = exp;
            return Poly::term(nx, ny, Rational(1), m);
        }
        sc.fail(c == '\0' ? "unexpected end of input"
                          : std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Poly parse_poly(const std::string& text, int nx, int ny, int line0) {
    PolyParser p(text, nx, ny, line0);
    if (p.sc.eof()) p.sc.fail("empty polynomial");
    return p.parse();
}

ParsedInput parse_input_text(const std::string& text) {
    ParsedInput out;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool saw_vars = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        if (!saw_vars) {
            if (line.compare(first, 5, "vars:") != 0)
                throw ParseError("expected 'vars:' header", lineno,
                                 static_cast<int>(first) + 1);
            std::istringstream hs(line.substr(first + 5));
            std::string v;
            int expect = 0;
            while (hs >> v) {
                if (v != "x" + std::to_string(expect))
                    throw ParseError("expected variable x" + std::to_string(expect) +
                                         ", got '" + v + "'",
                                     lineno, 1);
                ++expect;
            }
            if (expect < 2)
                throw ParseError("need at least two variables", lineno, 1);
            out.nx = expect;
            saw_vars = true;
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'name = polynomial'", lineno, 1);
        std::string name = line.substr(first, eq - first);
        while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
        if (name.empty()) throw ParseError("missing form name", lineno, 1);
        out.names.push_back(name);
        out.forms.push_back(parse_poly(line.substr(eq + 1), out.nx, 0, lineno));
    }
    if (!saw_vars) throw ParseError("empty input: no 'vars:' header", 1, 1);
    if (out.forms.empty()) throw ParseError("no forms given", lineno ? lineno : 1, 1);
    return out;
}

ParsedInput parse_input_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open input file '" + path + "'", 0, 0);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_input_text(ss.str());
}

nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json t;
        t["exponents"] = m.e;
        t["coeff"] = c.str();
        arr.push_back(std::move(t));
    }
    return arr;
}

Poly poly_from_json(const nlohmann::json& j, int nx, int ny) {
    Poly p(nx, ny);
    for (const auto& t : j) {
        std::vector<int> e = t.at("exponents").get<std::vector<int>>();
        if (static_cast<int>(e.size()) != nx + ny)
            throw DomainError("exponent vector length does not match layout");
        p.add_term(Monomial(std::move(e)), Rational::from_string(t.at("coeff").get<std::string>()));
    }
    return p;
}

}  // namespace mhess
