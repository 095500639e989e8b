#include "vflie/parse.hpp"

#include <json.hpp>

#include <cctype>
#include <functional>

namespace vflie {

ParseError::ParseError(size_t position, std::string expected, std::string found)
    : std::runtime_error("parse error at offset " + std::to_string(position) +
                         ": expected " + expected + ", found '" + found + "'"),
      position(position),
      expected(std::move(expected)),
      found(std::move(found)) {}

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    char peek() {
        ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eof() { return peek() == '\0'; }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& what) {
        if (!accept(c)) fail(what);
    }
    [[noreturn]] void fail(const std::string& expected) {
        ws();
        std::string found =
            pos < text.size() ? std::string(1, text[pos]) : std::string("end of input");
        throw ParseError(pos, expected, found);
    }
};

bool digit_ahead(Cursor& cur) { return std::isdigit(static_cast<unsigned char>(cur.peek())); }

std::string read_digits(Cursor& cur) {
    cur.ws();
    size_t start = cur.pos;
    while (cur.pos < cur.text.size() &&
           std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
        ++cur.pos;
    if (cur.pos == start) cur.fail("digits");
    return cur.text.substr(start, cur.pos - start);
}

Rational read_rational(Cursor& cur) {
    std::string num = read_digits(cur);
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == '/') {
        ++cur.pos;
        std::string den = read_digits(cur);
        return rational_from_string(num + "/" + den);
    }
    return rational_from_string(num);
}

int read_exponent(Cursor& cur) {
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == '^') {
        ++cur.pos;
        return std::stoi(read_digits(cur));
    }
    return 1;
}

// Sum of cyclotomic atoms: rational ['*' 'z' ['^' uint]] | 'z' ['^' uint].
Scalar read_scalar_sum(Cursor& cur, int field, char terminator) {
    Scalar total(0);
    bool neg = cur.accept('-');
    for (;;) {
        Rational r = 1;
        int zpow = 0;
        if (digit_ahead(cur)) {
            r = read_rational(cur);
            if (cur.accept('*')) {
                cur.expect('z', "'z'");
                zpow = read_exponent(cur);
            }
        } else if (cur.accept('z')) {
            zpow = read_exponent(cur);
        } else {
            cur.fail("a rational or 'z'");
        }
        Scalar atom = Scalar(r).promoted(field);
        for (int i = 0; i < zpow; ++i) atom *= Scalar::zeta(field);
        total += neg ? -atom : atom;

        char c = cur.peek();
        if (c == terminator || c == '\0') return total;
        if (cur.accept('+'))
            neg = false;
        else if (cur.accept('-'))
            neg = true;
        else
            cur.fail("'+', '-' or end of coefficient");
    }
}

int var_index(char c) { return c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : -1; }

// One '*'-separated term. With direction != nullptr, a trailing dx/dy/dz
// token is required (vector-field grammar) and its index is stored there.
void read_term(Cursor& cur, int arity, int field, bool negative, Poly& acc, int* direction) {
    Scalar coeff = Scalar(1).promoted(field);
    Monomial mono(arity, 0);
    bool saw_direction = false;
    for (;;) {
        char c = cur.peek();
        if (direction && c == 'd' && cur.pos + 1 < cur.text.size()) {
            int dir = var_index(cur.text[cur.pos + 1]);
            if (dir < 0 || dir >= arity) cur.fail("direction dx, dy or dz");
            cur.pos += 2;
            *direction = dir;
            saw_direction = true;
            break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff *= Scalar(read_rational(cur)).promoted(field);
        } else if (c == '(') {
            cur.expect('(', "'('");
            coeff *= read_scalar_sum(cur, field, ')');
            cur.expect(')', "')'");
        } else if (int v = var_index(c); v >= 0) {
            if (v >= arity) cur.fail("a variable of the ambient ring");
            ++cur.pos;
            mono[v] += read_exponent(cur);
        } else {
            cur.fail(direction ? "a factor or direction token" : "a factor");
        }
        if (!cur.accept('*')) break;
    }
    if (direction && !saw_direction) cur.fail("'*' and a direction token");
    acc.add_term(mono, negative ? -coeff : coeff);
}

} // namespace

Poly parse_poly(const std::string& text, int arity, int field_order) {
    Cursor cur{text};
    Poly acc(arity, field_order);
    bool neg = cur.accept('-');
    for (;;) {
        read_term(cur, arity, field_order, neg, acc, nullptr);
        if (cur.eof()) break;
        if (cur.accept('+'))
            neg = false;
        else if (cur.accept('-'))
            neg = true;
        else
            cur.fail("'+', '-' or end of input");
    }
    return acc;
}

VecField parse_vecfield(const std::string& text, int arity, int field_order) {
    Cursor cur{text};
    std::vector<Poly> coeffs(arity, Poly(arity, field_order));
    // Bare "0" denotes the zero field (no direction token involved).
    {
        Cursor probe = cur;
        if (probe.accept('0') && probe.eof()) return VecField(coeffs);
    }
    bool neg = cur.accept('-');
    for (;;) {
        int dir = -1;
        Poly term(arity, field_order);
        read_term(cur, arity, field_order, neg, term, &dir);
        coeffs[dir] += term;
        if (cur.eof()) break;
        if (cur.accept('+'))
            neg = false;
        else if (cur.accept('-'))
            neg = true;
        else
            cur.fail("'+', '-' or end of input");
    }
    return VecField(coeffs);
}

Scalar parse_scalar(const std::string& text, int field_order) {
    Cursor cur{text};
    // read_scalar_sum consumes an optional leading '-' and loops over
    // '+'/'-' until end of input.
    Scalar sum = read_scalar_sum(cur, field_order, '\0');
    if (!cur.eof()) cur.fail("end of input");
    return sum.promoted(field_order);
}

WordPtr parse_word(const std::string& json_text, int field_order) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte > 0 ? e.byte - 1 : 0, "valid JSON", "malformed input");
    }

    std::function<WordPtr(const nlohmann::json&)> build =
        [&](const nlohmann::json& node) -> WordPtr {
        if (!node.is_object()) throw DomainError("bracket word: node must be an object");
        if (node.contains("leaf")) return BracketWord::leaf(node["leaf"].get<std::string>());
        if (node.contains("bracket")) {
            const auto& pair = node["bracket"];
            if (!pair.is_array() || pair.size() != 2)
                throw DomainError("bracket word: 'bracket' needs exactly two children");
            return BracketWord::bracketed(build(pair[0]), build(pair[1]));
        }
        if (node.contains("scale")) {
            const auto& sc = node["scale"];
            Scalar s = parse_scalar(sc.at("s").get<std::string>(), field_order);
            return BracketWord::scaled(s, build(sc.at("w")));
        }
        throw DomainError("bracket word: expected 'leaf', 'bracket' or 'scale'");
    };
    return build(doc);
}

} // namespace vflie
