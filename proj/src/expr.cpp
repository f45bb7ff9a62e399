#include "cdlab/expr.hpp"

#include <cctype>

namespace cdlab {

namespace {

class Parser {
public:
    Parser(const std::string& text, const Signature& sig) : text_(text), sig_(sig) {}

    ExprNode run() {
        skip_ws();
        if (at_end()) throw ParseError("empty expression", 0);
        ExprNode e = expr();
        skip_ws();
        if (!at_end()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    ExprNode expr() {
        ExprNode lhs = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                lhs = ExprNode::binary(ExprNode::Kind::Add, std::move(lhs), term());
            } else if (peek() == '-') {
                ++pos_;
                lhs = ExprNode::binary(ExprNode::Kind::Sub, std::move(lhs), term());
            } else {
                return lhs;
            }
        }
    }

    ExprNode term() {
        ExprNode lhs = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                lhs = ExprNode::binary(ExprNode::Kind::Mul, std::move(lhs), factor());
            } else {
                return lhs;
            }
        }
    }

    ExprNode factor() {
        skip_ws();
        char c = peek();
        if (c == '-') {
            ++pos_;
            return ExprNode::unary(ExprNode::Kind::Negate, factor());
        }
        if (c == '(') {
            std::size_t open = pos_++;
            ExprNode inner = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("unbalanced parenthesis", open);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_lit();
        if (c == 'o' || c == 'u') return blade_lit();
        throw ParseError(at_end() ? "unexpected end of input"
                                  : std::string("unexpected character '") + c + "'",
                         pos_);
    }

    ExprNode rational_lit() {
        long long num = integer();
        skip_ws();
        if (peek() == '/') {
            std::size_t slash = pos_++;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected denominator", slash + 1);
            long long den = integer();
            if (den == 0) throw ParseError("zero denominator", slash + 1);
            return ExprNode::number(Rational(num, den));
        }
        return ExprNode::number(Rational(num));
    }

    long long integer() {
        std::size_t start = pos_;
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v < 0) throw ParseError("integer literal overflow", start);
            ++pos_;
        }
        return v;
    }

    ExprNode blade_lit() {
        // One optional imaginary run then one optional unitary run, so that
        // "o1u1" is a single blade while "o1o2" stays a syntax error.
        std::size_t start = pos_;
        Mask mask = 0;
        if (peek() == 'o') {
            ++pos_;
            add_indices(mask, false, start);
        }
        if (peek() == 'u') {
            ++pos_;
            add_indices(mask, true, start);
        }
        return ExprNode::blade_tok(mask);
    }

    void add_indices(Mask& mask, bool unitary, std::size_t start) {
        int count = unitary ? sig_.p() : sig_.q();
        for (int idx : indices(start)) {
            if (idx < 1 || idx > count)
                throw std::domain_error("blade index " + std::to_string(idx) +
                                        " exceeds signature");
            Mask bit = Mask(1) << ((unitary ? sig_.q() : 0) + idx - 1);
            if (mask & bit) throw ParseError("repeated blade index", start);
            mask |= bit;
        }
    }

    std::vector<int> indices(std::size_t start) {
        std::vector<int> out;
        if (peek() == '[') {
            ++pos_;
            for (;;) {
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    throw ParseError("expected blade index", pos_);
                out.push_back(static_cast<int>(integer()));
                skip_ws();
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                if (peek() == ']') {
                    ++pos_;
                    break;
                }
                throw ParseError("expected ',' or ']'", pos_);
            }
        } else {
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                int digit = text_[pos_] - '0';
                if (digit == 0) throw ParseError("blade index 0", pos_);
                out.push_back(digit);
                ++pos_;
            }
        }
        if (out.empty()) throw ParseError("blade token without indices", start);
        return out;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    const std::string& text_;
    const Signature& sig_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprNode parse(const std::string& text, const Signature& sig) {
    return Parser(text, sig).run();
}

Element evaluate(const ExprNode& node, const Algebra& alg) {
    switch (node.kind()) {
        case ExprNode::Kind::Number:
            return Element::scalar(node.value());
        case ExprNode::Kind::BladeTok:
            return Element::blade(node.mask());
        case ExprNode::Kind::Negate:
            return -evaluate(node.child(0), alg);
        case ExprNode::Kind::Add:
            return evaluate(node.child(0), alg) + evaluate(node.child(1), alg);
        case ExprNode::Kind::Sub:
            return evaluate(node.child(0), alg) - evaluate(node.child(1), alg);
        case ExprNode::Kind::Mul:
            return element_mul(alg, evaluate(node.child(0), alg), evaluate(node.child(1), alg));
    }
    throw std::logic_error("unreachable expression kind");
}

std::string format(const Element& e, const Algebra& alg) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mask, coeff] : e.coeffs()) {
        Rational mag = coeff.abs();
        if (first) {
            if (coeff.is_negative()) out += "-";
            first = false;
        } else {
            out += coeff.is_negative() ? " - " : " + ";
        }
        if (mask == 0) {
            out += mag.to_string();
        } else if (mag == Rational(1)) {
            out += alg.basis_label(mask);
        } else {
            out += mag.to_string() + "*" + alg.basis_label(mask);
        }
    }
    return out;
}

}  // namespace cdlab
