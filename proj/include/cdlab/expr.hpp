#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "cdlab/element.hpp"

namespace cdlab {

/// Syntax error with the offending position in the input text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/**
 * Parsed expression tree. Products are strictly binary because grouping is
 * semantic in a non-associative algebra; unparenthesized chains associate
 * left.
 */
class ExprNode {
public:
    enum class Kind { Number, BladeTok, Negate, Add, Sub, Mul };

    static ExprNode number(const Rational& v) {
        ExprNode n(Kind::Number);
        n.value_ = v;
        return n;
    }
    static ExprNode blade_tok(Mask mask) {
        ExprNode n(Kind::BladeTok);
        n.mask_ = mask;
        return n;
    }
    static ExprNode unary(Kind k, ExprNode child) {
        ExprNode n(k);
        n.kids_.push_back(std::move(child));
        return n;
    }
    static ExprNode binary(Kind k, ExprNode lhs, ExprNode rhs) {
        ExprNode n(k);
        n.kids_.push_back(std::move(lhs));
        n.kids_.push_back(std::move(rhs));
        return n;
    }

    Kind kind() const { return kind_; }
    const Rational& value() const { return value_; }
    Mask mask() const { return mask_; }
    const ExprNode& child(std::size_t i) const { return kids_[i]; }
    std::size_t arity() const { return kids_.size(); }

private:
    explicit ExprNode(Kind k) : kind_(k) {}

    Kind kind_;
    Rational value_;
    Mask mask_ = 0;
    std::vector<ExprNode> kids_;
};

/**
 * Grammar:
 *   expr   := term (('+'|'-') term)*
 *   term   := factor ('*' factor)*
 *   factor := rational | blade | '(' expr ')' | '-' factor
 *
 * Blade tokens are `o`/`u` runs of single digits (o12, u3, o1u1) or bracket
 * lists for indices past 9 (o[1,10]). `*` is mandatory between factors and
 * whitespace is ignored. Indices outside the signature raise a domain error.
 */
ExprNode parse(const std::string& text, const Signature& sig);

/// Evaluate a tree; the evaluation order mirrors the tree shape exactly.
Element evaluate(const ExprNode& node, const Algebra& alg);

/// Deterministic mask-ascending rendering; parse(format(a)) evaluates back
/// to a.
std::string format(const Element& e, const Algebra& alg);

}  // namespace cdlab
