#pragma once

#include <string>

#include "laurent/classical.hpp"

namespace laurent {

/// Recursive-descent parser for the expression language
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' integer)? | '(' expr ')' | rational | '-' factor
/// with atoms E2, E4, E6, Delta, eta, j.  Errors carry byte offsets.
class FormParser {
public:
    explicit FormParser(std::string src) : src_(std::move(src)) {}

    FormExpr::Ptr parse() {
        auto e = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("trailing input", pos_);
        return e;
    }

private:
    std::string src_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    FormExpr::Ptr parse_expr() {
        auto lhs = parse_term();
        while (true) {
            if (eat('+')) lhs = FormExpr::make_binary(FormExpr::Kind::Add, lhs, parse_term());
            else if (eat('-')) lhs = FormExpr::make_binary(FormExpr::Kind::Sub, lhs, parse_term());
            else return lhs;
        }
    }

    FormExpr::Ptr parse_term() {
        auto lhs = parse_factor();
        while (true) {
            if (eat('*')) lhs = FormExpr::make_binary(FormExpr::Kind::Mul, lhs, parse_factor());
            else if (eat('/')) lhs = FormExpr::make_binary(FormExpr::Kind::Div, lhs, parse_factor());
            else return lhs;
        }
    }

    FormExpr::Ptr parse_factor() {
        skip_ws();
        if (eat('-')) return FormExpr::make_unary(FormExpr::Kind::Neg, parse_factor());
        FormExpr::Ptr base;
        if (eat('(')) {
            base = parse_expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            base = FormExpr::make_number(parse_number());
        } else {
            base = parse_atom();
        }
        if (eat('^')) {
            skip_ws();
            bool neg = eat('-');
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected integer exponent", pos_);
            long long e = 0;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                e = e * 10 + (src_[pos_++] - '0');
            base = FormExpr::make_pow(base, neg ? -e : e);
        }
        return base;
    }

    Rat parse_number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        Int num(src_.substr(start, pos_ - start));
        return Rat(num);
    }

    FormExpr::Ptr parse_atom() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        std::string name = src_.substr(start, pos_ - start);
        if (name == "E2") return FormExpr::make_atom(FormAtom::E2);
        if (name == "E4") return FormExpr::make_atom(FormAtom::E4);
        if (name == "E6") return FormExpr::make_atom(FormAtom::E6);
        if (name == "Delta") return FormExpr::make_atom(FormAtom::Delta);
        if (name == "eta") return FormExpr::make_atom(FormAtom::Eta);
        if (name == "j") return FormExpr::make_atom(FormAtom::J);
        throw ParseError(name.empty() ? "expected an atom or number"
                                      : "unknown atom '" + name + "'",
                         start);
    }
};

inline FormExpr::Ptr parse_form_expr(const std::string& src) {
    return FormParser(src).parse();
}

} // namespace laurent
