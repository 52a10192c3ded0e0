#include "dnl/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

namespace dnl {

struct Expression::Node {
    enum class Kind { Number, X1, X2, Neg, Add, Sub, Mul, Div, Pow } kind;
    double value = 0.0;
    int exponent = 0;
    std::shared_ptr<const Node> lhs, rhs;

    double eval(double x1, double x2) const {
        switch (kind) {
            case Kind::Number: return value;
            case Kind::X1: return x1;
            case Kind::X2: return x2;
            case Kind::Neg: return -lhs->eval(x1, x2);
            case Kind::Add: return lhs->eval(x1, x2) + rhs->eval(x1, x2);
            case Kind::Sub: return lhs->eval(x1, x2) - rhs->eval(x1, x2);
            case Kind::Mul: return lhs->eval(x1, x2) * rhs->eval(x1, x2);
            case Kind::Div: return lhs->eval(x1, x2) / rhs->eval(x1, x2);
            case Kind::Pow: {
                const double b = lhs->eval(x1, x2);
                double acc = 1.0;
                for (int e = std::abs(exponent); e > 0; --e) acc *= b;
                return exponent < 0 ? 1.0 / acc : acc;
            }
        }
        return 0.0;
    }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    NodePtr parse_all() {
        NodePtr e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ExpressionError("malformed expression at column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static NodePtr make(Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
        auto n = std::make_shared<Expression::Node>();
        n->kind = k;
        n->lhs = std::move(a);
        n->rhs = std::move(b);
        return n;
    }

    NodePtr expr() {
        NodePtr n = term();
        for (;;) {
            if (accept('+')) n = make(Kind::Add, n, term());
            else if (accept('-')) n = make(Kind::Sub, n, term());
            else return n;
        }
    }

    NodePtr term() {
        NodePtr n = unary();
        for (;;) {
            if (accept('*')) n = make(Kind::Mul, n, unary());
            else if (accept('/')) n = make(Kind::Div, n, unary());
            else return n;
        }
    }

    NodePtr unary() {
        if (accept('-')) return make(Kind::Neg, unary());
        if (accept('+')) return unary();
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (!accept('^')) return base;
        skip();
        bool negative = false;
        if (accept('-')) negative = true;
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("exponent must be an integer literal");
        if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
            fail("exponent must be an integer literal");
        int e = 0;
        auto [p, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, e);
        if (ec != std::errc()) fail("exponent out of range");
        auto n = std::make_shared<Expression::Node>();
        n->kind = Kind::Pow;
        n->lhs = std::move(base);
        n->exponent = negative ? -e : e;
        return n;
    }

    NodePtr primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (accept('(')) {
            NodePtr e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (s_.compare(pos_, 2, "x1") == 0 || s_.compare(pos_, 2, "x2") == 0) {
            const Kind k = s_[pos_ + 1] == '1' ? Kind::X1 : Kind::X2;
            pos_ += 2;
            return make(k);
        }
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    NodePtr number() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t q = pos_ + 1;
            if (q < s_.size() && (s_[q] == '+' || s_[q] == '-')) ++q;
            if (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) {
                pos_ = q;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
        }
        const std::string lit(s_.substr(start, pos_ - start));
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(lit, &used);
        } catch (const std::exception&) {
            fail("bad numeric literal '" + lit + "'");
        }
        if (used != lit.size()) fail("bad numeric literal '" + lit + "'");
        auto n = std::make_shared<Expression::Node>();
        n->kind = Kind::Number;
        n->value = v;
        return n;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(std::string_view text) {
    Expression e;
    e.root_ = Parser(text).parse_all();
    e.text_ = std::string(text);
    return e;
}

double Expression::operator()(double x1, double x2) const { return root_->eval(x1, x2); }

}  // namespace dnl
