#pragma once

// Constructor-expression grammar:
//
//   expr := Zmod <n> | ZeroMul <n>
//         | Mat <k> (<expr>)
//         | Product (<expr>, <expr>, ...)
//         | Dorroh (<expr>; <expr>)
//         | Corner (<expr>) e=<idx>
//         | Ideal (<expr>) a=<idx>
//         | Quotient (<expr>) a=<idx>
//         | PairRing (<expr>)
//         | File <path>
//
// Whitespace-insensitive; identifiers are letter runs and numbers are digit
// runs, so the compact canonical names ("Mat2(Zmod2)") parse back. A File
// path is a run of characters other than whitespace, parentheses, commas,
// and semicolons.

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "qpring/constructions.hpp"
#include "qpring/ring.hpp"
#include "qpring/ring_io.hpp"

namespace qpring {

struct RingExpr {
    enum class Kind { Zmod, ZeroMul, Mat, Product, Dorroh, Corner, Ideal, PairRing, Quotient, File };
    Kind kind{};
    unsigned number = 0; // Zmod/ZeroMul modulus, Mat dimension
    Idx element = 0;     // Corner e=, Ideal/Quotient a=
    std::string path;    // File
    std::vector<RingExpr> children;
};

namespace detail {

class ExprLexer {
  public:
    explicit ExprLexer(const std::string& text) : text_(text) {}

    std::size_t pos() const { return pos_; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek_punct() {
        skip_ws();
        if (pos_ >= text_.size()) return '\0';
        char c = text_[pos_];
        return (c == '(' || c == ')' || c == ',' || c == ';' || c == '=') ? c : '\0';
    }

    void expect_punct(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string expect_ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(start, "expected an identifier");
        return text_.substr(start, pos_ - start);
    }

    unsigned long expect_number(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        unsigned long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (v > 1000000) throw ParseError(start, std::string(what) + " out of range");
            ++pos_;
        }
        if (pos_ == start) throw ParseError(start, std::string("expected ") + what);
        return v;
    }

    std::string expect_path() {
        skip_ws();
        std::size_t start = pos_;
        auto stops = [](char c) {
            return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' ||
                   c == ',' || c == ';';
        };
        while (pos_ < text_.size() && !stops(text_[pos_])) ++pos_;
        if (pos_ == start) throw ParseError(start, "expected a file path");
        return text_.substr(start, pos_ - start);
    }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

inline RingExpr parse_expr(ExprLexer& lex) {
    std::size_t at = lex.pos();
    std::string head = lex.expect_ident();
    RingExpr e;
    auto paren_child = [&] {
        lex.expect_punct('(');
        e.children.push_back(parse_expr(lex));
        lex.expect_punct(')');
    };
    auto keyed_index = [&](const char* key) {
        std::size_t kat = lex.pos();
        if (lex.expect_ident() != key)
            throw ParseError(kat, std::string("expected '") + key + "=<idx>'");
        lex.expect_punct('=');
        unsigned long v = lex.expect_number("element index");
        if (v > 65535) throw ParseError(kat, "element index out of range");
        e.element = static_cast<Idx>(v);
    };

    if (head == "Zmod" || head == "ZeroMul") {
        e.kind = head == "Zmod" ? RingExpr::Kind::Zmod : RingExpr::Kind::ZeroMul;
        unsigned long n = lex.expect_number("modulus");
        if (n == 0) throw ParseError(at, head + " needs a positive modulus");
        if (n > 65535) throw ParseError(at, "modulus out of range");
        e.number = static_cast<unsigned>(n);
    } else if (head == "Mat") {
        e.kind = RingExpr::Kind::Mat;
        unsigned long k = lex.expect_number("dimension");
        if (k == 0) throw ParseError(at, "Mat needs a positive dimension");
        if (k > 16) throw ParseError(at, "dimension out of range");
        e.number = static_cast<unsigned>(k);
        paren_child();
    } else if (head == "Product") {
        e.kind = RingExpr::Kind::Product;
        lex.expect_punct('(');
        e.children.push_back(parse_expr(lex));
        while (lex.peek_punct() == ',') {
            lex.expect_punct(',');
            e.children.push_back(parse_expr(lex));
        }
        lex.expect_punct(')');
    } else if (head == "Dorroh") {
        e.kind = RingExpr::Kind::Dorroh;
        lex.expect_punct('(');
        e.children.push_back(parse_expr(lex));
        lex.expect_punct(';');
        e.children.push_back(parse_expr(lex));
        lex.expect_punct(')');
    } else if (head == "Corner") {
        e.kind = RingExpr::Kind::Corner;
        paren_child();
        keyed_index("e");
    } else if (head == "Ideal") {
        e.kind = RingExpr::Kind::Ideal;
        paren_child();
        keyed_index("a");
    } else if (head == "Quotient") {
        e.kind = RingExpr::Kind::Quotient;
        paren_child();
        keyed_index("a");
    } else if (head == "PairRing") {
        e.kind = RingExpr::Kind::PairRing;
        paren_child();
    } else if (head == "File") {
        e.kind = RingExpr::Kind::File;
        e.path = lex.expect_path();
    } else {
        throw ParseError(at, "unknown constructor '" + head + "'");
    }
    return e;
}

} // namespace detail

inline RingExpr parse_ring_expr(const std::string& text) {
    detail::ExprLexer lex(text);
    RingExpr e = detail::parse_expr(lex);
    if (!lex.at_end()) throw ParseError(lex.pos(), "unexpected trailing input");
    return e;
}

inline std::string canonical_name(const RingExpr& e) {
    using K = RingExpr::Kind;
    switch (e.kind) {
    case K::Zmod: return "Zmod" + std::to_string(e.number);
    case K::ZeroMul: return "ZeroMul" + std::to_string(e.number);
    case K::Mat:
        return "Mat" + std::to_string(e.number) + "(" + canonical_name(e.children[0]) + ")";
    case K::Product: {
        std::string s = "Product(";
        for (std::size_t i = 0; i < e.children.size(); ++i) {
            if (i) s += ',';
            s += canonical_name(e.children[i]);
        }
        return s + ")";
    }
    case K::Dorroh:
        return "Dorroh(" + canonical_name(e.children[0]) + ";" + canonical_name(e.children[1]) +
               ")";
    case K::Corner:
        return "Corner(" + canonical_name(e.children[0]) + ")e=" + std::to_string(e.element);
    case K::Ideal:
        return "Ideal(" + canonical_name(e.children[0]) + ")a=" + std::to_string(e.element);
    case K::Quotient:
        return "Quotient(" + canonical_name(e.children[0]) + ")a=" + std::to_string(e.element);
    case K::PairRing: return "PairRing(" + canonical_name(e.children[0]) + ")";
    case K::File: return "File(" + e.path + ")";
    }
    return "?";
}

struct EvalOptions {
    Idx max_order = kDefaultMaxOrder;
};

inline FiniteGeneralRing eval(const RingExpr& e, const EvalOptions& opts = {}) {
    using K = RingExpr::Kind;
    switch (e.kind) {
    case K::Zmod: {
        check_feasible(e.number, opts.max_order);
        return zmod(e.number);
    }
    case K::ZeroMul: {
        check_feasible(e.number, opts.max_order);
        return zero_mul(e.number);
    }
    case K::Mat: {
        FiniteGeneralRing base = eval(e.children[0], opts);
        return matrix_ring(base, e.number, opts.max_order);
    }
    case K::Product: {
        std::vector<FiniteGeneralRing> parts;
        parts.reserve(e.children.size());
        for (const auto& c : e.children) parts.push_back(eval(c, opts));
        std::vector<const FiniteGeneralRing*> ptrs;
        for (const auto& p : parts) ptrs.push_back(&p);
        return direct_product(ptrs, opts.max_order);
    }
    case K::Dorroh: {
        FiniteGeneralRing s = eval(e.children[0], opts);
        FiniteGeneralRing i = eval(e.children[1], opts);
        return dorroh(s, i, nullptr, opts.max_order);
    }
    case K::Corner: {
        FiniteGeneralRing base = eval(e.children[0], opts);
        if (e.element >= base.order())
            throw std::invalid_argument("corner: element index out of range");
        return corner(base, e.element).ring;
    }
    case K::Ideal: {
        FiniteGeneralRing base = eval(e.children[0], opts);
        if (e.element >= base.order())
            throw std::invalid_argument("principal_ideal: element index out of range");
        return principal_ideal(base, e.element).ring;
    }
    case K::Quotient: {
        FiniteGeneralRing base = eval(e.children[0], opts);
        if (e.element >= base.order())
            throw std::invalid_argument("quotient: element index out of range");
        return quotient(base, e.element).ring;
    }
    case K::PairRing: {
        FiniteGeneralRing base = eval(e.children[0], opts);
        return pair_ring(base, opts.max_order);
    }
    case K::File: {
        FiniteGeneralRing ring = load_ring_file(e.path);
        check_feasible(ring.order(), opts.max_order);
        return ring;
    }
    }
    throw std::logic_error("unreachable expression kind");
}

inline FiniteGeneralRing eval_ring_expr(const std::string& text, const EvalOptions& opts = {}) {
    return eval(parse_ring_expr(text), opts);
}

} // namespace qpring
