#pragma once

// Plain-text Cayley table files:
//
//   ring <name>
//   order <n>
//   unity <idx|none>
//   add:
//   <n rows of n space-separated indices>
//   mul:
//   <n rows>
//
// dump_ring and parse_ring_file round-trip byte for byte. The unity header
// is cross-checked against detection on load, so a file cannot claim an
// identity the tables do not support.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qpring/ring.hpp"

namespace qpring {

inline std::string dump_ring(const FiniteGeneralRing& r) {
    std::ostringstream os;
    os << "ring " << r.name() << "\n";
    os << "order " << r.order() << "\n";
    os << "unity ";
    if (r.unity())
        os << *r.unity();
    else
        os << "none";
    os << "\n";
    auto block = [&](const char* label, const std::vector<Idx>& table) {
        os << label << ":\n";
        for (Idx i = 0; i < r.order(); ++i) {
            for (Idx j = 0; j < r.order(); ++j) {
                if (j) os << ' ';
                os << table[std::size_t(i) * r.order() + j];
            }
            os << "\n";
        }
    };
    block("add", r.add_table());
    block("mul", r.mul_table());
    return os.str();
}

namespace detail {

struct Line {
    std::size_t offset;
    std::string text;
};

inline std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::size_t end = (nl == std::string::npos) ? text.size() : nl;
        std::string body = text.substr(start, end - start);
        if (!body.empty() && body.back() == '\r') body.pop_back();
        lines.push_back({start, std::move(body)});
        if (nl == std::string::npos) break;
        start = nl + 1;
    }
    while (!lines.empty() && lines.back().text.empty()) lines.pop_back();
    return lines;
}

inline unsigned long parse_uint(const std::string& word, std::size_t offset,
                                const char* what) {
    if (word.empty()) throw ParseError(offset, std::string("expected ") + what);
    for (char c : word)
        if (c < '0' || c > '9')
            throw ParseError(offset, std::string("expected ") + what + ", got '" + word + "'");
    unsigned long v = 0;
    for (char c : word) {
        v = v * 10 + static_cast<unsigned long>(c - '0');
        if (v > 1000000) throw ParseError(offset, std::string(what) + " out of range");
    }
    return v;
}

} // namespace detail

inline FiniteGeneralRing parse_ring_file(const std::string& text) {
    auto lines = detail::split_lines(text);
    std::size_t cur = 0;
    auto need = [&](const char* what) -> const detail::Line& {
        if (cur >= lines.size())
            throw ParseError(text.size(), std::string("unexpected end of file, expected ") + what);
        return lines[cur++];
    };

    const auto& lname = need("'ring <name>' header");
    if (lname.text.rfind("ring ", 0) != 0 || lname.text.size() <= 5)
        throw ParseError(lname.offset, "expected 'ring <name>' header");
    std::string name = lname.text.substr(5);

    const auto& lorder = need("'order <n>' header");
    if (lorder.text.rfind("order ", 0) != 0)
        throw ParseError(lorder.offset, "expected 'order <n>' header");
    unsigned long order = detail::parse_uint(lorder.text.substr(6), lorder.offset, "order");
    if (order == 0 || order > 65535) throw ParseError(lorder.offset, "order out of range");
    const Idx n = static_cast<Idx>(order);

    const auto& lunity = need("'unity <idx|none>' header");
    if (lunity.text.rfind("unity ", 0) != 0)
        throw ParseError(lunity.offset, "expected 'unity <idx|none>' header");
    std::string uword = lunity.text.substr(6);
    std::optional<Idx> unity_claim;
    if (uword != "none") {
        unsigned long u = detail::parse_uint(uword, lunity.offset, "unity index");
        if (u >= order) throw ParseError(lunity.offset, "unity index out of range");
        unity_claim = static_cast<Idx>(u);
    }

    auto read_block = [&](const char* label) {
        const auto& head = need(label);
        if (head.text != std::string(label) + ":")
            throw ParseError(head.offset, std::string("expected '") + label + ":'");
        std::vector<Idx> table;
        table.reserve(std::size_t(n) * n);
        for (Idx i = 0; i < n; ++i) {
            const auto& row = need("table row");
            std::istringstream is(row.text);
            std::string word;
            Idx count = 0;
            while (is >> word) {
                unsigned long v = detail::parse_uint(word, row.offset, "table entry");
                if (v >= order) throw ParseError(row.offset, "table entry out of range");
                table.push_back(static_cast<Idx>(v));
                ++count;
            }
            if (count != n)
                throw ParseError(row.offset, "expected " + std::to_string(n) +
                                                 " entries in table row, got " +
                                                 std::to_string(count));
        }
        return table;
    };

    std::vector<Idx> add = read_block("add");
    std::vector<Idx> mul = read_block("mul");
    if (cur != lines.size())
        throw ParseError(lines[cur].offset, "unexpected trailing content");

    FiniteGeneralRing ring = build_ring(n, std::move(add), std::move(mul), std::nullopt, name);
    if (ring.unity() != unity_claim)
        throw ParseError(lunity.offset, "unity header disagrees with the tables");
    return ring;
}

inline FiniteGeneralRing load_ring_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open ring file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ring_file(buf.str());
}

} // namespace qpring
