#include "zlkb/objexpr.hpp"

#include "zlkb/braid.hpp"
#include "zlkb/homotopy.hpp"
#include "zlkb/stability.hpp"

#include <cctype>
#include <vector>

namespace zlkb {

namespace {

struct Parser {
    const std::string& text;
    int n;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ObjParseError(std::string("expected '") + c + "'", pos);
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos) throw ObjParseError("expected a name", pos);
        return text.substr(start, pos - start);
    }
    int integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ObjParseError("expected an integer", pos);
        return std::stoi(text.substr(start, pos - start));
    }

    // raw argument up to the next top-level ',' or ')'
    std::string raw_arg() {
        skip_ws();
        std::size_t start = pos;
        int depth = 0;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '(') ++depth;
            if (c == ')') {
                if (depth == 0) break;
                --depth;
            }
            if (c == ',' && depth == 0) break;
            ++pos;
        }
        return text.substr(start, pos - start);
    }

    ProjComplex expr() {
        std::string name = ident();
        if (name == "P") {
            expect('(');
            int i = integer();
            if (eat(',')) {
                int j = integer();
                expect(')');
                return tau_k_stable(n, 0, i, j);
            }
            expect(')');
            return ProjComplex::projective(n, i);
        }
        if (name == "Pk") {
            expect('(');
            int k = integer();
            expect(',');
            int i = integer();
            expect(',');
            int j = integer();
            expect(')');
            return tau_k_stable(n, k, i, j);
        }
        if (name == "shift") {
            expect('(');
            ProjComplex x = expr();
            expect(',');
            int k = integer();
            expect(',');
            int l = integer();
            expect(')');
            return x.shifted(k, l);
        }
        if (name == "tshift") {
            expect('(');
            ProjComplex x = expr();
            expect(',');
            int k = integer();
            expect(')');
            return x.triangulated_shifted(k);
        }
        if (name == "sum") {
            expect('(');
            ProjComplex x = expr();
            while (eat(',')) x = direct_sum(x, expr());
            expect(')');
            return x;
        }
        if (name == "act") {
            expect('(');
            // everything up to the last top-level comma is the braid word
            std::vector<std::string> parts;
            parts.push_back(raw_arg());
            while (eat(',')) parts.push_back(raw_arg());
            expect(')');
            if (parts.size() < 2) throw ObjParseError("act needs a word and an object", pos);
            std::string word_text = parts[0];
            for (std::size_t i = 1; i + 1 < parts.size(); ++i) word_text += "," + parts[i];
            Parser sub{text, n, 0};
            ProjComplex x = parse_object(parts.back(), n);
            return apply_word(BraidWord::parse(word_text, n), x);
        }
        if (name == "cone") {
            expect('(');
            std::string kind = ident();
            expect(',');
            ProjComplex x = expr();
            if (kind == "id") {
                expect(')');
                return cone(ChainMap::identity(x)).cone;
            }
            if (kind == "zero") {
                expect(',');
                ProjComplex y = expr();
                expect(')');
                return cone(ChainMap::zero(x, y)).cone;
            }
            throw ObjParseError("cone kind must be 'id' or 'zero'", pos);
        }
        throw ObjParseError("unknown constructor '" + name + "'", pos);
    }
};

} // namespace

ProjComplex parse_object(const std::string& text, int n) {
    Parser p{text, n, 0};
    ProjComplex x = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ObjParseError("trailing input", p.pos);
    return x;
}

} // namespace zlkb
