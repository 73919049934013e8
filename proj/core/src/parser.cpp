#include <lndkit/parser.hpp>

#include <cctype>
#include <sstream>

namespace lnd {

ParseError::ParseError(const std::string &what, std::size_t position, std::size_t line)
    : std::runtime_error(what), position_(position), line_(line)
{
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const VarSet &vars, const Bindings &lets) : text_(text), vars_(vars), lets_(lets) {}

    MultiPoly run()
    {
        skip_space();
        if (at_end()) {
            fail("empty expression");
        }
        MultiPoly p = expr();
        skip_space();
        if (!at_end()) {
            fail(std::string("unexpected character '") + text_[pos_] + "'");
        }
        return p;
    }

private:
    MultiPoly expr()
    {
        skip_space();
        bool negate = false;
        if (peek('+') || peek('-')) {
            negate = text_[pos_] == '-';
            ++pos_;
        }
        MultiPoly acc = term();
        if (negate) {
            acc = -acc;
        }
        for (;;) {
            skip_space();
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly term()
    {
        MultiPoly acc = factor();
        for (;;) {
            skip_space();
            if (!peek('*')) {
                return acc;
            }
            ++pos_;
            acc *= factor();
        }
    }

    MultiPoly factor()
    {
        MultiPoly base = atom();
        skip_space();
        if (peek('^')) {
            ++pos_;
            skip_space();
            const std::size_t start = pos_;
            const std::string digits = read_digits();
            if (digits.empty()) {
                fail("expected a non-negative integer exponent", start);
            }
            if (digits.size() > 6) {
                fail("exponent too large", start);
            }
            base = base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    MultiPoly atom()
    {
        skip_space();
        if (at_end()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            skip_space();
            if (!peek(')')) {
                fail("expected ')'");
            }
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num(read_digits());
            BigInt den = 1;
            skip_space();
            if (peek('/')) {
                ++pos_;
                skip_space();
                const std::size_t start = pos_;
                const std::string d = read_digits();
                if (d.empty()) {
                    fail("expected integer denominator after '/'", start);
                }
                den = BigInt(d);
                if (den == 0) {
                    fail("zero denominator", start);
                }
            }
            return MultiPoly::constant(vars_, Rational(std::move(num), std::move(den)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string_view name = text_.substr(start, pos_ - start);
            if (vars_.contains(name)) {
                return MultiPoly::variable(vars_, name);
            }
            if (auto it = lets_.find(name); it != lets_.end()) {
                return it->second;
            }
            fail("unknown variable '" + std::string(name) + "'", start);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string read_digits()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() const { return pos_ >= text_.size(); }
    bool peek(char c) const { return !at_end() && text_[pos_] == c; }

    [[noreturn]] void fail(const std::string &msg) const { fail(msg, pos_); }
    [[noreturn]] void fail(const std::string &msg, std::size_t at) const
    {
        throw ParseError("parse error at offset " + std::to_string(at) + ": " + msg, at);
    }

    std::string_view text_;
    const VarSet &vars_;
    const Bindings &lets_;
    std::size_t pos_ = 0;
};

std::string trim(std::string_view s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

bool is_identifier(std::string_view s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
            return false;
        }
    }
    return true;
}

} // namespace

MultiPoly parse(std::string_view text, const VarSet &vars, const Bindings &lets)
{
    return Parser(text, vars, lets).run();
}

MultiPoly Script::expand(const Assignment &a) const
{
    try {
        return parse(a.rhs, vars, lets);
    } catch (const ParseError &e) {
        throw ParseError("line " + std::to_string(a.line) + ": " + e.what(), e.position(), a.line);
    }
}

Script parse_script(std::string_view text)
{
    Script script;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    bool seen_content = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) {
            continue;
        }
        auto error = [&](const std::string &msg) { return ParseError("line " + std::to_string(line_no) + ": " + msg, 0, line_no); };

        if (line.rfind("vars", 0) == 0 && (line.size() == 4 || std::isspace(static_cast<unsigned char>(line[4])))) {
            if (seen_content) {
                throw error("'vars' must precede every other line");
            }
            std::vector<std::string> names;
            std::istringstream ns(line.substr(4));
            std::string tok;
            while (ns >> tok) {
                for (char &c : tok) {
                    if (c == ',') {
                        c = ' ';
                    }
                }
                std::istringstream parts(tok);
                std::string part;
                while (parts >> part) {
                    if (!is_identifier(part)) {
                        throw error("bad variable name '" + part + "'");
                    }
                    names.push_back(part);
                }
            }
            if (names.empty()) {
                throw error("'vars' needs at least one name");
            }
            try {
                script.vars = VarSet(std::move(names));
            } catch (const std::invalid_argument &e) {
                throw error(e.what());
            }
            seen_content = true;
            continue;
        }
        seen_content = true;

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw error("expected '<name> = <expression>'");
        }
        std::string lhs = trim(std::string_view(line).substr(0, eq));
        std::string rhs = trim(std::string_view(line).substr(eq + 1));
        if (rhs.empty()) {
            throw error("missing expression after '='");
        }
        if (lhs.rfind("let", 0) == 0 && lhs.size() > 3 && std::isspace(static_cast<unsigned char>(lhs[3]))) {
            std::string name = trim(std::string_view(lhs).substr(3));
            if (!is_identifier(name)) {
                throw error("bad let-binding name '" + name + "'");
            }
            if (script.vars.contains(name)) {
                throw error("let-binding '" + name + "' shadows a variable");
            }
            Script::Assignment a{name, rhs, line_no};
            MultiPoly value = script.expand(a);
            script.lets.insert_or_assign(std::move(name), std::move(value));
            continue;
        }
        script.assignments.push_back({std::move(lhs), std::move(rhs), line_no});
    }
    return script;
}

} // namespace lnd
