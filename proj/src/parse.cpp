#include "lcskit/parse.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace lcskit {

namespace {

enum class Tok { number, name, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

class Lexer {
public:
    explicit Lexer(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {
        advance();
    }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(tok_.offset, msg);
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        tok_.offset = base_ + pos_;
        if (pos_ >= text_.size()) {
            tok_ = {Tok::end, "", base_ + pos_};
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            tok_ = {Tok::number, std::string(text_.substr(start, pos_ - start)), base_ + start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            tok_ = {Tok::name, std::string(text_.substr(start, pos_ - start)), base_ + start};
            return;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::plus; break;
            case '-': k = Tok::minus; break;
            case '*': k = Tok::star; break;
            case '/': k = Tok::slash; break;
            case '^': k = Tok::caret; break;
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            default:
                throw ParseError(base_ + pos_, std::string("unexpected character '") + c + "'");
        }
        tok_ = {k, std::string(1, c), base_ + pos_};
        ++pos_;
    }

    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
    Token tok_{Tok::end, "", 0};
};

class FormParser {
public:
    FormParser(const Chart& chart, std::string_view text, std::size_t base)
        : chart_(chart), lex_(text, base) {}

    DifferentialForm parse() {
        DifferentialForm f = expr();
        if (lex_.peek().kind != Tok::end) lex_.fail("trailing input after expression");
        return f;
    }

private:
    DifferentialForm expr() {
        bool neg = false;
        if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            neg = true;
        }
        DifferentialForm acc = term();
        if (neg) acc = -acc;
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            bool minus = lex_.take().kind == Tok::minus;
            DifferentialForm t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    DifferentialForm term() {
        DifferentialForm acc = power();
        while (lex_.peek().kind == Tok::star || lex_.peek().kind == Tok::slash) {
            Token op = lex_.take();
            DifferentialForm rhs = power();
            if (op.kind == Tok::star) {
                acc = wedge(acc, rhs); // degree-0 factors act as scalars
            } else {
                if (rhs.max_degree() != 0 || !rhs.is_homogeneous())
                    throw ParseError(op.offset, "division needs a scalar divisor");
                acc = acc * rhs.coefficient({}).inverse();
            }
        }
        return acc;
    }

    DifferentialForm power() {
        DifferentialForm acc = primary();
        while (lex_.peek().kind == Tok::caret) {
            Token op = lex_.take();
            bool neg = false;
            if (lex_.peek().kind == Tok::minus) {
                lex_.take();
                neg = true;
            }
            DifferentialForm rhs = primary();
            auto exponent = literal_int(rhs);
            if (exponent) {
                long k = neg ? -*exponent : *exponent;
                acc = apply_power(acc, k, op.offset);
            } else {
                if (neg) rhs = -rhs;
                acc = wedge(acc, rhs);
            }
        }
        return acc;
    }

    // A parsed operand counts as an exponent only when it is a literal
    // rational integer (so coordinates named like constants still wedge).
    std::optional<long> literal_int(const DifferentialForm& f) const {
        if (!f.is_zero() && f.degree() != std::optional<int>(0)) return std::nullopt;
        ScalarExpr c = f.coefficient({});
        if (!c.is_constant()) return std::nullopt;
        Rational v = c.constant_value();
        if (!is_integer(v)) return std::nullopt;
        return static_cast<long>(rat_num(v));
    }

    DifferentialForm apply_power(const DifferentialForm& base, long k, std::size_t at) {
        bool scalar = base.is_zero() || base.degree() == std::optional<int>(0);
        if (scalar) {
            ScalarExpr c = base.coefficient({});
            if (k < 0 && c.is_zero())
                throw Error(ErrorKind::DivisionByZero, "zero raised to a negative power");
            return DifferentialForm::from_scalar(c.pow(static_cast<int>(k)));
        }
        if (k < 0) throw ParseError(at, "negative power of a form");
        return wedge_power(base, static_cast<unsigned>(k));
    }

    DifferentialForm primary() {
        Token t = lex_.peek();
        switch (t.kind) {
            case Tok::number: {
                lex_.take();
                return DifferentialForm::from_scalar(
                    ScalarExpr::constant(chart_, Rational(Integer(t.text))));
            }
            case Tok::lparen: {
                lex_.take();
                DifferentialForm f = expr();
                if (lex_.peek().kind != Tok::rparen) lex_.fail("expected ')'");
                lex_.take();
                return f;
            }
            case Tok::name:
                return named(lex_.take());
            default:
                lex_.fail("expected a value");
        }
    }

    DifferentialForm named(const Token& t) {
        if ((t.text == "sin" || t.text == "cos") && lex_.peek().kind == Tok::lparen) {
            lex_.take();
            Token arg = lex_.peek();
            if (arg.kind != Tok::name) lex_.fail("expected a coordinate name");
            lex_.take();
            if (lex_.peek().kind != Tok::rparen) lex_.fail("expected ')'");
            lex_.take();
            auto coord = chart_.find_coord(arg.text);
            if (!coord)
                throw ParseError(arg.offset, "unknown coordinate '" + arg.text + "'");
            if (chart_.coords()[*coord].kind != CoordKind::angular)
                throw ParseError(arg.offset,
                                 "coordinate '" + arg.text + "' is not angular");
            return DifferentialForm::from_scalar(t.text == "sin"
                                                     ? ScalarExpr::sin_of(chart_, *coord)
                                                     : ScalarExpr::cos_of(chart_, *coord));
        }
        if (auto coord = chart_.find_coord(t.text))
            return DifferentialForm::from_scalar(ScalarExpr::coordinate(chart_, *coord));
        if (auto param = chart_.find_param(t.text))
            return DifferentialForm::from_scalar(ScalarExpr::parameter(chart_, *param));
        if (t.text.size() > 1 && t.text[0] == 'd') {
            if (auto coord = chart_.find_coord(t.text.substr(1)))
                return DifferentialForm::differential(chart_, *coord);
        }
        throw ParseError(t.offset, "unknown symbol '" + t.text + "'");
    }

    const Chart& chart_;
    Lexer lex_;
};

struct Line {
    std::string text;
    std::size_t offset;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::size_t end = nl == std::string_view::npos ? text.size() : nl;
        lines.push_back({std::string(text.substr(pos, end - pos)), pos});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return lines;
}

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> words;
    std::istringstream in(line);
    std::string w;
    while (in >> w) words.push_back(w);
    return words;
}

} // namespace

DifferentialForm parse_form(const Chart& chart, std::string_view text) {
    return FormParser(chart, text, 0).parse();
}

ScalarExpr parse_scalar(const Chart& chart, std::string_view text) {
    DifferentialForm f = parse_form(chart, text);
    if (!f.is_zero() && f.degree() != std::optional<int>(0))
        throw ParseError(0, "expected a scalar expression, got a form of positive degree");
    return f.coefficient({});
}

Chart parse_chart(std::string_view text) {
    std::vector<CoordinateSymbol> coords;
    std::vector<std::string> params;
    for (const auto& line : split_lines(text)) {
        if (blank_or_comment(line.text)) continue;
        auto words = split_words(line.text);
        if (words[0] == "coord") {
            if (words.size() < 2 || words.size() > 3)
                throw ParseError(line.offset, "expected: coord <name> [angular|collar]");
            CoordKind kind = CoordKind::cartesian;
            if (words.size() == 3) {
                if (words[2] == "angular")
                    kind = CoordKind::angular;
                else if (words[2] == "collar")
                    kind = CoordKind::collar;
                else
                    throw ParseError(line.offset, "unknown coordinate kind '" + words[2] + "'");
            }
            coords.push_back({words[1], kind});
        } else if (words[0] == "param") {
            if (words.size() != 2)
                throw ParseError(line.offset, "expected: param <name>");
            params.push_back(words[1]);
        } else {
            throw ParseError(line.offset, "unknown declaration '" + words[0] + "'");
        }
    }
    if (coords.empty())
        throw ParseError(0, "chart declares no coordinates");
    return Chart(std::move(coords), std::move(params));
}

StructurePair parse_structure(const Chart& chart, std::string_view text) {
    std::optional<DifferentialForm> omega;
    std::optional<DifferentialForm> theta;
    for (const auto& line : split_lines(text)) {
        if (blank_or_comment(line.text)) continue;
        std::size_t eq = line.text.find('=');
        if (eq == std::string::npos)
            throw ParseError(line.offset, "expected '<name> = <form>'");
        auto words = split_words(line.text.substr(0, eq));
        if (words.size() != 1)
            throw ParseError(line.offset, "expected a single name before '='");
        DifferentialForm f =
            FormParser(chart, std::string_view(line.text).substr(eq + 1), line.offset + eq + 1)
                .parse();
        if (words[0] == "omega")
            omega = f;
        else if (words[0] == "theta")
            theta = f;
        else
            throw ParseError(line.offset, "unknown field '" + words[0] + "'");
    }
    if (!omega || !theta)
        throw ParseError(0, "structure file needs both omega and theta");
    return {*omega, *theta};
}

std::string chart_to_string(const Chart& chart) {
    std::ostringstream out;
    for (const auto& c : chart.coords()) {
        out << "coord " << c.name;
        if (c.kind == CoordKind::angular) out << " angular";
        if (c.kind == CoordKind::collar) out << " collar";
        out << "\n";
    }
    for (const auto& p : chart.params()) out << "param " << p << "\n";
    return out.str();
}

std::string structure_to_string(const StructurePair& s) {
    return "omega = " + s.omega.to_string() + "\ntheta = " + s.theta.to_string() + "\n";
}

} // namespace lcskit
