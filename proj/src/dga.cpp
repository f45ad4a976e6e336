#include "lcskit/dga.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "lcskit/error.hpp"

namespace lcskit {

AlgebraElement AlgebraElement::constant(std::vector<int> degrees, const Rational& c) {
    AlgebraElement x(std::move(degrees));
    if (c != 0) x.terms_.emplace(GenExponents(x.degrees_.size(), 0), c);
    return x;
}

AlgebraElement AlgebraElement::generator(std::vector<int> degrees, std::size_t index) {
    AlgebraElement x(std::move(degrees));
    GenExponents e(x.degrees_.size(), 0);
    e.at(index) = 1;
    x.terms_.emplace(std::move(e), Rational(1));
    return x;
}

void AlgebraElement::add_term(const GenExponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r(degrees_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    if (r.degrees_.empty()) r.degrees_ = o.degrees_;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    return *this + (-o);
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    AlgebraElement r(degrees_.empty() ? o.degrees_ : degrees_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            // Koszul sign: each odd generator of the right factor moves
            // past the odd generators of the left factor with larger index.
            bool zero = false;
            long inversions = 0;
            long odd_tail = 0; // odd-degree exponents of ea with index > current
            GenExponents e(r.degrees_.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (r.degrees_[i] % 2 != 0 && ea[i] + eb[i] > 1) {
                    zero = true;
                    break;
                }
                e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            }
            if (zero) continue;
            for (std::size_t i = e.size(); i-- > 0;) {
                if (r.degrees_[i] % 2 != 0 && eb[i] == 1) inversions += odd_tail;
                if (r.degrees_[i] % 2 != 0 && ea[i] == 1) ++odd_tail;
            }
            Rational c = ca * cb;
            if (inversions % 2 != 0) c = -c;
            r.add_term(e, c);
        }
    }
    return r;
}

AlgebraElement AlgebraElement::operator*(const Rational& c) const {
    AlgebraElement r(degrees_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

AlgebraElement AlgebraElement::pow(std::uint32_t k) const {
    AlgebraElement r = constant(degrees_, Rational(1));
    for (std::uint32_t i = 0; i < k; ++i) r = r * *this;
    return r;
}

int AlgebraElement::monomial_degree(const GenExponents& e) const {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += degrees_[i] * e[i];
    return d;
}

bool AlgebraElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = monomial_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (monomial_degree(e) != d) return false;
    return true;
}

int AlgebraElement::degree() const {
    if (terms_.empty()) return -1;
    if (!is_homogeneous())
        throw Error(ErrorKind::InvalidPresentation, "inhomogeneous algebra element");
    return monomial_degree(terms_.begin()->first);
}

std::string AlgebraElement::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += names[i];
            if (e[i] > 1) factors += "^" + std::to_string(e[i]);
        }
        if (factors.empty()) {
            out << rat_to_string(mag);
        } else if (mag == 1) {
            out << factors;
        } else {
            out << rat_to_string(mag) << "*" << factors;
        }
    }
    return out.str();
}

PresentedCDGA::PresentedCDGA(std::vector<GeneratorDecl> generators,
                             std::vector<AlgebraElement> differentials)
    : gens_(std::move(generators)), diff_(std::move(differentials)) {
    if (diff_.size() != gens_.size())
        throw Error(ErrorKind::InvalidPresentation,
                    "need one differential per generator");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].degree < 1)
            throw Error(ErrorKind::InvalidPresentation,
                        "generator '" + gens_[i].name + "' must have degree >= 1");
        const AlgebraElement& d = diff_[i];
        for (const auto& [e, c] : d.terms()) {
            if (d.monomial_degree(e) != gens_[i].degree + 1)
                throw Error(ErrorKind::InvalidPresentation,
                            "d(" + gens_[i].name + ") is not homogeneous of degree " +
                                std::to_string(gens_[i].degree + 1));
        }
    }
}

std::vector<int> PresentedCDGA::generator_degrees() const {
    std::vector<int> d;
    d.reserve(gens_.size());
    for (const auto& g : gens_) d.push_back(g.degree);
    return d;
}

std::vector<GenExponents> PresentedCDGA::enumerate_basis(int k) const {
    std::vector<GenExponents> out;
    GenExponents cur(gens_.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if (i >= gens_.size()) return;
        int deg = gens_[i].degree;
        int cap = left / deg;
        if (deg % 2 != 0) cap = std::min(cap, 1);
        for (int e = 0; e <= cap; ++e) {
            cur[i] = static_cast<std::uint16_t>(e);
            self(self, i + 1, left - e * deg);
        }
        cur[i] = 0;
    };
    rec(rec, 0, k);
    std::sort(out.begin(), out.end());
    return out;
}

AlgebraElement PresentedCDGA::monomial_element(const GenExponents& e) const {
    AlgebraElement m(generator_degrees());
    m.add_term(e, Rational(1));
    return m;
}

AlgebraElement PresentedCDGA::d(const AlgebraElement& x) const {
    auto degrees = generator_degrees();
    AlgebraElement out(degrees);
    for (const auto& [e, c] : x.terms()) {
        // Graded Leibniz over the factors of the monomial, in canonical
        // order: d(uvw...) = du vw... +- u dv w... +- ...
        int prefix_degree = 0;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            for (std::uint16_t copy = 0; copy < e[i]; ++copy) {
                GenExponents prefix(gens_.size(), 0);
                for (std::size_t j = 0; j < i; ++j) prefix[j] = e[j];
                prefix[i] = copy;
                GenExponents suffix(gens_.size(), 0);
                suffix[i] = static_cast<std::uint16_t>(e[i] - copy - 1);
                for (std::size_t j = i + 1; j < gens_.size(); ++j) suffix[j] = e[j];

                AlgebraElement term(degrees);
                term.add_term(prefix, c);
                term = term * diff_[i];
                AlgebraElement tail(degrees);
                tail.add_term(suffix, Rational(1));
                term = term * tail;
                int sign_degree = prefix_degree + copy * gens_[i].degree;
                if (sign_degree % 2 != 0) term = -term;
                out = out + term;
            }
            prefix_degree += gens_[i].degree * e[i];
        }
    }
    return out;
}

void PresentedCDGA::check_d_squared() const {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        AlgebraElement dd = d(diff_[i]);
        if (!dd.is_zero()) {
            std::vector<std::string> names;
            for (const auto& g : gens_) names.push_back(g.name);
            throw Error(ErrorKind::InvalidPresentation,
                        "d^2(" + gens_[i].name + ") = " + dd.to_string(names) + " != 0");
        }
    }
}

namespace {

// Rank over Q by Gaussian elimination.
int matrix_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty() || m[0].empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t r2 = 0; r2 < rows; ++r2) {
            if (r2 == row || m[r2][col] == 0) continue;
            Rational f = m[r2][col];
            for (std::size_t j = col; j < cols; ++j) m[r2][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

BettiTable ranks_of_operator(const PresentedCDGA& a, int max_degree,
                             const std::function<AlgebraElement(const AlgebraElement&)>& op) {
    BettiTable table;
    table.max_degree = max_degree;

    std::vector<std::vector<GenExponents>> basis(static_cast<std::size_t>(max_degree) + 2);
    for (int k = 0; k <= max_degree + 1; ++k)
        basis[static_cast<std::size_t>(k)] = a.enumerate_basis(k);

    std::vector<int> op_rank(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int k = 0; k <= max_degree; ++k) {
        const auto& from = basis[static_cast<std::size_t>(k)];
        const auto& to = basis[static_cast<std::size_t>(k) + 1];
        std::map<GenExponents, std::size_t> index;
        for (std::size_t i = 0; i < to.size(); ++i) index[to[i]] = i;
        std::vector<std::vector<Rational>> m(
            from.size(), std::vector<Rational>(std::max<std::size_t>(to.size(), 1), Rational(0)));
        for (std::size_t i = 0; i < from.size(); ++i) {
            AlgebraElement img = op(a.monomial_element(from[i]));
            for (const auto& [e, c] : img.terms()) {
                auto it = index.find(e);
                if (it == index.end())
                    throw Error(ErrorKind::InvalidPresentation,
                                "differential leaves the expected degree");
                m[i][it->second] = c;
            }
        }
        op_rank[static_cast<std::size_t>(k)] = from.empty() ? 0 : matrix_rank(std::move(m));
    }

    for (int k = 0; k <= max_degree; ++k) {
        int dim = static_cast<int>(basis[static_cast<std::size_t>(k)].size());
        int rank_out = op_rank[static_cast<std::size_t>(k)];
        int rank_in = k == 0 ? 0 : op_rank[static_cast<std::size_t>(k) - 1];
        table.dims.push_back(dim);
        table.ranks.push_back(dim - rank_out - rank_in);
    }
    return table;
}

} // namespace

BettiTable betti(const PresentedCDGA& a, int max_degree) {
    a.check_d_squared();
    return ranks_of_operator(a, max_degree,
                             [&](const AlgebraElement& x) { return a.d(x); });
}

BettiTable betti_twisted(const PresentedCDGA& a, std::size_t lee, int weight,
                         int max_degree) {
    if (lee >= a.generators().size() || a.generators()[lee].degree != 1)
        throw Error(ErrorKind::InvalidLeeForm, "lee generator must have degree 1");
    if (!a.differential_of(lee).is_zero())
        throw Error(ErrorKind::InvalidLeeForm, "lee generator must be closed");
    a.check_d_squared();
    AlgebraElement lee_elem = AlgebraElement::generator(a.generator_degrees(), lee);
    Rational w(weight);
    return ranks_of_operator(a, max_degree, [&](const AlgebraElement& x) {
        return a.d(x) - (lee_elem * x) * w;
    });
}

std::string BettiTable::to_text() const {
    std::ostringstream out;
    out << "degree:";
    for (int k = 0; k <= max_degree; ++k) out << " " << k;
    out << "\ndim:   ";
    for (int v : dims) out << " " << v;
    out << "\nbetti: ";
    for (int v : ranks) out << " " << v;
    out << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Presentation files
//
//   gen <name> : <degree>
//   d <name> = <polynomial in generators and params>
//   param <name> = <rational>

namespace {

struct PresLine {
    std::string text;
    std::size_t offset;
};

class GenPolyParser {
public:
    GenPolyParser(const std::vector<GeneratorDecl>& gens,
                  const std::map<std::string, Rational>& params,
                  std::string_view text, std::size_t base)
        : gens_(gens), params_(params), text_(text), base_(base) {}

    AlgebraElement parse() {
        AlgebraElement r = expr();
        skip_ws();
        if (pos_ < text_.size())
            throw ParseError(base_ + pos_, "trailing input after expression");
        return r;
    }

private:
    std::vector<int> degrees() const {
        std::vector<int> d;
        for (const auto& g : gens_) d.push_back(g.degree);
        return d;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    AlgebraElement expr() {
        bool neg = eat('-');
        AlgebraElement acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+')) {
                acc = acc + term();
            } else if (eat('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    AlgebraElement term() {
        AlgebraElement acc = power();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                acc = acc * power();
            } else if (pos_ < text_.size() && text_[pos_] == '/') {
                std::size_t at = pos_;
                ++pos_;
                AlgebraElement div = power();
                if (div.terms().size() != 1 ||
                    div.terms().begin()->first != GenExponents(gens_.size(), 0))
                    throw ParseError(base_ + at, "division needs a rational divisor");
                acc = acc * (Rational(1) / div.terms().begin()->second);
            } else {
                return acc;
            }
        }
    }

    AlgebraElement power() {
        AlgebraElement base = primary();
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] == '^') {
            std::size_t at = pos_;
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_) throw ParseError(base_ + at, "expected an integer exponent");
            base = base.pow(static_cast<std::uint32_t>(
                std::stoul(std::string(text_.substr(start, pos_ - start)))));
            skip_ws();
        }
        return base;
    }

    AlgebraElement primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError(base_ + pos_, "expected a value");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            AlgebraElement r = expr();
            if (!eat(')')) throw ParseError(base_ + pos_, "expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return AlgebraElement::constant(
                degrees(), Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            for (std::size_t i = 0; i < gens_.size(); ++i)
                if (gens_[i].name == name)
                    return AlgebraElement::generator(degrees(), i);
            auto it = params_.find(name);
            if (it != params_.end()) return AlgebraElement::constant(degrees(), it->second);
            throw ParseError(base_ + start, "unknown generator '" + name + "'");
        }
        throw ParseError(base_ + pos_, std::string("unexpected character '") + c + "'");
    }

    const std::vector<GeneratorDecl>& gens_;
    const std::map<std::string, Rational>& params_;
    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

Rational parse_rational_literal(const std::string& word, std::size_t offset) {
    std::size_t slash = word.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(word));
        Integer num(word.substr(0, slash));
        Integer den(word.substr(slash + 1));
        if (den == 0) throw ParseError(offset, "zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw ParseError(offset, "bad rational literal '" + word + "'");
    }
}

} // namespace

PresentedCDGA PresentedCDGA::parse(std::string_view text) {
    std::vector<PresLine> lines;
    {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t nl = text.find('\n', pos);
            std::size_t end = nl == std::string_view::npos ? text.size() : nl;
            lines.push_back({std::string(text.substr(pos, end - pos)), pos});
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
    }
    auto blank = [](const std::string& s) {
        for (char c : s) {
            if (c == '#') return true;
            if (!std::isspace(static_cast<unsigned char>(c))) return false;
        }
        return true;
    };

    std::vector<GeneratorDecl> gens;
    std::map<std::string, Rational> params;
    std::vector<std::pair<std::string, std::pair<std::string, std::size_t>>> d_lines;

    for (const auto& line : lines) {
        if (blank(line.text)) continue;
        std::istringstream in(line.text);
        std::string head;
        in >> head;
        if (head == "gen") {
            std::string name, colon;
            int degree = 0;
            if (!(in >> name >> colon >> degree) || colon != ":")
                throw ParseError(line.offset, "expected: gen <name> : <degree>");
            gens.push_back({name, degree});
        } else if (head == "param") {
            std::string name, eq, value;
            if (!(in >> name >> eq >> value) || eq != "=")
                throw ParseError(line.offset, "expected: param <name> = <rational>");
            params[name] = parse_rational_literal(value, line.offset);
        } else if (head == "d") {
            std::string name;
            if (!(in >> name))
                throw ParseError(line.offset, "expected: d <name> = <polynomial>");
            std::size_t eq = line.text.find('=');
            if (eq == std::string::npos)
                throw ParseError(line.offset, "expected '=' in differential line");
            d_lines.push_back({name, {line.text.substr(eq + 1), line.offset + eq + 1}});
        } else {
            throw ParseError(line.offset, "unknown declaration '" + head + "'");
        }
    }

    std::vector<AlgebraElement> diffs;
    std::vector<int> degrees;
    for (const auto& g : gens) degrees.push_back(g.degree);
    for (std::size_t i = 0; i < gens.size(); ++i)
        diffs.push_back(AlgebraElement(degrees));

    for (const auto& [name, rhs] : d_lines) {
        std::size_t idx = gens.size();
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == name) idx = i;
        if (idx == gens.size())
            throw ParseError(rhs.second, "differential for unknown generator '" + name + "'");
        diffs[idx] = GenPolyParser(gens, params, rhs.first, rhs.second).parse();
    }
    return PresentedCDGA(std::move(gens), std::move(diffs));
}

} // namespace lcskit
