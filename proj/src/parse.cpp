#include "skewhopf/parse.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace skewhopf {

ParseError::ParseError(int line, int col, const std::string& message)
    : SkewError("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + message),
      line(line),
      col(col) {}

namespace {

enum class Tok {
    kw_algebra, kw_param, kw_gen, kw_sigma, kw_sigma_inv, kw_delta, kw_w, kw_ox,
    ident, number, string,
    lbrace, rbrace, lparen, rparen,
    plus, minus, star, caret, colon, semicolon, arrow, equals,
    end
};

struct Token {
    Tok kind;
    std::string text;  // ident/string payload, or the rational literal
    int line = 1, col = 1;
};

bool reserved_word(const std::string& s) {
    return s == "algebra" || s == "param" || s == "gen" || s == "sigma" || s == "sigma_inv" ||
           s == "delta" || s == "w" || s == "ox";
}

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;

    int cur_line_ = 1, cur_col_ = 1;

    char look(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    void bump() {
        if (look() == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        for (;;) {
            char c = look();
            if (c == '#') {
                while (look() != '\n' && look() != '\0') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                return;
            }
        }
    }

    [[noreturn]] void error(const std::string& msg) const { throw ParseError(line_, col_, msg); }

    void advance() {
        skip_space();
        cur_.line = line_;
        cur_.col = col_;
        cur_.text.clear();
        char c = look();
        if (c == '\0') {
            cur_.kind = Tok::end;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (std::isalnum(static_cast<unsigned char>(look())) || look() == '_') {
                word += look();
                bump();
            }
            cur_.text = word;
            if (word == "algebra") cur_.kind = Tok::kw_algebra;
            else if (word == "param") cur_.kind = Tok::kw_param;
            else if (word == "gen") cur_.kind = Tok::kw_gen;
            else if (word == "sigma") cur_.kind = Tok::kw_sigma;
            else if (word == "sigma_inv") cur_.kind = Tok::kw_sigma_inv;
            else if (word == "delta") cur_.kind = Tok::kw_delta;
            else if (word == "w") cur_.kind = Tok::kw_w;
            else if (word == "ox") cur_.kind = Tok::kw_ox;
            else cur_.kind = Tok::ident;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (std::isdigit(static_cast<unsigned char>(look()))) {
                num += look();
                bump();
            }
            // Tight p/q forms one rational literal.
            if (look() == '/' && std::isdigit(static_cast<unsigned char>(look(1)))) {
                num += '/';
                bump();
                while (std::isdigit(static_cast<unsigned char>(look()))) {
                    num += look();
                    bump();
                }
            }
            cur_.kind = Tok::number;
            cur_.text = num;
            return;
        }
        if (c == '"') {
            bump();
            std::string s;
            while (look() != '"') {
                if (look() == '\0' || look() == '\n') error("unterminated string literal");
                s += look();
                bump();
            }
            bump();
            cur_.kind = Tok::string;
            cur_.text = s;
            return;
        }
        if (c == '-' && look(1) == '>') {
            bump();
            bump();
            cur_.kind = Tok::arrow;
            return;
        }
        switch (c) {
            case '{': bump(); cur_.kind = Tok::lbrace; return;
            case '}': bump(); cur_.kind = Tok::rbrace; return;
            case '(': bump(); cur_.kind = Tok::lparen; return;
            case ')': bump(); cur_.kind = Tok::rparen; return;
            case '+': bump(); cur_.kind = Tok::plus; return;
            case '-': bump(); cur_.kind = Tok::minus; return;
            case '*': bump(); cur_.kind = Tok::star; return;
            case '^': bump(); cur_.kind = Tok::caret; return;
            case ':': bump(); cur_.kind = Tok::colon; return;
            case ';': bump(); cur_.kind = Tok::semicolon; return;
            case '=': bump(); cur_.kind = Tok::equals; return;
            default: error(std::string("unexpected character '") + c + "'");
        }
    }
};

// Parse-time expression tree; names are resolved during elaboration so that
// forward references carry their own positions.
struct PNode {
    enum class Kind { number, ident, add, sub, mul, neg, pow };
    Kind kind;
    Scalar value;
    std::string name;
    int line = 1, col = 1;
    std::shared_ptr<PNode> lhs, rhs;
    std::uint32_t exponent = 0;
};
using PNodePtr = std::shared_ptr<PNode>;

struct PTensorTerm {
    Scalar sign;
    PNodePtr left, right;
};

struct Clause {
    // key generator name -> expression, with the position of the key
    std::vector<std::tuple<std::string, int, int, PNodePtr>> entries;
    bool present = false;
};

struct GenDecl {
    std::string name;
    int line, col;
    bool has_block = false;
    Clause sigma, sigma_inv, delta;
    std::vector<PTensorTerm> tail;
    bool tail_present = false;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    // Standalone expression / tensor parsing for CLI input and witnesses.
    PNodePtr parse_single_expr() {
        PNodePtr e = parse_expr_sum();
        const Token& t = lex_.peek();
        if (t.kind != Tok::end)
            throw ParseError(t.line, t.col, "trailing input after the expression");
        return e;
    }

    std::vector<PTensorTerm> parse_single_tensor() {
        std::vector<PTensorTerm> terms;
        parse_tensor_terms(terms);
        const Token& t = lex_.peek();
        if (t.kind != Tok::end)
            throw ParseError(t.line, t.col, "trailing input after the tensor expression");
        return terms;
    }

    void run() {
        expect(Tok::kw_algebra, "expected 'algebra'");
        Token name = expect(Tok::string, "expected the algebra name as a string literal");
        algebra_name_ = name.text;
        for (;;) {
            const Token& t = lex_.peek();
            if (t.kind == Tok::end) break;
            if (t.kind == Tok::kw_param) parse_param();
            else if (t.kind == Tok::kw_gen) parse_gen();
            else throw ParseError(t.line, t.col, "expected 'param' or 'gen'");
        }
    }

    std::string algebra_name_;
    std::map<std::string, std::optional<Scalar>> params_;
    std::vector<GenDecl> gens_;

private:
    Lexer lex_;

    Token expect(Tok kind, const std::string& msg) {
        const Token& t = lex_.peek();
        if (t.kind != kind) throw ParseError(t.line, t.col, msg);
        return lex_.take();
    }

    void parse_param() {
        lex_.take();
        Token name = expect(Tok::ident, "expected a parameter name");
        if (reserved_word(name.text))
            throw ParseError(name.line, name.col, "'" + name.text + "' is a reserved word");
        if (params_.count(name.text))
            throw ParseError(name.line, name.col, "duplicate parameter '" + name.text + "'");
        if (lex_.peek().kind == Tok::equals) {
            lex_.take();
            bool neg = false;
            if (lex_.peek().kind == Tok::minus) {
                lex_.take();
                neg = true;
            }
            Token val = expect(Tok::number, "expected a rational value");
            auto q = parse_rational(val.text);
            if (!q) throw ParseError(val.line, val.col, "malformed rational '" + val.text + "'");
            params_[name.text] = neg ? Scalar(-*q) : *q;
        } else {
            params_[name.text] = std::nullopt;  // declared but unbound
        }
    }

    void parse_gen() {
        lex_.take();
        Token name = expect(Tok::ident, "expected a generator name");
        if (reserved_word(name.text))
            throw ParseError(name.line, name.col, "'" + name.text + "' is a reserved word");
        for (const auto& g : gens_)
            if (g.name == name.text)
                throw ParseError(name.line, name.col, "duplicate generator '" + name.text + "'");
        if (params_.count(name.text))
            throw ParseError(name.line, name.col,
                             "'" + name.text + "' already names a parameter");
        GenDecl decl;
        decl.name = name.text;
        decl.line = name.line;
        decl.col = name.col;
        if (lex_.peek().kind == Tok::lbrace) {
            decl.has_block = true;
            lex_.take();
            parse_block(decl);
        }
        gens_.push_back(std::move(decl));
    }

    void parse_block(GenDecl& decl) {
        for (;;) {
            const Token& t = lex_.peek();
            if (t.kind == Tok::rbrace) {
                lex_.take();
                return;
            }
            if (t.kind == Tok::kw_sigma || t.kind == Tok::kw_sigma_inv || t.kind == Tok::kw_delta) {
                Tok key = t.kind;
                lex_.take();
                expect(Tok::colon, "expected ':' after the clause keyword");
                Clause& clause = key == Tok::kw_sigma ? decl.sigma
                                 : key == Tok::kw_sigma_inv ? decl.sigma_inv
                                                            : decl.delta;
                if (clause.present) throw ParseError(t.line, t.col, "duplicate clause");
                clause.present = true;
                parse_entries(clause);
            } else if (t.kind == Tok::kw_w) {
                lex_.take();
                expect(Tok::colon, "expected ':' after 'w'");
                if (decl.tail_present) throw ParseError(t.line, t.col, "duplicate 'w' clause");
                decl.tail_present = true;
                parse_tensor_terms(decl.tail);
            } else {
                throw ParseError(t.line, t.col,
                                 "expected 'sigma', 'sigma_inv', 'delta', 'w' or '}'");
            }
        }
    }

    void parse_entries(Clause& clause) {
        for (;;) {
            Token key = expect(Tok::ident, "expected a generator name on the left of '->'");
            expect(Tok::arrow, "expected '->'");
            PNodePtr e = parse_expr_sum();
            clause.entries.emplace_back(key.text, key.line, key.col, e);
            if (lex_.peek().kind == Tok::semicolon) {
                lex_.take();
                if (lex_.peek().kind == Tok::ident) continue;  // next entry
            }
            return;
        }
    }

    void parse_tensor_terms(std::vector<PTensorTerm>& out) {
        Scalar sign(1);
        if (lex_.peek().kind == Tok::plus) lex_.take();
        else if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            sign = -1;
        }
        for (;;) {
            PNodePtr left = parse_expr_product();
            Token ox = lex_.take();
            if (ox.kind != Tok::kw_ox)
                throw ParseError(ox.line, ox.col, "expected 'ox' between the tensor slots");
            PNodePtr right = parse_expr_product();
            out.push_back({sign, left, right});
            if (lex_.peek().kind == Tok::plus) {
                lex_.take();
                sign = 1;
            } else if (lex_.peek().kind == Tok::minus) {
                lex_.take();
                sign = -1;
            } else {
                return;
            }
        }
    }

    PNodePtr parse_expr_sum() {
        bool neg = false;
        if (lex_.peek().kind == Tok::plus) lex_.take();
        else if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            neg = true;
        }
        PNodePtr acc = parse_expr_product();
        if (neg) {
            auto n = std::make_shared<PNode>();
            n->kind = PNode::Kind::neg;
            n->lhs = acc;
            n->line = acc->line;
            n->col = acc->col;
            acc = n;
        }
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k != Tok::plus && k != Tok::minus) return acc;
            lex_.take();
            PNodePtr rhs = parse_expr_product();
            auto n = std::make_shared<PNode>();
            n->kind = k == Tok::plus ? PNode::Kind::add : PNode::Kind::sub;
            n->lhs = acc;
            n->rhs = rhs;
            n->line = acc->line;
            n->col = acc->col;
            acc = n;
        }
    }

    PNodePtr parse_expr_product() {
        PNodePtr acc = parse_expr_factor();
        while (lex_.peek().kind == Tok::star) {
            lex_.take();
            PNodePtr rhs = parse_expr_factor();
            auto n = std::make_shared<PNode>();
            n->kind = PNode::Kind::mul;
            n->lhs = acc;
            n->rhs = rhs;
            n->line = acc->line;
            n->col = acc->col;
            acc = n;
        }
        return acc;
    }

    PNodePtr parse_expr_factor() {
        PNodePtr base = parse_expr_atom();
        if (lex_.peek().kind == Tok::caret) {
            lex_.take();
            Token e = expect(Tok::number, "expected a non-negative integer exponent");
            if (e.text.find('/') != std::string::npos)
                throw ParseError(e.line, e.col, "exponents must be integers");
            auto n = std::make_shared<PNode>();
            n->kind = PNode::Kind::pow;
            n->lhs = base;
            n->exponent = static_cast<std::uint32_t>(std::stoul(e.text));
            n->line = base->line;
            n->col = base->col;
            return n;
        }
        return base;
    }

    PNodePtr parse_expr_atom() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::minus) {
            Token m = lex_.take();
            PNodePtr inner = parse_expr_atom();
            auto n = std::make_shared<PNode>();
            n->kind = PNode::Kind::neg;
            n->lhs = inner;
            n->line = m.line;
            n->col = m.col;
            return n;
        }
        if (t.kind == Tok::number) {
            Token num = lex_.take();
            auto q = parse_rational(num.text);
            if (!q) throw ParseError(num.line, num.col, "malformed rational '" + num.text + "'");
            auto n = std::make_shared<PNode>();
            n->kind = PNode::Kind::number;
            n->value = *q;
            n->line = num.line;
            n->col = num.col;
            return n;
        }
        if (t.kind == Tok::ident) {
            Token id = lex_.take();
            auto n = std::make_shared<PNode>();
            n->kind = PNode::Kind::ident;
            n->name = id.text;
            n->line = id.line;
            n->col = id.col;
            return n;
        }
        if (t.kind == Tok::lparen) {
            lex_.take();
            PNodePtr inner = parse_expr_sum();
            expect(Tok::rparen, "expected ')'");
            return inner;
        }
        throw ParseError(t.line, t.col, "expected a rational, an identifier or '('");
    }
};

// Resolves names against the parameters and the generators visible at `bound`.
ExprPtr elaborate(const PNodePtr& node, const Parser& p,
                  const std::map<std::string, std::size_t>& gen_index, std::size_t bound) {
    switch (node->kind) {
        case PNode::Kind::number: return Expr::constant(node->value);
        case PNode::Kind::ident: {
            if (auto it = p.params_.find(node->name); it != p.params_.end()) {
                if (!it->second)
                    throw ParseError(node->line, node->col,
                                     "unbound parameter '" + node->name + "'");
                return Expr::constant(*it->second);
            }
            auto it = gen_index.find(node->name);
            if (it == gen_index.end())
                throw ParseError(node->line, node->col,
                                 "unknown identifier '" + node->name + "'");
            if (it->second >= bound)
                throw ParseError(node->line, node->col,
                                 "forward reference to generator '" + node->name + "'");
            return Expr::generator(it->second);
        }
        case PNode::Kind::add:
            return Expr::add(elaborate(node->lhs, p, gen_index, bound),
                             elaborate(node->rhs, p, gen_index, bound));
        case PNode::Kind::sub:
            return Expr::sub(elaborate(node->lhs, p, gen_index, bound),
                             elaborate(node->rhs, p, gen_index, bound));
        case PNode::Kind::mul:
            return Expr::mul(elaborate(node->lhs, p, gen_index, bound),
                             elaborate(node->rhs, p, gen_index, bound));
        case PNode::Kind::neg: return Expr::neg(elaborate(node->lhs, p, gen_index, bound));
        case PNode::Kind::pow:
            return Expr::pow(elaborate(node->lhs, p, gen_index, bound), node->exponent);
    }
    throw SkewError("corrupt parse node");
}

}  // namespace

HopfTower parse(const std::string& text, long long budget) {
    Parser parser(text);
    parser.run();

    std::size_t n = parser.gens_.size();
    std::map<std::string, std::size_t> gen_index;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        gen_index[parser.gens_[i].name] = i;
        names.push_back(parser.gens_[i].name);
    }

    // Elaborate step by step; images of step g use only the already-built
    // lower steps, so a progressively filled tower evaluates them safely.
    std::vector<OreStep> steps(n);
    for (std::size_t g = 1; g < n; ++g)
        for (std::size_t j = 0; j < g; ++j) {
            steps[g].sigma.push_back(NcPoly::generator(n, j));
            steps[g].sigma_inv.push_back(NcPoly::generator(n, j));
            steps[g].delta.push_back(NcPoly::zero(n));
        }
    std::vector<Tensor2> tails(n, Tensor2::zero(0));
    for (std::size_t g = 0; g < n; ++g) tails[g] = Tensor2::zero(n);

    Tower cur = Tower(names, steps, budget);
    for (std::size_t g = 0; g < n; ++g) {
        const GenDecl& decl = parser.gens_[g];
        if (!decl.has_block) continue;
        if (g == 0) {
            bool any = decl.sigma.present || decl.sigma_inv.present || decl.delta.present ||
                       decl.tail_present;
            if (any)
                throw ParseError(decl.line, decl.col,
                                 "the first generator admits no clauses");
            continue;
        }
        auto fill = [&](const Clause& clause, std::vector<NcPoly>& images, const char* what,
                        bool required) {
            std::vector<bool> seen(g, false);
            for (const auto& [key, line, col, node] : clause.entries) {
                auto it = gen_index.find(key);
                if (it == gen_index.end())
                    throw ParseError(line, col, "unknown identifier '" + key + "'");
                if (it->second >= g)
                    throw ParseError(line, col,
                                     "forward reference to generator '" + key + "'");
                if (seen[it->second])
                    throw ParseError(line, col, "duplicate image for '" + key + "'");
                seen[it->second] = true;
                ExprPtr e = elaborate(node, parser, gen_index, g);
                images[it->second] = normal_form(e, cur);
            }
            if (required)
                for (std::size_t j = 0; j < g; ++j)
                    if (!seen[j])
                        throw ParseError(decl.line, decl.col,
                                         std::string(what) + " image of '" + names[j] +
                                             "' missing in the block of '" + decl.name + "'");
        };
        OreStep step = cur.step(g);
        if (decl.sigma.present != decl.sigma_inv.present)
            throw ParseError(decl.line, decl.col,
                             "'sigma' and 'sigma_inv' must be given together");
        if (decl.sigma.present) {
            fill(decl.sigma, step.sigma, "sigma", true);
            fill(decl.sigma_inv, step.sigma_inv, "sigma_inv", true);
        }
        fill(decl.delta, step.delta, "delta", false);
        cur = cur.with_step(g, step);

        if (decl.tail_present) {
            Tensor2 w(n);
            for (const auto& term : decl.tail) {
                NcPoly left = normal_form(elaborate(term.left, parser, gen_index, g), cur);
                NcPoly right = normal_form(elaborate(term.right, parser, gen_index, g), cur);
                w = w + tensor_product(left, right).scaled(term.sign);
            }
            tails[g] = std::move(w);
        }
    }

    return HopfTower(cur, tails, parser.algebra_name_);
}

namespace {

std::string indent_entries(const std::string& clause,
                           const std::vector<NcPoly>& images,
                           const std::vector<std::string>& names, std::size_t g,
                           bool skip_zero) {
    std::ostringstream out;
    bool any = false;
    for (std::size_t j = 0; j < g; ++j) {
        if (skip_zero && images[j].is_zero()) continue;
        if (!any) out << "  " << clause << ":";
        out << (any ? ";" : "") << " " << names[j] << " -> " << to_string(images[j], names);
        any = true;
    }
    if (any) out << "\n";
    return out.str();
}

}  // namespace

std::string serialize(const HopfTower& ht) {
    const Tower& t = ht.tower();
    const auto& names = t.names();
    std::ostringstream out;
    out << "algebra \"" << ht.name() << "\"\n";
    for (std::size_t g = 0; g < t.arity(); ++g) {
        if (g == 0) {
            out << "gen " << names[g] << "\n";
            continue;
        }
        out << "gen " << names[g] << " {\n";
        out << indent_entries("sigma", t.step(g).sigma, names, g, false);
        out << indent_entries("sigma_inv", t.step(g).sigma_inv, names, g, false);
        out << indent_entries("delta", t.step(g).delta, names, g, true);
        if (!ht.tail(g).is_zero()) out << "  w: " << to_string(ht.tail(g), names) << "\n";
        out << "}\n";
    }
    return out.str();
}

ExprPtr parse_expr(const std::string& text, const Tower& t) {
    Parser parser(text);
    PNodePtr node = parser.parse_single_expr();
    std::map<std::string, std::size_t> gen_index;
    for (std::size_t i = 0; i < t.arity(); ++i) gen_index[t.name(i)] = i;
    return elaborate(node, parser, gen_index, t.arity());
}

Tensor2 parse_tensor(const std::string& text, const Tower& t) {
    Parser parser(text);
    auto terms = parser.parse_single_tensor();
    std::map<std::string, std::size_t> gen_index;
    for (std::size_t i = 0; i < t.arity(); ++i) gen_index[t.name(i)] = i;
    Tensor2 out(t.arity());
    for (const auto& term : terms) {
        NcPoly left = normal_form(elaborate(term.left, parser, gen_index, t.arity()), t);
        NcPoly right = normal_form(elaborate(term.right, parser, gen_index, t.arity()), t);
        out = out + tensor_product(left, right).scaled(term.sign);
    }
    return out;
}

}  // namespace skewhopf
