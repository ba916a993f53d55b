#include <cctype>

#include "condw/errors.hpp"
#include "condw/formula.hpp"

namespace condw {

namespace {

class FormulaParser {
public:
    FormulaParser(std::string_view text, std::shared_ptr<const Signature> sig, std::size_t line)
        : text_(text), sig_(std::move(sig)), line_(line) {}

    Formula parse() {
        Formula f = disjunction();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return f;
    }

private:
    Formula disjunction() {
        std::vector<Formula> parts{conjunction()};
        while (accept(';')) parts.push_back(conjunction());
        return Formula::disjunction(std::move(parts));
    }

    Formula conjunction() {
        std::vector<Formula> parts{literal()};
        while (accept(',') || accept('&')) parts.push_back(literal());
        return Formula::conjunction(std::move(parts));
    }

    Formula literal() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of formula");
        const char c = text_[pos_];
        if (c == '!') {
            ++pos_;
            return Formula::negation(literal());
        }
        if (c == '(') {
            ++pos_;
            Formula inner = disjunction();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c >= 'a' && c <= 'z') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::islower(static_cast<unsigned char>(text_[pos_])) ||
                    std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string name(text_.substr(start, pos_ - start));
            if (name == "top") return Formula::top(sig_);
            if (name == "bot") return Formula::bot(sig_);
            auto idx = sig_->index_of(name);
            if (!idx) throw UnknownAtomError(name, line_, start + 1);
            return Formula::atom(sig_, *idx);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, pos_ + 1);
    }

    std::string_view text_;
    std::shared_ptr<const Signature> sig_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, std::shared_ptr<const Signature> sig,
                      std::size_t line) {
    return FormulaParser(text, std::move(sig), line).parse();
}

World parse_world(std::string_view text, const Signature& sig) {
    World w;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < sig.size(); ++i) {
        const bool negated = pos < text.size() && text[pos] == '!';
        if (negated) ++pos;
        const std::string& name = sig.atom(i);
        if (text.substr(pos, name.size()) != name) {
            throw ParseError("expected atom '" + name + "' in world", 1, pos + 1);
        }
        pos += name.size();
        w = w.with(i, !negated);
    }
    if (pos != text.size()) throw ParseError("trailing characters in world", 1, pos + 1);
    return w;
}

}  // namespace condw
