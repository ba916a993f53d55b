#include "condw/conditional.hpp"

#include <algorithm>
#include <cctype>

#include "condw/errors.hpp"

namespace condw {

Conditional::Conditional(Formula consequent, Formula antecedent)
    : consequent_(std::move(consequent)), antecedent_(std::move(antecedent)) {
    if (consequent_.signature() != antecedent_.signature()) {
        throw SignatureError("conditional formulas range over different signatures");
    }
}

Conditional Conditional::from_models(std::shared_ptr<const Signature> sig,
                                     const ModelSet& consequent, const ModelSet& antecedent) {
    return Conditional(Formula::from_models(sig, consequent), Formula::from_models(sig, antecedent));
}

Evaluation Conditional::evaluate(World w) const {
    if (!antecedent_.holds(w)) return Evaluation::NotApplicable;
    return consequent_.holds(w) ? Evaluation::Verified : Evaluation::Falsified;
}

ConditionalModels Conditional::models() const {
    const ModelSet& a = antecedent_.models();
    const ModelSet& b = consequent_.models();
    return {a & b, a - b};
}

std::vector<std::size_t> Conditional::atoms() const {
    auto x = antecedent_.atoms();
    auto y = consequent_.atoms();
    std::vector<std::size_t> out;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

std::string Conditional::to_string() const {
    return "(" + consequent_.to_string() + "|" + antecedent_.to_string() + ")";
}

Conditional parse_conditional(std::string_view text, std::shared_ptr<const Signature> sig,
                              std::size_t line) {
    auto first = text.find_first_not_of(" \t\r\n");
    auto last = text.find_last_not_of(" \t\r\n");
    if (first == std::string_view::npos || text[first] != '(') {
        throw ParseError("conditional must start with '('",
                         line, first == std::string_view::npos ? 1 : first + 1);
    }
    if (text[last] != ')') throw ParseError("conditional must end with ')'", line, last + 1);

    // The bar is the only '|' at parenthesis depth 1.
    std::size_t bar = std::string_view::npos;
    int depth = 0;
    for (std::size_t i = first; i <= last; ++i) {
        const char c = text[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (c == '|') {
            if (depth != 1 || bar != std::string_view::npos) {
                throw ParseError("misplaced '|'", line, i + 1);
            }
            bar = i;
        }
        if (depth == 0 && i != last) throw ParseError("unexpected text after ')'", line, i + 2);
    }
    if (depth != 0) throw ParseError("unbalanced parentheses", line, last + 1);
    if (bar == std::string_view::npos) throw ParseError("missing '|' in conditional", line, last + 1);

    // Re-anchor error columns in the original line by padding with spaces.
    auto sub = [&](std::size_t from, std::size_t to) {
        std::string padded(from, ' ');
        padded.append(text.substr(from, to - from));
        return padded;
    };
    Formula consequent = parse_formula(sub(first + 1, bar), sig, line);
    Formula antecedent = parse_formula(sub(bar + 1, last), sig, line);
    return Conditional(std::move(consequent), std::move(antecedent));
}

}  // namespace condw
