#include "condw/belief_base.hpp"

#include <sstream>

#include "condw/errors.hpp"

namespace condw {

BeliefBase::BeliefBase(std::shared_ptr<const Signature> sig) : sig_(std::move(sig)) {}

BeliefBase::BeliefBase(std::shared_ptr<const Signature> sig, std::vector<Conditional> conditionals)
    : sig_(std::move(sig)) {
    for (auto& c : conditionals) add(std::move(c));
}

void BeliefBase::add(Conditional c) {
    if (c.signature() != *sig_) {
        throw SignatureError("conditional " + c.to_string() + " is not over the base's signature");
    }
    conditionals_.push_back(std::move(c));
}

BeliefBase BeliefBase::subset(std::span<const std::size_t> indices) const {
    BeliefBase out(sig_);
    for (auto i : indices) out.conditionals_.push_back(conditionals_.at(i));
    return out;
}

std::vector<ConditionalModels> BeliefBase::models() const {
    std::vector<ConditionalModels> out;
    out.reserve(conditionals_.size());
    for (const auto& c : conditionals_) out.push_back(c.models());
    return out;
}

std::vector<std::size_t> BeliefBase::unsatisfiable_antecedents() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < conditionals_.size(); ++i) {
        if (!conditionals_[i].antecedent().is_satisfiable()) out.push_back(i);
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

BeliefBase parse_belief_base(std::string_view text) {
    std::shared_ptr<const Signature> sig;
    std::vector<Conditional> conditionals;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        // Strip the comment but keep column positions.
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        if (trim(raw).empty()) {
            if (end == text.size()) break;
            continue;
        }

        if (!sig) {
            const auto lead = raw.find_first_not_of(" \t");
            constexpr std::string_view kKey = "signature:";
            if (raw.substr(lead, kKey.size()) != kKey) {
                throw ParseError("expected 'signature: ...' as the first line", line_no, lead + 1);
            }
            std::vector<std::string> atoms;
            std::size_t pos = lead + kKey.size();
            while (pos <= raw.size()) {
                auto comma = raw.find(',', pos);
                if (comma == std::string_view::npos) comma = raw.size();
                std::string_view name = trim(raw.substr(pos, comma - pos));
                if (name.empty()) {
                    if (comma != raw.size() || !atoms.empty()) {
                        throw ParseError("empty atom name in signature", line_no, pos + 1);
                    }
                } else if (!is_valid_atom_name(name)) {
                    throw ParseError("invalid atom name '" + std::string(name) + "'", line_no,
                                     raw.find(name, pos) + 1);
                } else {
                    atoms.emplace_back(name);
                }
                pos = comma + 1;
            }
            try {
                sig = std::make_shared<const Signature>(std::move(atoms));
            } catch (const SignatureError& e) {
                throw ParseError(e.what(), line_no, lead + 1);
            }
        } else {
            conditionals.push_back(parse_conditional(raw, sig, line_no));
        }
        if (end == text.size()) break;
    }
    if (!sig) throw ParseError("missing 'signature:' line", line_no == 0 ? 1 : line_no, 1);
    return BeliefBase(sig, std::move(conditionals));
}

std::string format_belief_base(const BeliefBase& base) {
    std::ostringstream out;
    out << "signature:";
    const auto& atoms = base.signature().atoms();
    for (std::size_t i = 0; i < atoms.size(); ++i) out << (i ? ", " : " ") << atoms[i];
    out << '\n';
    for (const auto& c : base.conditionals()) out << c.to_string() << '\n';
    return out.str();
}

}  // namespace condw
