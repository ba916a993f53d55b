#include "condw/formula.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "condw/errors.hpp"

namespace condw {

Formula::Formula(std::shared_ptr<const Signature> sig, std::shared_ptr<const Node> node)
    : sig_(std::move(sig)), node_(std::move(node)), cache_(std::make_shared<Cache>()) {}

Formula Formula::top(std::shared_ptr<const Signature> sig) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Top;
    return Formula(std::move(sig), std::move(n));
}

Formula Formula::bot(std::shared_ptr<const Signature> sig) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Bot;
    return Formula(std::move(sig), std::move(n));
}

Formula Formula::atom(std::shared_ptr<const Signature> sig, std::size_t index) {
    if (index >= sig->size()) throw SignatureError("atom index out of range");
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Atom;
    n->atom = index;
    return Formula(std::move(sig), std::move(n));
}

Formula Formula::atom(std::shared_ptr<const Signature> sig, const std::string& name) {
    auto idx = sig->index_of(name);
    if (!idx) throw UnknownAtomError(name, 1, 1);
    return atom(std::move(sig), *idx);
}

Formula Formula::negation(const Formula& f) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Not;
    n->children.push_back(f.node_);
    return Formula(f.sig_, std::move(n));
}

namespace {

void require_parts(const std::vector<Formula>& parts) {
    if (parts.empty()) throw Error("connective needs at least one operand");
    for (const auto& p : parts) {
        if (p.signature() != parts.front().signature()) {
            throw SignatureError("operands range over different signatures");
        }
    }
}

}  // namespace

Formula Formula::conjunction(std::vector<Formula> parts) {
    require_parts(parts);
    if (parts.size() == 1) return parts.front();
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::And;
    for (auto& p : parts) n->children.push_back(p.node_);
    return Formula(parts.front().sig_, std::move(n));
}

Formula Formula::disjunction(std::vector<Formula> parts) {
    require_parts(parts);
    if (parts.size() == 1) return parts.front();
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Or;
    for (auto& p : parts) n->children.push_back(p.node_);
    return Formula(parts.front().sig_, std::move(n));
}

std::vector<Formula> Formula::children() const {
    std::vector<Formula> out;
    for (const auto& c : node_->children) out.push_back(Formula(sig_, c));
    return out;
}

bool Formula::eval(const Node& n, World w) {
    switch (n.kind) {
        case FormulaKind::Top: return true;
        case FormulaKind::Bot: return false;
        case FormulaKind::Atom: return w.holds(n.atom);
        case FormulaKind::Not: return !eval(*n.children[0], w);
        case FormulaKind::And:
            return std::all_of(n.children.begin(), n.children.end(),
                               [&](const auto& c) { return eval(*c, w); });
        case FormulaKind::Or:
            return std::any_of(n.children.begin(), n.children.end(),
                               [&](const auto& c) { return eval(*c, w); });
    }
    return false;
}

ModelSet Formula::compute_models(const Node& n, std::size_t world_count) {
    switch (n.kind) {
        case FormulaKind::Top: return ModelSet::all(world_count);
        case FormulaKind::Bot: return ModelSet::none(world_count);
        case FormulaKind::Atom: return ModelSet::atom(world_count, n.atom);
        case FormulaKind::Not: return ~compute_models(*n.children[0], world_count);
        case FormulaKind::And: {
            ModelSet acc = ModelSet::all(world_count);
            for (const auto& c : n.children) acc &= compute_models(*c, world_count);
            return acc;
        }
        case FormulaKind::Or: {
            ModelSet acc = ModelSet::none(world_count);
            for (const auto& c : n.children) acc |= compute_models(*c, world_count);
            return acc;
        }
    }
    return ModelSet::none(world_count);
}

const ModelSet& Formula::models() const {
    std::call_once(cache_->once,
                   [this] { cache_->models = compute_models(*node_, sig_->world_count()); });
    return cache_->models;
}

std::vector<std::size_t> Formula::atoms() const {
    std::set<std::size_t> seen;
    std::vector<const Node*> stack{node_.get()};
    while (!stack.empty()) {
        const Node* n = stack.back();
        stack.pop_back();
        if (n->kind == FormulaKind::Atom) seen.insert(n->atom);
        for (const auto& c : n->children) stack.push_back(c.get());
    }
    return {seen.begin(), seen.end()};
}

namespace {

int precedence(FormulaKind k) {
    switch (k) {
        case FormulaKind::Or: return 1;
        case FormulaKind::And: return 2;
        default: return 3;
    }
}

}  // namespace

void Formula::print(const Node& n, const Signature& sig, std::string& out, int parent_prec) {
    const int prec = precedence(n.kind);
    const bool parens = prec < parent_prec;
    if (parens) out += '(';
    switch (n.kind) {
        case FormulaKind::Top: out += "top"; break;
        case FormulaKind::Bot: out += "bot"; break;
        case FormulaKind::Atom: out += sig.atom(n.atom); break;
        case FormulaKind::Not:
            out += '!';
            print(*n.children[0], sig, out, 3);
            break;
        case FormulaKind::And:
        case FormulaKind::Or: {
            const char sep = n.kind == FormulaKind::And ? ',' : ';';
            for (std::size_t i = 0; i < n.children.size(); ++i) {
                if (i) out += sep;
                // Nested same-kind operands print flat; the grammar is associative.
                print(*n.children[i], sig, out, prec + (n.children[i]->kind == n.kind ? 0 : 1));
            }
            break;
        }
    }
    if (parens) out += ')';
}

std::string Formula::to_string() const {
    std::string out;
    print(*node_, *sig_, out, 0);
    return out;
}

bool Formula::same(const Node& a, const Node& b) {
    if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
    if (a.kind == FormulaKind::Atom && a.atom != b.atom) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!same(*a.children[i], *b.children[i])) return false;
    }
    return true;
}

bool Formula::same_syntax(const Formula& other) const {
    return *sig_ == *other.sig_ && same(*node_, *other.node_);
}

// ---------------------------------------------------------------------------
// Minimised DNF for a model set.

namespace {

struct Implicant {
    std::uint32_t value = 0;  // literal polarities on the cared-for bits
    std::uint32_t care = 0;   // bits that appear as literals
    friend bool operator<(const Implicant& a, const Implicant& b) {
        return std::tie(a.care, a.value) < std::tie(b.care, b.value);
    }
    friend bool operator==(const Implicant&, const Implicant&) = default;
    bool covers(std::uint32_t minterm) const { return (minterm & care) == value; }
};

// Prime implicants by iterated merging, then a greedy cover.
std::vector<Implicant> minimise(const std::vector<std::uint32_t>& minterms, std::size_t vars) {
    const std::uint32_t full = vars == 32 ? ~0U : ((1U << vars) - 1);
    std::set<Implicant> current;
    for (auto m : minterms) current.insert({m, full});
    std::set<Implicant> primes;
    while (!current.empty()) {
        std::set<Implicant> next;
        std::set<Implicant> merged;
        for (auto a = current.begin(); a != current.end(); ++a) {
            for (auto b = std::next(a); b != current.end(); ++b) {
                if (a->care != b->care) continue;
                const std::uint32_t diff = a->value ^ b->value;
                if (diff && !(diff & (diff - 1))) {
                    next.insert({a->value & ~diff, a->care & ~diff});
                    merged.insert(*a);
                    merged.insert(*b);
                }
            }
        }
        for (const auto& i : current) {
            if (!merged.count(i)) primes.insert(i);
        }
        current = std::move(next);
    }

    std::vector<std::uint32_t> uncovered = minterms;
    std::vector<Implicant> chosen;
    while (!uncovered.empty()) {
        const Implicant* best = nullptr;
        std::size_t best_count = 0;
        for (const auto& p : primes) {
            auto c = static_cast<std::size_t>(std::count_if(
                uncovered.begin(), uncovered.end(), [&](auto m) { return p.covers(m); }));
            // Ties go to the implicant with fewer literals.
            if (c > best_count ||
                (c == best_count && best && c > 0 &&
                 __builtin_popcount(p.care) < __builtin_popcount(best->care))) {
                best = &p;
                best_count = c;
            }
        }
        chosen.push_back(*best);
        std::erase_if(uncovered, [&](auto m) { return best->covers(m); });
    }
    std::sort(chosen.begin(), chosen.end(), [](const Implicant& a, const Implicant& b) {
        // Fixed term order keeps the printed text deterministic.
        return std::tie(b.care, a.value) < std::tie(a.care, b.value);
    });
    return chosen;
}

}  // namespace

Formula Formula::from_models(std::shared_ptr<const Signature> sig, const ModelSet& models) {
    if (models.world_count() != sig->world_count()) {
        throw SignatureError("model set does not match the signature");
    }
    if (models.empty()) return bot(sig);
    if (models.is_universe()) return top(sig);

    // Atoms the set actually depends on.
    std::vector<std::size_t> support;
    for (std::size_t a = 0; a < sig->size(); ++a) {
        bool depends = false;
        models.for_each([&](World w) {
            if (!depends && !models.contains(World(w.bits() ^ (1U << a)))) depends = true;
        });
        if (depends) support.push_back(a);
    }

    std::set<std::uint32_t> local;
    models.for_each([&](World w) {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < support.size(); ++i) m |= (w.holds(support[i]) ? 1U : 0U) << i;
        local.insert(m);
    });
    std::vector<std::uint32_t> minterms(local.begin(), local.end());

    std::vector<Implicant> cover;
    if (support.size() <= 10) {
        cover = minimise(minterms, support.size());
    } else {
        const std::uint32_t full = (1U << support.size()) - 1;
        for (auto m : minterms) cover.push_back({m, full});
    }

    std::vector<Formula> terms;
    for (const auto& imp : cover) {
        std::vector<Formula> lits;
        for (std::size_t i = 0; i < support.size(); ++i) {
            if (!((imp.care >> i) & 1U)) continue;
            Formula a = atom(sig, support[i]);
            lits.push_back(((imp.value >> i) & 1U) ? a : negation(a));
        }
        terms.push_back(conjunction(std::move(lits)));
    }
    return disjunction(std::move(terms));
}

}  // namespace condw
