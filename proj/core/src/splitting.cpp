#include "condw/splitting.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "condw/errors.hpp"

namespace condw {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

// Part containing all of `atoms`, or nullopt if they straddle parts.
std::optional<std::size_t> part_of(const std::vector<std::size_t>& atoms,
                                   const std::vector<std::size_t>& atom_part) {
    if (atoms.empty()) return std::nullopt;
    const std::size_t p = atom_part[atoms.front()];
    for (auto a : atoms) {
        if (atom_part[a] != p) return std::nullopt;
    }
    return p;
}

}  // namespace

SyntaxSplitting detect_splitting(const BeliefBase& base) {
    const std::size_t n = base.signature().size();
    UnionFind uf(n);
    std::vector<std::vector<std::size_t>> cond_atoms;
    for (const auto& c : base.conditionals()) {
        auto atoms = c.atoms();
        for (std::size_t i = 1; i < atoms.size(); ++i) uf.unite(atoms[0], atoms[i]);
        cond_atoms.push_back(std::move(atoms));
    }

    SyntaxSplitting out;
    std::vector<std::size_t> atom_part(n);
    std::vector<std::size_t> root_part(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t r = uf.find(a);
        if (root_part[r] == n) {
            root_part[r] = out.parts.size();
            out.parts.emplace_back();
        }
        atom_part[a] = root_part[r];
        out.parts[atom_part[a]].push_back(a);
    }
    if (out.parts.empty() && !base.empty()) out.parts.emplace_back();
    out.conditional_parts.resize(out.parts.size());
    for (std::size_t i = 0; i < cond_atoms.size(); ++i) {
        // Atom-free conditionals belong to any part; they go to the first.
        const std::size_t p = cond_atoms[i].empty() ? 0 : atom_part[cond_atoms[i].front()];
        out.conditional_parts[p].push_back(i);
    }
    return out;
}

bool is_syntax_splitting(const BeliefBase& base, const SyntaxSplitting& splitting) {
    const std::size_t n = base.signature().size();
    if (splitting.parts.size() != splitting.conditional_parts.size()) return false;
    std::vector<std::size_t> atom_part(n, splitting.parts.size());
    for (std::size_t p = 0; p < splitting.parts.size(); ++p) {
        if (splitting.parts[p].empty() && n > 0) return false;
        for (auto a : splitting.parts[p]) {
            if (a >= n || atom_part[a] != splitting.parts.size()) return false;
            atom_part[a] = p;
        }
    }
    if (std::count(atom_part.begin(), atom_part.end(), splitting.parts.size()) != 0) return false;

    std::vector<bool> seen(base.size(), false);
    for (std::size_t p = 0; p < splitting.conditional_parts.size(); ++p) {
        for (auto i : splitting.conditional_parts[p]) {
            if (i >= base.size() || seen[i]) return false;
            seen[i] = true;
            for (auto a : base[i].atoms()) {
                if (atom_part[a] != p) return false;
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_syntax_splitting(const BeliefBase& base, const TwoPartSplitting& splitting) {
    SyntaxSplitting s;
    for (std::size_t side = 0; side < 2; ++side) {
        if (splitting.atoms[side].empty() && splitting.conditionals[side].empty()) continue;
        s.parts.push_back(splitting.atoms[side]);
        s.conditional_parts.push_back(splitting.conditionals[side]);
    }
    return is_syntax_splitting(base, s);
}

SyntaxSplitting make_splitting(const BeliefBase& base,
                               const std::vector<std::vector<std::string>>& parts) {
    const auto& sig = base.signature();
    SyntaxSplitting out;
    std::vector<std::size_t> atom_part(sig.size(), parts.size());
    for (std::size_t p = 0; p < parts.size(); ++p) {
        auto& indices = out.parts.emplace_back();
        for (const auto& name : parts[p]) {
            auto idx = sig.index_of(name);
            if (!idx) throw Error("unknown atom '" + name + "' in splitting");
            if (atom_part[*idx] != parts.size()) throw Error("atom '" + name + "' is in two parts");
            atom_part[*idx] = p;
            indices.push_back(*idx);
        }
        std::sort(indices.begin(), indices.end());
    }
    for (std::size_t a = 0; a < sig.size(); ++a) {
        if (atom_part[a] == parts.size()) throw Error("atom '" + sig.atom(a) + "' is in no part");
    }
    out.conditional_parts.resize(parts.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        const auto atoms = base[i].atoms();
        if (atoms.empty()) {
            if (out.conditional_parts.empty()) throw Error("splitting has no parts");
            out.conditional_parts[0].push_back(i);
            continue;
        }
        auto p = part_of(atoms, atom_part);
        if (!p) throw Error("conditional " + base[i].to_string() + " spans several parts");
        out.conditional_parts[*p].push_back(i);
    }
    return out;
}

std::vector<TwoPartSplitting> bipartitions(const SyntaxSplitting& splitting) {
    std::vector<TwoPartSplitting> out;
    const std::size_t n = splitting.parts.size();
    if (n < 2) {
        TwoPartSplitting t;
        if (n == 1) {
            t.atoms[0] = splitting.parts[0];
            t.conditionals[0] = splitting.conditional_parts[0];
        }
        out.push_back(std::move(t));
        return out;
    }
    const std::size_t views = n == 2 ? 1 : n;
    for (std::size_t p = 0; p < views; ++p) {
        TwoPartSplitting t;
        t.atoms[0] = splitting.parts[p];
        t.conditionals[0] = splitting.conditional_parts[p];
        for (std::size_t q = 0; q < n; ++q) {
            if (q == p) continue;
            t.atoms[1].insert(t.atoms[1].end(), splitting.parts[q].begin(), splitting.parts[q].end());
            t.conditionals[1].insert(t.conditionals[1].end(), splitting.conditional_parts[q].begin(),
                                     splitting.conditional_parts[q].end());
        }
        std::sort(t.atoms[1].begin(), t.atoms[1].end());
        std::sort(t.conditionals[1].begin(), t.conditionals[1].end());
        out.push_back(std::move(t));
    }
    return out;
}

std::string format_splitting(const BeliefBase& base, const SyntaxSplitting& splitting) {
    std::ostringstream out;
    for (std::size_t p = 0; p < splitting.parts.size(); ++p) {
        out << '{';
        for (std::size_t i = 0; i < splitting.parts[p].size(); ++i) {
            out << (i ? ", " : "") << base.signature().atom(splitting.parts[p][i]);
        }
        out << "}:";
        const auto& conds = splitting.conditional_parts[p];
        for (std::size_t i = 0; i < conds.size(); ++i) {
            out << (i ? ", " : " ") << base[conds[i]].to_string();
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace condw
