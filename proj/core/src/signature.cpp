#include "condw/signature.hpp"

#include <algorithm>
#include <unordered_set>

#include "condw/errors.hpp"

namespace condw {

bool is_valid_atom_name(std::string_view name) {
    if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
    for (char c : name) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
        if (!ok) return false;
    }
    return name != "top" && name != "bot";
}

Signature::Signature(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.size() > kMaxAtoms) {
        throw SignatureError("signature has " + std::to_string(atoms_.size()) +
                             " atoms; the limit is " + std::to_string(kMaxAtoms));
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& a : atoms_) {
        if (!is_valid_atom_name(a)) throw SignatureError("invalid atom name '" + a + "'");
        if (!seen.insert(a).second) throw SignatureError("duplicate atom '" + a + "'");
    }
}

std::optional<std::size_t> Signature::index_of(std::string_view name) const {
    auto it = std::find(atoms_.begin(), atoms_.end(), name);
    if (it == atoms_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - atoms_.begin());
}

bool Signature::is_subset_of(const Signature& other) const {
    return std::all_of(atoms_.begin(), atoms_.end(),
                       [&](const std::string& a) { return other.contains(a); });
}

bool Signature::is_disjoint_from(const Signature& other) const {
    return std::none_of(atoms_.begin(), atoms_.end(),
                        [&](const std::string& a) { return other.contains(a); });
}

Signature Signature::restrict_to(const std::vector<std::size_t>& indices) const {
    std::vector<std::size_t> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::string> names;
    names.reserve(sorted.size());
    for (auto i : sorted) names.push_back(atoms_.at(i));
    return Signature(std::move(names));
}

}  // namespace condw
