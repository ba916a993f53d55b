#include "condw/world.hpp"

#include "condw/errors.hpp"

namespace condw {

World merge_worlds(World w1, const Signature& s1, World w2, const Signature& s2,
                   const Signature& target) {
    if (!s1.is_disjoint_from(s2)) throw SignatureError("merge: sub-signatures overlap");
    if (s1.size() + s2.size() != target.size() || !s1.is_subset_of(target) ||
        !s2.is_subset_of(target)) {
        throw SignatureError("merge: target is not the union of the sub-signatures");
    }
    World out;
    for (std::size_t i = 0; i < s1.size(); ++i) {
        out = out.with(*target.index_of(s1.atom(i)), w1.holds(i));
    }
    for (std::size_t i = 0; i < s2.size(); ++i) {
        out = out.with(*target.index_of(s2.atom(i)), w2.holds(i));
    }
    return out;
}

World marginalize(World w, const Signature& from, const Signature& sub) {
    World out;
    for (std::size_t i = 0; i < sub.size(); ++i) {
        auto idx = from.index_of(sub.atom(i));
        if (!idx) throw SignatureError("marginalize: '" + sub.atom(i) + "' is not in the signature");
        out = out.with(i, w.holds(*idx));
    }
    return out;
}

std::string to_string(World w, const Signature& sig) {
    std::string s;
    for (std::size_t i = 0; i < sig.size(); ++i) {
        if (!w.holds(i)) s += '!';
        s += sig.atom(i);
    }
    return s;
}

}  // namespace condw
