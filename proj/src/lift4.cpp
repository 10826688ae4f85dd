#include "lift4.hpp"

#include "errors.hpp"

namespace hp {

int64_t find_mid(const Strand& s) {
    auto occ = find_occurrences(s, Strand::parse(Alphabet::binary(), "1100"));
    if (occ.empty()) throw MidNotFound("strand has no 1100 center");
    if (occ.size() > 1) throw MidNotUnique("strand has more than one 1100 occurrence");
    return occ[0] + 1;  // pattern sits at s[mid-1 .. mid+2]
}

LiftResult lift(const Strand& s) {
    const int64_t mid = find_mid(s);
    const Alphabet& q = Alphabet::quad();
    const Symbol two = q.from_char('2');
    std::vector<Symbol> out;
    out.reserve(static_cast<size_t>(2 * s.size()));
    for (int64_t i = 1; i <= s.size(); ++i) {
        if (i <= mid) {
            out.push_back(two);
            out.push_back(s.at(i));
        } else {
            out.push_back(s.at(i));
            out.push_back(q.inv(two));
        }
    }
    return {Strand(q, std::move(out)), mid};
}

}  // namespace hp
