#include "strand.hpp"

#include <algorithm>

namespace hp {

Alphabet::Alphabet(std::string name, std::string chars, std::array<Symbol, 4> inv)
    : name_(std::move(name)), chars_(std::move(chars)), inv_(inv) {}

const Alphabet& Alphabet::binary() {
    static const Alphabet a("binary", "01", {1, 0, 0, 0});
    return a;
}

const Alphabet& Alphabet::quad() {
    static const Alphabet a("quad", "0123", {1, 0, 3, 2});
    return a;
}

Symbol Alphabet::from_char(char c) const {
    auto pos = chars_.find(c);
    if (pos == std::string::npos)
        throw ParseError("symbol '" + std::string(1, c) + "' not in alphabet " + name_);
    return static_cast<Symbol>(pos);
}

Strand::Strand(const Alphabet& a, std::vector<Symbol> data)
    : alpha_(&a), data_(std::move(data)) {
    for (Symbol s : data_)
        if (s >= a.size()) throw ParseError("symbol id out of range for alphabet " + a.name());
}

Strand Strand::parse(const Alphabet& a, std::string_view text) {
    std::vector<Symbol> data;
    data.reserve(text.size());
    for (char c : text) data.push_back(a.from_char(c));
    return Strand(a, std::move(data));
}

Strand Strand::substr(int64_t i, int64_t j) const {
    if (i < 1 || j > size() || i > j + 1)
        throw ParseError("substring indices out of range");
    return Strand(*alpha_, std::vector<Symbol>(data_.begin() + (i - 1), data_.begin() + j));
}

Strand Strand::operator+(const Strand& rhs) const {
    std::vector<Symbol> out = data_;
    out.insert(out.end(), rhs.data_.begin(), rhs.data_.end());
    return Strand(*alpha_, std::move(out));
}

Strand Strand::repeat(int64_t k) const {
    std::vector<Symbol> out;
    out.reserve(data_.size() * static_cast<size_t>(k));
    for (int64_t r = 0; r < k; ++r) out.insert(out.end(), data_.begin(), data_.end());
    return Strand(*alpha_, std::move(out));
}

std::string Strand::text() const {
    std::string out;
    out.reserve(data_.size());
    for (Symbol s : data_) out.push_back(alpha_->to_char(s));
    return out;
}

Strand complement(const Strand& s) {
    std::vector<Symbol> out;
    out.reserve(s.raw().size());
    for (Symbol c : s.raw()) out.push_back(s.alphabet().inv(c));
    return Strand(s.alphabet(), std::move(out));
}

Strand reverse_complement(const Strand& s) {
    std::vector<Symbol> out;
    out.reserve(s.raw().size());
    for (auto it = s.raw().rbegin(); it != s.raw().rend(); ++it)
        out.push_back(s.alphabet().inv(*it));
    return Strand(s.alphabet(), std::move(out));
}

int64_t count_symbol(const Strand& s, Symbol sigma) {
    return std::count(s.raw().begin(), s.raw().end(), sigma);
}

std::vector<int64_t> find_occurrences(const Strand& haystack, const Strand& needle) {
    std::vector<int64_t> out;
    int64_t n = haystack.size(), m = needle.size();
    if (m == 0) {
        for (int64_t i = 1; i <= n + 1; ++i) out.push_back(i);
        return out;
    }
    for (int64_t i = 1; i + m - 1 <= n; ++i) {
        bool ok = true;
        for (int64_t k = 0; k < m; ++k)
            if (haystack.at(i + k) != needle.at(1 + k)) { ok = false; break; }
        if (ok) out.push_back(i);
    }
    return out;
}

}  // namespace hp
