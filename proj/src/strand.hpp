#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace hp {

using Symbol = uint8_t;

/// Alphabet equipped with a fixed-point-free involution. Symbols are small
/// integer ids; the involution is a lookup table. Instances are process-wide
/// singletons compared by address.
class Alphabet {
public:
    /// {0,1} with inv(s) = 1-s.
    static const Alphabet& binary();
    /// {0,1,2,2'} with inv(0)=1, inv(2)=2'. Symbol 2' prints as '3'.
    static const Alphabet& quad();

    int size() const { return static_cast<int>(chars_.size()); }
    Symbol inv(Symbol s) const { return inv_[s]; }
    char to_char(Symbol s) const { return chars_[s]; }
    Symbol from_char(char c) const;
    const std::string& name() const { return name_; }

    Alphabet(const Alphabet&) = delete;
    Alphabet& operator=(const Alphabet&) = delete;

private:
    Alphabet(std::string name, std::string chars, std::array<Symbol, 4> inv);

    std::string name_;
    std::string chars_;
    std::array<Symbol, 4> inv_;
};

/// Immutable sequence of symbols over an involution alphabet.
/// All index contracts are 1-based, inclusive.
class Strand {
public:
    Strand() : alpha_(&Alphabet::binary()) {}
    Strand(const Alphabet& a, std::vector<Symbol> data);

    static Strand parse(const Alphabet& a, std::string_view text);

    const Alphabet& alphabet() const { return *alpha_; }
    int64_t size() const { return static_cast<int64_t>(data_.size()); }
    bool empty() const { return data_.empty(); }

    /// 1-based access.
    Symbol at(int64_t k) const { return data_[static_cast<size_t>(k - 1)]; }
    Symbol inv_at(int64_t k) const { return alpha_->inv(at(k)); }

    /// 1-based inclusive substring copy.
    Strand substr(int64_t i, int64_t j) const;

    Strand operator+(const Strand& rhs) const;
    Strand repeat(int64_t k) const;
    bool operator==(const Strand& rhs) const {
        return alpha_ == rhs.alpha_ && data_ == rhs.data_;
    }

    std::string text() const;
    const std::vector<Symbol>& raw() const { return data_; }

private:
    const Alphabet* alpha_;
    std::vector<Symbol> data_;
};

Strand complement(const Strand& s);
Strand reverse_complement(const Strand& s);
int64_t count_symbol(const Strand& s, Symbol sigma);

/// All 1-based start indices of needle in haystack, ascending.
std::vector<int64_t> find_occurrences(const Strand& haystack, const Strand& needle);

}  // namespace hp
